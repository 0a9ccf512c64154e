// digadget: generate, check and verify INDEX-reduction gadget graphs, and
// sweep streaming memory budgets against protocol success.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.

#include "digadget/digadget.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

int report_failure(dg_status status, const std::string& context)
{
    std::cerr << "digadget: " << context << ": " << dg_last_error() << " (" << dg_status_string(status)
              << ")\n";
    return kExitUsage;
}

bool write_output(const std::string& path, const char* text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return static_cast<bool>(std::cout);
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    return static_cast<bool>(out);
}

std::vector<size_t> parse_budgets(const std::string& text)
{
    std::vector<size_t> budgets;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        std::size_t used = 0;
        const unsigned long long v = std::stoull(item, &used);
        if (used != item.size())
            throw std::invalid_argument(item);
        budgets.push_back(static_cast<size_t>(v));
    }
    return budgets;
}

struct Common {
    std::string property;
    std::string order = "canonical";
    std::uint64_t seed = 0;
    std::string out;
};

dg_property property_or_throw(const std::string& name)
{
    dg_property p;
    if (dg_property_parse(name.c_str(), &p) != DG_OK)
        throw CLI::ValidationError("--property", dg_last_error());
    return p;
}

dg_order order_of(const std::string& name) { return name == "shuffled" ? DG_ORDER_SHUFFLED : DG_ORDER_CANONICAL; }

int cmd_gen(const Common& c, size_t m, size_t i, const std::string& bits)
{
    const dg_property property = property_or_throw(c.property);
    dg_instance* inst = nullptr;
    dg_status st;
    if (!bits.empty()) {
        if (bits.size() != m) {
            std::cerr << "digadget: --x has " << bits.size() << " bits but --m is " << m << '\n';
            return kExitUsage;
        }
        st = dg_instance_build(property, bits.c_str(), i, &inst);
    } else {
        st = dg_instance_build_random(property, m, i, c.seed, &inst);
    }
    if (st != DG_OK)
        return report_failure(st, "gen");

    char* text = nullptr;
    st = dg_instance_render(inst, order_of(c.order), c.seed, &text);
    dg_instance_free(inst);
    if (st != DG_OK)
        return report_failure(st, "gen");
    const bool ok = write_output(c.out, text);
    dg_string_free(text);
    if (!ok) {
        std::cerr << "digadget: cannot write " << c.out << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_verify(const Common& c, size_t m)
{
    dg_verify_result result;
    char* report = nullptr;
    const dg_status st = dg_verify(property_or_throw(c.property), m, order_of(c.order), c.seed, &result, &report);
    if (st != DG_OK)
        return report_failure(st, "verify");
    std::cout << report;
    dg_string_free(report);
    return result.oracle_mismatches == 0 && result.protocol_mismatches == 0 ? kExitOk : kExitMismatch;
}

int cmd_check(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            std::cerr << "digadget: cannot open " << path << '\n';
            return kExitUsage;
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
    }

    dg_instance* inst = nullptr;
    dg_status st = dg_instance_parse(text.c_str(), &inst);
    if (st != DG_OK)
        return report_failure(st, path);

    dg_instance_info info;
    int value = 0;
    st = dg_instance_info_get(inst, &info);
    if (st == DG_OK)
        st = dg_instance_check(inst, &value);
    dg_instance_free(inst);
    if (st != DG_OK)
        return report_failure(st, path);

    const char* label = info.property == DG_ACYCLICITY             ? "acyclic"
                        : info.property == DG_STRONG_CONNECTIVITY ? "strongly_connected"
                                                                  : "reaches_all";
    std::cout << label << ": " << (value ? "true" : "false") << '\n';
    return kExitOk;
}

int cmd_sweep(const Common& c, size_t m, const std::string& budget_text, size_t trials, const std::string& coins)
{
    std::vector<size_t> budgets;
    try {
        budgets = parse_budgets(budget_text);
    } catch (const std::exception&) {
        std::cerr << "digadget: --budgets must be a comma-separated list of non-negative integers\n";
        return kExitUsage;
    }
    char* csv = nullptr;
    const dg_status st = dg_sweep_csv(property_or_throw(c.property), m, budgets.data(), budgets.size(), trials,
                                      c.seed, coins == "private" ? DG_COINS_PRIVATE : DG_COINS_SHARED,
                                      order_of(c.order), &csv);
    if (st != DG_OK)
        return report_failure(st, "sweep");
    const bool ok = write_output(c.out, csv);
    dg_string_free(csv);
    if (!ok) {
        std::cerr << "digadget: cannot write " << c.out << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

void add_property(CLI::App* cmd, Common& c)
{
    cmd->add_option("--property", c.property, "acyc | sc | reach")
        ->required()
        ->check(CLI::IsMember({"acyc", "sc", "reach"}));
}

void add_order(CLI::App* cmd, Common& c)
{
    cmd->add_option("--order", c.order, "Edge order within each segment")
        ->check(CLI::IsMember({"canonical", "shuffled"}))
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"INDEX-reduction gadgets for one-pass digraph streaming lower bounds"};
    app.require_subcommand(1);

    Common gen_c, verify_c, sweep_c;
    size_t gen_m = 0, gen_i = 0, verify_m = 0, sweep_m = 0, trials = 0;
    std::string gen_x, check_path, budgets, coins = "shared";

    auto* gen = app.add_subcommand("gen", "Write a gadget instance file");
    add_property(gen, gen_c);
    gen->add_option("--m", gen_m, "Bit-vector length")->required()->check(CLI::PositiveNumber);
    gen->add_option("--i", gen_i, "Bob's 0-based index")->required();
    gen->add_option("--x", gen_x, "Explicit bit string of length m (random from --seed if absent)");
    gen->add_option("--seed", gen_c.seed, "Seed for random x and shuffling")->capture_default_str();
    add_order(gen, gen_c);
    gen->add_option("--out", gen_c.out, "Output path (stdout if absent)");

    auto* verify = app.add_subcommand("verify", "Exhaustively verify every (x, i) for m <= 14");
    add_property(verify, verify_c);
    verify->add_option("--m", verify_m, "Bit-vector length")->required()->check(CLI::Range(1, 14));
    verify->add_option("--seed", verify_c.seed, "Shuffle seed")->capture_default_str();
    add_order(verify, verify_c);

    auto* check = app.add_subcommand("check", "Evaluate the exact oracle on an instance file");
    check->add_option("file", check_path, "Instance file, or - for stdin")->required();

    auto* sweep = app.add_subcommand("sweep", "Sampled-index success rate per memory budget, as CSV");
    add_property(sweep, sweep_c);
    sweep->add_option("--m", sweep_m, "Bit-vector length")->required()->check(CLI::PositiveNumber);
    sweep->add_option("--budgets", budgets, "Comma-separated budgets in bits (may be empty)")->required();
    sweep->add_option("--trials", trials, "Trials per budget (>= 100)")->required()->check(CLI::Range(size_t{100}, SIZE_MAX));
    sweep->add_option("--seed", sweep_c.seed, "Master seed")->capture_default_str();
    sweep->add_option("--coins", coins, "Randomness shared by Alice and Bob, or private")
        ->check(CLI::IsMember({"shared", "private"}))
        ->capture_default_str();
    sweep_c.order = "shuffled";
    add_order(sweep, sweep_c);
    sweep->add_option("--out", sweep_c.out, "Output CSV path (stdout if absent)");

    try {
        app.parse(argc, argv);
        if (gen->parsed())
            return cmd_gen(gen_c, gen_m, gen_i, gen_x);
        if (verify->parsed())
            return cmd_verify(verify_c, verify_m);
        if (check->parsed())
            return cmd_check(check_path);
        if (sweep->parsed())
            return cmd_sweep(sweep_c, sweep_m, budgets, trials, coins);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    return kExitUsage;
}
