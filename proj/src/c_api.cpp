#include "digadget/digadget.h"

#include "digadget/algorithms.hpp"
#include "digadget/errors.hpp"
#include "digadget/gadgets.hpp"
#include "digadget/instance_file.hpp"
#include "digadget/protocol.hpp"
#include "digadget/sweep.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

struct dg_instance {
    digadget::GadgetInstance value;
};

struct dg_algorithm {
    std::unique_ptr<digadget::StreamingAlgorithm> impl;
};

struct dg_message {
    digadget::BitString bits;
};

namespace {

thread_local std::string g_last_error;

dg_status fail(dg_status status, std::string message)
{
    g_last_error = std::move(message);
    return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
dg_status guarded(F&& body) noexcept
{
    try {
        body();
        g_last_error.clear();
        return DG_OK;
    } catch (const digadget::ParseError& e) {
        return fail(DG_ERR_PARSE, e.what());
    } catch (const digadget::MalformedMessage& e) {
        return fail(DG_ERR_MALFORMED_MESSAGE, e.what());
    } catch (const digadget::ContractViolation& e) {
        return fail(DG_ERR_CONTRACT, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(DG_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(DG_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(DG_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(DG_ERR_INTERNAL, "unknown error");
    }
}

void require(bool ok, const char* what)
{
    if (!ok)
        throw digadget::InvalidArgument(what);
}

char* copy_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

digadget::Property to_property(dg_property p)
{
    switch (p) {
    case DG_ACYCLICITY:
        return digadget::Property::Acyclicity;
    case DG_STRONG_CONNECTIVITY:
        return digadget::Property::StrongConnectivity;
    case DG_REACHABILITY_FROM_S:
        return digadget::Property::ReachabilityFromS;
    }
    throw digadget::InvalidArgument("unknown property");
}

dg_property from_property(digadget::Property p)
{
    switch (p) {
    case digadget::Property::Acyclicity:
        return DG_ACYCLICITY;
    case digadget::Property::StrongConnectivity:
        return DG_STRONG_CONNECTIVITY;
    case digadget::Property::ReachabilityFromS:
        return DG_REACHABILITY_FROM_S;
    }
    return DG_ACYCLICITY;
}

digadget::StreamOrder to_order(dg_order o)
{
    switch (o) {
    case DG_ORDER_CANONICAL:
        return digadget::StreamOrder::Canonical;
    case DG_ORDER_SHUFFLED:
        return digadget::StreamOrder::Shuffled;
    }
    throw digadget::InvalidArgument("unknown stream order");
}

digadget::AlgorithmKind to_kind(dg_algorithm_kind k)
{
    switch (k) {
    case DG_ALG_FULL_STORE:
        return digadget::AlgorithmKind::FullStore;
    case DG_ALG_SAMPLED_INDEX:
        return digadget::AlgorithmKind::SampledIndex;
    case DG_ALG_CONSTANT_TRUE:
        return digadget::AlgorithmKind::ConstantTrue;
    case DG_ALG_CONSTANT_FALSE:
        return digadget::AlgorithmKind::ConstantFalse;
    }
    throw digadget::InvalidArgument("unknown algorithm kind");
}

digadget::EstimateOptions to_options(dg_coins coins, dg_order order)
{
    digadget::EstimateOptions options;
    require(coins == DG_COINS_SHARED || coins == DG_COINS_PRIVATE, "unknown coin mode");
    options.coins = coins == DG_COINS_SHARED ? digadget::CoinMode::Shared : digadget::CoinMode::Private;
    options.order = to_order(order);
    return options;
}

} // namespace

extern "C" {

const char* dg_last_error(void) { return g_last_error.c_str(); }

const char* dg_status_string(dg_status status)
{
    switch (status) {
    case DG_OK:
        return "ok";
    case DG_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case DG_ERR_PARSE:
        return "parse error";
    case DG_ERR_MALFORMED_MESSAGE:
        return "malformed message";
    case DG_ERR_CONTRACT:
        return "contract violation";
    case DG_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

void dg_string_free(char* s) { std::free(s); }

dg_status dg_property_parse(const char* name, dg_property* out)
{
    return guarded([&] {
        require(name != nullptr && out != nullptr, "null argument");
        const auto p = digadget::parse_property(name);
        if (!p)
            throw digadget::InvalidArgument(std::string("unknown property '") + name
                                            + "' (expected acyc, sc or reach)");
        *out = from_property(*p);
    });
}

const char* dg_property_name(dg_property property)
{
    switch (property) {
    case DG_ACYCLICITY:
        return "acyc";
    case DG_STRONG_CONNECTIVITY:
        return "sc";
    case DG_REACHABILITY_FROM_S:
        return "reach";
    }
    return "?";
}

dg_status dg_instance_build(dg_property property, const char* bits, size_t i, dg_instance** out)
{
    return guarded([&] {
        require(bits != nullptr && out != nullptr, "null argument");
        const auto inst = digadget::IndexInstance::make(digadget::BitVector::parse(bits), i);
        *out = new dg_instance{digadget::build_instance(to_property(property), inst)};
    });
}

dg_status dg_instance_build_random(dg_property property, size_t m, size_t i, uint64_t seed,
                                   dg_instance** out)
{
    return guarded([&] {
        require(out != nullptr, "null argument");
        require(m >= 1, "m must be at least 1");
        const auto inst = digadget::IndexInstance::make(digadget::BitVector::random(m, seed), i);
        *out = new dg_instance{digadget::build_instance(to_property(property), inst)};
    });
}

dg_status dg_instance_parse(const char* text, dg_instance** out)
{
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = new dg_instance{digadget::parse_instance(text)};
    });
}

dg_status dg_instance_render(const dg_instance* inst, dg_order order, uint64_t seed, char** out_text)
{
    return guarded([&] {
        require(inst != nullptr && out_text != nullptr, "null argument");
        *out_text = copy_string(digadget::render_instance(inst->value, to_order(order), seed));
    });
}

dg_status dg_instance_info_get(const dg_instance* inst, dg_instance_info* out)
{
    return guarded([&] {
        require(inst != nullptr && out != nullptr, "null argument");
        const auto& g = inst->value;
        *out = dg_instance_info{};
        out->property = from_property(g.property);
        out->m = g.m;
        out->n = g.params.n;
        out->i = g.i;
        out->j = g.params.j;
        out->k = g.params.k;
        out->vertex_count = g.vertex_count;
        out->has_s = g.s.has_value() ? 1 : 0;
        out->s = g.s.value_or(0);
        out->e1_count = g.e1.size();
        out->e2_count = g.e2.size();
    });
}

dg_status dg_instance_check(const dg_instance* inst, int* out_value)
{
    return guarded([&] {
        require(inst != nullptr && out_value != nullptr, "null argument");
        const auto& g = inst->value;
        *out_value = digadget::evaluate_property(g.property, g.graph(), g.s) ? 1 : 0;
    });
}

dg_status dg_instance_ground_truth(const dg_instance* inst, int* out_value)
{
    return guarded([&] {
        require(inst != nullptr && out_value != nullptr, "null argument");
        const auto& g = inst->value;
        *out_value = digadget::truth_for_bit(g.property, g.encoded_bit()) ? 1 : 0;
    });
}

dg_status dg_instance_equal(const dg_instance* a, const dg_instance* b, int* out_equal)
{
    return guarded([&] {
        require(a != nullptr && b != nullptr && out_equal != nullptr, "null argument");
        *out_equal = a->value == b->value ? 1 : 0;
    });
}

void dg_instance_free(dg_instance* inst) { delete inst; }

dg_status dg_verify(dg_property property, size_t m, dg_order order, uint64_t order_seed,
                    dg_verify_result* out, char** report_text)
{
    return guarded([&] {
        require(out != nullptr, "null argument");
        const auto report = digadget::exhaustive_verify(to_property(property), m,
                                                        {to_order(order), order_seed});
        out->cases = report.cases;
        out->oracle_mismatches = report.oracle_mismatches;
        out->protocol_mismatches = report.protocol_mismatches;
        if (report_text != nullptr)
            *report_text = copy_string(digadget::format_report(report));
    });
}

dg_status dg_algorithm_create(dg_algorithm_kind kind, size_t budget_bits, dg_algorithm** out)
{
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = new dg_algorithm{digadget::make_algorithm(to_kind(kind), budget_bits)};
    });
}

void dg_algorithm_free(dg_algorithm* alg) { delete alg; }

dg_status dg_alice_message(dg_algorithm* alg, dg_property property, const char* bits, dg_order order,
                           uint64_t order_seed, uint64_t coin_seed, dg_message** out)
{
    return guarded([&] {
        require(alg != nullptr && bits != nullptr && out != nullptr, "null argument");
        const auto x = digadget::BitVector::parse(bits);
        auto msg = digadget::alice_message(*alg->impl, to_property(property), x,
                                           {to_order(order), order_seed}, coin_seed);
        *out = new dg_message{std::move(msg)};
    });
}

dg_status dg_bob_decide(dg_algorithm* alg, dg_property property, const dg_message* message, size_t m,
                        size_t i, dg_order order, uint64_t order_seed, uint64_t coin_seed, int* out_bit)
{
    return guarded([&] {
        require(alg != nullptr && message != nullptr && out_bit != nullptr, "null argument");
        *out_bit = digadget::bob_decide(*alg->impl, to_property(property), message->bits, m, i,
                                        {to_order(order), order_seed}, coin_seed)
                       ? 1
                       : 0;
    });
}

dg_status dg_message_from_bits(const char* bits, dg_message** out)
{
    return guarded([&] {
        require(bits != nullptr && out != nullptr, "null argument");
        *out = new dg_message{digadget::BitString::from_string(bits)};
    });
}

size_t dg_message_bits(const dg_message* message) { return message ? message->bits.size() : 0; }

dg_status dg_message_to_string(const dg_message* message, char** out_text)
{
    return guarded([&] {
        require(message != nullptr && out_text != nullptr, "null argument");
        *out_text = copy_string(message->bits.to_string());
    });
}

void dg_message_free(dg_message* message) { delete message; }

dg_status dg_estimate_success(dg_algorithm_kind kind, dg_property property, size_t m, size_t budget_bits,
                              size_t trials, uint64_t seed, dg_coins coins, dg_order order,
                              dg_success_estimate* out)
{
    return guarded([&] {
        require(out != nullptr, "null argument");
        const auto est = digadget::estimate_success(digadget::factory_for(to_kind(kind)), to_property(property),
                                                    m, budget_bits, trials, seed, to_options(coins, order));
        out->trials = est.trials;
        out->successes = est.successes;
        out->rate = est.rate;
        out->ci95_halfwidth = est.ci95_halfwidth;
        out->memory_budget_bits = est.memory_budget_bits;
        out->epsilon_hat = est.epsilon_hat;
        out->max_message_bits = est.max_message_bits;
        out->budget_violations = est.budget_violations;
    });
}

dg_status dg_sweep_csv(dg_property property, size_t m, const size_t* budgets, size_t count, size_t trials,
                       uint64_t seed, dg_coins coins, dg_order order, char** out_csv)
{
    return guarded([&] {
        require(out_csv != nullptr && (budgets != nullptr || count == 0), "null argument");
        const std::vector<size_t> list(budgets, budgets + count);
        const auto records = digadget::run_sweep(to_property(property), m, list, trials, seed,
                                                 to_options(coins, order));
        *out_csv = copy_string(digadget::render_sweep_csv(records));
    });
}

dg_status dg_union_find_components(size_t n, const uint32_t* pairs, size_t edge_count, size_t* out)
{
    return guarded([&] {
        require(out != nullptr && (pairs != nullptr || edge_count == 0), "null argument");
        std::vector<digadget::Edge> edges;
        edges.reserve(edge_count);
        for (size_t t = 0; t < edge_count; ++t)
            edges.push_back({pairs[2 * t], pairs[2 * t + 1]});
        *out = digadget::union_find_components(n, edges);
    });
}

} // extern "C"
