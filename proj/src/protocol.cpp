#include "digadget/protocol.hpp"

#include "digadget/errors.hpp"
#include "digadget/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <sstream>
#include <thread>

namespace digadget {

BitString alice_message(StreamingAlgorithm& alg, Property property, const BitVector& x,
                        StreamSetup setup, std::uint64_t coin_seed)
{
    const PublicParams params = public_params(property, x.size(), coin_seed);
    std::vector<Edge> e1 = build_e1(x);
    order_segment(e1, setup.order, first_segment_seed(setup.order_seed));

    alg.begin(params);
    for (const Edge& e : e1)
        alg.absorb(e);
    return alg.snapshot();
}

bool bob_run(StreamingAlgorithm& alg, Property property, const BitString& message,
             std::size_t m, std::size_t i, StreamSetup setup, std::uint64_t coin_seed)
{
    const PublicParams params = public_params(property, m, coin_seed);
    std::vector<Edge> e2 = build_e2(property, derive_params(m, i));
    order_segment(e2, setup.order, second_segment_seed(setup.order_seed));

    alg.restore(params, message);
    for (const Edge& e : e2)
        alg.absorb(e);
    return alg.decide();
}

bool bob_decide(StreamingAlgorithm& alg, Property property, const BitString& message,
                std::size_t m, std::size_t i, StreamSetup setup, std::uint64_t coin_seed)
{
    return bit_for_decision(property, bob_run(alg, property, message, m, i, setup, coin_seed));
}

TrialResult run_trial(const AlgorithmFactory& make, std::size_t budget_bits, Property property,
                      const IndexInstance& inst, StreamSetup setup, TrialCoins coins)
{
    const std::size_t m = inst.x.size();

    auto alice = make(budget_bits);
    const BitString message = alice_message(*alice, property, inst.x, setup, coins.alice);

    auto bob = make(budget_bits);
    TrialResult r;
    r.property = property;
    r.m = m;
    r.i = inst.i;
    r.message_bits = message.size();
    r.decision = bob_run(*bob, property, message, m, inst.i, setup, coins.bob);
    r.truth = ground_truth(property, inst);
    r.correct = r.decision == r.truth;
    return r;
}

VerifyReport exhaustive_verify(Property property, std::size_t m, StreamSetup setup)
{
    if (m == 0 || m > kMaxExhaustiveM)
        throw InvalidArgument("exhaustive verification needs 1 <= m <= "
                              + std::to_string(kMaxExhaustiveM));

    VerifyReport report;
    report.property = property;
    report.m = m;

    FullStore alice;
    FullStore bob;
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<bool> bits(m);
        for (std::size_t p = 0; p < m; ++p)
            bits[p] = ((mask >> p) & 1U) != 0;
        const BitVector x(std::move(bits));
        // Alice never sees i, so one message serves every i.
        const BitString message = alice_message(alice, property, x, setup, 0);

        for (std::size_t i = 0; i < m; ++i) {
            const IndexInstance inst = IndexInstance::make(x, i);
            const GadgetInstance g = build_instance(property, inst);
            const bool oracle = evaluate_property(property, g.graph(), g.s);
            const bool truth = ground_truth(property, inst);
            const bool claimed = bob_decide(bob, property, message, m, i, setup, 0);

            ++report.cases;
            const bool oracle_bad = oracle != truth;
            const bool protocol_bad = claimed != inst.target_bit();
            report.oracle_mismatches += oracle_bad ? 1 : 0;
            report.protocol_mismatches += protocol_bad ? 1 : 0;
            if ((oracle_bad || protocol_bad) && report.mismatches.size() < VerifyReport::kMaxListed)
                report.mismatches.push_back({x.to_string(), i, oracle, truth, claimed});
        }
    }
    return report;
}

std::string format_report(const VerifyReport& r)
{
    std::ostringstream out;
    out << "verify " << property_name(r.property) << " m=" << r.m << ": cases=" << r.cases
        << " oracle_mismatches=" << r.oracle_mismatches
        << " protocol_mismatches=" << r.protocol_mismatches << '\n';
    for (const Mismatch& mm : r.mismatches)
        out << "  mismatch x=" << mm.x << " i=" << mm.i << " oracle=" << mm.oracle
            << " truth=" << mm.truth << " protocol_bit=" << mm.protocol_bit << '\n';
    out << (r.ok() ? "OK" : "FAILED") << '\n';
    return out.str();
}

namespace {

struct Tally {
    std::size_t successes = 0;
    std::size_t min_message_bits = SIZE_MAX;
    std::size_t max_message_bits = 0;
    std::size_t budget_violations = 0;
};

Tally run_trials(const AlgorithmFactory& make, Property property, std::size_t m,
                 std::size_t budget_bits, std::size_t first, std::size_t last,
                 std::uint64_t master_seed, const EstimateOptions& options)
{
    Tally tally;
    for (std::size_t t = first; t < last; ++t) {
        Rng rng(derive_seed(master_seed, t));
        std::vector<bool> bits(m);
        for (std::size_t p = 0; p < m; ++p)
            bits[p] = rng.coin();
        const std::size_t i = rng.below(m);
        const StreamSetup setup{options.order, rng.next()};
        TrialCoins coins;
        coins.alice = rng.next();
        coins.bob = options.coins == CoinMode::Shared ? coins.alice : rng.next();

        const TrialResult r = run_trial(make, budget_bits, property,
                                        IndexInstance::make(BitVector(std::move(bits)), i), setup, coins);
        tally.successes += r.correct ? 1 : 0;
        tally.min_message_bits = std::min(tally.min_message_bits, r.message_bits);
        tally.max_message_bits = std::max(tally.max_message_bits, r.message_bits);
        tally.budget_violations += r.message_bits > budget_bits ? 1 : 0;
    }
    return tally;
}

} // namespace

SuccessEstimate estimate_success(const AlgorithmFactory& make, Property property, std::size_t m,
                                 std::size_t budget_bits, std::size_t trials,
                                 std::uint64_t master_seed, EstimateOptions options)
{
    if (trials == 0)
        throw InvalidArgument("at least one trial is required");
    if (m == 0)
        throw InvalidArgument("m must be at least 1");

    unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, trials));

    std::vector<Tally> partial(threads);
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < threads; ++w) {
            const std::size_t first = trials * w / threads;
            const std::size_t last = trials * (w + 1) / threads;
            workers.emplace_back([&, w, first, last] {
                try {
                    partial[w] = run_trials(make, property, m, budget_bits, first, last, master_seed, options);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    SuccessEstimate est;
    est.trials = trials;
    est.memory_budget_bits = budget_bits;
    est.min_message_bits = SIZE_MAX;
    for (const Tally& t : partial) {
        est.min_message_bits = std::min(est.min_message_bits, t.min_message_bits);
        est.successes += t.successes;
        est.max_message_bits = std::max(est.max_message_bits, t.max_message_bits);
        est.budget_violations += t.budget_violations;
    }
    est.rate = static_cast<double>(est.successes) / static_cast<double>(trials);
    est.ci95_halfwidth = 1.96 * std::sqrt(est.rate * (1.0 - est.rate) / static_cast<double>(trials));
    est.epsilon_hat = 2.0 * est.rate - 1.0;
    return est;
}

AlgorithmFactory factory_for(AlgorithmKind kind)
{
    return [kind](std::size_t budget_bits) { return make_algorithm(kind, budget_bits); };
}

} // namespace digadget
