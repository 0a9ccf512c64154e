#include "digadget/sweep.hpp"

#include "digadget/errors.hpp"

#include <iomanip>
#include <sstream>

namespace digadget {

std::vector<SweepRecord> run_sweep(Property property, std::size_t m,
                                   std::span<const std::size_t> budgets, std::size_t trials,
                                   std::uint64_t seed, EstimateOptions options)
{
    if (trials < kMinSweepTrials)
        throw InvalidArgument("sweep needs at least " + std::to_string(kMinSweepTrials) + " trials");
    if (m == 0)
        throw InvalidArgument("m must be at least 1");

    const AlgorithmFactory make = factory_for(AlgorithmKind::SampledIndex);
    std::vector<SweepRecord> records;
    records.reserve(budgets.size());
    for (std::size_t budget : budgets) {
        const SuccessEstimate est = estimate_success(make, property, m, budget, trials, seed, options);
        SweepRecord r;
        r.property = property;
        r.m = m;
        r.budget_bits = budget;
        r.trials = est.trials;
        r.successes = est.successes;
        r.rate = est.rate;
        r.ci95 = est.ci95_halfwidth;
        r.epsilon_hat = est.epsilon_hat;
        r.max_message_bits = est.max_message_bits;
        r.seed = seed;
        records.push_back(r);
    }
    return records;
}

std::string format_sweep_row(const SweepRecord& r)
{
    std::ostringstream out;
    out << property_name(r.property) << ',' << r.m << ',' << r.budget_bits << ',' << r.trials << ','
        << r.successes << ',' << std::fixed << std::setprecision(6) << r.rate << ',' << r.ci95 << ','
        << r.epsilon_hat << ',' << r.max_message_bits << ',' << r.seed;
    return out.str();
}

std::string render_sweep_csv(std::span<const SweepRecord> records)
{
    std::string out(kSweepHeader);
    out += '\n';
    for (const SweepRecord& r : records) {
        out += format_sweep_row(r);
        out += '\n';
    }
    return out;
}

} // namespace digadget
