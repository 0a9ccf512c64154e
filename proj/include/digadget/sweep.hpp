#pragma once

#include "digadget/gadgets.hpp"
#include "digadget/protocol.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

namespace digadget {

struct SweepRecord {
    Property property = Property::Acyclicity;
    std::size_t m = 0;
    std::size_t budget_bits = 0;
    std::size_t trials = 0;
    std::size_t successes = 0;
    double rate = 0.0;
    double ci95 = 0.0;
    double epsilon_hat = 0.0;
    std::size_t max_message_bits = 0;
    std::uint64_t seed = 0;
};

inline constexpr std::string_view kSweepHeader =
    "property,m,budget_bits,trials,successes,rate,ci95,epsilon_hat,max_message_bits,seed";

/// Minimum trials accepted by run_sweep.
inline constexpr std::size_t kMinSweepTrials = 100;

/// Sampled-index success estimate for each budget, all from the same master seed.
std::vector<SweepRecord> run_sweep(Property property, std::size_t m,
                                   std::span<const std::size_t> budgets, std::size_t trials,
                                   std::uint64_t seed, EstimateOptions options = {});

std::string format_sweep_row(const SweepRecord& record);

/// Header plus one row per record, newline-terminated.
std::string render_sweep_csv(std::span<const SweepRecord> records);

} // namespace digadget
