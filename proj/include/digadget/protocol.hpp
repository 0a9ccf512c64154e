#pragma once

#include "digadget/algorithms.hpp"
#include "digadget/bit_string.hpp"
#include "digadget/gadgets.hpp"
#include "digadget/stream.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace digadget {

// One-way INDEX protocol simulated through a streaming algorithm. Alice sees
// only x, Bob sees only (m, i) and Alice's message; the signatures enforce it.

struct StreamSetup {
    StreamOrder order = StreamOrder::Canonical;
    std::uint64_t order_seed = 0;
};

/// Alice builds E1 from x, streams it, and sends the resulting state.
BitString alice_message(StreamingAlgorithm& alg, Property property, const BitVector& x,
                        StreamSetup setup, std::uint64_t coin_seed);

/// Bob restores Alice's state, streams E2 for (m, i), and returns decide().
bool bob_run(StreamingAlgorithm& alg, Property property, const BitString& message,
             std::size_t m, std::size_t i, StreamSetup setup, std::uint64_t coin_seed);

/// bob_run mapped to the INDEX answer: the bit Bob claims x_i to be.
bool bob_decide(StreamingAlgorithm& alg, Property property, const BitString& message,
                std::size_t m, std::size_t i, StreamSetup setup, std::uint64_t coin_seed);

struct TrialResult {
    Property property = Property::Acyclicity;
    std::size_t m = 0;
    std::size_t i = 0;
    std::size_t message_bits = 0;
    bool decision = false;
    bool truth = false;
    bool correct = false;
};

struct TrialCoins {
    std::uint64_t alice = 0;
    std::uint64_t bob = 0;
};

/// Full Alice -> Bob round on one instance, with fresh algorithm objects from `make`.
using AlgorithmFactory = std::function<std::unique_ptr<StreamingAlgorithm>(std::size_t budget_bits)>;

TrialResult run_trial(const AlgorithmFactory& make, std::size_t budget_bits, Property property,
                      const IndexInstance& inst, StreamSetup setup, TrialCoins coins);

struct Mismatch {
    std::string x;
    std::size_t i = 0;
    bool oracle = false;
    bool truth = false;
    bool protocol_bit = false;
};

struct VerifyReport {
    Property property = Property::Acyclicity;
    std::size_t m = 0;
    std::size_t cases = 0;
    std::size_t oracle_mismatches = 0;
    std::size_t protocol_mismatches = 0;
    std::vector<Mismatch> mismatches; // first kMaxListed only

    static constexpr std::size_t kMaxListed = 32;

    bool ok() const noexcept { return oracle_mismatches == 0 && protocol_mismatches == 0; }
};

inline constexpr std::size_t kMaxExhaustiveM = 14;

/// Every x in {0,1}^m and every i < m: checks the oracle on the built gadget
/// against x_i and runs the full-store protocol. Throws InvalidArgument for m
/// outside [1, kMaxExhaustiveM].
VerifyReport exhaustive_verify(Property property, std::size_t m, StreamSetup setup = {});

std::string format_report(const VerifyReport& report);

enum class CoinMode { Shared, Private };

struct SuccessEstimate {
    std::size_t trials = 0;
    std::size_t successes = 0;
    double rate = 0.0;
    double ci95_halfwidth = 0.0;
    std::size_t memory_budget_bits = 0;
    double epsilon_hat = 0.0;
    std::size_t min_message_bits = 0;
    std::size_t max_message_bits = 0;
    std::size_t budget_violations = 0;
};

struct EstimateOptions {
    CoinMode coins = CoinMode::Shared;
    StreamOrder order = StreamOrder::Shuffled;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Monte Carlo over uniform (x, i) and coins. Trial t draws everything from
/// derive_seed(master_seed, t), so the result does not depend on threading.
SuccessEstimate estimate_success(const AlgorithmFactory& make, Property property, std::size_t m,
                                 std::size_t budget_bits, std::size_t trials,
                                 std::uint64_t master_seed, EstimateOptions options = {});

/// Factory for the built-in kinds.
AlgorithmFactory factory_for(AlgorithmKind kind);

} // namespace digadget
