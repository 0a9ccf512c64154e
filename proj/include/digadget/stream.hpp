#pragma once

#include "digadget/bit_string.hpp"
#include "digadget/gadgets.hpp"
#include "digadget/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace digadget {

enum class StreamOrder { Canonical, Shuffled };

/// E1 edges in [0, boundary), E2 edges after.
struct EdgeStream {
    std::size_t vertex_count = 0;
    std::vector<Edge> edges;
    std::size_t boundary = 0;

    std::span<const Edge> first_segment() const { return std::span(edges).first(boundary); }
    std::span<const Edge> second_segment() const { return std::span(edges).subspan(boundary); }
};

/// Orders one segment in place. Canonical leaves the sorted order alone;
/// Shuffled applies a seeded uniform permutation.
void order_segment(std::vector<Edge>& edges, StreamOrder order, std::uint64_t seed);

/// Seeds for the two segments, so Alice and Bob can each reproduce their part
/// of make_stream() without seeing the other's edges.
std::uint64_t first_segment_seed(std::uint64_t seed) noexcept;
std::uint64_t second_segment_seed(std::uint64_t seed) noexcept;

EdgeStream make_stream(const GadgetInstance& instance, StreamOrder order, std::uint64_t seed);

/// Problem parameters both parties know. rng_seed is the algorithm's coin source.
struct PublicParams {
    std::size_t vertex_count = 0;
    std::size_t m = 0;
    std::size_t n = 0;
    Property property = Property::Acyclicity;
    std::uint64_t rng_seed = 0;
};

PublicParams public_params(Property property, std::size_t m, std::uint64_t rng_seed);

/// One-pass streaming algorithm with serializable state.
///
/// Contract: restoring from snapshot() and feeding the remaining edges must
/// give the same decide() as the uninterrupted run under the same rng_seed.
class StreamingAlgorithm {
public:
    virtual ~StreamingAlgorithm() = default;

    virtual void begin(const PublicParams& params) = 0;
    virtual void absorb(Edge e) = 0;
    virtual BitString snapshot() const = 0;
    virtual void restore(const PublicParams& params, const BitString& state) = 0;
    virtual bool decide() = 0;

    /// Length of snapshot() without building it. Overrides must agree exactly.
    virtual std::size_t state_bits() const { return snapshot().size(); }
};

struct MemoryProfile {
    std::size_t max_state_bits = 0;
    std::size_t boundary_state_bits = 0;
};

struct StreamRun {
    bool decision = false;
    MemoryProfile profile;
};

struct RunOptions {
    /// Snapshot, restore and re-snapshot at every checkpoint, throwing
    /// ContractViolation if the serialization does not round-trip. On by
    /// default in debug builds.
#ifdef NDEBUG
    bool verify_checkpoints = false;
#else
    bool verify_checkpoints = true;
#endif
};

/// begin, then absorb every edge once, measuring the state after begin and after
/// each edge; boundary_state_bits is taken after the last E1 edge.
StreamRun run_streaming(StreamingAlgorithm& alg, const EdgeStream& stream,
                        const PublicParams& params, RunOptions options = {});

} // namespace digadget
