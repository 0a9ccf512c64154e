#pragma once

#include "digadget/bit_string.hpp"
#include "digadget/graph.hpp"
#include "digadget/stream.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace digadget {

/// Stores every edge and answers with the exact oracle.
///
/// State: 32-bit edge count, then each edge as two endpoints of
/// index_width(vertex_count) bits.
class FullStore final : public StreamingAlgorithm {
public:
    static constexpr unsigned kCountBits = 32;

    void begin(const PublicParams& params) override;
    void absorb(Edge e) override;
    BitString snapshot() const override;
    void restore(const PublicParams& params, const BitString& state) override;
    bool decide() override;
    std::size_t state_bits() const override;

    std::span<const Edge> absorbed() const noexcept { return edges_; }

private:
    PublicParams params_;
    std::vector<Edge> edges_;
};

/// Public-coin INDEX algorithm with a budget of B bits. It records the grid
/// bits at min(B, m) positions drawn from rng_seed, infers Bob's cell (j, k)
/// from the shape of the E2 edges, and answers from the record or by a coin.
///
/// State: one bit per sampled position, in increasing position order. Once E2
/// edges have revealed j or k, a tail of (has_j, j, has_k, k) follows, each
/// index field index_width(n) bits wide. The tail is absent at the E1/E2
/// boundary, so the message is exactly min(B, m) bits.
class SampledIndex final : public StreamingAlgorithm {
public:
    explicit SampledIndex(std::size_t budget_bits) : budget_(budget_bits) {}

    void begin(const PublicParams& params) override;
    void absorb(Edge e) override;
    BitString snapshot() const override;
    void restore(const PublicParams& params, const BitString& state) override;
    bool decide() override;
    std::size_t state_bits() const override;

    std::size_t budget_bits() const noexcept { return budget_; }
    std::span<const std::size_t> sampled_positions() const noexcept { return positions_; }

    /// Recorded bit for a sampled position, nullopt if not sampled.
    std::optional<bool> recorded(std::size_t position) const;

    /// (j, k) once identifiable from the absorbed edges. For n = 1 both default to 0.
    std::optional<std::size_t> inferred_j() const;
    std::optional<std::size_t> inferred_k() const;

private:
    void resample();
    std::size_t tail_bits() const noexcept;
    void set_once(std::optional<std::size_t>& slot, std::size_t value, const char* what);

    std::size_t budget_;
    PublicParams params_;
    std::vector<std::size_t> positions_;
    std::vector<bool> bits_;
    std::optional<std::size_t> j_;
    std::optional<std::size_t> k_;
};

/// Zero-memory algorithm that ignores the stream.
class ConstantAnswer final : public StreamingAlgorithm {
public:
    explicit ConstantAnswer(bool answer) : answer_(answer) {}

    void begin(const PublicParams&) override {}
    void absorb(Edge) override {}
    BitString snapshot() const override { return {}; }
    void restore(const PublicParams& params, const BitString& state) override;
    bool decide() override { return answer_; }
    std::size_t state_bits() const override { return 0; }

private:
    bool answer_;
};

/// Disjoint-set forest with union by rank and path halving.
class UnionFind {
public:
    explicit UnionFind(std::size_t n = 0);

    std::size_t size() const noexcept { return parent_.size(); }
    VertexId find(VertexId v);

    /// Returns true if a and b were in different sets.
    bool unite(VertexId a, VertexId b);

    std::size_t components() const noexcept { return components_; }

    std::span<const VertexId> parents() const noexcept { return parent_; }
    std::span<const std::uint8_t> ranks() const noexcept { return rank_; }

    /// Rebuilds from raw arrays. Throws MalformedMessage if they do not form a forest.
    static UnionFind from_arrays(std::vector<VertexId> parent, std::vector<std::uint8_t> rank);

private:
    std::vector<VertexId> parent_;
    std::vector<std::uint8_t> rank_;
    std::size_t components_ = 0;
};

/// Undirected connectivity over an edge stream (edge direction ignored), in
/// O(n log n) bits. decide() is true iff the graph has at most one component.
///
/// State: n parent ids of index_width(n) bits, then n ranks of
/// index_width(index_width(n) + 1) bits.
class UnionFindConnectivity final : public StreamingAlgorithm {
public:
    void begin(const PublicParams& params) override;
    void absorb(Edge e) override;
    BitString snapshot() const override;
    void restore(const PublicParams& params, const BitString& state) override;
    bool decide() override { return forest_.components() <= 1; }
    std::size_t state_bits() const override;

    std::size_t components() const noexcept { return forest_.components(); }

private:
    std::size_t n_ = 0;
    UnionFind forest_;
};

/// Exact component count of the undirected graph underlying `edges`.
std::size_t union_find_components(std::size_t n, std::span<const Edge> edges);

enum class AlgorithmKind { FullStore, SampledIndex, ConstantTrue, ConstantFalse };

std::unique_ptr<StreamingAlgorithm> make_algorithm(AlgorithmKind kind, std::size_t budget_bits = 0);

} // namespace digadget
