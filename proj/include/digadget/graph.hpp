#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace digadget {

using VertexId = std::uint32_t;

struct Edge {
    VertexId from = 0;
    VertexId to = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable directed graph on vertices [0, vertex_count). Edges form a set:
/// duplicates are collapsed and the stored order is lexicographic.
class Digraph {
public:
    Digraph() = default;

    /// Throws InvalidArgument naming the first edge with an endpoint out of range.
    static Digraph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    /// Out-neighbours of v (CSR slice).
    std::span<const VertexId> successors(VertexId v) const
    {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }

    Digraph reversed() const;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<VertexId> targets_;
};

// Exact oracles, all O(V + E).

/// True iff g has no directed cycle (Kahn elimination).
bool is_acyclic(const Digraph& g);

/// True iff every ordered pair is joined by a directed path. Graphs with at
/// most one vertex are vacuously strongly connected.
bool is_strongly_connected(const Digraph& g);

/// True iff every vertex is reachable from s. Throws InvalidArgument if s is out of range.
bool reaches_all(const Digraph& g, VertexId s);

/// Vertices reachable from s, as a membership mask.
std::vector<bool> reachable_from(const Digraph& g, VertexId s);

} // namespace digadget
