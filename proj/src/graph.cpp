#include "digadget/graph.hpp"

#include "digadget/errors.hpp"

#include <algorithm>
#include <string>

namespace digadget {

Digraph Digraph::from_edges(std::size_t vertex_count, std::span<const Edge> edges)
{
    for (const Edge& e : edges) {
        if (e.from >= vertex_count || e.to >= vertex_count)
            throw InvalidArgument("edge (" + std::to_string(e.from) + ", " + std::to_string(e.to)
                                  + ") has an endpoint outside [0, "
                                  + std::to_string(vertex_count) + ")");
    }

    Digraph g;
    g.vertex_count_ = vertex_count;
    g.edges_.assign(edges.begin(), edges.end());
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    // Sorted by source, so the CSR arrays fall straight out.
    g.offsets_.assign(vertex_count + 1, 0);
    for (const Edge& e : g.edges_)
        ++g.offsets_[e.from + 1];
    for (std::size_t v = 0; v < vertex_count; ++v)
        g.offsets_[v + 1] += g.offsets_[v];
    g.targets_.reserve(g.edges_.size());
    for (const Edge& e : g.edges_)
        g.targets_.push_back(e.to);
    return g;
}

Digraph Digraph::reversed() const
{
    std::vector<Edge> flipped;
    flipped.reserve(edges_.size());
    for (const Edge& e : edges_)
        flipped.push_back({e.to, e.from});
    return from_edges(vertex_count_, flipped);
}

bool is_acyclic(const Digraph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> indegree(n, 0);
    for (const Edge& e : g.edges())
        ++indegree[e.to];

    std::vector<VertexId> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indegree[v] == 0)
            ready.push_back(static_cast<VertexId>(v));

    std::size_t removed = 0;
    while (!ready.empty()) {
        const VertexId v = ready.back();
        ready.pop_back();
        ++removed;
        for (VertexId w : g.successors(v))
            if (--indegree[w] == 0)
                ready.push_back(w);
    }
    return removed == n;
}

std::vector<bool> reachable_from(const Digraph& g, VertexId s)
{
    if (s >= g.vertex_count())
        throw InvalidArgument("source vertex " + std::to_string(s) + " out of range");
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<VertexId> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : g.successors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

bool reaches_all(const Digraph& g, VertexId s)
{
    const auto seen = reachable_from(g, s);
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_strongly_connected(const Digraph& g)
{
    if (g.vertex_count() <= 1)
        return true;
    return reaches_all(g, 0) && reaches_all(g.reversed(), 0);
}

} // namespace digadget
