#pragma once

// Test-only oracles. These share nothing with the library's traversal code:
// closure by Floyd-Warshall, cycles by explicit enumeration of vertex sequences.

#include "digadget/algorithms.hpp"
#include "digadget/gadgets.hpp"
#include "digadget/graph.hpp"
#include "digadget/stream.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <vector>

namespace digadget::testing {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix adjacency(std::size_t n, const std::vector<Edge>& edges)
{
    Matrix a(n, std::vector<bool>(n, false));
    for (const Edge& e : edges)
        a[e.from][e.to] = true;
    return a;
}

/// reach[u][v]: a path of length >= 0 from u to v.
inline Matrix closure(std::size_t n, const std::vector<Edge>& edges)
{
    Matrix r = adjacency(n, edges);
    for (std::size_t v = 0; v < n; ++v)
        r[v][v] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t u = 0; u < n; ++u)
            if (r[u][k])
                for (std::size_t v = 0; v < n; ++v)
                    if (r[k][v])
                        r[u][v] = true;
    return r;
}

/// Searches every sequence of distinct vertices v0..vt (t >= 0) for a closed
/// walk v0 -> ... -> vt -> v0. Exponential; for graphs of a handful of vertices.
inline bool has_simple_cycle(std::size_t n, const std::vector<Edge>& edges)
{
    const Matrix a = adjacency(n, edges);
    std::vector<bool> used(n, false);
    std::vector<std::size_t> path;
    std::function<bool()> extend = [&]() -> bool {
        const std::size_t last = path.back();
        if (a[last][path.front()])
            return true;
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v] || !a[last][v])
                continue;
            used[v] = true;
            path.push_back(v);
            if (extend())
                return true;
            path.pop_back();
            used[v] = false;
        }
        return false;
    };
    for (std::size_t s = 0; s < n; ++s) {
        path = {s};
        std::fill(used.begin(), used.end(), false);
        used[s] = true;
        if (extend())
            return true;
    }
    return false;
}

inline bool closure_strongly_connected(std::size_t n, const std::vector<Edge>& edges)
{
    const Matrix r = closure(n, edges);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (!r[u][v])
                return false;
    return true;
}

inline bool closure_reaches_all(std::size_t n, const std::vector<Edge>& edges, std::size_t s)
{
    const Matrix r = closure(n, edges);
    return std::all_of(r[s].begin(), r[s].end(), [](bool b) { return b; });
}

/// Undirected components by repeated DFS over an adjacency matrix.
inline std::size_t dfs_components(std::size_t n, const std::vector<Edge>& edges)
{
    std::vector<std::vector<std::size_t>> adj(n);
    for (const Edge& e : edges) {
        adj[e.from].push_back(e.to);
        adj[e.to].push_back(e.from);
    }
    std::vector<bool> seen(n, false);
    std::size_t count = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        ++count;
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
    }
    return count;
}

inline std::vector<Edge> random_edges(std::mt19937_64& rng, std::size_t n, std::size_t count)
{
    std::vector<Edge> edges;
    for (std::size_t t = 0; t < count; ++t)
        edges.push_back({static_cast<VertexId>(rng() % n), static_cast<VertexId>(rng() % n)});
    return edges;
}

inline BitVector bits_of(std::uint64_t mask, std::size_t m)
{
    std::vector<bool> bits(m);
    for (std::size_t p = 0; p < m; ++p)
        bits[p] = ((mask >> p) & 1U) != 0;
    return BitVector(std::move(bits));
}

/// For every prefix length p: run p edges on one object, snapshot, restore into
/// a fresh object, finish the stream there. Returns the first p whose decision
/// differs from the uninterrupted run, or -1.
inline long first_checkpoint_divergence(const std::function<std::unique_ptr<StreamingAlgorithm>()>& make,
                                        const EdgeStream& stream, const PublicParams& params)
{
    auto whole = make();
    const bool expected = run_streaming(*whole, stream, params).decision;

    for (std::size_t p = 0; p <= stream.edges.size(); ++p) {
        auto head = make();
        head->begin(params);
        for (std::size_t t = 0; t < p; ++t)
            head->absorb(stream.edges[t]);
        const BitString state = head->snapshot();

        auto tail = make();
        tail->restore(params, state);
        for (std::size_t t = p; t < stream.edges.size(); ++t)
            tail->absorb(stream.edges[t]);
        if (tail->decide() != expected)
            return static_cast<long>(p);
    }
    return -1;
}

} // namespace digadget::testing
