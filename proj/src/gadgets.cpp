#include "digadget/gadgets.hpp"

#include "digadget/errors.hpp"
#include "digadget/rng.hpp"

#include <algorithm>
#include <string>

namespace digadget {

BitVector::BitVector(std::vector<bool> bits) : bits_(std::move(bits)) {}

BitVector BitVector::parse(std::string_view text)
{
    if (text.empty())
        throw InvalidArgument("bit vector must have at least one bit");
    std::vector<bool> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw InvalidArgument("bit vector may only contain '0' and '1', got '" + std::string(1, c) + "'");
        bits.push_back(c == '1');
    }
    return BitVector(std::move(bits));
}

BitVector BitVector::random(std::size_t m, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<bool> bits(m);
    for (std::size_t p = 0; p < m; ++p)
        bits[p] = rng.coin();
    return BitVector(std::move(bits));
}

std::size_t BitVector::popcount() const noexcept
{
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::string BitVector::to_string() const
{
    std::string out;
    out.reserve(bits_.size());
    for (bool b : bits_)
        out.push_back(b ? '1' : '0');
    return out;
}

IndexInstance IndexInstance::make(BitVector x, std::size_t i)
{
    if (x.size() == 0)
        throw InvalidArgument("bit vector must have at least one bit");
    if (i >= x.size())
        throw InvalidArgument("index " + std::to_string(i) + " out of range for m = "
                              + std::to_string(x.size()));
    return IndexInstance{std::move(x), i};
}

std::string_view property_name(Property p) noexcept
{
    switch (p) {
    case Property::Acyclicity:
        return "acyc";
    case Property::StrongConnectivity:
        return "sc";
    case Property::ReachabilityFromS:
        return "reach";
    }
    return "?";
}

std::optional<Property> parse_property(std::string_view name) noexcept
{
    for (Property p : kAllProperties)
        if (property_name(p) == name)
            return p;
    return std::nullopt;
}

std::size_t ceil_sqrt(std::size_t m) noexcept
{
    std::size_t lo = 0;
    std::size_t hi = 1;
    while (hi * hi < m)
        hi *= 2;
    // Smallest r in (lo, hi] with r * r >= m.
    while (lo + 1 < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (mid * mid >= m)
            hi = mid;
        else
            lo = mid;
    }
    return m == 0 ? 0 : hi;
}

GadgetParams derive_params(std::size_t m, std::size_t i)
{
    if (m == 0)
        throw InvalidArgument("m must be at least 1");
    if (i >= m)
        throw InvalidArgument("index " + std::to_string(i) + " out of range for m = " + std::to_string(m));
    GadgetParams p;
    p.n = ceil_sqrt(m);
    p.k = i % p.n;
    p.j = (i - p.k) / p.n;
    return p;
}

std::size_t gadget_vertex_count(Property p, std::size_t n) noexcept
{
    return p == Property::ReachabilityFromS ? 2 * n + 1 : 2 * n;
}

Digraph GadgetInstance::graph() const
{
    std::vector<Edge> all(e1);
    all.insert(all.end(), e2.begin(), e2.end());
    return Digraph::from_edges(vertex_count, all);
}

bool GadgetInstance::encoded_bit() const
{
    const Edge probe{left_vertex(params.n, params.j), right_vertex(params.n, params.k)};
    return std::binary_search(e1.begin(), e1.end(), probe);
}

std::vector<Edge> build_e1(const BitVector& x)
{
    const std::size_t n = ceil_sqrt(x.size());
    std::vector<Edge> edges;
    edges.reserve(x.popcount());
    // Positions past m are padding and carry no edge.
    for (std::size_t pos = 0; pos < x.size(); ++pos)
        if (x[pos])
            edges.push_back({left_vertex(n, pos / n), right_vertex(n, pos % n)});
    return edges;
}

std::vector<Edge> build_e2(Property property, const GadgetParams& params)
{
    const std::size_t n = params.n;
    const VertexId lj = left_vertex(n, params.j);
    const VertexId rk = right_vertex(n, params.k);
    std::vector<Edge> edges;

    switch (property) {
    case Property::Acyclicity:
        edges.push_back({rk, lj});
        break;
    case Property::StrongConnectivity: {
        const auto v_count = static_cast<VertexId>(2 * n);
        for (VertexId v = 0; v < v_count; ++v) {
            if (v != rk)
                edges.push_back({rk, v});
            if (v != lj)
                edges.push_back({v, lj});
        }
        break;
    }
    case Property::ReachabilityFromS:
        edges.push_back({source_vertex(n), lj});
        for (std::size_t b = 0; b < n; ++b)
            if (b != params.k)
                edges.push_back({lj, right_vertex(n, b)});
        for (std::size_t a = 0; a < n; ++a)
            if (a != params.j)
                edges.push_back({rk, left_vertex(n, a)});
        break;
    }

    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

GadgetInstance build_instance(Property property, const IndexInstance& inst)
{
    GadgetInstance g;
    g.property = property;
    g.m = inst.x.size();
    g.i = inst.i;
    g.params = derive_params(g.m, inst.i);
    g.vertex_count = gadget_vertex_count(property, g.params.n);
    if (property == Property::ReachabilityFromS)
        g.s = source_vertex(g.params.n);
    g.e1 = build_e1(inst.x);
    g.e2 = build_e2(property, g.params);
    return g;
}

bool truth_for_bit(Property property, bool bit) noexcept
{
    return property == Property::Acyclicity ? !bit : bit;
}

bool bit_for_decision(Property property, bool decision) noexcept
{
    return property == Property::Acyclicity ? !decision : decision;
}

bool ground_truth(Property property, const IndexInstance& inst)
{
    return truth_for_bit(property, inst.target_bit());
}

bool evaluate_property(Property property, const Digraph& g, std::optional<VertexId> s)
{
    switch (property) {
    case Property::Acyclicity:
        return is_acyclic(g);
    case Property::StrongConnectivity:
        return is_strongly_connected(g);
    case Property::ReachabilityFromS:
        if (!s)
            throw InvalidArgument("reachability needs a source vertex");
        return reaches_all(g, *s);
    }
    return false;
}

} // namespace digadget
