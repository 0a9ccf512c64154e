#include "digadget/algorithms.hpp"

#include "digadget/errors.hpp"
#include "digadget/gadgets.hpp"
#include "digadget/rng.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace digadget {

namespace {

constexpr std::uint64_t kSampleTag = 0x5A;
constexpr std::uint64_t kGuessTag = 0x6C;

std::optional<VertexId> source_of(const PublicParams& params)
{
    if (params.property == Property::ReachabilityFromS)
        return source_vertex(params.n);
    return std::nullopt;
}

} // namespace

// FullStore

void FullStore::begin(const PublicParams& params)
{
    params_ = params;
    edges_.clear();
}

void FullStore::absorb(Edge e) { edges_.push_back(e); }

std::size_t FullStore::state_bits() const
{
    return kCountBits + 2 * index_width(params_.vertex_count) * edges_.size();
}

BitString FullStore::snapshot() const
{
    const unsigned w = index_width(params_.vertex_count);
    BitString out;
    out.append(edges_.size(), kCountBits);
    for (const Edge& e : edges_) {
        out.append(e.from, w);
        out.append(e.to, w);
    }
    return out;
}

void FullStore::restore(const PublicParams& params, const BitString& state)
{
    const unsigned w = index_width(params.vertex_count);
    BitReader in(state);
    const std::uint64_t count = in.read(kCountBits);
    if (in.remaining() != count * 2 * w)
        throw MalformedMessage("full-store state: " + std::to_string(count) + " edges need "
                               + std::to_string(count * 2 * w) + " bits, got "
                               + std::to_string(in.remaining()));
    std::vector<Edge> edges;
    edges.reserve(count);
    for (std::uint64_t t = 0; t < count; ++t) {
        Edge e;
        e.from = static_cast<VertexId>(in.read(w));
        e.to = static_cast<VertexId>(in.read(w));
        if (e.from >= params.vertex_count || e.to >= params.vertex_count)
            throw MalformedMessage("full-store state: endpoint out of range");
        edges.push_back(e);
    }
    params_ = params;
    edges_ = std::move(edges);
}

bool FullStore::decide()
{
    const Digraph g = Digraph::from_edges(params_.vertex_count, edges_);
    return evaluate_property(params_.property, g, source_of(params_));
}

// SampledIndex

void SampledIndex::resample()
{
    const std::size_t m = params_.m;
    const std::size_t count = std::min(budget_, m);
    std::vector<std::size_t> pool(m);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    Rng rng(derive_seed(params_.rng_seed, kSampleTag));
    // Partial Fisher-Yates: the first `count` slots are a uniform sample.
    for (std::size_t t = 0; t < count; ++t)
        std::swap(pool[t], pool[t + rng.below(m - t)]);
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    positions_ = std::move(pool);
}

void SampledIndex::begin(const PublicParams& params)
{
    params_ = params;
    resample();
    bits_.assign(positions_.size(), false);
    j_.reset();
    k_.reset();
}

void SampledIndex::set_once(std::optional<std::size_t>& slot, std::size_t value, const char* what)
{
    if (slot && *slot != value)
        throw ContractViolation(std::string("unrecognized E2 structure: conflicting ") + what);
    slot = value;
}

void SampledIndex::absorb(Edge e)
{
    const std::size_t n = params_.n;
    const auto in_left = [n](VertexId v) { return v < n; };
    const auto in_right = [n](VertexId v) { return v >= n && v < 2 * n; };

    if (in_left(e.from) && in_right(e.to)) {
        const std::size_t pos = e.from * n + (e.to - n);
        const auto it = std::lower_bound(positions_.begin(), positions_.end(), pos);
        if (it != positions_.end() && *it == pos)
            bits_[static_cast<std::size_t>(it - positions_.begin())] = true;
        return;
    }

    switch (params_.property) {
    case Property::Acyclicity:
        if (in_right(e.from) && in_left(e.to)) {
            set_once(j_, e.to, "j");
            set_once(k_, e.from - n, "k");
        }
        break;
    case Property::StrongConnectivity:
        // Only the out-star of R_k has R -> R edges and only the in-star of
        // L_j has L -> L edges. R -> L edges are ambiguous unless n = 1.
        if (in_right(e.from) && in_right(e.to))
            set_once(k_, e.from - n, "k");
        else if (in_left(e.from) && in_left(e.to))
            set_once(j_, e.to, "j");
        else if (n == 1 && in_right(e.from) && in_left(e.to)) {
            set_once(j_, 0, "j");
            set_once(k_, 0, "k");
        }
        break;
    case Property::ReachabilityFromS:
        if (e.from == source_vertex(n) && in_left(e.to))
            set_once(j_, e.to, "j");
        else if (in_right(e.from) && in_left(e.to))
            set_once(k_, e.from - n, "k");
        break;
    }
}

std::size_t SampledIndex::tail_bits() const noexcept
{
    return (j_ || k_) ? 2 + 2 * index_width(params_.n) : 0;
}

std::size_t SampledIndex::state_bits() const { return positions_.size() + tail_bits(); }

BitString SampledIndex::snapshot() const
{
    BitString out;
    for (bool b : bits_)
        out.push_back(b);
    if (tail_bits() > 0) {
        const unsigned w = index_width(params_.n);
        out.push_back(j_.has_value());
        out.append(j_.value_or(0), w);
        out.push_back(k_.has_value());
        out.append(k_.value_or(0), w);
    }
    return out;
}

void SampledIndex::restore(const PublicParams& params, const BitString& state)
{
    begin(params);
    const unsigned w = index_width(params.n);
    const std::size_t tail = 2 + 2 * std::size_t{w};
    if (state.size() != positions_.size() && state.size() != positions_.size() + tail)
        throw MalformedMessage("sampled-index state: expected " + std::to_string(positions_.size())
                               + " or " + std::to_string(positions_.size() + tail) + " bits, got "
                               + std::to_string(state.size()));
    BitReader in(state);
    for (std::size_t t = 0; t < positions_.size(); ++t)
        bits_[t] = in.read_bit();
    if (in.remaining() == 0)
        return;

    const bool has_j = in.read_bit();
    const std::size_t j = in.read(w);
    const bool has_k = in.read_bit();
    const std::size_t k = in.read(w);
    if (!has_j && !has_k)
        throw MalformedMessage("sampled-index state: empty inference tail");
    if ((has_j && j >= params.n) || (has_k && k >= params.n))
        throw MalformedMessage("sampled-index state: inferred index out of range");
    if (has_j)
        j_ = j;
    if (has_k)
        k_ = k;
}

std::optional<bool> SampledIndex::recorded(std::size_t position) const
{
    const auto it = std::lower_bound(positions_.begin(), positions_.end(), position);
    if (it == positions_.end() || *it != position)
        return std::nullopt;
    return bits_[static_cast<std::size_t>(it - positions_.begin())];
}

std::optional<std::size_t> SampledIndex::inferred_j() const
{
    if (!j_ && params_.n == 1)
        return 0;
    return j_;
}

std::optional<std::size_t> SampledIndex::inferred_k() const
{
    if (!k_ && params_.n == 1)
        return 0;
    return k_;
}

bool SampledIndex::decide()
{
    const auto j = inferred_j();
    const auto k = inferred_k();
    if (!j || !k)
        throw ContractViolation("unrecognized E2 structure: could not locate Bob's cell");
    const std::size_t pos = *j * params_.n + *k;
    if (pos >= params_.m)
        throw ContractViolation("unrecognized E2 structure: cell outside the bit vector");

    if (const auto bit = recorded(pos))
        return truth_for_bit(params_.property, *bit);
    Rng rng(derive_seed(params_.rng_seed, kGuessTag));
    return rng.coin();
}

// ConstantAnswer

void ConstantAnswer::restore(const PublicParams&, const BitString& state)
{
    if (!state.empty())
        throw MalformedMessage("constant algorithm has no state");
}

// UnionFind

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0), components_(n)
{
    std::iota(parent_.begin(), parent_.end(), VertexId{0});
}

VertexId UnionFind::find(VertexId v)
{
    while (parent_[v] != v) {
        parent_[v] = parent_[parent_[v]];
        v = parent_[v];
    }
    return v;
}

bool UnionFind::unite(VertexId a, VertexId b)
{
    VertexId ra = find(a);
    VertexId rb = find(b);
    if (ra == rb)
        return false;
    if (rank_[ra] < rank_[rb])
        std::swap(ra, rb);
    parent_[rb] = ra;
    if (rank_[ra] == rank_[rb])
        ++rank_[ra];
    --components_;
    return true;
}

UnionFind UnionFind::from_arrays(std::vector<VertexId> parent, std::vector<std::uint8_t> rank)
{
    if (parent.size() != rank.size())
        throw MalformedMessage("union-find: parent and rank sizes differ");
    UnionFind uf;
    uf.components_ = 0;
    for (std::size_t v = 0; v < parent.size(); ++v) {
        if (parent[v] >= parent.size())
            throw MalformedMessage("union-find: parent out of range");
        if (parent[v] == v)
            ++uf.components_;
        else if (rank[v] >= rank[parent[v]])
            // Ranks strictly increase towards the root, which also rules out cycles.
            throw MalformedMessage("union-find: rank does not increase towards the root");
    }
    uf.parent_ = std::move(parent);
    uf.rank_ = std::move(rank);
    return uf;
}

// UnionFindConnectivity

namespace {

unsigned rank_width(std::size_t n) { return index_width(index_width(n) + 1); }

} // namespace

void UnionFindConnectivity::begin(const PublicParams& params)
{
    n_ = params.vertex_count;
    forest_ = UnionFind(n_);
}

void UnionFindConnectivity::absorb(Edge e)
{
    if (e.from >= n_ || e.to >= n_)
        throw InvalidArgument("edge endpoint out of range for union-find");
    forest_.unite(e.from, e.to);
}

std::size_t UnionFindConnectivity::state_bits() const
{
    return n_ * (index_width(n_) + rank_width(n_));
}

BitString UnionFindConnectivity::snapshot() const
{
    const unsigned w = index_width(n_);
    const unsigned rw = rank_width(n_);
    BitString out;
    for (VertexId p : forest_.parents())
        out.append(p, w);
    for (std::uint8_t r : forest_.ranks())
        out.append(r, rw);
    return out;
}

void UnionFindConnectivity::restore(const PublicParams& params, const BitString& state)
{
    const std::size_t n = params.vertex_count;
    const unsigned w = index_width(n);
    const unsigned rw = rank_width(n);
    if (state.size() != n * (w + rw))
        throw MalformedMessage("union-find state has wrong length");
    BitReader in(state);
    std::vector<VertexId> parent(n);
    std::vector<std::uint8_t> rank(n);
    for (auto& p : parent)
        p = static_cast<VertexId>(in.read(w));
    for (auto& r : rank)
        r = static_cast<std::uint8_t>(in.read(rw));
    forest_ = UnionFind::from_arrays(std::move(parent), std::move(rank));
    n_ = n;
}

std::size_t union_find_components(std::size_t n, std::span<const Edge> edges)
{
    UnionFind uf(n);
    for (const Edge& e : edges) {
        if (e.from >= n || e.to >= n)
            throw InvalidArgument("edge endpoint out of range for union-find");
        uf.unite(e.from, e.to);
    }
    return uf.components();
}

std::unique_ptr<StreamingAlgorithm> make_algorithm(AlgorithmKind kind, std::size_t budget_bits)
{
    switch (kind) {
    case AlgorithmKind::FullStore:
        return std::make_unique<FullStore>();
    case AlgorithmKind::SampledIndex:
        return std::make_unique<SampledIndex>(budget_bits);
    case AlgorithmKind::ConstantTrue:
        return std::make_unique<ConstantAnswer>(true);
    case AlgorithmKind::ConstantFalse:
        return std::make_unique<ConstantAnswer>(false);
    }
    throw InvalidArgument("unknown algorithm kind");
}

} // namespace digadget
