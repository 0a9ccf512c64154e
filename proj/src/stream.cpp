#include "digadget/stream.hpp"

#include "digadget/errors.hpp"
#include "digadget/rng.hpp"

#include <algorithm>
#include <utility>

namespace digadget {

namespace {

constexpr std::uint64_t kFirstSegmentTag = 0xE1;
constexpr std::uint64_t kSecondSegmentTag = 0xE2;

void check_checkpoint(StreamingAlgorithm& alg, const PublicParams& params, std::size_t position)
{
    const BitString before = alg.snapshot();
    if (before.size() != alg.state_bits())
        throw ContractViolation("state_bits() disagrees with snapshot() after "
                                + std::to_string(position) + " edges");
    alg.restore(params, before);
    if (alg.snapshot() != before)
        throw ContractViolation("snapshot/restore does not round-trip after "
                                + std::to_string(position) + " edges");
}

} // namespace

void order_segment(std::vector<Edge>& edges, StreamOrder order, std::uint64_t seed)
{
    if (order == StreamOrder::Canonical) {
        std::sort(edges.begin(), edges.end());
        return;
    }
    Rng rng(seed);
    for (std::size_t t = edges.size(); t > 1; --t)
        std::swap(edges[t - 1], edges[rng.below(t)]);
}

std::uint64_t first_segment_seed(std::uint64_t seed) noexcept
{
    return derive_seed(seed, kFirstSegmentTag);
}

std::uint64_t second_segment_seed(std::uint64_t seed) noexcept
{
    return derive_seed(seed, kSecondSegmentTag);
}

EdgeStream make_stream(const GadgetInstance& instance, StreamOrder order, std::uint64_t seed)
{
    std::vector<Edge> first = instance.e1;
    std::vector<Edge> second = instance.e2;
    order_segment(first, order, first_segment_seed(seed));
    order_segment(second, order, second_segment_seed(seed));

    EdgeStream stream;
    stream.vertex_count = instance.vertex_count;
    stream.boundary = first.size();
    stream.edges = std::move(first);
    stream.edges.insert(stream.edges.end(), second.begin(), second.end());
    return stream;
}

PublicParams public_params(Property property, std::size_t m, std::uint64_t rng_seed)
{
    PublicParams p;
    p.m = m;
    p.n = derive_params(m, 0).n;
    p.property = property;
    p.vertex_count = gadget_vertex_count(property, p.n);
    p.rng_seed = rng_seed;
    return p;
}

StreamRun run_streaming(StreamingAlgorithm& alg, const EdgeStream& stream,
                        const PublicParams& params, RunOptions options)
{
    StreamRun run;
    alg.begin(params);

    auto measure = [&](std::size_t position) {
        if (options.verify_checkpoints)
            check_checkpoint(alg, params, position);
        const std::size_t bits = alg.state_bits();
        run.profile.max_state_bits = std::max(run.profile.max_state_bits, bits);
        if (position == stream.boundary)
            run.profile.boundary_state_bits = bits;
    };

    measure(0);
    for (std::size_t t = 0; t < stream.edges.size(); ++t) {
        alg.absorb(stream.edges[t]);
        measure(t + 1);
    }
    run.decision = alg.decide();
    return run;
}

} // namespace digadget
