#include "digadget/algorithms.hpp"
#include "digadget/errors.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace digadget;
using digadget::testing::bits_of;
using digadget::testing::first_checkpoint_divergence;

namespace {

bool full_store_run(Property p, const IndexInstance& inst, StreamOrder order = StreamOrder::Canonical,
                    std::uint64_t seed = 0)
{
    FullStore alg;
    const auto g = build_instance(p, inst);
    return run_streaming(alg, make_stream(g, order, seed), public_params(p, inst.x.size(), 0)).decision;
}

} // namespace

TEST_CASE("full store decisions")
{
    CHECK_FALSE(full_store_run(Property::Acyclicity, IndexInstance::make(BitVector::parse("001011010"), 5)));
    for (std::size_t i = 0; i < 16; ++i)
        CHECK_FALSE(full_store_run(Property::StrongConnectivity, IndexInstance::make(BitVector(std::vector<bool>(16)), i)));

    for (std::uint64_t mask = 0; mask < 64; ++mask)
        for (std::size_t i = 0; i < 6; ++i)
            for (Property p : kAllProperties) {
                const auto inst = IndexInstance::make(bits_of(mask, 6), i);
                REQUIRE(full_store_run(p, inst) == ground_truth(p, inst));
            }
}

TEST_CASE("full store serialization layout")
{
    const auto params = public_params(Property::Acyclicity, 9, 0); // 6 vertices -> 3 bits per endpoint
    FullStore alg;
    alg.begin(params);
    CHECK(alg.snapshot().size() == FullStore::kCountBits);
    alg.absorb({0, 5});
    alg.absorb({2, 4});
    const BitString state = alg.snapshot();
    CHECK(state.size() == 32 + 2 * 2 * 3);
    CHECK(alg.state_bits() == state.size());

    FullStore back;
    back.restore(params, state);
    CHECK(std::vector<Edge>(back.absorbed().begin(), back.absorbed().end()) == std::vector<Edge>{{0, 5}, {2, 4}});

    BitString truncated;
    for (std::size_t p = 0; p + 1 < state.size(); ++p)
        truncated.push_back(state[p]);
    CHECK_THROWS_AS(back.restore(params, truncated), MalformedMessage);
    CHECK_THROWS_AS(back.restore(params, BitString{}), MalformedMessage);
}

TEST_CASE("checkpoint transparency for both reference algorithms, m <= 5")
{
    for (std::size_t m = 1; m <= 5; ++m)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
            for (std::size_t i = 0; i < m; ++i)
                for (Property p : kAllProperties) {
                    const auto g = build_instance(p, IndexInstance::make(bits_of(mask, m), i));
                    const auto stream = make_stream(g, StreamOrder::Shuffled, mask * 31 + i);
                    const auto params = public_params(p, m, mask ^ (i << 8));
                    REQUIRE(first_checkpoint_divergence([] { return std::make_unique<FullStore>(); }, stream, params) == -1);
                    for (std::size_t budget : {std::size_t{0}, m / 2, m})
                        REQUIRE(first_checkpoint_divergence([budget] { return std::make_unique<SampledIndex>(budget); },
                                                            stream, params)
                                == -1);
                }
}

TEST_CASE("sampled index samples min(B, m) distinct positions from the seed")
{
    for (std::size_t budget : {0, 1, 7, 20, 50}) {
        SampledIndex a(budget);
        a.begin(public_params(Property::StrongConnectivity, 20, 9));
        const auto pos = a.sampled_positions();
        CHECK(pos.size() == std::min<std::size_t>(budget, 20));
        CHECK(std::is_sorted(pos.begin(), pos.end()));
        CHECK(std::set<std::size_t>(pos.begin(), pos.end()).size() == pos.size());
        for (std::size_t p : pos)
            CHECK(p < 20);
        CHECK(a.snapshot().size() == pos.size());

        SampledIndex b(budget);
        b.begin(public_params(Property::StrongConnectivity, 20, 9));
        CHECK(std::vector<std::size_t>(pos.begin(), pos.end())
              == std::vector<std::size_t>(b.sampled_positions().begin(), b.sampled_positions().end()));
    }

    // Each position is included with probability B/m.
    std::vector<int> hits(16, 0);
    for (std::uint64_t seed = 0; seed < 8000; ++seed) {
        SampledIndex a(4);
        a.begin(public_params(Property::Acyclicity, 16, seed));
        for (std::size_t p : a.sampled_positions())
            ++hits[p];
    }
    for (int h : hits)
        CHECK(std::abs(h - 2000) < 180); // ~4.6 standard deviations
}

TEST_CASE("sampled index records exactly the sampled E1 bits")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 1 + rng() % 80;
        const auto x = BitVector::random(m, rng());
        const auto params = public_params(Property::Acyclicity, m, rng());
        SampledIndex alg(rng() % (m + 3));
        alg.begin(params);
        for (const Edge& e : build_e1(x))
            alg.absorb(e);
        for (std::size_t p = 0; p < m; ++p) {
            const auto rec = alg.recorded(p);
            const auto& pos = alg.sampled_positions();
            const bool sampled = std::binary_search(pos.begin(), pos.end(), p);
            REQUIRE(rec.has_value() == sampled);
            if (rec)
                REQUIRE(*rec == x[p]);
        }
        REQUIRE(alg.snapshot().size() == std::min(alg.budget_bits(), m));
    }
}

TEST_CASE("sampled index infers Bob's cell on every instance, m <= 12")
{
    for (std::size_t m = 1; m <= 12; ++m)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
            for (std::size_t i = 0; i < m; ++i)
                for (Property p : kAllProperties) {
                    const auto g = build_instance(p, IndexInstance::make(bits_of(mask, m), i));
                    SampledIndex alg(m / 2);
                    alg.begin(public_params(p, m, mask));
                    for (const Edge& e : make_stream(g, StreamOrder::Shuffled, mask + i).edges)
                        alg.absorb(e);
                    REQUIRE(alg.inferred_j() == g.params.j);
                    REQUIRE(alg.inferred_k() == g.params.k);
                }
}

TEST_CASE("sampled index with B = m is always right")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 600; ++trial) {
        const std::size_t m = 1 + rng() % 100;
        const Property p = kAllProperties[trial % 3];
        const auto inst = IndexInstance::make(BitVector::random(m, rng()), rng() % m);
        SampledIndex alg(m);
        const auto run = run_streaming(alg, make_stream(build_instance(p, inst), StreamOrder::Shuffled, rng()),
                                       public_params(p, m, rng()));
        REQUIRE(run.decision == ground_truth(p, inst));
        REQUIRE(run.profile.boundary_state_bits == m);
    }
}

TEST_CASE("sampled index rejects unrecognizable E2 and malformed state")
{
    const auto params = public_params(Property::Acyclicity, 9, 1);
    SampledIndex alg(3);
    alg.begin(params);
    CHECK_THROWS_AS(alg.decide(), ContractViolation); // no E2 seen

    alg.absorb({5, 1});
    CHECK_THROWS_AS(alg.absorb({4, 0}), ContractViolation); // second, different R -> L edge

    BitString wrong;
    wrong.append(0, 5);
    CHECK_THROWS_AS(alg.restore(params, wrong), MalformedMessage);

    // n = 3: tail is 2 + 2 * 2 bits; an all-zero tail is not a valid state.
    BitString empty_tail;
    empty_tail.append(0, 3 + 6);
    CHECK_THROWS_AS(alg.restore(params, empty_tail), MalformedMessage);
}

TEST_CASE("union find component counts")
{
    CHECK(union_find_components(5, {}) == 5);
    const std::vector<Edge> path{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    CHECK(union_find_components(5, path) == 1);

    std::mt19937_64 rng(32);
    const auto edges = digadget::testing::random_edges(rng, 32, 200);
    CHECK(union_find_components(32, edges) == digadget::testing::dfs_components(32, edges));
    const std::vector<Edge> bad{{0, 7}};
    CHECK_THROWS_AS(union_find_components(5, bad), InvalidArgument);
}

TEST_CASE("union find streaming state stays within 2 n ceil(log2 n) bits and round-trips")
{
    std::mt19937_64 rng(64);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 64;
        const auto edges = digadget::testing::random_edges(rng, n, rng() % (3 * n));
        PublicParams params;
        params.vertex_count = n;
        UnionFindConnectivity alg;
        alg.begin(params);
        const std::size_t bound = 2 * n * index_width(n);
        for (const Edge& e : edges) {
            alg.absorb(e);
            const BitString state = alg.snapshot();
            REQUIRE(state.size() <= bound);
            REQUIRE(state.size() == alg.state_bits());
            UnionFindConnectivity copy;
            copy.restore(params, state);
            REQUIRE(copy.snapshot() == state);
            REQUIRE(copy.components() == alg.components());
        }
        REQUIRE(alg.components() == digadget::testing::dfs_components(n, edges));
        REQUIRE(alg.decide() == (digadget::testing::dfs_components(n, edges) <= 1));
    }
}

TEST_CASE("union find restore rejects non-forests")
{
    CHECK_THROWS_AS(UnionFind::from_arrays({1, 0}, {1, 1}), MalformedMessage);
    CHECK_THROWS_AS(UnionFind::from_arrays({0, 5}, {0, 0}), MalformedMessage);
    const auto uf = UnionFind::from_arrays({0, 0, 2}, {1, 0, 0});
    CHECK(uf.components() == 2);
}

TEST_CASE("make_algorithm")
{
    CHECK(dynamic_cast<FullStore*>(make_algorithm(AlgorithmKind::FullStore).get()) != nullptr);
    auto sampled = make_algorithm(AlgorithmKind::SampledIndex, 12);
    REQUIRE(dynamic_cast<SampledIndex*>(sampled.get()) != nullptr);
    CHECK(dynamic_cast<SampledIndex*>(sampled.get())->budget_bits() == 12);
    CHECK(make_algorithm(AlgorithmKind::ConstantFalse)->decide() == false);
    CHECK(make_algorithm(AlgorithmKind::ConstantTrue)->decide() == true);
}

TEST_CASE("bit string packing")
{
    BitString b;
    b.append(0b1011, 4);
    b.push_back(true);
    CHECK(b.to_string() == "11011");
    CHECK(BitString::from_string("11011") == b);
    CHECK(BitString::from_bytes(b.to_bytes(), b.size()) == b);
    CHECK(b.to_bytes() == std::vector<std::uint8_t>{0b11011});
    BitReader r(b);
    CHECK(r.read(4) == 0b1011);
    CHECK(r.read_bit());
    CHECK_THROWS_AS(r.read(1), MalformedMessage);
    CHECK(index_width(1) == 0);
    CHECK(index_width(2) == 1);
    CHECK(index_width(6) == 3);
    CHECK(index_width(8) == 3);
    CHECK(index_width(9) == 4);
}

TEST_CASE("bit strings round-trip through bytes and text")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        BitString b;
        const std::size_t len = rng() % 300;
        for (std::size_t p = 0; p < len; ++p)
            b.push_back((rng() & 1U) != 0);
        REQUIRE(BitString::from_bytes(b.to_bytes(), len) == b);
        REQUIRE(BitString::from_string(b.to_string()) == b);
    }
}
