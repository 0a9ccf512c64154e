#include "digadget/errors.hpp"
#include "digadget/gadgets.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <iterator>
#include <random>

using namespace digadget;
using digadget::testing::bits_of;

namespace {

const BitVector kFigureX = BitVector::parse("001011010");

bool contains(const std::vector<Edge>& set, Edge e) { return std::binary_search(set.begin(), set.end(), e); }

} // namespace

TEST_CASE("derive_params")
{
    CHECK(derive_params(9, 5) == GadgetParams{3, 1, 2});
    CHECK(derive_params(1, 0) == GadgetParams{1, 0, 0});
    CHECK(derive_params(10, 9) == GadgetParams{4, 2, 1});
    CHECK_THROWS_AS(derive_params(9, 9), InvalidArgument);
    CHECK_THROWS_AS(derive_params(0, 0), InvalidArgument);
}

TEST_CASE("ceil_sqrt matches floating-point ceil(sqrt) on perfect squares and neighbours")
{
    for (std::size_t r = 1; r < 2000; ++r) {
        CHECK(ceil_sqrt(r * r) == r);
        CHECK(ceil_sqrt(r * r + 1) == r + 1);
        if (r > 1) CHECK(ceil_sqrt(r * r - 1) == r);
    }
}

TEST_CASE("params invariants hold for every (m, i) up to 400")
{
    for (std::size_t m = 1; m <= 400; ++m) {
        for (std::size_t i = 0; i < m; ++i) {
            const auto p = derive_params(m, i);
            REQUIRE(p.n * p.n >= m);
            REQUIRE((p.n - 1) * (p.n - 1) < m);
            REQUIRE(p.k < p.n);
            REQUIRE(p.j < p.n);
            REQUIRE(p.j * p.n + p.k == i);
        }
    }
}

TEST_CASE("build_e1")
{
    CHECK(build_e1(kFigureX) == std::vector<Edge>{{0, 5}, {1, 4}, {1, 5}, {2, 4}});
    CHECK(build_e1(BitVector::parse("0000")).empty());
    // m = 5, n = 3: positions 0..4 set, 5..8 are padding.
    CHECK(build_e1(BitVector::parse("11111")) == std::vector<Edge>{{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}});
}

TEST_CASE("build_instance on the figure example")
{
    const auto inst = IndexInstance::make(kFigureX, 5);

    const auto acyc = build_instance(Property::Acyclicity, inst);
    CHECK(acyc.vertex_count == 6);
    CHECK_FALSE(acyc.s.has_value());
    CHECK(acyc.e2 == std::vector<Edge>{{5, 1}});

    const auto sc = build_instance(Property::StrongConnectivity, inst);
    CHECK(sc.e2 == std::vector<Edge>{{0, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});

    const auto reach = build_instance(Property::ReachabilityFromS, inst);
    CHECK(reach.vertex_count == 7);
    CHECK(reach.s == VertexId{6});
    CHECK(reach.e2 == std::vector<Edge>{{1, 3}, {1, 4}, {5, 0}, {5, 2}, {6, 1}});
    CHECK(reach.e1 == acyc.e1);
}

TEST_CASE("ground_truth")
{
    CHECK_FALSE(ground_truth(Property::Acyclicity, IndexInstance::make(kFigureX, 5)));
    CHECK_FALSE(ground_truth(Property::StrongConnectivity, IndexInstance::make(BitVector::parse("0000"), 2)));
    CHECK(ground_truth(Property::ReachabilityFromS, IndexInstance::make(BitVector::parse("1"), 0)));
}

TEST_CASE("IndexInstance validation")
{
    CHECK_THROWS_AS(IndexInstance::make(BitVector::parse("01"), 2), InvalidArgument);
    CHECK_THROWS_AS(BitVector::parse(""), InvalidArgument);
    CHECK_THROWS_AS(BitVector::parse("01x"), InvalidArgument);
}

TEST_CASE("lemma fidelity: every x and i for m = 1..12")
{
    for (std::size_t m = 1; m <= 12; ++m) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            const BitVector x = bits_of(mask, m);
            for (std::size_t i = 0; i < m; ++i) {
                const auto inst = IndexInstance::make(x, i);
                for (Property p : kAllProperties) {
                    const auto g = build_instance(p, inst);
                    REQUIRE(evaluate_property(p, g.graph(), g.s) == ground_truth(p, inst));
                }
            }
        }
    }
}

TEST_CASE("lemma fidelity against closure oracles for m <= 6")
{
    using namespace digadget::testing;
    for (std::size_t m = 1; m <= 6; ++m) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            for (std::size_t i = 0; i < m; ++i) {
                const auto inst = IndexInstance::make(bits_of(mask, m), i);
                for (Property p : kAllProperties) {
                    const auto g = build_instance(p, inst);
                    std::vector<Edge> all = g.e1;
                    all.insert(all.end(), g.e2.begin(), g.e2.end());
                    bool value = false;
                    switch (p) {
                    case Property::Acyclicity:
                        value = !has_simple_cycle(g.vertex_count, all);
                        break;
                    case Property::StrongConnectivity:
                        value = closure_strongly_connected(g.vertex_count, all);
                        break;
                    case Property::ReachabilityFromS:
                        value = closure_reaches_all(g.vertex_count, all, *g.s);
                        break;
                    }
                    REQUIRE(value == ground_truth(p, inst));
                }
            }
        }
    }
}

TEST_CASE("lemma fidelity: random instances at m = 100 and m = 1024")
{
    std::mt19937_64 rng(7);
    for (std::size_t m : {std::size_t{100}, std::size_t{1024}}) {
        for (int trial = 0; trial < 10000; ++trial) {
            const auto inst = IndexInstance::make(BitVector::random(m, rng()), rng() % m);
            for (Property p : kAllProperties) {
                const auto g = build_instance(p, inst);
                REQUIRE(evaluate_property(p, g.graph(), g.s) == ground_truth(p, inst));
            }
        }
    }
}

TEST_CASE("size formulas")
{
    for (std::size_t n = 1; n <= 100; ++n) {
        const GadgetParams params{n, n / 2, (n - 1) / 3};
        CHECK(build_e2(Property::Acyclicity, params).size() == 1);
        CHECK(build_e2(Property::StrongConnectivity, params).size() == 4 * n - 3);
        CHECK(build_e2(Property::ReachabilityFromS, params).size() == 2 * n - 1);
        CHECK(gadget_vertex_count(Property::Acyclicity, n) == 2 * n);
        CHECK(gadget_vertex_count(Property::StrongConnectivity, n) == 2 * n);
        CHECK(gadget_vertex_count(Property::ReachabilityFromS, n) == 2 * n + 1);
    }

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = 1 + rng() % 3000;
        const auto x = BitVector::random(m, rng());
        const auto inst = IndexInstance::make(x, rng() % m);
        for (Property p : kAllProperties) {
            const auto g = build_instance(p, inst);
            CHECK(g.e1.size() == x.popcount());
            CHECK(g.e1.size() <= m);
            CHECK(g.vertex_count <= 2 * ceil_sqrt(m) + 1);
        }
    }
}

TEST_CASE("structural invariants of the constructed instances")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t m = 1 + rng() % 200;
        const auto inst = IndexInstance::make(BitVector::random(m, rng()), rng() % m);
        for (Property p : kAllProperties) {
            const auto g = build_instance(p, inst);
            const std::size_t n = g.params.n;
            const VertexId lj = left_vertex(n, g.params.j);
            const VertexId rk = right_vertex(n, g.params.k);

            for (const Edge& e : g.e1) {
                REQUIRE(e.from < n);
                REQUIRE(e.to >= n);
                REQUIRE(e.to < 2 * n);
                REQUIRE(inst.x[e.from * n + (e.to - n)]);
            }
            if (p == Property::ReachabilityFromS) {
                // s has no E1 edges at all.
                for (const Edge& e : g.e1)
                    REQUIRE((e.from != *g.s && e.to != *g.s));
            }

            std::vector<Edge> overlap;
            std::set_intersection(g.e1.begin(), g.e1.end(), g.e2.begin(), g.e2.end(), std::back_inserter(overlap));
            if (p == Property::StrongConnectivity) {
                for (const Edge& e : overlap)
                    REQUIRE((e.from == rk || e.to == lj));
                for (const Edge& e : g.e1)
                    if (e.from == rk || e.to == lj)
                        REQUIRE(contains(overlap, e));
                for (const Edge& e : g.e2)
                    if (e.from >= n && e.to < n)
                        REQUIRE((e.from == rk || e.to == lj));
            } else if (p == Property::ReachabilityFromS) {
                // L_j -> R - {k} can repeat E1 edges; nothing else can.
                for (const Edge& e : overlap)
                    REQUIRE((e.from == lj && e.to != rk));
                for (const Edge& e : g.e1)
                    if (e.from == lj && e.to != rk)
                        REQUIRE(contains(overlap, e));
            } else {
                REQUIRE(overlap.empty());
            }
        }
    }
}

TEST_CASE("encoded_bit reads x_i back from E1")
{
    for (std::uint64_t mask = 0; mask < 512; ++mask)
        for (std::size_t i = 0; i < 9; ++i) {
            const auto inst = IndexInstance::make(bits_of(mask, 9), i);
            REQUIRE(build_instance(Property::Acyclicity, inst).encoded_bit() == inst.target_bit());
        }
}

TEST_CASE("property names round-trip")
{
    for (Property p : kAllProperties)
        CHECK(parse_property(property_name(p)) == p);
    CHECK_FALSE(parse_property("scc").has_value());
}
