#include "mixhyp/constructions.hpp"
#include "mixhyp/core.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace mixhyp;

TEST_CASE("new hypergraph validates and canonicalizes edges")
{
    MixedHypergraph h(2, {}, {{0, 1}});
    CHECK(h.vertex_count() == 2);
    CHECK(h.c_edges().empty());
    CHECK(h.d_edges() == std::vector<Edge>{{0, 1}});

    CHECK_THROWS_AS(MixedHypergraph(2, {{0}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(MixedHypergraph(2, {}, {{1}}), std::invalid_argument);
    CHECK_THROWS_AS(MixedHypergraph(2, {{0, 2}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(MixedHypergraph(3, {{1, 1}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(MixedHypergraph(0, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(MixedHypergraph(2, {}, {}, {TupleLabel{{1}}}), std::invalid_argument);

    MixedHypergraph dup(4, {{2, 1, 0}, {0, 1, 2}, {3, 0}}, {{1, 0}, {0, 1}});
    CHECK(dup.c_edges() == std::vector<Edge>{{0, 1, 2}, {0, 3}});
    CHECK(dup.d_edges() == std::vector<Edge>{{0, 1}});

    // Bi-edges are allowed.
    MixedHypergraph bi(2, {{0, 1}}, {{0, 1}});
    CHECK(bi.c_edges() == bi.d_edges());
}

TEST_CASE("derived sub-hypergraph keeps exactly the contained edges")
{
    MixedHypergraph edgeless(3, {}, {});
    const std::vector<Vertex> only0{0};
    auto single = derived_subhypergraph(edgeless, only0);
    CHECK(single.vertex_count() == 1);
    CHECK(single.c_edges().empty());

    const std::vector<Vertex> none;
    CHECK_THROWS_AS(derived_subhypergraph(edgeless, none), std::invalid_argument);
    const std::vector<Vertex> outside{0, 3};
    CHECK_THROWS_AS(derived_subhypergraph(edgeless, outside), std::invalid_argument);

    // Full vertex set is the identity.
    const auto h = construct_one(SpecSet({4, 2}));
    CHECK(derived_subhypergraph(h, h.vertices()) == h);

    // Relabelling preserves order and carries labels.
    const std::vector<Vertex> keep{5, 1, 3};
    auto sub = derived_subhypergraph(h, keep);
    CHECK(sub.labels() == std::vector<TupleLabel>{h.label(1), h.label(3), h.label(5)});
}

TEST_CASE("derived sub-hypergraph matches a brute-force edge filter")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto h = oracle::random_hypergraph(rng, 7);
        const std::size_t size = std::uniform_int_distribution<std::size_t>(1, h.vertex_count())(rng);
        auto subset = oracle::random_subset(rng, h.vertex_count(), size);
        std::sort(subset.begin(), subset.end());
        const auto sub = derived_subhypergraph(h, subset);

        auto filter = [&](const std::vector<Edge> &family) {
            std::vector<Edge> out;
            for (const auto &e : family) {
                Edge mapped;
                bool inside = true;
                for (Vertex v : e) {
                    auto it = std::find(subset.begin(), subset.end(), v);
                    if (it == subset.end()) {
                        inside = false;
                        break;
                    }
                    mapped.push_back(static_cast<Vertex>(it - subset.begin()));
                }
                if (inside)
                    out.push_back(mapped);
            }
            std::sort(out.begin(), out.end());
            return out;
        };
        CHECK(sub.c_edges() == filter(h.c_edges()));
        CHECK(sub.d_edges() == filter(h.d_edges()));
    }
}

TEST_CASE("delete vertex")
{
    MixedHypergraph two(2, {}, {});
    auto one = delete_vertex(two, 1);
    CHECK(one.vertex_count() == 1);
    CHECK_THROWS_AS(delete_vertex(one, 0), std::invalid_argument);
    CHECK_THROWS_AS(delete_vertex(two, 2), std::invalid_argument);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto h = oracle::random_hypergraph(rng, 7);
        if (h.vertex_count() < 2)
            continue;
        for (Vertex v = 0; v < h.vertex_count(); ++v) {
            auto rest = h.vertices();
            rest.erase(rest.begin() + v);
            CHECK(delete_vertex(h, v) == derived_subhypergraph(h, rest));
        }
    }

    // Removing (3,1) from the {4,3} construction leaves the four-vertex
    // second construction.
    const SpecSet s({4, 3});
    const auto full = construct_one(s);
    REQUIRE(full.vertex_count() == 5);
    const auto v = full.find_label(TupleLabel{{3, 1}});
    REQUIRE(v);
    CHECK(delete_vertex(full, *v) == construct_two(s));
}

TEST_CASE("isomorphism: basic cases")
{
    const auto h = construct_one(SpecSet({4, 2}));
    const auto self = are_isomorphic(h, h);
    REQUIRE(self);
    CHECK(is_isomorphism(h, h, *self));
    CHECK(self->image == h.vertices());

    MixedHypergraph c_pair(2, {{0, 1}}, {});
    MixedHypergraph d_pair(2, {}, {{0, 1}});
    CHECK_FALSE(are_isomorphic(c_pair, d_pair));
    CHECK_FALSE(are_isomorphic(MixedHypergraph(2, {}, {}), MixedHypergraph(3, {}, {})));

    // Same edge counts, different structure: path vs. star of D-edges.
    MixedHypergraph path(4, {}, {{0, 1}, {1, 2}, {2, 3}});
    MixedHypergraph star(4, {}, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_FALSE(are_isomorphic(path, star));

    MixedHypergraph big(13, {}, {});
    CHECK_THROWS_AS(are_isomorphic(big, big), std::length_error);
}

TEST_CASE("isomorphism: the x1 = x2 slice of a construction is the shorter construction")
{
    const auto h = construct_one(SpecSet({4, 3, 2}));
    std::vector<Vertex> slice;
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (h.label(v).coords[0] == h.label(v).coords[1])
            slice.push_back(v);
    const auto sub = derived_subhypergraph(h, slice);
    const auto target = construct_one(SpecSet({3, 2}));
    const auto mapping = are_isomorphic(sub, target);
    REQUIRE(mapping);
    CHECK(is_isomorphism(sub, target, *mapping));
}

TEST_CASE("isomorphism: random permutations are found, reflexive and symmetric")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const auto h = oracle::random_hypergraph(rng, 7);
        const auto perm = oracle::random_permutation(rng, h.vertex_count());
        const auto g = permute(h, perm);

        const auto forward = are_isomorphic(h, g);
        REQUIRE(forward);
        CHECK(is_isomorphism(h, g, *forward));

        const auto backward = are_isomorphic(g, h);
        REQUIRE(backward);
        IsoMapping inverse{std::vector<Vertex>(h.vertex_count())};
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            inverse.image[forward->image[v]] = v;
        CHECK(is_isomorphism(g, h, inverse));

        CHECK(g.c_edges().size() == h.c_edges().size());
        CHECK(g.d_edges().size() == h.d_edges().size());
    }
}

TEST_CASE("isomorphism agrees with an exhaustive permutation check")
{
    std::mt19937_64 rng(77);
    int positives = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const auto a = oracle::random_hypergraph(rng, 5);
        const auto b = oracle::random_hypergraph(rng, 5);
        bool brute = false;
        if (a.vertex_count() == b.vertex_count()) {
            auto perm = a.vertices();
            do {
                brute = is_isomorphism(a, b, IsoMapping{perm});
            } while (!brute && std::next_permutation(perm.begin(), perm.end()));
        }
        CHECK(are_isomorphic(a, b).has_value() == brute);
        positives += brute;
    }
    CHECK(positives > 0);
}
