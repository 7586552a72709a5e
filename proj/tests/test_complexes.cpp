#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lineideal/complexes.hpp"
#include "lineideal/line_formulas.hpp"
#include "support/oracles.hpp"
#include "support/random_ideals.hpp"

using namespace lineideal;

namespace {

std::vector<VarSet> facets_of(const SimplicialComplex& c) { return {c.facets().begin(), c.facets().end()}; }

std::vector<Monomial> gens_of(const MonomialIdeal& i) { return {i.generators().begin(), i.generators().end()}; }

const std::vector<VarSet> kSixEdgeFacets = {VarSet{1, 3, 5}, VarSet{1, 3, 6}, VarSet{1, 4, 6}, VarSet{2, 4, 6},
                                            VarSet{2, 5}};

// Random complex given by a few random facets on [nverts].
SimplicialComplex random_complex(testing::Rng& rng, int nverts) {
    std::uniform_int_distribution<int> count(1, 5);
    std::vector<VarSet> faces;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) faces.push_back(testing::random_nonempty_subset(rng, 1, nverts, 0.5));
    return SimplicialComplex::from_faces(nverts, faces);
}

SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<int>& perm) {
    std::vector<VarSet> faces;
    for (VarSet f : c.facets()) {
        VarSet g;
        for (int v : f.indices()) g = g.with(perm[static_cast<std::size_t>(v - 1)]);
        faces.push_back(g);
    }
    return SimplicialComplex::from_faces(c.vertex_count(), faces);
}

} // namespace

TEST_CASE("path_graph") {
    const Graph one = path_graph(1);
    CHECK(one.edge_count() == 1);
    CHECK(one.vertex_count() == 2);

    const Graph three = path_graph(3);
    CHECK(three.adjacent(1, 2));
    CHECK(three.adjacent(2, 3));
    CHECK_FALSE(three.adjacent(1, 3));

    CHECK(path_graph(6).edge_count() == 6);
    CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
}

TEST_CASE("Graph validates simplicity") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("matching_complex") {
    CHECK(facets_of(matching_complex(path_graph(3))) == std::vector<VarSet>{VarSet{1, 3}, VarSet{2}});
    CHECK(facets_of(matching_complex(path_graph(1))) == std::vector<VarSet>{VarSet{1}});
    CHECK(facets_of(matching_complex(path_graph(6))) == kSixEdgeFacets);
    CHECK_THROWS_AS(matching_complex(Graph(3, {})), std::invalid_argument);

    // Triangle: every single edge is a maximal matching.
    const Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(facets_of(matching_complex(triangle)) == std::vector<VarSet>{VarSet{1}, VarSet{2}, VarSet{3}});
}

TEST_CASE("matching_complex of paths agrees with subset enumeration") {
    for (int n = 1; n <= 16; ++n) CHECK(facets_of(matching_complex(path_graph(n))) == oracle::path_maximal_matchings(n));
}

TEST_CASE("facet_ideal") {
    CHECK(gens_of(facet_ideal(matching_complex(path_graph(6)))) == kSixEdgeFacets);
    CHECK(gens_of(facet_ideal(SimplicialComplex::from_faces(1, {VarSet{1}}))) == std::vector<Monomial>{Monomial{1}});
    CHECK(gens_of(facet_ideal(matching_complex(path_graph(5)))) ==
          std::vector<Monomial>{Monomial{1, 3, 5}, Monomial{1, 4}, Monomial{2, 4}, Monomial{2, 5}});
    CHECK_THROWS_AS(facet_ideal(SimplicialComplex::void_complex(3)), std::domain_error);
}

TEST_CASE("facet ideal of M(L_n) matches the closed-form generator list") {
    for (int n = 1; n <= 16; ++n) CHECK(facet_ideal(matching_complex(path_graph(n))) == line_facet_ideal(n));
}

TEST_CASE("stanley_reisner_ideal") {
    SUBCASE("matching complex of a path gives the path edge ideal") {
        for (int n = 2; n <= 12; ++n) {
            std::vector<Monomial> edges;
            for (int i = 1; i < n; ++i) edges.push_back(Monomial{i, i + 1});
            CHECK(stanley_reisner_ideal(matching_complex(path_graph(n))) == MonomialIdeal::generated_by(n, edges));
        }
    }
    SUBCASE("full simplex has no non-faces") {
        CHECK(stanley_reisner_ideal(SimplicialComplex::from_faces(3, {VarSet{1, 2, 3}})).is_zero());
    }
    SUBCASE("three-edge path") {
        CHECK(gens_of(stanley_reisner_ideal(matching_complex(path_graph(3)))) ==
              std::vector<Monomial>{Monomial{1, 2}, Monomial{2, 3}});
    }
    SUBCASE("irrelevant complex") {
        CHECK(stanley_reisner_ideal(SimplicialComplex::irrelevant(2)) ==
              MonomialIdeal::generated_by(2, {Monomial{1}, Monomial{2}}));
    }
    CHECK_THROWS_AS(stanley_reisner_ideal(SimplicialComplex::void_complex(2)), std::domain_error);
}

TEST_CASE("sr_complex_of_ideal") {
    CHECK(facets_of(sr_complex_of_ideal(MonomialIdeal::generated_by(2, {Monomial{1, 2}}))) ==
          std::vector<VarSet>{VarSet{1}, VarSet{2}});
    CHECK(facets_of(sr_complex_of_ideal(MonomialIdeal::generated_by(3, {Monomial{1, 2}, Monomial{2, 3}}))) ==
          std::vector<VarSet>{VarSet{1, 3}, VarSet{2}});
    CHECK(sr_complex_of_ideal(MonomialIdeal::generated_by(2, {Monomial{1}, Monomial{2}})) ==
          SimplicialComplex::irrelevant(2));
    CHECK_THROWS_AS(sr_complex_of_ideal(MonomialIdeal::zero(2)), std::domain_error);
    CHECK_THROWS_AS(sr_complex_of_ideal(MonomialIdeal::unit(2)), std::domain_error);
}

TEST_CASE("Stanley-Reisner round trip and brute-force facets") {
    testing::Rng rng(404);
    for (int t = 0; t < 300; ++t) {
        const int nvars = 1 + static_cast<int>(rng() % 12);
        const auto i = testing::random_ideal(rng, nvars, 7);
        const auto complex = sr_complex_of_ideal(i);
        CHECK(facets_of(complex) == oracle::sr_facets(gens_of(i), nvars));
        CHECK(stanley_reisner_ideal(complex) == i);
    }
}

TEST_CASE("induced_subcomplex") {
    const auto six = matching_complex(path_graph(6));
    CHECK(induced_subcomplex(six, VarSet::interval(1, 6)) == six);
    CHECK(facets_of(induced_subcomplex(six, VarSet{1, 2})) == std::vector<VarSet>{VarSet{1}, VarSet{2}});
    CHECK(induced_subcomplex(six, VarSet{}) == SimplicialComplex::irrelevant(6));
    CHECK_THROWS_AS(induced_subcomplex(six, VarSet{7}), std::invalid_argument);
    CHECK(induced_subcomplex(SimplicialComplex::void_complex(3), VarSet{1}).is_void());
}

TEST_CASE("reduced_homology_ranks") {
    const auto hollow = SimplicialComplex::from_faces(3, {VarSet{1, 2}, VarSet{1, 3}, VarSet{2, 3}});
    auto h = reduced_homology_ranks(hollow);
    CHECK(h.ranks == std::vector<std::uint64_t>{0, 0, 1});

    const auto solid = SimplicialComplex::from_faces(3, {VarSet{1, 2, 3}});
    CHECK(reduced_homology_ranks(solid).all_zero());

    const auto six = reduced_homology_ranks(matching_complex(path_graph(6)));
    CHECK(six.ranks == std::vector<std::uint64_t>{0, 0, 1, 0});

    const auto irrelevant = reduced_homology_ranks(SimplicialComplex::irrelevant(4));
    CHECK(irrelevant.ranks == std::vector<std::uint64_t>{1});
    CHECK(irrelevant.rank(-1) == 1);

    CHECK(reduced_homology_ranks(SimplicialComplex::void_complex(3)).ranks.empty());
}

TEST_CASE("projective plane: homology depends on the characteristic") {
    // Six-vertex triangulation of RP^2.
    const auto rp2 = SimplicialComplex::from_faces(
        6, {VarSet{1, 2, 3}, VarSet{1, 3, 4}, VarSet{1, 4, 5}, VarSet{1, 5, 6}, VarSet{1, 2, 6}, VarSet{2, 3, 5},
            VarSet{2, 4, 5}, VarSet{2, 4, 6}, VarSet{3, 4, 6}, VarSet{3, 5, 6}});
    CHECK(reduced_homology_ranks(rp2).all_zero());
    const auto mod2 = reduced_homology_ranks(rp2, Field::prime(2));
    CHECK(mod2.rank(1) == 1);
    CHECK(mod2.rank(2) == 1);
}

TEST_CASE("homology agrees with the dense oracle, Euler-Poincare, relabelling invariance") {
    testing::Rng rng(8080);
    for (int t = 0; t < 250; ++t) {
        const int nverts = 1 + static_cast<int>(rng() % 7);
        const auto c = random_complex(rng, nverts);
        const auto h = reduced_homology_ranks(c);

        const auto faces = oracle::faces_from_facets(facets_of(c), nverts);
        const auto expected = oracle::reduced_homology(faces);
        CHECK(std::equal(h.ranks.begin(), h.ranks.end(), expected.begin(), expected.end()));

        const auto by_dim = faces_by_dimension(c);
        long long chain_euler = 0;
        long long homology_euler = 0;
        for (std::size_t k = 0; k < by_dim.size(); ++k) {
            const long long sign = k % 2 == 0 ? 1 : -1;
            chain_euler += sign * static_cast<long long>(by_dim[k].size());
            homology_euler += sign * static_cast<long long>(h.ranks[k]);
        }
        CHECK(chain_euler == homology_euler);

        std::vector<int> perm(static_cast<std::size_t>(nverts));
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(reduced_homology_ranks(relabel(c, perm)).ranks == h.ranks);
    }
}

TEST_CASE("cones have vanishing reduced homology") {
    testing::Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        const int nverts = 2 + static_cast<int>(rng() % 7);
        const auto base = random_complex(rng, nverts - 1);
        std::vector<VarSet> faces;
        for (VarSet f : base.facets()) faces.push_back(f.with(nverts));
        const auto cone = SimplicialComplex::from_faces(nverts, faces);
        CHECK(is_cone(cone));
        CHECK(reduced_homology_ranks(cone).all_zero());
    }
}
