#ifndef LINEIDEAL_COMPLEXES_HPP
#define LINEIDEAL_COMPLEXES_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lineideal/field.hpp"
#include "lineideal/monomial_ideal.hpp"
#include "lineideal/var_set.hpp"

namespace lineideal {

/// A finite simple graph. Vertices are 0-based; edges carry 1-based labels in
/// insertion order, and edge i plays the role of the variable x_i.
class Graph {
public:
    /// Throws std::invalid_argument on loops, repeated edges, or endpoints
    /// outside [0, vertex_count).
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    [[nodiscard]] int vertex_count() const { return vertex_count_; }
    [[nodiscard]] int edge_count() const { return static_cast<int>(edges_.size()); }
    /// Endpoints of the edge with 1-based label `label`.
    [[nodiscard]] std::pair<int, int> edge(int label) const;
    /// Distinct edges sharing an endpoint.
    [[nodiscard]] bool adjacent(int label_a, int label_b) const;
    /// Labels of every edge adjacent to `label`.
    [[nodiscard]] VarSet neighbours(int label) const;

private:
    int vertex_count_;
    std::vector<std::pair<int, int>> edges_;
};

/// The path with n edges: vertices v_0..v_n, edge i = {v_{i-1}, v_i}.
Graph path_graph(int n);

/// A simplicial complex on vertices 1..vertex_count, stored by its facets.
///
/// The void complex has no faces at all; the irrelevant complex has the
/// single facet {} and nothing else.
class SimplicialComplex {
public:
    static SimplicialComplex void_complex(int vertex_count);
    static SimplicialComplex irrelevant(int vertex_count);
    /// Keeps only the inclusion-maximal sets among `faces`.
    static SimplicialComplex from_faces(int vertex_count, std::vector<VarSet> faces);

    [[nodiscard]] int vertex_count() const { return vertex_count_; }
    [[nodiscard]] std::span<const VarSet> facets() const { return facets_; }
    [[nodiscard]] bool is_void() const { return facets_.empty(); }
    /// -1 for the irrelevant complex; throws std::domain_error when void.
    [[nodiscard]] int dimension() const;
    [[nodiscard]] bool contains_face(VarSet face) const;
    /// Union of all facets.
    [[nodiscard]] VarSet vertices() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(int vertex_count, std::vector<VarSet> facets)
        : vertex_count_(vertex_count), facets_(std::move(facets)) {}

    int vertex_count_ = 0;
    std::vector<VarSet> facets_;
};

/// Facets are the maximal matchings of `g`. Throws for an edgeless graph.
SimplicialComplex matching_complex(const Graph& g);

/// F(Delta): one generator per facet. Throws for the void complex.
MonomialIdeal facet_ideal(const SimplicialComplex& complex);

/// I_Delta: generated by the minimal non-faces. Throws for the void complex.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);

/// The complex whose faces are the squarefree monomials outside `ideal`.
/// Throws std::domain_error for the zero or unit ideal.
SimplicialComplex sr_complex_of_ideal(const MonomialIdeal& ideal);

/// Faces of `complex` contained in `subset`. Throws std::invalid_argument
/// if `subset` leaves the vertex range.
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, VarSet subset);

/// Faces grouped by dimension: result[d + 1] lists the d-faces in
/// lexicographic order, starting from the empty face at dimension -1.
std::vector<std::vector<VarSet>> faces_by_dimension(const SimplicialComplex& complex);

/// Ranks of reduced homology in dimensions -1..dim.
struct HomologyRanks {
    Field field;
    std::vector<std::uint64_t> ranks;  // ranks[d + 1]

    [[nodiscard]] int top_dimension() const { return static_cast<int>(ranks.size()) - 2; }
    /// Zero outside the stored range.
    [[nodiscard]] std::uint64_t rank(int d) const;
    [[nodiscard]] bool all_zero() const;
};

/// Reduced homology of the augmented chain complex with boundary
/// d[v_0 < ... < v_d] = sum (-1)^i [.. omit v_i ..]. The void complex has
/// no chain groups and so all ranks are zero.
HomologyRanks reduced_homology_ranks(const SimplicialComplex& complex, Field field = Field::rationals());

/// Some vertex lies in every facet (so the complex is contractible).
bool is_cone(const SimplicialComplex& complex);

} // namespace lineideal

#endif
