#include "lineideal/complexes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "lineideal/exact_rank.hpp"

namespace lineideal {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) throw std::invalid_argument("negative vertex count");
    if (edges_.size() > static_cast<std::size_t>(VarSet::kMaxIndex))
        throw std::invalid_argument("at most 64 edges are supported");
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
            throw std::invalid_argument("edge endpoint outside the vertex range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    auto sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("repeated edge");
}

std::pair<int, int> Graph::edge(int label) const {
    if (label < 1 || label > edge_count()) throw std::out_of_range("no edge with label " + std::to_string(label));
    return edges_[static_cast<std::size_t>(label - 1)];
}

bool Graph::adjacent(int label_a, int label_b) const {
    if (label_a == label_b) return false;
    const auto [a0, a1] = edge(label_a);
    const auto [b0, b1] = edge(label_b);
    return a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1;
}

VarSet Graph::neighbours(int label) const {
    VarSet out;
    for (int other = 1; other <= edge_count(); ++other)
        if (adjacent(label, other)) out = out.with(other);
    return out;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("a path needs at least one edge");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n + 1, std::move(edges));
}

SimplicialComplex SimplicialComplex::void_complex(int vertex_count) { return {vertex_count, {}}; }

SimplicialComplex SimplicialComplex::irrelevant(int vertex_count) { return {vertex_count, {VarSet{}}}; }

SimplicialComplex SimplicialComplex::from_faces(int vertex_count, std::vector<VarSet> faces) {
    if (vertex_count < 0 || vertex_count > VarSet::kMaxIndex)
        throw std::invalid_argument("vertex count outside [0, 64]");
    for (VarSet f : faces)
        if (f.max_index() > vertex_count) throw std::invalid_argument("face " + to_set_string(f) + " out of range");
    std::sort(faces.begin(), faces.end(), [](VarSet a, VarSet b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<VarSet> facets;
    for (VarSet f : faces)
        if (std::none_of(facets.begin(), facets.end(), [&](VarSet g) { return f.is_subset_of(g); }))
            facets.push_back(f);
    std::sort(facets.begin(), facets.end());
    return {vertex_count, std::move(facets)};
}

int SimplicialComplex::dimension() const {
    if (is_void()) throw std::domain_error("the void complex has no dimension");
    int d = -1;
    for (VarSet f : facets_) d = std::max(d, f.size() - 1);
    return d;
}

bool SimplicialComplex::contains_face(VarSet face) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](VarSet f) { return face.is_subset_of(f); });
}

VarSet SimplicialComplex::vertices() const {
    VarSet out;
    for (VarSet f : facets_) out = out | f;
    return out;
}

SimplicialComplex matching_complex(const Graph& g) {
    const int m = g.edge_count();
    if (m == 0) throw std::invalid_argument("the matching complex needs at least one edge");
    std::vector<VarSet> neighbours;
    for (int e = 1; e <= m; ++e) neighbours.push_back(g.neighbours(e));

    std::vector<VarSet> maximal;
    auto extend = [&](auto&& self, int e, VarSet chosen, VarSet blocked) -> void {
        if (e > m) {
            // Maximal: every edge is chosen or touches a chosen edge.
            if ((chosen | blocked) == VarSet::interval(1, m)) maximal.push_back(chosen);
            return;
        }
        if (!blocked.contains(e)) self(self, e + 1, chosen.with(e), blocked | neighbours[e - 1]);
        self(self, e + 1, chosen, blocked);
    };
    extend(extend, 1, VarSet{}, VarSet{});
    return SimplicialComplex::from_faces(m, std::move(maximal));
}

MonomialIdeal facet_ideal(const SimplicialComplex& complex) {
    if (complex.is_void()) throw std::domain_error("the void complex has no facet ideal");
    return MonomialIdeal::generated_by(complex.vertex_count(),
                                       {complex.facets().begin(), complex.facets().end()});
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
    if (complex.is_void()) throw std::domain_error("the void complex has no Stanley-Reisner ideal");
    // A set is a non-face exactly when it meets the complement of every facet.
    const VarSet all = VarSet::interval(1, complex.vertex_count());
    std::vector<VarSet> complements;
    for (VarSet f : complex.facets()) complements.push_back(all - f);
    return MonomialIdeal::generated_by(complex.vertex_count(), minimal_transversals(complements));
}

SimplicialComplex sr_complex_of_ideal(const MonomialIdeal& ideal) {
    if (!ideal.is_proper()) throw std::domain_error("the Stanley-Reisner complex needs a proper nonzero ideal");
    // Maximal faces are complements of minimal vertex covers of G(I).
    const VarSet all = VarSet::interval(1, ideal.nvars());
    std::vector<VarSet> facets;
    for (VarSet cover : minimal_transversals(ideal.generators())) facets.push_back(all - cover);
    return SimplicialComplex::from_faces(ideal.nvars(), std::move(facets));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, VarSet subset) {
    if (subset.max_index() > complex.vertex_count())
        throw std::invalid_argument("restriction set " + to_set_string(subset) + " is not a set of vertices");
    if (complex.is_void()) return complex;
    std::vector<VarSet> faces;
    faces.reserve(complex.facets().size());
    for (VarSet f : complex.facets()) faces.push_back(f & subset);
    return SimplicialComplex::from_faces(complex.vertex_count(), std::move(faces));
}

std::vector<std::vector<VarSet>> faces_by_dimension(const SimplicialComplex& complex) {
    if (complex.is_void()) return {};
    const int dim = complex.dimension();
    std::vector<std::unordered_set<std::uint64_t>> seen(static_cast<std::size_t>(dim + 2));
    for (VarSet f : complex.facets())
        for_each_subset(f, [&](VarSet s) { seen[static_cast<std::size_t>(s.size())].insert(s.bits()); });

    std::vector<std::vector<VarSet>> out(seen.size());
    for (std::size_t k = 0; k < seen.size(); ++k) {
        out[k].reserve(seen[k].size());
        for (std::uint64_t bits : seen[k]) out[k].push_back(VarSet::from_bits(bits));
        std::sort(out[k].begin(), out[k].end());
    }
    return out;
}

std::uint64_t HomologyRanks::rank(int d) const {
    const int idx = d + 1;
    if (idx < 0 || idx >= static_cast<int>(ranks.size())) return 0;
    return ranks[static_cast<std::size_t>(idx)];
}

bool HomologyRanks::all_zero() const {
    return std::all_of(ranks.begin(), ranks.end(), [](std::uint64_t r) { return r == 0; });
}

HomologyRanks reduced_homology_ranks(const SimplicialComplex& complex, Field field) {
    HomologyRanks out{field, {}};
    if (complex.is_void()) return out;

    const auto faces = faces_by_dimension(complex);
    const std::size_t levels = faces.size();  // dimensions -1..dim

    // boundary_rank[k] is the rank of the map from level k to level k-1.
    std::vector<std::size_t> boundary_rank(levels + 1, 0);
    for (std::size_t k = 1; k < levels; ++k) {
        const auto& lower = faces[k - 1];
        std::vector<SparseRow> rows;
        rows.reserve(faces[k].size());
        for (VarSet face : faces[k]) {
            SparseRow row;
            std::int64_t sign = 1;
            for (int v : face.indices()) {
                const VarSet facet_of_face = face.without(v);
                const auto it = std::lower_bound(lower.begin(), lower.end(), facet_of_face);
                row.push_back({static_cast<std::uint32_t>(it - lower.begin()), sign});
                sign = -sign;
            }
            std::sort(row.begin(), row.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
            rows.push_back(std::move(row));
        }
        boundary_rank[k] = exact_rank(rows, field);
    }

    out.ranks.resize(levels);
    for (std::size_t k = 0; k < levels; ++k)
        out.ranks[k] = faces[k].size() - boundary_rank[k] - boundary_rank[k + 1];
    return out;
}

bool is_cone(const SimplicialComplex& complex) {
    if (complex.is_void()) return false;
    VarSet common = complex.facets().front();
    for (VarSet f : complex.facets()) common = common & f;
    return !common.empty();
}

} // namespace lineideal
