#include "lineideal/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lineideal {

namespace {

void check_nvars(int nvars) {
    if (nvars < 0 || nvars > VarSet::kMaxIndex)
        throw std::out_of_range("variable count " + std::to_string(nvars) + " outside [0, 64]");
}

void check_in_range(int nvars, Monomial m) {
    if (m.max_index() > nvars)
        throw std::out_of_range("monomial " + to_monomial_string(m) + " uses a variable beyond x" +
                                std::to_string(nvars));
}

void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("ideals live in rings with " + std::to_string(a.nvars()) + " and " +
                                    std::to_string(b.nvars()) + " variables");
}

// Depth-first search for minimal transversals. Vertices in `forbidden` were
// already tried at an earlier branch of the same edge, so every set is
// visited at most once.
class TransversalSearch {
public:
    explicit TransversalSearch(std::span<const VarSet> edges) : edges_(edges.begin(), edges.end()) {}

    std::vector<VarSet> run() {
        branch(VarSet{}, VarSet{});
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    // Every chosen vertex must own an edge no other chosen vertex meets;
    // otherwise no superset can be minimal.
    [[nodiscard]] bool all_private(VarSet chosen) const {
        for (int v : chosen.indices()) {
            const VarSet others = chosen.without(v);
            const bool owns = std::any_of(edges_.begin(), edges_.end(), [&](VarSet e) {
                return e.contains(v) && !e.intersects(others);
            });
            if (!owns) return false;
        }
        return true;
    }

    void branch(VarSet chosen, VarSet forbidden) {
        const auto open = std::find_if(edges_.begin(), edges_.end(),
                                       [&](VarSet e) { return !e.intersects(chosen); });
        if (open == edges_.end()) {
            found_.push_back(chosen);
            return;
        }
        VarSet tried = forbidden;
        for (int v : (*open - forbidden).indices()) {
            const VarSet next = chosen.with(v);
            if (all_private(next)) branch(next, tried);
            tried = tried.with(v);
        }
    }

    std::vector<VarSet> edges_;
    std::vector<VarSet> found_;
};

} // namespace

MonomialIdeal MonomialIdeal::zero(int nvars) {
    check_nvars(nvars);
    return MonomialIdeal(nvars, {});
}

MonomialIdeal MonomialIdeal::unit(int nvars) {
    check_nvars(nvars);
    return MonomialIdeal(nvars, {Monomial{}});
}

MonomialIdeal MonomialIdeal::generated_by(int nvars, std::vector<Monomial> gens) {
    check_nvars(nvars);
    for (Monomial g : gens) check_in_range(nvars, g);

    std::sort(gens.begin(), gens.end(), [](Monomial a, Monomial b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::vector<Monomial> kept;
    for (Monomial g : gens) {
        const bool absorbed = std::any_of(kept.begin(), kept.end(), [&](Monomial k) { return k.divides(g); });
        if (!absorbed) kept.push_back(g);
    }
    std::sort(kept.begin(), kept.end());
    return MonomialIdeal(nvars, std::move(kept));
}

bool MonomialIdeal::contains(Monomial m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](Monomial g) { return g.divides(m); });
}

VarSet MonomialIdeal::support() const {
    VarSet s;
    for (Monomial g : gens_) s = s | g;
    return s;
}

MonomialIdeal MonomialIdeal::with_nvars(int nvars) const {
    return generated_by(nvars, gens_);
}

MonomialIdeal minimalize(int nvars, std::vector<Monomial> gens) {
    return MonomialIdeal::generated_by(nvars, std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    std::vector<Monomial> gens(a.generators().begin(), a.generators().end());
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return minimalize(a.nvars(), std::move(gens));
}

MonomialIdeal scale(Monomial u, const MonomialIdeal& ideal) {
    check_in_range(ideal.nvars(), u);
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (Monomial g : ideal.generators()) {
        if (g.intersects(u))
            throw std::domain_error(to_monomial_string(u) + " * " + to_monomial_string(g) + " is not squarefree");
        gens.push_back(g | u);
    }
    return minimalize(ideal.nvars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ring(a, b);
    std::vector<Monomial> gens;
    gens.reserve(a.size() * b.size());
    for (Monomial g : a.generators())
        for (Monomial h : b.generators()) gens.push_back(g | h);
    return minimalize(a.nvars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, Monomial u) {
    check_in_range(ideal.nvars(), u);
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (Monomial g : ideal.generators()) gens.push_back(g - u);
    return minimalize(ideal.nvars(), std::move(gens));
}

MonomialIdeal PrimeComponent::as_ideal(int nvars) const {
    std::vector<Monomial> gens;
    for (int i : vars.indices()) gens.push_back(Monomial::single(i));
    return MonomialIdeal::generated_by(nvars, std::move(gens));
}

std::vector<VarSet> minimal_transversals(std::span<const VarSet> edges) {
    if (std::any_of(edges.begin(), edges.end(), [](VarSet e) { return e.empty(); })) return {};
    return TransversalSearch(edges).run();
}

std::vector<PrimeComponent> irreducible_decomposition(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw std::domain_error("the zero ideal has no irreducible decomposition here");
    if (ideal.is_unit()) throw std::domain_error("the unit ideal has no minimal primes");
    std::vector<PrimeComponent> out;
    for (VarSet cover : minimal_transversals(ideal.generators())) out.push_back(PrimeComponent{cover});
    return out;
}

} // namespace lineideal
