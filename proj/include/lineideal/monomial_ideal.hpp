#ifndef LINEIDEAL_MONOMIAL_IDEAL_HPP
#define LINEIDEAL_MONOMIAL_IDEAL_HPP

#include <span>
#include <vector>

#include "lineideal/var_set.hpp"

namespace lineideal {

/// A squarefree monomial ideal in k[x_1, ..., x_nvars], held by its minimal
/// generators G(I).
///
/// Generators always form a divisibility antichain sorted lexicographically.
/// The zero ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
public:
    static MonomialIdeal zero(int nvars);
    static MonomialIdeal unit(int nvars);
    /// The ideal generated by `gens`, reduced to its minimal generators.
    static MonomialIdeal generated_by(int nvars, std::vector<Monomial> gens);

    [[nodiscard]] int nvars() const { return nvars_; }
    [[nodiscard]] std::span<const Monomial> generators() const { return gens_; }
    [[nodiscard]] std::size_t size() const { return gens_.size(); }

    [[nodiscard]] bool is_zero() const { return gens_.empty(); }
    [[nodiscard]] bool is_unit() const { return gens_.size() == 1 && gens_.front().empty(); }
    [[nodiscard]] bool is_proper() const { return !is_zero() && !is_unit(); }

    /// Whether the squarefree monomial `m` lies in the ideal.
    [[nodiscard]] bool contains(Monomial m) const;
    /// supp(I): union of the supports of the minimal generators.
    [[nodiscard]] VarSet support() const;
    /// The same generators viewed in a polynomial ring with more variables.
    [[nodiscard]] MonomialIdeal with_nvars(int nvars) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars), gens_(std::move(gens)) {}

    int nvars_ = 0;
    std::vector<Monomial> gens_;
};

/// G(I) for the ideal generated by `gens`. Throws std::out_of_range when a
/// generator uses an index above nvars.
MonomialIdeal minimalize(int nvars, std::vector<Monomial> gens);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// u * I. Throws std::domain_error if some u*g would not be squarefree.
MonomialIdeal scale(Monomial u, const MonomialIdeal& ideal);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// I : u, valid because both sides are squarefree.
MonomialIdeal colon(const MonomialIdeal& ideal, Monomial u);

/// A minimal monomial prime (x_i : i in vars) over a squarefree ideal.
struct PrimeComponent {
    VarSet vars;

    [[nodiscard]] int height() const { return vars.size(); }
    [[nodiscard]] MonomialIdeal as_ideal(int nvars) const;

    friend bool operator==(const PrimeComponent&, const PrimeComponent&) = default;
    friend auto operator<=>(const PrimeComponent&, const PrimeComponent&) = default;
};

/// All inclusion-minimal sets meeting every edge, sorted lexicographically.
/// No edges yields the single empty transversal; an empty edge yields none.
std::vector<VarSet> minimal_transversals(std::span<const VarSet> edges);

/// Minimal primes of a proper squarefree ideal (its minimal vertex covers).
/// Throws std::domain_error for the zero or unit ideal.
std::vector<PrimeComponent> irreducible_decomposition(const MonomialIdeal& ideal);

} // namespace lineideal

#endif
