#ifndef LINEIDEAL_LINE_FORMULAS_HPP
#define LINEIDEAL_LINE_FORMULAS_HPP

#include <optional>
#include <string>
#include <vector>

#include "lineideal/betti.hpp"
#include "lineideal/monomial_ideal.hpp"
#include "lineideal/var_set.hpp"

namespace lineideal {

/// n = 3p + d with d in {0, 1, 2}.
struct Residue {
    int p;
    int d;
};
Residue residue_mod3(int n);

/// Facets of the matching complex of the path with n edges, with every index
/// raised by `offset` (the path on x_{offset+1}..x_{offset+n}). Built from
/// the gap description: first index in {1,2}, last in {n-1,n}, consecutive
/// gaps 2 or 3. Sorted lexicographically.
std::vector<VarSet> line_facets(int n, int offset = 0);

/// F(L_n) in k[x_1..x_n]. For n in {-1, 0} this is the unit ideal.
MonomialIdeal line_facet_ideal(int n);

/// F(L'_{n-k}): the facet ideal of the path on x_{offset+1}..x_{offset+length}
/// inside k[x_1..x_nvars]; the unit ideal when length is -1 or 0.
MonomialIdeal shifted_line_facet_ideal(int length, int offset, int nvars);

/// F(L_n) = J + K with J = x1 F(L'_{n-2}) and K = x2 F(L'_{n-3}), and for
/// n >= 5 the auxiliary ideals P = x4 F(L'_{n-5}) + x3x5 F(L'_{n-6}),
/// M = x4 F(L'_{n-5}), N = x3x5 F(L'_{n-6}).
struct LineDecomposition {
    int n;
    MonomialIdeal j;
    MonomialIdeal k;
    std::optional<MonomialIdeal> p;
    std::optional<MonomialIdeal> m;
    std::optional<MonomialIdeal> n_part;
};

/// Throws std::invalid_argument for n < 2.
LineDecomposition recursion_split(int n);

/// P_n; throws std::invalid_argument for n < 5.
MonomialIdeal p_ideal(int n);

enum class CoverKind { A, APrime, B, BPrime, C, D };

/// "A_2", "A'_1", "B_1", "B'_1", "C_{2,1}", "D".
struct CoverMember {
    CoverKind kind;
    int first_param;   // i, j or k; unused for D
    int second_param;  // l for C, otherwise 0
    VarSet vars;

    [[nodiscard]] std::string label() const;
    friend bool operator==(const CoverMember&, const CoverMember&) = default;
};

struct CoverFamily {
    int n;
    std::vector<CoverMember> members;

    /// Member vertex sets, sorted lexicographically.
    [[nodiscard]] std::vector<VarSet> vertex_sets() const;
};

/// The named family of minimal vertex covers of the matching complex of L_n:
/// listed explicitly for n <= 7, by the parameterised kinds for n >= 8.
CoverFamily omega(int n);

/// pd, reg, depth, height and bight of F(L_n) from the closed forms. At
/// n = 2 the height is 2 and carries a Discrepancy against the tabulated
/// reference value 1.
InvariantReport closed_form_invariants(int n);

/// Height as tabulated in the reference closed forms; it differs from the
/// true height only at n = 2.
int reference_height(int n);

} // namespace lineideal

#endif
