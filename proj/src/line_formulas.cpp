#include "lineideal/line_formulas.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lineideal {

namespace {

// Gap-law facets of L_n on x_1..x_n, n >= 4.
void extend_facet(int n, VarSet current, int last, std::vector<VarSet>& out) {
    if (last >= n - 1) out.push_back(current);
    for (int gap : {2, 3}) {
        const int next = last + gap;
        if (next <= n) extend_facet(n, current.with(next), next, out);
    }
}

CoverMember member(CoverKind kind, int first, int second, std::initializer_list<int> vars) {
    return {kind, first, second, VarSet(vars)};
}

CoverMember a_member(int i) {
    if (i == 1) return {CoverKind::A, 1, 0, VarSet{1, 2}};
    return {CoverKind::A, i, 0, VarSet{i, i + 1, i + 2}};
}

CoverMember a_prime_member(int n) { return {CoverKind::APrime, 1, 0, VarSet{n - 1, n}}; }

CoverMember b_member(int j) {
    VarSet s;
    for (int l = 1; l <= j + 1; ++l) s = s.with(3 * l - 2);
    return {CoverKind::B, j, 0, s.with(3 * j + 2)};
}

CoverMember b_prime_member(int j, int n) {
    VarSet s;
    for (int l = 1; l <= j + 1; ++l) s = s.with(n - 3 * (l - 1));
    return {CoverKind::BPrime, j, 0, s.with(n - 3 * j - 1)};
}

CoverMember c_member(int k, int l) {
    VarSet s = VarSet{k, k + 3 * l + 2};
    for (int j = 1; j <= l + 1; ++j) s = s.with(k + 3 * j - 2);
    return {CoverKind::C, k, l, s};
}

CoverMember d_member(int p) {
    VarSet s;
    for (int j = 0; j <= p; ++j) s = s.with(3 * j + 1);
    return {CoverKind::D, 0, 0, s};
}

std::vector<CoverMember> listed_members(int n) {
    using K = CoverKind;
    switch (n) {
    case 1: return {member(K::D, 0, 0, {1})};
    case 2: return {member(K::A, 1, 0, {1, 2})};
    case 3: return {member(K::A, 1, 0, {1, 2}), member(K::APrime, 1, 0, {2, 3})};
    case 4: return {member(K::A, 1, 0, {1, 2}), member(K::APrime, 1, 0, {3, 4}), member(K::D, 0, 0, {1, 4})};
    case 5: return {member(K::A, 1, 0, {1, 2}), member(K::APrime, 1, 0, {4, 5}), member(K::A, 2, 0, {2, 3, 4})};
    case 6:
        return {member(K::A, 1, 0, {1, 2}),    member(K::APrime, 1, 0, {5, 6}), member(K::A, 2, 0, {2, 3, 4}),
                member(K::A, 3, 0, {3, 4, 5}), member(K::B, 1, 0, {1, 4, 5}),   member(K::BPrime, 1, 0, {2, 3, 6})};
    case 7:
        return {member(K::A, 1, 0, {1, 2}),      member(K::APrime, 1, 0, {6, 7}), member(K::A, 2, 0, {2, 3, 4}),
                member(K::A, 3, 0, {3, 4, 5}),   member(K::A, 4, 0, {4, 5, 6}),   member(K::B, 1, 0, {1, 4, 5}),
                member(K::BPrime, 1, 0, {3, 4, 7}), member(K::D, 0, 0, {1, 4, 7})};
    default: throw std::logic_error("no listed cover family for n = " + std::to_string(n));
    }
}

std::vector<CoverMember> parameterised_members(int n) {
    const auto [p, d] = residue_mod3(n);
    std::vector<CoverMember> out;
    for (int i = 1; i <= n - 3; ++i) out.push_back(a_member(i));
    out.push_back(a_prime_member(n));
    for (int j = 1; j <= p - 1; ++j) out.push_back(b_member(j));
    for (int j = 1; j <= p - 1; ++j) out.push_back(b_prime_member(j, n));
    const int l_max = d == 2 ? p - 1 : p - 2;
    for (int l = 1; l <= l_max; ++l)
        for (int k = 2; k <= n - 3 * (l + 1); ++k) out.push_back(c_member(k, l));
    if (d == 1) out.push_back(d_member(p));
    return out;
}

} // namespace

Residue residue_mod3(int n) { return {n / 3, n % 3}; }

std::vector<VarSet> line_facets(int n, int offset) {
    if (n < 1) throw std::invalid_argument("line_facets needs n >= 1");
    if (offset < 0) throw std::invalid_argument("negative offset");
    std::vector<VarSet> out;
    switch (n) {
    case 1: out = {VarSet{1}}; break;
    case 2: out = {VarSet{1}, VarSet{2}}; break;
    case 3: out = {VarSet{1, 3}, VarSet{2}}; break;
    default:
        extend_facet(n, VarSet{1}, 1, out);
        extend_facet(n, VarSet{2}, 2, out);
    }
    for (VarSet& f : out) f = f.shifted(offset);
    std::sort(out.begin(), out.end());
    return out;
}

MonomialIdeal shifted_line_facet_ideal(int length, int offset, int nvars) {
    if (length < -1) throw std::invalid_argument("path length below -1");
    if (length <= 0) return MonomialIdeal::unit(nvars);
    return MonomialIdeal::generated_by(nvars, line_facets(length, offset));
}

MonomialIdeal line_facet_ideal(int n) { return shifted_line_facet_ideal(n, 0, std::max(n, 0)); }

LineDecomposition recursion_split(int n) {
    if (n < 2) throw std::invalid_argument("recursion_split needs n >= 2");
    LineDecomposition out{
        n,
        scale(Monomial{1}, shifted_line_facet_ideal(n - 2, 2, n)),
        scale(Monomial{2}, shifted_line_facet_ideal(n - 3, 3, n)),
        std::nullopt,
        std::nullopt,
        std::nullopt,
    };
    if (n >= 5) {
        out.m = scale(Monomial{4}, shifted_line_facet_ideal(n - 5, 5, n));
        out.n_part = scale(Monomial{3, 5}, shifted_line_facet_ideal(n - 6, 6, n));
        out.p = sum(*out.m, *out.n_part);
    }
    return out;
}

MonomialIdeal p_ideal(int n) {
    if (n < 5) throw std::invalid_argument("P_n is defined for n >= 5");
    return *recursion_split(n).p;
}

std::string CoverMember::label() const {
    switch (kind) {
    case CoverKind::A: return "A_" + std::to_string(first_param);
    case CoverKind::APrime: return "A'_" + std::to_string(first_param);
    case CoverKind::B: return "B_" + std::to_string(first_param);
    case CoverKind::BPrime: return "B'_" + std::to_string(first_param);
    case CoverKind::C: return "C_{" + std::to_string(first_param) + "," + std::to_string(second_param) + "}";
    case CoverKind::D: return "D";
    }
    return "?";
}

std::vector<VarSet> CoverFamily::vertex_sets() const {
    std::vector<VarSet> out;
    out.reserve(members.size());
    for (const CoverMember& m : members) out.push_back(m.vars);
    std::sort(out.begin(), out.end());
    return out;
}

CoverFamily omega(int n) {
    if (n < 1) throw std::invalid_argument("omega needs n >= 1");
    return {n, n <= 7 ? listed_members(n) : parameterised_members(n)};
}

int reference_height(int n) {
    if (n < 1) throw std::invalid_argument("reference_height needs n >= 1");
    return n <= 2 ? 1 : 2;
}

InvariantReport closed_form_invariants(int n) {
    if (n < 1) throw std::invalid_argument("closed_form_invariants needs n >= 1");
    const auto [p, d] = residue_mod3(n);
    InvariantReport r;
    r.n = n;
    r.nvars = n;
    r.pd = d == 2 ? p + 1 : p;
    r.reg = n == 1 ? 1 : (d == 2 ? 2 * p + 1 : 2 * p);
    r.depth = d == 0 ? 2 * p : 2 * p + 1;
    r.bight = d == 2 ? p + 2 : p + 1;
    r.height = n == 1 ? 1 : 2;
    r.source = InvariantSource::closed_form;
    r.field = Field::rationals();
    if (reference_height(n) != r.height)
        r.flags.push_back({"height", reference_height(n), r.height,
                           "F(L_2) = (x1, x2) has the single minimal prime (x1, x2)"});
    return r;
}

} // namespace lineideal
