#ifndef LINEIDEAL_TESTS_RANDOM_IDEALS_HPP
#define LINEIDEAL_TESTS_RANDOM_IDEALS_HPP

#include <random>
#include <vector>

#include "lineideal/monomial_ideal.hpp"

namespace lineideal::testing {

using Rng = std::mt19937_64;

/// A nonempty random subset of {first, ..., last}.
inline VarSet random_nonempty_subset(Rng& rng, int first, int last, double density = 0.4) {
    std::bernoulli_distribution coin(density);
    std::uniform_int_distribution<int> pick(first, last);
    VarSet s;
    for (int v = first; v <= last; ++v)
        if (coin(rng)) s = s.with(v);
    if (s.empty()) s = s.with(pick(rng));
    return s;
}

/// Raw generator list (not minimalised), possibly with repeats.
inline std::vector<Monomial> random_generators(Rng& rng, int first, int last, int max_gens) {
    std::uniform_int_distribution<int> count(1, max_gens);
    std::vector<Monomial> gens;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) gens.push_back(random_nonempty_subset(rng, first, last));
    return gens;
}

/// A proper nonzero squarefree ideal in k[x_1..x_nvars] whose generators
/// use only x_first..x_last.
inline MonomialIdeal random_ideal(Rng& rng, int nvars, int first, int last, int max_gens) {
    return MonomialIdeal::generated_by(nvars, random_generators(rng, first, last, max_gens));
}

inline MonomialIdeal random_ideal(Rng& rng, int nvars, int max_gens) {
    return random_ideal(rng, nvars, 1, nvars, max_gens);
}

} // namespace lineideal::testing

#endif
