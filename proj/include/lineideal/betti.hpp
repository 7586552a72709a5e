#ifndef LINEIDEAL_BETTI_HPP
#define LINEIDEAL_BETTI_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lineideal/field.hpp"
#include "lineideal/monomial_ideal.hpp"

namespace lineideal {

/// Graded Betti numbers beta_{i,j}(I) of an ideal I, i >= 0.
///
/// Only nonzero entries are stored. The table of the quotient S/I is the
/// same data shifted by one homological step plus beta_{0,0}(S/I) = 1.
class BettiTable {
public:
    using Key = std::pair<int, int>;  // (i, j)

    BettiTable(int nvars, Field field, std::map<Key, std::uint64_t> ideal_entries);
    static BettiTable from_quotient(int nvars, Field field, const std::map<Key, std::uint64_t>& quotient_entries);

    [[nodiscard]] int nvars() const { return nvars_; }
    [[nodiscard]] Field field() const { return field_; }
    [[nodiscard]] const std::map<Key, std::uint64_t>& entries() const { return entries_; }
    [[nodiscard]] std::uint64_t at(int i, int j) const;
    /// beta_{i,j}(S/I).
    [[nodiscard]] std::map<Key, std::uint64_t> quotient_entries() const;

    /// max i with a nonzero entry. Throws std::domain_error on an empty table.
    [[nodiscard]] int projective_dimension() const;
    /// max j - i over nonzero entries. Throws std::domain_error on an empty table.
    [[nodiscard]] int regularity() const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    int nvars_;
    Field field_;
    std::map<Key, std::uint64_t> entries_;
};

struct BettiOptions {
    Field field = Field::rationals();
    /// Worker threads for the subset sweep; 0 means hardware concurrency.
    unsigned jobs = 0;
};

/// Hochster's formula on the Stanley-Reisner complex D of I:
/// beta_{i,j}(S/I) = sum over |W| = j of dim H~_{j-i-1}(D|_W).
/// All 2^nvars subsets W are visited. Throws std::domain_error unless I is
/// proper and nonzero.
BettiTable graded_betti(const MonomialIdeal& ideal, const BettiOptions& options = {});

int projective_dimension(const BettiTable& table);
int regularity(const BettiTable& table);

/// nvars - pd(I) (Auslander-Buchsbaum).
int depth(const MonomialIdeal& ideal, const BettiTable& table);
int depth(const MonomialIdeal& ideal, const BettiOptions& options = {});

/// Smallest / largest minimal prime.
int height(const MonomialIdeal& ideal);
int bight(const MonomialIdeal& ideal);

enum class InvariantSource { closed_form, hochster };

std::string to_string(InvariantSource source);

/// A value that differs from a reference table entry known to be misprinted.
struct Discrepancy {
    std::string invariant;
    int reference_value;
    int reported_value;
    std::string note;

    friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct InvariantReport {
    int n = 0;  // path length, or 0 when the ideal is not F(L_n)
    int nvars = 0;
    int pd = 0;
    int reg = 0;
    int depth = 0;
    int height = 0;
    int bight = 0;
    InvariantSource source = InvariantSource::hochster;
    Field field;
    std::vector<Discrepancy> flags;
    std::optional<BettiTable> betti;  // present for hochster reports
};

/// pd, reg and depth from the Betti table, height and bight from the
/// decomposition.
InvariantReport hochster_invariants(const MonomialIdeal& ideal, const BettiOptions& options = {});

} // namespace lineideal

#endif
