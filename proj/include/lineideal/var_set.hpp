#ifndef LINEIDEAL_VAR_SET_HPP
#define LINEIDEAL_VAR_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace lineideal {

/// A finite set of 1-based variable indices, stored as a 64-bit mask.
///
/// The same value type plays three roles: a squarefree monomial (the product
/// of its variables, the empty set being 1), a face of a simplicial complex,
/// and a vertex cover. Ordering is lexicographic on the sorted index sequence,
/// so {1,3} < {1,3,5} < {1,4} < {2}.
class VarSet {
public:
    static constexpr int kMaxIndex = 64;

    constexpr VarSet() = default;
    VarSet(std::initializer_list<int> indices);
    explicit VarSet(const std::vector<int>& indices);

    static constexpr VarSet from_bits(std::uint64_t bits) {
        VarSet s;
        s.bits_ = bits;
        return s;
    }
    static VarSet single(int index);
    /// {first, first+1, ..., last}; empty when last < first.
    static VarSet interval(int first, int last);

    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr int size() const { return std::popcount(bits_); }
    [[nodiscard]] constexpr int degree() const { return size(); }
    [[nodiscard]] bool contains(int index) const;
    /// Largest index present, 0 for the empty set.
    [[nodiscard]] constexpr int max_index() const { return kMaxIndex - std::countl_zero(bits_); }
    [[nodiscard]] constexpr int min_index() const { return empty() ? 0 : std::countr_zero(bits_) + 1; }
    [[nodiscard]] std::vector<int> indices() const;

    [[nodiscard]] constexpr bool is_subset_of(VarSet other) const { return (bits_ & ~other.bits_) == 0; }
    /// Monomial divisibility: this | other.
    [[nodiscard]] constexpr bool divides(VarSet other) const { return is_subset_of(other); }
    [[nodiscard]] constexpr bool intersects(VarSet other) const { return (bits_ & other.bits_) != 0; }

    [[nodiscard]] VarSet with(int index) const;
    [[nodiscard]] VarSet without(int index) const;
    /// Every index moved up by offset; throws if an index leaves the range.
    [[nodiscard]] VarSet shifted(int offset) const;

    constexpr VarSet operator|(VarSet o) const { return from_bits(bits_ | o.bits_); }
    constexpr VarSet operator&(VarSet o) const { return from_bits(bits_ & o.bits_); }
    constexpr VarSet operator-(VarSet o) const { return from_bits(bits_ & ~o.bits_); }

    friend constexpr bool operator==(VarSet a, VarSet b) { return a.bits_ == b.bits_; }
    friend constexpr std::strong_ordering operator<=>(VarSet a, VarSet b) {
        const std::uint64_t diff = a.bits_ ^ b.bits_;
        if (diff == 0) return std::strong_ordering::equal;
        // Below the lowest differing index both sequences agree. The set that
        // holds that index is smaller unless the other one stops there.
        const std::uint64_t low = diff & (~diff + 1);
        const bool a_has = (a.bits_ & low) != 0;
        const VarSet& other = a_has ? b : a;
        const bool other_continues = (other.bits_ & ~(low | (low - 1))) != 0;
        const bool a_less = a_has == other_continues;
        return a_less ? std::strong_ordering::less : std::strong_ordering::greater;
    }

private:
    std::uint64_t bits_ = 0;
};

/// Squarefree monomials are identified with their supports.
using Monomial = VarSet;

/// "x1x3x5"; the empty monomial renders as "1".
std::string to_monomial_string(Monomial m);
/// "{x1, x3, x5}"; the empty set renders as "{}".
std::string to_set_string(VarSet s);

/// Every subset of `s`, in increasing bit-pattern order (empty set first).
template <class Fn>
void for_each_subset(VarSet s, Fn&& fn) {
    const std::uint64_t mask = s.bits();
    std::uint64_t sub = 0;
    while (true) {
        fn(VarSet::from_bits(sub));
        if (sub == mask) break;
        sub = (sub - mask) & mask;
    }
}

} // namespace lineideal

#endif
