#include "lineideal/var_set.hpp"

#include <stdexcept>

namespace lineideal {

namespace {

std::uint64_t bit_for(int index) {
    if (index < 1 || index > VarSet::kMaxIndex)
        throw std::out_of_range("variable index " + std::to_string(index) + " outside [1, 64]");
    return std::uint64_t{1} << (index - 1);
}

} // namespace

VarSet::VarSet(std::initializer_list<int> indices) {
    for (int i : indices) bits_ |= bit_for(i);
}

VarSet::VarSet(const std::vector<int>& indices) {
    for (int i : indices) bits_ |= bit_for(i);
}

VarSet VarSet::single(int index) { return from_bits(bit_for(index)); }

VarSet VarSet::interval(int first, int last) {
    VarSet s;
    for (int i = first; i <= last; ++i) s.bits_ |= bit_for(i);
    return s;
}

bool VarSet::contains(int index) const {
    if (index < 1 || index > kMaxIndex) return false;
    return (bits_ >> (index - 1)) & 1U;
}

std::vector<int> VarSet::indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
}

VarSet VarSet::with(int index) const { return from_bits(bits_ | bit_for(index)); }

VarSet VarSet::without(int index) const { return from_bits(bits_ & ~bit_for(index)); }

VarSet VarSet::shifted(int offset) const {
    VarSet out;
    for (int i : indices()) out.bits_ |= bit_for(i + offset);
    return out;
}

std::string to_monomial_string(Monomial m) {
    if (m.empty()) return "1";
    std::string out;
    for (int i : m.indices()) out += "x" + std::to_string(i);
    return out;
}

std::string to_set_string(VarSet s) {
    std::string out = "{";
    bool first = true;
    for (int i : s.indices()) {
        if (!first) out += ", ";
        out += "x" + std::to_string(i);
        first = false;
    }
    return out + "}";
}

} // namespace lineideal
