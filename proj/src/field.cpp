#include "lineideal/field.hpp"

#include <charconv>
#include <stdexcept>

namespace lineideal {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

Field Field::prime(std::uint32_t p) {
    if (p >= (std::uint32_t{1} << 31) || !is_prime(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
    Field f;
    f.characteristic_ = p;
    return f;
}

Field Field::parse(const std::string& text) {
    if (text == "QQ" || text == "Q" || text == "0") return rationals();
    std::uint32_t p = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, p);
    if (ec != std::errc{} || ptr != end) throw std::invalid_argument("unrecognised field '" + text + "'");
    return prime(p);
}

std::string Field::name() const {
    if (is_rational()) return "QQ";
    return "GF(" + std::to_string(characteristic_) + ")";
}

} // namespace lineideal
