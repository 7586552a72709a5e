#ifndef LINEIDEAL_FIELD_HPP
#define LINEIDEAL_FIELD_HPP

#include <cstdint>
#include <string>

namespace lineideal {

/// Coefficient field for homology ranks: the rationals (characteristic 0)
/// or a prime field GF(p) with p < 2^31.
class Field {
public:
    constexpr Field() = default;

    static constexpr Field rationals() { return Field{}; }
    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static Field prime(std::uint32_t p);
    /// Accepts "0", "QQ", "Q" or a prime such as "2".
    static Field parse(const std::string& text);

    [[nodiscard]] constexpr std::uint32_t characteristic() const { return characteristic_; }
    [[nodiscard]] constexpr bool is_rational() const { return characteristic_ == 0; }
    /// "QQ" or "GF(p)".
    [[nodiscard]] std::string name() const;

    friend constexpr bool operator==(Field, Field) = default;

private:
    std::uint32_t characteristic_ = 0;
};

} // namespace lineideal

#endif
