#ifndef LINEIDEAL_EXACT_RANK_HPP
#define LINEIDEAL_EXACT_RANK_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "lineideal/field.hpp"

namespace lineideal {

struct SparseEntry {
    std::uint32_t col;
    std::int64_t value;
};

/// A matrix row: entries strictly increasing in `col`, no zero values.
using SparseRow = std::vector<SparseEntry>;

/// Rank of the matrix whose rows are given, over `field`.
///
/// Over the rationals this is fraction-free integer elimination: rows are
/// reduced against stored pivot rows by cross-multiplication and kept
/// primitive (content divided out). Arithmetic is checked 64-bit; on
/// overflow the whole computation restarts with GMP integers.
std::size_t exact_rank(std::span<const SparseRow> rows, Field field = Field::rationals());

/// Same as exact_rank over the rationals, but always on GMP integers.
std::size_t exact_rank_bignum(std::span<const SparseRow> rows);

} // namespace lineideal

#endif
