#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sperner {

/// Dense matrix over F2, rows packed into 64-bit words.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool get(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1u; }
    void set(std::size_t r, std::size_t c) { row(r)[c / 64] |= std::uint64_t{1} << (c % 64); }
    void flip(std::size_t r, std::size_t c) { row(r)[c / 64] ^= std::uint64_t{1} << (c % 64); }

    std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * words_, words_}; }
    std::span<const std::uint64_t> row(std::size_t r) const { return {data_.data() + r * words_, words_}; }

    /// Bytes a rows x cols matrix would occupy.
    static std::size_t storage_bytes(std::size_t rows, std::size_t cols);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Rank by Gaussian elimination; the row updates below each pivot run in parallel.
std::size_t f2_rank(BitMatrix m);
/// Same elimination, single-threaded. Reference for f2_rank.
std::size_t f2_rank_serial(BitMatrix m);

} // namespace sperner
