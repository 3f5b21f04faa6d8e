#include "sperner/f2.hpp"

#include <algorithm>
#include <utility>

namespace sperner {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

std::size_t BitMatrix::storage_bytes(std::size_t rows, std::size_t cols) { return rows * ((cols + 63) / 64) * 8; }

namespace {

template <bool Parallel>
std::size_t eliminate(BitMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t words = m.words_per_row();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && !m.get(pivot, col)) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            auto a = m.row(pivot), b = m.row(rank);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        const auto p = m.row(rank);
        const std::size_t w0 = col / 64;
        const auto first = static_cast<std::ptrdiff_t>(rank + 1);
        const auto last = static_cast<std::ptrdiff_t>(rows);
        if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
            for (std::ptrdiff_t r = first; r < last; ++r) {
                if (!m.get(r, col)) continue;
                auto target = m.row(r);
                for (std::size_t w = w0; w < words; ++w) target[w] ^= p[w];
            }
        } else {
            for (std::ptrdiff_t r = first; r < last; ++r) {
                if (!m.get(r, col)) continue;
                auto target = m.row(r);
                for (std::size_t w = w0; w < words; ++w) target[w] ^= p[w];
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace

std::size_t f2_rank(BitMatrix m) { return eliminate<true>(m); }

std::size_t f2_rank_serial(BitMatrix m) { return eliminate<false>(m); }

} // namespace sperner
