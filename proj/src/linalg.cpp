#include "shimin/linalg.hpp"

#include <cstddef>
#include <utility>

namespace shimin::linalg {

std::optional<RationalVector> solve(RationalMatrix a, RationalVector b)
{
    const std::size_t rows = a.size();
    if (rows != b.size() || rows == 0) return std::nullopt;
    const std::size_t cols = a.front().size();

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) return std::nullopt; // dependent column
        std::swap(a[sel], a[pivot_row]);
        std::swap(b[sel], b[pivot_row]);

        const Rational inv = 1 / a[pivot_row][col];
        for (std::size_t k = col; k < cols; ++k) a[pivot_row][k] *= inv;
        b[pivot_row] *= inv;

        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || a[r][col] == 0) continue;
            const Rational factor = a[r][col];
            for (std::size_t k = col; k < cols; ++k) a[r][k] -= factor * a[pivot_row][k];
            b[r] -= factor * b[pivot_row];
        }
        ++pivot_row;
    }
    // leftover rows must be 0 = 0
    for (std::size_t r = pivot_row; r < rows; ++r) {
        if (b[r] != 0) return std::nullopt;
    }
    RationalVector x(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(cols));
    return x;
}

mpz_class floor(const Rational& q)
{
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

} // namespace shimin::linalg
