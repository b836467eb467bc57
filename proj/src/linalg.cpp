#include "krpoly/linalg.hpp"

#include <stdexcept>

namespace krpoly {

std::size_t matrix_rank(RatMatrix m) {
    std::size_t rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != pivot_row) {
            for (std::size_t j = col; j < m.cols; ++j)
                std::swap(m.at(sel, j), m.at(pivot_row, j));
        }
        const Rational inv_pivot = Rational(1) / m.at(pivot_row, col);
        for (std::size_t i = pivot_row + 1; i < m.rows; ++i) {
            if (m.at(i, col) == 0) continue;
            const Rational factor = m.at(i, col) * inv_pivot;
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) -= factor * m.at(pivot_row, j);
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

std::size_t affine_rank(const std::vector<RatVector>& points) {
    if (points.empty()) throw std::invalid_argument("affine_rank: empty point list");
    const std::size_t dim = points[0].size();
    for (const auto& p : points)
        if (p.size() != dim) throw std::invalid_argument("affine_rank: ragged point list");
    if (points.size() == 1) return 0;

    RatMatrix diffs(points.size() - 1, dim);
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j)
            diffs.at(i - 1, j) = points[i][j] - points[0][j];
    return matrix_rank(std::move(diffs));
}

bool psd_check(const RatMatrix& s) {
    if (!s.is_symmetric()) throw std::invalid_argument("psd_check: matrix is not symmetric");

    RatMatrix m = s;
    const std::size_t n = m.rows;
    std::vector<bool> active(n, true);

    std::size_t remaining = n;
    while (remaining > 0) {
        std::size_t pivot = n;
        for (std::size_t k = 0; k < n; ++k) {
            if (!active[k]) continue;
            if (m.at(k, k) < 0) return false;
            if (pivot == n && m.at(k, k) > 0) pivot = k;
        }
        if (pivot == n) {
            // Diagonal is entirely zero; PSD forces the rest to vanish too
            // (a nonzero off-diagonal entry gives a negative 2x2 minor).
            for (std::size_t i = 0; i < n; ++i) {
                if (!active[i]) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (active[j] && m.at(i, j) != 0) return false;
            }
            return true;
        }
        const Rational inv_pivot = Rational(1) / m.at(pivot, pivot);
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || i == pivot || m.at(i, pivot) == 0) continue;
            const Rational factor = m.at(i, pivot) * inv_pivot;
            for (std::size_t j = 0; j < n; ++j) {
                if (!active[j] || j == pivot) continue;
                m.at(i, j) -= factor * m.at(pivot, j);
            }
        }
        active[pivot] = false;
        --remaining;
    }
    return true;
}

}  // namespace krpoly
