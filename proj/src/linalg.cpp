#include "wgqed/linalg.hpp"

#include <cmath>
#include <utility>

#include "wgqed/types.hpp"

namespace wgqed::linalg {

double ComplexMatrix::norm1() const {
    double best = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n_; ++i) s += std::abs((*this)(i, j));
        best = std::max(best, s);
    }
    return best;
}

ComplexMatrix invert(const ComplexMatrix& m) {
    const std::size_t n = m.size();
    ComplexMatrix a = m;
    ComplexMatrix inv(n);
    for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1.0;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(a(i, k)) > best) {
                best = std::abs(a(i, k));
                pivot = i;
            }
        }
        if (best == 0.0)
            throw NumericalError("singular matrix: zero pivot in elimination");
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(pivot, j));
                std::swap(inv(k, j), inv(pivot, j));
            }
        }
        const Complex d = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= d;
            inv(k, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const Complex f = a(i, k);
            if (f == Complex(0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

double condition_estimate(const ComplexMatrix& m, const ComplexMatrix& m_inv) {
    return m.norm1() * m_inv.norm1();
}

}  // namespace wgqed::linalg
