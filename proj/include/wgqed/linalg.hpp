// Dense complex linear algebra for small scattering matrices (N <= ~16).

#pragma once

#include <complex>
#include <vector>

namespace wgqed::linalg {

using Complex = std::complex<double>;

/// Row-major square complex matrix.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {}

    std::size_t size() const { return n_; }
    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    double norm1() const;  ///< max absolute column sum

  private:
    std::size_t n_ = 0;
    std::vector<Complex> a_;
};

/// Inverse by Gauss-Jordan elimination with partial pivoting.
/// Throws NumericalError on a zero pivot.
ComplexMatrix invert(const ComplexMatrix& m);

/// 1-norm condition estimate ||A||_1 * ||A^-1||_1.
double condition_estimate(const ComplexMatrix& m, const ComplexMatrix& m_inv);

}  // namespace wgqed::linalg
