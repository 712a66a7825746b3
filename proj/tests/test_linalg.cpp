#include <doctest.h>

#include <complex>

#include "wgqed/linalg.hpp"
#include "wgqed/types.hpp"

using namespace wgqed;
using linalg::ComplexMatrix;

namespace {

ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t n = a.size();
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c(i, j) += a(i, k) * b(k, j);
    return c;
}

}  // namespace

TEST_CASE("2x2 complex inverse matches the analytic adjugate") {
    ComplexMatrix m(2);
    m(0, 0) = {1.0, 2.0};
    m(0, 1) = {0.5, -1.0};
    m(1, 0) = {0.5, -1.0};
    m(1, 1) = {3.0, 0.25};
    const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const ComplexMatrix inv = linalg::invert(m);
    CHECK(std::abs(inv(0, 0) - m(1, 1) / det) < 1e-14);
    CHECK(std::abs(inv(0, 1) + m(0, 1) / det) < 1e-14);
    CHECK(std::abs(inv(1, 1) - m(0, 0) / det) < 1e-14);
}

TEST_CASE("inverse times matrix is the identity for a 5x5 case") {
    ComplexMatrix m(5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            m(i, j) = Complex(double(i + 2 * j + 1), double(i) - 0.3 * double(j));
    for (std::size_t i = 0; i < 5; ++i) m(i, i) += Complex(5.0, 7.0);
    const ComplexMatrix prod = mul(m, linalg::invert(m));
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            CHECK(std::abs(prod(i, j) - (i == j ? 1.0 : 0.0)) < 1e-12);
}

TEST_CASE("singular matrix raises") {
    ComplexMatrix m(2);
    m(0, 0) = {1.0, 0.0};
    m(0, 1) = {2.0, 0.0};
    m(1, 0) = {0.5, 0.0};
    m(1, 1) = {1.0, 0.0};
    CHECK_THROWS_AS((void)linalg::invert(m), NumericalError);
}

TEST_CASE("condition estimate grows as rows align") {
    ComplexMatrix good(2);
    good(0, 0) = 1.0;
    good(1, 1) = 1.0;
    CHECK(linalg::condition_estimate(good, linalg::invert(good)) ==
          doctest::Approx(1.0));

    ComplexMatrix bad(2);
    bad(0, 0) = 1.0;
    bad(0, 1) = 1.0;
    bad(1, 0) = 1.0;
    bad(1, 1) = 1.0 + 1e-10;
    CHECK(linalg::condition_estimate(bad, linalg::invert(bad)) > 1e9);
}
