#include "doctest.h"
#include "qplane/gauss.hpp"

#include <functional>

using namespace qplane;

namespace {

// plain 2D trapezoid quadrature on [-R,R]^2; spectrally accurate for smooth
// rapidly decaying integrands, the independent oracle for the engine
cplx quad2(const std::function<cplx(double, double)>& f, double R, int n) {
    double h = 2.0 * R / n;
    cplx s = 0.0;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            double w = ((i == 0 || i == n) ? 0.5 : 1.0) * ((j == 0 || j == n) ? 0.5 : 1.0);
            s += w * f(-R + i * h, -R + j * h);
        }
    return s * h * h;
}

}  // namespace

TEST_CASE("plain Gaussian integral") {
    // iint e^{-x^2 - 2y^2} = pi / sqrt(2)
    QuadExp q = QuadExp::one();
    q.add_quad(0, 0, -1.0);
    q.add_quad(1, 1, -2.0);
    cplx v = qe_value(qe_integrate(qe_integrate(q, 0), 1));
    CHECK(std::abs(v - kPi / std::sqrt(2.0)) < 1e-13);
}

TEST_CASE("polynomial moments against quadrature") {
    // iint x^2 y^4 e^{-x^2 - 2y^2 + 0.3x + (0.2+0.5i) y}
    QuadExp q = QuadExp::one();
    q.add_quad(0, 0, -1.0);
    q.add_quad(1, 1, -2.0);
    q.add_lin(0, 0.3);
    q.add_lin(1, cplx(0.2, 0.5));
    q.mul_mono(0, 2);
    q.mul_mono(1, 4);
    cplx v = qe_value(qe_integrate(qe_integrate(q, 0), 1));
    cplx want = quad2(
        [](double x, double y) {
            return x * x * std::pow(y, 4) *
                   std::exp(-x * x - 2.0 * y * y + 0.3 * x + cplx(0.2, 0.5) * y);
        },
        9.0, 600);
    CHECK(std::abs(v - want) < 1e-10 * (1.0 + std::abs(want)));
}

TEST_CASE("oscillatory coupling and sequential integration") {
    // iint e^{-x^2 - y^2 + 2i x y} dx dy = pi / sqrt(2) (complete the square)
    QuadExp q = QuadExp::one();
    q.add_quad(0, 0, -1.0);
    q.add_quad(1, 1, -1.0);
    q.add_quad(0, 1, cplx(0, 2.0));
    cplx v = qe_value(qe_integrate(qe_integrate(q, 0), 1));
    cplx want = quad2(
        [](double x, double y) {
            return std::exp(-x * x - y * y + cplx(0, 2.0) * x * y);
        },
        9.0, 600);
    CHECK(std::abs(v - want) < 1e-10 * (1.0 + std::abs(want)));
}

TEST_CASE("divergent direction is rejected") {
    QuadExp q = QuadExp::one();
    q.add_quad(0, 0, 0.2);  // positive quadratic coefficient: not integrable
    CHECK_THROWS_AS(qe_integrate(q, 0), std::domain_error);
}
