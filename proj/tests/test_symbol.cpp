#include "doctest.h"
#include "qplane/functionals.hpp"
#include "qplane/rng.hpp"
#include "qplane/symbol.hpp"

#include <functional>

using namespace qplane;

namespace {

const Context ctx = make_context(0.15, 0.5);

using ldcplx = std::complex<long double>;

// independent extended-precision evaluator
ldcplx eval_ld(const Symbol& a, ldcplx z1, ldcplx z2) {
    ldcplx r = 0.0L;
    for (const auto& t : a.terms) {
        ldcplx p = ldcplx(t.coeff.real(), t.coeff.imag());
        for (int k = 0; k < t.n1; ++k) p *= z1;
        for (int k = 0; k < t.n2; ++k) p *= z2;
        ldcplx c1(t.c1.real(), t.c1.imag()), c2(t.c2.real(), t.c2.imag());
        ldcplx e1(t.eps1.real(), t.eps1.imag()), e2(t.eps2.real(), t.eps2.imag());
        ldcplx ka(t.kappa.real(), t.kappa.imag());
        r += p * std::exp(-e1 * z1 * z1 - e2 * z2 * z2 + ka * z1 * z2 + c1 * z1 + c2 * z2);
    }
    return r;
}

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

cplx quad1(const std::function<cplx(double)>& f, double R, int n) {
    double h = 2.0 * R / n;
    cplx s = 0.0;
    for (int i = 0; i <= n; ++i) s += ((i == 0 || i == n) ? 0.5 : 1.0) * f(-R + i * h);
    return s * h;
}

Symbol rand_sym(Rng& rng, int nterms, int maxdeg) {
    Symbol a;
    for (int k = 0; k < nterms; ++k) {
        SymbolTerm t;
        t.n1 = rng.uniform_int(0, maxdeg);
        t.n2 = rng.uniform_int(0, maxdeg);
        t.eps1 = rng.uniform(0.8, 2.2);
        t.eps2 = rng.uniform(0.8, 2.2);
        t.c1 = rng.uniform_cplx(1.0);
        t.c2 = rng.uniform_cplx(1.0);
        t.coeff = rng.uniform_cplx(1.0);
        a.terms.push_back(t);
    }
    a.canonicalize();
    return a;
}

}  // namespace

TEST_CASE("evaluation against extended precision") {
    Rng rng(10);
    for (int i = 0; i < 20; ++i) {
        Symbol a = rand_sym(rng, 3, 2);
        cplx z1 = rng.uniform_cplx(1.5), z2 = rng.uniform_cplx(1.5);
        ldcplx want = eval_ld(a, ldcplx(z1.real(), z1.imag()), ldcplx(z2.real(), z2.imag()));
        cplx got = symbol_eval(a, z1, z2);
        CHECK(std::abs(got - cplx(double(want.real()), double(want.imag()))) <
              1e-12 * (1.0 + std::abs(got)));
    }
    CHECK(std::abs(symbol_eval(approx_identity(1.0), 0, 0) - 1.0) < 1e-15);
    // x1 e^{-pi(x1^2+x2^2)} at (i, 0) equals i e^{pi}
    Symbol xg = symbol_mul_poly(approx_identity(1.0), 1, 0);
    CHECK(std::abs(symbol_eval(xg, cplx(0, 1), 0.0) - cplx(0, 1) * std::exp(kPi)) <
          1e-12 * std::exp(kPi));
}

TEST_CASE("shift is exact") {
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        Symbol a = rand_sym(rng, 2, 2);
        cplx t1 = rng.uniform_cplx(0.8), t2 = rng.uniform_cplx(0.8);
        Symbol s = symbol_shift(a, t1, t2);
        for (int p = 0; p < 5; ++p) {
            cplx z1 = rng.uniform_cplx(1.2), z2 = rng.uniform_cplx(1.2);
            CHECK(std::abs(symbol_eval(s, z1, z2) - symbol_eval(a, z1 + t1, z2 + t2)) <
                  1e-11 * (1.0 + std::abs(symbol_eval(a, z1 + t1, z2 + t2))));
        }
    }
    // completing the square: shift(e^{-pi x1^2}, beta i) = e^{pi beta^2} e^{-2 pi i beta x1} e^{-pi x1^2}
    double be = ctx.beta;
    Symbol g = symbol_term(0, 0, kPi, kPi, 0, 0, 1.0);
    Symbol s = symbol_shift(g, cplx(0, be), 0.0);
    Symbol want = symbol_term(0, 0, kPi, kPi, cplx(0, -2.0 * kPi * be), 0,
                              std::exp(kPi * be * be));
    CHECK(symbol_residual(s, want) < 1e-13);
}

TEST_CASE("integrals against quadrature") {
    CHECK(std::abs(symbol_plain_integral(symbol_pointwise_mul(approx_identity(1.0),
                                                              approx_identity(1.0))) -
                   0.5) < 1e-13);
    Rng rng(12);
    Symbol a = rand_sym(rng, 2, 2);
    cplx got = symbol_plain_integral(a);
    cplx want = quad2([&](double x, double y) { return symbol_eval(a, x, y); }, 9.0, 700);
    CHECK(std::abs(got - want) < 1e-9 * (1.0 + std::abs(want)));
    // weighted integral: h_0-type weight
    cplx w1 = 2.0 * kPi * ctx.alpha, w2 = 2.0 * kPi * ctx.beta;
    cplx gotw = symbol_weighted_integral(a, w1, w2);
    cplx wantw = quad2(
        [&](double x, double y) {
            return std::exp(w1 * x + w2 * y) * symbol_eval(a, x, y);
        },
        10.0, 800);
    CHECK(std::abs(gotw - wantw) < 1e-9 * (1.0 + std::abs(wantw)));
}

TEST_CASE("Fourier transform against quadrature") {
    Rng rng(13);
    Symbol a = rand_sym(rng, 2, 1);
    Symbol fa = symbol_fourier(a, false);
    for (auto [t1, t2] : std::vector<std::pair<double, double>>{{0, 0}, {0.4, -0.3}, {-0.7, 0.2}}) {
        cplx want = quad2(
            [&](double x, double y) {
                return symbol_eval(a, x, y) *
                       std::exp(cplx(0, -2.0 * kPi) * (t1 * x + t2 * y));
            },
            9.0, 700);
        CHECK(std::abs(symbol_eval(fa, t1, t2) - want) < 1e-9 * (1.0 + std::abs(want)));
    }
    CHECK(symbol_residual(symbol_fourier(symbol_fourier(a, false), true), a) < 1e-11);
    // self-dual Gaussian
    CHECK(symbol_residual(symbol_fourier(approx_identity(1.0), false), approx_identity(1.0)) <
          1e-13);
}

TEST_CASE("twisted product against the twisted-convolution oracle") {
    Rng rng(14);
    Symbol a = rand_sym(rng, 1, 1), b = rand_sym(rng, 1, 0);
    Symbol ab = symbol_twisted(a, b);
    Symbol f_ab = symbol_fourier(ab, false);
    Symbol fa = symbol_fourier(a, false), fb = symbol_fourier(b, false);
    for (auto [x1, x2] : std::vector<std::pair<double, double>>{{0, 0}, {0.5, -0.2}, {-0.3, 0.6}}) {
        cplx want = quad2(
            [&](double u1, double u2) {
                return symbol_eval(fa, u1, u2) * symbol_eval(fb, x1 - u1, x2 - u2) *
                       std::exp(cplx(0, kPi) * (x1 * u2 - x2 * u1));
            },
            9.0, 700);
        CHECK(std::abs(symbol_eval(f_ab, x1, x2) - want) < 1e-8 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("twisted product frozen value") {
    // completing the square in the defining integral by hand gives
    // f_1 # f_1 = (4/5) e^{-(8 pi / 5)(x1^2 + x2^2)}
    Symbol f1 = approx_identity(1.0);
    Symbol got = symbol_twisted(f1, f1);
    Symbol want = symbol_term(0, 0, 8.0 * kPi / 5.0, 8.0 * kPi / 5.0, 0.0, 0.0, 0.8);
    CHECK(symbol_residual(got, want) < 1e-13);
}

TEST_CASE("twisted product closure keeps the class") {
    Rng rng(15);
    for (int i = 0; i < 5; ++i) {
        Symbol a = rand_sym(rng, 2, 1), b = rand_sym(rng, 2, 1);
        Symbol ab = symbol_twisted(a, b);
        for (const auto& t : ab.terms) {
            CHECK(t.eps1.real() > 0.0);
            CHECK(t.eps2.real() > 0.0);
            CHECK(4.0 * t.eps1.real() * t.eps2.real() > t.kappa.real() * t.kappa.real());
        }
    }
}

TEST_CASE("involutions and natural product") {
    Rng rng(16);
    Symbol a = rand_sym(rng, 2, 1);
    // a^*(x) = conj(a(x)) on real points
    for (int p = 0; p < 5; ++p) {
        double x = rng.uniform(-2, 2), y = rng.uniform(-2, 2);
        CHECK(std::abs(symbol_eval(symbol_star(a), x, y) - std::conj(symbol_eval(a, x, y))) <
              1e-13);
    }
    CHECK(symbol_residual(symbol_star_t(ctx, symbol_star_t(ctx, a)), a) < 1e-12);
    // (i f_1)^* = -i f_1
    Symbol ia = approx_identity(1.0);
    ia.scale(cplx(0, 1));
    Symbol sa = symbol_star(ia);
    Symbol want = approx_identity(1.0);
    want.scale(cplx(0, -1));
    CHECK(symbol_residual(sa, want) < 1e-14);
    // 0 natural b = 0
    CHECK(symbol_natural(ctx, symbol_zero(), a).empty());
}

TEST_CASE("approx identity domain errors") {
    CHECK_THROWS_AS(approx_identity(0.0), std::invalid_argument);
    CHECK_THROWS_AS(approx_identity(-1.0), std::invalid_argument);
}

TEST_CASE("json round trip") {
    Rng rng(17);
    Symbol a = rand_sym(rng, 3, 2);
    Symbol b = symbol_from_json(symbol_to_json(a));
    CHECK(symbol_residual(a, b) < 1e-15);
    CHECK_THROWS(symbol_from_json("{"));
}

TEST_CASE("partial Fourier transform in the second slot") {
    Rng rng(19);
    Symbol a = rand_sym(rng, 2, 2);
    for (auto [x1, w] : std::vector<std::pair<double, double>>{{0.3, -0.4}, {-0.6, 0.2}}) {
        cplx got = symbol_partial_ft2(a, x1, w, true);
        cplx want = quad1(
            [&](double t) {
                return symbol_eval(a, x1, t) * std::exp(cplx(0, 2.0 * kPi) * w * t);
            },
            9.0, 4000);
        CHECK(std::abs(got - want) < 1e-9 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("symbol operators compose right-to-left") {
    Rng rng(18);
    Symbol a = rand_sym(rng, 2, 1);
    // e^{sQ} then e^{tP} differs from the other order by the commutation phase;
    // check against direct pointwise evaluation
    double s = 0.7, t = -0.4;
    SymbolOp op = op_compose(op_expQ(1, s), op_expP(1, t));
    Symbol got = symbolop_apply(op, a);
    cplx sh(0, -t / (2.0 * kPi));
    for (int p = 0; p < 4; ++p) {
        cplx z1 = rng.uniform_cplx(1.0), z2 = rng.uniform_cplx(1.0);
        cplx want = std::exp(s * z1) * symbol_eval(a, z1 + sh, z2);
        CHECK(std::abs(symbol_eval(got, z1, z2) - want) < 1e-11 * (1.0 + std::abs(want)));
    }
}
