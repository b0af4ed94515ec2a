#include "doctest.h"
#include "qplane/grid.hpp"

using namespace qplane;

namespace {
const Context ctx = make_context(0.15, 0.5);
}

TEST_CASE("sampling and norms") {
    CHECK_THROWS_AS(check_grid_size(100), std::invalid_argument);
    Symbol f1 = approx_identity(1.0);
    GridFn2D g = grid_sample(f1, 8.0, 256);
    // boundary values are negligible for a unit Gaussian on [-8,8)
    double boundary = 0.0;
    for (int j = 0; j < g.N; ++j)
        boundary = std::max(boundary, std::abs(g.v[j]));  // first row: x1 = -8
    CHECK(boundary < 1e-80);
    // ||f_1||_L2 = sqrt(1/2)
    CHECK(grid_norm(g) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
    // linearity
    Symbol two = f1;
    two.scale(2.0);
    GridFn2D g2 = grid_sample(two, 8.0, 256);
    double lin = 0.0;
    for (size_t i = 0; i < g.v.size(); ++i) lin = std::max(lin, std::abs(g2.v[i] - 2.0 * g.v[i]));
    CHECK(lin < 1e-14);
}

TEST_CASE("spectral shift matches the exact complex shift") {
    Symbol a = symbol_term(0, 0, 1.3, 1.1, cplx(0.2, 0.3), cplx(-0.1, 0.2), 1.0);
    GridFn2D g = grid_sample(a, 10.0, 256);
    for (double d : {0.2, -0.35}) {
        GridFn2D via = grid_apply_expP(g, d, 1);
        GridFn2D exact = grid_sample(symbol_shift(a, cplx(0, -d), 0.0), 10.0, 256);
        CHECK(grid_residual(via, exact) < 1e-7);
    }
    GridFn2D id = grid_apply_expP(g, 0.0, 2);
    CHECK(grid_residual(id, g) < 1e-12);
}

TEST_CASE("overflow guard") {
    Symbol a = approx_identity(0.05);  // very wide: spectrum too slim for huge d
    GridFn2D g = grid_sample(a, 6.0, 64);
    CHECK_THROWS_AS(grid_apply_expP(g, 60.0, 1), std::runtime_error);
}

TEST_CASE("weyl quantization") {
    Rng rng(40);
    Symbol a = symbol_term(0, 0, 1.4, 1.2, cplx(0.1, 0.2), cplx(0.3, -0.1), cplx(0.7, 0.2));
    Symbol b = symbol_term(1, 0, 1.1, 1.6, cplx(-0.2, 0.1), cplx(0.1, 0.1), 1.0);
    CHECK(grid_weyl_product_residual(a, b, 10.0, 256, rng) < 1e-6);
    CHECK(grid_weyl_star_residual(a, 10.0, 256) < 1e-8);
    CHECK(grid_weyl_trace_residual(a, b, 10.0, 256) < 1e-8);
    // Op(f_eps)^2 corresponds to f_eps # f_eps (semigroup property on the grid)
    Symbol f1 = approx_identity(1.0);
    CHECK(grid_weyl_product_residual(f1, f1, 10.0, 256, rng) < 1e-6);
}

TEST_CASE("representation matrices") {
    OperatorMatrix X = grid_rep_rho(ctx, 1, 1, 'x', 10.0, 128);
    // diagonal and positive
    double off = 0.0;
    for (int i = 0; i < X.N; ++i)
        for (int j = 0; j < X.N; ++j)
            if (i != j) off = std::max(off, std::abs(X.m[size_t(i) * X.N + j]));
    CHECK(off == 0.0);
    CHECK(X.m[0].real() > 0.0);
    OperatorMatrix Xm = grid_rep_rho(ctx, -1, 1, 'x', 10.0, 128);
    CHECK(std::abs(Xm.m[5 * 128 + 5] + X.m[5 * 128 + 5]) < 1e-15);
    // commutation on a concentrated vector; a compact window keeps the
    // unbounded multiplier from amplifying the roundoff floor
    OperatorMatrix Xs = grid_rep_rho(ctx, 1, 1, 'x', 4.0, 64);
    OperatorMatrix Ys = grid_rep_rho(ctx, 1, 1, 'y', 4.0, 64);
    std::vector<cplx> v(64);
    for (int j = 0; j < 64; ++j) {
        double x = grid_point(4.0, 64, j);
        v[j] = std::exp(-3.0 * (x - 0.2) * (x - 0.2));
    }
    std::vector<cplx> xy = matvec(Xs, matvec(Ys, v)), yx = matvec(Ys, matvec(Xs, v));
    double num = 0.0, den = 0.0;
    for (int j = 0; j < 64; ++j) {
        num += std::norm(xy[j] - ctx.q * yx[j]);
        den += std::norm(xy[j]);
    }
    CHECK(std::sqrt(num / den) < 1e-6);
}

TEST_CASE("refinement shrinks the shift-route residual") {
    Symbol a = symbol_term(0, 0, 0.15, 0.18, cplx(0.1, 0.4), cplx(0.0, -0.3), 1.0);
    auto res = [&](double L, int N) {
        GridFn2D g = grid_sample(a, L, N);
        GridFn2D via = grid_apply_expP(g, 0.05, 1);
        GridFn2D exact = grid_sample(symbol_shift(a, cplx(0, -0.05), 0.0), L, N);
        return grid_residual(via, exact);
    };
    double coarse = res(10.0, 512), fine = res(14.0, 1024);
    CHECK(fine < coarse);
    CHECK(coarse > 1e-12);  // coarse error must be visible, not noise
}
