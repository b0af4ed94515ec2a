#include "doctest.h"
#include "qplane/plane.hpp"
#include "qplane/rng.hpp"

using namespace qplane;

namespace {

const Context ctx = make_context(0.15, 0.5);

// Independent action oracle: recurse on the word x...x y...y using only the
// generator base cases and the comodule recursion
//   f |> (z w) = (f1 |> z)(f2 |> w)  with  Delta(E) = E(x)K + K^-1(x)E etc.
PlaneElement oracle_act_word(char g, int m, int n);

PlaneElement oracle_letter(char g, bool isx) {
    // base cases on letters
    PlaneElement X = plane_mono(1, 0), Y = plane_mono(0, 1);
    switch (g) {
        case 'E': return isx ? Y : plane_zero();
        case 'F': return isx ? plane_zero() : X;
        case '1': return isx ? plane_mono(1, 0, ctx.qpow(-0.5)) : Y;
        case '2': return isx ? X : plane_mono(0, 1, ctx.qpow(-0.5));
        case 'k':  // K = K1 K2^-1
            return isx ? plane_mono(1, 0, ctx.qpow(-0.5)) : plane_mono(0, 1, ctx.qpow(0.5));
        case 'K':  // K^-1
            return isx ? plane_mono(1, 0, ctx.qpow(0.5)) : plane_mono(0, 1, ctx.qpow(-0.5));
    }
    throw std::logic_error("oracle_letter");
}

// act on x^m y^n by splitting off the first letter
PlaneElement oracle_act_word(char g, int m, int n) {
    if (m + n == 0) return (g == 'E' || g == 'F') ? plane_zero() : plane_scalar(1.0);
    bool isx = m > 0;
    auto rest_for = [&](char gg) { return oracle_act_word(gg, isx ? m - 1 : m, isx ? n : n - 1); };
    switch (g) {
        case 'E':
            // E |> (l w) = (E|>l)(K|>w) + (K^-1|>l)(E|>w)
            return plane_add(plane_mul(ctx, oracle_letter('E', isx), rest_for('k')),
                             plane_mul(ctx, oracle_letter('K', isx), rest_for('E')));
        case 'F':
            return plane_add(plane_mul(ctx, oracle_letter('F', isx), rest_for('k')),
                             plane_mul(ctx, oracle_letter('K', isx), rest_for('F')));
        case '1':
        case '2':
        case 'k':
        case 'K':
            return plane_mul(ctx, oracle_letter(g, isx), rest_for(g));
    }
    throw std::logic_error("oracle_act_word");
}

}  // namespace

TEST_CASE("multiplication and involution") {
    CHECK(plane_residual(plane_mul(ctx, plane_mono(0, 1), plane_mono(1, 0)),
                         plane_mono(1, 1, 1.0 / ctx.q)) < 1e-15);
    CHECK(plane_residual(plane_mul(ctx, plane_mono(0, 2), plane_mono(3, 0)),
                         plane_mono(3, 2, cpow_int(ctx.q, -6))) < 1e-14);
    Rng rng(1);
    for (int i = 0; i < 20; ++i) {
        PlaneElement z = plane_mono(rng.uniform_int(0, 3), rng.uniform_int(0, 3),
                                    rng.uniform_cplx(1.0));
        CHECK(plane_residual(plane_mul(ctx, z, plane_scalar(1.0)), z) < 1e-15);
        CHECK(plane_residual(plane_involution(ctx, plane_involution(ctx, z)), z) < 1e-14);
    }
    // (xy)* = y x = q^-1 x y
    CHECK(plane_residual(plane_involution(ctx, plane_mono(1, 1)),
                         plane_mono(1, 1, 1.0 / ctx.q)) < 1e-15);
    // (c x)* = conj(c) x
    cplx c(0.4, -1.1);
    CHECK(plane_residual(plane_involution(ctx, plane_mono(1, 0, c)),
                         plane_mono(1, 0, std::conj(c))) < 1e-15);
}

TEST_CASE("action base cases and word-recursion oracle") {
    CHECK(plane_residual(plane_act(ctx, uq_gen_E(), plane_mono(1, 0)), plane_mono(0, 1)) < 1e-15);
    CHECK(plane_act(ctx, uq_gen_E(), plane_scalar(1.0)).empty());
    // F |> y^2 = q^{1/2}(1 + q^-2) x y
    CHECK(plane_residual(plane_act(ctx, uq_gen_F(), plane_mono(0, 2)),
                         plane_mono(1, 1, ctx.qpow(0.5) * (1.0 + ctx.qpow(-2.0)))) < 1e-14);
    // the closed forms against the independent comodule recursion
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; m + n <= 5; ++n) {
            PlaneElement z = plane_mono(m, n);
            CHECK(plane_residual(plane_act(ctx, uq_gen_E(), z), oracle_act_word('E', m, n)) < 1e-12);
            CHECK(plane_residual(plane_act(ctx, uq_gen_F(), z), oracle_act_word('F', m, n)) < 1e-12);
            CHECK(plane_residual(plane_act(ctx, uq_gen_K1(1), z), oracle_act_word('1', m, n)) < 1e-12);
            CHECK(plane_residual(plane_act(ctx, uq_gen_K2(1), z), oracle_act_word('2', m, n)) < 1e-12);
        }
    CHECK_THROWS_AS(plane_act(ctx, uq_gen_E(), plane_mono(-1, 0)), std::domain_error);
}

TEST_CASE("q-derivatives") {
    CHECK(plane_residual(plane_qderiv_x(ctx, plane_mono(1, 0)),
                         plane_scalar(ctx.qpow(0.5) * ctx.lambda)) < 1e-14);
    CHECK(plane_qderiv_x(ctx, plane_mono(0, 4)).empty());
    // both routes for Dq_y(xy): the U_q definition and the difference-quotient
    // closed form give q^{-1/2} lambda x
    PlaneElement got = plane_qderiv_y(ctx, plane_mono(1, 1));
    CHECK(plane_residual(got, plane_mono(1, 0, ctx.qpow(-0.5) * ctx.lambda)) < 1e-14);
    // closed form on monomials: Dq_x(x^m y^n) = q^{1/2} lambda [m]_{q^-2} q^{m+n-1} x^{m-1} y^n
    for (int m = 1; m <= 4; ++m)
        for (int n = 0; n <= 3; ++n) {
            cplx qm = (1.0 - ctx.qpow(-2.0 * m)) / (1.0 - ctx.qpow(-2.0));
            PlaneElement want = plane_mono(m - 1, n, ctx.qpow(0.5) * ctx.lambda * qm * ctx.qpow(m + n - 1));
            CHECK(plane_residual(plane_qderiv_x(ctx, plane_mono(m, n)), want) < 1e-13);
        }
}

TEST_CASE("differential calculus") {
    OneForm d = plane_differential(ctx, plane_mono(1, 0), Calculus::minus);
    CHECK(plane_residual(d.cx, plane_scalar(1.0)) < 1e-14);
    CHECK(d.cy.empty());
    // d-(y) via the commutator equals (q^2 - 1) x^2 y^-1 e1, i.e. dy * 1
    PlaneForm dy = plane_d(ctx, plane_mono(0, 1), Calculus::minus);
    CHECK(plane_form_residual(dy, plane_dy_form(ctx, Calculus::minus)) < 1e-14);
    OneForm dyb = plane_differential(ctx, plane_mono(0, 1), Calculus::minus);
    CHECK(dyb.cx.empty());
    CHECK(plane_residual(dyb.cy, plane_scalar(1.0)) < 1e-13);
    // partials of x^2 y: Gamma_- px = (1+q^-2) x y, py = q^-2 x^2
    auto [px, py] = plane_partials(ctx, plane_mono(2, 1), Calculus::minus);
    CHECK(plane_residual(px, plane_mono(1, 1, 1.0 + ctx.qpow(-2.0))) < 1e-13);
    CHECK(plane_residual(py, plane_mono(2, 0, ctx.qpow(-2.0))) < 1e-13);
    // localized elements admit d as well
    PlaneForm dloc = plane_d(ctx, plane_mono(-1, 2), Calculus::minus);
    CHECK(!dloc.c1.empty());
}
