#include "doctest.h"
#include "qplane/rng.hpp"
#include "qplane/tuple4.hpp"

using namespace qplane;

namespace {
const Context ctx = make_context(0.15, 0.5);

Symbol rand_gauss(Rng& rng) {
    return symbol_term(0, 0, rng.uniform(0.9, 2.2), rng.uniform(0.9, 2.2), rng.uniform_cplx(1.0),
                       rng.uniform_cplx(1.0), rng.uniform_cplx(1.0));
}

Tuple4 rand_tuple(Rng& rng) {
    return t4_make(rand_gauss(rng), rand_gauss(rng), rand_gauss(rng), rand_gauss(rng));
}
}  // namespace

TEST_CASE("J is a symmetry") {
    Rng rng(30);
    Tuple4 a = rand_tuple(rng);
    CHECK(t4_residual(t4_apply_J(t4_apply_J(a)), a) < 1e-13);
    Symbol g = rand_gauss(rng);
    Tuple4 same = t4_make(g, g, g, g);
    Tuple4 want = t4_zero();
    want.a[0] = g;
    want.a[0].scale(2.0);
    CHECK(t4_residual(t4_apply_J(same), want) < 1e-13);
}

TEST_CASE("circle product basics") {
    Rng rng(31);
    Symbol a = rand_gauss(rng), b = rand_gauss(rng);
    // single-component tuples multiply through the first pairing row
    Tuple4 ta = t4_make(a, symbol_zero(), symbol_zero(), symbol_zero());
    Tuple4 tb = t4_make(b, symbol_zero(), symbol_zero(), symbol_zero());
    Tuple4 got = t4_circle(ctx, ta, tb);
    Symbol want = symbol_natural(ctx, a, b);
    want.scale(0.5);
    CHECK(symbol_residual(got.a[0], want) < 1e-12);
    CHECK(got.a[1].empty());
    CHECK(got.a[2].empty());
    CHECK(got.a[3].empty());
    // e2 o e3 lands in component 4 under the Hadamard pairing
    Tuple4 e2 = t4_make(symbol_zero(), a, symbol_zero(), symbol_zero());
    Tuple4 e3 = t4_make(symbol_zero(), symbol_zero(), b, symbol_zero());
    Tuple4 p = t4_circle(ctx, e2, e3);
    CHECK(p.a[0].empty());
    CHECK(p.a[1].empty());
    CHECK(p.a[2].empty());
    CHECK(!p.a[3].empty());
    // a o 0 = 0
    Tuple4 z = t4_circle(ctx, ta, t4_zero());
    for (int i = 0; i < 4; ++i) CHECK(z.a[i].empty());
}

TEST_CASE("circle equals the J transport of the componentwise product") {
    Rng rng(32);
    Tuple4 u = rand_tuple(rng), v = rand_tuple(rng);
    Tuple4 lhs = t4_circle(ctx, u, v);
    Tuple4 rhs = t4_apply_J(t4_componentwise_natural(ctx, t4_apply_J(u), t4_apply_J(v)));
    CHECK(t4_residual(lhs, rhs) < 1e-11);
}

TEST_CASE("inner product two routes") {
    Rng rng(33);
    Tuple4 u = rand_tuple(rng), v = rand_tuple(rng);
    cplx h = t4_inner_h(ctx, u, v);
    cplx l2 = t4_inner_l2(ctx, u, v);
    CHECK(std::abs(h - l2) < 1e-10 * (1.0 + std::abs(h)));
    cplx n = t4_inner_h(ctx, u, u);
    CHECK(n.real() > 0.0);
    // h depends only on the first component
    Tuple4 tail = u;
    tail.a[0] = symbol_zero();
    CHECK(std::abs(t4_h(ctx, tail)) == 0.0);
}

TEST_CASE("block operators") {
    Rng rng(34);
    Symbol g = rand_gauss(rng);
    // K1 on (a,0,0,0) keeps the diagonal slot
    Tuple4 v = t4_make(g, symbol_zero(), symbol_zero(), symbol_zero());
    Tuple4 k1 = t4_block_apply(ctx, BlockOp::K1, v);
    CHECK(symbol_residual(k1.a[0], symbol_shift(g, cplx(0, -0.5 * ctx.beta), 0.0)) < 1e-12);
    CHECK(k1.a[1].empty());
    // E on (0,0,0,a4) feeds component 1 with L_alpha (x) e^{2 pi beta Q2}
    Tuple4 v4 = t4_make(symbol_zero(), symbol_zero(), symbol_zero(), g);
    Tuple4 e = t4_block_apply(ctx, BlockOp::E, v4);
    Symbol want = symbolop_apply(op_compose(fn_Lalpha_op(ctx), op_expQ(2, 2.0 * kPi * ctx.beta)), g);
    CHECK(symbol_residual(e.a[0], want) < 1e-12);
    CHECK(e.a[1].empty());
    CHECK(e.a[2].empty());
    CHECK(e.a[3].empty());
    // x twice is diagonal and equals x o (x o a) with Phi(x)^2 entries
    Tuple4 w = rand_tuple(rng);
    Tuple4 xx = t4_block_apply(ctx, BlockOp::x, t4_block_apply(ctx, BlockOp::x, w));
    SymbolOp phix = fn_Phi_op(ctx, PhiGen::x);
    for (int i = 0; i < 4; ++i)
        CHECK(symbol_residual(xx.a[i], symbolop_apply(phix, symbolop_apply(phix, w.a[i]))) <
              1e-11);
}

TEST_CASE("block partial shapes") {
    Rng rng(35);
    Symbol g = rand_gauss(rng);
    Tuple4 v = t4_make(g, symbol_zero(), symbol_zero(), symbol_zero());
    auto [px, py] = t4_block_partials(ctx, v);
    CHECK(px.a[0].empty());
    CHECK(symbol_residual(px.a[1], bq_partial_x(ctx, g)) < 1e-12);
    CHECK(py.a[0].empty());
    CHECK(symbol_residual(py.a[2], bq_partial_y(ctx, g)) < 1e-12);
}

TEST_CASE("tuple json round trip") {
    Rng rng(36);
    Tuple4 v = rand_tuple(rng);
    Tuple4 w = t4_from_json(t4_to_json(v));
    CHECK(t4_residual(v, w) < 1e-15);
    CHECK_THROWS(t4_from_json("[1,2]"));
}
