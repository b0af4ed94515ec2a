#include "doctest.h"
#include "qplane/parse.hpp"

using namespace qplane;

namespace {
const Context ctx = make_context(0.15, 0.5);
}

TEST_CASE("uq expressions") {
    UqElement e = parse_uq(ctx, "E*K1^-2*F + (0,1)*K2");
    UqElement want;
    want.add({1, -2, 0, 1}, 1.0);
    want.add({0, 0, 1, 0}, cplx(0, 1));
    CHECK(uq_residual(e, want) < 1e-14);
    // the commutator normal form prints through eval_expr
    std::string out = eval_expr(ctx, "uq", "E*F - F*E");
    CHECK(out.find("K1^2") != std::string::npos);
    CHECK(out.find("K1^-2") != std::string::npos);
    CHECK_THROWS_AS(parse_uq(ctx, "E*Q"), ParseError);
    CHECK_THROWS_AS(parse_uq(ctx, "E^-1"), ParseError);
    CHECK_THROWS_AS(parse_uq(ctx, "E + "), ParseError);
}

TEST_CASE("plane expressions") {
    PlaneElement z = parse_plane(ctx, "x^2*y^-1");
    PlaneElement want = plane_mono(2, -1);
    CHECK(plane_residual(z, want) < 1e-14);
    PlaneElement yx = parse_plane(ctx, "y*x");
    CHECK(plane_residual(yx, plane_mono(1, 1, 1.0 / ctx.q)) < 1e-14);
}

TEST_CASE("plane differential commands") {
    // d(xy) in the minus calculus: q y dx + q^2 x dy
    std::string out = eval_expr(ctx, "plane", "d x*y", Calculus::minus);
    CHECK(out.find("dx") != std::string::npos);
    CHECK(out.find("dy") != std::string::npos);
    OneForm f = plane_differential(ctx, plane_mul(ctx, plane_mono(1, 0), plane_mono(0, 1)),
                                   Calculus::minus);
    CHECK(plane_residual(f.cx, plane_mono(0, 1, ctx.q)) < 1e-13);
    CHECK(plane_residual(f.cy, plane_mono(1, 0, ctx.qpow(2.0))) < 1e-13);
    // px in the plus calculus through the command syntax: q^2(1+q^2) x y
    std::string px = eval_expr(ctx, "plane", "px x^2*y", Calculus::plus);
    cplx want = ctx.qpow(2.0) * (1.0 + ctx.qpow(2.0));
    CHECK(px.find("*x*y") != std::string::npos);
    CHECK(px.find(fmt_cplx(want).substr(0, 9)) != std::string::npos);
}

TEST_CASE("w expressions") {
    WElement u = parse_w(ctx, "W(1,0)*W(0,1)");
    CHECK(w_residual(u, w_gen(1, 1, std::exp(cplx(0, -kPi * ctx.gamma)))) < 1e-14);
    WElement v = parse_w(ctx, "W(0.5+0.25*i, -1i)");
    CHECK(w_residual(v, w_gen(cplx(0.5, 0.25), cplx(0, -1))) < 1e-14);
    WElement w2 = parse_w(ctx, "W(1,0)^-1");
    CHECK(w_residual(w2, w_gen(-1, 0)) < 1e-14);
}

TEST_CASE("symbol expressions") {
    Symbol s = parse_symbol(ctx, "poly(1,0) * gauss(1.5,2) * exp((0,1),0.5) * 2");
    Symbol want = symbol_term(1, 0, 1.5, 2.0, cplx(0, 1), cplx(0.5, 0), 2.0);
    CHECK(symbol_residual(s, want) < 1e-13);
    CHECK_THROWS_AS(parse_symbol(ctx, "poly(1,0)"), ParseError);    // no gauss factor
    CHECK_THROWS_AS(parse_symbol(ctx, "gauss(-1,1)"), ParseError);  // bad width
    // functional evaluation through the symbol command syntax
    std::string out = eval_expr(ctx, "symbol", "hk 0 0 gauss(1,1)");
    CHECK(out.find("(") == 0);
    std::string nrm = eval_expr(ctx, "symbol", "norm gauss(3.14159265358979,3.14159265358979)");
    CHECK(std::abs(std::stod(nrm) - std::sqrt(0.5)) < 1e-6);
}

TEST_CASE("tuple4 expressions") {
    std::string out =
        eval_expr(ctx, "tuple4", "[gauss(1,1); gauss(1,1); gauss(1,1); gauss(1,1)]");
    Tuple4 t = t4_from_json(out);
    CHECK(!t.a[0].empty());
    // J[a;a;a;a] has only the first component
    std::string out2 =
        eval_expr(ctx, "tuple4", "J [gauss(1,1); gauss(1,1); gauss(1,1); gauss(1,1)]");
    Tuple4 t2 = t4_from_json(out2);
    CHECK(!t2.a[0].empty());
    CHECK(t2.a[1].empty());
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_uq(ctx, "E * %");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.pos == 4);
    }
}
