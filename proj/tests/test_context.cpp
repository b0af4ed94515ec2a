#include "doctest.h"
#include "qplane/context.hpp"

using namespace qplane;

TEST_CASE("context construction and derived fields") {
    Context ctx = make_context(0.15, 0.5);
    CHECK(ctx.beta == doctest::Approx(0.3));
    CHECK(std::abs(ctx.q - std::polar(1.0, 0.3 * kPi)) < 1e-15);
    CHECK(std::abs(ctx.alpha * ctx.beta - ctx.gamma) < 1e-15);
    CHECK(std::abs(std::abs(ctx.q) - 1.0) < 1e-15);
    // lambda is purely imaginary with |lambda| = 2|sin 2 pi gamma|
    CHECK(std::abs(ctx.lambda.real()) < 1e-15);
    CHECK(std::abs(std::abs(ctx.lambda) - 2.0 * std::abs(std::sin(2.0 * kPi * 0.15))) < 1e-14);

    Context c2 = make_context(0.25, 1.0);
    CHECK(std::abs(c2.q - cplx(0, 1)) < 1e-15);

    CHECK_THROWS_AS(make_context(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_context(0.4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_context(-0.34, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_context(0.15, 0.0), std::invalid_argument);
}

TEST_CASE("qpow branch and group law") {
    Context ctx = make_context(0.25, 1.0);
    CHECK(std::abs(ctx.qpow(2.0) - cplx(-1, 0)) < 1e-14);
    CHECK(std::abs(ctx.qpow(0.0) - cplx(1, 0)) < 1e-15);
    Context c = make_context(0.15, 0.5);
    CHECK(std::abs(c.qpow(0.5) - std::polar(1.0, 0.15 * kPi)) < 1e-15);
    for (double r : {-1.7, 0.25, 0.5, 2.0})
        for (double s : {-0.5, 0.125, 3.0})
            CHECK(std::abs(c.qpow(r) * c.qpow(s) - c.qpow(r + s)) < 1e-14);
    CHECK(std::abs(c.qpow(0.5) * c.qpow(0.5) - c.q) < 1e-15);
    CHECK(std::abs(c.qpow(-1.7) - 1.0 / c.qpow(1.7)) < 1e-14);
}

TEST_CASE("context is deterministic") {
    Context a = make_context(0.15, 0.5), b = make_context(0.15, 0.5);
    CHECK(a.q == b.q);
    CHECK(a.lambda == b.lambda);
    CHECK(a.beta == b.beta);
}

TEST_CASE("config parsing") {
    Context ctx = context_from_config("gamma = 0.2\nalpha = 0.4 # comment\ntol_exact = 1e-9\n");
    CHECK(ctx.gamma == doctest::Approx(0.2));
    CHECK(ctx.alpha == doctest::Approx(0.4));
    CHECK(ctx.tol_exact == doctest::Approx(1e-9));
    CHECK_THROWS_AS(context_from_config("nonsense = 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(context_from_config("gamma 0.2\n"), std::invalid_argument);
    CHECK_THROWS_AS(context_from_config("precision = quad\n"), std::invalid_argument);
}
