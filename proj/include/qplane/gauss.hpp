#pragma once

#include <array>
#include <map>
#include <vector>

#include "qplane/numeric.hpp"

namespace qplane {

// Polynomial times exponential of a complex quadratic form in up to six
// variables:  P(x) * exp( x^T M x + c.x + d ),  M symmetric.
//
// This is the closed-form workhorse behind the twisted product and every
// weighted plane integral: multiplying such factors and integrating one
// variable at a time (completing the square, Gaussian moments) stays inside
// the class.  Integration requires Re(-M[k][k]) > 0.
struct QuadExp {
    static constexpr int NV = 6;
    using Mono = std::array<int, NV>;

    std::array<std::array<cplx, NV>, NV> M{};
    std::array<cplx, NV> c{};
    cplx d = 0.0;
    std::map<Mono, cplx> poly;

    static QuadExp one();
    void add_quad(int i, int j, cplx coef);   // coef * x_i x_j
    void add_lin(int i, cplx coef);           // coef * x_i
    void mul_mono(int i, int power);          // multiply by x_i^power
};

QuadExp qe_mul(const QuadExp& a, const QuadExp& b);
// integrate x_k over the real line; the result no longer involves x_k
QuadExp qe_integrate(const QuadExp& a, int k);
// value of a fully integrated expression (all variables integrated out)
cplx qe_value(const QuadExp& a);

}  // namespace qplane
