#pragma once

#include <string>
#include <vector>

#include "qplane/context.hpp"
#include "qplane/gauss.hpp"

namespace qplane {

// One term of the symbol algebra:
//   coeff * x1^n1 x2^n2 exp(-eps1 x1^2 - eps2 x2^2 + kappa x1 x2 + c1 x1 + c2 x2).
// Elements are CONSTRUCTED with real eps1, eps2 > 0 and kappa = 0 (the
// polynomial-Gaussian class), but the twisted product of terms with unequal
// widths leaves that class: closure requires a general complex quadratic
// form whose real part is negative definite, which is what this type stores.
struct SymbolTerm {
    int n1 = 0, n2 = 0;
    cplx eps1 = 1.0, eps2 = 1.0;
    cplx kappa = 0.0;
    cplx c1 = 0.0, c2 = 0.0;
    cplx coeff = 0.0;
};

struct Symbol {
    std::vector<SymbolTerm> terms;

    Symbol& operator+=(const Symbol& o);
    Symbol& operator-=(const Symbol& o);
    Symbol& scale(cplx c);
    bool empty() const { return terms.empty(); }
    // merge terms with identical keys, drop negligible coefficients
    void canonicalize();
};

Symbol symbol_zero();
Symbol symbol_term(int n1, int n2, double eps1, double eps2, cplx c1, cplx c2, cplx coeff);
// f_eps = exp(-pi eps (x1^2 + x2^2))
Symbol approx_identity(double eps);

Symbol symbol_add(const Symbol& a, const Symbol& b);
Symbol symbol_sub(const Symbol& a, const Symbol& b);

cplx symbol_eval(const Symbol& a, cplx z1, cplx z2);
// a(x1 + t1, x2 + t2), exact (binomials + completed squares)
Symbol symbol_shift(const Symbol& a, cplx t1, cplx t2);
// multiply by exp(b1 x1 + b2 x2)
Symbol symbol_mul_exp(const Symbol& a, cplx b1, cplx b2);
// multiply by x1^k1 x2^k2
Symbol symbol_mul_poly(const Symbol& a, int k1, int k2);
// ordinary pointwise product (not the twisted product)
Symbol symbol_pointwise_mul(const Symbol& a, const Symbol& b);

// 2D Fourier transform F f(t) = integral exp(-2 pi i t.x) f(x) dx (or the
// inverse); exact on the class.
Symbol symbol_fourier(const Symbol& a, bool inverse);

// Weyl twisted product a # b, computed as the closed-form 4D Gaussian
// integral.  Exact on A_pex up to roundoff.
Symbol symbol_twisted(const Symbol& a, const Symbol& b);

// involutions: * is pointwise conjugation on the real plane, and the
// transformed involution is a^star = conj-a(x1 - i beta/2, x2 + i alpha/2)
Symbol symbol_star(const Symbol& a);
Symbol symbol_star_t(const Context& ctx, const Symbol& a);

// transformed product a natural b (symmetrized form)
Symbol symbol_natural(const Context& ctx, const Symbol& a, const Symbol& b);

cplx symbol_plain_integral(const Symbol& a);
// integral of exp(w1 x1 + w2 x2) * a over the plane
cplx symbol_weighted_integral(const Symbol& a, cplx w1, cplx w2);
cplx symbol_l2_inner(const Symbol& a, const Symbol& b);  // (a,b) = int a conj(b)
double symbol_l2_norm(const Symbol& a);

// sup-norm comparison on a fixed real sample grid, normalized
double symbol_residual(const Symbol& a, const Symbol& b);

std::string symbol_to_string(const Symbol& a);
std::string symbol_to_json(const Symbol& a);
Symbol symbol_from_json(const std::string& text);

// ---- operators built from the shift / mul_exp / mul_poly primitives ----

struct SymbolOp {
    struct Prim {
        enum Kind { MulExp, Shift, MulPoly } kind = MulExp;
        cplx p1 = 0.0, p2 = 0.0;
        int k1 = 0, k2 = 0;
    };
    // one summand: coeff * (prims[0] o prims[1] o ... ), rightmost acts first
    struct Chain {
        cplx coeff = 1.0;
        std::vector<Prim> prims;
    };
    std::vector<Chain> chains;
};

Symbol symbolop_apply(const SymbolOp& op, const Symbol& a);
SymbolOp op_identity();
SymbolOp op_mul_exp(cplx b1, cplx b2);
SymbolOp op_shift(cplx t1, cplx t2);
SymbolOp op_mul_poly(int k1, int k2);
// exp(s P_axis): the exact shift x_axis -> x_axis - (s / 2 pi) i
SymbolOp op_expP(int axis, double s);
// exp(s Q_axis): multiplication by exp(s x_axis)
SymbolOp op_expQ(int axis, double s);
SymbolOp op_compose(const SymbolOp& a, const SymbolOp& b);  // a after b
SymbolOp op_add(const SymbolOp& a, const SymbolOp& b);
SymbolOp op_scale(const SymbolOp& a, cplx c);

// Partial Fourier transform in the second slot, evaluated pointwise:
//   (F2 a)(x1, w) = int a(x1, t) e^{-2 pi i w t} dt  (or +, for the inverse).
// The Weyl kernel K(x,y) = (F2^{-1} a)((x+y)/2, x-y) is built from this.
cplx symbol_partial_ft2(const Symbol& a, double x1, double w, bool inverse);

}  // namespace qplane
