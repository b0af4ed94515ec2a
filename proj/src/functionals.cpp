#include "qplane/functionals.hpp"

namespace qplane {

CovariantIndex make_index(const Context& ctx, int k1, int k2) {
    CovariantIndex k;
    k.k1 = k1;
    k.k2 = k2;
    k.alpha_k = ctx.alpha + 2.0 * k1 / ctx.beta;
    k.beta_k = ctx.beta + 2.0 * k2 / ctx.alpha;
    return k;
}

cplx fn_hk(const Context&, const CovariantIndex& k, const Symbol& a) {
    return symbol_weighted_integral(a, 2.0 * kPi * k.alpha_k, 2.0 * kPi * k.beta_k);
}

cplx fn_htilde(const Context& ctx, const Symbol& a) {
    return symbol_weighted_integral(a, kPi * ctx.alpha, kPi * ctx.beta);
}

SymbolOp fn_Tk_op(const Context&, const CovariantIndex& k) {
    // e^{pi a_k Q1} e^{-(pi/2) b_k P1} (x) e^{pi b_k Q2} e^{(pi/2) a_k P2}
    SymbolOp mul = op_mul_exp(kPi * k.alpha_k, kPi * k.beta_k);
    SymbolOp shift = op_shift(cplx(0, 0.25 * k.beta_k), cplx(0, -0.25 * k.alpha_k));
    return op_compose(mul, shift);
}

SymbolOp fn_Tk_inv_op(const Context&, const CovariantIndex& k) {
    SymbolOp shift = op_shift(cplx(0, -0.25 * k.beta_k), cplx(0, 0.25 * k.alpha_k));
    SymbolOp mul = op_mul_exp(-kPi * k.alpha_k, -kPi * k.beta_k);
    return op_compose(shift, mul);
}

SymbolOp fn_Ck_op(const Context& ctx, const CovariantIndex& k) {
    // e^{2 pi k1/beta Q1} e^{-pi k2/alpha P1} (x) e^{2 pi k2/alpha Q2} e^{pi k1/beta P2}
    SymbolOp mul = op_mul_exp(2.0 * kPi * k.k1 / ctx.beta, 2.0 * kPi * k.k2 / ctx.alpha);
    SymbolOp shift = op_shift(cplx(0, 0.5 * k.k2 / ctx.alpha), cplx(0, -0.5 * k.k1 / ctx.beta));
    return op_compose(mul, shift);
}

SymbolOp fn_T_op(const Context& ctx) { return fn_Tk_op(ctx, make_index(ctx, 0, 0)); }

SymbolOp fn_T_inv_op(const Context& ctx) { return fn_Tk_inv_op(ctx, make_index(ctx, 0, 0)); }

cplx fn_inner_k_hk(const Context& ctx, const CovariantIndex& k, const Symbol& a, const Symbol& b) {
    return fn_hk(ctx, k, symbol_twisted(symbol_star(b), a));
}

cplx fn_inner_k_integral(const Context&, const CovariantIndex& k, const Symbol& a,
                         const Symbol& b) {
    Symbol sa = symbol_shift(a, cplx(0, 0.25 * k.beta_k), cplx(0, -0.25 * k.alpha_k));
    Symbol sb = symbol_shift(symbol_star(b), cplx(0, -0.25 * k.beta_k), cplx(0, 0.25 * k.alpha_k));
    return symbol_weighted_integral(symbol_pointwise_mul(sa, sb), 2.0 * kPi * k.alpha_k,
                                    2.0 * kPi * k.beta_k);
}

cplx fn_inner_k_l2(const Context& ctx, const CovariantIndex& k, const Symbol& a, const Symbol& b) {
    SymbolOp tk = fn_Tk_op(ctx, k);
    return symbol_l2_inner(symbolop_apply(tk, a), symbolop_apply(tk, b));
}

double fn_covariance_residual(const Context& ctx, const CovariantIndex& k, const Symbol& a) {
    cplx base = fn_hk(ctx, k, a);
    double res = 0.0;
    const UqGen gens[] = {UqGen::E, UqGen::F, UqGen::K1, UqGen::K2};
    const cplx chi[] = {0.0, 0.0, ctx.qpow(0.5), ctx.qpow(0.5)};
    for (int i = 0; i < 4; ++i) {
        cplx lhs = fn_hk(ctx, k, bq_act_symbol_closed(ctx, gens[i], a));
        res = std::max(res, residual(lhs, chi[i] * base));
    }
    return res;
}

double fn_translation_residual(const Context& ctx, const CovariantIndex& k, const Symbol& a) {
    cplx base = fn_hk(ctx, k, a);
    double res = 0.0;
    for (double s : {-1.0, -0.5, 0.5, 1.0})
        for (double t : {-1.0, -0.5, 0.5, 1.0}) {
            cplx lhs = fn_hk(ctx, k, symbol_shift(a, ctx.beta * s, ctx.alpha * t));
            cplx rhs = std::exp(-2.0 * kPi * ctx.gamma * (s + t) - 4.0 * kPi * (k.k1 * s + k.k2 * t)) * base;
            res = std::max(res, residual(lhs, rhs));
        }
    return res;
}

namespace {

// f_alpha(P) = -q^{1/2} e^{2 pi beta P} + q^{-1/2} e^{-2 pi beta P} on the
// given axis; conj = true gives the conjugate coefficients.
SymbolOp f_of_P(const Context& ctx, int axis, double coef, bool conj) {
    cplx ch = conj ? ctx.qpow(-0.5) : ctx.qpow(0.5);
    return op_add(op_scale(op_expP(axis, 2.0 * kPi * coef), -ch),
                  op_scale(op_expP(axis, -2.0 * kPi * coef), 1.0 / ch));
}

}  // namespace

SymbolOp fn_Lalpha_op(const Context& ctx) {
    return op_compose(f_of_P(ctx, 1, ctx.beta, true), op_expQ(1, -2.0 * kPi * ctx.alpha));
}

SymbolOp fn_Ralpha_op(const Context& ctx) {
    return op_compose(op_expQ(1, -2.0 * kPi * ctx.alpha), f_of_P(ctx, 1, ctx.beta, false));
}

SymbolOp fn_Lbeta_op(const Context& ctx) {
    return op_compose(f_of_P(ctx, 2, ctx.alpha, true), op_expQ(2, -2.0 * kPi * ctx.beta));
}

SymbolOp fn_Rbeta_op(const Context& ctx) {
    return op_compose(op_expQ(2, -2.0 * kPi * ctx.beta), f_of_P(ctx, 2, ctx.alpha, false));
}

SymbolOp fn_Phi_op(const Context& ctx, PhiGen gen) {
    const double al = ctx.alpha, be = ctx.beta;
    switch (gen) {
        case PhiGen::Eprime:
            return op_compose(fn_Lalpha_op(ctx), op_expQ(2, 2.0 * kPi * be));
        case PhiGen::Fprime:
            return op_compose(op_expQ(1, 2.0 * kPi * al), fn_Lbeta_op(ctx));
        case PhiGen::K1:
            return op_scale(op_expP(1, kPi * be), ctx.qpow(0.25));
        case PhiGen::K2:
            return op_scale(op_expP(2, kPi * al), ctx.qpow(0.25));
        case PhiGen::K:
            return op_compose(op_expP(1, kPi * be), op_expP(2, -kPi * al));
        case PhiGen::x:
            return op_compose(op_expQ(1, 2.0 * kPi * al), op_expP(2, -kPi * al));
        case PhiGen::y:
            return op_compose(op_expP(1, kPi * be), op_expQ(2, 2.0 * kPi * be));
    }
    throw std::logic_error("fn_Phi_op");
}

SymbolOp fn_Psi_k_op(const Context& ctx, const CovariantIndex& k, PhiGen gen) {
    SymbolOp phi = fn_Phi_op(ctx, gen);
    int sign = 1;
    switch (gen) {
        case PhiGen::Eprime:
        case PhiGen::Fprime:
        case PhiGen::K:
            sign = ((k.k1 + k.k2) % 2 == 0) ? 1 : -1;
            break;
        case PhiGen::K1: sign = (k.k1 % 2 == 0) ? 1 : -1; break;
        case PhiGen::K2: sign = (k.k2 % 2 == 0) ? 1 : -1; break;
        case PhiGen::x:
        case PhiGen::y: sign = 1; break;
    }
    return op_scale(phi, double(sign));
}

Symbol fn_Phi_apply_uq(const Context& ctx, const UqElement& f, const Symbol& a) {
    return symbolop_apply(bq_rho0(ctx, bq_phi_uq(ctx, f)), a);
}

}  // namespace qplane
