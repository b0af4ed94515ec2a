#pragma once

#include "qplane/bq.hpp"

namespace qplane {

// index data of the covariant functional family h_k
struct CovariantIndex {
    int k1 = 0, k2 = 0;
    double alpha_k = 0.0, beta_k = 0.0;
};

CovariantIndex make_index(const Context& ctx, int k1, int k2);

// h_k(a) = iint e^{2 pi (alpha_k x1 + beta_k x2)} a
cplx fn_hk(const Context& ctx, const CovariantIndex& k, const Symbol& a);
// htilde(a) = iint e^{pi (alpha x1 + beta x2)} a
cplx fn_htilde(const Context& ctx, const Symbol& a);

// T_k, its inverse, C_k and T = T_0 as primitive chains
SymbolOp fn_Tk_op(const Context& ctx, const CovariantIndex& k);
SymbolOp fn_Tk_inv_op(const Context& ctx, const CovariantIndex& k);
SymbolOp fn_Ck_op(const Context& ctx, const CovariantIndex& k);
SymbolOp fn_T_op(const Context& ctx);
SymbolOp fn_T_inv_op(const Context& ctx);

// <a,b>_k three ways: h_k(b* # a), the explicit weighted integral, and
// the L^2 product of T_k images
cplx fn_inner_k_hk(const Context& ctx, const CovariantIndex& k, const Symbol& a, const Symbol& b);
cplx fn_inner_k_integral(const Context& ctx, const CovariantIndex& k, const Symbol& a, const Symbol& b);
cplx fn_inner_k_l2(const Context& ctx, const CovariantIndex& k, const Symbol& a, const Symbol& b);

// max residual of h_k(f |> a) = chi(f) h_k(a) over the four generators, and
// of the translation law over s,t in {+-1/2, +-1}
double fn_covariance_residual(const Context& ctx, const CovariantIndex& k, const Symbol& a);
double fn_translation_residual(const Context& ctx, const CovariantIndex& k, const Symbol& a);

// left/right halves of f_alpha(P) e^{-2 pi alpha Q} on each axis
SymbolOp fn_Lalpha_op(const Context& ctx);  // axis 1
SymbolOp fn_Ralpha_op(const Context& ctx);
SymbolOp fn_Lbeta_op(const Context& ctx);  // axis 2
SymbolOp fn_Rbeta_op(const Context& ctx);

enum class PhiGen { Eprime, Fprime, K1, K2, K, x, y };
SymbolOp fn_Phi_op(const Context& ctx, PhiGen gen);
SymbolOp fn_Psi_k_op(const Context& ctx, const CovariantIndex& k, PhiGen gen);
// Phi of an arbitrary algebra element, through rho0 of the phi image
Symbol fn_Phi_apply_uq(const Context& ctx, const UqElement& f, const Symbol& a);

}  // namespace qplane
