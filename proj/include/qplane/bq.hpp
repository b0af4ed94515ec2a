#pragma once

#include <array>
#include <map>

#include "qplane/plane.hpp"
#include "qplane/symbol.hpp"

namespace qplane {

// Monomial x1^a y1^b x2^c y2^d of the auxiliary algebra B_q, with
// x_j y_j = q^{1/8} y_j x_j and all cross pairs commuting.
using BqMono = std::array<int, 4>;

struct BqElement {
    std::map<BqMono, cplx> terms;

    BqElement& add(const BqMono& m, cplx c);
    BqElement& operator+=(const BqElement& o);
    BqElement& operator-=(const BqElement& o);
    BqElement& scale(cplx c);
    bool empty() const { return terms.empty(); }
    double norm_inf() const;
    void prune(double tol = 1e-15);
};

BqElement bq_zero();
BqElement bq_scalar(cplx c);
BqElement bq_mono(int a, int b, int c, int d, cplx coeff = 1.0);

BqElement bq_mul(const Context& ctx, const BqElement& u, const BqElement& v);
BqElement bq_add(const BqElement& u, const BqElement& v);
BqElement bq_sub(const BqElement& u, const BqElement& v);
BqElement bq_pow(const Context& ctx, const BqElement& u, int n);  // n < 0 needs a monomial
BqElement bq_star(const Context& ctx, const BqElement& u);
BqElement bq_mono_inverse(const Context& ctx, const BqMono& m, cplx coeff);
double bq_residual(const BqElement& u, const BqElement& v);

// algebra homomorphisms psi and phi = g psi(.) g^{-1}, g = x1 x2 y1^{-1} y2
BqElement bq_psi_uq(const Context& ctx, const UqElement& f);
BqElement bq_psi_plane(const Context& ctx, const PlaneElement& z);  // localization allowed
BqElement bq_phi_uq(const Context& ctx, const UqElement& f);
BqElement bq_phi_plane(const Context& ctx, const PlaneElement& z);

// *-representation rho0 of B_q compiled to shift / mul_exp chains
SymbolOp bq_rho0(const Context& ctx, const BqElement& u);

// left action f |> a = rho0(psi(f)) a
Symbol bq_act_symbol(const Context& ctx, const UqElement& f, const Symbol& a);

// closed forms for the generator actions (independent code path)
enum class UqGen { E, F, K1, K2, K1inv, K2inv };
Symbol bq_act_symbol_closed(const Context& ctx, UqGen gen, const Symbol& a);

// mixed products making O(R^2_q) + A(R^2) an algebra; z must be unlocalized
Symbol bq_mixed_left(const Context& ctx, const PlaneElement& z, const Symbol& a);
Symbol bq_mixed_right(const Context& ctx, const Symbol& a, const PlaneElement& z);

// Gamma_- partials on symbols
Symbol bq_partial_x(const Context& ctx, const Symbol& a);
Symbol bq_partial_y(const Context& ctx, const Symbol& a);

// ---- the direct sum O(R^2_q) + A(R^2) ----------------------------------

struct MixedElement {
    PlaneElement z;
    Symbol a;
    MixedElement& operator+=(const MixedElement& o);
    MixedElement& scale(cplx c);
};

MixedElement mixed_make(const PlaneElement& z, const Symbol& a);
MixedElement mixed_mul(const Context& ctx, const MixedElement& u, const MixedElement& v);
MixedElement mixed_act(const Context& ctx, const UqElement& f, const MixedElement& u);
MixedElement mixed_star(const Context& ctx, const MixedElement& u);
double mixed_residual(const MixedElement& u, const MixedElement& v);

}  // namespace qplane
