#pragma once

#include <map>
#include <string>
#include <utility>

#include "qplane/uq.hpp"

namespace qplane {

// Element of the coordinate algebra O(R^2_q) (or its localization when
// exponents go negative).  Monomials are kept in the normal order x^m y^n;
// the reordering rule is y^n x^m = q^{-nm} x^m y^n, from xy = q yx.
struct PlaneElement {
    std::map<std::pair<int, int>, cplx> terms;

    PlaneElement& add(int m, int n, cplx c);
    PlaneElement& operator+=(const PlaneElement& o);
    PlaneElement& operator-=(const PlaneElement& o);
    PlaneElement& scale(cplx c);
    bool empty() const { return terms.empty(); }
    bool localized() const;  // any negative exponent?
    double norm_inf() const;
    void prune(double tol = 1e-15);
};

PlaneElement plane_zero();
PlaneElement plane_scalar(cplx c);
PlaneElement plane_mono(int m, int n, cplx c = 1.0);

PlaneElement plane_mul(const Context& ctx, const PlaneElement& a, const PlaneElement& b);
PlaneElement plane_add(const PlaneElement& a, const PlaneElement& b);
PlaneElement plane_sub(const PlaneElement& a, const PlaneElement& b);
PlaneElement plane_involution(const Context& ctx, const PlaneElement& z);
// inverse of the monomial x^m y^n in the localization
PlaneElement plane_mono_inverse(const Context& ctx, int m, int n, cplx c = 1.0);

// Left action of U_q(gl2) per the closed forms for E, F, K1, K2 on
// monomials; PBW monomials act by composing generator applications.
// Rejects localized arguments.
PlaneElement plane_act(const Context& ctx, const UqElement& f, const PlaneElement& z);

// q-deformed partials D^q_x = K y^{-1} E' |> z, D^q_y = K x^{-1} F' |> z.
PlaneElement plane_qderiv_x(const Context& ctx, const PlaneElement& z);
PlaneElement plane_qderiv_y(const Context& ctx, const PlaneElement& z);

double plane_residual(const PlaneElement& a, const PlaneElement& b);
std::string plane_to_string(const PlaneElement& a);

// ---- first order differential calculi ---------------------------------

enum class Calculus { plus, minus };

// Form in the free bimodule over the localized algebra, written on the
// central basis {e1, e2}:  c1*e1 + c2*e2.
struct PlaneForm {
    PlaneElement c1, c2;
    PlaneForm& operator+=(const PlaneForm& o);
    PlaneForm& operator-=(const PlaneForm& o);
};

// One-form expressed with left coefficients: cx*dx + cy*dy.
struct OneForm {
    PlaneElement cx, cy;
    Calculus calc = Calculus::minus;
};

PlaneForm plane_omega(const Context& ctx, Calculus calc);
PlaneForm plane_dx_form(const Context& ctx, Calculus calc);
PlaneForm plane_dy_form(const Context& ctx, Calculus calc);
// dz = omega z - z omega
PlaneForm plane_d(const Context& ctx, const PlaneElement& z, Calculus calc);
PlaneForm plane_form_mul_left(const Context& ctx, const PlaneElement& z, const PlaneForm& w);
PlaneForm plane_form_mul_right(const Context& ctx, const PlaneForm& w, const PlaneElement& z);
double plane_form_residual(const PlaneForm& a, const PlaneForm& b);

OneForm plane_differential(const Context& ctx, const PlaneElement& z, Calculus calc);
// right-basis coefficients of dz = dx . px + dy . py (the partial derivatives)
std::pair<PlaneElement, PlaneElement> plane_partials(const Context& ctx,
                                                     const PlaneElement& z,
                                                     Calculus calc);

}  // namespace qplane
