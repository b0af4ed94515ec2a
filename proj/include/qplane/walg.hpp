#pragma once

#include <map>
#include <string>

#include "qplane/plane.hpp"

namespace qplane {

// Key for a Weyl generator W(s,t), s,t complex.  Components are snapped to
// the dyadic lattice so that arguments produced by chains of +-i shifts and
// roundoff-contaminated sums land on the same key.
struct WKey {
    double sr = 0, si = 0, tr = 0, ti = 0;
    auto operator<=>(const WKey&) const = default;
};

inline WKey make_wkey(cplx s, cplx t) {
    return {lattice_round(s.real()), lattice_round(s.imag()),
            lattice_round(t.real()), lattice_round(t.imag())};
}

inline cplx wkey_s(const WKey& k) { return {k.sr, k.si}; }
inline cplx wkey_t(const WKey& k) { return {k.tr, k.ti}; }

// Finite linear combination of W(s,t); the generators are treated as
// linearly independent.
struct WElement {
    std::map<WKey, cplx> terms;

    WElement& add(cplx s, cplx t, cplx c);
    WElement& operator+=(const WElement& o);
    WElement& operator-=(const WElement& o);
    WElement& scale(cplx c);
    bool empty() const { return terms.empty(); }
    double norm_inf() const;
    void prune(double tol = 1e-15);
};

WElement w_zero();
WElement w_gen(cplx s, cplx t, cplx c = 1.0);
WElement w_one();

// W(s1,t1) W(s2,t2) = e^{pi i gamma (s2 t1 - s1 t2)} W(s1+s2, t1+t2)
WElement w_mul(const Context& ctx, const WElement& a, const WElement& b);
WElement w_add(const WElement& a, const WElement& b);
WElement w_sub(const WElement& a, const WElement& b);
// W(s,t)^* = W(-conj s, -conj t)
WElement w_star(const Context& ctx, const WElement& a);
// inverse of a single-term element (used in basis conversions)
WElement w_single_term_inverse(const Context& ctx, const WElement& a);

// left action of U_q(gl2) extended from the generator formulas
WElement w_act(const Context& ctx, const UqElement& f, const WElement& u);

enum class WSide { left, right };
enum class WGen { x, y };
// displacement rules x W(s,t), W(s,t) x, y W(s,t), W(s,t) y
WElement w_mult_xy(const Context& ctx, WSide side, WGen gen, const WElement& u);

// x^m y^n -> q^{mn/2} W(-m i, -n i); intertwines the two module structures
WElement w_embed(const Context& ctx, const PlaneElement& z);

// closed-form Gamma_- partials on W
std::pair<WElement, WElement> w_partials(const Context& ctx, const WElement& u);

// omega-commutator route for the same partials (free bimodule over W)
struct WForm {
    WElement c1, c2;
};
WForm w_d(const Context& ctx, const WElement& u);
std::pair<WElement, WElement> w_partials_commutator(const Context& ctx, const WElement& u);

double w_residual(const WElement& a, const WElement& b);
std::string w_to_string(const WElement& a);

}  // namespace qplane
