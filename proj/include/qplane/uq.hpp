#pragma once

#include <map>
#include <string>
#include <vector>

#include "qplane/context.hpp"

namespace qplane {

// PBW monomial E^e K1^m K2^n F^f.  e, f >= 0; m, n arbitrary integers.
struct UqMono {
    int e = 0, k1 = 0, k2 = 0, f = 0;
    auto operator<=>(const UqMono&) const = default;
};

inline UqMono uq_one() { return {0, 0, 0, 0}; }

// Element of U_q(gl2) in PBW normal form; zero coefficients are pruned.
struct UqElement {
    std::map<UqMono, cplx> terms;

    UqElement& add(const UqMono& m, cplx c);
    UqElement& operator+=(const UqElement& o);
    UqElement& operator-=(const UqElement& o);
    UqElement& scale(cplx c);
    bool empty() const { return terms.empty(); }
    double norm_inf() const;
    void prune(double tol = 1e-15);
};

UqElement uq_zero();
UqElement uq_scalar(cplx c);
UqElement uq_gen_E();
UqElement uq_gen_F();
UqElement uq_gen_K1(int power);
UqElement uq_gen_K2(int power);
// K = K1 K2^{-1}, L = K1 K2, E' = q^{1/2} lambda E, F' = q^{-1/2} lambda F
UqElement uq_gen_K(const Context& ctx, int power);
UqElement uq_gen_Eprime(const Context& ctx);
UqElement uq_gen_Fprime(const Context& ctx);

UqElement uq_mul(const Context& ctx, const UqElement& a, const UqElement& b);
UqElement uq_add(const UqElement& a, const UqElement& b);
UqElement uq_sub(const UqElement& a, const UqElement& b);
UqElement uq_pow(const Context& ctx, const UqElement& a, int n);

cplx uq_counit(const UqElement& a);
UqElement uq_antipode(const Context& ctx, const UqElement& a);

enum class StarFlavor { star, dagger };
UqElement uq_star(const Context& ctx, const UqElement& a,
                  StarFlavor flavor = StarFlavor::star);

cplx uq_chi(const Context& ctx, const UqElement& a);

double uq_residual(const UqElement& a, const UqElement& b);
std::string uq_to_string(const UqElement& a);

// ---- tensor square ----------------------------------------------------

struct UqTensor {
    std::map<std::pair<UqMono, UqMono>, cplx> terms;
    UqTensor& add(const UqMono& l, const UqMono& r, cplx c);
    void prune(double tol = 1e-15);
};

UqTensor uq_coproduct(const Context& ctx, const UqElement& a);
UqTensor uq_tensor_mul(const Context& ctx, const UqTensor& a, const UqTensor& b);
// multiply the two legs together inside U_q (used for the antipode axiom)
UqElement uq_tensor_contract(const Context& ctx, const UqTensor& t);
// apply star/antipode to one leg
UqTensor uq_tensor_map_left(const Context& ctx, const UqTensor& t,
                            UqElement (*op)(const Context&, const UqElement&));
double uq_tensor_residual(const UqTensor& a, const UqTensor& b);

// tensor cube, only what the coassociativity test needs
struct UqTensor3 {
    std::map<std::tuple<UqMono, UqMono, UqMono>, cplx> terms;
    void prune(double tol = 1e-15);
};
UqTensor3 uq_coproduct_leg(const Context& ctx, const UqTensor& t, int leg);
double uq_tensor3_residual(const UqTensor3& a, const UqTensor3& b);

// Applies the Sweedler legs of t to a pair of module elements and sums the
// products: sum c * (m1 |> z) (m2 |> w).  Module provides act() and mul().
template <typename M, typename Act, typename Mul>
M tensor_apply(const UqTensor& t, const M& z, const M& w, Act act, Mul mul,
               M zero) {
    M out = zero;
    for (const auto& [key, c] : t.terms) {
        UqElement l, r;
        l.add(key.first, 1.0);
        r.add(key.second, 1.0);
        M part = mul(act(l, z), act(r, w));
        part.scale(c);
        out += part;
    }
    return out;
}

}  // namespace qplane
