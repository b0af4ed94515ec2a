#include "qplane/uq.hpp"

#include <sstream>

namespace qplane {

UqElement& UqElement::add(const UqMono& m, cplx c) {
    auto it = terms.find(m);
    if (it == terms.end()) {
        if (c != 0.0) terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0.0) terms.erase(it);
    }
    return *this;
}

UqElement& UqElement::operator+=(const UqElement& o) {
    for (const auto& [m, c] : o.terms) add(m, c);
    return *this;
}

UqElement& UqElement::operator-=(const UqElement& o) {
    for (const auto& [m, c] : o.terms) add(m, -c);
    return *this;
}

UqElement& UqElement::scale(cplx c) {
    if (c == 0.0) {
        terms.clear();
        return *this;
    }
    for (auto& [m, v] : terms) v *= c;
    return *this;
}

double UqElement::norm_inf() const {
    double r = 0.0;
    for (const auto& [m, c] : terms) r = std::max(r, std::abs(c));
    return r;
}

void UqElement::prune(double tol) {
    double scale = norm_inf();
    for (auto it = terms.begin(); it != terms.end();) {
        if (std::abs(it->second) <= tol * scale)
            it = terms.erase(it);
        else
            ++it;
    }
}

UqElement uq_zero() { return {}; }

UqElement uq_scalar(cplx c) {
    UqElement r;
    r.add(uq_one(), c);
    return r;
}

UqElement uq_gen_E() {
    UqElement r;
    r.add({1, 0, 0, 0}, 1.0);
    return r;
}

UqElement uq_gen_F() {
    UqElement r;
    r.add({0, 0, 0, 1}, 1.0);
    return r;
}

UqElement uq_gen_K1(int power) {
    UqElement r;
    r.add({0, power, 0, 0}, 1.0);
    return r;
}

UqElement uq_gen_K2(int power) {
    UqElement r;
    r.add({0, 0, power, 0}, 1.0);
    return r;
}

UqElement uq_gen_K(const Context&, int power) {
    UqElement r;
    r.add({0, power, -power, 0}, 1.0);
    return r;
}

UqElement uq_gen_Eprime(const Context& ctx) {
    UqElement r = uq_gen_E();
    r.scale(ctx.qpow(0.5) * ctx.lambda);
    return r;
}

UqElement uq_gen_Fprime(const Context& ctx) {
    UqElement r = uq_gen_F();
    r.scale(ctx.qpow(-0.5) * ctx.lambda);
    return r;
}

namespace {

// Product of two PBW monomials, expanded back into normal form.  The only
// nontrivial rewrite is F E = E F - lambda^{-1}(K1^2 K2^{-2} - K1^{-2} K2^2);
// commuting K powers past E or F contributes a q-phase.
UqElement mono_mul(const Context& ctx, const UqMono& a, const UqMono& b, cplx coeff) {
    UqElement out;
    if (coeff == 0.0) return out;
    if (a.f == 0) {
        // K1^m K2^n E^a2 = q^{(m-n) a2 / 2} E^a2 K1^m K2^n
        cplx phase = ctx.qpow(0.5 * (a.k1 - a.k2) * b.e);
        out.add({a.e + b.e, a.k1 + b.k1, a.k2 + b.k2, b.f}, coeff * phase);
        return out;
    }
    if (b.e == 0) {
        // F^b1 K1^m K2^n = q^{(m-n) b1 / 2} K1^m K2^n F^b1
        cplx phase = ctx.qpow(0.5 * (b.k1 - b.k2) * a.f);
        out.add({a.e, a.k1 + b.k1, a.k2 + b.k2, a.f + b.f}, coeff * phase);
        return out;
    }
    // a.f >= 1 and b.e >= 1: peel one F past one E.
    UqMono left{a.e, a.k1, a.k2, a.f - 1};
    UqMono right{b.e - 1, b.k1, b.k2, b.f};
    cplx li = 1.0 / ctx.lambda;

    UqElement mid;
    mid.add({1, 0, 0, 1}, 1.0);        // E F
    mid.add({0, 2, -2, 0}, -li);       // - lambda^{-1} K^2
    mid.add({0, -2, 2, 0}, li);        // + lambda^{-1} K^{-2}

    for (const auto& [m, c] : mid.terms) {
        UqElement lm = mono_mul(ctx, left, m, coeff * c);
        for (const auto& [m2, c2] : lm.terms) {
            UqElement r = mono_mul(ctx, m2, right, c2);
            out += r;
        }
    }
    return out;
}

}  // namespace

UqElement uq_mul(const Context& ctx, const UqElement& a, const UqElement& b) {
    UqElement out;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) out += mono_mul(ctx, ma, mb, ca * cb);
    out.prune();
    return out;
}

UqElement uq_add(const UqElement& a, const UqElement& b) {
    UqElement r = a;
    r += b;
    return r;
}

UqElement uq_sub(const UqElement& a, const UqElement& b) {
    UqElement r = a;
    r -= b;
    return r;
}

UqElement uq_pow(const Context& ctx, const UqElement& a, int n) {
    UqElement r = uq_scalar(1.0);
    for (int i = 0; i < n; ++i) r = uq_mul(ctx, r, a);
    return r;
}

cplx uq_counit(const UqElement& a) {
    cplx r = 0.0;
    for (const auto& [m, c] : a.terms)
        if (m.e == 0 && m.f == 0) r += c;
    return r;
}

UqElement uq_antipode(const Context& ctx, const UqElement& a) {
    UqElement out;
    for (const auto& [m, c] : a.terms) {
        // S(E^e K1^m1 K2^n1 F^f) = (-1/q F)^f K2^{-n1} K1^{-m1} (-q E)^e
        cplx coeff = c * cpow_int(-ctx.q, m.e) * cpow_int(-1.0 / ctx.q, m.f);
        UqElement w = mono_mul(ctx, {0, 0, 0, m.f}, {0, -m.k1, -m.k2, 0}, coeff);
        for (const auto& [m2, c2] : w.terms) out += mono_mul(ctx, m2, {m.e, 0, 0, 0}, c2);
    }
    out.prune();
    return out;
}

UqElement uq_star(const Context& ctx, const UqElement& a, StarFlavor flavor) {
    // Antilinear anti-homomorphism.  star fixes K1, K2 and sends E -> -qE,
    // F -> -q^{-1}F.  dagger acts the same on E, F but K_j -> q^{-1/2} K_j,
    // the involution making E', F', q^{-1/4}K_j hermitean.
    UqElement out;
    for (const auto& [m, c] : a.terms) {
        cplx coeff = std::conj(c) * cpow_int(-ctx.q, m.e) * cpow_int(-1.0 / ctx.q, m.f);
        if (flavor == StarFlavor::dagger) coeff *= ctx.qpow(-0.5 * (m.k1 + m.k2));
        UqElement w = mono_mul(ctx, {0, 0, 0, m.f}, {0, m.k1, m.k2, 0}, coeff);
        for (const auto& [m2, c2] : w.terms) out += mono_mul(ctx, m2, {m.e, 0, 0, 0}, c2);
    }
    out.prune();
    return out;
}

cplx uq_chi(const Context& ctx, const UqElement& a) {
    cplx r = 0.0;
    for (const auto& [m, c] : a.terms)
        if (m.e == 0 && m.f == 0) r += c * ctx.qpow(0.5 * (m.k1 + m.k2));
    return r;
}

double uq_residual(const UqElement& a, const UqElement& b) {
    UqElement d = uq_sub(a, b);
    return d.norm_inf() / (1.0 + a.norm_inf() + b.norm_inf());
}

std::string uq_to_string(const UqElement& a) {
    if (a.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : a.terms) {
        if (!first) os << " + ";
        first = false;
        os << fmt_cplx(c);
        if (m.e) os << "*E" << (m.e == 1 ? "" : "^" + std::to_string(m.e));
        if (m.k1) os << "*K1" << (m.k1 == 1 ? "" : "^" + std::to_string(m.k1));
        if (m.k2) os << "*K2" << (m.k2 == 1 ? "" : "^" + std::to_string(m.k2));
        if (m.f) os << "*F" << (m.f == 1 ? "" : "^" + std::to_string(m.f));
    }
    return os.str();
}

UqTensor& UqTensor::add(const UqMono& l, const UqMono& r, cplx c) {
    auto key = std::make_pair(l, r);
    auto it = terms.find(key);
    if (it == terms.end()) {
        if (c != 0.0) terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0.0) terms.erase(it);
    }
    return *this;
}

void UqTensor::prune(double tol) {
    double scale = 0.0;
    for (const auto& [k, c] : terms) scale = std::max(scale, std::abs(c));
    for (auto it = terms.begin(); it != terms.end();) {
        if (std::abs(it->second) <= tol * scale)
            it = terms.erase(it);
        else
            ++it;
    }
}

namespace {

UqTensor coproduct_mono(const Context& ctx, const UqMono& m) {
    // Delta(E) = E (x) K + K^{-1} (x) E, Delta(F) = F (x) K + K^{-1} (x) F,
    // Delta(K_j) = K_j (x) K_j; extend multiplicatively.
    UqTensor t;
    t.add({0, m.k1, m.k2, 0}, {0, m.k1, m.k2, 0}, 1.0);
    UqTensor dE;
    dE.add({1, 0, 0, 0}, {0, 1, -1, 0}, 1.0);
    dE.add({0, -1, 1, 0}, {1, 0, 0, 0}, 1.0);
    UqTensor dF;
    dF.add({0, 0, 0, 1}, {0, 1, -1, 0}, 1.0);
    dF.add({0, -1, 1, 0}, {0, 0, 0, 1}, 1.0);
    UqTensor left;
    left.add(uq_one(), uq_one(), 1.0);
    for (int i = 0; i < m.e; ++i) left = uq_tensor_mul(ctx, left, dE);
    left = uq_tensor_mul(ctx, left, t);
    for (int i = 0; i < m.f; ++i) left = uq_tensor_mul(ctx, left, dF);
    return left;
}

}  // namespace

UqTensor uq_coproduct(const Context& ctx, const UqElement& a) {
    UqTensor out;
    for (const auto& [m, c] : a.terms) {
        UqTensor t = coproduct_mono(ctx, m);
        for (const auto& [k, v] : t.terms) out.add(k.first, k.second, c * v);
    }
    out.prune();
    return out;
}

UqTensor uq_tensor_mul(const Context& ctx, const UqTensor& a, const UqTensor& b) {
    UqTensor out;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            UqElement l = uq_mul(ctx, [&] {
                UqElement e;
                e.add(ka.first, 1.0);
                return e;
            }(), [&] {
                UqElement e;
                e.add(kb.first, 1.0);
                return e;
            }());
            UqElement r = uq_mul(ctx, [&] {
                UqElement e;
                e.add(ka.second, 1.0);
                return e;
            }(), [&] {
                UqElement e;
                e.add(kb.second, 1.0);
                return e;
            }());
            for (const auto& [ml, cl] : l.terms)
                for (const auto& [mr, cr] : r.terms)
                    out.add(ml, mr, ca * cb * cl * cr);
        }
    out.prune();
    return out;
}

UqElement uq_tensor_contract(const Context& ctx, const UqTensor& t) {
    UqElement out;
    for (const auto& [k, c] : t.terms) {
        UqElement l, r;
        l.add(k.first, 1.0);
        r.add(k.second, 1.0);
        UqElement p = uq_mul(ctx, l, r);
        p.scale(c);
        out += p;
    }
    out.prune();
    return out;
}

UqTensor uq_tensor_map_left(const Context& ctx, const UqTensor& t,
                            UqElement (*op)(const Context&, const UqElement&)) {
    UqTensor out;
    for (const auto& [k, c] : t.terms) {
        UqElement l;
        l.add(k.first, 1.0);
        UqElement img = op(ctx, l);
        for (const auto& [m, v] : img.terms) out.add(m, k.second, c * v);
    }
    out.prune();
    return out;
}

double uq_tensor_residual(const UqTensor& a, const UqTensor& b) {
    std::map<std::pair<UqMono, UqMono>, cplx> d = a.terms;
    for (const auto& [k, c] : b.terms) d[k] -= c;
    double num = 0.0, den = 1.0;
    for (const auto& [k, c] : d) num = std::max(num, std::abs(c));
    for (const auto& [k, c] : a.terms) den = std::max(den, std::abs(c));
    for (const auto& [k, c] : b.terms) den = std::max(den, std::abs(c));
    return num / den;
}

void UqTensor3::prune(double tol) {
    double scale = 0.0;
    for (const auto& [k, c] : terms) scale = std::max(scale, std::abs(c));
    for (auto it = terms.begin(); it != terms.end();) {
        if (std::abs(it->second) <= tol * scale)
            it = terms.erase(it);
        else
            ++it;
    }
}

UqTensor3 uq_coproduct_leg(const Context& ctx, const UqTensor& t, int leg) {
    UqTensor3 out;
    for (const auto& [k, c] : t.terms) {
        UqElement e;
        e.add(leg == 0 ? k.first : k.second, 1.0);
        UqTensor d = uq_coproduct(ctx, e);
        for (const auto& [k2, c2] : d.terms) {
            auto key = leg == 0 ? std::make_tuple(k2.first, k2.second, k.second)
                                : std::make_tuple(k.first, k2.first, k2.second);
            out.terms[key] += c * c2;
        }
    }
    out.prune();
    return out;
}

double uq_tensor3_residual(const UqTensor3& a, const UqTensor3& b) {
    auto d = a.terms;
    for (const auto& [k, c] : b.terms) d[k] -= c;
    double num = 0.0, den = 1.0;
    for (const auto& [k, c] : d) num = std::max(num, std::abs(c));
    for (const auto& [k, c] : a.terms) den = std::max(den, std::abs(c));
    for (const auto& [k, c] : b.terms) den = std::max(den, std::abs(c));
    return num / den;
}

}  // namespace qplane
