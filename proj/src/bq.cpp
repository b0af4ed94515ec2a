#include "qplane/bq.hpp"

#include <stdexcept>

namespace qplane {

BqElement& BqElement::add(const BqMono& m, cplx c) {
    auto it = terms.find(m);
    if (it == terms.end()) {
        if (c != 0.0) terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0.0) terms.erase(it);
    }
    return *this;
}

BqElement& BqElement::operator+=(const BqElement& o) {
    for (const auto& [m, c] : o.terms) add(m, c);
    return *this;
}

BqElement& BqElement::operator-=(const BqElement& o) {
    for (const auto& [m, c] : o.terms) add(m, -c);
    return *this;
}

BqElement& BqElement::scale(cplx c) {
    if (c == 0.0) {
        terms.clear();
        return *this;
    }
    for (auto& [m, v] : terms) v *= c;
    return *this;
}

double BqElement::norm_inf() const {
    double r = 0.0;
    for (const auto& [m, c] : terms) r = std::max(r, std::abs(c));
    return r;
}

void BqElement::prune(double tol) {
    double scale = norm_inf();
    for (auto it = terms.begin(); it != terms.end();) {
        if (std::abs(it->second) <= tol * scale)
            it = terms.erase(it);
        else
            ++it;
    }
}

BqElement bq_zero() { return {}; }

BqElement bq_scalar(cplx c) { return bq_mono(0, 0, 0, 0, c); }

BqElement bq_mono(int a, int b, int c, int d, cplx coeff) {
    BqElement u;
    u.add({a, b, c, d}, coeff);
    return u;
}

BqElement bq_mul(const Context& ctx, const BqElement& u, const BqElement& v) {
    BqElement out;
    for (const auto& [mu, cu] : u.terms)
        for (const auto& [mv, cv] : v.terms) {
            // y1^b x1^{a'} = q^{-a'b/8} x1^{a'} y1^b, same on axis 2
            cplx phase = ctx.qpow(-(double(mv[0]) * mu[1] + double(mv[2]) * mu[3]) / 8.0);
            out.add({mu[0] + mv[0], mu[1] + mv[1], mu[2] + mv[2], mu[3] + mv[3]},
                    cu * cv * phase);
        }
    out.prune();
    return out;
}

BqElement bq_add(const BqElement& u, const BqElement& v) {
    BqElement r = u;
    r += v;
    return r;
}

BqElement bq_sub(const BqElement& u, const BqElement& v) {
    BqElement r = u;
    r -= v;
    return r;
}

BqElement bq_mono_inverse(const Context& ctx, const BqMono& m, cplx coeff) {
    // (x1^a y1^b x2^c y2^d)^{-1} = q^{-(ab+cd)/8} x1^{-a} y1^{-b} x2^{-c} y2^{-d}
    cplx phase = ctx.qpow(-(double(m[0]) * m[1] + double(m[2]) * m[3]) / 8.0);
    return bq_mono(-m[0], -m[1], -m[2], -m[3], phase / coeff);
}

BqElement bq_pow(const Context& ctx, const BqElement& u, int n) {
    if (n < 0) {
        if (u.terms.size() != 1)
            throw std::domain_error("bq_pow: negative power of a non-monomial");
        const auto& [m, c] = *u.terms.begin();
        return bq_pow(ctx, bq_mono_inverse(ctx, m, c), -n);
    }
    BqElement r = bq_scalar(1.0);
    for (int i = 0; i < n; ++i) r = bq_mul(ctx, r, u);
    return r;
}

BqElement bq_star(const Context& ctx, const BqElement& u) {
    // generators are hermitean; reversing x1^a y1^b gives q^{-ab/8} phases
    BqElement out;
    for (const auto& [m, c] : u.terms) {
        cplx phase = ctx.qpow(-(double(m[0]) * m[1] + double(m[2]) * m[3]) / 8.0);
        out.add(m, std::conj(c) * phase);
    }
    return out;
}

double bq_residual(const BqElement& u, const BqElement& v) {
    BqElement d = bq_sub(u, v);
    return d.norm_inf() / (1.0 + u.norm_inf() + v.norm_inf());
}

BqElement bq_psi_uq(const Context& ctx, const UqElement& f) {
    cplx li = 1.0 / ctx.lambda;
    BqElement psiE = bq_sub(bq_mono(-2, -4, 2, 0, li), bq_mono(-2, 4, 2, 0, li));
    BqElement psiF = bq_sub(bq_mono(2, 0, -2, -4, li), bq_mono(2, 0, -2, 4, li));
    BqElement out;
    for (const auto& [m, c] : f.terms) {
        BqElement w = bq_mono(0, 2 * m.k1, 0, 2 * m.k2);  // psi(K1)^k1 psi(K2)^k2
        for (int i = 0; i < m.e; ++i) w = bq_mul(ctx, psiE, w);
        for (int i = 0; i < m.f; ++i) w = bq_mul(ctx, w, psiF);
        w.scale(c);
        out += w;
    }
    out.prune();
    return out;
}

BqElement bq_psi_plane(const Context& ctx, const PlaneElement& z) {
    BqElement out;
    for (const auto& [k, c] : z.terms) {
        BqElement w = bq_mul(ctx, bq_pow(ctx, bq_mono(2, 0, 0, -2), k.first),
                             bq_pow(ctx, bq_mono(0, 2, 2, 0), k.second));
        w.scale(c);
        out += w;
    }
    out.prune();
    return out;
}

namespace {

BqElement conjugate_by_g(const Context& ctx, const BqElement& u) {
    BqElement g = bq_mono(1, -1, 1, 1);
    BqElement ginv = bq_mono_inverse(ctx, {1, -1, 1, 1}, 1.0);
    return bq_mul(ctx, bq_mul(ctx, g, u), ginv);
}

}  // namespace

BqElement bq_phi_uq(const Context& ctx, const UqElement& f) {
    return conjugate_by_g(ctx, bq_psi_uq(ctx, f));
}

BqElement bq_phi_plane(const Context& ctx, const PlaneElement& z) {
    return conjugate_by_g(ctx, bq_psi_plane(ctx, z));
}

SymbolOp bq_rho0(const Context& ctx, const BqElement& u) {
    // rho0(x1) = e^{pi alpha Q1}, rho0(y1) = e^{(pi/2) beta P1},
    // rho0(x2) = e^{pi beta Q2}, rho0(y2) = e^{(pi/2) alpha P2};
    // a monomial becomes one multiplication and one shift, shift first.
    SymbolOp out;
    for (const auto& [m, c] : u.terms) {
        SymbolOp::Chain chain;
        chain.coeff = c;
        SymbolOp::Prim mul{SymbolOp::Prim::MulExp, kPi * ctx.alpha * double(m[0]),
                           kPi * ctx.beta * double(m[2]), 0, 0};
        SymbolOp::Prim shift{SymbolOp::Prim::Shift, cplx(0, -0.25 * ctx.beta * double(m[1])),
                             cplx(0, -0.25 * ctx.alpha * double(m[3])), 0, 0};
        if (mul.p1 != 0.0 || mul.p2 != 0.0) chain.prims.push_back(mul);
        if (shift.p1 != 0.0 || shift.p2 != 0.0) chain.prims.push_back(shift);
        out.chains.push_back(std::move(chain));
    }
    return out;
}

Symbol bq_act_symbol(const Context& ctx, const UqElement& f, const Symbol& a) {
    return symbolop_apply(bq_rho0(ctx, bq_psi_uq(ctx, f)), a);
}

Symbol bq_act_symbol_closed(const Context& ctx, UqGen gen, const Symbol& a) {
    const double al = ctx.alpha, be = ctx.beta;
    switch (gen) {
        case UqGen::E: {
            Symbol diff = symbol_sub(symbol_shift(a, cplx(0, be), 0.0),
                                     symbol_shift(a, cplx(0, -be), 0.0));
            diff = symbol_mul_exp(diff, -2.0 * kPi * al, 2.0 * kPi * be);
            diff.scale(1.0 / ctx.lambda);
            return diff;
        }
        case UqGen::F: {
            Symbol diff = symbol_sub(symbol_shift(a, 0.0, cplx(0, al)),
                                     symbol_shift(a, 0.0, cplx(0, -al)));
            diff = symbol_mul_exp(diff, 2.0 * kPi * al, -2.0 * kPi * be);
            diff.scale(1.0 / ctx.lambda);
            return diff;
        }
        case UqGen::K1: return symbol_shift(a, cplx(0, -0.5 * be), 0.0);
        case UqGen::K2: return symbol_shift(a, 0.0, cplx(0, -0.5 * al));
        case UqGen::K1inv: return symbol_shift(a, cplx(0, 0.5 * be), 0.0);
        case UqGen::K2inv: return symbol_shift(a, 0.0, cplx(0, 0.5 * al));
    }
    throw std::logic_error("bq_act_symbol_closed");
}

Symbol bq_mixed_left(const Context& ctx, const PlaneElement& z, const Symbol& a) {
    if (z.localized()) throw std::domain_error("mixed product needs z in O(R^2_q)");
    return symbolop_apply(bq_rho0(ctx, bq_psi_plane(ctx, z)), a);
}

Symbol bq_mixed_right(const Context& ctx, const Symbol& a, const PlaneElement& z) {
    if (z.localized()) throw std::domain_error("mixed product needs z in O(R^2_q)");
    // a x = rho0(x1^2 y2^2) a and a y = rho0(x2^2 y1^{-2}) a, applied per power
    SymbolOp rx = bq_rho0(ctx, bq_mono(2, 0, 0, 2));
    SymbolOp ry = bq_rho0(ctx, bq_mono(0, -2, 2, 0));
    Symbol out;
    for (const auto& [k, c] : z.terms) {
        Symbol v = a;
        for (int i = 0; i < k.first; ++i) v = symbolop_apply(rx, v);
        for (int i = 0; i < k.second; ++i) v = symbolop_apply(ry, v);
        v.scale(c);
        out += v;
    }
    return out;
}

Symbol bq_partial_x(const Context& ctx, const Symbol& a) {
    BqElement op = bq_sub(bq_mono(-2, 0, 0, 2), bq_mono(-2, 8, 0, 2));
    op.scale(1.0 / (1.0 - ctx.qpow(-2.0)));
    return symbolop_apply(bq_rho0(ctx, op), a);
}

Symbol bq_partial_y(const Context& ctx, const Symbol& a) {
    BqElement op = bq_sub(bq_mono(0, 6, -2, 0), bq_mono(0, 6, -2, 8));
    op.scale(1.0 / (1.0 - ctx.qpow(-2.0)));
    return symbolop_apply(bq_rho0(ctx, op), a);
}

MixedElement& MixedElement::operator+=(const MixedElement& o) {
    z += o.z;
    a += o.a;
    return *this;
}

MixedElement& MixedElement::scale(cplx c) {
    z.scale(c);
    a.scale(c);
    return *this;
}

MixedElement mixed_make(const PlaneElement& z, const Symbol& a) { return {z, a}; }

MixedElement mixed_mul(const Context& ctx, const MixedElement& u, const MixedElement& v) {
    MixedElement out;
    out.z = plane_mul(ctx, u.z, v.z);
    out.a = symbol_twisted(u.a, v.a);
    out.a += bq_mixed_left(ctx, u.z, v.a);
    out.a += bq_mixed_right(ctx, u.a, v.z);
    return out;
}

MixedElement mixed_act(const Context& ctx, const UqElement& f, const MixedElement& u) {
    return {plane_act(ctx, f, u.z), bq_act_symbol(ctx, f, u.a)};
}

MixedElement mixed_star(const Context& ctx, const MixedElement& u) {
    return {plane_involution(ctx, u.z), symbol_star(u.a)};
}

double mixed_residual(const MixedElement& u, const MixedElement& v) {
    return std::max(plane_residual(u.z, v.z), symbol_residual(u.a, v.a));
}

}  // namespace qplane
