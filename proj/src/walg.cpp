#include "qplane/walg.hpp"

#include <sstream>
#include <stdexcept>

namespace qplane {

WElement& WElement::add(cplx s, cplx t, cplx c) {
    WKey key = make_wkey(s, t);
    auto it = terms.find(key);
    if (it == terms.end()) {
        if (c != 0.0) terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0.0) terms.erase(it);
    }
    return *this;
}

WElement& WElement::operator+=(const WElement& o) {
    for (const auto& [k, c] : o.terms) add(wkey_s(k), wkey_t(k), c);
    return *this;
}

WElement& WElement::operator-=(const WElement& o) {
    for (const auto& [k, c] : o.terms) add(wkey_s(k), wkey_t(k), -c);
    return *this;
}

WElement& WElement::scale(cplx c) {
    if (c == 0.0) {
        terms.clear();
        return *this;
    }
    for (auto& [k, v] : terms) v *= c;
    return *this;
}

double WElement::norm_inf() const {
    double r = 0.0;
    for (const auto& [k, c] : terms) r = std::max(r, std::abs(c));
    return r;
}

void WElement::prune(double tol) {
    double scale = norm_inf();
    for (auto it = terms.begin(); it != terms.end();) {
        if (std::abs(it->second) <= tol * scale)
            it = terms.erase(it);
        else
            ++it;
    }
}

WElement w_zero() { return {}; }

WElement w_gen(cplx s, cplx t, cplx c) {
    WElement u;
    u.add(s, t, c);
    return u;
}

WElement w_one() { return w_gen(0.0, 0.0, 1.0); }

WElement w_mul(const Context& ctx, const WElement& a, const WElement& b) {
    const cplx ig = cplx(0, 1) * kPi * ctx.gamma;
    WElement out;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            cplx s1 = wkey_s(ka), t1 = wkey_t(ka), s2 = wkey_s(kb), t2 = wkey_t(kb);
            cplx phase = std::exp(ig * (s2 * t1 - s1 * t2));
            out.add(s1 + s2, t1 + t2, ca * cb * phase);
        }
    out.prune();
    return out;
}

WElement w_add(const WElement& a, const WElement& b) {
    WElement r = a;
    r += b;
    return r;
}

WElement w_sub(const WElement& a, const WElement& b) {
    WElement r = a;
    r -= b;
    return r;
}

WElement w_star(const Context&, const WElement& a) {
    WElement out;
    for (const auto& [k, c] : a.terms)
        out.add(-std::conj(wkey_s(k)), -std::conj(wkey_t(k)), std::conj(c));
    return out;
}

WElement w_single_term_inverse(const Context&, const WElement& a) {
    if (a.terms.size() != 1)
        throw std::domain_error("only single-term W elements are invertible here");
    const auto& [k, c] = *a.terms.begin();
    // W(s,t) W(-s,-t) = W(0,0) with no phase
    return w_gen(-wkey_s(k), -wkey_t(k), 1.0 / c);
}

namespace {

WElement act_gen(const Context& ctx, char gen, int power, const WElement& u) {
    const double g = ctx.gamma;
    const cplx tp = 2.0 * kPi * g;
    WElement out;
    switch (gen) {
        case '1':
            for (const auto& [k, c] : u.terms)
                out.add(wkey_s(k), wkey_t(k), c * std::exp(kPi * g * double(power) * wkey_s(k)));
            return out;
        case '2':
            for (const auto& [k, c] : u.terms)
                out.add(wkey_s(k), wkey_t(k), c * std::exp(kPi * g * double(power) * wkey_t(k)));
            return out;
        case 'E':
            for (const auto& [k, c] : u.terms) {
                cplx s = wkey_s(k), t = wkey_t(k);
                cplx v = c * (std::exp(-tp * s) - std::exp(tp * s)) / ctx.lambda;
                out.add(s + cplx(0, 1), t - cplx(0, 1), v);
            }
            return out;
        case 'F':
            for (const auto& [k, c] : u.terms) {
                cplx s = wkey_s(k), t = wkey_t(k);
                cplx v = c * (std::exp(-tp * t) - std::exp(tp * t)) / ctx.lambda;
                out.add(s - cplx(0, 1), t + cplx(0, 1), v);
            }
            return out;
    }
    throw std::logic_error("act_gen");
}

}  // namespace

WElement w_act(const Context& ctx, const UqElement& f, const WElement& u) {
    WElement out;
    for (const auto& [m, c] : f.terms) {
        WElement w = u;
        for (int i = 0; i < m.f; ++i) w = act_gen(ctx, 'F', 1, w);
        if (m.k2) w = act_gen(ctx, '2', m.k2, w);
        if (m.k1) w = act_gen(ctx, '1', m.k1, w);
        for (int i = 0; i < m.e; ++i) w = act_gen(ctx, 'E', 1, w);
        w.scale(c);
        out += w;
    }
    out.prune();
    return out;
}

WElement w_mult_xy(const Context& ctx, WSide side, WGen gen, const WElement& u) {
    const double g = ctx.gamma;
    WElement out;
    for (const auto& [k, c] : u.terms) {
        cplx s = wkey_s(k), t = wkey_t(k);
        if (gen == WGen::x) {
            cplx w = (side == WSide::left) ? std::exp(-kPi * g * t) : std::exp(kPi * g * t);
            out.add(s - cplx(0, 1), t, c * w);
        } else {
            cplx w = (side == WSide::left) ? std::exp(kPi * g * s) : std::exp(-kPi * g * s);
            out.add(s, t - cplx(0, 1), c * w);
        }
    }
    return out;
}

WElement w_embed(const Context& ctx, const PlaneElement& z) {
    WElement out;
    for (const auto& [k, c] : z.terms) {
        double m = k.first, n = k.second;
        out.add(cplx(0, -m), cplx(0, -n), c * ctx.qpow(0.5 * m * n));
    }
    return out;
}

std::pair<WElement, WElement> w_partials(const Context& ctx, const WElement& u) {
    const double g = ctx.gamma;
    const cplx den = 1.0 - ctx.qpow(-2.0);
    WElement px, py;
    for (const auto& [k, c] : u.terms) {
        cplx s = wkey_s(k), t = wkey_t(k);
        px.add(s + cplx(0, 1), t,
               c * (1.0 - std::exp(4.0 * kPi * g * s)) / den * std::exp(kPi * g * t));
        py.add(s, t + cplx(0, 1),
               c * (1.0 - std::exp(4.0 * kPi * g * t)) / den * std::exp(3.0 * kPi * g * s));
    }
    px.prune();
    py.prune();
    return {px, py};
}

WForm w_d(const Context& ctx, const WElement& u) {
    // omega = q^2 x^2 y^{-2} e1 + y^{-2} e2 embedded into W
    WElement w1 = w_embed(ctx, plane_mono(2, -2, ctx.qpow(2.0)));
    WElement w2 = w_embed(ctx, plane_mono(0, -2));
    WForm out;
    out.c1 = w_sub(w_mul(ctx, w1, u), w_mul(ctx, u, w1));
    out.c2 = w_sub(w_mul(ctx, w2, u), w_mul(ctx, u, w2));
    return out;
}

std::pair<WElement, WElement> w_partials_commutator(const Context& ctx, const WElement& u) {
    WForm d = w_d(ctx, u);
    cplx q2 = ctx.qpow(2.0);
    // dx = (q^2-1) q^2 x^3 y^{-2} e1 + (q^2-1) x y^{-2} e2, dy = (q^2-1) x^2 y^{-1} e1
    WElement dx1 = w_embed(ctx, plane_mono(3, -2, (q2 - 1.0) * q2));
    WElement dx2 = w_embed(ctx, plane_mono(1, -2, q2 - 1.0));
    WElement dy1 = w_embed(ctx, plane_mono(2, -1, q2 - 1.0));
    WElement px = w_mul(ctx, w_single_term_inverse(ctx, dx2), d.c2);
    WElement rest = w_sub(d.c1, w_mul(ctx, dx1, px));
    WElement py = w_mul(ctx, w_single_term_inverse(ctx, dy1), rest);
    double s0 = std::max(px.norm_inf(), py.norm_inf());
    for (auto* e : {&px, &py})
        for (auto it = e->terms.begin(); it != e->terms.end();)
            it = (std::abs(it->second) <= 1e-13 * s0) ? e->terms.erase(it) : std::next(it);
    return {px, py};
}

double w_residual(const WElement& a, const WElement& b) {
    WElement d = w_sub(a, b);
    return d.norm_inf() / (1.0 + a.norm_inf() + b.norm_inf());
}

std::string w_to_string(const WElement& a) {
    if (a.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : a.terms) {
        if (!first) os << " + ";
        first = false;
        os << fmt_cplx(c) << "*W(" << fmt_cplx(wkey_s(k)) << "," << fmt_cplx(wkey_t(k)) << ")";
    }
    return os.str();
}

}  // namespace qplane
