#include "qplane/plane.hpp"

#include <sstream>
#include <stdexcept>

namespace qplane {

PlaneElement& PlaneElement::add(int m, int n, cplx c) {
    auto key = std::make_pair(m, n);
    auto it = terms.find(key);
    if (it == terms.end()) {
        if (c != 0.0) terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0.0) terms.erase(it);
    }
    return *this;
}

PlaneElement& PlaneElement::operator+=(const PlaneElement& o) {
    for (const auto& [k, c] : o.terms) add(k.first, k.second, c);
    return *this;
}

PlaneElement& PlaneElement::operator-=(const PlaneElement& o) {
    for (const auto& [k, c] : o.terms) add(k.first, k.second, -c);
    return *this;
}

PlaneElement& PlaneElement::scale(cplx c) {
    if (c == 0.0) {
        terms.clear();
        return *this;
    }
    for (auto& [k, v] : terms) v *= c;
    return *this;
}

bool PlaneElement::localized() const {
    for (const auto& [k, c] : terms)
        if (k.first < 0 || k.second < 0) return true;
    return false;
}

double PlaneElement::norm_inf() const {
    double r = 0.0;
    for (const auto& [k, c] : terms) r = std::max(r, std::abs(c));
    return r;
}

void PlaneElement::prune(double tol) {
    double scale = norm_inf();
    for (auto it = terms.begin(); it != terms.end();) {
        if (std::abs(it->second) <= tol * scale)
            it = terms.erase(it);
        else
            ++it;
    }
}

PlaneElement plane_zero() { return {}; }

PlaneElement plane_scalar(cplx c) { return plane_mono(0, 0, c); }

PlaneElement plane_mono(int m, int n, cplx c) {
    PlaneElement z;
    z.add(m, n, c);
    return z;
}

PlaneElement plane_mul(const Context& ctx, const PlaneElement& a, const PlaneElement& b) {
    PlaneElement out;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            // y^{n_a} x^{m_b} = q^{-n_a m_b} x^{m_b} y^{n_a}
            cplx phase = ctx.qpow(-double(ka.second) * double(kb.first));
            out.add(ka.first + kb.first, ka.second + kb.second, ca * cb * phase);
        }
    out.prune();
    return out;
}

PlaneElement plane_add(const PlaneElement& a, const PlaneElement& b) {
    PlaneElement r = a;
    r += b;
    return r;
}

PlaneElement plane_sub(const PlaneElement& a, const PlaneElement& b) {
    PlaneElement r = a;
    r -= b;
    return r;
}

PlaneElement plane_involution(const Context& ctx, const PlaneElement& z) {
    // (x^m y^n)^* = y^n x^m = q^{-nm} x^m y^n, coefficient conjugated
    PlaneElement out;
    for (const auto& [k, c] : z.terms)
        out.add(k.first, k.second, std::conj(c) * ctx.qpow(-double(k.first) * double(k.second)));
    return out;
}

PlaneElement plane_mono_inverse(const Context& ctx, int m, int n, cplx c) {
    // (x^m y^n)^{-1} = y^{-n} x^{-m} = q^{-nm} x^{-m} y^{-n}
    return plane_mono(-m, -n, ctx.qpow(-double(n) * double(m)) / c);
}

namespace {

// q-integer (1 - q^{-2m}) / (1 - q^{-2})
cplx qint(const Context& ctx, int m) {
    return (1.0 - ctx.qpow(-2.0 * m)) / (1.0 - ctx.qpow(-2.0));
}

PlaneElement act_gen(const Context& ctx, char gen, int power, const PlaneElement& z) {
    PlaneElement out;
    switch (gen) {
        case '1':  // K1^power
            for (const auto& [k, c] : z.terms)
                out.add(k.first, k.second, c * ctx.qpow(-0.5 * power * k.first));
            return out;
        case '2':  // K2^power
            for (const auto& [k, c] : z.terms)
                out.add(k.first, k.second, c * ctx.qpow(-0.5 * power * k.second));
            return out;
        case 'E':
            for (const auto& [k, c] : z.terms) {
                if (k.first == 0) continue;
                cplx v = c * ctx.qpow(0.5 * (k.first + k.second - 1)) * qint(ctx, k.first);
                out.add(k.first - 1, k.second + 1, v);
            }
            return out;
        case 'F':
            for (const auto& [k, c] : z.terms) {
                if (k.second == 0) continue;
                cplx v = c * ctx.qpow(0.5 * (k.first + k.second - 1)) * qint(ctx, k.second);
                out.add(k.first + 1, k.second - 1, v);
            }
            return out;
    }
    throw std::logic_error("act_gen");
}

}  // namespace

PlaneElement plane_act(const Context& ctx, const UqElement& f, const PlaneElement& z) {
    if (z.localized())
        throw std::domain_error("action is defined on O(R^2_q) only (nonnegative exponents)");
    PlaneElement out;
    for (const auto& [m, c] : f.terms) {
        PlaneElement w = z;
        if (m.f) {
            for (int i = 0; i < m.f; ++i) w = act_gen(ctx, 'F', 1, w);
        }
        if (m.k2) w = act_gen(ctx, '2', m.k2, w);
        if (m.k1) w = act_gen(ctx, '1', m.k1, w);
        if (m.e) {
            for (int i = 0; i < m.e; ++i) w = act_gen(ctx, 'E', 1, w);
        }
        w.scale(c);
        out += w;
    }
    out.prune();
    return out;
}

PlaneElement plane_qderiv_x(const Context& ctx, const PlaneElement& z) {
    PlaneElement w = plane_act(ctx, uq_gen_Eprime(ctx), z);
    w = plane_mul(ctx, plane_mono_inverse(ctx, 0, 1), w);
    // K = K1 K2^{-1} acts on the localized result monomial-wise
    PlaneElement out;
    for (const auto& [k, c] : w.terms)
        out.add(k.first, k.second, c * ctx.qpow(0.5 * (k.second - k.first)));
    return out;
}

PlaneElement plane_qderiv_y(const Context& ctx, const PlaneElement& z) {
    PlaneElement w = plane_act(ctx, uq_gen_Fprime(ctx), z);
    w = plane_mul(ctx, plane_mono_inverse(ctx, 1, 0), w);
    PlaneElement out;
    for (const auto& [k, c] : w.terms)
        out.add(k.first, k.second, c * ctx.qpow(0.5 * (k.second - k.first)));
    return out;
}

double plane_residual(const PlaneElement& a, const PlaneElement& b) {
    PlaneElement d = plane_sub(a, b);
    return d.norm_inf() / (1.0 + a.norm_inf() + b.norm_inf());
}

std::string plane_to_string(const PlaneElement& a) {
    if (a.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : a.terms) {
        if (!first) os << " + ";
        first = false;
        os << fmt_cplx(c);
        if (k.first) os << "*x" << (k.first == 1 ? "" : "^" + std::to_string(k.first));
        if (k.second) os << "*y" << (k.second == 1 ? "" : "^" + std::to_string(k.second));
    }
    return os.str();
}

PlaneForm& PlaneForm::operator+=(const PlaneForm& o) {
    c1 += o.c1;
    c2 += o.c2;
    return *this;
}

PlaneForm& PlaneForm::operator-=(const PlaneForm& o) {
    c1 -= o.c1;
    c2 -= o.c2;
    return *this;
}

PlaneForm plane_omega(const Context& ctx, Calculus calc) {
    PlaneForm w;
    if (calc == Calculus::minus) {
        w.c1 = plane_mono(2, -2, ctx.qpow(2.0));
        w.c2 = plane_mono(0, -2);
    } else {
        // q^-2 y^2 x^-2 = q^2 x^-2 y^2 in normal order
        w.c1 = plane_mono(-2, 2, ctx.qpow(2.0));
        w.c2 = plane_mono(-2, 0);
    }
    return w;
}

PlaneForm plane_dx_form(const Context& ctx, Calculus calc) {
    PlaneForm w;
    cplx q2 = ctx.qpow(2.0), qm2 = ctx.qpow(-2.0);
    if (calc == Calculus::minus) {
        w.c1 = plane_mono(3, -2, (q2 - 1.0) * q2);
        w.c2 = plane_mono(1, -2, q2 - 1.0);
    } else {
        // (q^-2 - 1) y^2 x^-1 = (q^-2 - 1) q^2 x^-1 y^2
        w.c1 = plane_mono(-1, 2, (qm2 - 1.0) * q2);
    }
    return w;
}

PlaneForm plane_dy_form(const Context& ctx, Calculus calc) {
    PlaneForm w;
    cplx q2 = ctx.qpow(2.0), qm2 = ctx.qpow(-2.0);
    if (calc == Calculus::minus) {
        w.c1 = plane_mono(2, -1, q2 - 1.0);
    } else {
        // (q^-2-1) q^-2 y^3 x^-2 = (q^-2-1) q^4 x^-2 y^3,
        // (q^-2-1) y x^-2 = (q^-2-1) q^2 x^-2 y
        w.c1 = plane_mono(-2, 3, (qm2 - 1.0) * ctx.qpow(4.0));
        w.c2 = plane_mono(-2, 1, (qm2 - 1.0) * q2);
    }
    return w;
}

PlaneForm plane_d(const Context& ctx, const PlaneElement& z, Calculus calc) {
    PlaneForm w = plane_omega(ctx, calc);
    PlaneForm out;
    out.c1 = plane_sub(plane_mul(ctx, w.c1, z), plane_mul(ctx, z, w.c1));
    out.c2 = plane_sub(plane_mul(ctx, w.c2, z), plane_mul(ctx, z, w.c2));
    return out;
}

PlaneForm plane_form_mul_left(const Context& ctx, const PlaneElement& z, const PlaneForm& w) {
    return {plane_mul(ctx, z, w.c1), plane_mul(ctx, z, w.c2)};
}

PlaneForm plane_form_mul_right(const Context& ctx, const PlaneForm& w, const PlaneElement& z) {
    return {plane_mul(ctx, w.c1, z), plane_mul(ctx, w.c2, z)};
}

double plane_form_residual(const PlaneForm& a, const PlaneForm& b) {
    return std::max(plane_residual(a.c1, b.c1), plane_residual(a.c2, b.c2));
}

namespace {

struct BasisData {
    // dx = a1*e1 + a2*e2, dy = b1*e1 (+ 0*e2) for Gamma_-;
    // dx = a1*e1, dy = b1*e1 + b2*e2 for Gamma_+.
    PlaneForm dx, dy;
};

BasisData basis_forms(const Context& ctx, Calculus calc) {
    return {plane_dx_form(ctx, calc), plane_dy_form(ctx, calc)};
}

}  // namespace

namespace {

// drop roundoff leftovers using the joint scale of both components
void prune_pair(PlaneElement& a, PlaneElement& b) {
    double s = std::max(a.norm_inf(), b.norm_inf());
    for (auto* e : {&a, &b})
        for (auto it = e->terms.begin(); it != e->terms.end();)
            it = (std::abs(it->second) <= 1e-13 * s) ? e->terms.erase(it) : std::next(it);
}

}  // namespace

OneForm plane_differential(const Context& ctx, const PlaneElement& z, Calculus calc) {
    PlaneForm d = plane_d(ctx, z, calc);
    BasisData b = basis_forms(ctx, calc);
    OneForm out;
    out.calc = calc;
    if (calc == Calculus::minus) {
        // cx * dx.c2 = d.c2 since dy has no e2 part
        auto& dxc2 = *b.dx.c2.terms.begin();
        PlaneElement inv = plane_mono_inverse(ctx, dxc2.first.first, dxc2.first.second, dxc2.second);
        out.cx = plane_mul(ctx, d.c2, inv);
        auto& dyc1 = *b.dy.c1.terms.begin();
        PlaneElement rest = plane_sub(d.c1, plane_mul(ctx, out.cx, b.dx.c1));
        out.cy = plane_mul(ctx, rest, plane_mono_inverse(ctx, dyc1.first.first, dyc1.first.second, dyc1.second));
        prune_pair(out.cx, out.cy);
    } else {
        auto& dyc2 = *b.dy.c2.terms.begin();
        out.cy = plane_mul(ctx, d.c2, plane_mono_inverse(ctx, dyc2.first.first, dyc2.first.second, dyc2.second));
        auto& dxc1 = *b.dx.c1.terms.begin();
        PlaneElement rest = plane_sub(d.c1, plane_mul(ctx, out.cy, b.dy.c1));
        out.cx = plane_mul(ctx, rest, plane_mono_inverse(ctx, dxc1.first.first, dxc1.first.second, dxc1.second));
        prune_pair(out.cx, out.cy);
    }
    return out;
}

std::pair<PlaneElement, PlaneElement> plane_partials(const Context& ctx,
                                                     const PlaneElement& z,
                                                     Calculus calc) {
    PlaneForm d = plane_d(ctx, z, calc);
    BasisData b = basis_forms(ctx, calc);
    PlaneElement px, py;
    if (calc == Calculus::minus) {
        auto& dxc2 = *b.dx.c2.terms.begin();
        px = plane_mul(ctx, plane_mono_inverse(ctx, dxc2.first.first, dxc2.first.second, dxc2.second), d.c2);
        auto& dyc1 = *b.dy.c1.terms.begin();
        PlaneElement rest = plane_sub(d.c1, plane_mul(ctx, b.dx.c1, px));
        py = plane_mul(ctx, plane_mono_inverse(ctx, dyc1.first.first, dyc1.first.second, dyc1.second), rest);
        prune_pair(px, py);
    } else {
        auto& dyc2 = *b.dy.c2.terms.begin();
        py = plane_mul(ctx, plane_mono_inverse(ctx, dyc2.first.first, dyc2.first.second, dyc2.second), d.c2);
        auto& dxc1 = *b.dx.c1.terms.begin();
        PlaneElement rest = plane_sub(d.c1, plane_mul(ctx, b.dy.c1, py));
        px = plane_mul(ctx, plane_mono_inverse(ctx, dxc1.first.first, dxc1.first.second, dxc1.second), rest);
        prune_pair(px, py);
    }
    return {px, py};
}

}  // namespace qplane
