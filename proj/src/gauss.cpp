#include "qplane/gauss.hpp"

#include <stdexcept>

namespace qplane {

QuadExp QuadExp::one() {
    QuadExp q;
    q.poly[Mono{}] = 1.0;
    return q;
}

void QuadExp::add_quad(int i, int j, cplx coef) {
    if (i == j) {
        M[i][i] += coef;
    } else {
        M[i][j] += coef * 0.5;
        M[j][i] += coef * 0.5;
    }
}

void QuadExp::add_lin(int i, cplx coef) { c[i] += coef; }

void QuadExp::mul_mono(int i, int power) {
    std::map<Mono, cplx> out;
    for (const auto& [m, v] : poly) {
        Mono m2 = m;
        m2[i] += power;
        out[m2] += v;
    }
    poly = std::move(out);
}

QuadExp qe_mul(const QuadExp& a, const QuadExp& b) {
    QuadExp out;
    for (int i = 0; i < QuadExp::NV; ++i) {
        out.c[i] = a.c[i] + b.c[i];
        for (int j = 0; j < QuadExp::NV; ++j) out.M[i][j] = a.M[i][j] + b.M[i][j];
    }
    out.d = a.d + b.d;
    for (const auto& [ma, va] : a.poly)
        for (const auto& [mb, vb] : b.poly) {
            QuadExp::Mono m;
            for (int i = 0; i < QuadExp::NV; ++i) m[i] = ma[i] + mb[i];
            out.poly[m] += va * vb;
        }
    return out;
}

namespace {

using Poly = std::map<QuadExp::Mono, cplx>;

// multiply a polynomial by (s0 + sum_j s[j] x_j)
Poly poly_mul_linear(const Poly& p, cplx s0, const std::array<cplx, QuadExp::NV>& s) {
    Poly out;
    for (const auto& [m, v] : p) {
        if (s0 != 0.0) out[m] += v * s0;
        for (int j = 0; j < QuadExp::NV; ++j) {
            if (s[j] == 0.0) continue;
            QuadExp::Mono m2 = m;
            m2[j] += 1;
            out[m2] += v * s[j];
        }
    }
    return out;
}

double dfact(int n) {  // (n)!! with (-1)!! = 1
    double r = 1.0;
    for (int k = n; k > 1; k -= 2) r *= k;
    return r;
}

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
    return r;
}

}  // namespace

QuadExp qe_integrate(const QuadExp& a, int k) {
    cplx A = -a.M[k][k];
    if (A.real() <= 0.0)
        throw std::domain_error("qe_integrate: divergent Gaussian integral (Re width <= 0)");

    std::array<cplx, QuadExp::NV> L{};
    for (int j = 0; j < QuadExp::NV; ++j)
        if (j != k) L[j] = 2.0 * a.M[k][j];
    cplx Lc = a.c[k];

    QuadExp out;
    out.d = a.d + Lc * Lc / (4.0 * A);
    for (int i = 0; i < QuadExp::NV; ++i) {
        if (i == k) continue;
        out.c[i] = a.c[i] + Lc * L[i] / (2.0 * A);
        for (int j = 0; j < QuadExp::NV; ++j) {
            if (j == k) continue;
            out.M[i][j] = a.M[i][j] + L[i] * L[j] / (4.0 * A);
        }
    }

    // stationary point x_k = t + s(x), s = (Lc + sum L_j x_j) / (2A)
    cplx s0 = Lc / (2.0 * A);
    std::array<cplx, QuadExp::NV> s{};
    for (int j = 0; j < QuadExp::NV; ++j) s[j] = L[j] / (2.0 * A);

    cplx root = std::sqrt(kPi / A);  // principal branch, Re A > 0

    // split P by the power of x_k, expand (t+s)^p, integrate the t powers
    std::map<int, Poly> by_power;
    for (const auto& [m, v] : a.poly) {
        QuadExp::Mono base = m;
        int p = m[k];
        base[k] = 0;
        by_power[p][base] += v;
    }
    for (const auto& [p, grp] : by_power) {
        // powers of the linear form s, built incrementally
        std::vector<Poly> spow(p + 1);
        spow[0] = Poly{{QuadExp::Mono{}, 1.0}};
        for (int i = 1; i <= p; ++i) spow[i] = poly_mul_linear(spow[i - 1], s0, s);
        for (int r = 0; r <= p; r += 2) {
            // moment of t^r: sqrt(pi/A) (r-1)!! / (2A)^{r/2}
            cplx mom = root * dfact(r - 1) / cpow_int(2.0 * A, r / 2);
            cplx w = binom(p, r) * mom;
            for (const auto& [mb, vb] : grp)
                for (const auto& [ms, vs] : spow[p - r]) {
                    QuadExp::Mono m2;
                    for (int i = 0; i < QuadExp::NV; ++i) m2[i] = mb[i] + ms[i];
                    out.poly[m2] += vb * vs * w;
                }
        }
    }
    return out;
}

cplx qe_value(const QuadExp& a) {
    cplx r = 0.0;
    for (const auto& [m, v] : a.poly) {
        for (int i = 0; i < QuadExp::NV; ++i)
            if (m[i] != 0) throw std::logic_error("qe_value: free variable remains");
        r += v;
    }
    return r * std::exp(a.d);
}

}  // namespace qplane
