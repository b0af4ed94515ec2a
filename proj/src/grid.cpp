#include "qplane/grid.hpp"

#include <stdexcept>

namespace qplane {

void check_grid_size(int N) {
    if (N < 4 || (N & (N - 1)) != 0)
        throw std::invalid_argument("grid size must be a power of two (>= 4)");
}

double grid_point(double L, int N, int j) { return -L + j * (2.0 * L / N); }

namespace {

// radix-2 Cooley-Tukey, in place; sign = -1 forward
void fft(std::vector<cplx>& a, int sign) {
    const size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        double ang = sign * 2.0 * kPi / double(len);
        cplx wl = std::polar(1.0, ang);
        for (size_t i = 0; i < n; i += len) {
            cplx w = 1.0;
            for (size_t j = 0; j < len / 2; ++j) {
                cplx u = a[i + j], v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// continuous-normalization spectrum: out[k] ~ F f(t_k), t_k = (k - N/2) / 2L
std::vector<cplx> spectrum(const std::vector<cplx>& f, double L) {
    const int N = int(f.size());
    std::vector<cplx> a(N);
    // F(t_m) = dx (-1)^m sum_j f_j e^{-2 pi i m j / N}, m = k - N/2
    for (int j = 0; j < N; ++j) a[j] = f[j];
    fft(a, -1);
    std::vector<cplx> out(N);
    double dx = 2.0 * L / N;
    for (int k = 0; k < N; ++k) {
        int m = k - N / 2;
        int mm = ((m % N) + N) % N;
        double sgn = (m % 2 == 0) ? 1.0 : -1.0;
        out[k] = dx * sgn * a[mm];
    }
    return out;
}

std::vector<cplx> from_spectrum(const std::vector<cplx>& F, double L) {
    const int N = int(F.size());
    std::vector<cplx> b(N, 0.0);
    for (int k = 0; k < N; ++k) {
        int m = k - N / 2;
        int mm = ((m % N) + N) % N;
        double sgn = (m % 2 == 0) ? 1.0 : -1.0;
        b[mm] += sgn * F[k];
    }
    fft(b, +1);
    double inv = 1.0 / (2.0 * L);
    for (auto& v : b) v *= inv;
    return b;
}

}  // namespace

GridFn2D grid_sample(const Symbol& a, double L, int N) {
    check_grid_size(N);
    GridFn2D g;
    g.L = L;
    g.N = N;
    g.v.assign(size_t(N) * N, 0.0);
    for (int i = 0; i < N; ++i) {
        double x = grid_point(L, N, i);
        for (int j = 0; j < N; ++j) g.v[size_t(i) * N + j] = symbol_eval(a, x, grid_point(L, N, j));
    }
    return g;
}

double grid_norm(const GridFn2D& f) {
    double s = 0.0;
    for (const auto& z : f.v) s += std::norm(z);
    return std::sqrt(s) * f.dx();
}

cplx grid_inner(const GridFn2D& a, const GridFn2D& b) {
    cplx s = 0.0;
    for (size_t i = 0; i < a.v.size(); ++i) s += a.v[i] * std::conj(b.v[i]);
    return s * a.dx() * a.dx();
}

double grid_residual(const GridFn2D& a, const GridFn2D& b) {
    double num = 0.0, den = 1.0;
    for (size_t i = 0; i < a.v.size(); ++i) {
        num = std::max(num, std::abs(a.v[i] - b.v[i]));
        den = std::max({den, std::abs(a.v[i]), std::abs(b.v[i])});
    }
    return num / den;
}

GridFn2D grid_apply_expP(const GridFn2D& g, double d, int axis) {
    const int N = g.N;
    GridFn2D out = g;
    std::vector<cplx> line(N);
    double maxmag = 0.0;
    for (const auto& z : g.v) maxmag = std::max(maxmag, std::abs(z));
    for (int r = 0; r < N; ++r) {
        for (int s = 0; s < N; ++s)
            line[s] = axis == 1 ? g.v[size_t(s) * N + r] : g.v[size_t(r) * N + s];
        std::vector<cplx> F = spectrum(line, g.L);
        for (int k = 0; k < N; ++k) {
            double t = (k - N / 2) / (2.0 * g.L);
            double ex = 2.0 * kPi * d * t;
            if (ex > 700.0) {
                if (std::abs(F[k]) > 1e-280 * (1.0 + maxmag))
                    throw std::runtime_error(
                        "exp(2 pi d P) overflows on this grid: symbol too wide for the band");
                F[k] = 0.0;
            } else {
                F[k] *= std::exp(ex);
            }
        }
        line = from_spectrum(F, g.L);
        for (int s = 0; s < N; ++s)
            (axis == 1 ? out.v[size_t(s) * N + r] : out.v[size_t(r) * N + s]) = line[s];
    }
    return out;
}

GridFn2D grid_apply_expQ(const GridFn2D& g, double c, int axis) {
    GridFn2D out = g;
    for (int i = 0; i < g.N; ++i) {
        double x = grid_point(g.L, g.N, i);
        double w = c * x;
        if (w > 700.0) throw std::runtime_error("exp(c Q) overflows on this grid");
        cplx f = std::exp(cplx(w, 0.0));
        for (int j = 0; j < g.N; ++j) {
            if (axis == 1)
                out.v[size_t(i) * g.N + j] *= f;
            else
                out.v[size_t(j) * g.N + i] *= f;
        }
    }
    return out;
}

OperatorMatrix grid_weyl_op(const Symbol& a, double L, int N) {
    check_grid_size(N);
    OperatorMatrix M;
    M.L = L;
    M.N = N;
    M.m.assign(size_t(N) * N, 0.0);
    const double dx = 2.0 * L / N;
    // kernel K(x,y) = (partial inverse FT in slot 2)((x+y)/2, x-y), see
    // symbol_partial_ft2; per term the z-polynomial coefficients are fixed,
    // so they are precomputed before sweeping the N^2 grid points
    for (const auto& t : a.terms) {
        std::vector<cplx> h = {1.0};
        for (int n = 1; n <= t.n2; ++n) {
            std::vector<cplx> nh(h.size() + 1, 0.0);
            for (size_t k = 0; k < h.size(); ++k) {
                if (k >= 1) nh[k - 1] += double(k) * h[k];
                nh[k + 1] += h[k] / (2.0 * t.eps2);
            }
            h = std::move(nh);
        }
        cplx root = std::sqrt(kPi / t.eps2);
        for (int i = 0; i < N; ++i) {
            double xi = grid_point(L, N, i);
            for (int j = 0; j < N; ++j) {
                double mid = 0.5 * (xi + grid_point(L, N, j));
                double w = xi - grid_point(L, N, j);
                cplx z = t.c2 + t.kappa * mid + 2.0 * kPi * cplx(0, 1) * w;
                cplx hval = 0.0, zp = 1.0;
                for (size_t k = 0; k < h.size(); ++k) {
                    hval += h[k] * zp;
                    zp *= z;
                }
                cplx val = t.coeff * cpow_int(cplx(mid), t.n1) *
                           std::exp(-t.eps1 * mid * mid + t.c1 * mid + z * z / (4.0 * t.eps2)) *
                           root * hval;
                M.m[size_t(i) * N + j] += val * dx;
            }
        }
    }
    return M;
}

std::vector<cplx> matvec(const OperatorMatrix& m, const std::vector<cplx>& x) {
    std::vector<cplx> y(m.N, 0.0);
    for (int i = 0; i < m.N; ++i) {
        cplx s = 0.0;
        const cplx* row = &m.m[size_t(i) * m.N];
        for (int j = 0; j < m.N; ++j) s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

std::vector<cplx> matvec_adj(const OperatorMatrix& m, const std::vector<cplx>& x) {
    std::vector<cplx> y(m.N, 0.0);
    for (int i = 0; i < m.N; ++i) {
        const cplx* row = &m.m[size_t(i) * m.N];
        for (int j = 0; j < m.N; ++j) y[j] += std::conj(row[j]) * x[i];
    }
    return y;
}

double op_norm_estimate(int N,
                        const std::function<std::vector<cplx>(const std::vector<cplx>&)>& ap,
                        const std::function<std::vector<cplx>(const std::vector<cplx>&)>& apH,
                        Rng& rng, int iters) {
    auto vnorm = [](const std::vector<cplx>& x) {
        double s = 0.0;
        for (const auto& z : x) s += std::norm(z);
        return std::sqrt(s);
    };
    std::vector<cplx> v(N);
    for (auto& z : v) z = rng.uniform_cplx(1.0);
    double lam = 0.0;
    for (int it = 0; it < iters; ++it) {
        double vn = vnorm(v);
        if (vn == 0.0) return 0.0;
        for (auto& z : v) z /= vn;
        std::vector<cplx> w = apH(ap(v));
        lam = vnorm(w);  // Rayleigh estimate of sigma^2 on the unit vector
        if (lam == 0.0) return 0.0;
        v = std::move(w);
    }
    return std::sqrt(lam);
}

double grid_weyl_product_residual(const Symbol& a, const Symbol& b, double L, int N, Rng& rng) {
    OperatorMatrix Ma = grid_weyl_op(a, L, N);
    OperatorMatrix Mb = grid_weyl_op(b, L, N);
    OperatorMatrix Mab = grid_weyl_op(symbol_twisted(a, b), L, N);
    auto diff = [&](const std::vector<cplx>& x) {
        std::vector<cplx> r = matvec(Mab, x);
        std::vector<cplx> s = matvec(Ma, matvec(Mb, x));
        for (size_t i = 0; i < r.size(); ++i) r[i] -= s[i];
        return r;
    };
    auto diffH = [&](const std::vector<cplx>& x) {
        std::vector<cplx> r = matvec_adj(Mab, x);
        std::vector<cplx> s = matvec_adj(Mb, matvec_adj(Ma, x));
        for (size_t i = 0; i < r.size(); ++i) r[i] -= s[i];
        return r;
    };
    double nd = op_norm_estimate(N, diff, diffH, rng);
    double na = op_norm_estimate(
        N, [&](const std::vector<cplx>& x) { return matvec(Mab, x); },
        [&](const std::vector<cplx>& x) { return matvec_adj(Mab, x); }, rng);
    return nd / (na > 0.0 ? na : 1.0);
}

double grid_weyl_star_residual(const Symbol& a, double L, int N) {
    OperatorMatrix Ma = grid_weyl_op(a, L, N);
    OperatorMatrix Ms = grid_weyl_op(symbol_star(a), L, N);
    double num = 0.0, den = 1.0;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            cplx lhs = std::conj(Ma.m[size_t(j) * N + i]);
            cplx rhs = Ms.m[size_t(i) * N + j];
            num = std::max(num, std::abs(lhs - rhs));
            den = std::max({den, std::abs(lhs), std::abs(rhs)});
        }
    return num / den;
}

double grid_weyl_trace_residual(const Symbol& a, const Symbol& b, double L, int N) {
    OperatorMatrix Ma = grid_weyl_op(a, L, N);
    OperatorMatrix Mb = grid_weyl_op(b, L, N);
    cplx tr = 0.0;
    for (size_t i = 0; i < Ma.m.size(); ++i) tr += std::conj(Mb.m[i]) * Ma.m[i];
    cplx exact = symbol_l2_inner(a, b);
    return residual(tr, exact);
}

OperatorMatrix grid_rep_rho(const Context& ctx, int eps, int epsp, char gen, double L, int N) {
    check_grid_size(N);
    OperatorMatrix M;
    M.L = L;
    M.N = N;
    M.m.assign(size_t(N) * N, 0.0);
    if (gen == 'x') {
        for (int i = 0; i < N; ++i) {
            double w = 2.0 * kPi * ctx.alpha * grid_point(L, N, i);
            if (w > 700.0) throw std::runtime_error("rep_rho(x) overflows on this grid");
            M.m[size_t(i) * N + i] = double(eps) * std::exp(w);
        }
        return M;
    }
    // y = eps' e^{2 pi beta P}: build columns through the spectral multiplier
    for (int k = 0; k < N; ++k) {
        std::vector<cplx> e(N, 0.0);
        e[k] = 1.0;
        std::vector<cplx> F = spectrum(e, L);
        for (int m = 0; m < N; ++m) {
            double t = (m - N / 2) / (2.0 * L);
            double ex = 2.0 * kPi * ctx.beta * t;
            F[m] *= (ex > 700.0) ? 0.0 : std::exp(ex);
        }
        std::vector<cplx> col = from_spectrum(F, L);
        for (int i = 0; i < N; ++i) M.m[size_t(i) * N + k] = double(epsp) * col[i];
    }
    return M;
}

}  // namespace qplane
