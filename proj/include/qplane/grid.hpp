#pragma once

#include <functional>
#include <vector>

#include "qplane/rng.hpp"
#include "qplane/symbol.hpp"

namespace qplane {

// Uniform grid on [-L, L) with N points (N a power of two), x_j = -L + j*2L/N.
struct GridFn1D {
    double L = 10.0;
    int N = 0;
    std::vector<cplx> v;
};

struct GridFn2D {
    double L = 10.0;
    int N = 0;
    std::vector<cplx> v;  // v[i*N + j] = f(x_i, y_j)
    double dx() const { return 2.0 * L / N; }
};

// Dense matrix acting on GridFn1D by plain matrix-vector product; integral
// operators carry their quadrature weight inside the entries.
struct OperatorMatrix {
    double L = 10.0;
    int N = 0;
    std::vector<cplx> m;  // row-major
};

void check_grid_size(int N);
double grid_point(double L, int N, int j);

GridFn2D grid_sample(const Symbol& a, double L, int N);
double grid_norm(const GridFn2D& f);
cplx grid_inner(const GridFn2D& a, const GridFn2D& b);
double grid_residual(const GridFn2D& a, const GridFn2D& b);

// e^{2 pi d P_axis} via the discrete Fourier transform; throws if the
// spectral multiplier would overflow on frequencies that carry weight.
GridFn2D grid_apply_expP(const GridFn2D& g, double d, int axis);
// e^{c Q_axis}: pointwise multiplication by e^{c x}
GridFn2D grid_apply_expQ(const GridFn2D& g, double c, int axis);

// Weyl quantization: kernel K(x,y) = int a((x+y)/2, t) e^{2 pi i (x-y) t} dt
// sampled on the grid (quadrature weight included in the matrix).
OperatorMatrix grid_weyl_op(const Symbol& a, double L, int N);

std::vector<cplx> matvec(const OperatorMatrix& m, const std::vector<cplx>& x);
std::vector<cplx> matvec_adj(const OperatorMatrix& m, const std::vector<cplx>& x);

// largest singular value of a linear map given by apply/apply-adjoint,
// estimated with power iteration on A^H A
double op_norm_estimate(int N,
                        const std::function<std::vector<cplx>(const std::vector<cplx>&)>& ap,
                        const std::function<std::vector<cplx>(const std::vector<cplx>&)>& apH,
                        Rng& rng, int iters = 30);

// relative residual of Op(a # b) = Op(a) Op(b) on the grid
double grid_weyl_product_residual(const Symbol& a, const Symbol& b, double L, int N, Rng& rng);
// max-entry residual of Op(a)^* = Op(a^*)
double grid_weyl_star_residual(const Symbol& a, double L, int N);
// residual of Tr Op(b)^* Op(a) = (a, b)
double grid_weyl_trace_residual(const Symbol& a, const Symbol& b, double L, int N);

// one-dimensional representation operators eps e^{2 pi alpha Q} and
// eps' e^{2 pi beta P} as dense matrices
OperatorMatrix grid_rep_rho(const Context& ctx, int eps, int epsp, char gen, double L, int N);

}  // namespace qplane
