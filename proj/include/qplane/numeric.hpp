#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

namespace qplane {

using cplx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846264338327950288;

// Keys built from floating-point data (Gaussian widths, W-algebra arguments)
// are snapped to a dyadic lattice before they are used for map lookups, so
// that values differing only by roundoff collide.
constexpr double kKeyLattice = 1099511627776.0;  // 2^40

inline double lattice_round(double v) {
    double s = v * kKeyLattice;
    if (std::abs(s) > 9.0e15) return v;  // beyond integer range of double, keep as is
    return std::nearbyint(s) / kKeyLattice;
}

inline std::pair<double, double> lattice_key(cplx z) {
    return {lattice_round(z.real()), lattice_round(z.imag())};
}

inline bool nearly_zero(cplx z, double tol) { return std::abs(z) <= tol; }

// integer power by repeated multiplication (std::pow on complex goes through
// log/exp and picks up avoidable roundoff)
inline cplx cpow_int(cplx z, int n) {
    if (n < 0) return 1.0 / cpow_int(z, -n);
    cplx r = 1.0;
    while (n-- > 0) r *= z;
    return r;
}

// Relative residual of two scalars, bounded away from division blowups.
inline double residual(cplx a, cplx b) {
    return std::abs(a - b) / (1.0 + std::abs(a) + std::abs(b));
}

inline std::string fmt_cplx(cplx z) {
    std::string s = "(" + std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")";
    return s;
}

}  // namespace qplane
