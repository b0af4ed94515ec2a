#pragma once

#include <stdexcept>
#include <string>

#include "qplane/numeric.hpp"

namespace qplane {

// Deformation data shared by every algebra: q = e^{2*pi*i*gamma} on the unit
// circle, alpha*beta = gamma, lambda = q - 1/q.  Immutable after construction.
struct Context {
    double gamma = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    cplx q;
    cplx lambda;
    double tol_exact = 1e-10;
    double tol_oracle = 1e-6;
    std::string precision = "double";

    // q^r with the fixed branch e^{2*pi*i*gamma*r}; fractional powers such as
    // q^{1/2}, q^{1/8} always mean this principal value.
    cplx qpow(double r) const {
        return std::polar(1.0, 2.0 * kPi * gamma * r);
    }

    cplx qhalf() const { return qpow(0.5); }
    cplx lambda_inv() const { return 1.0 / lambda; }
};

inline Context make_context(double gamma, double alpha) {
    if (!(std::abs(gamma) > 0.0) || !(std::abs(gamma) < 1.0 / 3.0))
        throw std::invalid_argument("gamma must satisfy 0 < |gamma| < 1/3");
    if (alpha == 0.0) throw std::invalid_argument("alpha must be nonzero");
    Context ctx;
    ctx.gamma = gamma;
    ctx.alpha = alpha;
    ctx.beta = gamma / alpha;
    ctx.q = std::polar(1.0, 2.0 * kPi * gamma);
    ctx.lambda = ctx.q - 1.0 / ctx.q;
    return ctx;
}

// Key/value config ("gamma = 0.15" per line, '#' comments).  Unknown keys are
// rejected so that typos do not silently fall back to defaults.
Context context_from_config(const std::string& text);

}  // namespace qplane
