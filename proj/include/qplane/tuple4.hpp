#pragma once

#include <array>

#include "qplane/functionals.hpp"

namespace qplane {

// Element of the glued plane algebra: four symbol components, one per
// quarter plane, carrying the transformed (natural / star) structure.
struct Tuple4 {
    std::array<Symbol, 4> a;

    Tuple4& operator+=(const Tuple4& o);
    Tuple4& operator-=(const Tuple4& o);
    Tuple4& scale(cplx c);
};

Tuple4 t4_zero();
Tuple4 t4_make(Symbol a1, Symbol a2, Symbol a3, Symbol a4);

// a o b = J( J(a) . J(b) ) with the componentwise natural product; written
// out this is one half of the four Hadamard-paired sums.
Tuple4 t4_circle(const Context& ctx, const Tuple4& a, const Tuple4& b);
Tuple4 t4_star(const Context& ctx, const Tuple4& a);
Tuple4 t4_apply_J(const Tuple4& v);

// componentwise natural product (the pre-J picture)
Tuple4 t4_componentwise_natural(const Context& ctx, const Tuple4& a, const Tuple4& b);

cplx t4_h(const Context& ctx, const Tuple4& a);                    // 2 htilde(a1)
cplx t4_inner_h(const Context& ctx, const Tuple4& a, const Tuple4& b);   // h(b^star o a)
cplx t4_inner_l2(const Context& ctx, const Tuple4& a, const Tuple4& b);  // sum (a_j, b_j)

enum class BlockOp { E, F, K1, K2, x, y, Dqx, Dqy };
Tuple4 t4_block_apply(const Context& ctx, BlockOp op, const Tuple4& v);

// partial-derivative block matrices with the Gamma_- component kernels
std::pair<Tuple4, Tuple4> t4_block_partials(const Context& ctx, const Tuple4& v);

double t4_residual(const Tuple4& a, const Tuple4& b);
std::string t4_to_json(const Tuple4& a);
Tuple4 t4_from_json(const std::string& text);

}  // namespace qplane
