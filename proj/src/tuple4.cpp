#include "qplane/tuple4.hpp"

#include "json.hpp"

namespace qplane {

Tuple4& Tuple4::operator+=(const Tuple4& o) {
    for (int i = 0; i < 4; ++i) a[i] += o.a[i];
    return *this;
}

Tuple4& Tuple4::operator-=(const Tuple4& o) {
    for (int i = 0; i < 4; ++i) a[i] -= o.a[i];
    return *this;
}

Tuple4& Tuple4::scale(cplx c) {
    for (int i = 0; i < 4; ++i) a[i].scale(c);
    return *this;
}

Tuple4 t4_zero() { return {}; }

Tuple4 t4_make(Symbol a1, Symbol a2, Symbol a3, Symbol a4) {
    Tuple4 t;
    t.a = {std::move(a1), std::move(a2), std::move(a3), std::move(a4)};
    return t;
}

namespace {

// Hadamard pairing of J( J(a) . J(b) ): component i collects the products
// a_j natural b_{p_i(j)} for the pairings (identity, 12|34, 13|24, 14|23).
constexpr int kPairing[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};

}  // namespace

Tuple4 t4_circle(const Context& ctx, const Tuple4& a, const Tuple4& b) {
    Tuple4 out;
    for (int i = 0; i < 4; ++i) {
        Symbol s;
        for (int j = 0; j < 4; ++j) s += symbol_natural(ctx, a.a[j], b.a[kPairing[i][j]]);
        s.scale(0.5);
        out.a[i] = std::move(s);
    }
    return out;
}

Tuple4 t4_star(const Context& ctx, const Tuple4& a) {
    Tuple4 out;
    for (int i = 0; i < 4; ++i) out.a[i] = symbol_star_t(ctx, a.a[i]);
    return out;
}

Tuple4 t4_apply_J(const Tuple4& v) {
    static const double J[4][4] = {
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
    Tuple4 out;
    for (int i = 0; i < 4; ++i) {
        Symbol s;
        for (int j = 0; j < 4; ++j) {
            Symbol t = v.a[j];
            t.scale(0.5 * J[i][j]);
            s += t;
        }
        out.a[i] = std::move(s);
    }
    return out;
}

Tuple4 t4_componentwise_natural(const Context& ctx, const Tuple4& a, const Tuple4& b) {
    Tuple4 out;
    for (int i = 0; i < 4; ++i) out.a[i] = symbol_natural(ctx, a.a[i], b.a[i]);
    return out;
}

cplx t4_h(const Context& ctx, const Tuple4& a) { return 2.0 * fn_htilde(ctx, a.a[0]); }

cplx t4_inner_h(const Context& ctx, const Tuple4& a, const Tuple4& b) {
    return t4_h(ctx, t4_circle(ctx, t4_star(ctx, b), a));
}

cplx t4_inner_l2(const Context&, const Tuple4& a, const Tuple4& b) {
    cplx r = 0.0;
    for (int i = 0; i < 4; ++i) r += symbol_l2_inner(a.a[i], b.a[i]);
    return r;
}

namespace {

enum class Shape { diag, theta1, theta2, kappa1, kappa2 };

// apply the 4x4 operator matrix of the given shape with entries z / z^*
Tuple4 apply_shape(Shape shape, const SymbolOp& z, const SymbolOp& zs, const Tuple4& v) {
    auto ap = [&](const SymbolOp& op, int j) { return symbolop_apply(op, v.a[j]); };
    Tuple4 out;
    switch (shape) {
        case Shape::diag:
            for (int i = 0; i < 4; ++i) out.a[i] = ap(z, i);
            return out;
        case Shape::theta1:
            out.a[0] = ap(z, 1);
            out.a[1] = ap(zs, 0);
            out.a[2] = ap(z, 3);
            out.a[3] = ap(zs, 2);
            return out;
        case Shape::theta2:
            out.a[0] = ap(z, 2);
            out.a[1] = ap(z, 3);
            out.a[2] = ap(zs, 0);
            out.a[3] = ap(zs, 1);
            return out;
        case Shape::kappa1:
            out.a[0] = ap(z, 3);
            out.a[1] = ap(zs, 2);
            out.a[2] = ap(z, 1);
            out.a[3] = ap(zs, 0);
            return out;
        case Shape::kappa2:
            out.a[0] = ap(z, 3);
            out.a[1] = ap(z, 2);
            out.a[2] = ap(zs, 1);
            out.a[3] = ap(zs, 0);
            return out;
    }
    throw std::logic_error("apply_shape");
}

}  // namespace

Tuple4 t4_block_apply(const Context& ctx, BlockOp op, const Tuple4& v) {
    const double al = ctx.alpha, be = ctx.beta;
    switch (op) {
        case BlockOp::E: {
            SymbolOp z = op_compose(fn_Lalpha_op(ctx), op_expQ(2, 2.0 * kPi * be));
            SymbolOp zs = op_compose(fn_Ralpha_op(ctx), op_expQ(2, 2.0 * kPi * be));
            return apply_shape(Shape::kappa1, z, zs, v);
        }
        case BlockOp::F: {
            SymbolOp z = op_compose(op_expQ(1, 2.0 * kPi * al), fn_Lbeta_op(ctx));
            SymbolOp zs = op_compose(op_expQ(1, 2.0 * kPi * al), fn_Rbeta_op(ctx));
            return apply_shape(Shape::kappa2, z, zs, v);
        }
        case BlockOp::K1: {
            SymbolOp z = op_expP(1, kPi * be);
            return apply_shape(Shape::diag, z, z, v);
        }
        case BlockOp::K2: {
            SymbolOp z = op_expP(2, kPi * al);
            return apply_shape(Shape::diag, z, z, v);
        }
        case BlockOp::x: {
            SymbolOp z = op_compose(op_expQ(1, 2.0 * kPi * al), op_expP(2, -kPi * al));
            return apply_shape(Shape::theta1, z, z, v);
        }
        case BlockOp::y: {
            SymbolOp z = op_compose(op_expP(1, kPi * be), op_expQ(2, 2.0 * kPi * be));
            return apply_shape(Shape::theta2, z, z, v);
        }
        case BlockOp::Dqx: {
            SymbolOp z = op_compose(fn_Lalpha_op(ctx), op_expP(2, -kPi * al));
            SymbolOp zs = op_compose(fn_Ralpha_op(ctx), op_expP(2, -kPi * al));
            return apply_shape(Shape::theta1, z, zs, v);
        }
        case BlockOp::Dqy: {
            SymbolOp z = op_compose(op_expP(1, kPi * be), fn_Lbeta_op(ctx));
            SymbolOp zs = op_compose(op_expP(1, kPi * be), fn_Rbeta_op(ctx));
            return apply_shape(Shape::theta2, z, zs, v);
        }
    }
    throw std::logic_error("t4_block_apply");
}

std::pair<Tuple4, Tuple4> t4_block_partials(const Context& ctx, const Tuple4& v) {
    Tuple4 px, py;
    px.a[0] = bq_partial_x(ctx, v.a[1]);
    px.a[1] = bq_partial_x(ctx, v.a[0]);
    px.a[2] = bq_partial_x(ctx, v.a[3]);
    px.a[3] = bq_partial_x(ctx, v.a[2]);
    py.a[0] = bq_partial_y(ctx, v.a[2]);
    py.a[1] = bq_partial_y(ctx, v.a[3]);
    py.a[2] = bq_partial_y(ctx, v.a[0]);
    py.a[3] = bq_partial_y(ctx, v.a[1]);
    return {px, py};
}

double t4_residual(const Tuple4& a, const Tuple4& b) {
    double r = 0.0;
    for (int i = 0; i < 4; ++i) r = std::max(r, symbol_residual(a.a[i], b.a[i]));
    return r;
}

std::string t4_to_json(const Tuple4& a) {
    nlohmann::json j = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) j.push_back(nlohmann::json::parse(symbol_to_json(a.a[i])));
    return j.dump();
}

Tuple4 t4_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("tuple4 json must be an array of four symbols");
    Tuple4 out;
    for (int i = 0; i < 4; ++i) out.a[i] = symbol_from_json(j[i].dump());
    return out;
}

}  // namespace qplane
