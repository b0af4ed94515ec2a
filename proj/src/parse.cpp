#include "qplane/parse.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace qplane {

namespace {

struct Token {
    enum Kind { Num, Ident, Sym, End } kind = End;
    std::string text;
    double num = 0.0;
    size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            size_t j = i;
            while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.' ||
                                    s[j] == 'e' || s[j] == 'E' ||
                                    ((s[j] == '+' || s[j] == '-') && j > i &&
                                     (s[j - 1] == 'e' || s[j - 1] == 'E'))))
                ++j;
            Token t;
            t.kind = Token::Num;
            t.text = s.substr(i, j - i);
            try {
                t.num = std::stod(t.text);
            } catch (...) {
                throw ParseError("bad number '" + t.text + "'", i);
            }
            t.pos = i;
            out.push_back(t);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::Ident, s.substr(i, j - i), 0.0, i});
            i = j;
            continue;
        }
        static const std::string ops = "+-*^(),;[]";
        if (ops.find(c) != std::string::npos) {
            out.push_back({Token::Sym, std::string(1, c), 0.0, i});
            ++i;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({Token::End, "", 0.0, s.size()});
    return out;
}

struct Cursor {
    std::vector<Token> toks;
    size_t i = 0;
    const Token& peek(size_t ahead = 0) const {
        size_t j = std::min(i + ahead, toks.size() - 1);
        return toks[j];
    }
    Token next() { return toks[std::min(i++, toks.size() - 1)]; }
    bool accept_sym(const std::string& s) {
        if (peek().kind == Token::Sym && peek().text == s) {
            ++i;
            return true;
        }
        return false;
    }
    void expect_sym(const std::string& s) {
        if (!accept_sym(s)) throw ParseError("expected '" + s + "'", peek().pos);
    }
    bool at_end() const { return peek().kind == Token::End; }
};

double parse_signed_number(Cursor& c) {
    double sign = 1.0;
    while (c.peek().kind == Token::Sym && (c.peek().text == "+" || c.peek().text == "-"))
        sign *= c.next().text == "-" ? -1.0 : 1.0;
    if (c.peek().kind != Token::Num) throw ParseError("expected a number", c.peek().pos);
    return sign * c.next().num;
}

int parse_int(Cursor& c) {
    double v = parse_signed_number(c);
    int n = int(std::lround(v));
    if (std::abs(v - n) > 1e-9) throw ParseError("expected an integer", c.peek().pos);
    return n;
}

// complex literal "(re,im)" or a plain number
bool looks_like_complex_literal(const Cursor& c) {
    if (!(c.peek().kind == Token::Sym && c.peek().text == "(")) return false;
    size_t j = c.i + 1;
    auto& t = c.toks;
    auto skip_sign = [&](size_t k) {
        while (k < t.size() && t[k].kind == Token::Sym && (t[k].text == "+" || t[k].text == "-"))
            ++k;
        return k;
    };
    j = skip_sign(j);
    if (j >= t.size() || t[j].kind != Token::Num) return false;
    ++j;
    return j < t.size() && t[j].kind == Token::Sym && t[j].text == ",";
}

cplx parse_complex_literal(Cursor& c) {
    c.expect_sym("(");
    double re = parse_signed_number(c);
    c.expect_sym(",");
    double im = parse_signed_number(c);
    c.expect_sym(")");
    return {re, im};
}

// complex scalar in W arguments: "0.5", "1+2i", "-i", "0.3-0.2*i"
cplx parse_w_scalar(Cursor& c) {
    cplx val = 0.0;
    bool first = true;
    for (;;) {
        double sign = 1.0;
        bool saw_sign = false;
        while (c.peek().kind == Token::Sym && (c.peek().text == "+" || c.peek().text == "-")) {
            sign *= c.next().text == "-" ? -1.0 : 1.0;
            saw_sign = true;
        }
        if (!first && !saw_sign) break;
        if (c.peek().kind == Token::Ident && c.peek().text == "i") {
            c.next();
            val += cplx(0.0, sign);
        } else if (c.peek().kind == Token::Num) {
            double v = sign * c.next().num;
            if (c.accept_sym("*")) {
                if (!(c.peek().kind == Token::Ident && c.peek().text == "i"))
                    throw ParseError("expected 'i'", c.peek().pos);
                c.next();
                val += cplx(0.0, v);
            } else if (c.peek().kind == Token::Ident && c.peek().text == "i") {
                c.next();
                val += cplx(0.0, v);
            } else {
                val += v;
            }
        } else {
            if (first) throw ParseError("expected a complex scalar", c.peek().pos);
            break;
        }
        first = false;
    }
    return val;
}

// ---- generic sum/product parser over a small element algebra -----------

template <typename Elem, typename Ops>
Elem parse_expr(const Context& ctx, Cursor& c, const Ops& ops);

template <typename Elem, typename Ops>
Elem parse_factor(const Context& ctx, Cursor& c, const Ops& ops) {
    Elem base;
    if (looks_like_complex_literal(c)) {
        base = ops.scalar(parse_complex_literal(c));
    } else if (c.accept_sym("(")) {
        base = parse_expr<Elem>(ctx, c, ops);
        c.expect_sym(")");
    } else if (c.peek().kind == Token::Num) {
        base = ops.scalar(c.next().num);
    } else if (c.peek().kind == Token::Ident) {
        base = ops.atom(ctx, c);
    } else {
        throw ParseError("expected a factor", c.peek().pos);
    }
    if (c.accept_sym("^")) {
        int n = parse_int(c);
        base = ops.power(ctx, base, n, c);
    }
    return base;
}

template <typename Elem, typename Ops>
Elem parse_term(const Context& ctx, Cursor& c, const Ops& ops) {
    Elem v = parse_factor<Elem>(ctx, c, ops);
    while (c.peek().kind == Token::Sym && c.peek().text == "*") {
        c.next();
        v = ops.mul(ctx, v, parse_factor<Elem>(ctx, c, ops));
    }
    return v;
}

template <typename Elem, typename Ops>
Elem parse_expr(const Context& ctx, Cursor& c, const Ops& ops) {
    bool neg = false;
    while (c.peek().kind == Token::Sym && (c.peek().text == "+" || c.peek().text == "-"))
        neg ^= (c.next().text == "-");
    Elem v = parse_term<Elem>(ctx, c, ops);
    if (neg) v.scale(-1.0);
    while (c.peek().kind == Token::Sym && (c.peek().text == "+" || c.peek().text == "-")) {
        bool minus = c.next().text == "-";
        Elem w = parse_term<Elem>(ctx, c, ops);
        if (minus) w.scale(-1.0);
        v += w;
    }
    return v;
}

// ---- element-specific atoms ---------------------------------------------

struct UqOps {
    UqElement scalar(cplx v) const { return uq_scalar(v); }
    UqElement atom(const Context& ctx, Cursor& c) const {
        Token t = c.next();
        if (t.text == "E") return uq_gen_E();
        if (t.text == "F") return uq_gen_F();
        if (t.text == "K1") return uq_gen_K1(1);
        if (t.text == "K2") return uq_gen_K2(1);
        if (t.text == "K") return uq_gen_K(ctx, 1);
        throw ParseError("unknown generator '" + t.text + "'", t.pos);
    }
    UqElement power(const Context& ctx, const UqElement& b, int n, Cursor& c) const {
        if (n >= 0) return uq_pow(ctx, b, n);
        // negative powers only of single K monomials
        if (b.terms.size() == 1) {
            const auto& [m, coeff] = *b.terms.begin();
            if (m.e == 0 && m.f == 0) {
                UqElement r;
                r.add({0, m.k1 * n, m.k2 * n, 0}, cpow_int(coeff, n));
                return r;
            }
        }
        throw ParseError("negative power of a non-invertible element", c.peek().pos);
    }
    UqElement mul(const Context& ctx, const UqElement& a, const UqElement& b) const {
        return uq_mul(ctx, a, b);
    }
};

struct PlaneOps {
    PlaneElement scalar(cplx v) const { return plane_scalar(v); }
    PlaneElement atom(const Context&, Cursor& c) const {
        Token t = c.next();
        if (t.text == "x") return plane_mono(1, 0);
        if (t.text == "y") return plane_mono(0, 1);
        throw ParseError("unknown generator '" + t.text + "'", t.pos);
    }
    PlaneElement power(const Context& ctx, const PlaneElement& b, int n, Cursor& c) const {
        PlaneElement base = b;
        if (n < 0) {
            if (b.terms.size() != 1)
                throw ParseError("negative power of a sum", c.peek().pos);
            auto [mn, coeff] = *b.terms.begin();
            base = plane_mono_inverse(ctx, mn.first, mn.second, coeff);
            n = -n;
        }
        PlaneElement r = plane_scalar(1.0);
        for (int i = 0; i < n; ++i) r = plane_mul(ctx, r, base);
        return r;
    }
    PlaneElement mul(const Context& ctx, const PlaneElement& a, const PlaneElement& b) const {
        return plane_mul(ctx, a, b);
    }
};

struct WOps {
    WElement scalar(cplx v) const { return w_gen(0, 0, v); }
    WElement atom(const Context&, Cursor& c) const {
        Token t = c.next();
        if (t.text != "W") throw ParseError("unknown generator '" + t.text + "'", t.pos);
        c.expect_sym("(");
        cplx s = parse_w_scalar(c);
        c.expect_sym(",");
        cplx tt = parse_w_scalar(c);
        c.expect_sym(")");
        return w_gen(s, tt);
    }
    WElement power(const Context& ctx, const WElement& b, int n, Cursor&) const {
        WElement base = b;
        if (n < 0) {
            base = w_single_term_inverse(ctx, b);
            n = -n;
        }
        WElement r = w_one();
        for (int i = 0; i < n; ++i) r = w_mul(ctx, r, base);
        return r;
    }
    WElement mul(const Context& ctx, const WElement& a, const WElement& b) const {
        return w_mul(ctx, a, b);
    }
};

struct SymbolOps {
    Symbol scalar(cplx v) const {
        // Scalars carry a marker width of 1e-30.  Adding any real gauss width
        // absorbs it exactly in double precision, and terms that never meet a
        // gauss(...) factor are detected afterwards by their tiny eps.
        Symbol s;
        SymbolTerm t;
        t.eps1 = kScalarEps;
        t.eps2 = kScalarEps;
        t.coeff = v;
        s.terms.push_back(t);
        return s;
    }
    static constexpr double kScalarEps = 1e-30;
    Symbol atom(const Context&, Cursor& c) const {
        Token t = c.next();
        if (t.text == "poly") {
            c.expect_sym("(");
            int n1 = parse_int(c);
            c.expect_sym(",");
            int n2 = parse_int(c);
            c.expect_sym(")");
            if (n1 < 0 || n2 < 0) throw ParseError("poly degrees must be nonnegative", t.pos);
            Symbol s = scalar(1.0);
            return symbol_mul_poly(s, n1, n2);
        }
        if (t.text == "gauss") {
            c.expect_sym("(");
            double e1 = parse_signed_number(c);
            c.expect_sym(",");
            double e2 = parse_signed_number(c);
            c.expect_sym(")");
            if (e1 <= 0 || e2 <= 0) throw ParseError("gauss widths must be positive", t.pos);
            Symbol s;
            SymbolTerm t2;
            t2.eps1 = e1;
            t2.eps2 = e2;
            t2.coeff = 1.0;
            s.terms.push_back(t2);
            return s;
        }
        if (t.text == "exp") {
            c.expect_sym("(");
            cplx c1 = looks_like_complex_literal(c) ? parse_complex_literal(c)
                                                    : cplx(parse_signed_number(c), 0.0);
            c.expect_sym(",");
            cplx c2 = looks_like_complex_literal(c) ? parse_complex_literal(c)
                                                    : cplx(parse_signed_number(c), 0.0);
            c.expect_sym(")");
            Symbol s = scalar(1.0);
            return symbol_mul_exp(s, c1, c2);
        }
        throw ParseError("unknown symbol factor '" + t.text + "'", t.pos);
    }
    Symbol power(const Context&, const Symbol& b, int n, Cursor& c) const {
        if (n < 0) throw ParseError("symbols admit no negative powers", c.peek().pos);
        Symbol r = scalar(1.0);
        for (int i = 0; i < n; ++i) r = symbol_pointwise_mul(r, b);
        return r;
    }
    Symbol mul(const Context&, const Symbol& a, const Symbol& b) const {
        return symbol_pointwise_mul(a, b);
    }
};

}  // namespace

UqElement parse_uq(const Context& ctx, const std::string& text) {
    Cursor c{tokenize(text)};
    UqElement e = parse_expr<UqElement>(ctx, c, UqOps{});
    if (!c.at_end()) throw ParseError("trailing input", c.peek().pos);
    return e;
}

PlaneElement parse_plane(const Context& ctx, const std::string& text) {
    Cursor c{tokenize(text)};
    PlaneElement e = parse_expr<PlaneElement>(ctx, c, PlaneOps{});
    if (!c.at_end()) throw ParseError("trailing input", c.peek().pos);
    return e;
}

WElement parse_w(const Context& ctx, const std::string& text) {
    Cursor c{tokenize(text)};
    WElement e = parse_expr<WElement>(ctx, c, WOps{});
    if (!c.at_end()) throw ParseError("trailing input", c.peek().pos);
    return e;
}

Symbol parse_symbol(const Context& ctx, const std::string& text) {
    Cursor c{tokenize(text)};
    Symbol e = parse_expr<Symbol>(ctx, c, SymbolOps{});
    if (!c.at_end()) throw ParseError("trailing input", c.peek().pos);
    // all real terms received eps from a gauss factor plus the tiny marker;
    // reject terms that never saw a gauss factor
    for (const auto& t : e.terms)
        if (t.eps1.real() < 1e-20 || t.eps2.real() < 1e-20)
            throw ParseError("every symbol term needs a gauss(eps1,eps2) factor", text.size());
    return e;
}

Tuple4 parse_tuple4(const Context& ctx, const std::string& text) {
    Cursor c{tokenize(text)};
    auto parse_bracket = [&]() {
        bool applyJ = false;
        if (c.peek().kind == Token::Ident && c.peek().text == "J") {
            c.next();
            applyJ = true;
        }
        c.expect_sym("[");
        Tuple4 t;
        for (int i = 0; i < 4; ++i) {
            t.a[i] = parse_expr<Symbol>(ctx, c, SymbolOps{});
            if (i < 3) c.expect_sym(";");
        }
        c.expect_sym("]");
        return applyJ ? t4_apply_J(t) : t;
    };
    Tuple4 v = parse_bracket();
    while (c.peek().kind == Token::Ident && c.peek().text == "o") {
        c.next();
        v = t4_circle(ctx, v, parse_bracket());
    }
    if (!c.at_end()) throw ParseError("trailing input", c.peek().pos);
    return v;
}

std::string eval_expr(const Context& ctx, const std::string& algebra, const std::string& text,
                      Calculus calc) {
    std::ostringstream os;
    if (algebra == "uq") {
        os << uq_to_string(parse_uq(ctx, text));
    } else if (algebra == "plane") {
        std::istringstream in(text);
        std::string head;
        in >> head;
        if (head == "d" || head == "px" || head == "py") {
            std::string rest;
            std::getline(in, rest);
            PlaneElement z = parse_plane(ctx, rest);
            if (head == "d") {
                OneForm f = plane_differential(ctx, z, calc);
                os << "(" << plane_to_string(f.cx) << ")*dx + (" << plane_to_string(f.cy)
                   << ")*dy";
            } else {
                auto [px, py] = plane_partials(ctx, z, calc);
                os << plane_to_string(head == "px" ? px : py);
            }
        } else {
            os << plane_to_string(parse_plane(ctx, text));
        }
    } else if (algebra == "w") {
        os << w_to_string(parse_w(ctx, text));
    } else if (algebra == "symbol") {
        std::istringstream in(text);
        std::string head;
        in >> head;
        if (head == "hk") {
            int k1, k2;
            if (!(in >> k1 >> k2)) throw ParseError("usage: hk <k1> <k2> <expr>", 0);
            std::string rest;
            std::getline(in, rest);
            Symbol a = parse_symbol(ctx, rest);
            os << fmt_cplx(fn_hk(ctx, make_index(ctx, k1, k2), a));
        } else if (head == "htilde" || head == "norm" || head == "int") {
            std::string rest;
            std::getline(in, rest);
            Symbol a = parse_symbol(ctx, rest);
            if (head == "htilde") os << fmt_cplx(fn_htilde(ctx, a));
            else if (head == "norm") os << symbol_l2_norm(a);
            else os << fmt_cplx(symbol_plain_integral(a));
        } else {
            os << symbol_to_string(parse_symbol(ctx, text));
        }
    } else if (algebra == "tuple4") {
        os << t4_to_json(parse_tuple4(ctx, text));
    } else {
        throw std::invalid_argument("unknown algebra '" + algebra + "'");
    }
    return os.str();
}

}  // namespace qplane
