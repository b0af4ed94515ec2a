#pragma once

#include <stdexcept>
#include <string>

#include "qplane/tuple4.hpp"
#include "qplane/walg.hpp"

namespace qplane {

// parse error with the offending position in the input
struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t p)
        : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

UqElement parse_uq(const Context& ctx, const std::string& text);
PlaneElement parse_plane(const Context& ctx, const std::string& text);
WElement parse_w(const Context& ctx, const std::string& text);
Symbol parse_symbol(const Context& ctx, const std::string& text);
Tuple4 parse_tuple4(const Context& ctx, const std::string& text);

// evaluate an expression in the named algebra and return the printed result.
// The symbol algebra also accepts "hk <k1> <k2> <expr>", "htilde <expr>",
// "norm <expr>" and "int <expr>"; the plane algebra accepts "d <expr>",
// "px <expr>" and "py <expr>", which use the given differential calculus.
std::string eval_expr(const Context& ctx, const std::string& algebra, const std::string& text,
                      Calculus calc = Calculus::minus);

}  // namespace qplane
