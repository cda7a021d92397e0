#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "symfun/symfn.hpp"

namespace symfun {

/// AST for the expression language. Atoms are basis monomials like s[2,1]
/// and integer scalars; operators are + - * (outer product), / (skew, or
/// scalar division), @ (plethysm, binds tighter than *), <f, g> (scalar
/// product) and perp(f, g) (also written f _|_ g).
struct Expr {
    enum class Kind { scalar, atom, neg, add, sub, mul, div, pleth, dot, perp };

    Kind kind;
    Rational scalar;       // Kind::scalar
    Basis basis{Basis::s}; // Kind::atom
    Partition part;        // Kind::atom
    std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Parses an expression; throws ParseError with a 1-based column.
ExprPtr parse(const std::string& input);

using Value = std::variant<Rational, SymFn>;

/// Evaluates an AST, dispatching to the library operations. Scalars mix
/// freely with symmetric functions (a scalar lifts to a multiple of s[]).
Value eval(const Expr& e);
Value eval(const std::string& input);

/// Canonical text for a value: scalars print exactly, symmetric functions
/// print sorted per the canonical term order. parse/eval/print round-trips
/// are idempotent on this form.
std::string print_value(const Value& v);
/// JSON form: {"scalar": {...}} or {"basis": "...", "terms": [{partition,
/// numerator, denominator}...]}, numbers as strings.
std::string print_value_json(const Value& v);

} // namespace symfun
