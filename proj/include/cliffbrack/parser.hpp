#pragma once

#include "cliffbrack/bracket.hpp"

#include <string>
#include <vector>

namespace cliffbrack {

/// Result of parsing one source document: declared (or inferred) variable
/// order, the expression, and non-fatal diagnostics (e.g. a length-1 bracket
/// annihilating its term).
struct ParseResult {
    VariableContext ctx;
    BracketPolynomial poly;
    std::vector<std::string> warnings;
};

/// Text grammar:
///   document := header? polynomial
///   header   := "vars" decl ("<" decl)* ";"        decl := ident (":" nat)?
///   polynomial := ("+"|"-")? term (("+"|"-") term)*
///   term     := rational? atom* ("@" square+)?
///   atom     := ident | "[" (ident | bracket)+ "]"
///   square   := ident "^" nat                       (exponent even, 2k)
/// Without a header, variables are collected from the body and ordered
/// lexicographically by name. Inner brackets are expanded immediately by
/// the bracket definition. Multiplicities are raised to observed usage.
ParseResult parse(const std::string& text);

std::string print_word(const Word& w, const VariableContext& ctx);
std::string print_monomial(const Monomial& m, const VariableContext& ctx);

/// Deterministic: terms in descending monomial order; parse(print(p)) = p.
std::string print(const BracketPolynomial& p, const VariableContext& ctx);
std::string print(const Polynomial& p, const VariableContext& ctx);

/// Header line "vars a<b<c;" (multiplicities > 1 printed as name:k).
std::string print_header(const VariableContext& ctx);

/// JSON mirror of the same structure, for machine consumers.
std::string to_json(const BracketPolynomial& p, const VariableContext& ctx);
std::string to_json(const Polynomial& p, const VariableContext& ctx);

} // namespace cliffbrack
