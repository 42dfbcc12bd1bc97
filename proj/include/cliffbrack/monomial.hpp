#pragma once

#include "cliffbrack/variable.hpp"

#include <compare>
#include <map>
#include <utility>

namespace cliffbrack {

/// Central square factors behind the box symbol: variable -> k, meaning v^(2k).
/// The empty map is 1.
using SquarePart = std::map<VarId, int>;

int square_degree(const SquarePart& s);

/// A monic monomial of the vector-variable ring, with squares segregated
/// behind the box symbol. General-ring monomials keep explicit repeats in
/// `left` and an empty square part; square-free monomials keep `left` free
/// of adjacent equal pairs.
struct Monomial {
    Word left;
    SquarePart squares;

    Monomial() = default;
    Monomial(Word l, SquarePart s = {}) : left(std::move(l)), squares(std::move(s)) {}

    int degree() const { return static_cast<int>(left.size()) + square_degree(squares); }
    bool is_one() const { return left.empty() && squares.empty(); }

    /// The lexicographically minimal word equal to this monomial modulo V2,
    /// produced by the square-insertion procedure. Drives the term order.
    Word canonical_word() const;

    bool operator==(const Monomial&) const = default;
};

/// Total preorder: degree first, then lexicographic comparison of canonical words.
/// Distinct monomials compare equal exactly when their canonical forms coincide.
std::strong_ordering compare_canonical(const Monomial& a, const Monomial& b);

/// Strict total order for term storage: canonical comparison refined by a
/// structural tie-break, so V2-equal representations can coexist in one map.
std::strong_ordering compare_structural(const Monomial& a, const Monomial& b);

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare_structural(a, b) < 0;
    }
};

std::strong_ordering compare_words(const Word& a, const Word& b);

/// Reversed copy of a word. The reversion itself is sign-free; the Clifford
/// conjugate sign (-1)^k is applied by callers.
Word reversion(const Word& s);

/// Fold every adjacent equal pair of the left part into the square part.
/// Value-preserving modulo V2; fixed point is the square-free representation.
void fold_squares(Monomial& m);

/// True if the word contains an adjacent equal pair.
bool has_adjacent_pair(const Word& w);

} // namespace cliffbrack
