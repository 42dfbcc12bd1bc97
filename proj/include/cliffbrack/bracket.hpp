#pragma once

#include "cliffbrack/polynomial.hpp"

#include <optional>
#include <vector>

namespace cliffbrack {

/// One bracket factor [A]; `entries` is the stored representative A.
/// Length-1 factors are forbidden at rest: [v] = 0 annihilates the enclosing
/// term at construction time. Length 0 is the scalar 1 and is elided.
struct BracketFactor {
    Word entries;

    BracketFactor() = default;
    explicit BracketFactor(Word e) : entries(std::move(e)) {}
    int length() const { return static_cast<int>(entries.size()); }

    bool operator==(const BracketFactor&) const = default;
};

/// Whichever of A, A-dagger is lexicographically higher, with the sign (-1)^a
/// when the reverse wins. Palindromes return (A, +1).
std::pair<Word, int> bracket_leader(const BracketFactor& f);

/// One term of a bracket polynomial: coefficient * bare variables * bracket
/// factors * central squares. Brackets are central, so they are kept in a
/// canonically sorted list after the bare (non-commutative) part.
struct BracketTerm {
    Rational coeff = 1;
    Word bare;
    std::vector<BracketFactor> factors;
    SquarePart squares;

    int degree() const;

    /// Concatenation of bare variables and stored factor representatives.
    Word representative_word() const;
    Monomial representative() const { return Monomial(representative_word(), squares); }

    bool same_shape(const BracketTerm& o) const {
        return bare == o.bare && factors == o.factors && squares == o.squares;
    }
    bool operator==(const BracketTerm& o) const { return coeff == o.coeff && same_shape(o); }
};

/// Every factor's stored entries become its leader; signs are absorbed into
/// the coefficient. Value-preserving.
BracketTerm orient_brackets(BracketTerm t);

/// Full canonicalization in the square-free bracket ring:
///  - adjacent equal entries inside a factor fold out as central squares,
///  - equal first/last entries fold out by shift symmetry,
///  - [1] elides, [v] annihilates the term,
///  - every factor is oriented to its leader,
///  - factors sort by (leading variable, entries).
/// Returns the canonical term, or nullopt when the term is annihilated.
std::optional<BracketTerm> canonicalize_squarefree(BracketTerm t);

/// Ascending shape order on terms: representative monomial first (canonical),
/// then a structural tie-break on (bare, factors, squares).
std::strong_ordering compare_shapes(const BracketTerm& a, const BracketTerm& b);

/// Sums of bracket terms keyed by shape (bare word, factor list, squares).
/// Keys store coefficient 1; the mapped value is the coefficient.
class BracketPolynomial {
public:
    struct ShapeLess {
        bool operator()(const BracketTerm& a, const BracketTerm& b) const {
            return compare_shapes(a, b) < 0;
        }
    };
    using TermMap = std::map<BracketTerm, Rational, ShapeLess>;

    BracketPolynomial() = default;
    static BracketPolynomial term(BracketTerm t);

    bool is_zero() const { return terms_.empty(); }
    int size() const { return static_cast<int>(terms_.size()); }
    const TermMap& term_map() const { return terms_; }

    /// Merges a term into the sum (like shapes combine; zero coefficients drop).
    void add(BracketTerm t);
    void add(const BracketTerm& shape, const Rational& c);
    BracketPolynomial& operator+=(const BracketPolynomial& o);
    BracketPolynomial& operator-=(const BracketPolynomial& o);
    BracketPolynomial& operator*=(const Rational& c);
    friend BracketPolynomial operator+(BracketPolynomial a, const BracketPolynomial& b) { return a += b; }
    friend BracketPolynomial operator-(BracketPolynomial a, const BracketPolynomial& b) { return a -= b; }
    friend BracketPolynomial operator*(BracketPolynomial a, const Rational& c) { return a *= c; }

    /// Terms with coefficients filled in, descending representative order.
    std::vector<BracketTerm> sorted_terms_desc() const;

    /// Highest term under the representative order; throws on zero.
    BracketTerm leading() const;

    bool operator==(const BracketPolynomial& o) const { return terms_ == o.terms_; }

private:
    TermMap terms_;
};

/// Expands every bracket by definition 2[A] = A + (-1)^a A-dagger and
/// multiplies out; with fold set, the result is square-free.
Polynomial expand_to_vv(const BracketTerm& t, bool fold);
Polynomial expand_to_vv(const BracketPolynomial& p, bool fold);

/// Rebuilds a bracket polynomial from plain vector-variable terms (no factors).
BracketPolynomial from_vv(const Polynomial& p);

/// Structural tableau container; validity predicates live in the straighten module.
struct Tableau {
    std::vector<Word> rows;
    bool operator==(const Tableau&) const = default;
};

} // namespace cliffbrack
