#pragma once

#include "cliffbrack/monomial.hpp"
#include "cliffbrack/rational.hpp"

#include <map>

namespace cliffbrack {

/// Exact-rational polynomial in the vector-variable product. Zero coefficients
/// are never stored; the zero polynomial is the empty map. Terms iterate in
/// ascending monomial order, so rbegin() is the leading term.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    Polynomial() = default;
    static Polynomial monomial(Monomial m, Rational c = 1);
    static Polynomial word(Word w, Rational c = 1);

    bool is_zero() const { return terms_.empty(); }
    int size() const { return static_cast<int>(terms_.size()); }
    const TermMap& terms() const { return terms_; }

    /// Highest term; throws DomainError on the zero polynomial.
    const std::pair<const Monomial, Rational>& leading() const;

    void add(const Monomial& m, const Rational& c);
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }

    /// Fold adjacent squares in every term (square-free representation).
    void fold();

    bool operator==(const Polynomial&) const = default;

private:
    TermMap terms_;
};

/// Concatenation product l * m * r of monomials as words-with-squares;
/// set fold to produce the square-free representation.
Monomial mul(const Monomial& l, const Monomial& r, bool fold = false);

} // namespace cliffbrack
