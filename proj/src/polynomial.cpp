#include "cliffbrack/polynomial.hpp"

#include "cliffbrack/error.hpp"

namespace cliffbrack {

Polynomial Polynomial::monomial(Monomial m, Rational c) {
    Polynomial p;
    p.add(m, c);
    return p;
}

Polynomial Polynomial::word(Word w, Rational c) {
    return monomial(Monomial(std::move(w)), std::move(c));
}

const std::pair<const Monomial, Rational>& Polynomial::leading() const {
    if (terms_.empty())
        throw DomainError("leading term of the zero polynomial");
    return *terms_.rbegin();
}

void Polynomial::add(const Monomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_)
        add(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_)
        add(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

void Polynomial::fold() {
    Polynomial folded;
    for (const auto& [m, c] : terms_) {
        Monomial f = m;
        fold_squares(f);
        folded.add(f, c);
    }
    *this = std::move(folded);
}

Monomial mul(const Monomial& l, const Monomial& r, bool fold) {
    Monomial out;
    out.left = l.left;
    out.left.insert(out.left.end(), r.left.begin(), r.left.end());
    out.squares = l.squares;
    for (const auto& [v, k] : r.squares)
        out.squares[v] += k;
    if (fold)
        fold_squares(out);
    return out;
}

} // namespace cliffbrack
