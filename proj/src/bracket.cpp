#include "cliffbrack/bracket.hpp"

#include "cliffbrack/error.hpp"

#include <algorithm>

namespace cliffbrack {

std::pair<Word, int> bracket_leader(const BracketFactor& f) {
    Word rev = reversion(f.entries);
    auto c = compare_words(f.entries, rev);
    if (c >= 0)
        return {f.entries, 1};
    int sign = (f.length() % 2 == 0) ? 1 : -1;
    return {rev, sign};
}

int BracketTerm::degree() const {
    int d = static_cast<int>(bare.size()) + square_degree(squares);
    for (const auto& f : factors)
        d += f.length();
    return d;
}

Word BracketTerm::representative_word() const {
    Word w = bare;
    for (const auto& f : factors)
        w.insert(w.end(), f.entries.begin(), f.entries.end());
    return w;
}

BracketTerm orient_brackets(BracketTerm t) {
    for (auto& f : t.factors) {
        auto [leader, sign] = bracket_leader(f);
        f.entries = std::move(leader);
        if (sign < 0)
            t.coeff = -t.coeff;
    }
    return t;
}

static void sort_factors(std::vector<BracketFactor>& factors) {
    std::stable_sort(factors.begin(), factors.end(), [](const BracketFactor& a, const BracketFactor& b) {
        if (a.entries.empty() || b.entries.empty())
            return b.entries.empty() < a.entries.empty();
        if (a.entries.front() != b.entries.front())
            return a.entries.front() < b.entries.front();
        return compare_words(a.entries, b.entries) < 0;
    });
}

std::optional<BracketTerm> canonicalize_squarefree(BracketTerm t) {
    if (t.coeff == 0)
        return std::nullopt;
    std::vector<BracketFactor> kept;
    for (auto& f : t.factors) {
        // adjacent equal entries are central squares; equal first/last entries
        // fold too, by shift symmetry [vXv] = [X] v^2
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i + 1 < f.entries.size(); ++i) {
                if (f.entries[i] == f.entries[i + 1]) {
                    t.squares[f.entries[i]] += 1;
                    f.entries.erase(f.entries.begin() + static_cast<std::ptrdiff_t>(i),
                                    f.entries.begin() + static_cast<std::ptrdiff_t>(i) + 2);
                    changed = true;
                    break;
                }
            }
            if (!changed && f.entries.size() >= 2 && f.entries.front() == f.entries.back()) {
                t.squares[f.entries.front()] += 1;
                f.entries.pop_back();
                f.entries.erase(f.entries.begin());
                changed = true;
            }
        }
        if (f.entries.size() == 1)
            return std::nullopt; // [v] = 0
        if (f.entries.empty())
            continue; // [1] = 1
        auto [leader, sign] = bracket_leader(f);
        f.entries = std::move(leader);
        if (sign < 0)
            t.coeff = -t.coeff;
        kept.push_back(std::move(f));
    }
    t.factors = std::move(kept);
    sort_factors(t.factors);
    return t;
}

std::strong_ordering compare_shapes(const BracketTerm& a, const BracketTerm& b) {
    if (auto c = compare_canonical(a.representative(), b.representative()); c != 0)
        return c;
    if (auto c = compare_words(a.bare, b.bare); c != 0)
        return c;
    if (a.factors.size() != b.factors.size())
        return a.factors.size() <=> b.factors.size();
    for (std::size_t i = 0; i < a.factors.size(); ++i)
        if (auto c = compare_words(a.factors[i].entries, b.factors[i].entries); c != 0)
            return c;
    if (a.squares != b.squares)
        return a.squares < b.squares ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BracketPolynomial BracketPolynomial::term(BracketTerm t) {
    BracketPolynomial p;
    p.add(std::move(t));
    return p;
}

void BracketPolynomial::add(BracketTerm t) {
    Rational c = t.coeff;
    t.coeff = 1;
    add(t, c);
}

void BracketPolynomial::add(const BracketTerm& shape, const Rational& c) {
    if (c == 0)
        return;
    BracketTerm key = shape;
    key.coeff = 1;
    // [v] = 0 annihilates the term; [1] = 1 elides
    std::erase_if(key.factors, [](const BracketFactor& f) { return f.entries.empty(); });
    for (const auto& f : key.factors)
        if (f.length() == 1)
            return;
    sort_factors(key.factors); // brackets are central; sorted order is the shape key
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

BracketPolynomial& BracketPolynomial::operator+=(const BracketPolynomial& o) {
    for (const auto& [shape, c] : o.terms_)
        add(shape, c);
    return *this;
}

BracketPolynomial& BracketPolynomial::operator-=(const BracketPolynomial& o) {
    for (const auto& [shape, c] : o.terms_)
        add(shape, -c);
    return *this;
}

BracketPolynomial& BracketPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [shape, coeff] : terms_)
        coeff *= c;
    return *this;
}

std::vector<BracketTerm> BracketPolynomial::sorted_terms_desc() const {
    std::vector<BracketTerm> out;
    out.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        BracketTerm t = it->first;
        t.coeff = it->second;
        out.push_back(std::move(t));
    }
    return out;
}

BracketTerm BracketPolynomial::leading() const {
    if (terms_.empty())
        throw DomainError("leading term of the zero bracket polynomial");
    BracketTerm t = terms_.rbegin()->first;
    t.coeff = terms_.rbegin()->second;
    return t;
}

Polynomial expand_to_vv(const BracketTerm& t, bool fold) {
    // 2[A] = A + (-1)^a A-dagger, expanded over all factor choices
    Polynomial acc = Polynomial::monomial(Monomial(t.bare, t.squares), t.coeff);
    for (const auto& f : t.factors) {
        if (f.length() == 1) // [v] = 0
            return Polynomial();
        Polynomial next;
        int sign = (f.length() % 2 == 0) ? 1 : -1;
        Word rev = reversion(f.entries);
        for (const auto& [m, c] : acc.terms()) {
            Rational half = c / 2;
            Monomial fwd = m;
            fwd.left.insert(fwd.left.end(), f.entries.begin(), f.entries.end());
            next.add(fwd, half);
            Monomial bwd = m;
            bwd.left.insert(bwd.left.end(), rev.begin(), rev.end());
            next.add(bwd, sign > 0 ? half : Rational(-half));
        }
        acc = std::move(next);
    }
    if (fold)
        acc.fold();
    return acc;
}

Polynomial expand_to_vv(const BracketPolynomial& p, bool fold) {
    Polynomial out;
    for (const auto& [shape, c] : p.term_map()) {
        BracketTerm t = shape;
        t.coeff = c;
        out += expand_to_vv(t, fold);
    }
    return out;
}

BracketPolynomial from_vv(const Polynomial& p) {
    BracketPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        BracketTerm t;
        t.coeff = c;
        t.bare = m.left;
        t.squares = m.squares;
        out.add(t);
    }
    return out;
}

} // namespace cliffbrack
