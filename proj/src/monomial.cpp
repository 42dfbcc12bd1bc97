#include "cliffbrack/monomial.hpp"

#include <algorithm>

namespace cliffbrack {

int square_degree(const SquarePart& s) {
    int d = 0;
    for (const auto& [v, k] : s)
        d += 2 * k;
    return d;
}

Word Monomial::canonical_word() const {
    // Square pairs v^(2r) insert before the first left-variable strictly
    // greater than v whose predecessor is <= v; processed in ascending v.
    Word g = left;
    for (const auto& [v, r] : squares) {
        std::size_t pos = g.size();
        for (std::size_t t = 0; t < g.size(); ++t) {
            if (g[t] > v && (t == 0 || g[t - 1] <= v)) {
                pos = t;
                break;
            }
        }
        g.insert(g.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<std::size_t>(2 * r), v);
    }
    return g;
}

std::strong_ordering compare_words(const Word& a, const Word& b) {
    if (a.size() != b.size())
        return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

std::strong_ordering compare_canonical(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree())
        return a.degree() <=> b.degree();
    return compare_words(a.canonical_word(), b.canonical_word());
}

std::strong_ordering compare_structural(const Monomial& a, const Monomial& b) {
    if (auto c = compare_canonical(a, b); c != 0)
        return c;
    if (auto c = compare_words(a.left, b.left); c != 0)
        return c;
    if (a.squares != b.squares)
        return a.squares < b.squares ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Word reversion(const Word& s) {
    return Word(s.rbegin(), s.rend());
}

bool has_adjacent_pair(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1])
            return true;
    return false;
}

void fold_squares(Monomial& m) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < m.left.size(); ++i) {
            if (m.left[i] == m.left[i + 1]) {
                m.squares[m.left[i]] += 1;
                m.left.erase(m.left.begin() + static_cast<std::ptrdiff_t>(i),
                             m.left.begin() + static_cast<std::ptrdiff_t>(i) + 2);
                changed = true;
                break;
            }
        }
    }
}

} // namespace cliffbrack
