#include "cliffbrack/straighten.hpp"

#include "cliffbrack/error.hpp"
#include "cliffbrack/parser.hpp"

#include <algorithm>
#include <set>

namespace cliffbrack {

namespace {

BracketTerm factor_term(std::vector<Word> factor_words, Rational coeff = 1, Word bare = {},
                        SquarePart squares = {}) {
    BracketTerm t;
    t.coeff = std::move(coeff);
    t.bare = std::move(bare);
    for (auto& w : factor_words)
        t.factors.emplace_back(std::move(w));
    t.squares = std::move(squares);
    return t;
}

BracketPolynomial bmul(const BracketPolynomial& a, const BracketPolynomial& b) {
    BracketPolynomial out;
    for (const auto& [sa, ca] : a.term_map())
        for (const auto& [sb, cb] : b.term_map()) {
            BracketTerm t;
            t.coeff = ca * cb;
            t.bare = sa.bare;
            t.bare.insert(t.bare.end(), sb.bare.begin(), sb.bare.end());
            t.factors = sa.factors;
            t.factors.insert(t.factors.end(), sb.factors.begin(), sb.factors.end());
            t.squares = sa.squares;
            for (const auto& [v, k] : sb.squares)
                t.squares[v] += k;
            out.add(t);
        }
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

Word concat(std::initializer_list<Word> parts) {
    Word w;
    for (const Word& p : parts)
        w.insert(w.end(), p.begin(), p.end());
    return w;
}

} // namespace

std::vector<int> default_partition(int length) {
    std::vector<int> parts;
    if (length < 2)
        return parts;
    if (length % 2 == 1) {
        parts.push_back(3);
        length -= 3;
    }
    while (length > 0) {
        parts.push_back(2);
        length -= 2;
    }
    return parts;
}

namespace {

BracketPolynomial caianiello_rec(const Word& w, std::multiset<int> parts) {
    int len = static_cast<int>(w.size());
    if (parts.size() == 1 && *parts.begin() == len)
        return BracketPolynomial::term(factor_term({w}));
    if (len % 2 == 0 && parts.count(2)) {
        parts.erase(parts.find(2));
        BracketPolynomial out;
        for (std::size_t i = 1; i < w.size(); ++i) {
            Rational sign = (i % 2 == 1) ? 1 : -1; // (-1)^(i+1) at 1-based position i+1
            Word rest;
            for (std::size_t j = 1; j < w.size(); ++j)
                if (j != i)
                    rest.push_back(w[j]);
            BracketPolynomial head = BracketPolynomial::term(factor_term({{w[0], w[i]}}, sign));
            out += bmul(head, caianiello_rec(rest, parts));
        }
        return out;
    }
    if (len % 2 == 1 && parts.count(3)) {
        parts.erase(parts.find(3));
        BracketPolynomial out;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j)
                for (std::size_t k = j + 1; k < w.size(); ++k) {
                    Word second{w[i], w[j], w[k]};
                    Word first;
                    for (std::size_t q = 0; q < w.size(); ++q)
                        if (q != i && q != j && q != k)
                            first.push_back(w[q]);
                    // shuffle sign: elements of the second part move past the
                    // unchosen elements to their right
                    std::size_t inversions = 0;
                    for (std::size_t p : {i, j, k})
                        for (std::size_t q = p + 1; q < w.size(); ++q)
                            if (q != i && q != j && q != k)
                                ++inversions;
                    Rational sign = (inversions % 2 == 0) ? 1 : -1;
                    BracketPolynomial head = caianiello_rec(first, parts);
                    head *= sign;
                    out += bmul(head, BracketPolynomial::term(factor_term({second})));
                }
        return out;
    }
    throw DomainError("partition is not realizable by the scalar expansion lines");
}

} // namespace

BracketPolynomial caianiello_expand(const BracketFactor& f, const std::vector<int>& partition,
                                    const VariableContext& ctx) {
    (void)ctx;
    if (f.length() == 0)
        return BracketPolynomial::term(factor_term({}));
    if (f.length() == 1)
        return BracketPolynomial(); // [v] = 0
    int sum = 0;
    for (int p : partition) {
        if (p < 2)
            throw DomainError("partition parts must be >= 2");
        sum += p;
    }
    if (sum != f.length())
        throw DomainError("partition does not sum to the bracket length");
    return caianiello_rec(f.entries, std::multiset<int>(partition.begin(), partition.end()));
}

BracketPolynomial caianiello_expand(const BracketFactor& f, const VariableContext& ctx) {
    return caianiello_expand(f, default_partition(f.length()), ctx);
}

BracketPolynomial fundamental_reduction(VarId u, const Word& D, VarId v) {
    if (D.empty())
        throw DomainError("fundamental reduction needs a non-empty middle");
    if (!(u > v) || !(u > D.front()) || (D.size() > 1 && !(D.front() > v)))
        throw DomainError("fundamental reduction side conditions violated");
    BracketPolynomial out;
    out.add(factor_term({D}, 2, {u, v}));
    out.add(factor_term({concat({{u}, D})}, 2, {v}));
    out.add(factor_term({}, -1, concat({D, {u, v}})));
    return out;
}

namespace {

struct InteriorWindow {
    std::size_t u_pos;
    std::size_t d_len;
};

std::optional<InteriorWindow> find_interior_window(const Word& w) {
    for (std::size_t u_pos = 0; u_pos + 2 < w.size(); ++u_pos) {
        for (std::size_t d = 1; u_pos + d + 1 < w.size(); ++d) {
            VarId u = w[u_pos];
            VarId ld = w[u_pos + 1];
            VarId v = w[u_pos + d + 1];
            if (u > v && u > ld && (d == 1 || ld > v))
                return InteriorWindow{u_pos, d};
        }
    }
    return std::nullopt;
}

} // namespace

BracketPolynomial interior_normalize(const BracketFactor& f) {
    auto win = find_interior_window(f.entries);
    if (!win)
        return BracketPolynomial::term(factor_term({f.entries}));
    const Word& w = f.entries;
    Word C(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(win->u_pos));
    VarId u = w[win->u_pos];
    Word D(w.begin() + static_cast<std::ptrdiff_t>(win->u_pos) + 1,
           w.begin() + static_cast<std::ptrdiff_t>(win->u_pos + win->d_len) + 1);
    VarId v = w[win->u_pos + win->d_len + 1];
    Word E(w.begin() + static_cast<std::ptrdiff_t>(win->u_pos + win->d_len) + 2, w.end());
    BracketPolynomial out;
    out.add(factor_term({concat({C, {u, v}, E}), D}, 2));
    out.add(factor_term({concat({C, {v}, E}), concat({{u}, D})}, 2));
    out.add(factor_term({concat({C, D, {u, v}, E})}, -1));
    return out;
}

BracketPolynomial absorb(const BracketFactor& first, const BracketFactor& second) {
    if (first.length() < 2 || second.length() < 2)
        throw DomainError("absorb needs brackets of length >= 2");
    const Word& f = first.entries;
    const Word& g = second.entries;
    VarId u = f[f.size() - 2], v = f.back();
    VarId w = g.front(), d = g.back();
    if (!(u > v) || !(u > w) || !(w > d))
        throw DomainError("absorb side conditions violated");
    Word B(f.begin(), f.end() - 2);
    Word C(g.begin() + 1, g.end() - 1);
    Rational sign = (C.size() % 2 == 0) ? Rational(1, 2) : Rational(-1, 2);
    BracketPolynomial out;
    out.add(factor_term({concat({B, g, {u, v}})}, Rational(1, 2)));
    out.add(factor_term({concat({B, {d}, reversion(C), {w, u, v}})}, sign));
    return out;
}

BracketPolynomial shuffle(const BracketFactor& first, const BracketFactor& second) {
    if (first.length() < 2 || second.length() < 2)
        throw DomainError("shuffle needs brackets of length >= 2");
    Word A(first.entries.begin(), first.entries.end() - 1);
    VarId v = first.entries.back();
    const Word& g = second.entries;
    std::size_t b = 1;
    while (b < g.size() && g[b] > g[b - 1])
        ++b;
    if (b == g.size())
        throw DomainError("shuffle: second bracket has no descent");
    Word B(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(b));
    VarId w = g[b];
    Word C(g.begin() + static_cast<std::ptrdiff_t>(b) + 1, g.end());
    if (!(B.front() > A.back()) || !(A.back() > v) || !(v > w))
        throw DomainError("shuffle side conditions violated");
    Rational sb = (B.size() % 2 == 0) ? 1 : -1;
    BracketPolynomial out;
    out.add(factor_term({concat({A, {w}, C, {v}}), B}, 1));
    out.add(factor_term({concat({A, {w}, reversion(B), {v}}), C}, -sb));
    out.add(factor_term({concat({{w}, C, {v}}), concat(A, reversion(B))}, -sb));
    out.add(factor_term({concat({{w}, reversion(B), {v}}), concat(A, C)}, sb));
    out.add(factor_term({concat(A, {w}), concat({C, {v}, B})}, -1));
    return out;
}

BracketPolynomial general_shuffle(const BracketFactor& first, const BracketFactor& second,
                                  std::size_t vi, std::size_t wi) {
    const Word& fw = first.entries;
    const Word& gw = second.entries;
    if (vi == 0 || vi >= fw.size() || wi == 0 || wi >= gw.size())
        throw DomainError("general shuffle: v and w must have non-empty prefixes");
    Word A(fw.begin(), fw.begin() + static_cast<std::ptrdiff_t>(vi));
    VarId v = fw[vi];
    Word D(fw.begin() + static_cast<std::ptrdiff_t>(vi) + 1, fw.end());
    Word B(gw.begin(), gw.begin() + static_cast<std::ptrdiff_t>(wi));
    VarId w = gw[wi];
    Word C(gw.begin() + static_cast<std::ptrdiff_t>(wi) + 1, gw.end());
    if (!(A.front() <= B.front()) || (!D.empty() && !(A.front() > D.back())) ||
        (!C.empty() && !(B.front() > C.back())) || !(A.front() > v) || !(v > w))
        throw DomainError("general shuffle side conditions violated");
    Rational sb = (B.size() % 2 == 0) ? 1 : -1;
    Rational sc = (C.size() % 2 == 0) ? 1 : -1;
    Rational sd = (D.size() % 2 == 0) ? 1 : -1;
    BracketPolynomial out;
    out.add(factor_term({concat({{v}, D, B, {w}}), concat(A, C)}, 1));
    out.add(factor_term({concat({{v}, D, reversion(C), {w}}), concat(A, reversion(B))}, -sb * sc));
    out.add(factor_term({concat(A, {w}), concat({reversion(D), {v}, B, C})}, -sd));
    out.add(factor_term({concat({{v}, D}), concat({A, {w}, B, C})}, -1));
    out.add(factor_term({concat({A, {w}, reversion(B), {v}, D}), C}, -sb));
    out.add(factor_term({concat({A, {w}, C, {v}, D}), B}, 1));
    return out;
}

namespace {

// Greedy [Y z] block decomposition: Y non-empty ascending, z < Y[0].
std::optional<std::vector<Word>> block_split(const Word& w) {
    std::vector<Word> blocks;
    Word y;
    for (VarId x : w) {
        if (y.empty() || x > y.back()) {
            y.push_back(x);
            continue;
        }
        if (x < y.front()) {
            y.push_back(x);
            blocks.push_back(std::move(y));
            y.clear();
            continue;
        }
        return std::nullopt;
    }
    if (!y.empty())
        return std::nullopt;
    return blocks;
}

} // namespace

BracketPolynomial split(const BracketFactor& f) {
    auto blocks = block_split(f.entries);
    if (!blocks || blocks->size() < 2)
        throw DomainError("split: no valid block decomposition");
    VarId a1 = (*blocks)[0].front();
    for (const Word& blk : *blocks)
        if (!(a1 > blk.back()))
            throw DomainError("split: leading variable must exceed every block terminator");
    // peel blocks from the right: [X last] = 2 [X][last] - (-1)^(b_k) [c_k B_k' a_k X]
    BracketPolynomial acc = BracketPolynomial::term(factor_term({(*blocks)[0]}));
    Word x_word = (*blocks)[0];
    for (std::size_t i = 1; i < blocks->size(); ++i) {
        const Word& blk = (*blocks)[i];
        BracketPolynomial next = bmul(acc, BracketPolynomial::term(factor_term({blk})));
        next *= 2;
        Word y(blk.begin(), blk.end() - 1);
        Word rem{blk.back()};
        Word yrev = reversion(Word(y.begin() + 1, y.end()));
        rem.insert(rem.end(), yrev.begin(), yrev.end());
        rem.push_back(y.front());
        rem.insert(rem.end(), x_word.begin(), x_word.end());
        Rational sign = ((y.size() - 1) % 2 == 0) ? -1 : 1; // -(-1)^(b_i)
        next.add(factor_term({rem}, sign));
        acc = std::move(next);
        x_word.insert(x_word.end(), blk.begin(), blk.end());
    }
    return acc;
}

BracketPolynomial merge_brackets(const BracketFactor& first, const BracketFactor& second) {
    BracketPolynomial out;
    out.add(factor_term({concat(first.entries, second.entries)}, Rational(1, 2)));
    Rational sign = (second.length() % 2 == 0) ? Rational(1, 2) : Rational(-1, 2);
    out.add(factor_term({concat(reversion(second.entries), first.entries)}, sign));
    return out;
}

namespace {

bool single_block(const Word& w) {
    if (w.size() < 2)
        return false;
    for (std::size_t i = 0; i + 2 < w.size(); ++i)
        if (!(w[i] < w[i + 1]))
            return false;
    return w.back() < w.front();
}

// Straight conditions on leader-oriented single-block factors, in stored
// (sorted) order: z chain and Y chain both non-descending.
bool term_straight_oriented(const BracketTerm& t) {
    for (const auto& f : t.factors)
        if (!single_block(f.entries))
            return false;
    for (std::size_t i = 0; i + 1 < t.factors.size(); ++i) {
        const Word& a = t.factors[i].entries;
        const Word& b = t.factors[i + 1].entries;
        if (a.back() > b.back())
            return false; // z descent
        if (a[a.size() - 2] > b.front())
            return false; // Y concatenation descent
    }
    return true;
}

struct Move {
    const char* rule;
    BracketPolynomial local;       // rewrite of the involved factors
    std::vector<std::size_t> used; // indices of the involved factors
    bool leader_neutral;           // split/merge principal keeps the leader
};

std::optional<Move> choose_move(const BracketTerm& t) {
    // precedence: interior, absorb, shuffle, split, merge
    for (std::size_t i = 0; i < t.factors.size(); ++i)
        if (find_interior_window(t.factors[i].entries))
            return Move{"interior", interior_normalize(t.factors[i]), {i}, false};
    for (std::size_t i = 0; i + 1 < t.factors.size(); ++i) {
        const Word& f = t.factors[i].entries;
        const Word& g = t.factors[i + 1].entries;
        if (f[f.size() - 2] > g.front())
            return Move{"absorb", absorb(t.factors[i], t.factors[i + 1]), {i, i + 1}, false};
    }
    for (std::size_t i = 0; i + 1 < t.factors.size(); ++i) {
        const Word& f = t.factors[i].entries;
        const Word& g = t.factors[i + 1].entries;
        std::size_t b = 1;
        while (b < g.size() && g[b] > g[b - 1])
            ++b;
        if (b == g.size())
            continue;
        if (g.front() > f[f.size() - 2] && f[f.size() - 2] > f.back() && f.back() > g[b])
            return Move{"shuffle", shuffle(t.factors[i], t.factors[i + 1]), {i, i + 1}, false};
    }
    for (std::size_t i = 0; i < t.factors.size(); ++i) {
        auto blocks = block_split(t.factors[i].entries);
        if (blocks && blocks->size() >= 2)
            return Move{"split", split(t.factors[i]), {i}, true};
    }
    for (std::size_t i = 0; i + 1 < t.factors.size(); ++i) {
        if (t.factors[i].entries.back() > t.factors[i + 1].entries.back()) {
            Word merged = concat(t.factors[i].entries, t.factors[i + 1].entries);
            if (!find_interior_window(merged))
                throw InternalError("merged bracket admits no interior window");
            return Move{"merge", merge_brackets(t.factors[i], t.factors[i + 1]), {i, i + 1}, true};
        }
    }
    return std::nullopt;
}

} // namespace

BracketPolynomial leader_normal_form(const BracketPolynomial& p, const VariableContext& ctx, long fuel,
                                     const TraceSink& trace) {
    if (fuel < 0)
        fuel = default_fuel();
    BracketPolynomial work;
    for (const auto& [shape, c] : p.term_map()) {
        if (!shape.bare.empty())
            throw DomainError("straighten expects products of brackets, not bare variables");
        BracketTerm t = shape;
        t.coeff = c;
        if (auto canon = canonicalize_squarefree(std::move(t)))
            work.add(*canon);
    }

    std::set<BracketTerm, BracketPolynomial::ShapeLess> straight_memo;
    long steps = 0;
    for (;;) {
        const BracketTerm* target = nullptr;
        Rational coeff;
        for (auto it = work.term_map().rbegin(); it != work.term_map().rend(); ++it) {
            if (straight_memo.count(it->first))
                continue;
            if (term_straight_oriented(it->first)) {
                straight_memo.insert(it->first);
                continue;
            }
            target = &it->first;
            coeff = it->second;
            break;
        }
        if (!target)
            break;
        if (++steps > fuel)
            throw InternalError("straightening fuel exhausted (" + std::to_string(fuel) + " steps)");

        BracketTerm head = *target;
        head.coeff = 1;
        auto move = choose_move(head);
        if (!move)
            throw InternalError("no straightening move applies to a non-straight term");

        Monomial head_rep = head.representative();
        std::vector<BracketFactor> others;
        for (std::size_t i = 0; i < head.factors.size(); ++i)
            if (std::find(move->used.begin(), move->used.end(), i) == move->used.end())
                others.push_back(head.factors[i]);

        BracketPolynomial replacement;
        for (const auto& [mshape, mc] : move->local.term_map()) {
            BracketTerm nt;
            nt.coeff = coeff * mc;
            nt.bare = mshape.bare;
            nt.factors = others;
            nt.factors.insert(nt.factors.end(), mshape.factors.begin(), mshape.factors.end());
            nt.squares = head.squares;
            for (const auto& [v, k] : mshape.squares)
                nt.squares[v] += k;
            auto canon = canonicalize_squarefree(std::move(nt));
            if (!canon)
                continue;
            auto cmp = compare_canonical(canon->representative(), head_rep);
            if (cmp > 0 || (cmp == 0 && !move->leader_neutral))
                throw InternalError(std::string("straightening move '") + move->rule +
                                    "' does not decrease the leader");
            replacement.add(*canon);
        }
        if (trace) {
            BracketTerm shown = head;
            shown.coeff = coeff;
            trace(TraceStep{move->rule, print(BracketPolynomial::term(shown), ctx),
                            print(replacement, ctx)});
        }
        work.add(head, -coeff);
        work += replacement;
    }
    return work;
}

BracketPolynomial straighten(const BracketPolynomial& p, const VariableContext& ctx, long fuel,
                             const TraceSink& trace) {
    BracketPolynomial work = leader_normal_form(p, ctx, fuel, trace);
    // straight orientation: commute each [Y z] to [z Y] (shift symmetry)
    BracketPolynomial out;
    for (const auto& [shape, c] : work.term_map()) {
        BracketTerm t = shape;
        t.coeff = c;
        for (auto& f : t.factors)
            std::rotate(f.entries.begin(), f.entries.end() - 1, f.entries.end());
        out.add(t);
    }
    return out;
}

bool is_straight(const BracketTerm& t, const VariableContext& ctx) {
    (void)ctx;
    std::vector<Word> rows;
    for (const auto& f : t.factors) {
        const Word& w = f.entries;
        if (w.size() < 2)
            return false;
        bool ascending = true;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (!(w[i] < w[i + 1]))
                ascending = false;
        if (ascending) {
            rows.push_back(w); // already in [z Y] orientation
        } else if (single_block(w)) {
            Word row{w.back()};
            row.insert(row.end(), w.begin(), w.end() - 1);
            rows.push_back(std::move(row));
        } else {
            return false;
        }
    }
    std::sort(rows.begin(), rows.end(), [](const Word& a, const Word& b) {
        return compare_words(a, b) < 0;
    });
    // (3) columns non-descending
    std::size_t widest = 0;
    for (const auto& r : rows)
        widest = std::max(widest, r.size());
    for (std::size_t col = 0; col < widest; ++col) {
        VarId prev = -1;
        for (const auto& r : rows) {
            if (col >= r.size())
                continue;
            if (prev >= 0 && r[col] < prev)
                return false;
            prev = r[col];
        }
    }
    // (4) trailing entry of Y_i is at most the leading entry of Y_{i+1}
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        if (rows[i].back() > rows[i + 1][1])
            return false;
    return true;
}

Tableau to_tableau(const BracketTerm& t) {
    Tableau tab;
    for (const auto& f : t.factors) {
        const Word& w = f.entries;
        bool ascending = true;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (!(w[i] < w[i + 1]))
                ascending = false;
        if (ascending) {
            tab.rows.push_back(w);
        } else if (single_block(w)) {
            Word row{w.back()};
            row.insert(row.end(), w.begin(), w.end() - 1);
            tab.rows.push_back(std::move(row));
        } else {
            throw DomainError("term factor is not a single block");
        }
    }
    std::sort(tab.rows.begin(), tab.rows.end(), [](const Word& a, const Word& b) {
        return compare_words(a, b) < 0;
    });
    return tab;
}

bool IdentityReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

namespace {

struct ShapeRng {
    unsigned long long state;
    explicit ShapeRng(unsigned long long seed) : state(seed ^ 0xA02BDBF7BB3C0A7ull) {}
    unsigned long long raw() {
        state += 0x9E3779B97F4A7C15ull;
        unsigned long long z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    int pick(int lo, int hi) { // inclusive
        return lo + static_cast<int>(raw() % static_cast<unsigned long long>(hi - lo + 1));
    }
    Word word(int len, int lo, int hi) {
        Word w;
        for (int i = 0; i < len; ++i)
            w.push_back(pick(lo, hi));
        return w;
    }
    Word ascending_word(int len, int lo, int hi) {
        std::set<VarId> s;
        while (static_cast<int>(s.size()) < len)
            s.insert(pick(lo, hi));
        return Word(s.begin(), s.end());
    }
};

BracketTerm bare_term(Word w, Rational c = 1) {
    return factor_term({}, std::move(c), std::move(w));
}

using InstanceGen = std::function<BracketPolynomial(ShapeRng&)>;

IdentityCheck run_identity(const std::string& name, int instances, unsigned long long seed,
                           const VariableContext& ctx, const InstanceGen& gen) {
    ShapeRng rng(seed ^ std::hash<std::string>{}(name));
    for (int i = 0; i < instances; ++i) {
        BracketPolynomial p = gen(rng);
        ZeroCheck z = check_zero(p, ctx, 5, seed + static_cast<unsigned long long>(i) * 977u);
        if (!z.zero)
            return IdentityCheck{name, instances, false,
                                 "nonzero at instance " + std::to_string(i) + ": " + print(p, ctx)};
    }
    return IdentityCheck{name, instances, true, ""};
}

} // namespace

IdentityReport check_basic_identities(int instances, unsigned long long seed) {
    // eight anonymous variables are plenty for every identity shape
    std::vector<std::string> names;
    for (int i = 1; i <= 8; ++i)
        names.push_back("x" + std::to_string(i));
    VariableContext ctx = VariableContext::make(names);
    const int top = 7;

    IdentityReport report;
    auto add = [&](const std::string& name, const InstanceGen& gen) {
        report.checks.push_back(run_identity(name, instances, seed, ctx, gen));
    };

    add("IGP", [&](ShapeRng& rng) {
        Word a = rng.word(5, 0, top);
        BracketPolynomial p;
        p.add(factor_term({{a[0], a[1]}, {a[2], a[3], a[4]}}, 1));
        p.add(factor_term({{a[0], a[2]}, {a[1], a[3], a[4]}}, -1));
        p.add(factor_term({{a[0], a[3]}, {a[1], a[2], a[4]}}, 1));
        p.add(factor_term({{a[0], a[4]}, {a[1], a[2], a[3]}}, -1));
        return p;
    });

    add("DB", [&](ShapeRng& rng) {
        Word a = rng.word(6, 0, top);
        BracketPolynomial p;
        p.add(factor_term({{a[0], a[1], a[2]}, {a[3], a[4], a[5]}}, 1));
        int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
        for (int s = 0; s < 6; ++s) {
            Rational sign = (s < 3) ? 1 : -1;
            p.add(factor_term({{a[0], a[3 + perm[s][0]]},
                               {a[1], a[3 + perm[s][1]]},
                               {a[2], a[3 + perm[s][2]]}},
                              sign));
        }
        return p;
    });

    add("new:reduction:1", [&](ShapeRng& rng) {
        Word A = rng.word(rng.pick(1, 2), 0, top);
        Word B = rng.word(rng.pick(1, 2), 0, top);
        Rational sb = (B.size() % 2 == 0) ? 1 : -1;
        BracketPolynomial p;
        p.add(bare_term(concat(A, B), Rational(1, 2)));
        p.add(bare_term(concat(B, A), Rational(1, 2)));
        p.add(factor_term({concat(A, B)}, -1));
        p.add(factor_term({reversion(B)}, -sb, A));
        p.add(factor_term({A}, sb, reversion(B)));
        return p;
    });

    add("new:reduction:2", [&](ShapeRng& rng) {
        Word A = rng.word(rng.pick(1, 2), 0, top);
        Word B = rng.word(rng.pick(1, 2), 0, top);
        Rational sab = ((A.size() + B.size()) % 2 == 0) ? 1 : -1;
        Rational sa = (A.size() % 2 == 0) ? 1 : -1;
        BracketPolynomial p;
        p.add(bare_term(concat(A, B), Rational(1, 2)));
        p.add(bare_term(concat(reversion(A), reversion(B)), -sab / 2));
        p.add(factor_term({reversion(A)}, -sa, B));
        p.add(factor_term({B}, sa, reversion(A)));
        return p;
    });

    add("shuffle:basic", [&](ShapeRng& rng) {
        VarId v = rng.pick(0, top), w = rng.pick(0, top);
        Word B = rng.word(rng.pick(1, 2), 0, top);
        Word C = rng.word(rng.pick(0, 2), 0, top);
        Rational sb = (B.size() % 2 == 0) ? 1 : -1;
        BracketPolynomial p;
        p.add(factor_term({concat({B, {w}, C})}, 1, {v}));
        p.add(factor_term({concat({C, {v}, B})}, 1, {w}));
        p.add(factor_term({reversion(B)}, -sb, concat({{w}, C, {v}})));
        p.add(factor_term({concat({{w}, C, {v}})}, sb, reversion(B)));
        p.add(factor_term({C}, sb, concat({{w}, reversion(B), {v}})));
        p.add(factor_term({concat({{w}, reversion(B), {v}})}, -sb, C));
        return p;
    });

    add("fundamental", [&](ShapeRng& rng) {
        VarId v = rng.pick(0, 2);
        VarId u = rng.pick(5, top);
        int d = rng.pick(1, 3);
        Word D{rng.pick(v + 1, 4)};
        for (int i = 1; i < d; ++i)
            D.push_back(rng.pick(0, top));
        BracketPolynomial p = fundamental_reduction(u, D, v);
        p *= -1;
        Word lhs{u};
        lhs.insert(lhs.end(), D.begin(), D.end());
        lhs.push_back(v);
        p.add(bare_term(lhs));
        return p;
    });

    add("interior", [&](ShapeRng& rng) {
        VarId v = rng.pick(0, 2);
        VarId u = rng.pick(5, top);
        int d = rng.pick(1, 2);
        Word D{rng.pick(v + 1, 4)};
        for (int i = 1; i < d; ++i)
            D.push_back(rng.pick(0, top));
        Word w = rng.word(rng.pick(0, 2), 0, top);
        w.push_back(u);
        w.insert(w.end(), D.begin(), D.end());
        w.push_back(v);
        Word tail = rng.word(rng.pick(0, 2), 0, top);
        w.insert(w.end(), tail.begin(), tail.end());
        BracketFactor f{w};
        BracketPolynomial p = interior_normalize(f);
        p *= -1;
        p.add(factor_term({w}));
        return p;
    });

    add("absorb", [&](ShapeRng& rng) {
        VarId u = rng.pick(5, top);
        VarId v = rng.pick(0, u - 1);
        VarId w = rng.pick(1, u - 1);
        VarId d = rng.pick(0, w - 1);
        Word B = rng.word(rng.pick(0, 2), 0, top);
        Word C = rng.word(rng.pick(0, 2), 0, top);
        Word f = concat({B, {u, v}});
        Word g = concat({{w}, C, {d}});
        BracketPolynomial p = absorb(BracketFactor{f}, BracketFactor{g});
        p *= -1;
        p.add(factor_term({f, g}));
        return p;
    });

    add("shuffle", [&](ShapeRng& rng) {
        VarId w = rng.pick(0, 1);
        VarId v = rng.pick(w + 1, 3);
        VarId ta = rng.pick(v + 1, 5);
        VarId lb = rng.pick(ta + 1, top);
        Word A = rng.word(rng.pick(0, 1), 0, top);
        A.push_back(ta);
        Word B{lb};
        if (rng.pick(0, 1) && lb < top)
            B.push_back(rng.pick(lb + 1, top));
        Word C = rng.word(rng.pick(0, 2), 0, top);
        Word f = concat(A, {v});
        Word g = concat({B, {w}, C});
        BracketPolynomial p = shuffle(BracketFactor{f}, BracketFactor{g});
        p *= -1;
        p.add(factor_term({f, g}));
        return p;
    });

    add("general_shuffle", [&](ShapeRng& rng) {
        VarId w = rng.pick(0, 1);
        VarId v = rng.pick(w + 1, 3);
        VarId la = rng.pick(v + 1, 6);
        VarId lb = rng.pick(la, top);
        Word A{la};
        Word atail = rng.word(rng.pick(0, 1), 0, top);
        A.insert(A.end(), atail.begin(), atail.end());
        Word B{lb};
        Word btail = rng.word(rng.pick(0, 1), 0, top);
        B.insert(B.end(), btail.begin(), btail.end());
        Word D = rng.word(rng.pick(0, 2), 0, top);
        if (!D.empty())
            D.back() = rng.pick(0, la - 1);
        Word C = rng.word(rng.pick(0, 2), 0, top);
        if (!C.empty())
            C.back() = rng.pick(0, lb - 1);
        Word f = concat({A, {v}, D});
        Word g = concat({B, {w}, C});
        BracketPolynomial p = general_shuffle(BracketFactor{f}, BracketFactor{g}, A.size(), B.size());
        p *= -1;
        p.add(factor_term({f, g}));
        return p;
    });

    auto split_gen = [&](int k) {
        return [k, top](ShapeRng& rng) {
            // blocks Y_i z_i with every Y above rank 3 and every z below it,
            // so a_i > c_i and a_1 > c_j hold by construction
            Word w;
            for (int i = 0; i < k; ++i) {
                Word y = rng.ascending_word(rng.pick(1, 2), 3, top);
                w.insert(w.end(), y.begin(), y.end());
                w.push_back(rng.pick(0, 2));
            }
            BracketFactor f{w};
            BracketPolynomial p = split(f);
            p *= -1;
            p.add(factor_term({w}));
            return p;
        };
    };
    add("split:k2", split_gen(2));
    add("split:k3", split_gen(3));

    add("merge", [&](ShapeRng& rng) {
        Word x = rng.word(rng.pick(2, 3), 0, top);
        Word y = rng.word(rng.pick(2, 3), 0, top);
        BracketPolynomial p = merge_brackets(BracketFactor{x}, BracketFactor{y});
        p *= -1;
        p.add(factor_term({x, y}));
        return p;
    });

    add("caianiello", [&](ShapeRng& rng) {
        Word w = rng.word(rng.pick(2, 6), 0, top);
        BracketFactor f{w};
        BracketPolynomial p = caianiello_expand(f, ctx);
        p *= -1;
        p.add(factor_term({w}));
        return p;
    });

    return report;
}

} // namespace cliffbrack
