#include "cliffbrack/oracle.hpp"

#include "cliffbrack/error.hpp"

#include <algorithm>
#include <sstream>

namespace cliffbrack {

Multivector8 Multivector8::scalar(const Rational& r) {
    Multivector8 m;
    m.c[0] = r;
    return m;
}

Multivector8 Multivector8::vector(const Rational& a1, const Rational& a2, const Rational& a3) {
    Multivector8 m;
    m.c[1] = a1; // e1
    m.c[2] = a2; // e2
    m.c[4] = a3; // e3
    return m;
}

bool Multivector8::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Rational& r) { return r == 0; });
}

Multivector8& Multivector8::operator+=(const Multivector8& o) {
    for (int i = 0; i < 8; ++i)
        c[static_cast<std::size_t>(i)] += o.c[static_cast<std::size_t>(i)];
    return *this;
}

Multivector8& Multivector8::operator-=(const Multivector8& o) {
    for (int i = 0; i < 8; ++i)
        c[static_cast<std::size_t>(i)] -= o.c[static_cast<std::size_t>(i)];
    return *this;
}

Multivector8& Multivector8::operator*=(const Rational& r) {
    for (auto& x : c)
        x *= r;
    return *this;
}

namespace {

// Parity of transpositions needed to merge the blades, plus one metric sign
// (-1) per shared generator.
int blade_sign(unsigned a, unsigned b) {
    int swaps = 0;
    unsigned t = a >> 1;
    while (t) {
        swaps += __builtin_popcount(t & b);
        t >>= 1;
    }
    swaps += __builtin_popcount(a & b); // e_i e_i = -1
    return (swaps & 1) ? -1 : 1;
}

} // namespace

Multivector8 mul(const Multivector8& a, const Multivector8& b) {
    Multivector8 out;
    for (unsigned i = 0; i < 8; ++i) {
        if (a.c[i] == 0)
            continue;
        for (unsigned j = 0; j < 8; ++j) {
            if (b.c[j] == 0)
                continue;
            Rational v = a.c[i] * b.c[j];
            if (blade_sign(i, j) < 0)
                v = -v;
            out.c[i ^ j] += v;
        }
    }
    return out;
}

Multivector8 conjugate(const Multivector8& a) {
    static constexpr int sign[4] = {1, -1, -1, 1};
    Multivector8 out = a;
    for (unsigned i = 0; i < 8; ++i)
        if (sign[__builtin_popcount(i)] < 0)
            out.c[i] = -out.c[i];
    return out;
}

Multivector8 reverse(const Multivector8& a) {
    static constexpr int sign[4] = {1, 1, -1, -1};
    Multivector8 out = a;
    for (unsigned i = 0; i < 8; ++i)
        if (sign[__builtin_popcount(i)] < 0)
            out.c[i] = -out.c[i];
    return out;
}

CenterValue bracket_of(const Multivector8& a) {
    return CenterValue{a.c[0], a.c[7]};
}

Multivector8 center_embed(const CenterValue& v) {
    Multivector8 m;
    m.c[0] = v.scalar;
    m.c[7] = v.pseudo;
    return m;
}

const Multivector8& Assignment::at(VarId v) const {
    auto it = vectors.find(v);
    if (it == vectors.end())
        throw ContextError("no assignment for variable rank " + std::to_string(v));
    return it->second;
}

namespace {

unsigned long long splitmix64(unsigned long long& x) {
    x += 0x9E3779B97F4A7C15ull;
    unsigned long long z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

AssignmentSampler::AssignmentSampler(int variable_count, unsigned long long seed)
    : n_(variable_count), state_(seed ^ 0xC1F651C67C62C6E0ull) {}

Rational AssignmentSampler::next_component() {
    long long num = static_cast<long long>(splitmix64(state_) % 19) - 9;
    long long den = static_cast<long long>(splitmix64(state_) % 7) + 1;
    return Rational(num, den);
}

Assignment AssignmentSampler::next() {
    Assignment a;
    for (VarId v = 0; v < n_; ++v) {
        Rational x = next_component(), y = next_component(), z = next_component();
        a.vectors.emplace(v, Multivector8::vector(x, y, z));
    }
    return a;
}

Multivector8 eval(const Monomial& m, const Assignment& asg) {
    Multivector8 acc = Multivector8::scalar(1);
    for (VarId v : m.left)
        acc = mul(acc, asg.at(v));
    for (const auto& [v, k] : m.squares) {
        Multivector8 sq = mul(asg.at(v), asg.at(v));
        for (int i = 0; i < k; ++i)
            acc = mul(acc, sq);
    }
    return acc;
}

Multivector8 eval(const Polynomial& p, const Assignment& asg) {
    Multivector8 acc;
    for (const auto& [m, c] : p.terms())
        acc += eval(m, asg) * c;
    return acc;
}

Multivector8 eval(const BracketTerm& t, const Assignment& asg) {
    Multivector8 acc = Multivector8::scalar(t.coeff);
    for (VarId v : t.bare)
        acc = mul(acc, asg.at(v));
    for (const auto& f : t.factors) {
        Multivector8 prod = Multivector8::scalar(1);
        for (VarId v : f.entries)
            prod = mul(prod, asg.at(v));
        acc = mul(acc, center_embed(bracket_of(prod)));
    }
    for (const auto& [v, k] : t.squares) {
        Multivector8 sq = mul(asg.at(v), asg.at(v));
        for (int i = 0; i < k; ++i)
            acc = mul(acc, sq);
    }
    return acc;
}

Multivector8 eval(const BracketPolynomial& p, const Assignment& asg) {
    Multivector8 acc;
    for (const auto& [shape, c] : p.term_map()) {
        BracketTerm t = shape;
        t.coeff = c;
        acc += eval(t, asg);
    }
    return acc;
}

namespace {

template <class Eval>
ZeroCheck run_zero_check(const VariableContext& ctx, int trials, unsigned long long seed, Eval&& value_is_zero) {
    AssignmentSampler sampler(ctx.alphabet_size(), seed);
    for (int t = 0; t < trials; ++t) {
        Assignment a = sampler.next();
        if (!value_is_zero(a))
            return ZeroCheck{false, std::move(a)};
    }
    return ZeroCheck{true, std::nullopt};
}

} // namespace

ZeroCheck check_zero(const Polynomial& p, const VariableContext& ctx, int trials, unsigned long long seed) {
    return run_zero_check(ctx, trials, seed, [&](const Assignment& a) { return eval(p, a).is_zero(); });
}

ZeroCheck check_zero(const BracketPolynomial& p, const VariableContext& ctx, int trials, unsigned long long seed) {
    return run_zero_check(ctx, trials, seed, [&](const Assignment& a) { return eval(p, a).is_zero(); });
}

ZeroCheck check_center_zero(const Polynomial& p, const VariableContext& ctx, int trials, unsigned long long seed) {
    return run_zero_check(ctx, trials, seed,
                          [&](const Assignment& a) { return bracket_of(eval(p, a)).is_zero(); });
}

namespace {

std::string state_key(const Polynomial& p) {
    std::ostringstream os;
    for (const auto& [m, c] : p.terms()) {
        for (VarId v : m.left)
            os << v << '.';
        os << '|';
        for (const auto& [v, k] : m.squares)
            os << v << '^' << k << '.';
        os << '=' << to_string(c) << ';';
    }
    return os.str();
}

} // namespace

ClosureResult brute_force_closure(const Monomial& mono, const RuleSet& rs, const VariableContext& ctx,
                                  ClosureCaps caps) {
    if (mono.degree() > caps.max_degree)
        throw ContextError("closure degree cap exceeded");
    if (ctx.alphabet_size() > caps.max_alphabet)
        throw ContextError("closure alphabet cap exceeded");

    Monomial start = mono;
    if (rs.kind == RingKind::SquareFree)
        fold_squares(start);

    std::map<std::string, Polynomial> seen;
    std::vector<const Polynomial*> queue;
    ClosureResult result{0, {}};

    Polynomial p0 = Polynomial::monomial(start);
    auto [it0, fresh0] = seen.emplace(state_key(p0), p0);
    (void)fresh0;
    queue.push_back(&it0->second);

    const bool fold = rs.kind == RingKind::SquareFree;
    while (!queue.empty()) {
        const Polynomial p = *queue.back();
        queue.pop_back();
        bool any = false;
        for (const auto& [m, c] : p.terms()) {
            for (std::size_t pos = 0; pos < m.left.size(); ++pos) {
                for (int len : rs.window_lengths()) {
                    if (pos + static_cast<std::size_t>(len) > m.left.size())
                        break;
                    Word window(m.left.begin() + static_cast<std::ptrdiff_t>(pos),
                                m.left.begin() + static_cast<std::ptrdiff_t>(pos) + len);
                    const RewriteRule* rule = rs.match_window(window);
                    if (!rule)
                        continue;
                    any = true;
                    Polynomial q = p;
                    q.add(m, -c);
                    for (const auto& [rm, rc] : rule->rhs.terms()) {
                        Monomial nm;
                        nm.left.assign(m.left.begin(), m.left.begin() + static_cast<std::ptrdiff_t>(pos));
                        nm.left.insert(nm.left.end(), rm.left.begin(), rm.left.end());
                        nm.left.insert(nm.left.end(), m.left.begin() + static_cast<std::ptrdiff_t>(pos) + len,
                                       m.left.end());
                        nm.squares = m.squares;
                        for (const auto& [v, k] : rm.squares)
                            nm.squares[v] += k;
                        if (fold)
                            fold_squares(nm);
                        q.add(nm, c * rc);
                    }
                    auto key = state_key(q);
                    auto [it, fresh] = seen.emplace(std::move(key), std::move(q));
                    if (fresh) {
                        if (seen.size() > caps.max_states)
                            throw ContextError("closure state cap exceeded");
                        queue.push_back(&it->second);
                    }
                }
            }
        }
        if (!any)
            result.fixed_points.push_back(p);
    }
    result.reachable = seen.size();
    return result;
}

namespace {

void enumerate_words(int n, int m, Word& cur, bool distinct, std::vector<Word>& out) {
    if (static_cast<int>(cur.size()) == m) {
        out.push_back(cur);
        return;
    }
    for (VarId v = 0; v < n; ++v) {
        if (distinct && std::find(cur.begin(), cur.end(), v) != cur.end())
            continue;
        cur.push_back(v);
        enumerate_words(n, m, cur, distinct, out);
        cur.pop_back();
    }
}

} // namespace

int exact_rank(std::vector<std::vector<Rational>> rows) {
    int rank = 0;
    if (rows.empty())
        return 0;
    std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            Rational f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

namespace {

// The raw syzygy generators of Eq. V2/V3/V4 as word polynomials. Chains with
// coinciding outer indices can collapse to zero and are dropped.
std::vector<Polynomial> raw_generators(RingKind kind, int n) {
    std::vector<Polynomial> gens;
    auto word_poly = [](std::initializer_list<Word> pos, std::initializer_list<Word> neg) {
        Polynomial p;
        for (const Word& w : pos)
            p.add(Monomial(w), 1);
        for (const Word& w : neg)
            p.add(Monomial(w), -1);
        return p;
    };
    bool multilinear = kind == RingKind::Multilinear;
    if (kind == RingKind::General) {
        for (VarId i = 0; i < n; ++i)
            for (VarId j = 0; j < n; ++j)
                if (i != j)
                    gens.push_back(word_poly({{i, i, j}}, {{j, i, i}}));
    }
    for (VarId i = 0; i < n; ++i)
        for (VarId j = 0; j < n; ++j)
            for (VarId k = 0; k < n; ++k) {
                if (i == j || j == k)
                    continue;
                if (multilinear && i == k)
                    continue;
                gens.push_back(word_poly({{i, j, k}, {j, i, k}}, {{k, i, j}, {k, j, i}}));
            }
    for (VarId i = 0; i < n; ++i)
        for (VarId j = 0; j < n; ++j)
            for (VarId k = 0; k < n; ++k)
                for (VarId l = 0; l < n; ++l) {
                    if (i == j || j == k || k == l)
                        continue;
                    if (multilinear && (i == k || i == l || j == l))
                        continue;
                    gens.push_back(word_poly({{i, j, k, l}, {l, k, j, i}}, {{k, j, i, l}, {l, i, j, k}}));
                }
    std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
    return gens;
}

} // namespace

std::vector<Monomial> enumerate_component(int m, RingKind kind, const VariableContext& ctx) {
    int n = ctx.alphabet_size();
    std::vector<Word> words;
    Word cur;
    if (kind == RingKind::Multilinear) {
        if (m > n)
            throw DomainError("multilinear degree exceeds the alphabet");
        enumerate_words(n, m, cur, true, words);
    } else {
        enumerate_words(n, m, cur, false, words);
    }
    std::vector<Monomial> out;
    std::set<Monomial, MonomialLess> dedupe;
    for (auto& w : words) {
        Monomial mono(std::move(w));
        if (kind == RingKind::SquareFree)
            fold_squares(mono);
        if (dedupe.insert(mono).second)
            out.push_back(mono);
    }
    return out;
}

int quotient_dimension(int m, RingKind kind, const VariableContext& ctx) {
    if (m > 5)
        throw ContextError("quotient dimension cap: m <= 5");
    if (m == 0)
        return 1;
    int n = ctx.alphabet_size();
    std::vector<Monomial> basis = enumerate_component(m, kind, ctx);
    std::map<Monomial, std::size_t, MonomialLess> index;
    for (std::size_t i = 0; i < basis.size(); ++i)
        index.emplace(basis[i], i);

    std::vector<std::vector<Rational>> rows;
    const bool fold = kind == RingKind::SquareFree;
    const bool distinct = kind == RingKind::Multilinear;
    for (const Polynomial& g : raw_generators(kind, n)) {
        int d = g.leading().first.degree();
        if (d > m)
            continue;
        std::vector<Word> lefts, rights;
        for (int a = 0; a + d <= m; ++a) {
            Word cur;
            lefts.clear();
            rights.clear();
            enumerate_words(n, a, cur, false, lefts);
            enumerate_words(n, m - d - a, cur, false, rights);
            for (const Word& l : lefts)
                for (const Word& r : rights) {
                    std::vector<Rational> row(basis.size(), Rational(0));
                    bool ok = true;
                    for (const auto& [gm, gc] : g.terms()) {
                        Monomial full;
                        full.left = l;
                        full.left.insert(full.left.end(), gm.left.begin(), gm.left.end());
                        full.left.insert(full.left.end(), r.begin(), r.end());
                        if (distinct) {
                            std::set<VarId> s(full.left.begin(), full.left.end());
                            if (s.size() != full.left.size()) {
                                ok = false;
                                break;
                            }
                        }
                        if (fold)
                            fold_squares(full);
                        row[index.at(full)] += gc;
                    }
                    if (ok && std::any_of(row.begin(), row.end(), [](const Rational& x) { return x != 0; }))
                        rows.push_back(std::move(row));
                }
        }
    }
    return static_cast<int>(basis.size()) - exact_rank(std::move(rows));
}

} // namespace cliffbrack
