#include "cliffbrack/unibracket.hpp"

#include "cliffbrack/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cliffbrack {

namespace {

void check_degree_m(const Polynomial& p, const VariableContext& ctx) {
    int m = ctx.total_multiplicity();
    for (const auto& [mono, c] : p.terms()) {
        (void)c;
        if (mono.degree() != m)
            throw DomainError("uni-bracket term has degree " + std::to_string(mono.degree()) +
                              ", expected " + std::to_string(m));
        std::vector<int> count(static_cast<std::size_t>(ctx.alphabet_size()), 0);
        for (VarId v : mono.left)
            count[static_cast<std::size_t>(v)] += 1;
        for (const auto& [v, k] : mono.squares)
            count[static_cast<std::size_t>(v)] += 2 * k;
        for (int v = 0; v < ctx.alphabet_size(); ++v)
            if (count[static_cast<std::size_t>(v)] > ctx.multiplicity(v))
                throw DomainError("term exceeds the multiplicity of " + ctx.name(v));
    }
}

struct Block {
    Word y;
    VarId z;
};

// Greedy decomposition of the part after the leading b1 into [Y z] blocks:
// Y a non-empty ascending run avoiding b1, then z = b1 or z < Y[0].
// Returns nothing when the word is no leader (trailing Y, or a block whose
// terminator is >= its leading variable).
std::optional<std::vector<Block>> parse_blocks(const Word& rest, VarId b1) {
    std::vector<Block> blocks;
    Word y;
    for (VarId x : rest) {
        if (y.empty()) {
            if (x == b1)
                return std::nullopt;
            y.push_back(x);
            continue;
        }
        if (x != b1 && x > y.back()) {
            y.push_back(x);
            continue;
        }
        if (x == b1 || x < y.front()) {
            blocks.push_back(Block{std::move(y), x});
            y.clear();
            continue;
        }
        return std::nullopt; // y.front() <= x <= y.back(): normal form shape
    }
    if (!y.empty())
        return std::nullopt; // trailing Y
    return blocks;
}

BracketTerm base_term(Word bare, std::vector<BracketFactor> factors, SquarePart squares, Rational coeff = 1) {
    BracketTerm t;
    t.coeff = std::move(coeff);
    t.bare = std::move(bare);
    t.factors = std::move(factors);
    t.squares = std::move(squares);
    return t;
}

// Builds the base element led by the given G-irreducible monomial, or
// nothing when the monomial is a normal-form monomial.
std::optional<UniBaseElement> match_element(const Monomial& m, RFamilyVariant variant) {
    const Word& L = m.left;
    if (L.empty())
        return std::nullopt; // pure squares
    VarId b1 = *std::min_element(L.begin(), L.end());

    if (L.front() != b1) {
        // S1: A b1 B - b1 B A, A the (ascending) prefix before the first b1
        auto p = static_cast<std::size_t>(std::find(L.begin(), L.end(), b1) - L.begin());
        Word A(L.begin(), L.begin() + static_cast<std::ptrdiff_t>(p));
        Word B(L.begin() + static_cast<std::ptrdiff_t>(p) + 1, L.end());
        for (std::size_t i = 0; i + 1 < A.size(); ++i)
            if (A[i] >= A[i + 1])
                throw InternalError("S1 prefix is not ascending; vector-variable base incomplete");
        Word shifted{b1};
        shifted.insert(shifted.end(), B.begin(), B.end());
        shifted.insert(shifted.end(), A.begin(), A.end());
        BracketPolynomial e;
        e.add(base_term(L, {}, m.squares));
        e.add(base_term(std::move(shifted), {}, m.squares, -1));
        return UniBaseElement{"S1", std::move(e), m};
    }

    if (L.size() == 1) {
        BracketPolynomial e;
        e.add(base_term(L, {}, m.squares));
        return UniBaseElement{"R1[0,0]", std::move(e), m};
    }

    auto blocks = parse_blocks(Word(L.begin() + 1, L.end()), b1);
    if (!blocks)
        return std::nullopt;
    std::size_t j = 0;
    while (j < blocks->size() && (*blocks)[j].z == b1)
        ++j;
    for (std::size_t i = j; i < blocks->size(); ++i)
        if ((*blocks)[i].z == b1)
            throw InternalError("b1-terminated block after a z-block; vector-variable base incomplete");
    std::size_t l = blocks->size() - j;

    auto factor_of = [](const Block& b) {
        Word w = b.y;
        w.push_back(b.z);
        return BracketFactor{std::move(w)};
    };

    BracketPolynomial e;
    std::string family;
    if (variant == RFamilyVariant::Theorem || j == 0) {
        std::vector<BracketFactor> factors;
        for (const auto& b : *blocks)
            factors.push_back(factor_of(b));
        e.add(base_term({b1}, std::move(factors), m.squares));
        if (variant == RFamilyVariant::Theorem) {
            family = "R1[" + std::to_string(j) + "," + std::to_string(l) + "]";
        } else {
            // second-lowest variable of the left part names the R12 split
            VarId b2 = -1;
            for (VarId v : L)
                if (v != b1 && (b2 < 0 || v < b2))
                    b2 = v;
            std::size_t j2 = 0;
            while (j2 < blocks->size() && (*blocks)[j2].z == b2)
                ++j2;
            family = "R12[" + std::to_string(j2) + "," + std::to_string(blocks->size() - j2) + "]";
        }
    } else {
        // Sq1[j,l]: (b1 Y1 b1 - Y1 [] b1^2) [Y2 b1] ... [Yj b1] [.. z ..] ...
        std::vector<BracketFactor> factors;
        for (std::size_t i = 1; i < blocks->size(); ++i)
            factors.push_back(factor_of((*blocks)[i]));
        const Word& y1 = (*blocks)[0].y;
        Word head{b1};
        head.insert(head.end(), y1.begin(), y1.end());
        head.push_back(b1);
        e.add(base_term(std::move(head), factors, m.squares));
        SquarePart sq = m.squares;
        sq[b1] += 1;
        e.add(base_term(y1, std::move(factors), std::move(sq), -1));
        family = "Sq1[" + std::to_string(j) + "," + std::to_string(l) + "]";
    }
    return UniBaseElement{std::move(family), std::move(e), m};
}

} // namespace

UniBracketPolynomial to_unibracket(const BracketPolynomial& p, const VariableContext& ctx) {
    Polynomial rep = expand_to_vv(p, /*fold=*/true);
    check_degree_m(rep, ctx);
    return UniBracketPolynomial{std::move(rep)};
}

UniGroebnerBase generate_BG(const VariableContext& ctx, RFamilyVariant variant) {
    if (ctx.total_multiplicity() < 3)
        throw DomainError("uni-bracket base needs m >= 3");
    UniGroebnerBase base;
    base.ctx = ctx;
    base.vv_rules = generate_squarefree(ctx);
    base.variant = variant;
    for (const Monomial& m : enumerate_exact_multiset(ctx)) {
        if (reducible(m.left, base.vv_rules))
            continue;
        if (auto el = match_element(m, variant))
            base.elements.push_back(std::move(*el));
    }
    return base;
}

UniBracketPolynomial unibracket_normal_form(const UniBracketPolynomial& p, const VariableContext& ctx,
                                            RFamilyVariant variant, long fuel) {
    if (ctx.total_multiplicity() < 3)
        throw DomainError("uni-bracket normal form needs m >= 3");
    if (fuel < 0)
        fuel = default_fuel();
    check_degree_m(p.rep, ctx);
    RuleSet rs = generate_squarefree(ctx);
    Polynomial work = migrate_squares(p.rep);
    std::set<Monomial, MonomialLess> normal;
    long steps = 0;
    for (;;) {
        work = reduce(work, rs, ctx, fuel);
        const Monomial* hit = nullptr;
        std::optional<UniBaseElement> el;
        for (auto it = work.terms().rbegin(); it != work.terms().rend(); ++it) {
            if (normal.count(it->first))
                continue;
            el = match_element(it->first, variant);
            if (el) {
                hit = &it->first;
                break;
            }
            normal.insert(it->first);
        }
        if (!hit)
            return UniBracketPolynomial{std::move(work)};
        if (++steps > fuel)
            throw InternalError("uni-bracket reduction fuel exhausted");
        Polynomial expanded = expand_to_vv(el->element, /*fold=*/true);
        const auto& [lm, lc] = expanded.leading();
        if (!(lm == *hit))
            throw InternalError("base element leader does not match its monomial");
        Rational coeff = work.terms().at(*hit);
        work += expanded * (-coeff / lc);
    }
}

bool is_unibracket_normal(const Monomial& m, const VariableContext& ctx) {
    Monomial folded = migrate_squares(m);
    RuleSet rs = generate_squarefree(ctx);
    if (reducible(folded.left, rs))
        return false;
    return !match_element(folded, RFamilyVariant::Remark).has_value();
}

std::vector<Monomial> enumerate_exact_multiset(const VariableContext& ctx) {
    std::vector<int> remaining = ctx.multiset();
    int m = ctx.total_multiplicity();
    std::vector<Monomial> out;
    std::set<Monomial, MonomialLess> seen;
    Word cur;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == m) {
            Monomial mono(cur);
            fold_squares(mono);
            if (seen.insert(mono).second)
                out.push_back(mono);
            return;
        }
        for (VarId v = 0; v < ctx.alphabet_size(); ++v) {
            if (remaining[static_cast<std::size_t>(v)] == 0)
                continue;
            remaining[static_cast<std::size_t>(v)] -= 1;
            cur.push_back(v);
            rec();
            cur.pop_back();
            remaining[static_cast<std::size_t>(v)] += 1;
        }
    };
    rec();
    return out;
}

int unibracket_quotient_dimension(const VariableContext& ctx) {
    int m = ctx.total_multiplicity();
    if (m > 6)
        throw ContextError("uni-bracket dimension cap: m <= 6");
    int n = ctx.alphabet_size();
    std::vector<Monomial> basis = enumerate_exact_multiset(ctx);
    std::map<Monomial, std::size_t, MonomialLess> index;
    for (std::size_t i = 0; i < basis.size(); ++i)
        index.emplace(basis[i], i);
    std::vector<std::vector<Rational>> rows;

    // removal ideal: A [] s - (-1)^a A-dagger [] s
    for (const Monomial& b : basis) {
        if (b.left.empty())
            continue;
        std::vector<Rational> row(basis.size(), Rational(0));
        row[index.at(b)] += 1;
        Monomial rev(reversion(b.left), b.squares);
        Rational sign = (b.left.size() % 2 == 0) ? 1 : -1;
        row[index.at(rev)] -= sign;
        if (std::any_of(row.begin(), row.end(), [](const Rational& x) { return x != 0; }))
            rows.push_back(std::move(row));
    }

    // V3/V4 instances embedded with multiset exactly M
    std::vector<Polynomial> gens;
    for (VarId i = 0; i < n; ++i)
        for (VarId j = 0; j < n; ++j)
            for (VarId k = 0; k < n; ++k) {
                if (i == j || j == k)
                    continue;
                Polynomial g;
                g.add(Monomial({i, j, k}), 1);
                g.add(Monomial({j, i, k}), 1);
                g.add(Monomial({k, i, j}), -1);
                g.add(Monomial({k, j, i}), -1);
                gens.push_back(std::move(g));
            }
    for (VarId i = 0; i < n; ++i)
        for (VarId j = 0; j < n; ++j)
            for (VarId k = 0; k < n; ++k)
                for (VarId l = 0; l < n; ++l) {
                    if (i == j || j == k || k == l)
                        continue;
                    Polynomial g;
                    g.add(Monomial({i, j, k, l}), 1);
                    g.add(Monomial({l, k, j, i}), 1);
                    g.add(Monomial({k, j, i, l}), -1);
                    g.add(Monomial({l, i, j, k}), -1);
                    gens.push_back(std::move(g));
                }
    std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });

    std::vector<int> mult = ctx.multiset();
    for (const Polynomial& g : gens) {
        int d = g.leading().first.degree();
        if (d > m)
            continue;
        // multiset left over for the l/r embedding
        std::vector<int> rem = mult;
        bool feasible = true;
        for (VarId v : g.leading().first.left) {
            if (rem[static_cast<std::size_t>(v)] == 0) {
                feasible = false;
                break;
            }
            rem[static_cast<std::size_t>(v)] -= 1;
        }
        if (!feasible)
            continue;
        // enumerate words l of every length a, r of length m-d-a from rem
        std::function<void(Word&, std::vector<int>&, int, std::vector<Word>&)> words =
            [&](Word& cur, std::vector<int>& pool, int len, std::vector<Word>& out) {
                if (static_cast<int>(cur.size()) == len) {
                    out.push_back(cur);
                    return;
                }
                for (VarId v = 0; v < n; ++v) {
                    if (pool[static_cast<std::size_t>(v)] == 0)
                        continue;
                    pool[static_cast<std::size_t>(v)] -= 1;
                    cur.push_back(v);
                    words(cur, pool, len, out);
                    cur.pop_back();
                    pool[static_cast<std::size_t>(v)] += 1;
                }
            };
        for (int a = 0; a + d <= m; ++a) {
            std::vector<Word> lefts;
            Word cur;
            words(cur, rem, a, lefts);
            for (const Word& lft : lefts) {
                std::vector<int> pool = rem;
                for (VarId v : lft)
                    pool[static_cast<std::size_t>(v)] -= 1;
                std::vector<Word> rights;
                Word cur2;
                words(cur2, pool, m - d - a, rights);
                for (const Word& rgt : rights) {
                    std::vector<Rational> row(basis.size(), Rational(0));
                    for (const auto& [gm, gc] : g.terms()) {
                        Monomial full;
                        full.left = lft;
                        full.left.insert(full.left.end(), gm.left.begin(), gm.left.end());
                        full.left.insert(full.left.end(), rgt.begin(), rgt.end());
                        fold_squares(full);
                        row[index.at(full)] += gc;
                    }
                    if (std::any_of(row.begin(), row.end(), [](const Rational& x) { return x != 0; }))
                        rows.push_back(std::move(row));
                }
            }
        }
    }
    return static_cast<int>(basis.size()) - exact_rank(std::move(rows));
}

} // namespace cliffbrack
