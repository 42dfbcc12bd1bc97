#include "cliffbrack/gbasis.hpp"

#include "cliffbrack/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

namespace cliffbrack {

std::string to_string(RingKind k) {
    switch (k) {
    case RingKind::Multilinear: return "multilinear";
    case RingKind::General: return "general";
    case RingKind::SquareFree: return "squarefree";
    }
    return "?";
}

std::optional<RingKind> ring_kind_from_string(const std::string& s) {
    if (s == "multilinear") return RingKind::Multilinear;
    if (s == "general") return RingKind::General;
    if (s == "squarefree") return RingKind::SquareFree;
    return std::nullopt;
}

void RuleSet::add(RewriteRule r) {
    auto [it, fresh] = by_lhs_.emplace(r.lhs, size());
    (void)it;
    if (!fresh)
        throw InternalError("duplicate rule leader");
    if (std::find(lengths_.begin(), lengths_.end(), static_cast<int>(r.lhs.size())) == lengths_.end()) {
        lengths_.push_back(static_cast<int>(r.lhs.size()));
        std::sort(lengths_.begin(), lengths_.end());
    }
    rules_.push_back(std::move(r));
}

const RewriteRule* RuleSet::match_window(const Word& w) const {
    auto it = by_lhs_.find(w);
    return it == by_lhs_.end() ? nullptr : &rules_[static_cast<std::size_t>(it->second)];
}

Polynomial bracket_binomial(const Word& w) {
    Polynomial p = Polynomial::word(w);
    Rational sign = (w.size() % 2 == 0) ? 1 : -1;
    p.add(Monomial(reversion(w)), sign);
    return p;
}

namespace {

// Expands [A] - [B] by definition and solves the equation for its leader.
RewriteRule rule_from_bracket_binomial(const Word& A, const Word& B, std::string family) {
    Polynomial e = bracket_binomial(A) - bracket_binomial(B); // twice the binomial; scale is irrelevant
    const auto& [lm, lc] = e.leading();
    Polynomial rhs = Polynomial::monomial(lm) - e * (Rational(1) / lc);
    return RewriteRule{lm.left, std::move(rhs), std::move(family)};
}

void check_well_founded(const RewriteRule& r) {
    Monomial lhs{r.lhs};
    for (const auto& [m, c] : r.rhs.terms()) {
        (void)c;
        if (compare_canonical(m, lhs) >= 0)
            throw InternalError("rule " + r.family + " is not order-decreasing");
    }
}

void add_checked(RuleSet& rs, RewriteRule r) {
    check_well_founded(r);
    rs.add(std::move(r));
}

// All non-descending sequences of a given length over ranks [lo, n).
void nondescending_runs(int lo, int n, int len, Word& cur, const std::function<void(const Word&)>& emit) {
    if (len == 0) {
        emit(cur);
        return;
    }
    int start = cur.empty() ? lo : cur.back();
    for (int v = start; v < n; ++v) {
        cur.push_back(v);
        nondescending_runs(lo, n, len - 1, cur, emit);
        cur.pop_back();
    }
}

void add_g3(RuleSet& rs, int u, int v, int w) {
    // [w v u] - [u w v] and [w u v] - [v w u], for u < v < w
    add_checked(rs, rule_from_bracket_binomial({w, v, u}, {u, w, v}, "G3"));
    add_checked(rs, rule_from_bracket_binomial({w, u, v}, {v, w, u}, "G3"));
}

void add_gj(RuleSet& rs, int x1, int x2, const Word& tail) {
    // leader x3 x2 x4 ... xj x1 with tail = (x3, x4, ..., xj)
    int j = static_cast<int>(tail.size()) + 2;
    Word A{tail.front(), x2};
    A.insert(A.end(), tail.begin() + 1, tail.end());
    A.push_back(x1);
    Word B{x2};
    B.insert(B.end(), tail.begin() + 1, tail.end());
    B.push_back(x1);
    B.push_back(tail.front());
    add_checked(rs, rule_from_bracket_binomial(A, B, "G" + std::to_string(j)));
}

void add_egj(RuleSet& rs, int x1, int x2, int x3, const Word& tail) {
    // leader x3 x2 x3 x4 ... xj x1 with tail = (x4, ..., xj), possibly empty
    int j = static_cast<int>(tail.size()) + 3;
    Word A{x3, x2, x3};
    A.insert(A.end(), tail.begin(), tail.end());
    A.push_back(x1);
    Word B{x2, x3};
    B.insert(B.end(), tail.begin(), tail.end());
    B.push_back(x1);
    B.push_back(x3);
    add_checked(rs, rule_from_bracket_binomial(A, B, "EG" + std::to_string(j)));
}

} // namespace

RuleSet generate_multilinear(const VariableContext& ctx) {
    int n = ctx.alphabet_size();
    if (n < 3)
        throw DomainError("multilinear ring needs n >= 3 variables");
    RuleSet rs;
    rs.kind = RingKind::Multilinear;
    // all strictly ascending tuples x1 < x2 < ... < xj, 3 <= j <= n
    std::vector<int> tuple;
    std::function<void(int, int)> rec = [&](int next, int want) {
        if (static_cast<int>(tuple.size()) == want) {
            if (want == 3)
                add_g3(rs, tuple[0], tuple[1], tuple[2]);
            else
                add_gj(rs, tuple[0], tuple[1], Word(tuple.begin() + 2, tuple.end()));
            return;
        }
        for (int v = next; v < n; ++v) {
            tuple.push_back(v);
            rec(v + 1, want);
            tuple.pop_back();
        }
    };
    for (int j = 3; j <= n; ++j)
        rec(0, j);
    return rs;
}

RuleSet generate_general(const VariableContext& ctx) {
    int n = ctx.alphabet_size();
    if (n < 2)
        throw DomainError("general ring needs n >= 2 variables");
    int m = std::max(3, ctx.total_multiplicity());
    RuleSet rs;
    rs.kind = RingKind::General;
    // EG2: v v u -> u v v and v u u -> u u v
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            add_checked(rs, RewriteRule{{v, v, u}, Polynomial::word({u, v, v}), "EG2"});
            add_checked(rs, RewriteRule{{v, u, u}, Polynomial::word({u, u, v}), "EG2"});
        }
    for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = x1 + 1; x2 < n; ++x2)
            for (int x3 = x2 + 1; x3 < n; ++x3) {
                add_g3(rs, x1, x2, x3);
                // G j: tail (x3 < x4 <= x5 <= ... <= x_{j-1} < xj), window length j <= m
                for (int len = 2; len + 2 <= m; ++len) {
                    Word cur;
                    nondescending_runs(x3 + 1, n, len - 1, cur, [&](const Word& run) {
                        Word tail{x3};
                        tail.insert(tail.end(), run.begin(), run.end());
                        // last step strict
                        if (run.size() >= 2 && run[run.size() - 2] == run.back())
                            return;
                        add_gj(rs, x1, x2, tail);
                    });
                }
                // EG j: x3 <= x4 <= ... <= x_{j-1} < xj, window length j + 1 <= m
                add_egj(rs, x1, x2, x3, {}); // EG3
                for (int len = 1; len + 4 <= m; ++len) {
                    Word cur;
                    nondescending_runs(x3, n, len, cur, [&](const Word& run) {
                        if (run.size() >= 2 && run[run.size() - 2] == run.back())
                            return;
                        if (run.size() == 1 && run[0] == x3)
                            return; // x_{j-1} < x_j needs a strict last step
                        add_egj(rs, x1, x2, x3, run);
                    });
                }
            }
    return rs;
}

RuleSet generate_squarefree(const VariableContext& ctx) {
    int n = ctx.alphabet_size();
    if (n < 2)
        throw DomainError("square-free ring needs n >= 2 variables");
    RuleSet rs;
    rs.kind = RingKind::SquareFree;
    // adjacent equal pairs are central squares
    for (int v = 0; v < n; ++v)
        rs.add(RewriteRule{{v, v}, Polynomial::monomial(Monomial({}, {{v, 1}})), "fold"});
    std::vector<int> tuple;
    std::function<void(int, int, bool)> rec = [&](int next, int want, bool eg) {
        if (static_cast<int>(tuple.size()) == want) {
            if (eg)
                add_egj(rs, tuple[0], tuple[1], tuple[2], Word(tuple.begin() + 3, tuple.end()));
            else if (want == 3)
                add_g3(rs, tuple[0], tuple[1], tuple[2]);
            else
                add_gj(rs, tuple[0], tuple[1], Word(tuple.begin() + 2, tuple.end()));
            return;
        }
        for (int v = next; v < n; ++v) {
            tuple.push_back(v);
            rec(v + 1, want, eg);
            tuple.pop_back();
        }
    };
    for (int j = 3; j <= n; ++j)
        rec(0, j, false); // G3 and Gj, 3 < j < n+1
    for (int k = 3; k <= n; ++k)
        rec(0, k, true); // EGk, 3 <= k <= n+1; strict indices leave EG(n+1) empty
    return rs;
}

RuleSet generate_rules(RingKind kind, const VariableContext& ctx) {
    switch (kind) {
    case RingKind::Multilinear: return generate_multilinear(ctx);
    case RingKind::General: return generate_general(ctx);
    case RingKind::SquareFree: return generate_squarefree(ctx);
    }
    throw DomainError("unknown ring kind");
}

long default_fuel() {
    if (const char* env = std::getenv("CLIFFORD_BRACKET_FUEL")) {
        long v = std::atol(env);
        if (v > 0)
            return v;
    }
    return 1000000L;
}

namespace {

struct WindowMatch {
    std::size_t pos;
    const RewriteRule* rule;
};

// Leftmost window, shortest rule first; families never share a leader word.
std::optional<WindowMatch> find_match(const Word& w, const RuleSet& rs) {
    Word scratch;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        for (int len : rs.window_lengths()) {
            if (pos + static_cast<std::size_t>(len) > w.size())
                break;
            scratch.assign(w.begin() + static_cast<std::ptrdiff_t>(pos),
                           w.begin() + static_cast<std::ptrdiff_t>(pos) + len);
            if (const RewriteRule* r = rs.match_window(scratch))
                return WindowMatch{pos, r};
        }
    }
    return std::nullopt;
}

} // namespace

bool reducible(const Word& w, const RuleSet& rs) {
    return find_match(w, rs).has_value();
}

Polynomial reduce(const Polynomial& p, const RuleSet& rs, const VariableContext& ctx, long fuel) {
    if (fuel < 0)
        fuel = default_fuel();
    const bool fold = rs.kind == RingKind::SquareFree;
    Polynomial work = fold ? migrate_squares(p) : p;
    for (const auto& [m, c] : work.terms()) {
        (void)c;
        if (!m.left.empty() && (*std::max_element(m.left.begin(), m.left.end()) >= ctx.alphabet_size()))
            throw ContextError("monomial uses a variable outside the context");
    }

    std::set<Word> irreducible;
    long steps = 0;
    for (;;) {
        const Monomial* target = nullptr;
        std::optional<WindowMatch> match;
        for (auto it = work.terms().rbegin(); it != work.terms().rend(); ++it) {
            if (irreducible.count(it->first.left))
                continue;
            match = find_match(it->first.left, rs);
            if (match) {
                target = &it->first;
                break;
            }
            irreducible.insert(it->first.left);
        }
        if (!target)
            return work;
        if (++steps > fuel)
            throw InternalError("reduction fuel exhausted (" + std::to_string(fuel) + " steps)");

        Monomial head = *target;
        Rational coeff = work.terms().at(head);
        const auto& rule = *match->rule;
        Word prefix(head.left.begin(), head.left.begin() + static_cast<std::ptrdiff_t>(match->pos));
        Word suffix(head.left.begin() + static_cast<std::ptrdiff_t>(match->pos) + static_cast<std::ptrdiff_t>(rule.lhs.size()),
                    head.left.end());
        work.add(head, -coeff);
        for (const auto& [rm, rc] : rule.rhs.terms()) {
            Monomial nm;
            nm.left = prefix;
            nm.left.insert(nm.left.end(), rm.left.begin(), rm.left.end());
            nm.left.insert(nm.left.end(), suffix.begin(), suffix.end());
            nm.squares = head.squares;
            for (const auto& [v, k] : rm.squares)
                nm.squares[v] += k;
            if (fold)
                fold_squares(nm);
            work.add(nm, coeff * rc);
        }
    }
}

Monomial migrate_squares(Monomial m) {
    fold_squares(m);
    return m;
}

Polynomial migrate_squares(const Polynomial& p) {
    Polynomial q = p;
    q.fold();
    return q;
}

namespace {

bool nondescending(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1])
            return false;
    return true;
}

// Split into maximal strictly ascending runs; returns run boundaries.
std::vector<Word> ascending_runs(const Word& w) {
    std::vector<Word> runs;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (runs.empty() || w[i] <= runs.back().back())
            runs.push_back({w[i]});
        else
            runs.back().push_back(w[i]);
    }
    return runs;
}

// Shared shape check for the multilinear and square-free rings:
// Y1 z1 Y2 z2 ... Yk zk (Y_{k+1}), Y_i ascending runs, z_i the run-leading
// descent letters. strict_chains selects ascending (multilinear) versus
// non-descending (square-free) comparisons for the z and Y chains.
bool run_shape_normal(const Word& w, bool strict_chains) {
    if (w.empty())
        return true;
    auto runs = ascending_runs(w);
    if (runs.size() == 1)
        return true; // trailing-Y form
    Word zs;
    std::vector<Word> ys;
    ys.push_back(runs[0]);
    for (std::size_t i = 1; i < runs.size(); ++i) {
        zs.push_back(runs[i][0]);
        Word y(runs[i].begin() + 1, runs[i].end());
        bool last = i + 1 == runs.size();
        if (y.empty() && !last)
            return false; // middle Y_i must be non-empty
        if (!y.empty())
            ys.push_back(std::move(y));
    }
    for (std::size_t i = 0; i + 1 < zs.size(); ++i)
        if (strict_chains ? zs[i] >= zs[i + 1] : zs[i] > zs[i + 1])
            return false;
    for (std::size_t i = 0; i + 1 < ys.size(); ++i)
        if (strict_chains ? ys[i].back() >= ys[i + 1].front() : ys[i].back() > ys[i + 1].front())
            return false;
    return true;
}

bool general_shape_normal(const Word& w) {
    if (w.size() < 2)
        return true;
    std::vector<bool> is_z(w.size(), false);
    for (std::size_t p = 1; p < w.size(); ++p) {
        if (w[p] < w[p - 1]) {
            if (is_z[p - 1])
                return false; // an h position cannot itself be a z
            is_z[p] = true;
        }
    }
    Word spine, zs;
    for (std::size_t p = 0; p < w.size(); ++p)
        (is_z[p] ? zs : spine).push_back(w[p]);
    if (!nondescending(spine) || !nondescending(zs))
        return false;
    // h_i must strictly exceed the trailing variable of a non-empty Y_i
    for (std::size_t p = 1; p < w.size(); ++p) {
        if (!is_z[p])
            continue;
        std::size_t h = p - 1;
        if (h >= 1 && !is_z[h - 1] && !(w[h - 1] < w[h]))
            return false;
    }
    return true;
}

} // namespace

bool is_normal_shape(const Monomial& m, RingKind kind, const VariableContext& ctx) {
    (void)ctx;
    switch (kind) {
    case RingKind::Multilinear: {
        if (!m.squares.empty())
            throw DomainError("multilinear monomials carry no squares");
        std::set<VarId> seen(m.left.begin(), m.left.end());
        if (seen.size() != m.left.size())
            throw DomainError("multilinear monomials have distinct variables");
        return run_shape_normal(m.left, true);
    }
    case RingKind::General:
        if (!m.squares.empty())
            throw DomainError("general-ring monomials keep squares explicit");
        return general_shape_normal(m.left);
    case RingKind::SquareFree:
        if (has_adjacent_pair(m.left))
            return false; // foldable, hence reducible
        return run_shape_normal(m.left, false);
    }
    return false;
}

} // namespace cliffbrack
