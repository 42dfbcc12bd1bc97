#include "cliffbrack/gbasis.hpp"

#include "cliffbrack/error.hpp"
#include "cliffbrack/oracle.hpp"
#include "cliffbrack/parser.hpp"

#include <doctest.h>

#include <random>

using namespace cliffbrack;

namespace {

VariableContext ctxn(int n, int total = -1) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        names.push_back("v" + std::to_string(i));
    auto ctx = VariableContext::make(names);
    if (total > n)
        ctx.set_multiplicity(0, total - n + 1);
    return ctx;
}

const RewriteRule* find_rule(const RuleSet& rs, const Word& lhs) {
    return rs.match_window(lhs);
}

Polynomial words(std::initializer_list<std::pair<Word, int>> terms) {
    Polynomial p;
    for (const auto& [w, c] : terms)
        p.add(Monomial(w), c);
    return p;
}

} // namespace

TEST_CASE("G3 rules expand as the bracket binomials dictate") {
    auto ctx = ctxn(3);
    RuleSet rs = generate_multilinear(ctx);
    // v3 v2 v1 -> v1 v2 v3 + v1 v3 v2 - v2 v3 v1
    const RewriteRule* r = find_rule(rs, {2, 1, 0});
    REQUIRE(r);
    CHECK(r->family == "G3");
    CHECK(r->rhs == words({{{0, 1, 2}, 1}, {{0, 2, 1}, 1}, {{1, 2, 0}, -1}}));
    // and the second G3 form: v3 v1 v2 -> v2 v1 v3 + v2 v3 v1 - v1 v3 v2
    const RewriteRule* r2 = find_rule(rs, {2, 0, 1});
    REQUIRE(r2);
    CHECK(r2->rhs == words({{{1, 0, 2}, 1}, {{1, 2, 0}, 1}, {{0, 2, 1}, -1}}));
    // n=3 has G3 rules only
    for (const auto& rule : rs.rules())
        CHECK(rule.family == "G3");
    CHECK(rs.size() == 2);
    CHECK_THROWS_AS(generate_multilinear(ctxn(2)), DomainError);
}

TEST_CASE("multilinear n=4 adds the G4 family") {
    auto ctx = ctxn(4);
    RuleSet rs = generate_multilinear(ctx);
    int g3 = 0, g4 = 0;
    for (const auto& rule : rs.rules()) {
        if (rule.family == "G3")
            ++g3;
        else if (rule.family == "G4")
            ++g4;
        else
            FAIL("unexpected family");
    }
    CHECK(g3 == 8);  // 2 per ascending triple, C(4,3)=4
    CHECK(g4 == 1);  // one ascending quadruple
    // G4 leader v3 v2 v4 v1
    CHECK(find_rule(rs, {2, 1, 3, 0}));
}

TEST_CASE("general ring: EG2 and EG3 as printed") {
    auto ctx = ctxn(3, 5);
    RuleSet rs = generate_general(ctx);
    const RewriteRule* a = find_rule(rs, {1, 1, 0});
    REQUIRE(a);
    CHECK(a->family == "EG2");
    CHECK(a->rhs == words({{{0, 1, 1}, 1}}));
    const RewriteRule* b = find_rule(rs, {1, 0, 0});
    REQUIRE(b);
    CHECK(b->rhs == words({{{0, 0, 1}, 1}}));
    // EG3 leader v3 v2 v3 v1
    const RewriteRule* e = find_rule(rs, {2, 1, 2, 0});
    REQUIRE(e);
    CHECK(e->family == "EG3");

    // n=2 has EG2 rules only
    RuleSet rs2 = generate_general(ctxn(2, 4));
    for (const auto& rule : rs2.rules())
        CHECK(rule.family == "EG2");
    CHECK(rs2.size() == 2);
}

TEST_CASE("square-free ring: fold plus G3/EG3 at n=3") {
    auto ctx = ctxn(3, 6);
    RuleSet rs = generate_squarefree(ctx);
    int fold = 0, g3 = 0, eg3 = 0, other = 0;
    for (const auto& rule : rs.rules()) {
        if (rule.family == "fold")
            ++fold;
        else if (rule.family == "G3")
            ++g3;
        else if (rule.family == "EG3")
            ++eg3;
        else
            ++other;
    }
    CHECK(fold == 3);
    CHECK(g3 == 2);
    CHECK(eg3 == 1);
    CHECK(other == 0); // G4/EG4 need 4 distinct variables

    // v1 v1 v2 -> v2 [] v1^2
    Polynomial p = reduce(Polynomial::word({0, 0, 1}), rs, ctx);
    Polynomial expected = Polynomial::monomial(Monomial({1}, {{0, 1}}));
    CHECK(p == expected);
}

TEST_CASE("every generated rule is sound and order-decreasing") {
    std::vector<std::pair<RingKind, VariableContext>> cases = {
        {RingKind::Multilinear, ctxn(4)},
        {RingKind::Multilinear, ctxn(5)},
        {RingKind::General, ctxn(3, 6)},
        {RingKind::General, ctxn(4, 6)},
        {RingKind::SquareFree, ctxn(4, 6)},
    };
    for (auto& [kind, ctx] : cases) {
        RuleSet rs = generate_rules(kind, ctx);
        for (const auto& r : rs.rules()) {
            Polynomial diff = Polynomial::word(r.lhs) - r.rhs;
            CHECK(check_zero(diff, ctx, 12, 17).zero);
            for (const auto& [m, c] : r.rhs.terms()) {
                (void)c;
                CHECK(compare_canonical(m, Monomial(r.lhs)) <= 0);
            }
        }
    }
}

TEST_CASE("reduce: closed formula at m=3 and fixed points") {
    auto ctx = ctxn(3);
    RuleSet rs = generate_multilinear(ctx);
    // expansion of 2[v1v2v3] = v1v2v3 - v3v2v1 reduces to v2v3v1 - v1v3v2
    Polynomial in = words({{{0, 1, 2}, 1}, {{2, 1, 0}, -1}});
    Polynomial out = reduce(in, rs, ctx);
    CHECK(out == words({{{1, 2, 0}, 1}, {{0, 2, 1}, -1}}));
    // ascending monomial is already normal
    Polynomial asc = Polynomial::word({0, 1, 2});
    CHECK(reduce(asc, rs, ctx) == asc);
    // single G3 step
    CHECK(reduce(Polynomial::word({2, 1, 0}), rs, ctx) ==
          words({{{0, 1, 2}, 1}, {{0, 2, 1}, 1}, {{1, 2, 0}, -1}}));
    // idempotence
    CHECK(reduce(out, rs, ctx) == out);
}

TEST_CASE("value preservation and idempotence on random polynomials") {
    std::mt19937 rng(2024);
    auto ctx = ctxn(3, 5);
    for (RingKind kind : {RingKind::General, RingKind::SquareFree}) {
        RuleSet rs = generate_rules(kind, ctx);
        for (int t = 0; t < 25; ++t) {
            Polynomial p;
            int terms = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < terms; ++i) {
                Word w;
                int len = 1 + static_cast<int>(rng() % 5);
                for (int j = 0; j < len; ++j)
                    w.push_back(static_cast<VarId>(rng() % 3));
                p.add(Monomial(w), static_cast<int>(rng() % 5) - 2);
            }
            Polynomial nf = reduce(p, rs, ctx);
            CHECK(check_zero(p - nf, ctx, 10, 100 + static_cast<unsigned>(t)).zero);
            CHECK(reduce(nf, rs, ctx) == nf);
            for (const auto& [m, c] : nf.terms()) {
                (void)c;
                CHECK(is_normal_shape(m, kind, ctx));
                CHECK(!reducible(m.left, rs));
            }
        }
    }
}

TEST_CASE("normal shapes: spec examples") {
    auto ctx = ctxn(3);
    CHECK(is_normal_shape(Monomial({1, 2, 0}), RingKind::Multilinear, ctx));   // v2v3 | v1
    CHECK(!is_normal_shape(Monomial({2, 1, 0}), RingKind::Multilinear, ctx));  // G3 leader
    CHECK_THROWS_AS(is_normal_shape(Monomial({0, 1, 2, 0}), RingKind::Multilinear, ctxn(3, 4)),
                    DomainError);
    CHECK(is_normal_shape(Monomial({1}, {{0, 1}}), RingKind::SquareFree, ctx)); // v2 [] v1^2
    CHECK(!is_normal_shape(Monomial({0, 0, 1}), RingKind::SquareFree, ctx));    // foldable
    CHECK(is_normal_shape(Monomial({2, 0, 2, 3, 1}), RingKind::SquareFree, ctxn(4, 5)));
}

TEST_CASE("shape soundness and completeness against the rule set") {
    auto ctx = ctxn(3, 5);
    for (RingKind kind : {RingKind::General, RingKind::SquareFree}) {
        RuleSet rs = generate_rules(kind, ctx);
        for (int m = 0; m <= 5; ++m) {
            for (const auto& mono : enumerate_component(m, kind, ctx)) {
                bool red = reducible(mono.left, rs);
                bool shaped = is_normal_shape(mono, kind, ctx);
                CHECK(red != shaped);
            }
        }
    }
    auto ctx4 = ctxn(4);
    RuleSet multi = generate_multilinear(ctx4);
    for (int m = 0; m <= 4; ++m)
        for (const auto& mono : enumerate_component(m, RingKind::Multilinear, ctx4))
            CHECK(reducible(mono.left, multi) != is_normal_shape(mono, RingKind::Multilinear, ctx4));
}

TEST_CASE("brute-force closure agrees with reduce on small monomials") {
    auto ctx = ctxn(3, 4);
    RuleSet rs = generate_general(ctx);
    // v3 v2 v1 has a unique fixed point equal to reduce's output
    Monomial m({2, 1, 0});
    ClosureResult res = brute_force_closure(m, rs, ctx);
    CHECK(res.unique_fixed_point());
    CHECK(res.fixed_points[0] == reduce(Polynomial::monomial(m), rs, ctx));
    // ascending monomial: closure is itself
    Monomial asc({0, 1, 2});
    ClosureResult triv = brute_force_closure(asc, rs, ctx);
    CHECK(triv.reachable == 1);
    CHECK(triv.unique_fixed_point());

    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        Word w;
        for (int j = 0; j < 4; ++j)
            w.push_back(static_cast<VarId>(rng() % 3));
        ClosureResult r = brute_force_closure(Monomial(w), rs, ctx);
        CHECK(r.unique_fixed_point());
        CHECK(r.fixed_points[0] == reduce(Polynomial::word(w), rs, ctx));
    }
}

TEST_CASE("quotient dimension equals shape count (n=3, small m)") {
    auto ctx = ctxn(3, 4);
    for (RingKind kind : {RingKind::Multilinear, RingKind::General, RingKind::SquareFree}) {
        for (int m = 1; m <= 4; ++m) {
            if (kind == RingKind::Multilinear && m > 3)
                continue;
            int shaped = 0;
            for (const auto& mono : enumerate_component(m, kind, ctx))
                if (is_normal_shape(mono, kind, ctx))
                    ++shaped;
            CHECK(quotient_dimension(m, kind, ctx) == shaped);
        }
    }
}

TEST_CASE("migrate squares") {
    CHECK(migrate_squares(Monomial({1, 0, 0})) == Monomial({1}, {{0, 1}}));
    CHECK(migrate_squares(Monomial({0, 0})) == Monomial({}, {{0, 1}}));
    Monomial clean({1}, {{0, 1}});
    CHECK(migrate_squares(clean) == clean);
    // value preserved
    auto ctx = ctxn(2, 3);
    Polynomial p = Polynomial::word({1, 0, 0});
    CHECK(check_zero(p - migrate_squares(p), ctx, 10, 3).zero);
}

TEST_CASE("fuel exhaustion raises an internal error") {
    auto ctx = ctxn(3);
    RuleSet rs = generate_multilinear(ctx);
    CHECK_THROWS_AS(reduce(Polynomial::word({2, 1, 0}), rs, ctx, 0), InternalError);
}
