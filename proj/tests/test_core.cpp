#include "cliffbrack/bracket.hpp"
#include "cliffbrack/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

using namespace cliffbrack;

namespace {

VariableContext ctx3() {
    return VariableContext::make({"v1", "v2", "v3"});
}

// Brute-force minimum over all V2-equivalent placements of the square pairs.
Word brute_min_placement(const Monomial& m) {
    Word best;
    bool have = false;
    // insert each pair at every slot, in every order; small sizes only
    std::vector<std::pair<VarId, int>> pairs(m.squares.begin(), m.squares.end());
    std::function<void(Word, std::size_t)> rec = [&](Word cur, std::size_t idx) {
        if (idx == pairs.size()) {
            if (!have || compare_words(cur, best) < 0) {
                best = cur;
                have = true;
            }
            return;
        }
        auto [v, k] = pairs[idx];
        // all ways to distribute k pairs of v into slots of cur
        std::function<void(Word, int)> place = [&](Word w, int left) {
            if (left == 0) {
                rec(w, idx + 1);
                return;
            }
            for (std::size_t s = 0; s <= w.size(); ++s) {
                Word nw = w;
                nw.insert(nw.begin() + static_cast<std::ptrdiff_t>(s), 2, v);
                place(nw, left - 1);
            }
        };
        place(cur, k);
    };
    rec(m.left, 0);
    return best;
}

} // namespace

TEST_CASE("ordering: degree then lexicographic") {
    auto ctx = ctx3();
    Monomial a({0, 1}); // v1 v2
    Monomial b({1, 0}); // v2 v1
    CHECK(compare_canonical(a, b) < 0);
    CHECK(compare_canonical(a, a) == 0);
    Monomial folded({1}, {{0, 1}});    // v2 [] v1^2
    Monomial explicit_({0, 0, 1});     // v1 v1 v2
    CHECK(compare_canonical(folded, explicit_) == 0);
    CHECK(folded.canonical_word() == Word{0, 0, 1});
}

TEST_CASE("canonical form: insertion against brute force") {
    // v2 v3 [] v1^2 v3^2 -> v1 v1 v2 v3 v3 v3
    Monomial m({1, 2}, {{0, 1}, {2, 1}});
    CHECK(m.canonical_word() == Word{0, 0, 1, 2, 2, 2});
    CHECK(m.canonical_word() == brute_min_placement(m));

    Monomial plain({0, 1, 2});
    CHECK(plain.canonical_word() == Word{0, 1, 2});
    Monomial pure({}, {{1, 1}});
    CHECK(pure.canonical_word() == Word{1, 1});

    std::mt19937 rng(42);
    for (int t = 0; t < 300; ++t) {
        Monomial r;
        int ll = static_cast<int>(rng() % 4);
        for (int i = 0; i < ll; ++i)
            r.left.push_back(static_cast<VarId>(rng() % 3));
        int sq = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < sq; ++i)
            r.squares[static_cast<VarId>(rng() % 3)] += 1;
        CHECK(r.canonical_word() == brute_min_placement(r));
    }
}

TEST_CASE("reversion is a sign-free involution") {
    Word s{0, 1, 2};
    CHECK(reversion(s) == Word{2, 1, 0});
    CHECK(reversion(reversion(s)) == s);
    CHECK(reversion(Word{}) == Word{});
    std::mt19937 rng(7);
    for (int t = 0; t < 100; ++t) {
        Word w;
        for (unsigned i = 0; i < rng() % 6; ++i)
            w.push_back(static_cast<VarId>(rng() % 4));
        CHECK(reversion(reversion(w)) == w);
        CHECK(reversion(w).size() == w.size());
    }
}

TEST_CASE("bracket leader and orientation") {
    // [v1 v3 v2]: reverse v2 v3 v1 is higher, a = 3 odd
    auto [w1, s1] = bracket_leader(BracketFactor{{0, 2, 1}});
    CHECK(w1 == Word{1, 2, 0});
    CHECK(s1 == -1);
    // [v1 v2]: reverse wins with + sign
    auto [w2, s2] = bracket_leader(BracketFactor{{0, 1}});
    CHECK(w2 == Word{1, 0});
    CHECK(s2 == 1);
    // palindrome stays put
    auto [w3, s3] = bracket_leader(BracketFactor{{0, 1, 0}});
    CHECK(w3 == Word{0, 1, 0});
    CHECK(s3 == 1);

    BracketTerm t;
    t.coeff = 1;
    t.factors = {BracketFactor{{0, 2, 1}}};
    BracketTerm o = orient_brackets(t);
    CHECK(o.coeff == Rational(-1));
    CHECK(o.factors[0].entries == Word{1, 2, 0});

    BracketTerm u;
    u.coeff = 2;
    u.factors = {BracketFactor{{0, 1}}, BracketFactor{{0, 2}}};
    BracketTerm ou = orient_brackets(u);
    CHECK(ou.coeff == Rational(2));
    CHECK(ou.factors[0].entries == Word{1, 0});
    CHECK(ou.factors[1].entries == Word{2, 0});

    BracketTerm keep;
    keep.factors = {BracketFactor{{1, 0}}};
    CHECK(orient_brackets(keep).factors[0].entries == Word{1, 0});
}

TEST_CASE("square-free canonicalization folds and annihilates") {
    // [v2 v1 v1 v2] = [] v1^2 v2^2
    BracketTerm t;
    t.factors = {BracketFactor{{1, 0, 0, 1}}};
    auto c = canonicalize_squarefree(t);
    REQUIRE(c.has_value());
    CHECK(c->factors.empty());
    CHECK(c->squares == SquarePart{{0, 1}, {1, 1}});

    // odd palindrome [v1 v2 v1] is zero
    BracketTerm z;
    z.factors = {BracketFactor{{0, 1, 0}}};
    CHECK(!canonicalize_squarefree(z).has_value());

    // [v2 v3 v1 v3 v4 v2] folds cyclically to [v3 v1 v3 v4] [] v2^2,
    // then orients to the leader [v4 v3 v1 v3] with sign +1
    BracketTerm y;
    y.factors = {BracketFactor{{1, 2, 0, 2, 3, 1}}};
    auto cy = canonicalize_squarefree(y);
    REQUIRE(cy.has_value());
    REQUIRE(cy->factors.size() == 1);
    CHECK(cy->factors[0].entries == Word{3, 2, 0, 2});
    CHECK(cy->coeff == Rational(1));
    CHECK(cy->squares == SquarePart{{1, 1}});
}

TEST_CASE("variable context validation") {
    auto ctx = ctx3();
    CHECK(ctx.alphabet_size() == 3);
    CHECK(ctx.total_multiplicity() == 3);
    CHECK(ctx.rank("v2") == 1);
    CHECK_THROWS_AS(ctx.rank("w"), ContextError);
    CHECK_THROWS_AS(VariableContext::make({"a", "a"}), ContextError);
    CHECK_THROWS_AS(VariableContext::make({"a"}, {0}), ContextError);
}

TEST_CASE("bracket polynomial merges like shapes") {
    BracketPolynomial p;
    BracketTerm t1;
    t1.coeff = 2;
    t1.factors = {BracketFactor{{1, 0}}, BracketFactor{{2, 0}}};
    BracketTerm t2;
    t2.coeff = 3;
    t2.factors = {BracketFactor{{2, 0}}, BracketFactor{{1, 0}}}; // same shape, commuted
    p.add(t1);
    p.add(t2);
    CHECK(p.size() == 1);
    CHECK(p.leading().coeff == Rational(5));
    BracketTerm t3 = t1;
    t3.coeff = -5;
    p.add(t3);
    CHECK(p.is_zero());
}
