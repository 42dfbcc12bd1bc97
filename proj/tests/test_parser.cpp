#include "cliffbrack/parser.hpp"

#include "cliffbrack/error.hpp"

#include <doctest.h>

#include <random>

using namespace cliffbrack;

TEST_CASE("basic documents") {
    ParseResult r = parse("vars v1<v2<v3; [v1 v2][v2 v3] @ v1^2");
    CHECK(r.ctx.names() == std::vector<std::string>{"v1", "v2", "v3"});
    REQUIRE(r.poly.size() == 1);
    BracketTerm t = r.poly.leading();
    CHECK(t.coeff == Rational(1));
    CHECK(t.bare.empty());
    REQUIRE(t.factors.size() == 2);
    CHECK(t.factors[0].entries == Word{0, 1});
    CHECK(t.factors[1].entries == Word{1, 2});
    CHECK(t.squares == SquarePart{{0, 1}});
    // v1 used three times in that term: multiplicity was raised
    CHECK(r.ctx.multiplicity(0) == 3);

    ParseResult q = parse("vars a<b; 3/2 a b - b a");
    auto terms = q.poly.sorted_terms_desc();
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].bare == Word{1, 0}); // b a is the higher monomial
    CHECK(terms[0].coeff == Rational(-1));
    CHECK(terms[1].bare == Word{0, 1});
    CHECK(terms[1].coeff == Rational(3, 2));
}

TEST_CASE("length-1 bracket annihilates with a warning") {
    ParseResult r = parse("vars v1<v2; [v1]");
    CHECK(r.poly.is_zero());
    CHECK(!r.warnings.empty());
    CHECK(print(r.poly, r.ctx) == "0");
}

TEST_CASE("inner brackets flatten by the bracket definition") {
    // [v1 v2 [v3 v4]] = 1/2 [v1 v2 v3 v4] + 1/2 [v1 v2 v4 v3]
    ParseResult r = parse("vars v1<v2<v3<v4; [v1 v2 [v3 v4]]");
    auto terms = r.poly.sorted_terms_desc();
    REQUIRE(terms.size() == 2);
    for (const auto& t : terms) {
        CHECK(t.coeff == Rational(1, 2));
        REQUIRE(t.factors.size() == 1);
    }
    CHECK(terms[1].factors[0].entries == Word{0, 1, 2, 3});
    CHECK(terms[0].factors[0].entries == Word{0, 1, 3, 2});
}

TEST_CASE("errors carry positions") {
    CHECK_THROWS_AS(parse("vars a<b; a ^"), ParseError);
    CHECK_THROWS_AS(parse("vars a; b"), ParseError);         // undeclared
    CHECK_THROWS_AS(parse("vars a; a @ a^3"), ParseError);   // odd exponent
    CHECK_THROWS_AS(parse("vars a<a; a"), ParseError);       // duplicate decl
    CHECK_THROWS_AS(parse("vars a:2<b; a a a"), ContextError); // exceeds stated multiplicity
    try {
        parse("vars a<b;\n a +");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("header inference without a declaration") {
    ParseResult r = parse("b a + a b");
    CHECK(r.ctx.names() == std::vector<std::string>{"a", "b"}); // lexicographic
    CHECK(r.poly.size() == 2);
}

TEST_CASE("printing is deterministic and descending") {
    ParseResult r = parse("vars v1<v2; v1 v2 + v2 v1");
    CHECK(print(r.poly, r.ctx) == "v2 v1 + v1 v2");
    CHECK(print(BracketPolynomial(), r.ctx) == "0");
    ParseResult z = parse("vars v1<v2; 0 v1");
    CHECK(print(z.poly, z.ctx) == "0");
}

namespace {

BracketPolynomial random_poly(std::mt19937& rng, int nvars) {
    BracketPolynomial p;
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        BracketTerm term;
        long num = static_cast<long>(rng() % 9) - 4;
        long den = 1 + static_cast<long>(rng() % 4);
        if (num == 0)
            num = 1;
        term.coeff = Rational(num, den);
        int bare = static_cast<int>(rng() % 3);
        for (int i = 0; i < bare; ++i)
            term.bare.push_back(static_cast<VarId>(rng() % nvars));
        int fac = static_cast<int>(rng() % 3);
        for (int i = 0; i < fac; ++i) {
            Word w;
            int len = 2 + static_cast<int>(rng() % 3);
            for (int j = 0; j < len; ++j)
                w.push_back(static_cast<VarId>(rng() % nvars));
            term.factors.emplace_back(std::move(w));
        }
        if (rng() % 2)
            term.squares[static_cast<VarId>(rng() % nvars)] = 1 + static_cast<int>(rng() % 2);
        p.add(term);
    }
    return p;
}

} // namespace

TEST_CASE("parse after print is the identity on random polynomials") {
    std::mt19937 rng(99);
    std::vector<std::string> names{"v1", "v2", "v3", "v4"};
    for (int t = 0; t < 500; ++t) {
        int nvars = 2 + static_cast<int>(rng() % 3);
        BracketPolynomial p = random_poly(rng, nvars);
        VariableContext ctx =
            VariableContext::make(std::vector<std::string>(names.begin(), names.begin() + nvars));
        std::string text = print_header(ctx) + " " + print(p, ctx);
        ParseResult r = parse(text);
        CHECK(r.poly == p);
        // print is injective on normalized polynomials: round-trip the text too
        CHECK(print(r.poly, r.ctx) == print(p, ctx));
    }
}

TEST_CASE("json emission mirrors the structure") {
    ParseResult r = parse("vars a<b; 2 [a b] @ b^2");
    std::string js = to_json(r.poly, r.ctx);
    CHECK(js.find("\"coeff\": \"2\"") != std::string::npos);
    CHECK(js.find("\"b\": 2") != std::string::npos);
}
