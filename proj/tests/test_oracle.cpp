#include "cliffbrack/oracle.hpp"

#include <doctest.h>

using namespace cliffbrack;

namespace {

Multivector8 basis(unsigned mask) {
    Multivector8 m;
    m.c[mask] = 1;
    return m;
}

const unsigned E1 = 1, E2 = 2, E3 = 4, E12 = 3, E123 = 7;

} // namespace

TEST_CASE("clifford product basics") {
    CHECK(mul(basis(E1), basis(E1)) == Multivector8::scalar(-1));
    CHECK(mul(basis(E1), basis(E2)) == basis(E12));
    Multivector8 m21 = mul(basis(E2), basis(E1));
    Multivector8 neg12 = basis(E12) * Rational(-1);
    CHECK(m21 == neg12);
    CHECK(mul(mul(basis(E1), basis(E2)), basis(E3)) == basis(E123));
    // the pseudoscalar commutes and squares to +1 under metric (-1,-1,-1)
    CHECK(mul(basis(E123), basis(E1)) == mul(basis(E1), basis(E123)));
    CHECK(mul(basis(E123), basis(E123)) == Multivector8::scalar(1));
}

TEST_CASE("associativity and bilinearity at random points") {
    AssignmentSampler s(3, 99);
    for (int t = 0; t < 20; ++t) {
        Assignment a = s.next();
        const Multivector8 &x = a.at(0), &y = a.at(1), &z = a.at(2);
        CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
        Multivector8 sum = x + y;
        CHECK(mul(sum, z) == mul(x, z) + mul(y, z));
    }
}

TEST_CASE("conjugate and bracket projection") {
    CHECK(bracket_of(mul(mul(basis(E1), basis(E2)), basis(E3))) == CenterValue{0, 1});
    CHECK(bracket_of(mul(basis(E1), basis(E2))) == CenterValue{0, 0});
    CHECK(bracket_of(Multivector8::scalar(Rational(5, 3))) == CenterValue{Rational(5, 3), 0});
    // conjugate flips grades 1 and 2
    CHECK(conjugate(basis(E1)) == basis(E1) * Rational(-1));
    CHECK(conjugate(basis(E12)) == basis(E12) * Rational(-1));
    CHECK(conjugate(basis(E123)) == basis(E123));
    CHECK(reverse(basis(E123)) == basis(E123) * Rational(-1));
}

TEST_CASE("brackets of vector products are central") {
    auto ctx = VariableContext::make({"a", "b", "c", "d"});
    AssignmentSampler s(4, 5);
    for (int t = 0; t < 20; ++t) {
        Assignment a = s.next();
        Multivector8 prod = Multivector8::scalar(1);
        for (VarId v = 0; v < 4; ++v)
            prod = mul(prod, a.at(v));
        Multivector8 br = (prod + conjugate(prod)) * Rational(1, 2);
        // no grade-1 or grade-2 parts
        for (unsigned mask : {1u, 2u, 4u, 3u, 5u, 6u})
            CHECK(br.c[mask] == 0);
    }
}

TEST_CASE("eval on monomials, brackets, squares") {
    auto ctx = VariableContext::make({"v1", "v2"});
    Assignment asg;
    asg.vectors.emplace(0, Multivector8::vector(1, 0, 0));
    asg.vectors.emplace(1, Multivector8::vector(1, 0, 0));

    // [v1 v2] at (e1, e1) is -1
    BracketTerm t;
    t.factors = {BracketFactor{{0, 1}}};
    CHECK(eval(t, asg) == Multivector8::scalar(-1));

    // v2 [] v1^2 at (e1, e2) is -e2
    Assignment asg2;
    asg2.vectors.emplace(0, Multivector8::vector(1, 0, 0));
    asg2.vectors.emplace(1, Multivector8::vector(0, 1, 0));
    Monomial m({1}, {{0, 1}});
    CHECK(eval(m, asg2) == basis(E2) * Rational(-1));
}

TEST_CASE("check_zero finds witnesses for nonzero polynomials") {
    auto ctx = VariableContext::make({"v1", "v2"});
    Polynomial anti;
    anti.add(Monomial({0, 1}), 1);
    anti.add(Monomial({1, 0}), -1);
    ZeroCheck z = check_zero(anti, ctx, 10, 1);
    CHECK(!z.zero);
    CHECK(z.witness.has_value());
    CHECK(check_zero(Polynomial(), ctx, 10, 1).zero);

    // v1 v2 + v2 v1 - 2 [v1 v2] is identically zero
    BracketPolynomial p;
    BracketTerm a;
    a.bare = {0, 1};
    p.add(a);
    BracketTerm b;
    b.bare = {1, 0};
    p.add(b);
    BracketTerm c;
    c.coeff = -2;
    c.factors = {BracketFactor{{0, 1}}};
    p.add(c);
    CHECK(check_zero(p, ctx, 20, 3).zero);
}

TEST_CASE("quotient dimensions at small sizes") {
    auto ctx = VariableContext::make({"v1", "v2", "v3"});
    CHECK(quotient_dimension(0, RingKind::General, ctx) == 1);
    // multilinear n=3, m=3: normal forms are 123, 213, 231, 132
    CHECK(quotient_dimension(3, RingKind::Multilinear, ctx) == 4);
    // n=2 degree 4, all multisets: {a^4}: 1, {a^3 b}: 2, {a^2 b^2}: 3,
    // {a b^3}: 2, {b^4}: 1
    auto ctx2 = VariableContext::make({"a", "b"}, {2, 2});
    CHECK(quotient_dimension(4, RingKind::SquareFree, ctx2) == 9);
    CHECK(quotient_dimension(4, RingKind::General, ctx2) == 9);
}
