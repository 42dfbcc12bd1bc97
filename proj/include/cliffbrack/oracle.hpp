#pragma once

#include "cliffbrack/bracket.hpp"
#include "cliffbrack/gbasis.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace cliffbrack {

/// Element of the 8-dimensional Clifford algebra over R^-3 with rational
/// coordinates. Coordinates are indexed by basis-blade bitmask: bit 0 = e1,
/// bit 1 = e2, bit 2 = e3; e_i e_i = -1 and e_i e_j = -e_j e_i.
struct Multivector8 {
    std::array<Rational, 8> c{};

    static Multivector8 scalar(const Rational& r);
    static Multivector8 vector(const Rational& a1, const Rational& a2, const Rational& a3);

    bool is_zero() const;
    int grade_of(unsigned mask) const { return __builtin_popcount(mask); }

    Multivector8& operator+=(const Multivector8& o);
    Multivector8& operator-=(const Multivector8& o);
    Multivector8& operator*=(const Rational& r);
    friend Multivector8 operator+(Multivector8 a, const Multivector8& b) { return a += b; }
    friend Multivector8 operator-(Multivector8 a, const Multivector8& b) { return a -= b; }
    friend Multivector8 operator*(Multivector8 a, const Rational& r) { return a *= r; }
    bool operator==(const Multivector8&) const = default;
};

/// Clifford product; bilinear and associative, e1*e1 = -1.
Multivector8 mul(const Multivector8& a, const Multivector8& b);

/// Clifford conjugate: per-grade signs (+,-,-,+) on grades (0,1,2,3).
Multivector8 conjugate(const Multivector8& a);

/// Reversion anti-automorphism: per-grade signs (+,+,-,-).
Multivector8 reverse(const Multivector8& a);

/// Scalar + pseudoscalar projection (Q + conjugate(Q))/2.
struct CenterValue {
    Rational scalar;
    Rational pseudo; // coefficient of e123
    bool is_zero() const { return scalar == 0 && pseudo == 0; }
    bool operator==(const CenterValue&) const = default;
};

CenterValue bracket_of(const Multivector8& a);
Multivector8 center_embed(const CenterValue& v);

/// Concrete rational 3-vectors for the variables of an expression.
struct Assignment {
    std::map<VarId, Multivector8> vectors;
    const Multivector8& at(VarId v) const;
};

/// Deterministic pseudo-random assignments: components with numerator in
/// [-9, 9] and denominator in [1, 7], seeded.
class AssignmentSampler {
public:
    AssignmentSampler(int variable_count, unsigned long long seed);
    Assignment next();

private:
    int n_;
    unsigned long long state_;
    Rational next_component();
};

/// Homomorphic evaluation: products map to mul, brackets to bracket_of
/// (embedded back as a center element), squares to the scalar v*v.
Multivector8 eval(const Monomial& m, const Assignment& asg);
Multivector8 eval(const Polynomial& p, const Assignment& asg);
Multivector8 eval(const BracketTerm& t, const Assignment& asg);
Multivector8 eval(const BracketPolynomial& p, const Assignment& asg);

struct ZeroCheck {
    bool zero;
    std::optional<Assignment> witness; // first assignment with a nonzero value
};

/// Evaluates at `trials` pseudo-random rational assignments; exact comparison.
ZeroCheck check_zero(const Polynomial& p, const VariableContext& ctx, int trials, unsigned long long seed);
ZeroCheck check_zero(const BracketPolynomial& p, const VariableContext& ctx, int trials, unsigned long long seed);

/// Like check_zero but only requires the grade-0 + grade-3 projection to
/// vanish; the membership test for the uni-bracket syzygy ideal at degree m.
ZeroCheck check_center_zero(const Polynomial& p, const VariableContext& ctx, int trials, unsigned long long seed);

/// Exhaustive rewriting closure of a single monomial: applies every rule at
/// every position of every term of every reachable polynomial.
struct ClosureResult {
    std::size_t reachable;
    std::vector<Polynomial> fixed_points;
    bool unique_fixed_point() const { return fixed_points.size() == 1; }
};

struct ClosureCaps {
    int max_degree = 6;
    int max_alphabet = 4;
    std::size_t max_states = 2000000;
};

ClosureResult brute_force_closure(const Monomial& mono, const RuleSet& rs, const VariableContext& ctx,
                                  ClosureCaps caps = {});

/// Dimension of the degree-m component of the quotient ring, by exact rank
/// computation over the raw V2/V3/V4 syzygy generators (independent of the
/// materialized rule families).
int quotient_dimension(int m, RingKind kind, const VariableContext& ctx);

/// All degree-m monomials of the given ring over the context alphabet,
/// in the representation the ring kind uses.
std::vector<Monomial> enumerate_component(int m, RingKind kind, const VariableContext& ctx);

/// Rank of a rational matrix by exact Gaussian elimination.
int exact_rank(std::vector<std::vector<Rational>> rows);

} // namespace cliffbrack
