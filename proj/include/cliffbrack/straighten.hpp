#pragma once

#include "cliffbrack/unibracket.hpp"

#include <functional>

namespace cliffbrack {

/// Expansion of [f] into products of brackets whose lengths realize the
/// partition, by the two scalar expansion lines (even: split off a 2-bracket,
/// odd: split off a 3-bracket). Equal to [f] modulo nothing (exact identity).
BracketPolynomial caianiello_expand(const BracketFactor& f, const std::vector<int>& partition,
                                    const VariableContext& ctx);

/// Default partition: repeated application of the two scalar lines down to
/// 2- and 3-brackets.
std::vector<int> default_partition(int length);
BracketPolynomial caianiello_expand(const BracketFactor& f, const VariableContext& ctx);

/// u D v = 2(uv[D]) + 2(v[uD]) - Duv, for a window with u > v, u > l(D),
/// and l(D) > v when |D| > 1. Returns the right-hand side.
BracketPolynomial fundamental_reduction(VarId u, const Word& D, VarId v);

/// One interior window of the bracket rewritten by the fundamental formula:
/// [CuDvE] = 2[CuvE][D] + 2[CvE][uD] - [CDuvE]. Identity when no window applies.
BracketPolynomial interior_normalize(const BracketFactor& f);

/// Absorption of the second bracket:
/// [Buv][wCd] = 1/2 [BwCduv] + (-1)^c 1/2 [BdC'wuv]   (C' the reversion).
BracketPolynomial absorb(const BracketFactor& first, const BracketFactor& second);

/// Shuffle formula: [Av][BwC] = [AwCv][B] - (-1)^b [AwB'v][C] - (-1)^b [wCv][AB']
///                              + (-1)^b [wB'v][AC] - [Aw][CvB],
/// with B the maximal ascending prefix of the second bracket.
BracketPolynomial shuffle(const BracketFactor& first, const BracketFactor& second);

/// Generalized shuffle on explicit decompositions first = A v D, second = B w C
/// (v at index vi, w at index wi).
BracketPolynomial general_shuffle(const BracketFactor& first, const BracketFactor& second,
                                  std::size_t vi, std::size_t wi);

/// Split of a long bracket of block type Y1 z1 ... Yk zk into
/// 2^(k-1) [Y1 z1] ... [Yk zk] plus a lower-leader remainder.
BracketPolynomial split(const BracketFactor& f);

/// Concatenation of two brackets: [X][Y] = 1/2 [XY] + (-1)^y 1/2 [Y'X].
BracketPolynomial merge_brackets(const BracketFactor& first, const BracketFactor& second);

struct TraceStep {
    std::string rule;
    std::string before;
    std::string after;
};
using TraceSink = std::function<void(const TraceStep&)>;

/// Lowest-leader normal form, emitted in straight (tableau) orientation
/// [z1 Y1][z2 Y2]...: rows ascend, columns do not descend, and consecutive
/// row tails do not descend. Deterministic and idempotent; equal inputs
/// produce identical outputs.
BracketPolynomial straighten(const BracketPolynomial& p, const VariableContext& ctx,
                             long fuel = -1, const TraceSink& trace = nullptr);

/// The same normal form with every factor kept in leader orientation
/// [Y_i z_i]; the representative of its leading term is the leading term of
/// the reduced vector-variable expansion of p.
BracketPolynomial leader_normal_form(const BracketPolynomial& p, const VariableContext& ctx,
                                     long fuel = -1, const TraceSink& trace = nullptr);

/// Straight-form conditions on the term's tableau.
bool is_straight(const BracketTerm& t, const VariableContext& ctx);

/// Rows z_i, Y_i of the term; requires every factor to be a single block.
Tableau to_tableau(const BracketTerm& t);

struct IdentityCheck {
    std::string name;
    int instances;
    bool pass;
    std::string detail; // first failing instance, if any
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_pass() const;
};

/// Instantiates the dimension-three constraints (IGP, DB), the reduction
/// helper identities, and the six rewrite formulas on random shapes, and
/// verifies each against the exact Clifford evaluation.
IdentityReport check_basic_identities(int instances, unsigned long long seed);

} // namespace cliffbrack
