#pragma once

#include "cliffbrack/bracket.hpp"
#include "cliffbrack/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cliffbrack {

enum class RingKind { Multilinear, General, SquareFree };

std::string to_string(RingKind k);
std::optional<RingKind> ring_kind_from_string(const std::string& s);

/// One rewrite rule: a concrete leader window and the equal lower polynomial.
/// lhs - rhs lies in the syzygy ideal; rhs is strictly lower for every term.
struct RewriteRule {
    Word lhs;
    Polynomial rhs;
    std::string family; // "fold", "EG2", "G3", "EG4", "G5", ...
};

/// A reduced Groebner base materialized as ordered rewrite rules.
class RuleSet {
public:
    RingKind kind = RingKind::General;

    void add(RewriteRule r);
    const std::vector<RewriteRule>& rules() const { return rules_; }
    int size() const { return static_cast<int>(rules_.size()); }

    /// Exact window match; nullptr when the word is no rule leader.
    const RewriteRule* match_window(const Word& w) const;
    const std::vector<int>& window_lengths() const { return lengths_; }

private:
    std::vector<RewriteRule> rules_;
    std::map<Word, int> by_lhs_;
    std::vector<int> lengths_;
};

/// G3 + Gj families on strictly ascending tuples. Requires n >= 3.
RuleSet generate_multilinear(const VariableContext& ctx);

/// G3, Gj, EG2, EGj with the repetition patterns of the general ring,
/// with window lengths capped by the context's total multiplicity. n >= 2.
RuleSet generate_general(const VariableContext& ctx);

/// G3, Gj, EGk on strictly ascending tuples plus the square-folding rule. n >= 2.
RuleSet generate_squarefree(const VariableContext& ctx);

RuleSet generate_rules(RingKind kind, const VariableContext& ctx);

/// Step budget for a single reduction; CLIFFORD_BRACKET_FUEL overrides.
long default_fuel();

/// Normal form with respect to the rule set: repeatedly rewrites the highest
/// non-reduced term, leftmost window first, until fixed point.
Polynomial reduce(const Polynomial& p, const RuleSet& rs, const VariableContext& ctx,
                  long fuel = -1);

/// True if some contiguous window of the word is a rule leader.
bool reducible(const Word& w, const RuleSet& rs);

/// True iff the term matches the structural normal-form description of the
/// respective ring kind exactly.
bool is_normal_shape(const Monomial& m, RingKind kind, const VariableContext& ctx);

/// Every explicit adjacent square of the left part folds into the square part.
Monomial migrate_squares(Monomial m);
Polynomial migrate_squares(const Polynomial& p);

/// Half-expansion of a single bracket: 2[W] = W + (-1)^|W| reversed(W).
Polynomial bracket_binomial(const Word& w);

} // namespace cliffbrack
