#pragma once

#include "cliffbrack/gbasis.hpp"
#include "cliffbrack/oracle.hpp"

namespace cliffbrack {

/// A uni-bracket polynomial: degree-m vector-variable terms over the working
/// multiset M, read modulo the removal ideal (the outer bracket symbol is
/// gone; squares sit behind the box symbol).
struct UniBracketPolynomial {
    Polynomial rep;
    bool operator==(const UniBracketPolynomial&) const = default;
};

/// Which family closes the base: the operational replacement set
/// (Sq1[j,l] + R12[j,l] + the bare-variable rule) or the directly stated
/// R1[j,l] set. Both yield identical normal forms.
enum class RFamilyVariant { Remark, Theorem };

/// Fully expands every bracket, reads the result as the uni-bracket
/// representative, and migrates squares. Every input term must have total
/// degree m = |M|.
UniBracketPolynomial to_unibracket(const BracketPolynomial& p, const VariableContext& ctx);

/// One enumerated element of BG[M] beyond the vector-variable base.
struct UniBaseElement {
    std::string family;        // "S1", "R1[j,l]", "Sq1[j,l]", "R12[j,l]"
    BracketPolynomial element; // lies in the syzygy ideal of the uni-bracket space
    Monomial leader;
};

/// The reduced Groebner base of the uni-bracket syzygy ideal: the square-free
/// vector-variable base plus the enumerated S1 / R families for M.
struct UniGroebnerBase {
    VariableContext ctx;
    RuleSet vv_rules;
    std::vector<UniBaseElement> elements;
    RFamilyVariant variant;
};

UniGroebnerBase generate_BG(const VariableContext& ctx, RFamilyVariant variant = RFamilyVariant::Remark);

/// Lowest-representative normal form: fixed point under the square-free
/// vector-variable rules and the S1 / R-family rewrites.
UniBracketPolynomial unibracket_normal_form(const UniBracketPolynomial& p, const VariableContext& ctx,
                                            RFamilyVariant variant = RFamilyVariant::Remark,
                                            long fuel = -1);

/// Structural predicate: the monomial is a normal-form monomial of the
/// uni-bracket space (irreducible under the base).
bool is_unibracket_normal(const Monomial& m, const VariableContext& ctx);

/// All square-free monomials whose variable multiset is exactly M.
std::vector<Monomial> enumerate_exact_multiset(const VariableContext& ctx);

/// Dimension of the uni-bracket space modulo its syzygy ideal, by exact rank
/// over the raw V3/V4 instances plus the removal-ideal span.
int unibracket_quotient_dimension(const VariableContext& ctx);

} // namespace cliffbrack
