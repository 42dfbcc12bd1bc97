#pragma once

#include "cliffbrack/straighten.hpp"

#include <string>
#include <vector>

namespace cliffbrack {

struct SuiteCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    unsigned long long seed = 0;
    int trials = 0;
    std::vector<SuiteCheck> checks;
    bool all_pass() const;
    std::string to_json() const;
};

/// Identity suite: every rewrite formula and dimension-three constraint
/// instantiated on random shapes, verified to exact zero.
SuiteReport verify_identities(int instances, unsigned long long seed);

/// Soundness of every generated rule and base element: multilinear n <= 5,
/// general n <= 4 (windows up to degree 7), square-free n <= 4, and BG[M]
/// for every multiset with 3 <= |M| <= max_m (center projection).
SuiteReport verify_gb(int trials, unsigned long long seed, int max_m = 6);

/// Exhaustive rewriting closure: unique fixed point equal to reduce() for
/// all monomials up to the given degrees.
SuiteReport verify_confluence(int general_degree, int multilinear_degree);

/// Shape-normal counts against brute-force quotient dimensions.
SuiteReport verify_dimension();

SuiteReport verify_suite(const std::string& suite, int trials, unsigned long long seed);

} // namespace cliffbrack
