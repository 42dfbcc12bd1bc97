#pragma once

#include "cliffbrack/error.hpp"

#include <map>
#include <string>
#include <vector>

namespace cliffbrack {

/// A variable is its rank in the declared order: rank 0 is the lowest under <.
using VarId = int;

/// A word in the free monoid over the alphabet; the non-commutative part of a monomial.
using Word = std::vector<VarId>;

/// The ordered alphabet v1 < ... < vn together with the working multiset M.
class VariableContext {
public:
    VariableContext() = default;

    /// names carry the order (position = rank); multiplicity defaults to 1 per name.
    static VariableContext make(std::vector<std::string> names, std::vector<int> multiplicity = {});

    int alphabet_size() const { return static_cast<int>(names_.size()); }  // n
    int total_multiplicity() const;                                        // m

    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(VarId v) const;
    int multiplicity(VarId v) const;
    void set_multiplicity(VarId v, int k);

    VarId rank(const std::string& name) const;          // throws ContextError if unknown
    bool has(const std::string& name) const { return rank_.count(name) != 0; }
    bool valid(VarId v) const { return v >= 0 && v < alphabet_size(); }
    void check(VarId v) const;

    /// The multiset M as counts per rank.
    std::vector<int> multiset() const { return multiplicity_; }

    bool operator==(const VariableContext&) const = default;

private:
    std::vector<std::string> names_;
    std::vector<int> multiplicity_;
    std::map<std::string, VarId> rank_;
};

} // namespace cliffbrack
