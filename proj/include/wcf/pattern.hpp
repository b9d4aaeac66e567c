#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wcf/family.hpp"

namespace wcf {

/// A disjunction of conjunctions of coordinate-equality constraints.
/// Each clause maps 1-indexed coordinates to required values; a composition
/// matches when at least one clause is fully satisfied.
struct FamilyPattern {
    std::vector<std::map<int, std::int64_t>> clauses;
};

/// Throws DomainError unless every clause is non-empty, references only
/// coordinates of the space and requires non-negative values.
void validate_pattern(const SpaceId& space, const FamilyPattern& pattern);

bool matches(const Composition& u, const FamilyPattern& pattern);

/// The compositions of the space satisfying the pattern, by enumeration.
Family pattern_family(const SpaceId& space, const FamilyPattern& pattern,
                      std::uint64_t cap = kDefaultEnumerationCap);

/// |pattern_family| without enumerating: inclusion-exclusion over clause
/// subsets, each conjunction counted by stars and bars.
BigInt pattern_count(const SpaceId& space, const FamilyPattern& pattern);

}  // namespace wcf
