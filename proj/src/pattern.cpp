#include "wcf/pattern.hpp"

#include "wcf/errors.hpp"

namespace wcf {

void validate_pattern(const SpaceId& space, const FamilyPattern& pattern) {
    if (pattern.clauses.empty()) throw DomainError("pattern: no clauses");
    for (const auto& clause : pattern.clauses) {
        if (clause.empty()) throw DomainError("pattern: empty clause");
        for (const auto& [coord, value] : clause) {
            if (coord < 1 || coord > space.l) {
                throw DomainError("pattern: coordinate " + std::to_string(coord) +
                                  " out of range [1," + std::to_string(space.l) + "]");
            }
            if (value < 0) throw DomainError("pattern: negative required value");
        }
    }
}

bool matches(const Composition& u, const FamilyPattern& pattern) {
    for (const auto& clause : pattern.clauses) {
        bool ok = true;
        for (const auto& [coord, value] : clause) {
            if (u.part(coord) != value) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

Family pattern_family(const SpaceId& space, const FamilyPattern& pattern, std::uint64_t cap) {
    validate_pattern(space, pattern);
    std::vector<Composition> members;
    for (Composition& u : enumerate_space(space, cap)) {
        if (matches(u, pattern)) members.push_back(std::move(u));
    }
    return Family::of(space, std::move(members));
}

namespace {

// Members matching every clause of the subset at once: the merged equality
// constraints either conflict (count 0) or fix k coordinates whose values
// sum to s, leaving binomial(n-s+(l-k)-1, (l-k)-1) free completions.
BigInt conjunction_count(const SpaceId& space,
                         const std::vector<std::map<int, std::int64_t>>& clauses,
                         unsigned mask) {
    std::map<int, std::int64_t> merged;
    for (std::size_t c = 0; c < clauses.size(); ++c) {
        if (!(mask & (1u << c))) continue;
        for (const auto& [coord, value] : clauses[c]) {
            auto [it, inserted] = merged.emplace(coord, value);
            if (!inserted && it->second != value) return 0;
        }
    }
    std::int64_t value_sum = 0;
    for (const auto& [coord, value] : merged) value_sum += value;
    if (value_sum > space.n) return 0;
    const int free_parts = space.l - static_cast<int>(merged.size());
    if (free_parts == 0) return value_sum == space.n ? 1 : 0;
    return binomial(space.n - value_sum + free_parts - 1, free_parts - 1);
}

}  // namespace

BigInt pattern_count(const SpaceId& space, const FamilyPattern& pattern) {
    validate_pattern(space, pattern);
    const std::size_t c = pattern.clauses.size();
    if (c > 30) throw ResourceLimitError("pattern_count: too many clauses for inclusion-exclusion");
    BigInt total = 0;
    for (unsigned mask = 1; mask < (1u << c); ++mask) {
        const BigInt term = conjunction_count(space, pattern.clauses, mask);
        if (__builtin_popcount(mask) % 2 == 1) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

}  // namespace wcf
