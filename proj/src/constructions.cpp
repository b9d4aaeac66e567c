#include "wcf/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "wcf/errors.hpp"

namespace wcf {

namespace {

void validate_coord_set(const std::vector<int>& coords, int l, const char* who) {
    if (coords.empty()) throw DomainError(std::string(who) + ": empty coordinate set");
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] < 1 || coords[i] > l) {
            throw DomainError(std::string(who) + ": coordinate " + std::to_string(coords[i]) +
                              " out of range [1," + std::to_string(l) + "]");
        }
        if (i > 0 && coords[i] <= coords[i - 1]) {
            throw DomainError(std::string(who) + ": coordinates must be strictly ascending");
        }
    }
}

}  // namespace

Family trivial_family(const SpaceId& space, const std::vector<int>& coords,
                      const std::vector<std::int64_t>& values, std::uint64_t cap) {
    validate_space(space);
    validate_coord_set(coords, space.l, "trivial_family");
    if (coords.size() != values.size()) {
        throw DomainError("trivial_family: coords and values differ in length");
    }
    const int t = static_cast<int>(coords.size());
    if (t >= space.l) throw DomainError("trivial_family: need t < l");
    std::int64_t value_sum = 0;
    for (std::int64_t y : values) {
        if (y < 0) throw DomainError("trivial_family: negative value");
        value_sum += y;
    }
    if (value_sum > space.n) {
        throw DomainError("trivial_family: values sum to " + std::to_string(value_sum) +
                          " > n = " + std::to_string(space.n));
    }
    FamilyPattern pattern;
    pattern.clauses.emplace_back();
    for (int i = 0; i < t; ++i) {
        pattern.clauses.back()[coords[static_cast<std::size_t>(i)]] =
            values[static_cast<std::size_t>(i)];
    }
    return pattern_family(space, pattern, cap);
}

HMBound hm_bound(std::int64_t n, int l, int t) {
    if (t < 1) throw DomainError("hm_bound: t must be >= 1");
    if (t + 1 >= l) throw DomainError("hm_bound: need t + 1 < l");
    if (n < 0) throw DomainError("hm_bound: n must be non-negative");
    HMBound b;
    b.n = n;
    b.l = l;
    b.t = t;
    b.union_size = binomial(n + l - t - 1, l - t - 1) - binomial(n - 1, l - t - 1);
    b.value = b.union_size + t;
    return b;
}

Family hm_extremal_family(std::int64_t n, int l, int t, std::vector<int> coords,
                          std::uint64_t cap) {
    if (n < 1) throw DomainError("hm_extremal_family: n must be >= 1");
    if (t < 1) throw DomainError("hm_extremal_family: t must be >= 1");
    if (t + 1 >= l) throw DomainError("hm_extremal_family: need t + 1 < l");
    if (coords.empty()) {
        coords.resize(static_cast<std::size_t>(t));
        std::iota(coords.begin(), coords.end(), 1);
    }
    validate_coord_set(coords, l, "hm_extremal_family");
    if (coords.size() != static_cast<std::size_t>(t)) {
        throw DomainError("hm_extremal_family: T must have exactly t coordinates");
    }

    const SpaceId space{n, l};
    std::vector<bool> in_t(static_cast<std::size_t>(l) + 1, false);
    for (int j : coords) in_t[static_cast<std::size_t>(j)] = true;

    FamilyPattern union_pattern;
    for (int s = 1; s <= l; ++s) {
        if (in_t[static_cast<std::size_t>(s)]) continue;
        std::map<int, std::int64_t> clause;
        for (int j : coords) clause[j] = 0;
        clause[s] = 0;
        union_pattern.clauses.push_back(std::move(clause));
    }

    std::vector<Composition> members = pattern_family(space, union_pattern, cap).members();
    for (int i : coords) {
        std::vector<std::int64_t> parts(static_cast<std::size_t>(l), 0);
        parts[static_cast<std::size_t>(i - 1)] = n;
        members.emplace_back(std::move(parts));  // q_i; not in the union since n >= 1
    }
    return Family::of(space, std::move(members));
}

BigInt independence_threshold(std::int64_t q, std::int64_t r, std::int64_t s) {
    if (q < 1) throw DomainError("independence_threshold: q must be >= 1");
    if (r < 2) throw DomainError("independence_threshold: r must be >= 2");
    if (s < 2) throw DomainError("independence_threshold: s must be >= 2");
    const BigInt exponent = int_pow(2, static_cast<std::uint64_t>(r - 2)) * q;
    if (exponent > (1u << 24)) {
        throw ResourceLimitError("independence_threshold: exponent too large to evaluate");
    }
    return int_pow(2 * s, exponent.convert_to<std::uint64_t>()) + 1;
}

}  // namespace wcf
