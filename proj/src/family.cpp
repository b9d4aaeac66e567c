#include "wcf/family.hpp"

#include <algorithm>

#include "wcf/errors.hpp"

namespace wcf {

Family Family::empty(const SpaceId& space) {
    validate_space(space);
    Family f;
    f.space_ = space;
    return f;
}

Family Family::of(const SpaceId& space, std::vector<Composition> members) {
    validate_space(space);
    for (const Composition& u : members) {
        if (u.length() != space.l) {
            throw DomainError("family: member has " + std::to_string(u.length()) +
                              " parts, space has l = " + std::to_string(space.l));
        }
        if (u.sum() != space.n) {
            throw DomainError("family: member sums to " + std::to_string(u.sum()) +
                              ", space has n = " + std::to_string(space.n));
        }
    }
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
        throw DomainError("family: duplicate member");
    }
    Family f;
    f.space_ = space;
    f.members_ = std::move(members);
    return f;
}

bool Family::contains(const Composition& u) const {
    return std::binary_search(members_.begin(), members_.end(), u);
}

std::vector<int> agreement(const Composition& u, const Composition& v) {
    if (u.space() != v.space()) {
        throw DomainError("agreement: compositions live in different spaces");
    }
    std::vector<int> coords;
    for (int i = 0; i < u.length(); ++i) {
        if (u.parts()[static_cast<std::size_t>(i)] == v.parts()[static_cast<std::size_t>(i)]) {
            coords.push_back(i + 1);
        }
    }
    return coords;
}

int agreement_size(const Composition& u, const Composition& v) {
    if (u.space() != v.space()) {
        throw DomainError("agreement: compositions live in different spaces");
    }
    int count = 0;
    for (int i = 0; i < u.length(); ++i) {
        if (u.parts()[static_cast<std::size_t>(i)] == v.parts()[static_cast<std::size_t>(i)]) ++count;
    }
    return count;
}

bool is_t_intersecting(const Family& a, int t) {
    if (t < 1) throw DomainError("is_t_intersecting: t must be >= 1");
    const auto& m = a.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (agreement_size(m[i], m[j]) < t) return false;
        }
    }
    return true;
}

std::map<int, std::int64_t> fixation_coords(const Family& a) {
    if (a.is_empty()) throw DomainError("fixation_coords: empty family");
    std::map<int, std::int64_t> fixed;
    const auto& m = a.members();
    for (int c = 0; c < a.space().l; ++c) {
        const std::int64_t value = m.front().parts()[static_cast<std::size_t>(c)];
        bool common = true;
        for (std::size_t i = 1; i < m.size(); ++i) {
            if (m[i].parts()[static_cast<std::size_t>(c)] != value) {
                common = false;
                break;
            }
        }
        if (common) fixed.emplace(c + 1, value);
    }
    return fixed;
}

const char* to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::ExactlyTrivial: return "exactly-trivial";
        case FamilyKind::StarContained: return "star-contained";
        case FamilyKind::NonTrivial: return "non-trivial";
    }
    return "?";
}

namespace {

// Advances idx to the next t-subset of {0,...,pool_size-1} in lexicographic order.
bool next_subset(std::vector<int>& idx, std::size_t pool_size) {
    const int t = static_cast<int>(idx.size());
    const int n = static_cast<int>(pool_size);
    int i = t - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - t + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < t; ++j) {
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return true;
}

}  // namespace

FamilyClass classify_family(const Family& a, int t) {
    if (a.is_empty()) throw DomainError("classify_family: empty family");
    if (!is_t_intersecting(a, t)) {
        throw DomainError("classify_family: family is not t-intersecting");
    }
    const auto fixed = fixation_coords(a);
    std::vector<int> pool;
    std::vector<std::int64_t> pool_values;
    for (const auto& [coord, value] : fixed) {
        pool.push_back(coord);
        pool_values.push_back(value);
    }

    FamilyClass result;
    if (pool.size() < static_cast<std::size_t>(t)) {
        result.kind = FamilyKind::NonTrivial;
        return result;
    }

    const SpaceId space = a.space();
    const std::size_t st = static_cast<std::size_t>(t);
    std::vector<int> idx(st);
    for (std::size_t i = 0; i < st; ++i) idx[i] = static_cast<int>(i);
    // A is contained in the star of any t-subset of its fixed coordinates,
    // so set equality with the full star is exactly a size match.
    do {
        std::int64_t value_sum = 0;
        for (std::size_t i = 0; i < st; ++i) value_sum += pool_values[static_cast<std::size_t>(idx[i])];
        const BigInt star_size =
            binomial(space.n - value_sum + space.l - t - 1, space.l - t - 1);
        if (star_size == static_cast<std::int64_t>(a.size())) {
            result.kind = FamilyKind::ExactlyTrivial;
            for (std::size_t i = 0; i < st; ++i) {
                result.witness_coords.push_back(pool[static_cast<std::size_t>(idx[i])]);
                result.witness_values.push_back(pool_values[static_cast<std::size_t>(idx[i])]);
            }
            return result;
        }
    } while (next_subset(idx, pool.size()));

    result.kind = FamilyKind::StarContained;
    for (std::size_t i = 0; i < st; ++i) {
        result.witness_coords.push_back(pool[i]);
        result.witness_values.push_back(pool_values[i]);
    }
    return result;
}

bool is_independent(const Family& a) {
    const auto& m = a.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (agreement_size(m[i], m[j]) > 0) return false;
        }
    }
    return true;
}

bool is_maximal_t_intersecting(const Family& a, int t, std::uint64_t cap) {
    if (!is_t_intersecting(a, t)) {
        throw DomainError("is_maximal_t_intersecting: family is not t-intersecting");
    }
    const auto space = enumerate_space(a.space(), cap);
    for (const Composition& u : space) {
        if (a.contains(u)) continue;
        bool addable = true;
        for (const Composition& member : a.members()) {
            if (agreement_size(u, member) < t) {
                addable = false;
                break;
            }
        }
        if (addable) return false;
    }
    return true;
}

}  // namespace wcf
