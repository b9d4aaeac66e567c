#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wcf/composition.hpp"

namespace wcf {

/// A duplicate-free set of compositions sharing one space. Members are kept
/// sorted lexicographically, so identical member sets compare equal.
class Family {
public:
    Family() = default;

    static Family empty(const SpaceId& space);
    /// Validates every member against the space and rejects duplicates.
    static Family of(const SpaceId& space, std::vector<Composition> members);

    const SpaceId& space() const { return space_; }
    std::size_t size() const { return members_.size(); }
    bool is_empty() const { return members_.empty(); }
    const std::vector<Composition>& members() const { return members_; }
    bool contains(const Composition& u) const;

    friend bool operator==(const Family&, const Family&) = default;

private:
    SpaceId space_;
    std::vector<Composition> members_;
};

/// I(u,v): the 1-indexed coordinates where u and v take equal values.
/// Throws DomainError when u and v live in different spaces.
std::vector<int> agreement(const Composition& u, const Composition& v);

/// Number of agreeing coordinates; cheaper than materialising the set.
int agreement_size(const Composition& u, const Composition& v);

/// True iff every two distinct members agree on at least t coordinates.
/// Empty families and singletons are t-intersecting for every t >= 1.
bool is_t_intersecting(const Family& a, int t);

/// Coordinates on which all members share one value, with that value.
/// Throws DomainError on an empty family.
std::map<int, std::int64_t> fixation_coords(const Family& a);

enum class FamilyKind { ExactlyTrivial, StarContained, NonTrivial };

const char* to_string(FamilyKind kind);

/// Classification of a t-intersecting family. The witness (T, y) is present
/// iff the kind is not NonTrivial; every member then agrees with y on T.
struct FamilyClass {
    FamilyKind kind = FamilyKind::NonTrivial;
    std::vector<int> witness_coords;           // T, ascending, size t
    std::vector<std::int64_t> witness_values;  // y, aligned with T
};

/// ExactlyTrivial: the family equals the full set {u : u(j)=y_j for j in T}
/// for some t-set T of fixed coordinates (detected by the exact size formula).
/// StarContained: at least t fixed coordinates but no such set equality.
/// Witness is the lexicographically smallest qualifying T.
FamilyClass classify_family(const Family& a, int t);

/// True iff all distinct members have empty agreement sets.
bool is_independent(const Family& a);

/// True iff no composition outside the family agrees with every member on
/// at least t coordinates. Enumerates the space; throws ResourceLimitError
/// when that is infeasible under cap.
bool is_maximal_t_intersecting(const Family& a, int t,
                               std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace wcf
