#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "wcf/bigint.hpp"

namespace wcf {

/// Identifies the ambient set P(n,l): weak compositions of n with l parts.
/// l = 0 is allowed only together with n = 0 (the space holding the empty
/// composition, which coordinate removal can produce).
struct SpaceId {
    std::int64_t n = 0;
    int l = 0;

    friend bool operator==(const SpaceId&, const SpaceId&) = default;
    friend auto operator<=>(const SpaceId&, const SpaceId&) = default;
};

/// Throws DomainError when the pair (n,l) is not a valid space.
void validate_space(const SpaceId& space);

/// One weak composition: a fixed-length tuple of non-negative integers.
/// Ordering is lexicographic on the parts sequence.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<std::int64_t> parts);

    /// Coordinate value u(i); i is 1-indexed.
    std::int64_t part(int i) const;
    int length() const { return static_cast<int>(parts_.size()); }
    std::int64_t sum() const;
    SpaceId space() const { return SpaceId{sum(), length()}; }
    const std::vector<std::int64_t>& parts() const { return parts_; }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<std::int64_t> parts_;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 5'000'000;

/// |P(n,l)| = binomial(n+l-1, l-1), exactly.
BigInt count_space(const SpaceId& space);

/// Every element of P(n,l) in ascending lexicographic order.
/// Throws ResourceLimitError when the count exceeds cap.
std::vector<Composition> enumerate_space(const SpaceId& space,
                                         std::uint64_t cap = kDefaultEnumerationCap);

/// R(x_1,...,x_t; u): drops the listed coordinates, order preserved.
/// Coordinates are 1-indexed, must be distinct and within [1, l].
Composition remove_coords(const Composition& u, const std::vector<int>& coords);

/// "0,2,1" style rendering, matching the family-file line format.
std::string format_parts(const Composition& u);

/// Parses a comma-separated parts line. Throws DomainError on malformed input.
Composition parse_parts(const std::string& line);

}  // namespace wcf
