#pragma once

#include <cstdint>
#include <vector>

#include "wcf/pattern.hpp"

namespace wcf {

/// The full star {u in P(n,l) : u(j) = values[j] for all j in coords}.
/// coords is an ascending t-set, 1 <= t < l; the value sum must not exceed n.
Family trivial_family(const SpaceId& space, const std::vector<int>& coords,
                      const std::vector<std::int64_t>& values,
                      std::uint64_t cap = kDefaultEnumerationCap);

/// The size bound for non-trivially t-intersecting families:
/// binomial(n+l-t-1, l-t-1) - binomial(n-1, l-t-1) + t.
/// union_size is the first difference alone (the size of the A_s union).
struct HMBound {
    std::int64_t n = 0;
    int l = 0;
    int t = 0;
    BigInt value;
    BigInt union_size;
};

/// Requires 1 <= t and t+1 < l.
HMBound hm_bound(std::int64_t n, int l, int t);

/// The extremal family attaining hm_bound: the union over s outside T of
/// A_s = {u : u(j)=0 for j in T, u(s)=0}, plus the point masses q_i (i in T)
/// that put all of n on coordinate i. coords defaults to T = {1,...,t}.
Family hm_extremal_family(std::int64_t n, int l, int t,
                          std::vector<int> coords = {},
                          std::uint64_t cap = kDefaultEnumerationCap);

/// Threshold (2s)^(2^(r-2) q) + 1 above which independent subfamilies of the
/// stated size are guaranteed. Requires q >= 1 and r, s >= 2.
BigInt independence_threshold(std::int64_t q, std::int64_t r, std::int64_t s);

}  // namespace wcf
