#pragma once

#include <cstdint>
#include <vector>

#include "wcf/family.hpp"
#include "wcf/report.hpp"

namespace wcf {

/// Fixed-width bitset used for adjacency rows and candidate sets.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    bool any() const;
    std::size_t count() const;
    int find_first() const;  // -1 when empty

    BitRow& operator&=(const BitRow& other);
    void and_not(const BitRow& other);  // this &= ~other

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// P(n,l) with an edge between compositions agreeing on >= t coordinates;
/// t-intersecting families are exactly the cliques of this graph.
struct CompatibilityGraph {
    SpaceId space;
    int t = 1;
    std::vector<Composition> vertices;  // enumeration order
    std::vector<BitRow> adjacency;      // symmetric, no self loops

    std::size_t vertex_count() const { return vertices.size(); }
    bool adjacent(std::size_t i, std::size_t j) const { return adjacency[i].test(j); }
};

inline constexpr std::size_t kDefaultVertexCap = 5000;
inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

CompatibilityGraph build_compatibility_graph(const SpaceId& space, int t,
                                             std::size_t vertex_cap = kDefaultVertexCap);

/// Any: plain maximum clique. NoTFixation: maximum over families whose
/// members share a common value on fewer than t coordinates (the containment
/// reading of "non-trivial"); the constraint survives adding members, so it
/// is checked at maximal states only while pruning uses the plain bound.
enum class SearchConstraint { Any, NoTFixation };

struct SearchOptions {
    std::uint64_t node_budget = kDefaultNodeBudget;
    int workers = 1;
    std::size_t vertex_cap = kDefaultVertexCap;
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

struct SearchResult {
    std::size_t best_size = 0;
    Family witness;
    bool optimal = false;
    std::uint64_t nodes_explored = 0;
    bool budget_exhausted = false;
};

/// Exact maximum t-intersecting family size via branch and bound over the
/// compatibility graph. Deterministic: identical inputs and budgets yield
/// identical results for every worker count (branches never share state and
/// the node budget is accounted in branch order).
SearchResult max_t_intersecting(const SpaceId& space, int t, SearchConstraint constraint,
                                const SearchOptions& options = {});

/// Exact maximum pairwise-disjoint-agreement subfamily (clique search on the
/// empty-agreement relation between the family's members).
SearchResult max_independent_subfamily(const Family& a, const SearchOptions& options = {});

/// A(x;y) and A*(x;y): members matching the coordinate constraints, and the
/// same members with those coordinates removed.
struct Restriction {
    Family sub;
    Family star;
};

Restriction restrict_family(const Family& a, const std::vector<int>& coords,
                            const std::vector<std::int64_t>& values);

/// All optimum-size families found by the search, for witness-structure
/// checks. target_size must be the exact optimum for the constraint.
/// Sets *complete to false when the node budget cut the enumeration short.
std::vector<Family> enumerate_max_families(const SpaceId& space, int t,
                                           SearchConstraint constraint,
                                           std::size_t target_size,
                                           const SearchOptions& options = {},
                                           bool* complete = nullptr);

/// Checks the restriction/independence implication on a t-intersecting
/// family: when A*(coords;values) contains an independent set of size at
/// least l-t, every member of A must match values on all but at most one of
/// the t+1 restricted coordinates. Reports hypothesis-not-met when the
/// independent set is too small.
VerifyReport check_lemma32(const Family& a, const std::vector<int>& coords,
                           const std::vector<std::int64_t>& values, int t,
                           const SearchOptions& options = {});

}  // namespace wcf
