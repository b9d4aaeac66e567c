#include "wcf/search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <thread>

#include "wcf/errors.hpp"

namespace wcf {

bool BitRow::any() const {
    for (std::uint64_t w : words_) {
        if (w != 0) return true;
    }
    return false;
}

std::size_t BitRow::count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(__builtin_popcountll(w));
    return total;
}

int BitRow::find_first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] != 0) {
            return static_cast<int>(i * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[i])));
        }
    }
    return -1;
}

BitRow& BitRow::operator&=(const BitRow& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

void BitRow::and_not(const BitRow& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
}

CompatibilityGraph build_compatibility_graph(const SpaceId& space, int t,
                                             std::size_t vertex_cap) {
    if (t < 1) throw DomainError("compatibility graph: t must be >= 1");
    const BigInt total = count_space(space);
    if (total > vertex_cap) {
        throw ResourceLimitError("compatibility graph: |P(" + std::to_string(space.n) + "," +
                                 std::to_string(space.l) + ")| = " + total.str() +
                                 " exceeds vertex cap " + std::to_string(vertex_cap));
    }
    CompatibilityGraph g;
    g.space = space;
    g.t = t;
    g.vertices = enumerate_space(space);
    const std::size_t v = g.vertices.size();
    g.adjacency.assign(v, BitRow(v));
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = i + 1; j < v; ++j) {
            if (agreement_size(g.vertices[i], g.vertices[j]) >= t) {
                g.adjacency[i].set(j);
                g.adjacency[j].set(i);
            }
        }
    }
    return g;
}

namespace {

// Clique search over an abstract adjacency structure. `admissible` filters
// which cliques may be scored (checked at maximal states only; it must be
// preserved under adding vertices). Null means every clique is admissible.
struct CliqueInput {
    std::size_t n = 0;
    const std::vector<BitRow>* adj = nullptr;
    std::function<bool(const std::vector<int>&)> admissible;
};

struct Improvement {
    std::uint64_t at_node = 0;
    std::vector<int> members;  // sorted ascending
};

// Outcome of exploring one root branch in isolation. Branches never share
// incumbents, so every trace depends only on the graph and the node cap;
// results are therefore identical for every worker count and schedule.
struct BranchTrace {
    std::uint64_t nodes = 0;
    bool completed = true;
    std::vector<Improvement> improvements;  // strictly increasing sizes
};

// Greedy coloring of the candidate set in vertex order; bounds[i] is the
// color of order[i] and colors are non-decreasing along `order`, so a clique
// inside the first i+1 candidates has at most bounds[i] vertices.
void color_sort(const std::vector<BitRow>& adj, const BitRow& cands,
                std::vector<int>& order, std::vector<int>& bounds) {
    order.clear();
    bounds.clear();
    BitRow uncolored = cands;
    int color = 0;
    while (true) {
        int seed = uncolored.find_first();
        if (seed < 0) break;
        ++color;
        BitRow avail = uncolored;
        while (true) {
            const int v = avail.find_first();
            if (v < 0) break;
            order.push_back(v);
            bounds.push_back(color);
            uncolored.reset(static_cast<std::size_t>(v));
            avail.reset(static_cast<std::size_t>(v));
            avail.and_not(adj[static_cast<std::size_t>(v)]);
        }
    }
}

class BranchExplorer {
public:
    BranchExplorer(const CliqueInput& in, std::uint64_t node_cap)
        : in_(in), cap_(node_cap) {}

    BranchTrace run(int root) {
        trace_ = BranchTrace{};
        clique_.clear();
        local_best_ = 0;
        aborted_ = false;

        BitRow cands(in_.n);
        const BitRow& row = (*in_.adj)[static_cast<std::size_t>(root)];
        for (std::size_t j = static_cast<std::size_t>(root) + 1; j < in_.n; ++j) {
            if (row.test(j)) cands.set(j);
        }
        clique_.push_back(root);
        expand(cands);
        return std::move(trace_);
    }

private:
    void expand(const BitRow& cands) {
        if (aborted_) return;
        if (trace_.nodes >= cap_) {
            aborted_ = true;
            trace_.completed = false;
            return;
        }
        ++trace_.nodes;

        if (!cands.any()) {
            record_leaf();
            return;
        }
        std::vector<int> order;
        std::vector<int> bounds;
        color_sort(*in_.adj, cands, order, bounds);

        BitRow pool = cands;
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            if (clique_.size() + static_cast<std::size_t>(bounds[static_cast<std::size_t>(idx)]) <=
                local_best_) {
                return;  // bounds are non-decreasing in idx: nothing left can improve
            }
            const int v = order[static_cast<std::size_t>(idx)];
            BitRow child = pool;
            child &= (*in_.adj)[static_cast<std::size_t>(v)];
            clique_.push_back(v);
            expand(child);
            clique_.pop_back();
            if (aborted_) return;
            pool.reset(static_cast<std::size_t>(v));
        }
    }

    void record_leaf() {
        if (clique_.size() <= local_best_) return;
        if (in_.admissible && !in_.admissible(clique_)) return;
        local_best_ = clique_.size();
        Improvement imp;
        imp.at_node = trace_.nodes;
        imp.members = clique_;
        std::sort(imp.members.begin(), imp.members.end());
        trace_.improvements.push_back(std::move(imp));
    }

    const CliqueInput& in_;
    std::uint64_t cap_;
    BranchTrace trace_;
    std::vector<int> clique_;
    std::size_t local_best_ = 0;
    bool aborted_ = false;
};

struct RawResult {
    std::size_t best_size = 0;
    std::vector<int> members;
    bool optimal = true;
    std::uint64_t nodes = 0;
};

// Replays the branch traces in root order against the shared node budget.
// Branch i is charged min(its nodes, what the budget still allows); once the
// budget runs dry the remaining branches count as unexplored.
RawResult merge_traces(const std::vector<BranchTrace>& traces, std::uint64_t budget) {
    RawResult out;
    std::uint64_t remaining = budget;
    for (std::size_t i = 0; i < traces.size(); ++i) {
        if (remaining == 0) {
            out.optimal = false;
            break;
        }
        const BranchTrace& trace = traces[i];
        const std::uint64_t allotted = remaining;
        const std::uint64_t consumed = std::min(trace.nodes, allotted);
        out.nodes += consumed;
        remaining -= consumed;

        for (const Improvement& imp : trace.improvements) {
            if (imp.at_node > allotted) break;
            if (imp.members.size() > out.best_size) {
                out.best_size = imp.members.size();
                out.members = imp.members;
            } else if (imp.members.size() == out.best_size && !out.members.empty() &&
                       imp.members < out.members) {
                out.members = imp.members;  // lexicographically smallest optimum
            }
        }
        if (!(trace.completed && trace.nodes <= allotted)) {
            out.optimal = false;
            break;
        }
    }
    return out;
}

RawResult run_clique_search(const CliqueInput& in, const SearchOptions& options) {
    const std::size_t v = in.n;
    std::vector<BranchTrace> traces(v);
    const int workers = std::max(1, options.workers);
    if (workers == 1 || v <= 1) {
        BranchExplorer explorer(in, options.node_budget);
        for (std::size_t i = 0; i < v; ++i) traces[i] = explorer.run(static_cast<int>(i));
    } else {
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            BranchExplorer explorer(in, options.node_budget);
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= v) break;
                traces[i] = explorer.run(static_cast<int>(i));
            }
        };
        std::vector<std::thread> pool;
        const int spawn = std::min<int>(workers, static_cast<int>(v));
        pool.reserve(static_cast<std::size_t>(spawn));
        for (int k = 0; k < spawn; ++k) pool.emplace_back(work);
        for (std::thread& th : pool) th.join();
    }
    return merge_traces(traces, options.node_budget);
}

Family ids_to_family(const SpaceId& space, const std::vector<Composition>& vertices,
                     const std::vector<int>& ids) {
    std::vector<Composition> members;
    members.reserve(ids.size());
    for (int id : ids) members.push_back(vertices[static_cast<std::size_t>(id)]);
    return Family::of(space, std::move(members));
}

// fixation_coords has fewer than t entries, evaluated on raw vertex ids.
bool fixation_below(const std::vector<Composition>& vertices, const std::vector<int>& ids,
                    int l, int t) {
    int fixed = 0;
    for (int c = 0; c < l; ++c) {
        const std::int64_t value =
            vertices[static_cast<std::size_t>(ids.front())].parts()[static_cast<std::size_t>(c)];
        bool common = true;
        for (std::size_t i = 1; i < ids.size(); ++i) {
            if (vertices[static_cast<std::size_t>(ids[i])].parts()[static_cast<std::size_t>(c)] !=
                value) {
                common = false;
                break;
            }
        }
        if (common && ++fixed >= t) return false;
    }
    return true;
}

}  // namespace

SearchResult max_t_intersecting(const SpaceId& space, int t, SearchConstraint constraint,
                                const SearchOptions& options) {
    const CompatibilityGraph graph = build_compatibility_graph(space, t, options.vertex_cap);

    CliqueInput in;
    in.n = graph.vertex_count();
    in.adj = &graph.adjacency;
    if (constraint == SearchConstraint::NoTFixation) {
        in.admissible = [&graph, t](const std::vector<int>& ids) {
            return fixation_below(graph.vertices, ids, graph.space.l, t);
        };
    }

    const RawResult raw = run_clique_search(in, options);
    SearchResult result;
    result.best_size = raw.best_size;
    result.witness = ids_to_family(space, graph.vertices, raw.members);
    result.optimal = raw.optimal;
    result.nodes_explored = raw.nodes;
    result.budget_exhausted = !raw.optimal;
    return result;
}

SearchResult max_independent_subfamily(const Family& a, const SearchOptions& options) {
    if (a.size() > options.vertex_cap) {
        throw ResourceLimitError("max_independent_subfamily: family size " +
                                 std::to_string(a.size()) + " exceeds vertex cap " +
                                 std::to_string(options.vertex_cap));
    }
    const auto& members = a.members();
    const std::size_t v = members.size();
    std::vector<BitRow> adjacency(v, BitRow(v));
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = i + 1; j < v; ++j) {
            if (agreement_size(members[i], members[j]) == 0) {
                adjacency[i].set(j);
                adjacency[j].set(i);
            }
        }
    }

    CliqueInput in;
    in.n = v;
    in.adj = &adjacency;

    const RawResult raw = run_clique_search(in, options);
    SearchResult result;
    result.best_size = raw.best_size;
    result.witness = ids_to_family(a.space(), members, raw.members);
    result.optimal = raw.optimal;
    result.nodes_explored = raw.nodes;
    result.budget_exhausted = !raw.optimal;
    return result;
}

Restriction restrict_family(const Family& a, const std::vector<int>& coords,
                            const std::vector<std::int64_t>& values) {
    if (coords.size() != values.size()) {
        throw DomainError("restrict_family: coords and values differ in length");
    }
    const int l = a.space().l;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] < 1 || coords[i] > l) {
            throw DomainError("restrict_family: coordinate " + std::to_string(coords[i]) +
                              " out of range [1," + std::to_string(l) + "]");
        }
        if (i > 0 && coords[i] <= coords[i - 1]) {
            throw DomainError("restrict_family: coordinates must be strictly ascending");
        }
        if (values[i] < 0) throw DomainError("restrict_family: negative value");
    }

    std::vector<Composition> sub;
    for (const Composition& u : a.members()) {
        bool ok = true;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (u.part(coords[i]) != values[i]) {
                ok = false;
                break;
            }
        }
        if (ok) sub.push_back(u);
    }

    std::int64_t value_sum = std::accumulate(values.begin(), values.end(), std::int64_t{0});
    const int star_l = l - static_cast<int>(coords.size());
    // value_sum > n forces an empty restriction; report the star in the
    // empty space (0, l-|X|) since P(n - value_sum, l-|X|) does not exist.
    const SpaceId star_space{value_sum <= a.space().n ? a.space().n - value_sum : 0, star_l};

    std::vector<Composition> star;
    star.reserve(sub.size());
    for (const Composition& u : sub) star.push_back(remove_coords(u, coords));

    Restriction out;
    out.sub = Family::of(a.space(), std::move(sub));
    out.star = Family::of(star_space, std::move(star));
    return out;
}

namespace {

// Exhaustive enumeration of admissible cliques of exactly target size.
// Correct only when target is the admissible optimum: an admissible clique
// then never extends to a larger one, so recursion stops at target depth.
class TargetEnumerator {
public:
    TargetEnumerator(const CliqueInput& in, std::size_t target, std::uint64_t node_cap)
        : in_(in), target_(target), cap_(node_cap) {}

    bool run(std::vector<std::vector<int>>& found) {
        for (std::size_t root = 0; root < in_.n && !aborted_; ++root) {
            BitRow cands(in_.n);
            const BitRow& row = (*in_.adj)[root];
            for (std::size_t j = root + 1; j < in_.n; ++j) {
                if (row.test(j)) cands.set(j);
            }
            clique_.assign(1, static_cast<int>(root));
            expand(cands, found);
        }
        return !aborted_;
    }

private:
    void expand(const BitRow& cands, std::vector<std::vector<int>>& found) {
        if (aborted_) return;
        if (nodes_ >= cap_) {
            aborted_ = true;
            return;
        }
        ++nodes_;
        if (clique_.size() == target_) {
            if (!in_.admissible || in_.admissible(clique_)) {
                std::vector<int> sorted = clique_;
                std::sort(sorted.begin(), sorted.end());
                found.push_back(std::move(sorted));
            }
            return;
        }
        std::vector<int> order;
        std::vector<int> bounds;
        color_sort(*in_.adj, cands, order, bounds);
        BitRow pool = cands;
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            if (clique_.size() + static_cast<std::size_t>(bounds[static_cast<std::size_t>(idx)]) <
                target_) {
                return;  // cannot reach the target size any more
            }
            const int v = order[static_cast<std::size_t>(idx)];
            BitRow child = pool;
            child &= (*in_.adj)[static_cast<std::size_t>(v)];
            clique_.push_back(v);
            expand(child, found);
            clique_.pop_back();
            if (aborted_) return;
            pool.reset(static_cast<std::size_t>(v));
        }
    }

    const CliqueInput& in_;
    std::size_t target_;
    std::uint64_t cap_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<int> clique_;
};

}  // namespace

std::vector<Family> enumerate_max_families(const SpaceId& space, int t,
                                           SearchConstraint constraint,
                                           std::size_t target_size,
                                           const SearchOptions& options, bool* complete) {
    if (target_size < 1) throw DomainError("enumerate_max_families: target size must be >= 1");
    const CompatibilityGraph graph = build_compatibility_graph(space, t, options.vertex_cap);

    CliqueInput in;
    in.n = graph.vertex_count();
    in.adj = &graph.adjacency;
    if (constraint == SearchConstraint::NoTFixation) {
        in.admissible = [&graph, t](const std::vector<int>& ids) {
            return fixation_below(graph.vertices, ids, graph.space.l, t);
        };
    }

    std::vector<std::vector<int>> found;
    TargetEnumerator enumerator(in, target_size, options.node_budget);
    const bool finished = enumerator.run(found);
    if (complete != nullptr) *complete = finished;

    std::sort(found.begin(), found.end());
    std::vector<Family> out;
    out.reserve(found.size());
    for (const auto& ids : found) out.push_back(ids_to_family(space, graph.vertices, ids));
    return out;
}

VerifyReport check_lemma32(const Family& a, const std::vector<int>& coords,
                           const std::vector<std::int64_t>& values, int t,
                           const SearchOptions& options) {
    if (t < 1) throw DomainError("check_lemma32: t must be >= 1");
    const int l = a.space().l;
    if (l < t + 3) throw DomainError("check_lemma32: requires l >= t + 3");
    if (coords.size() != static_cast<std::size_t>(t) + 1 || values.size() != coords.size()) {
        throw DomainError("check_lemma32: need exactly t + 1 coordinates and values");
    }
    if (!is_t_intersecting(a, t)) {
        throw DomainError("check_lemma32: family is not t-intersecting");
    }

    VerifyReport report;
    report.case_id = "L3_2";
    report.add_param("n", a.space().n);
    report.add_param("l", l);
    report.add_param("t", t);
    {
        std::string xs;
        std::string ys;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i > 0) {
                xs += ',';
                ys += ',';
            }
            xs += std::to_string(coords[i]);
            ys += std::to_string(values[i]);
        }
        report.add_param("x", xs);
        report.add_param("y", ys);
    }
    report.add_param("family_size", static_cast<std::int64_t>(a.size()));

    const Restriction restricted = restrict_family(a, coords, values);
    const SearchResult independent = max_independent_subfamily(restricted.star, options);
    if (!independent.optimal) {
        report.outcome = Outcome::Inconclusive;
        report.detail = "independent-subfamily search exhausted its node budget";
        return report;
    }
    if (independent.best_size < static_cast<std::size_t>(l - t)) {
        report.lhs = BigRat(static_cast<std::int64_t>(independent.best_size));
        report.rhs = BigRat(l - t);
        report.relation = Relation::Ge;
        report.outcome = Outcome::HypothesisNotMet;
        report.detail = "largest independent subfamily of the restriction has size " +
                        std::to_string(independent.best_size) + " < l - t = " +
                        std::to_string(l - t);
        return report;
    }

    // Conclusion: every member matches (coords, values) on all but at most one
    // of the t+1 restricted coordinates.
    std::int64_t violations = 0;
    std::string counterexample;
    for (const Composition& u : a.members()) {
        int mismatches = 0;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (u.part(coords[i]) != values[i]) ++mismatches;
        }
        if (mismatches > 1) {
            ++violations;
            if (counterexample.empty()) counterexample = format_parts(u);
        }
    }
    report.lhs = BigRat(violations);
    report.rhs = BigRat(0);
    report.relation = Relation::Eq;
    report.judge();
    if (violations > 0) {
        report.detail = "member outside every star of the restricted coordinates: " +
                        counterexample;
    } else {
        report.detail = "independent subfamily of size " +
                        std::to_string(independent.best_size) +
                        " found; containment holds for all " + std::to_string(a.size()) +
                        " members";
    }
    return report;
}

}  // namespace wcf
