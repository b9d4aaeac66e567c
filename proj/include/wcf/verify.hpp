#pragma once

#include <cstdint>
#include <vector>

#include "wcf/constructions.hpp"
#include "wcf/report.hpp"
#include "wcf/search.hpp"

namespace wcf {

/// The counting comparisons between pattern families over P(m,r):
/// L2_1  |D| <= |C| for the two-tail union against value matches;
/// L2_2  prefix-fixed tail: set equality or strict deficit, with closed forms;
/// L2_3  one zeroed coordinate inside a value union;
/// T2_4  zero matches beat value matches on any index set S;
/// C2_5  the prefix-pinned variant with an explicit binomial-sum bound.
enum class FamilyIneqCase { L2_1, L2_2, L2_3, T2_4, C2_5 };

const char* to_string(FamilyIneqCase c);

struct FamilyIneqParams {
    std::int64_t m = 0;
    int r = 0;
    int k = 0;                    // L2_2, L2_3
    int k0 = 0;                   // L2_3
    int t = 0;                    // C2_5
    std::vector<std::int64_t> y;  // length r (L2_1, T2_4, C2_5) or k (L2_2, L2_3)
    std::vector<std::int64_t> w;  // C2_5 only, length t
    std::vector<int> S;           // T2_4: subset of [r]; C2_5: subset of [t+1..t+r]
};

/// Builds the C and D families by enumeration, cross-checks the sizes
/// against inclusion-exclusion counting and the case's closed forms, and
/// judges the stated relation. Parameter sets outside a statement's
/// hypotheses yield outcome hypothesis-not-met.
VerifyReport verify_family_inequality(FamilyIneqCase c, const FamilyIneqParams& p);

/// Exact-rational checks:
/// L3_3   prod(1+x_i) - prod(1-x_i) >= 2 sum(x_i), with equality when r <= 2;
/// L3_4   binomial(n+m,m) - binomial(n-1,m) >= (m+1) n^(m-1) / (m-1)!;
/// L3_5   n^m/m! < binomial(n+m,m) < (n^m/m!)(1 + 2^m m / n), both strict;
/// L3_6   f binomial(n+m,m) + g sqrt(n) binomial(n+m-1,m-1) < n^m (f+1)/m!;
/// Hockey binomial(n+l-t-1,l-t-1) - binomial(n-1,l-t-1) as a binomial sum.
enum class NumericCase { L3_3, L3_4, L3_5, L3_6, Hockey };

const char* to_string(NumericCase c);

struct NumericParams {
    std::int64_t n = 0;
    std::int64_t m = 0;
    int l = 0;
    int t = 0;
    std::vector<BigRat> x;  // L3_3
    BigRat f;               // L3_6
    BigRat g;               // L3_6
};

VerifyReport verify_numeric(NumericCase c, const NumericParams& p);

/// Smallest integer n satisfying max(m, 2^(m-1)(m-1), (2^m/g)^2, (3fgm)^2),
/// the threshold above which the L3_6 inequality is guaranteed.
std::int64_t lemma36_threshold(const BigRat& f, const BigRat& g, std::int64_t m);

/// Checks the extremal family: exact size match with hm_bound, exhaustive
/// pairwise t-intersection, non-trivial classification for n >= 2, and a
/// non-asserting maximality probe.
VerifyReport verify_hm_construction(std::int64_t n, int l, int t,
                                    std::uint64_t cap = kDefaultEnumerationCap);

/// Desk-scale check of the main bound: searches for the maximum family
/// without a t-coordinate fixation, asserts that the constructed extremal
/// family is matched or beaten, and reports (without asserting) how the
/// optimum compares with hm_bound and whether every optimum has the
/// extremal structure.
VerifyReport verify_main_small(std::int64_t n, int l, int t,
                               const SearchOptions& options = {});

struct SuiteOptions {
    std::int64_t max_m = 0;  // 0 = suite default
    std::int64_t max_n = 0;  // 0 = suite default
    std::uint64_t seed = 1;
    SearchOptions search;
};

/// Exhaustive grids over the counting statements; zero failures expected.
std::vector<VerifyReport> run_section2_suite(const SuiteOptions& options = {});

/// Hockey-stick grid, the rational inequalities, seeded random product
/// vectors and the mixed bound at its own threshold.
std::vector<VerifyReport> run_section3_suite(const SuiteOptions& options = {});

/// Extremal-construction grid plus the fixed spot value hm_bound(10,5,1).
std::vector<VerifyReport> run_construction_suite(const SuiteOptions& options = {});

/// verify_main_small for (l,t) = (5,1), n in {1,2,3}.
std::vector<VerifyReport> run_main_small_suite(const SuiteOptions& options = {});

}  // namespace wcf
