#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wcf/errors.hpp"
#include "wcf/verify.hpp"

using namespace wcf;

TEST_CASE("T2_4 on the pinned example") {
    FamilyIneqParams p;
    p.m = 2;
    p.r = 3;
    p.S = {1};
    p.y = {1, 0, 0};
    const VerifyReport report = verify_family_inequality(FamilyIneqCase::T2_4, p);
    CHECK(report.outcome == Outcome::Pass);
    CHECK(report.lhs == 2);  // D = {(1,0,1),(1,1,0)}
    CHECK(report.rhs == 3);  // C = {(0,0,2),(0,1,1),(0,2,0)}
    CHECK(report.relation == Relation::Lt);
}

TEST_CASE("L2_2 on the pinned examples") {
    FamilyIneqParams p;
    p.m = 3;
    p.r = 4;
    p.k = 2;
    p.y = {1, 2};
    const VerifyReport strict = verify_family_inequality(FamilyIneqCase::L2_2, p);
    CHECK(strict.outcome == Outcome::Pass);
    CHECK(strict.lhs == 1);
    CHECK(strict.rhs == 3);
    CHECK(strict.rhs == BigRat(binomial(3 - 1 + 1, 1)));  // closed form

    p.y = {1, 0};
    const VerifyReport equal = verify_family_inequality(FamilyIneqCase::L2_2, p);
    CHECK(equal.outcome == Outcome::Pass);
    CHECK(equal.relation == Relation::Eq);
    CHECK(equal.detail.find("case (a)") != std::string::npos);
}

TEST_CASE("L2_1 and L2_3 spot checks") {
    FamilyIneqParams p;
    p.m = 4;
    p.r = 3;
    p.y = {1, 2, 0};
    CHECK(verify_family_inequality(FamilyIneqCase::L2_1, p).outcome == Outcome::Pass);

    p = FamilyIneqParams{};
    p.m = 4;
    p.r = 4;
    p.k = 3;
    p.k0 = 2;
    p.y = {1, 0, 2};
    const VerifyReport ok = verify_family_inequality(FamilyIneqCase::L2_3, p);
    CHECK(ok.outcome == Outcome::Pass);
    CHECK(ok.relation == Relation::Eq);  // y_{k0} = 0 is case (a)

    p.y = {1, 2, 2};
    const VerifyReport strict = verify_family_inequality(FamilyIneqCase::L2_3, p);
    CHECK(strict.outcome == Outcome::Pass);
    CHECK(strict.relation == Relation::Lt);
}

TEST_CASE("L2_3 strictness genuinely fails at the r=3 edge") {
    // |D| = |C| although y_{k0} > 0: with r = 3 the proof's witness tuple
    // needs two free coordinates but only one exists. Verified by hand:
    // C = {u(2)=4 or u(1)=0} and D = {u(1)=1 or u(2)=4} both have 5 members
    // in P(4,3). The verifier must detect this, not paper over it.
    FamilyIneqParams p;
    p.m = 4;
    p.r = 3;
    p.k = 2;
    p.k0 = 1;
    p.y = {1, 4};
    const VerifyReport report = verify_family_inequality(FamilyIneqCase::L2_3, p);
    CHECK(report.outcome == Outcome::Fail);
    CHECK(report.lhs == 5);
    CHECK(report.rhs == 5);
    CHECK(report.relation == Relation::Lt);
}

TEST_CASE("C2_5 spot checks against the binomial-sum bound") {
    FamilyIneqParams p;
    p.m = 5;
    p.r = 3;
    p.t = 1;
    p.w = {1};
    p.S = {2, 3};
    p.y = {2, 1, 0};  // y_2 = 2, y_3 = 1, y_4 = 0
    const VerifyReport report = verify_family_inequality(FamilyIneqCase::C2_5, p);
    CHECK(report.outcome == Outcome::Pass);
    BigInt expected = 0;
    for (std::int64_t d = 0; d <= 1; ++d) expected += testing::pascal_binomial(5 - 1 - d + 1, 1);
    CHECK(report.rhs == BigRat(expected));
}

TEST_CASE("hypothesis gates produce hypothesis-not-met, not pass or fail") {
    FamilyIneqParams p;
    p.m = 1;
    p.r = 3;
    p.k = 2;
    p.k0 = 1;
    p.y = {1, 1};
    CHECK(verify_family_inequality(FamilyIneqCase::L2_3, p).outcome ==
          Outcome::HypothesisNotMet);  // m < k

    p = FamilyIneqParams{};
    p.m = 3;
    p.r = 3;
    p.S = {1, 2};
    p.y = {0, 0, 5};
    CHECK(verify_family_inequality(FamilyIneqCase::T2_4, p).outcome ==
          Outcome::HypothesisNotMet);  // selected y values sum to 0

    NumericParams q;
    q.m = 3;
    q.n = 3;
    CHECK(verify_numeric(NumericCase::L3_4, q).outcome == Outcome::HypothesisNotMet);
}

TEST_CASE("malformed verifier parameters throw") {
    FamilyIneqParams p;
    p.m = 2;
    p.r = 3;
    p.y = {1, 1};  // needs r values
    CHECK_THROWS_AS(verify_family_inequality(FamilyIneqCase::L2_1, p), DomainError);
}

TEST_CASE("L3_4 on the pinned example") {
    NumericParams p;
    p.n = 5;
    p.m = 3;
    const VerifyReport report = verify_numeric(NumericCase::L3_4, p);
    CHECK(report.outcome == Outcome::Pass);
    CHECK(report.lhs == 52);  // 56 - 4
    CHECK(report.rhs == 50);  // 4 * 25 / 2
}

TEST_CASE("hockey stick on the pinned example") {
    NumericParams p;
    p.n = 5;
    p.l = 5;
    p.t = 1;
    const VerifyReport report = verify_numeric(NumericCase::Hockey, p);
    CHECK(report.outcome == Outcome::Pass);
    CHECK(report.lhs == 52);
    CHECK(report.rhs == BigRat(21 + 15 + 10 + 6));
}

TEST_CASE("L3_3 equality at r <= 2 and inequality beyond") {
    NumericParams p;
    p.x = {BigRat(1), BigRat(1)};
    const VerifyReport pair = verify_numeric(NumericCase::L3_3, p);
    CHECK(pair.outcome == Outcome::Pass);
    CHECK(pair.relation == Relation::Eq);
    CHECK(pair.lhs == 4);
    CHECK(pair.rhs == 4);

    p.x = {BigRat(1) / 2};
    const VerifyReport single = verify_numeric(NumericCase::L3_3, p);
    CHECK(single.outcome == Outcome::Pass);
    CHECK(single.relation == Relation::Eq);

    p.x = {BigRat(1) / 2, BigRat(2) / 3, BigRat(5)};
    const VerifyReport triple = verify_numeric(NumericCase::L3_3, p);
    CHECK(triple.outcome == Outcome::Pass);
    CHECK(triple.relation == Relation::Ge);

    p.x = {BigRat(-1)};
    CHECK(verify_numeric(NumericCase::L3_3, p).outcome == Outcome::HypothesisNotMet);
}

TEST_CASE("L3_5 is strict on a small grid") {
    for (std::int64_t m = 1; m <= 5; ++m) {
        for (std::int64_t n = m; n <= 20; ++n) {
            NumericParams p;
            p.m = m;
            p.n = n;
            REQUIRE(verify_numeric(NumericCase::L3_5, p).outcome == Outcome::Pass);
        }
    }
}

TEST_CASE("L3_6 threshold values and the pinned evaluation") {
    CHECK(lemma36_threshold(BigRat(1), BigRat(1), 2) == 36);  // max(2, 2, 16, 36)
    CHECK(lemma36_threshold(BigRat(2), BigRat(2), 4) == 2304);
    CHECK(lemma36_threshold(BigRat(1) / 2, BigRat(1) / 2, 2) == 64);  // (4/(1/2))^2 dominates
    CHECK(lemma36_threshold(BigRat(3), BigRat(1), 1) == 81);  // (3fgm)^2 dominates

    NumericParams p;
    p.m = 2;
    p.f = BigRat(1);
    p.g = BigRat(1);
    p.n = 36;
    const VerifyReport report = verify_numeric(NumericCase::L3_6, p);
    CHECK(report.outcome == Outcome::Pass);
    // direct evaluation at the threshold: 703 + 6*37 = 925 < 1296
    CHECK(report.detail.find("925") != std::string::npos);
    CHECK(report.detail.find("1296") != std::string::npos);

    p.n = 35;
    CHECK(verify_numeric(NumericCase::L3_6, p).outcome == Outcome::HypothesisNotMet);
}

TEST_CASE("verify_hm_construction on pinned examples") {
    const VerifyReport big = verify_hm_construction(10, 5, 1);
    CHECK(big.outcome == Outcome::Pass);
    CHECK(big.lhs == 203);

    const VerifyReport degenerate = verify_hm_construction(1, 5, 1);
    CHECK(degenerate.outcome == Outcome::Pass);
    CHECK(degenerate.lhs == 5);
    CHECK(degenerate.detail.find("degenerate") != std::string::npos);

    const VerifyReport two = verify_hm_construction(4, 7, 2);
    CHECK(two.outcome == Outcome::Pass);
    CHECK(two.lhs == BigRat(hm_bound(4, 7, 2).value));

    CHECK_THROWS_AS(verify_hm_construction(3, 4, 1), DomainError);  // l < 2t + 3
}

TEST_CASE("verify_main_small matches the subset oracle at (2,5,1)") {
    const VerifyReport report = verify_main_small(2, 5, 1);
    CHECK(report.outcome == Outcome::Pass);
    const auto oracle = testing::brute_max_family(enumerate_space({2, 5}), 1);
    CHECK(report.lhs == BigRat(static_cast<std::int64_t>(oracle.best_no_fix)));
}

TEST_CASE("verify_main_small at n=1 reaches the bound") {
    const VerifyReport report = verify_main_small(1, 5, 1);
    CHECK(report.outcome == Outcome::Pass);
    CHECK(report.lhs == 5);
    CHECK(report.rhs == 5);
    CHECK(report.detail.find("equals hm_bound") != std::string::npos);
    CHECK(report.detail.find("every optimum has the extremal structure") != std::string::npos);
}

TEST_CASE("verify_main_small with zero budget is inconclusive, not failing") {
    SearchOptions options;
    options.node_budget = 0;
    const VerifyReport report = verify_main_small(2, 5, 1, options);
    CHECK(report.outcome == Outcome::Inconclusive);
}

TEST_CASE("section2 suite: only the known L2_3 strictness gap fails") {
    SuiteOptions options;
    options.max_m = 3;
    const auto reports = run_section2_suite(options);
    CHECK(reports.size() > 1000);
    std::size_t failures = 0;
    for (const VerifyReport& r : reports) {
        if (r.failed()) {
            ++failures;
            REQUIRE(r.case_id == "L2_3");
            REQUIRE(r.lhs == r.rhs);  // counterexamples are exact equalities
        }
    }
    CHECK(failures == 4);  // (m,y) in {(2,(1,2)),(2,(2,1)),(3,(1,3)),(3,(3,1))}
}

TEST_CASE("section3 suite passes on a reduced grid") {
    SuiteOptions options;
    options.max_n = 12;
    options.max_m = 4;
    options.seed = 99;
    for (const VerifyReport& r : run_section3_suite(options)) {
        REQUIRE(r.outcome == Outcome::Pass);
    }
}

TEST_CASE("construction suite passes with the spot value") {
    SuiteOptions options;
    options.max_n = 6;
    bool saw_spot = false;
    for (const VerifyReport& r : run_construction_suite(options)) {
        REQUIRE(r.outcome == Outcome::Pass);
        if (r.case_id == "HM_BOUND_SPOT") {
            saw_spot = true;
            CHECK(r.lhs == 203);
        }
    }
    CHECK(saw_spot);
}

TEST_CASE("main-small suite asserts feasibility for n in {1,2,3}") {
    for (const VerifyReport& r : run_main_small_suite({})) {
        REQUIRE(r.outcome == Outcome::Pass);
        REQUIRE(relation_holds(Relation::Ge, r.lhs, r.rhs));
    }
}
