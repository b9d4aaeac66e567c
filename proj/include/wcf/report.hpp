#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wcf/bigint.hpp"

namespace wcf {

enum class Relation { Le, Lt, Eq, Ge };
enum class Outcome { Pass, Fail, HypothesisNotMet, Inconclusive };

const char* to_string(Relation relation);
const char* to_string(Outcome outcome);

bool relation_holds(Relation relation, const BigRat& lhs, const BigRat& rhs);

/// One named parameter of a verification run, rendered as text. Numeric
/// parameters keep their flag so report emitters can format them as numbers.
struct ReportParam {
    std::string key;
    std::string text;
    bool numeric = false;
};

/// Structured pass/fail outcome of one verified statement, carrying both
/// sides of the checked relation as exact values.
struct VerifyReport {
    std::string case_id;
    std::vector<ReportParam> params;
    BigRat lhs;
    BigRat rhs;
    Relation relation = Relation::Eq;
    Outcome outcome = Outcome::Pass;
    std::string detail;

    bool pass() const { return outcome == Outcome::Pass; }
    bool failed() const { return outcome == Outcome::Fail; }

    void add_param(const std::string& key, std::int64_t value);
    void add_param(const std::string& key, const std::string& text);

    /// Sets outcome from the stored relation, keeping the lhs/rhs invariant.
    void judge();

    /// "case_id[k=v,...]" key for deterministic sorting of suite output.
    std::string sort_key() const;
};

void sort_reports(std::vector<VerifyReport>& reports);

}  // namespace wcf
