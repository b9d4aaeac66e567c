#include "wcf/report.hpp"

#include <algorithm>

namespace wcf {

const char* to_string(Relation relation) {
    switch (relation) {
        case Relation::Le: return "<=";
        case Relation::Lt: return "<";
        case Relation::Eq: return "=";
        case Relation::Ge: return ">=";
    }
    return "?";
}

const char* to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::Pass: return "pass";
        case Outcome::Fail: return "fail";
        case Outcome::HypothesisNotMet: return "hypothesis-not-met";
        case Outcome::Inconclusive: return "inconclusive";
    }
    return "?";
}

bool relation_holds(Relation relation, const BigRat& lhs, const BigRat& rhs) {
    switch (relation) {
        case Relation::Le: return lhs <= rhs;
        case Relation::Lt: return lhs < rhs;
        case Relation::Eq: return lhs == rhs;
        case Relation::Ge: return lhs >= rhs;
    }
    return false;
}

void VerifyReport::add_param(const std::string& key, std::int64_t value) {
    params.push_back({key, std::to_string(value), true});
}

void VerifyReport::add_param(const std::string& key, const std::string& text) {
    params.push_back({key, text, false});
}

void VerifyReport::judge() {
    outcome = relation_holds(relation, lhs, rhs) ? Outcome::Pass : Outcome::Fail;
}

std::string VerifyReport::sort_key() const {
    std::string key = case_id;
    key += '[';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i > 0) key += ',';
        key += params[i].key;
        key += '=';
        // zero-pad numerics so the textual sort follows numeric order
        if (params[i].numeric && params[i].text.size() < 8 && params[i].text[0] != '-') {
            key.append(8 - params[i].text.size(), '0');
        }
        key += params[i].text;
    }
    key += ']';
    return key;
}

void sort_reports(std::vector<VerifyReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const VerifyReport& a, const VerifyReport& b) {
                         return a.sort_key() < b.sort_key();
                     });
}

}  // namespace wcf
