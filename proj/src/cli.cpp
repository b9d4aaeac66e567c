#include "wcf/cli.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wcf/constructions.hpp"
#include "wcf/errors.hpp"
#include "wcf/verify.hpp"

namespace wcf {

namespace {

using Json = nlohmann::ordered_json;

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

Json params_json(const std::vector<ReportParam>& params) {
    Json obj = Json::object();
    for (const ReportParam& p : params) {
        if (p.numeric) {
            obj[p.key] = std::stoll(p.text);
        } else {
            obj[p.key] = p.text;
        }
    }
    return obj;
}

std::string params_text(const std::vector<ReportParam>& params) {
    std::string out;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i > 0) out += ';';
        out += params[i].key;
        out += '=';
        out += params[i].text;
    }
    return out;
}

Json report_json(const VerifyReport& r) {
    Json obj = Json::object();
    obj["case_id"] = r.case_id;
    obj["params"] = params_json(r.params);
    obj["lhs"] = rat_string(r.lhs);
    obj["rhs"] = rat_string(r.rhs);
    obj["relation"] = to_string(r.relation);
    obj["outcome"] = to_string(r.outcome);
    obj["pass"] = r.pass();
    obj["detail"] = r.detail;
    return obj;
}

std::string report_csv_row(const VerifyReport& r) {
    std::string row = r.case_id;
    row += ',' + csv_field(params_text(r.params));
    row += ',' + csv_field(rat_string(r.lhs));
    row += ',' + csv_field(to_string(r.relation));
    row += ',' + csv_field(rat_string(r.rhs));
    row += ',';
    row += to_string(r.outcome);
    row += ',' + csv_field(r.detail);
    return row;
}

std::string report_text_line(const VerifyReport& r) {
    std::string line = r.case_id + "[" + params_text(r.params) + "] " + rat_string(r.lhs) + " " +
                       to_string(r.relation) + " " + rat_string(r.rhs) + " : " +
                       to_string(r.outcome);
    if (!r.detail.empty()) line += " (" + r.detail + ")";
    return line;
}

Json search_result_json(const SearchResult& r) {
    Json obj = Json::object();
    obj["best_size"] = r.best_size;
    obj["optimal"] = r.optimal;
    obj["nodes_explored"] = r.nodes_explored;
    obj["budget_exhausted"] = r.budget_exhausted;
    Json witness = Json::array();
    for (const Composition& u : r.witness.members()) witness.push_back(format_parts(u));
    obj["witness"] = witness;
    return obj;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(value);
        } catch (const std::exception&) {
            throw DomainError(std::string(what) + ": bad list entry '" + token + "'");
        }
    }
    if (out.empty()) throw DomainError(std::string(what) + ": empty list");
    return out;
}

// Document under assembly. json is the canonical format; csv and text are
// per-command projections of the same content.
struct Output {
    std::string command;
    Json params = Json::object();
    Json results = Json::array();
    Json failures = Json::array();
    std::vector<std::string> text_lines;
    std::vector<std::string> csv_lines;
};

void emit(std::ostream& out, const Output& doc, const std::string& format,
          long long elapsed_ms) {
    if (format == "json") {
        Json root = Json::object();
        root["command"] = doc.command;
        root["params"] = doc.params;
        root["results"] = doc.results;
        root["failures"] = doc.failures;
        root["elapsed_ms"] = elapsed_ms;
        out << root.dump(2) << '\n';
    } else if (format == "csv") {
        for (const std::string& line : doc.csv_lines) out << line << '\n';
    } else {
        for (const std::string& line : doc.text_lines) out << line << '\n';
    }
}

constexpr const char* kReportCsvHeader = "case_id,params,lhs,relation,rhs,outcome,detail";

int exec_enumerate(Output& doc, std::int64_t n, int l, std::uint64_t cap) {
    doc.params["n"] = n;
    doc.params["l"] = l;
    doc.params["cap"] = cap;
    const auto members = enumerate_space(SpaceId{n, l}, cap);
    std::string header;
    for (int i = 1; i <= l; ++i) {
        if (i > 1) header += ',';
        header += "p" + std::to_string(i);
    }
    doc.csv_lines.push_back(header);
    for (const Composition& u : members) {
        const std::string line = format_parts(u);
        doc.results.push_back(line);
        doc.text_lines.push_back(line);
        doc.csv_lines.push_back(line);
    }
    return 0;
}

int exec_bound(Output& doc, std::int64_t n, int l, int t) {
    doc.params["n"] = n;
    doc.params["l"] = l;
    doc.params["t"] = t;
    const HMBound bound = hm_bound(n, l, t);
    Json obj = Json::object();
    obj["value"] = bound.value.str();
    obj["union_size"] = bound.union_size.str();
    doc.results.push_back(obj);
    doc.text_lines.push_back(bound.value.str());
    doc.csv_lines.push_back("key,value");
    doc.csv_lines.push_back("value," + bound.value.str());
    doc.csv_lines.push_back("union_size," + bound.union_size.str());
    return 0;
}

// Pairwise checks are quadratic; beyond this size the construct and check
// commands report them as skipped instead of stalling.
constexpr std::size_t kPairwiseCheckCap = 20'000;
constexpr std::uint64_t kMaximalityProbeCap = 50'000;

int exec_construct(Output& doc, std::int64_t n, int l, int t, const std::string& coords_text,
                   const std::string& emit_mode, std::uint64_t cap) {
    doc.params["n"] = n;
    doc.params["l"] = l;
    doc.params["t"] = t;
    std::vector<int> coords;
    if (!coords_text.empty()) coords = parse_int_list(coords_text, "construct --T");
    doc.params["T"] = coords_text;
    doc.params["emit"] = emit_mode;

    const Family family = hm_extremal_family(n, l, t, coords, cap);
    const HMBound bound = hm_bound(n, l, t);
    const bool matches_bound = BigInt(static_cast<std::int64_t>(family.size())) == bound.value;

    if (emit_mode == "family") {
        doc.csv_lines.push_back("parts");
        for (const Composition& u : family.members()) {
            const std::string line = format_parts(u);
            doc.results.push_back(line);
            doc.text_lines.push_back(line);
            doc.csv_lines.push_back(csv_field(line));
        }
    } else {
        Json obj = Json::object();
        obj["size"] = family.size();
        obj["bound"] = bound.value.str();
        obj["union_size"] = bound.union_size.str();
        obj["size_matches_bound"] = matches_bound;
        std::string intersecting = "skipped (family too large)";
        std::string classification = "skipped (family too large)";
        if (family.size() <= kPairwiseCheckCap) {
            const bool ok = is_t_intersecting(family, t);
            intersecting = ok ? "yes" : "no";
            if (ok) classification = to_string(classify_family(family, t).kind);
        }
        obj["t_intersecting"] = intersecting;
        obj["classification"] = classification;
        std::string maximal = "skipped (space too large)";
        if (count_space(family.space()) <= kMaximalityProbeCap &&
            family.size() <= kPairwiseCheckCap && intersecting == "yes") {
            maximal = is_maximal_t_intersecting(family, t) ? "yes" : "no";
        }
        obj["maximal_t_intersecting"] = maximal;
        doc.results.push_back(obj);

        doc.text_lines.push_back("size: " + std::to_string(family.size()));
        doc.text_lines.push_back("bound: " + bound.value.str());
        doc.text_lines.push_back(std::string("size_matches_bound: ") +
                                 (matches_bound ? "yes" : "no"));
        doc.text_lines.push_back("t_intersecting: " + intersecting);
        doc.text_lines.push_back("classification: " + classification);
        doc.text_lines.push_back("maximal_t_intersecting: " + maximal);
        doc.csv_lines.push_back("key,value");
        doc.csv_lines.push_back("size," + std::to_string(family.size()));
        doc.csv_lines.push_back("bound," + bound.value.str());
        doc.csv_lines.push_back(std::string("size_matches_bound,") + (matches_bound ? "yes" : "no"));
        doc.csv_lines.push_back("t_intersecting," + csv_field(intersecting));
        doc.csv_lines.push_back("classification," + csv_field(classification));
        doc.csv_lines.push_back("maximal_t_intersecting," + csv_field(maximal));
    }

    if (!matches_bound) {
        Json failure = Json::object();
        failure["case_id"] = "CONSTRUCT";
        failure["detail"] = "constructed family size " + std::to_string(family.size()) +
                            " differs from bound " + bound.value.str();
        doc.failures.push_back(failure);
        doc.text_lines.push_back("FAIL: size differs from bound");
        return 1;
    }
    return 0;
}

int exec_check(Output& doc, const std::string& path, int t) {
    doc.params["family"] = path;
    doc.params["t"] = t;
    if (t < 1) throw DomainError("check: t must be >= 1");

    std::ifstream in(path);
    if (!in) throw DomainError("check: cannot open family file '" + path + "'");
    std::vector<Composition> members;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        members.push_back(parse_parts(line));
    }
    if (members.empty()) throw DomainError("check: family file has no compositions");
    const SpaceId space = members.front().space();
    const Family family = Family::of(space, std::move(members));

    VerifyReport report;
    report.case_id = "CHECK";
    report.add_param("n", space.n);
    report.add_param("l", space.l);
    report.add_param("t", t);
    report.add_param("size", static_cast<std::int64_t>(family.size()));

    int min_agreement = space.l;
    std::string counterexample;
    if (family.size() <= kPairwiseCheckCap) {
        const auto& m = family.members();
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = i + 1; j < m.size(); ++j) {
                const int a = agreement_size(m[i], m[j]);
                if (a < min_agreement) {
                    min_agreement = a;
                    counterexample = format_parts(m[i]) + " | " + format_parts(m[j]);
                }
            }
        }
    } else {
        throw ResourceLimitError("check: family too large for the pairwise check");
    }
    report.lhs = BigRat(min_agreement);
    report.rhs = BigRat(t);
    report.relation = Relation::Ge;
    report.judge();

    std::string classification = "not applicable";
    std::string maximal = "skipped (space too large)";
    if (report.pass()) {
        classification = to_string(classify_family(family, t).kind);
        if (count_space(space) <= kMaximalityProbeCap) {
            maximal = is_maximal_t_intersecting(family, t) ? "yes" : "no";
        }
        report.detail = "classification " + classification + "; independent: " +
                        (is_independent(family) ? "yes" : "no") + "; maximal: " + maximal;
    } else {
        report.detail = "pair with minimum agreement: " + counterexample;
    }

    doc.results.push_back(report_json(report));
    doc.csv_lines.push_back(kReportCsvHeader);
    doc.csv_lines.push_back(report_csv_row(report));
    doc.text_lines.push_back(report_text_line(report));
    if (report.failed()) {
        doc.failures.push_back(report_json(report));
        return 1;
    }
    return 0;
}

int exec_search(Output& doc, std::int64_t n, int l, int t, const std::string& constraint_name,
                const SearchOptions& options) {
    doc.params["n"] = n;
    doc.params["l"] = l;
    doc.params["t"] = t;
    doc.params["constraint"] = constraint_name;
    doc.params["budget"] = options.node_budget;
    doc.params["workers"] = options.workers;

    const SearchConstraint constraint = constraint_name == "nontrivial"
                                            ? SearchConstraint::NoTFixation
                                            : SearchConstraint::Any;
    const SearchResult result = max_t_intersecting(SpaceId{n, l}, t, constraint, options);
    doc.results.push_back(search_result_json(result));

    doc.text_lines.push_back("best_size: " + std::to_string(result.best_size));
    doc.text_lines.push_back(std::string("optimal: ") + (result.optimal ? "yes" : "no"));
    doc.text_lines.push_back("nodes_explored: " + std::to_string(result.nodes_explored));
    for (const Composition& u : result.witness.members()) {
        doc.text_lines.push_back(format_parts(u));
    }
    doc.csv_lines.push_back("best_size,optimal,nodes_explored,budget_exhausted,witness");
    std::string witness;
    for (const Composition& u : result.witness.members()) {
        if (!witness.empty()) witness += ' ';
        witness += format_parts(u);
    }
    doc.csv_lines.push_back(std::to_string(result.best_size) + ',' +
                            (result.optimal ? "true" : "false") + ',' +
                            std::to_string(result.nodes_explored) + ',' +
                            (result.budget_exhausted ? "true" : "false") + ',' +
                            csv_field(witness));
    return result.optimal ? 0 : 3;
}

int exec_verify(Output& doc, const std::string& suite, const SuiteOptions& options) {
    doc.params["suite"] = suite;
    doc.params["max_m"] = options.max_m;
    doc.params["max_n"] = options.max_n;
    doc.params["seed"] = options.seed;
    doc.params["budget"] = options.search.node_budget;
    doc.params["workers"] = options.search.workers;

    std::vector<VerifyReport> reports;
    const auto append = [&reports](std::vector<VerifyReport>&& more) {
        for (VerifyReport& r : more) reports.push_back(std::move(r));
    };
    if (suite == "section2" || suite == "all") append(run_section2_suite(options));
    if (suite == "section3" || suite == "all") append(run_section3_suite(options));
    if (suite == "construction" || suite == "all") append(run_construction_suite(options));
    if (suite == "main-small" || suite == "all") append(run_main_small_suite(options));

    // Pass volume is summarised per case id; failures are reported in full.
    std::vector<std::string> case_order;
    std::map<std::string, std::array<std::int64_t, 4>> tally;  // pass, fail, hnm, inconclusive
    for (const VerifyReport& r : reports) {
        auto [it, inserted] = tally.try_emplace(r.case_id);
        if (inserted) case_order.push_back(r.case_id);
        switch (r.outcome) {
            case Outcome::Pass: ++it->second[0]; break;
            case Outcome::Fail: ++it->second[1]; break;
            case Outcome::HypothesisNotMet: ++it->second[2]; break;
            case Outcome::Inconclusive: ++it->second[3]; break;
        }
    }
    std::sort(case_order.begin(), case_order.end());

    doc.csv_lines.push_back("case_id,checked,pass,fail,hypothesis_not_met,inconclusive");
    std::int64_t failures = 0;
    for (const std::string& case_id : case_order) {
        const auto& counts = tally[case_id];
        const std::int64_t checked = counts[0] + counts[1] + counts[2] + counts[3];
        failures += counts[1];
        Json obj = Json::object();
        obj["case_id"] = case_id;
        obj["checked"] = checked;
        obj["pass"] = counts[0];
        obj["fail"] = counts[1];
        obj["hypothesis_not_met"] = counts[2];
        obj["inconclusive"] = counts[3];
        doc.results.push_back(obj);
        doc.text_lines.push_back(case_id + ": " + std::to_string(checked) + " checked, " +
                                 std::to_string(counts[0]) + " pass, " +
                                 std::to_string(counts[1]) + " fail, " +
                                 std::to_string(counts[2]) + " hypothesis-not-met, " +
                                 std::to_string(counts[3]) + " inconclusive");
        doc.csv_lines.push_back(case_id + ',' + std::to_string(checked) + ',' +
                                std::to_string(counts[0]) + ',' + std::to_string(counts[1]) + ',' +
                                std::to_string(counts[2]) + ',' + std::to_string(counts[3]));
    }
    for (const VerifyReport& r : reports) {
        if (r.failed()) {
            doc.failures.push_back(report_json(r));
            doc.text_lines.push_back("FAIL " + report_text_line(r));
        } else if (r.outcome == Outcome::Inconclusive) {
            doc.text_lines.push_back("INCONCLUSIVE " + report_text_line(r));
        }
    }
    doc.text_lines.push_back("total: " + std::to_string(reports.size()) + " checked, " +
                             std::to_string(failures) + " failures");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();

    CLI::App app{"weak-composition intersecting-family toolkit"};
    app.require_subcommand(1);
    std::string format = "text";
    bool timing = false;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_flag("--timing", timing,
                 "report wall-clock elapsed_ms (default 0 for reproducible output)");

    std::int64_t n = 0;
    int l = 0;
    int t = 1;
    std::uint64_t cap = kDefaultEnumerationCap;
    std::string coords_text;
    std::string emit_mode = "summary";
    std::string family_path;
    std::string constraint_name = "any";
    std::uint64_t budget = kDefaultNodeBudget;
    int workers = 1;
    std::string suite;
    std::int64_t max_m = 0;
    std::int64_t max_n = 0;
    std::uint64_t seed = 1;

    CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "list P(n,l) in lexicographic order");
    cmd_enumerate->add_option("--n", n)->required();
    cmd_enumerate->add_option("--l", l)->required();
    cmd_enumerate->add_option("--cap", cap);

    CLI::App* cmd_bound = app.add_subcommand("bound", "evaluate the extremal size bound");
    cmd_bound->add_option("--n", n)->required();
    cmd_bound->add_option("--l", l)->required();
    cmd_bound->add_option("--t", t)->required();

    CLI::App* cmd_construct = app.add_subcommand("construct", "build the extremal family");
    cmd_construct->add_option("--n", n)->required();
    cmd_construct->add_option("--l", l)->required();
    cmd_construct->add_option("--t", t)->required();
    cmd_construct->add_option("--T", coords_text, "comma-separated coordinate t-set");
    cmd_construct->add_option("--emit", emit_mode)->check(CLI::IsMember({"family", "summary"}));
    cmd_construct->add_option("--cap", cap);

    CLI::App* cmd_check = app.add_subcommand("check", "check a family file for t-intersection");
    cmd_check->add_option("--family", family_path)->required();
    cmd_check->add_option("--t", t)->required();

    CLI::App* cmd_search = app.add_subcommand("search", "exact maximum family search");
    cmd_search->add_option("--n", n)->required();
    cmd_search->add_option("--l", l)->required();
    cmd_search->add_option("--t", t)->required();
    cmd_search->add_option("--constraint", constraint_name)
        ->check(CLI::IsMember({"any", "nontrivial"}));
    cmd_search->add_option("--budget", budget);
    cmd_search->add_option("--workers", workers);

    CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"section2", "section3", "construction", "main-small", "all"}));
    cmd_verify->add_option("--max-m", max_m);
    cmd_verify->add_option("--max-n", max_n);
    cmd_verify->add_option("--seed", seed);
    cmd_verify->add_option("--budget", budget);
    cmd_verify->add_option("--workers", workers);

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.push_back("wcf");
    for (const std::string& a : args) argv_storage.push_back(a);
    std::vector<const char*> argv;
    argv.reserve(argv_storage.size());
    for (const std::string& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    Output doc;
    int code = 2;
    try {
        if (app.got_subcommand(cmd_enumerate)) {
            doc.command = "enumerate";
            code = exec_enumerate(doc, n, l, cap);
        } else if (app.got_subcommand(cmd_bound)) {
            doc.command = "bound";
            code = exec_bound(doc, n, l, t);
        } else if (app.got_subcommand(cmd_construct)) {
            doc.command = "construct";
            code = exec_construct(doc, n, l, t, coords_text, emit_mode, cap);
        } else if (app.got_subcommand(cmd_check)) {
            doc.command = "check";
            code = exec_check(doc, family_path, t);
        } else if (app.got_subcommand(cmd_search)) {
            doc.command = "search";
            SearchOptions options;
            options.node_budget = budget;
            options.workers = workers;
            code = exec_search(doc, n, l, t, constraint_name, options);
        } else if (app.got_subcommand(cmd_verify)) {
            doc.command = "verify";
            SuiteOptions options;
            options.max_m = max_m;
            options.max_n = max_n;
            options.seed = seed;
            options.search.node_budget = budget;
            options.search.workers = workers;
            code = exec_verify(doc, suite, options);
        }
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    const auto stop = std::chrono::steady_clock::now();
    const long long elapsed =
        timing ? std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count() : 0;
    emit(out, doc, format, elapsed);
    return code;
}

}  // namespace wcf
