#include "sspc/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sspc/audit.hpp"

namespace sspc::cli {

namespace {

std::string slurp(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    ss << in.rdbuf();
    return ss.str();
}

const char* to_string(PartialCase c) {
    switch (c) {
        case PartialCase::some_diagonal_unspecified: return "some-diagonal-unspecified";
        case PartialCase::diagonal_specified_incomplete: return "diagonal-specified-incomplete";
        case PartialCase::fully_specified: return "fully-specified";
    }
    return "?";
}

// "1..4" or a single "3".
std::pair<int, int> parse_orders(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ParseError("bad --orders value '" + s + "' (expected A..B)");
    }
}

void print_status(std::ostream& out, const PatternStatus& st) {
    out << "class: " << to_string(st.target) << "\n";
    out << "verdict: " << to_string(st.verdict) << "\n";
    if (st.proof) out << "proof: " << to_string(*st.proof) << "\n";
    out << "samples: " << st.samples.requested << " requested, " << st.samples.generated
        << " generated, " << st.samples.completed << " completed\n";
    out << "evaluations: " << st.evaluations << "\n";
    out << "seed: " << st.seed << "\n";
    for (const CompletionCertificate& c : st.completions) {
        out << "completion of:\n" << c.partial.to_text() << "gives:\n" << c.completed.to_text();
    }
    if (st.zero_det)
        out << "zero-determinant witness:\n"
            << st.zero_det->witness.to_text() << "determinant: " << st.zero_det->determinant.text()
            << "\n";
    if (st.forced_pair)
        out << "forced-pair witness at (" << st.forced_pair->i << "," << st.forced_pair->j
            << "):\n"
            << st.forced_pair->witness.to_text();
    if (st.hard_witness) out << "hard witness:\n" << st.hard_witness->to_text();
    if (!st.note.empty()) out << "note: " << st.note << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact tools for sign symmetric matrix class completion"};
    app.require_subcommand(1);

    std::string file;
    std::string class_name = "ssp01plus";
    std::uint64_t seed = 1;
    std::uint64_t budget = 20000;
    int samples = 50;
    bool parallel = false;

    CLI::App* check_class = app.add_subcommand("check-class", "membership of a fully specified matrix");
    check_class->add_option("file", file, "matrix file, - for stdin")->required();
    check_class->add_option("--class", class_name, "target class")->required();

    CLI::App* check_partial =
        app.add_subcommand("check-partial", "partial membership of a matrix with holes");
    check_partial->add_option("file", file)->required();
    check_partial->add_option("--class", class_name, "target class (default ssp01plus)");

    CLI::App* complete = app.add_subcommand("complete", "search for a verified completion");
    complete->add_option("file", file)->required();
    complete->add_option("--class", class_name)->required();
    complete->add_option("--seed", seed);
    complete->add_option("--budget", budget);

    CLI::App* symdet = app.add_subcommand("sym-det", "symbolic determinant of the lift");
    symdet->add_option("file", file)->required();

    int order = 3;
    bool all_loops = true;
    CLI::App* enumerate = app.add_subcommand("enumerate", "patterns up to isomorphism");
    enumerate->add_option("--order", order, "number of vertices")->required();
    enumerate->add_flag("--all-loops,!--no-all-loops", all_loops,
                        "restrict to the all-loops universe (default)");
    enumerate->add_flag("--parallel", parallel);

    CLI::App* classify = app.add_subcommand("classify", "completability verdict for one pattern");
    classify->add_option("--pattern", file, "pattern file")->required();
    classify->add_option("--class", class_name);
    classify->add_option("--seed", seed);
    classify->add_option("--budget", budget);
    classify->add_option("--samples", samples);

    std::string orders = "1..4";
    std::string out_path;
    std::string format = "json";
    CLI::App* audit = app.add_subcommand("audit", "classify every pattern and compare tallies");
    audit->add_option("--orders", orders, "order range A..B (default 1..4)");
    audit->add_option("--class", class_name);
    audit->add_option("--seed", seed);
    audit->add_option("--budget", budget);
    audit->add_option("--samples", samples);
    audit->add_option("--out", out_path, "write the report here instead of stdout");
    audit->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    audit->add_flag("--parallel", parallel);

    std::optional<int> row;
    std::optional<std::string> claim;
    CLI::App* verify = app.add_subcommand("verify-certificate", "re-validate report certificates");
    verify->add_option("report", file, "report JSON file")->required();
    verify->add_option("--row", row, "single pattern row index");
    verify->add_option("--claim", claim, "single claim id");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check_class->parsed()) {
            ExactMatrix m = parse_matrix(slurp(file));
            out << is_member(m, parse_class(class_name)).describe() << "\n";
            return 0;
        }
        if (check_partial->parsed()) {
            PartialMatrix p = parse_partial_matrix(slurp(file));
            PartialVerdict v = is_partial_member_for(p, parse_class(class_name));
            out << "case: " << to_string(v.pcase) << "\n";
            if (v.member)
                out << "partial member\n";
            else
                out << "not a partial member: " << v.reason << "\n";
            return 0;
        }
        if (complete->parsed()) {
            PartialMatrix p = parse_partial_matrix(slurp(file));
            MatrixClass c = parse_class(class_name);
            PartialVerdict pv = is_partial_member_for(p, c);
            if (!pv.member) {
                err << "precondition violated: not a partial member: " << pv.reason << "\n";
                return 3;
            }
            CompletionConfig cfg;
            cfg.seed = seed;
            cfg.budget = budget;
            CompletionResult r = complete_auto(p, c, cfg);
            out << "strategy: " << to_string(r.strategy) << "\n";
            out << "evaluations: " << r.evaluations_used << "\n";
            if (r.found)
                out << "found\n" << r.matrix->to_text();
            else
                out << "exhausted\n";
            return 0;
        }
        if (symdet->parsed()) {
            PartialMatrix p = parse_partial_matrix(slurp(file));
            out << sym_det(lift(p)).text() << "\n";
            return 0;
        }
        if (enumerate->parsed()) {
            auto patterns =
                enumerate_patterns(order, all_loops, parallel ? Exec::parallel : Exec::serial);
            int at_q = -1, count = 0;
            std::vector<std::string> bucket;
            auto flush = [&] {
                if (at_q < 0) return;
                out << "q=" << at_q << ": " << count << (count == 1 ? " class" : " classes")
                    << "\n";
                for (const std::string& code : bucket) out << "  " << code << "\n";
            };
            for (const Pattern& g : patterns) {
                if (g.q() != at_q) {
                    flush();
                    at_q = g.q();
                    count = 0;
                    bucket.clear();
                }
                ++count;
                bucket.push_back(canonical_form(g).code);
            }
            flush();
            return 0;
        }
        if (classify->parsed()) {
            Pattern g = parse_pattern(slurp(file));
            AuditConfig cfg;
            cfg.completion.seed = seed;
            cfg.completion.budget = budget;
            cfg.samples = samples;
            out << "pattern: " << canonical_form(g).code << "\n";
            print_status(out, classify_pattern(g, parse_class(class_name), cfg));
            return 0;
        }
        if (audit->parsed()) {
            AuditConfig cfg;
            cfg.completion.seed = seed;
            cfg.completion.budget = budget;
            cfg.samples = samples;
            std::tie(cfg.min_order, cfg.max_order) = parse_orders(orders);
            cfg.exec = parallel ? Exec::parallel : Exec::serial;
            AuditReport rep = audit_catalog_claims(cfg, parse_class(class_name));
            std::string rendered = render_report(rep, format);
            if (out_path.empty()) {
                out << rendered;
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw ParseError("cannot write " + out_path);
                f << rendered;
                out << "report written to " << out_path << " (" << rep.rows.size()
                    << " patterns, " << rep.violations << " rule violations)\n";
            }
            return rep.violations > 0 ? 1 : 0;
        }
        if (verify->parsed()) {
            nlohmann::ordered_json rep = nlohmann::ordered_json::parse(slurp(file));
            VerifyOutcome v = verify_report_certificates(rep, row, claim);
            out << "checked " << v.checked << " certificates, " << v.failed << " failures\n";
            for (const std::string& f : v.failures) out << "  " << f << "\n";
            return v.failed > 0 ? 1 : 0;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "precondition violated: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace sspc::cli
