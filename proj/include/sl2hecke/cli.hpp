#pragma once

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sl2hecke/expr.hpp"
#include "sl2hecke/render.hpp"
#include "sl2hecke/suites.hpp"

namespace sl2hecke {

// exit codes: 0 success, 1 verification failure, 2 expression parse error,
// 3 parameter error
namespace cli_exit {
constexpr int ok = 0;
constexpr int verify_failed = 1;
constexpr int parse_error = 2;
constexpr int param_error = 3;
}  // namespace cli_exit

namespace detail {

inline nlohmann::json report_json(const Report& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["p"] = r.p;
    j["g"] = r.generator;
    j["pass"] = r.all_pass();
    j["seconds"] = r.seconds;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json cj{{"id", c.id}, {"law", c.law}, {"pass", c.pass}};
        if (!c.pass) cj["witness"] = c.witness;
        j["checks"].push_back(cj);
    }
    return j;
}

inline void print_report_text(const Report& r, std::ostream& os) {
    os << "suite " << r.suite << " (p = " << r.p << ", g = " << r.generator << ")\n";
    for (const auto& c : r.checks) {
        os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << ": " << c.law;
        if (!c.pass && !c.witness.empty()) os << "  <- " << c.witness;
        os << "\n";
    }
    os << "  " << (r.checks.size() - r.failures()) << "/" << r.checks.size() << " checks passed in "
       << r.seconds << "s\n";
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    CLI::App app{"exact verification suite for the mod-p Hecke algebra of SL2(Q_p) and its quotient space of projective lines"};
    app.require_subcommand(1);

    long p = 0;
    std::string expr_src, suite = "all", format = "text";
    int len_bound = 3, deg_bound = 20;

    CLI::App* eval = app.add_subcommand("eval", "evaluate an algebra expression in the word basis");
    eval->add_option("--p", p, "prime p >= 5")->required();
    eval->add_option("expr", expr_src, "expression, e.g. \"X(1)*X(-1)\"")->required();

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--p", p, "prime p >= 5")->required();
    verify->add_option("--suite", suite, "hecke|centre|bimodule|quotient|appendix|all");
    verify->add_option("--len-bound", len_bound, "solver length bound");
    verify->add_option("--deg-bound", deg_bound, "exactness truncation degree");
    verify->add_option("--format", format, "text|json");

    CLI::App* quotient = app.add_subcommand("quotient", "emit the quotient gluing graph");
    quotient->add_option("--p", p, "prime p >= 5")->required();
    quotient->add_option("--format", format, "ascii|dot|svg|json");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return cli_exit::ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return cli_exit::param_error;
    }

    try {
        if (eval->parsed()) {
            FieldSpec F = make_field(p, 1);
            try {
                HElem h = eval_string(expr_src, F);
                out << to_string(h) << "\n";
                return cli_exit::ok;
            } catch (const ParseError& e) {
                err << "parse error: " << e.what() << "\n";
                return cli_exit::parse_error;
            }
        }

        if (verify->parsed()) {
            FieldSpec F = make_field(p, 1);
            SuiteOptions opt;
            opt.len_bound = len_bound;
            opt.deg_bound = deg_bound;
            std::vector<Report> reports = run_suites(F, suite, opt);
            bool all = true;
            for (const auto& r : reports) all = all && r.all_pass();
            if (format == "json") {
                nlohmann::json j;
                j["p"] = p;
                j["g"] = F.generator;
                j["pass"] = all;
                j["suites"] = nlohmann::json::array();
                for (const auto& r : reports) j["suites"].push_back(detail::report_json(r));
                out << j.dump(2) << "\n";
            } else if (format == "text") {
                for (const auto& r : reports) detail::print_report_text(r, out);
                out << (all ? "VERIFY OK" : "VERIFY FAILED") << "\n";
            } else {
                err << "unknown format: " << format << "\n";
                return cli_exit::param_error;
            }
            return all ? cli_exit::ok : cli_exit::verify_failed;
        }

        if (quotient->parsed()) {
            GluingGraph g = build_quotient_graph(p);
            if (format == "json")
                out << render_json(g);
            else if (format == "dot")
                out << render_dot(g);
            else if (format == "svg")
                out << render_svg(g);
            else if (format == "ascii" || format == "text")
                out << render_ascii(g);
            else {
                err << "unknown format: " << format << "\n";
                return cli_exit::param_error;
            }
            return cli_exit::ok;
        }
    } catch (const std::invalid_argument& e) {
        err << "parameter error: " << e.what() << "\n";
        return cli_exit::param_error;
    } catch (const std::domain_error& e) {
        err << "parameter error: " << e.what() << "\n";
        return cli_exit::param_error;
    }
    return cli_exit::param_error;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

}  // namespace sl2hecke
