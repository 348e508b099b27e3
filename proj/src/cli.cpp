#include "ternary/cli.hpp"

#include "ternary/errors.hpp"
#include "ternary/report.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace ternary::cli {
namespace {

constexpr const char* usage_text = R"(usage: decide [options] [--] A B C
       decide [options] --batch FILE

Decides whether A*x^2 + B*y^2 + C*z^2 = 0 has a nonzero rational solution
and reports the evidence (sign/residue conditions and per-place local
verdicts, which must agree).

options:
  --json               machine-readable report, schema version 1
  --witness            search for an integer witness (default)
  --no-witness         skip the witness search
  --local-report       include per-place detail in the text report
  --bound-scale N[/D]  scale the witness search box by a positive rational
  --batch FILE         read one whitespace-separated triple per line;
                       blank lines and '#' comments are ignored
  -h, --help           show this message

exit codes: 0 solvable, 1 unsolvable, 2 usage or input error,
            3 internal inconsistency
)";

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    bool local = false;
    bool help = false;
    DecideOptions decide;
    std::optional<std::string> batch;
    std::vector<Int> coeffs;
};

bool looks_like_integer(const std::string& s) {
    std::size_t i = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

Int parse_integer(const std::string& s) {
    if (!looks_like_integer(s))
        throw usage_error("invalid integer '" + s + "'");
    return Int(s[0] == '+' ? s.substr(1) : s); // cpp_int rejects a leading '+'
}

BoundScale parse_scale(const std::string& s) {
    auto slash = s.find('/');
    BoundScale scale;
    scale.num = parse_integer(s.substr(0, slash));
    if (slash != std::string::npos)
        scale.den = parse_integer(s.substr(slash + 1));
    if (scale.num < 1 || scale.den < 1)
        throw usage_error("bound scale must be a positive rational");
    return scale;
}

Options parse_args(const std::vector<std::string>& args) {
    Options o;
    bool positional_only = false;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& arg = args[i];
        auto next_value = [&](const char* flag) -> const std::string& {
            if (++i >= args.size())
                throw usage_error(std::string(flag) + " requires a value");
            return args[i];
        };
        if (!positional_only && arg == "--") {
            positional_only = true;
        } else if (!positional_only && arg == "--json") {
            o.json = true;
        } else if (!positional_only && arg == "--witness") {
            o.decide.search_witness = true;
        } else if (!positional_only && arg == "--no-witness") {
            o.decide.search_witness = false;
        } else if (!positional_only && arg == "--local-report") {
            o.local = true;
        } else if (!positional_only && arg == "--bound-scale") {
            o.decide.bound_scale = parse_scale(next_value("--bound-scale"));
        } else if (!positional_only && arg == "--batch") {
            o.batch = next_value("--batch");
        } else if (!positional_only && (arg == "-h" || arg == "--help")) {
            o.help = true;
        } else if (!positional_only && arg.size() > 1 && arg[0] == '-' &&
                   !looks_like_integer(arg)) {
            throw usage_error("unknown option '" + arg + "'");
        } else {
            o.coeffs.push_back(parse_integer(arg));
        }
    }
    if (o.help)
        return o;
    if (o.batch && !o.coeffs.empty())
        throw usage_error("--batch does not take coefficients");
    if (!o.batch && o.coeffs.size() != 3)
        throw usage_error("expected exactly 3 coefficients");
    return o;
}

struct TimedReport {
    DecisionReport report;
    double ms;
};

TimedReport run_decide(const Int& a, const Int& b, const Int& c,
                       const DecideOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    DecisionReport report = decide(a, b, c, opts);
    auto t1 = std::chrono::steady_clock::now();
    return {std::move(report),
            std::chrono::duration<double, std::milli>(t1 - t0).count()};
}

int run_single(const Options& o, std::ostream& out, std::ostream& err) {
    try {
        TimedReport tr = run_decide(o.coeffs[0], o.coeffs[1], o.coeffs[2], o.decide);
        if (o.json)
            out << to_json(ReportEnvelope{report_schema_version, tr.ms, tr.report})
                       .dump()
                << "\n";
        else
            out << to_text(tr.report, o.local);
        return tr.report.solvable ? exit_solvable : exit_unsolvable;
    } catch (const internal_error& e) {
        err << "decide: " << e.what() << "\n";
        return exit_internal;
    } catch (const std::exception& e) {
        err << "decide: " << e.what() << "\n";
        return exit_usage;
    }
}

struct BatchLine {
    std::size_t line_no;
    Int a, b, c;
};

int run_batch(const Options& o, std::ostream& out, std::ostream& err) {
    std::ifstream in(*o.batch);
    if (!in) {
        err << "decide: cannot open '" << *o.batch << "'\n";
        return exit_usage;
    }

    std::vector<BatchLine> entries;
    bool parse_failed = false;
    std::string line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string tok; ls >> tok;)
            tokens.push_back(tok);
        if (tokens.empty())
            continue;
        try {
            if (tokens.size() != 3)
                throw usage_error("expected 3 integers, got " +
                                  std::to_string(tokens.size()));
            Int a = parse_integer(tokens[0]);
            Int b = parse_integer(tokens[1]);
            Int c = parse_integer(tokens[2]);
            if (a == 0 || b == 0 || c == 0)
                throw usage_error("zero coefficient");
            entries.push_back({line_no, std::move(a), std::move(b), std::move(c)});
        } catch (const std::exception& e) {
            err << "decide: line " << line_no << ": " << e.what() << "\n";
            parse_failed = true;
        }
    }

    // lines are decided in parallel; output stays in input order
    std::vector<std::string> outputs(entries.size());
    std::vector<std::string> diagnostics(entries.size());
    std::vector<int> codes(entries.size(), exit_solvable);
    #pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const BatchLine& e = entries[i];
        try {
            TimedReport tr = run_decide(e.a, e.b, e.c, o.decide);
            outputs[i] =
                o.json ? to_json(ReportEnvelope{report_schema_version, tr.ms, tr.report})
                                 .dump() +
                             "\n"
                       : one_line_summary(tr.report) + "\n";
        } catch (const internal_error& ex) {
            diagnostics[i] = "decide: line " + std::to_string(e.line_no) + ": " +
                             ex.what() + "\n";
            codes[i] = exit_internal;
        } catch (const std::exception& ex) {
            diagnostics[i] = "decide: line " + std::to_string(e.line_no) + ": " +
                             ex.what() + "\n";
            codes[i] = exit_usage;
        }
    }

    int rc = parse_failed ? exit_usage : exit_solvable;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        out << outputs[i];
        err << diagnostics[i];
        if (codes[i] == exit_internal)
            rc = exit_internal;
        else if (codes[i] == exit_usage && rc != exit_internal)
            rc = exit_usage;
    }
    return rc;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    try {
        o = parse_args(args);
    } catch (const std::exception& e) {
        err << "decide: " << e.what() << "\n";
        err << usage_text;
        return exit_usage;
    }
    if (o.help) {
        out << usage_text;
        return 0;
    }
    return o.batch ? run_batch(o, out, err) : run_single(o, out, err);
}

} // namespace ternary::cli
