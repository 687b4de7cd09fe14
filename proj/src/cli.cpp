#include "ratroot/cli.hpp"

#include "ratroot/errors.hpp"
#include "ratroot/sexagesimal.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace ratroot {

namespace {

/// Radicand/x0 input: integer, fraction, decimal, or "sex:"-prefixed base-60.
Rational parse_number(const std::string& text) {
    constexpr std::string_view prefix = "sex:";
    if (text.starts_with(prefix)) {
        return from_sexagesimal(parse_sexagesimal(std::string_view(text).substr(prefix.size())));
    }
    return Rational::from_string(text);
}

/// Tolerance input additionally accepts exact scientific notation ("1e-30").
Rational parse_tolerance(const std::string& text) {
    size_t epos = text.find_first_of("eE");
    if (epos == std::string::npos) return Rational::from_string(text);
    Rational mantissa = Rational::from_string(std::string_view(text).substr(0, epos));
    std::string_view exp_text = std::string_view(text).substr(epos + 1);
    bool negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
    }
    if (exp_text.empty() || exp_text.size() > 6 ||
        !std::all_of(exp_text.begin(), exp_text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("bad exponent in \"" + text + "\"");
    }
    unsigned long exponent = std::stoul(std::string(exp_text));
    Rational scale(pow10(exponent));
    return negative ? mantissa / scale : mantissa * scale;
}

std::string trim_decimal(std::string text) {
    if (text.find('.') == std::string::npos) return text;
    size_t last = text.find_last_not_of('0');
    if (text[last] == '.') last--;
    text.erase(last + 1);
    return text;
}

std::string format_order(const std::optional<double>& order) {
    if (!order) return "undetermined";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", *order);
    return buf;
}

int oracle_digits_for(const Rational& tolerance) {
    long tol_digits = 1;
    if (tolerance < Rational(1)) {
        tol_digits = static_cast<long>(std::ceil(-log10_magnitude(tolerance)));
    }
    return static_cast<int>(std::clamp(tol_digits + 12, 30L, 2400L));
}

} // namespace

OutputRecord make_output_record(const IterationTrace& trace, const ConvergenceReport& report,
                                int display_digits, std::optional<int> sexagesimal_places) {
    OutputRecord record;
    record.radicand = trace.problem.radicand.fraction_string();
    record.degree = trace.problem.degree;
    record.x0 = trace.problem.initial_guess.fraction_string();
    record.steps.reserve(trace.entries.size());
    for (const TraceEntry& entry : trace.entries) {
        OutputStep step;
        step.n = entry.index;
        step.exact = entry.value.fraction_string();
        step.decimal = trim_decimal(entry.value.decimal_string(display_digits));
        step.residual = trim_decimal(entry.residual.decimal_string(display_digits));
        if (sexagesimal_places) {
            step.sexagesimal = to_string(to_sexagesimal(entry.value, *sexagesimal_places));
        }
        record.steps.push_back(std::move(step));
    }
    record.converged = report.converged;
    record.iterations = report.iterations_used;
    record.observed_order = format_order(report.observed_order);
    return record;
}

std::string render_table(const OutputRecord& record) {
    std::ostringstream os;
    os << "# radicand " << record.radicand << "  degree " << record.degree << "  x0 "
       << record.x0 << '\n';
    bool with_sex = !record.steps.empty() && record.steps.front().sexagesimal.has_value();
    os << "# columns: n  exact  decimal  residual" << (with_sex ? "  sexagesimal" : "") << '\n';

    size_t wn = 1, wexact = 1, wdec = 1, wres = 1;
    for (const OutputStep& s : record.steps) {
        wn = std::max(wn, std::to_string(s.n).size());
        wexact = std::max(wexact, s.exact.size());
        wdec = std::max(wdec, s.decimal.size());
        wres = std::max(wres, s.residual.size());
    }
    auto pad = [&os](const std::string& text, size_t width, bool last) {
        os << text;
        if (!last) os << std::string(width - text.size() + 2, ' ');
    };
    for (const OutputStep& s : record.steps) {
        pad(std::to_string(s.n), wn, false);
        pad(s.exact, wexact, false);
        pad(s.decimal, wdec, false);
        pad(s.residual, wres, !with_sex);
        if (with_sex) os << *s.sexagesimal;
        os << '\n';
    }
    os << "# converged " << (record.converged ? "yes" : "no") << "  iterations "
       << record.iterations << "  observed-order " << record.observed_order << '\n';
    return os.str();
}

std::string render_json(const OutputRecord& record) {
    nlohmann::ordered_json j;
    j["problem"]["radicand"] = record.radicand;
    j["problem"]["degree"] = record.degree;
    j["problem"]["x0"] = record.x0;
    j["steps"] = nlohmann::ordered_json::array();
    for (const OutputStep& s : record.steps) {
        nlohmann::ordered_json step;
        step["n"] = s.n;
        step["exact"] = s.exact;
        step["decimal"] = s.decimal;
        step["residual"] = s.residual;
        if (s.sexagesimal) {
            step["sexagesimal"] = *s.sexagesimal;
        } else {
            step["sexagesimal"] = nullptr;
        }
        j["steps"].push_back(std::move(step));
    }
    j["report"]["converged"] = record.converged;
    j["report"]["iterations"] = record.iterations;
    j["report"]["observed_order"] = record.observed_order;
    return j.dump(2) + "\n";
}

std::string render_csv(const OutputRecord& record) {
    std::ostringstream os;
    os << "n,exact,decimal,residual,sexagesimal\n";
    for (const OutputStep& s : record.steps) {
        os << s.n << ',' << s.exact << ',' << s.decimal << ',' << s.residual << ',';
        if (s.sexagesimal) os << '"' << *s.sexagesimal << '"'; // value contains commas
        os << '\n';
    }
    return os.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"m-th roots by the Babylonian iteration over exact rational arithmetic"};
    app.name("root");

    std::string radicand_text;
    std::string x0_text;
    std::string tol_text = "1e-30";
    std::string mode_text = "exact";
    std::string output_text = "table";
    int degree = 2;
    int max_iter = 500;
    int precision = 50;
    int sexagesimal_places = 0;

    app.add_option("radicand", radicand_text,
                   "number whose root is sought: integer, fraction, decimal, or sex:N")
        ->required();
    app.add_option("--degree", degree, "root degree m (2 = square root)")->capture_default_str();
    app.add_option("--x0", x0_text,
                   "initial guess > 0 (default: a power of two within a factor of 2 of the root)");
    app.add_option("--tol", tol_text, "relative residual bound, parsed exactly (1e-30, 1/100, 0.5)")
        ->capture_default_str();
    app.add_option("--max-iter", max_iter, "maximum number of steps")->capture_default_str();
    app.add_option("--precision", precision,
                   "decimal digits for display, and per-iterate truncation in fixed-precision mode")
        ->capture_default_str();
    app.add_option("--mode", mode_text, "exact | fixed-precision")->capture_default_str();
    app.add_option("--output", output_text, "table | json | csv")->capture_default_str();
    auto* sex_opt = app.add_option("--sexagesimal", sexagesimal_places,
                                   "add a base-60 column truncated to PLACES fractional digits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (output_text != "table" && output_text != "json" && output_text != "csv") {
            throw InvalidArgument("unknown output format \"" + output_text + "\"");
        }
        if (precision < 0) throw InvalidArgument("precision must be non-negative");
        if (sex_opt->count() > 0 && sexagesimal_places < 0) {
            throw InvalidArgument("sexagesimal places must be non-negative");
        }

        RootProblem problem;
        problem.radicand = parse_number(radicand_text);
        problem.degree = degree;
        problem.stopping.tolerance = parse_tolerance(tol_text);
        problem.stopping.max_iter = max_iter;
        problem.stopping.precision_digits = precision;
        if (mode_text == "exact") {
            problem.stopping.mode = StoppingRule::Mode::exact;
        } else if (mode_text == "fixed-precision") {
            problem.stopping.mode = StoppingRule::Mode::fixed_precision;
        } else {
            throw InvalidArgument("unknown mode \"" + mode_text + "\"");
        }
        if (!x0_text.empty()) {
            problem.initial_guess = parse_number(x0_text);
        } else if (problem.radicand.sign() > 0 && degree >= 1) {
            problem.initial_guess = default_initial_guess(problem.radicand, degree);
        }

        IterationTrace trace = iterate(problem);

        ConvergenceReport report;
        if (problem.radicand.is_zero()) {
            report.converged = true;
            report.iterations_used = 1;
        } else {
            int digits = oracle_digits_for(problem.stopping.tolerance);
            Rational reference = reference_root(problem.radicand, degree, digits);
            report = analyze(trace, reference, digits);
        }

        std::optional<int> places;
        if (sex_opt->count() > 0) places = sexagesimal_places;
        OutputRecord record = make_output_record(trace, report, precision, places);
        if (output_text == "json") {
            out << render_json(record);
        } else if (output_text == "csv") {
            out << render_csv(record);
        } else {
            out << render_table(record);
        }
        return trace.converged ? 0 : 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace ratroot
