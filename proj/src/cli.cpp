#include "schurq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "schurq/engine.hpp"
#include "schurq/partition.hpp"
#include "schurq/poly_json.hpp"
#include "schurq/verifier.hpp"

namespace schurq {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long parse_long(const std::string &s) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception &) {
        throw UsageError("not an integer: '" + s + "'");
    }
    if (used != s.size())
        throw UsageError("not an integer: '" + s + "'");
    return v;
}

/// "5" or "1..60", inclusive.
IndexRange parse_range(const std::string &s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        long v = parse_long(s);
        return {v, v};
    }
    IndexRange r{parse_long(s.substr(0, dots)), parse_long(s.substr(dots + 2))};
    if (r.lo > r.hi)
        throw UsageError("empty range '" + s + "'");
    return r;
}

enum class Format { text, json, csv };

Format parse_format(const std::string &s) {
    if (s == "text")
        return Format::text;
    if (s == "json")
        return Format::json;
    if (s == "csv")
        return Format::csv;
    throw UsageError("unknown format '" + s + "'");
}

struct Selection {
    std::string target;
    IndexRange range;
    std::string route;
};

long lowest_index(const std::string &target) {
    if (target == "d" || target == "rd")
        return -1;
    if (target == "rc")
        return 1;
    return 0;
}

BivarPoly select_poly(SchurEngine &engine, const Selection &sel, long n) {
    if (sel.target == "d")
        return engine.d_recursive(n);
    if (sel.target == "p")
        return engine.p(n);
    if (sel.route.empty() || sel.route == "division")
        return engine.rd_by_division(n);
    if (sel.route == "recurrence")
        return engine.rd_by_recurrence(n);
    throw UsageError("unknown route '" + sel.route + "' for rd");
}

CoeffTable select_table(SchurEngine &engine, const Selection &sel, long n) {
    if (sel.target == "c") {
        if (sel.route.empty() || sel.route == "division")
            return engine.c_table(n);
        if (sel.route == "andrews") {
            CoeffTable t{CoeffFamily::c, n, {}};
            for (long j = 0; j <= n; ++j)
                t.entries.push_back(engine.c_by_andrews_recurrence(n, j));
            return t;
        }
    } else {
        if (sel.route.empty() || sel.route == "recurrence")
            return engine.rc_table(n);
        if (sel.route == "theorem3") {
            CoeffTable t{CoeffFamily::rc, n, {}};
            long len = static_cast<long>(engine.rd_by_recurrence(n).x_degree()) + 1;
            for (long j = 0; j < len; ++j)
                t.entries.push_back(engine.rc_by_theorem3(n, j));
            return t;
        }
    }
    throw UsageError("unknown route '" + sel.route + "' for " + sel.target);
}

void validate(const Selection &sel) {
    static const std::vector<std::string> known{"d", "p", "rd", "c", "rc"};
    if (std::find(known.begin(), known.end(), sel.target) == known.end())
        throw UsageError("unknown target '" + sel.target + "'");
    long lowest = lowest_index(sel.target);
    if (sel.range.lo < lowest)
        throw UsageError("index " + std::to_string(sel.range.lo) + " out of range for " +
                         sel.target + " (lowest is " + std::to_string(lowest) + ")");
}

bool is_table(const std::string &target) {
    return target == "c" || target == "rc";
}

std::string poly_name(const std::string &target, long n) {
    return target + "_" + std::to_string(n);
}

// Builds the whole output before writing so a failure never leaves partial output.
std::string render_objects(SchurEngine &engine, const Selection &sel, Format fmt) {
    std::ostringstream os;
    const bool single = sel.range.lo == sel.range.hi;
    if (is_table(sel.target)) {
        if (fmt == Format::csv)
            os << "n,j,qdeg,coeff\n";
        auto arr = nlohmann::json::array();
        for (long n = sel.range.lo; n <= sel.range.hi; ++n) {
            CoeffTable t = select_table(engine, sel, n);
            nlohmann::json entries = nlohmann::json::array();
            for (std::size_t j = 0; j < t.entries.size(); ++j) {
                const auto &e = t.entries[j];
                switch (fmt) {
                case Format::text:
                    os << sel.target << "(" << n << "," << j << ") = " << e << '\n';
                    break;
                case Format::csv:
                    for (const auto &term : e.terms())
                        os << n << ',' << j << ',' << term.mono.qdeg << ',' << term.coeff.get_str()
                           << '\n';
                    break;
                case Format::json:
                    entries.push_back(to_json_value(e));
                    break;
                }
            }
            arr.push_back({{"family", sel.target}, {"n", n}, {"entries", std::move(entries)}});
        }
        if (fmt == Format::json)
            os << (single ? arr[0] : arr).dump() << '\n';
        return os.str();
    }

    if (fmt == Format::csv)
        os << "n,xdeg,qdeg,coeff\n";
    auto arr = nlohmann::json::array();
    for (long n = sel.range.lo; n <= sel.range.hi; ++n) {
        BivarPoly poly = select_poly(engine, sel, n);
        switch (fmt) {
        case Format::text:
            os << poly_name(sel.target, n) << " = " << poly << '\n';
            break;
        case Format::csv:
            for (const auto &term : poly.terms())
                os << n << ',' << term.mono.xdeg << ',' << term.mono.qdeg << ','
                   << term.coeff.get_str() << '\n';
            break;
        case Format::json:
            if (single)
                os << to_json_string(poly) << '\n';
            else
                arr.push_back({{"n", n}, {"poly", to_json_value(poly)}});
            break;
        }
    }
    if (fmt == Format::json && !single)
        os << arr.dump() << '\n';
    return os.str();
}

std::vector<CheckId> parse_checks(const std::string &spec) {
    std::vector<CheckId> out;
    if (spec == "all") {
        for (const auto &c : all_checks())
            out.push_back(c.id);
        return out;
    }
    std::stringstream ss(spec);
    std::string tag;
    while (std::getline(ss, tag, ',')) {
        auto id = parse_check(tag);
        if (!id)
            throw UsageError("unknown check '" + tag + "'");
        out.push_back(*id);
    }
    if (out.empty())
        throw UsageError("no checks selected");
    return out;
}

std::string render_reports(const std::vector<VerifyReport> &reports, Format fmt) {
    std::ostringstream os;
    if (fmt == Format::json)
        os << reports_to_json(reports).dump(2) << '\n';
    else if (fmt == Format::text)
        write_text_report(os, reports);
    else
        throw UsageError("reports support text or json only");
    return os.str();
}

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw UsageError("cannot open output file '" + path + "'");
    f << text;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact Alladi-Schur polynomial engine and identity verifier", "schurq"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string n_arg;
    std::string route;
    std::string output;

    auto *compute = app.add_subcommand("compute", "Compute d, p, rd, c or rc at an index or range");
    std::string compute_target;
    compute->add_option("target", compute_target, "d | p | rd | c | rc")->required();
    compute->add_option("--n", n_arg, "index or inclusive range a..b")->required();
    compute->add_option("--format", format, "text | json | csv");
    compute->add_option("--route", route,
                        "rd: division | recurrence; c: division | andrews; rc: recurrence | theorem3");

    auto *verify = app.add_subcommand("verify", "Run identity checks");
    std::string checks_arg = "all";
    VerifyConfig config;
    verify->add_option("--checks", checks_arg, "all, or comma-separated check tags");
    verify->add_option("--max-n", config.max_n, "ceiling for subscript-level checks");
    verify->add_option("--max-c", config.max_c, "ceiling for coefficient-level checks");
    verify->add_option("--max-weight", config.max_weight, "ceiling for the partition identity");
    verify->add_option("--max-oracle", config.max_oracle, "ceiling for enumerated d_N");
    verify->add_option("--format", format, "text | json");
    verify->add_option("--output", output, "write the report to a file");

    auto *oracle = app.add_subcommand("oracle", "Brute-force partition enumeration");
    bool alladi = false;
    bool oracle_d = false;
    bool list_schur = false;
    bool list_odd = false;
    bool c_counts = false;
    long max_weight = 40;
    long max_part = 0;
    long weight = 0;
    auto *mode = oracle->add_option_group("mode");
    mode->add_flag("--alladi-schur", alladi, "check |C(m,n)| = |D(m,n)| for n <= max-weight");
    mode->add_flag("--d", oracle_d, "enumerated d_N for --n");
    mode->add_flag("--schur", list_schur, "list Schur partitions (--max-part, --max-weight)");
    mode->add_flag("--odd", list_odd, "list odd partitions with multiplicities <= 2 (--weight)");
    mode->add_flag("--c-table", c_counts, "m,n,count table of odd-part partitions");
    mode->require_option(1);
    oracle->add_option("--max-weight", max_weight);
    oracle->add_option("--max-part", max_part);
    oracle->add_option("--weight", weight);
    oracle->add_option("--n", n_arg);
    oracle->add_option("--format", format, "text | json | csv");

    auto *exporter = app.add_subcommand("export", "Write tables or reports to a file");
    std::string export_target;
    exporter->add_option("--target", export_target, "d | p | rd | c | rc | report")->required();
    exporter->add_option("--n", n_arg, "index or range; for report, the coefficient ceiling");
    exporter->add_option("--format", format, "csv | json | text");
    exporter->add_option("--output", output, "destination file (stdout if omitted)");
    exporter->add_option("--route", route);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        Format fmt = parse_format(format);
        SchurEngine engine;

        if (compute->parsed()) {
            Selection sel{compute_target, parse_range(n_arg), route};
            validate(sel);
            out << render_objects(engine, sel, fmt);
            return kExitOk;
        }

        if (verify->parsed()) {
            auto checks = parse_checks(checks_arg);
            if (fmt == Format::csv)
                throw UsageError("reports support text or json only");
            if (config.max_n < 1 || config.max_c < 1 || config.max_weight < 0 || config.max_oracle < 0)
                throw UsageError("verification ceilings must be positive");
            auto reports = run_suite(engine, checks, config);
            emit(render_reports(reports, fmt), output, out);
            return all_passed(reports) ? kExitOk : kExitVerifyFailed;
        }

        if (oracle->parsed()) {
            if (alladi) {
                if (max_weight < 0)
                    throw UsageError("--max-weight must be nonnegative");
                std::vector<VerifyReport> reports{verify_alladi_schur(max_weight)};
                out << render_reports(reports, fmt);
                return all_passed(reports) ? kExitOk : kExitVerifyFailed;
            }
            if (oracle_d) {
                IndexRange r = parse_range(n_arg.empty() ? "0" : n_arg);
                if (r.lo < 0)
                    throw UsageError("--n must be nonnegative for the enumerated d_N");
                std::ostringstream os;
                for (long n = r.lo; n <= r.hi; ++n) {
                    BivarPoly d = oracle_dN(static_cast<int>(n));
                    if (fmt == Format::json)
                        os << to_json_string(d) << '\n';
                    else
                        os << "d_" << n << " = " << d << '\n';
                }
                out << os.str();
                return kExitOk;
            }
            if (list_schur || list_odd) {
                if (max_part < 0 || max_weight < 0 || weight < 0)
                    throw UsageError("bounds must be nonnegative");
                auto parts = list_schur ? enumerate_schur(static_cast<int>(max_part), max_weight)
                                        : enumerate_odd_bounded(weight);
                out << partitions_to_json(parts) << '\n';
                return kExitOk;
            }
            if (max_weight < 0)
                throw UsageError("--max-weight must be nonnegative");
            write_count_csv(out, oracle_C_table(max_weight));
            return kExitOk;
        }

        if (exporter->parsed()) {
            if (export_target == "report") {
                if (fmt == Format::csv)
                    throw UsageError("reports support text or json only");
                VerifyConfig cfg;
                if (!n_arg.empty()) {
                    cfg.max_c = parse_range(n_arg).hi;
                    cfg.max_n = 6 * cfg.max_c;
                }
                if (cfg.max_c < 1)
                    throw UsageError("report ceiling must be positive");
                std::vector<CheckId> ids;
                for (const auto &c : all_checks())
                    ids.push_back(c.id);
                auto reports = run_suite(engine, ids, cfg);
                emit(render_reports(reports, fmt), output, out);
                return all_passed(reports) ? kExitOk : kExitVerifyFailed;
            }
            if (n_arg.empty())
                throw UsageError("--n is required for export of " + export_target);
            Selection sel{export_target, parse_range(n_arg), route};
            validate(sel);
            emit(render_objects(engine, sel, fmt), output, out);
            return kExitOk;
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DivisionFailure &e) {
        err << "division failure: " << e.what() << '\n';
        return kExitVerifyFailed;
    } catch (const std::out_of_range &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace schurq
