#include "schurq/verifier.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "schurq/partition.hpp"
#include "schurq/poly_json.hpp"

namespace schurq {

namespace {

constexpr std::array<CheckInfo, 23> kChecks{{
    {CheckId::alladi_schur, "1.1", IndexKind::weight, "all n >= 0, all m"},
    {CheckId::factorization, "1.2-div", IndexKind::subscript, "n >= 1"},
    {CheckId::even_shift, "2.1", IndexKind::subscript, "index 2N, N >= 3"},
    {CheckId::largest_part, "2.2", IndexKind::part_bound, "N >= 2"},
    {CheckId::odd_step, "2.3", IndexKind::subscript, "index 2N-1 >= 5, 2N-1 != 0 mod 3"},
    {CheckId::odd_mult3_step, "2.4", IndexKind::subscript, "index 6N+3, N >= 0"},
    {CheckId::nonneg, "thm1-nonneg", IndexKind::subscript, "n >= 1"},
    {CheckId::even_step, "3.1", IndexKind::subscript, "index 2N, N >= 1, N != 0 mod 3"},
    {CheckId::mult6_step, "3.2", IndexKind::subscript, "index 6N, N >= 1"},
    {CheckId::odd_double_shift, "3.3", IndexKind::subscript, "index 2N-1, N >= 3"},
    {CheckId::rc_6N, "3.5", IndexKind::c_index, "N >= 1, j >= 0"},
    {CheckId::rc_6N_1, "3.6", IndexKind::c_index, "N >= 1, j >= 0"},
    {CheckId::rc_6N_2, "3.7", IndexKind::c_index, "N >= 1, j >= 0"},
    {CheckId::rc_6N_3, "3.8", IndexKind::c_index, "N >= 1, j >= 0"},
    {CheckId::rc_6N_4, "3.9", IndexKind::c_index, "N >= 1, j >= 0"},
    {CheckId::rc_6N_5, "3.10", IndexKind::c_index, "N >= 1, j >= 0"},
    {CheckId::c_lower_chain, "3.11", IndexKind::c_index, "0 < j <= n"},
    {CheckId::c_lower_closed, "3.12", IndexKind::c_index, "0 < j <= n"},
    {CheckId::c_q_divisibility, "3.13", IndexKind::c_index, "0 < j <= n"},
    {CheckId::c1_closed_form, "3.14", IndexKind::c_index, "n >= 1"},
    {CheckId::c_recurrence, "3.15", IndexKind::c_index, "n >= 1, 0 <= j <= n"},
    {CheckId::mult6_minus1, "3.16", IndexKind::subscript, "index 6n-1, n >= 1"},
    {CheckId::generating_fn, "genfun", IndexKind::subscript, "N >= 1"},
}};

long ceil_div_pos(long a, long b) {
    return (a + b - 1) / b;
}

BivarPoly x_q(long xdeg, long qdeg) {
    return BivarPoly::monomial(xdeg, qdeg);
}

// Accumulates one report. Every index either counts as tested or as not
// applicable; exceptions from the engine become failures at that index.
class Recorder {
public:
    Recorder(CheckId id, IndexRange range) : start_(std::chrono::steady_clock::now()) {
        report_.id = id;
        report_.range = range;
    }

    void not_applicable() { ++report_.not_applicable; }

    template <typename Body>
    void at(std::vector<long> index, Body &&body) {
        ++report_.tested;
        try {
            body(index);
        } catch (const DivisionFailure &e) {
            fail(std::move(index), {}, {},
                 BivarPoly::from_terms({{e.witness(), e.witness_coeff()}}), e.what());
        } catch (const std::exception &e) {
            // No polynomial difference exists here; 1 marks the failure.
            fail(std::move(index), {}, {}, BivarPoly(1), e.what());
        }
    }

    void equal(std::vector<long> index, const BivarPoly &lhs, const BivarPoly &rhs) {
        if (lhs != rhs)
            fail(std::move(index), lhs, rhs, lhs - rhs, "sides differ");
    }

    void geq(std::vector<long> index, const BivarPoly &lhs, const BivarPoly &rhs) {
        if (!is_coeffwise_geq(lhs, rhs)) {
            BivarPoly diff = lhs - rhs;
            std::vector<Term> negative;
            for (const auto &t : diff.terms())
                if (sgn(t.coeff) < 0)
                    negative.push_back(t);
            fail(std::move(index), lhs, rhs, BivarPoly::from_terms(std::move(negative)),
                 "negative coefficients in lhs - rhs");
        }
    }

    void q_divisible(std::vector<long> index, const BivarPoly &poly, long e, const char *what) {
        std::vector<Term> low;
        for (const auto &t : poly.terms())
            if (static_cast<long>(t.mono.qdeg) < e)
                low.push_back(t);
        if (!low.empty())
            fail(std::move(index), poly, BivarPoly::q_power(e), BivarPoly::from_terms(std::move(low)),
                 what);
    }

    void nonneg(std::vector<long> index, const BivarPoly &poly) {
        if (!is_nonneg(poly)) {
            std::vector<Term> negative;
            for (const auto &t : poly.terms())
                if (sgn(t.coeff) < 0)
                    negative.push_back(t);
            fail(std::move(index), poly, {}, BivarPoly::from_terms(std::move(negative)),
                 "negative coefficient");
        }
    }

    void anomaly(std::string text) { report_.anomalies.push_back(std::move(text)); }

    VerifyReport finish() && {
        auto end = std::chrono::steady_clock::now();
        report_.elapsed_ms = std::chrono::duration<double, std::milli>(end - start_).count();
        return std::move(report_);
    }

private:
    void fail(std::vector<long> index, BivarPoly lhs, BivarPoly rhs, BivarPoly diff,
              std::string note) {
        report_.failures.push_back(
            {std::move(index), std::move(lhs), std::move(rhs), std::move(diff), std::move(note)});
    }

    VerifyReport report_;
    std::chrono::steady_clock::time_point start_;
};

using Index = std::vector<long>;

void check_alladi_schur(Recorder &rec, IndexRange range) {
    if (range.hi < 0)
        return;
    auto odd = oracle_C_table(range.hi);
    auto schur = oracle_D_table(range.hi);
    std::map<long, std::vector<long>> by_weight;
    for (const auto *table : {&odd, &schur})
        for (const auto &[key, count] : *table)
            by_weight[key.second].push_back(key.first);
    for (long n = 0; n <= range.hi; ++n) {
        if (n < range.lo) {
            rec.not_applicable();
            continue;
        }
        auto &ms = by_weight[n];
        std::sort(ms.begin(), ms.end());
        ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
        for (long m : ms) {
            rec.at({m, n}, [&](const Index &idx) {
                auto lookup = [&](const CountTable &t) {
                    auto it = t.find({m, n});
                    return it == t.end() ? std::uint64_t{0} : it->second;
                };
                rec.equal(idx, BivarPoly(static_cast<long>(lookup(odd))),
                          BivarPoly(static_cast<long>(lookup(schur))));
            });
        }
    }
}

void check_largest_part(Recorder &rec, IndexRange range) {
    std::map<long, BivarPoly> oracle;
    auto d = [&](long N) -> const BivarPoly & {
        auto it = oracle.find(N);
        if (it == oracle.end())
            it = oracle.emplace(N, N < 0 ? BivarPoly(1) : oracle_dN(static_cast<int>(N))).first;
        return it->second;
    };
    for (long N = range.lo; N <= range.hi; ++N) {
        if (N < 2) {
            rec.not_applicable();
            continue;
        }
        rec.at({N}, [&](const Index &idx) {
            long xpow = 1 + indicator(Indicator::mult2, N);
            long back = N - 3 - indicator(Indicator::mult3, N);
            rec.equal(idx, d(N), d(N - 1) + x_q(xpow, N) * d(back));
        });
    }
}

// Subscript-level identities, all evaluated on the division route.
void check_subscript(Recorder &rec, CheckId id, IndexRange range, SchurEngine &e) {
    auto rd = [&e](long n) -> const BivarPoly & { return e.rd_by_division(n); };
    const BivarPoly one_minus_xq = BivarPoly(1) - x_q(1, 1);
    for (long m = range.lo; m <= range.hi; ++m) {
        switch (id) {
        case CheckId::factorization:
            if (m < 1)
                break;
            rec.at({m}, [&](const Index &idx) {
                const BivarPoly &num = e.d_recursive(m);
                const BivarPoly &den = e.p(p_index(m));
                BivarPoly quotient = exact_divide(num, den);
                rec.equal(idx, quotient * den, num);
            });
            continue;
        case CheckId::even_shift:
            if (m % 2 != 0 || m / 2 < 3)
                break;
            rec.at({m / 2}, [&](const Index &idx) {
                rec.equal(idx, rd(m), substitute_x_scale(rd(m - 3), 2));
            });
            continue;
        case CheckId::odd_step:
            if (m % 2 == 0 || m < 5 || m % 3 == 0)
                break;
            rec.at({(m + 1) / 2}, [&](const Index &idx) {
                rec.equal(idx, rd(m), rd(m - 1) + x_q(1, m) * rd(m - 3));
            });
            continue;
        case CheckId::odd_mult3_step:
            if (m < 3 || (m - 3) % 6 != 0)
                break;
            rec.at({(m - 3) / 6}, [&](const Index &idx) {
                long N = (m - 3) / 6;
                rec.equal(idx, rd(m), lambda(N + 1) * rd(m - 1) + x_q(1, m) * rd(m - 4));
            });
            continue;
        case CheckId::nonneg:
            if (m < 1)
                break;
            rec.at({m}, [&](const Index &idx) { rec.nonneg(idx, rd(m)); });
            continue;
        case CheckId::even_step:
            if (m % 2 != 0 || m < 2 || (m / 2) % 3 == 0)
                break;
            rec.at({m / 2}, [&](const Index &idx) {
                rec.equal(idx, lambda(ceil_div_pos(m, 6)) * rd(m),
                          rd(m - 1) + x_q(2, m) * rd(m - 3));
            });
            continue;
        case CheckId::mult6_step:
            if (m < 6 || m % 6 != 0)
                break;
            rec.at({m / 6}, [&](const Index &idx) {
                rec.equal(idx, rd(m), rd(m - 1) + x_q(2, m) * rd(m - 4));
            });
            continue;
        case CheckId::odd_double_shift:
            if (m % 2 == 0 || (m + 1) / 2 < 3)
                break;
            rec.at({(m + 1) / 2}, [&](const Index &idx) {
                long N = (m + 1) / 2;
                BivarPoly rhs = lambda(ceil_div_pos(2 * N + 2, 6)) *
                                    substitute_x_scale(rd(2 * N - 4), 2) +
                                x_q(1, 2 * N - 1) * one_minus_xq * substitute_x_scale(rd(2 * N - 7), 2);
                rec.equal(idx, rd(m), rhs);
            });
            continue;
        case CheckId::mult6_minus1:
            if (m < 5 || (m + 1) % 6 != 0)
                break;
            rec.at({(m + 1) / 6}, [&](const Index &idx) {
                long n = (m + 1) / 6;
                const BivarPoly &back = rd(6 * n - 7);
                BivarPoly rhs = lambda(n + 1) * substitute_x_scale(back, 4) +
                                x_q(1, 6 * n - 1) * one_minus_xq * substitute_x_scale(back, 2);
                rec.equal(idx, rd(m), rhs);
            });
            continue;
        case CheckId::generating_fn:
            if (m < 1)
                break;
            rec.at({m}, [&](const Index &idx) {
                // Odd parts up to 2K - 1 >= m cover every weight <= m.
                long K = (m + 2) / 2;
                auto cap = static_cast<Exponent>(m);
                rec.equal(idx, truncate_q(e.d_recursive(m), cap), truncate_q(e.p(K), cap));
            });
            continue;
        default:
            throw std::logic_error("check_subscript: not a subscript check");
        }
        rec.not_applicable();
    }
}

void check_theorem3(Recorder &rec, CheckId id, IndexRange range, SchurEngine &e) {
    const long r = static_cast<long>(id) - static_cast<long>(CheckId::rc_6N);
    for (long N = range.lo; N <= range.hi; ++N) {
        if (N < 1) {
            rec.not_applicable();
            continue;
        }
        const long n = 6 * N - r;
        // One slot past the largest x-degree either side can reach confirms
        // that both vanish there.
        long jmax = std::max<long>(N + 1, e.rd_by_recurrence(n).x_degree()) + 1;
        for (long j = 0; j <= jmax; ++j)
            rec.at({N, j}, [&](const Index &idx) { rec.equal(idx, e.rc(n, j), e.rc_by_theorem3(n, j)); });
    }
}

void check_coefficient(Recorder &rec, CheckId id, IndexRange range, SchurEngine &e) {
    for (long n = range.lo; n <= range.hi; ++n) {
        if (n < 1) {
            rec.not_applicable();
            continue;
        }
        switch (id) {
        case CheckId::c_lower_chain:
            for (long j = 1; j <= n; ++j)
                rec.at({n, j}, [&](const Index &idx) {
                    rec.geq(idx, e.c(n, j), q_scaled(6 * n - 1 + 2 * (j - 1), e.c(n - 1, j - 1)));
                });
            break;
        case CheckId::c_q_divisibility:
            for (long j = 1; j <= n; ++j)
                rec.at({n, j}, [&](const Index &idx) {
                    BivarPoly c = e.c(n, j);
                    rec.q_divisible(idx, c, (2 * n + 1) * j, "q^((2n+1)j) does not divide c(n,j)");
                    rec.q_divisible(idx, c, 2 * j, "q^(2j) does not divide c(n,j)");
                });
            break;
        case CheckId::c1_closed_form:
            rec.at({n}, [&](const Index &idx) {
                rec.equal(idx, e.c(n, 1), geometric_expand(2 * n + 1, 2 * n));
            });
            break;
        case CheckId::c_recurrence:
            for (long j = 0; j <= n; ++j)
                rec.at({n, j}, [&](const Index &idx) {
                    auto prev = [&](long jj) { return jj < 0 ? BivarPoly{} : e.c(n - 1, jj); };
                    long s = 4 * j;
                    BivarPoly rhs = q_scaled(s, prev(j)) + q_scaled(s + 2 * n - 3, prev(j - 1)) +
                                    q_scaled(s + 6 * n - 2 * j - 3, prev(j - 1)) +
                                    q_scaled(s + 4 * n - 6, prev(j - 2)) -
                                    q_scaled(s + 6 * n - 2 * j - 4, prev(j - 2));
                    rec.equal(idx, e.c(n, j), rhs);
                });
            break;
        default:
            throw std::logic_error("check_coefficient: not a coefficient check");
        }
    }
}

} // namespace

std::span<const CheckInfo> all_checks() {
    return kChecks;
}

const CheckInfo &check_info(CheckId id) {
    return kChecks[static_cast<std::size_t>(id)];
}

std::optional<CheckId> parse_check(std::string_view tag) {
    for (const auto &c : kChecks)
        if (c.tag == tag)
            return c.id;
    return std::nullopt;
}

IdentityCheck default_check(CheckId id, const VerifyConfig &config) {
    switch (check_info(id).kind) {
    case IndexKind::subscript:
        return {id, {1, config.max_n}};
    case IndexKind::c_index:
        return {id, {1, config.max_c}};
    case IndexKind::weight:
        return {id, {0, config.max_weight}};
    case IndexKind::part_bound:
        return {id, {0, config.max_oracle}};
    }
    throw std::logic_error("default_check: unknown index kind");
}

Status VerifyReport::status() const noexcept {
    if (!failures.empty())
        return Status::fail;
    return tested == 0 ? Status::vacuous : Status::pass;
}

std::string_view status_name(Status s) {
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "FAIL";
    case Status::vacuous:
        return "vacuous";
    }
    return "?";
}

namespace {

void check_3_12_one(Recorder &rec, SchurEngine &engine, long n, long j) {
    const long e = 6 * j * n + 5 * j - 2 * j * j - 4 * n - 2;
    if (e < 0) {
        rec.anomaly("negative exponent " + std::to_string(e) + " at (n,j)=(" + std::to_string(n) +
                    "," + std::to_string(j) + ")");
        rec.not_applicable();
        return;
    }
    rec.at({n, j}, [&](const Index &idx) {
        rec.geq(idx, engine.c(n, j), geometric_expand(e, 2 * (n - j + 1)));
    });
}

} // namespace

VerifyReport verify_inequality_3_12(SchurEngine &engine, long n, long j) {
    Recorder rec(CheckId::c_lower_closed, {n, n});
    if (n < 1 || j < 1 || j > n)
        rec.not_applicable();
    else
        check_3_12_one(rec, engine, n, j);
    return std::move(rec).finish();
}

VerifyReport verify_alladi_schur(long max_weight) {
    Recorder rec(CheckId::alladi_schur, {0, max_weight});
    check_alladi_schur(rec, {0, max_weight});
    return std::move(rec).finish();
}

VerifyReport verify_identity(SchurEngine &engine, const IdentityCheck &check) {
    Recorder rec(check.id, check.range);
    switch (check.id) {
    case CheckId::alladi_schur:
        check_alladi_schur(rec, check.range);
        break;
    case CheckId::largest_part:
        check_largest_part(rec, check.range);
        break;
    case CheckId::rc_6N:
    case CheckId::rc_6N_1:
    case CheckId::rc_6N_2:
    case CheckId::rc_6N_3:
    case CheckId::rc_6N_4:
    case CheckId::rc_6N_5:
        check_theorem3(rec, check.id, check.range, engine);
        break;
    case CheckId::c_lower_closed:
        for (long n = check.range.lo; n <= check.range.hi; ++n) {
            if (n < 1) {
                rec.not_applicable();
                continue;
            }
            for (long j = 1; j <= n; ++j)
                check_3_12_one(rec, engine, n, j);
        }
        break;
    case CheckId::c_lower_chain:
    case CheckId::c_q_divisibility:
    case CheckId::c1_closed_form:
    case CheckId::c_recurrence:
        check_coefficient(rec, check.id, check.range, engine);
        break;
    default:
        check_subscript(rec, check.id, check.range, engine);
        break;
    }
    return std::move(rec).finish();
}

std::vector<VerifyReport> run_suite(SchurEngine &engine, std::span<const CheckId> checks,
                                    const VerifyConfig &config) {
    engine.precompute(config.max_n, config.max_c);
    std::vector<VerifyReport> out;
    out.reserve(checks.size());
    for (CheckId id : checks)
        out.push_back(verify_identity(engine, default_check(id, config)));
    return out;
}

bool all_passed(std::span<const VerifyReport> reports) {
    return std::none_of(reports.begin(), reports.end(),
                        [](const VerifyReport &r) { return r.status() == Status::fail; });
}

nlohmann::json report_to_json(const VerifyReport &report, bool include_timing) {
    nlohmann::json j;
    j["check"] = check_info(report.id).tag;
    j["guard"] = check_info(report.id).guard;
    j["range"] = {report.range.lo, report.range.hi};
    j["status"] = status_name(report.status());
    j["tested"] = report.tested;
    j["not_applicable"] = report.not_applicable;
    auto failures = nlohmann::json::array();
    for (const auto &f : report.failures)
        failures.push_back({{"index", f.index},
                            {"lhs", to_json_value(f.lhs)},
                            {"rhs", to_json_value(f.rhs)},
                            {"difference", to_json_value(f.difference)},
                            {"note", f.note}});
    j["failures"] = std::move(failures);
    j["anomalies"] = report.anomalies;
    if (include_timing)
        j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

nlohmann::json reports_to_json(std::span<const VerifyReport> reports, bool include_timing) {
    nlohmann::json j;
    auto arr = nlohmann::json::array();
    for (const auto &r : reports)
        arr.push_back(report_to_json(r, include_timing));
    j["reports"] = std::move(arr);
    j["all_passed"] = all_passed(reports);
    return j;
}

void write_text_report(std::ostream &os, std::span<const VerifyReport> reports) {
    os << std::left << std::setw(13) << "check" << std::setw(9) << "status" << std::right
       << std::setw(8) << "tested" << std::setw(8) << "n/a" << std::setw(10) << "failures"
       << std::setw(12) << "ms" << "  guard\n";
    for (const auto &r : reports) {
        const auto &info = check_info(r.id);
        os << std::left << std::setw(13) << info.tag << std::setw(9) << status_name(r.status())
           << std::right << std::setw(8) << r.tested << std::setw(8) << r.not_applicable
           << std::setw(10) << r.failures.size() << std::setw(12) << std::fixed
           << std::setprecision(1) << r.elapsed_ms << "  " << info.guard << '\n';
    }
    for (const auto &r : reports) {
        for (const auto &f : r.failures) {
            os << "\n[" << check_info(r.id).tag << "] index (";
            for (std::size_t i = 0; i < f.index.size(); ++i)
                os << (i ? "," : "") << f.index[i];
            os << "): " << f.note << "\n  lhs:  " << f.lhs << "\n  rhs:  " << f.rhs
               << "\n  diff: " << f.difference << '\n';
        }
        for (const auto &a : r.anomalies)
            os << "\n[" << check_info(r.id).tag << "] anomaly: " << a << '\n';
    }
    os << '\n' << (all_passed(reports) ? "ALL CHECKS PASSED" : "VERIFICATION FAILED") << '\n';
}

} // namespace schurq
