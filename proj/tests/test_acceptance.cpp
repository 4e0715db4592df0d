// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "schurq/engine.hpp"
#include "schurq/partition.hpp"
#include "schurq/verifier.hpp"

using namespace schurq;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

BivarPoly P(std::initializer_list<std::pair<Exponent, Exponent>> monos) {
    std::vector<Term> terms;
    for (auto [x, q] : monos)
        terms.push_back({{x, q}, 1});
    return BivarPoly::from_terms(std::move(terms));
}

std::vector<CheckId> every_check() {
    std::vector<CheckId> ids;
    for (const auto &c : all_checks())
        ids.push_back(c.id);
    return ids;
}

bool all_pass(const std::vector<VerifyReport> &reports, std::string &detail) {
    bool ok = true;
    for (const auto &r : reports)
        if (r.status() != Status::pass) {
            ok = false;
            detail += std::string(detail.empty() ? "" : ", ") + std::string(check_info(r.id).tag) +
                      " " + std::string(status_name(r.status()));
        }
    return ok;
}

struct Outcome {
    bool ok;
    std::string detail;
};

Outcome base_cases(SchurEngine &e) {
    const std::vector<BivarPoly> printed{
        P({{0, 0}, {1, 1}}),
        P({{0, 0}}),
        P({{0, 0}, {1, 1}, {1, 3}, {2, 2}}),
        P({{0, 0}, {1, 3}}),
        P({{0, 0}, {1, 3}, {1, 5}}),
        P({{0, 0}, {1, 3}, {1, 5}, {2, 6}}),
    };
    for (long n = 1; n <= 6; ++n)
        if (e.rd_by_division(n) != printed[static_cast<std::size_t>(n - 1)])
            return {false, "rd_" + std::to_string(n) + " = " + to_text(e.rd_by_division(n))};
    return {true, "n = 1..6"};
}

Outcome factorization(SchurEngine &e) {
    auto t0 = Clock::now();
    for (long n = 1; n <= 60; ++n) {
        const BivarPoly &num = e.d_recursive(n);
        const BivarPoly &den = e.p(p_index(n));
        try {
            if (exact_divide(num, den) * den != num)
                return {false, "quotient does not multiply back at n = " + std::to_string(n)};
        } catch (const DivisionFailure &f) {
            return {false, "n = " + std::to_string(n) + ": " + f.what()};
        }
    }
    double s = seconds_since(t0);
    char buf[64];
    std::snprintf(buf, sizeof buf, "n = 1..60 in %.2f s", s);
    return {s < 30.0, buf};
}

Outcome nonnegativity(SchurEngine &e) {
    for (long n = 1; n <= 60; ++n)
        if (!is_nonneg(e.rd_by_division(n)))
            return {false, "rd_" + std::to_string(n)};
    for (long n = 0; n <= 10; ++n)
        for (long j = 0; j <= n; ++j)
            if (!is_nonneg(e.c(n, j)))
                return {false, "c(" + std::to_string(n) + "," + std::to_string(j) + ")"};
    return {true, "rd_1..rd_60, c(n,j) for n <= 10"};
}

Outcome oracle_equivalence(SchurEngine &e) {
    for (int N = 0; N <= 30; ++N)
        if (e.d_recursive(N) != oracle_dN(N))
            return {false, "N = " + std::to_string(N)};
    return {true, "N = 0..30"};
}

Outcome refinement() {
    auto r = verify_alladi_schur(40);
    return {r.status() == Status::pass,
            std::to_string(r.tested) + " (m,n) pairs, " + std::to_string(r.failures.size()) +
                " failures"};
}

Outcome coefficient_routes(SchurEngine &e) {
    long compared = 0;
    for (long n = 0; n <= 10; ++n)
        for (long j = 0; j <= n; ++j) {
            BivarPoly div = e.c(n, j);
            std::string at = "(" + std::to_string(n) + "," + std::to_string(j) + ")";
            if (e.c_by_andrews_recurrence(n, j) != div)
                return {false, "recurrence route differs at " + at};
            if (coeff_of_x(e.rd_by_recurrence(6 * n - 1), static_cast<Exponent>(j)) != div)
                return {false, "quotient recurrence differs at " + at};
            if (n >= 1 && e.rc_by_theorem3(6 * n - 1, j) != div)
                return {false, "back-substitution differs at " + at};
            ++compared;
        }
    return {true, std::to_string(compared) + " entries"};
}

Outcome identity_suite(SchurEngine &e) {
    std::vector<CheckId> ids;
    for (const char *tag :
         {"2.1", "2.3", "2.4", "3.1", "3.2", "3.3", "3.5", "3.6", "3.7", "3.8", "3.9", "3.10", "3.16"})
        ids.push_back(*parse_check(tag));
    std::string detail;
    bool ok = all_pass(run_suite(e, ids, VerifyConfig{}), detail);
    return {ok, ok ? "13 checks" : detail};
}

Outcome closed_form(SchurEngine &e) {
    for (long n = 1; n <= 10; ++n)
        if (e.c(n, 1) != geometric_expand(2 * n + 1, 2 * n))
            return {false, "n = " + std::to_string(n)};
    return {true, "n = 1..10"};
}

Outcome corollaries(SchurEngine &e) {
    std::vector<CheckId> ids{CheckId::c_lower_chain, CheckId::c_lower_closed,
                             CheckId::c_q_divisibility};
    auto reports = run_suite(e, ids, VerifyConfig{});
    std::string detail;
    bool ok = all_pass(reports, detail);
    for (const auto &r : reports)
        if (!r.anomalies.empty()) {
            ok = false;
            detail += " anomalies in " + std::string(check_info(r.id).tag);
        }
    return {ok, ok ? "3.11, 3.12, 3.13 incl. q^(2j)" : detail};
}

Outcome sensitivity() {
    Seeds s = Seeds::printed();
    s.reduced[3] = P({{0, 0}, {1, 2}});
    SchurEngine bad(s);
    auto reports = run_suite(bad, every_check(), VerifyConfig{});
    long failing = 0;
    for (const auto &r : reports)
        failing += r.status() == Status::fail;
    return {failing > 0, std::to_string(failing) + " checks fail with rd_4 = 1 + x q^2"};
}

Outcome full_suite() {
    auto t0 = Clock::now();
    SchurEngine e;
    auto reports = run_suite(e, every_check(), VerifyConfig{});
    double s = seconds_since(t0);
    std::string detail;
    bool ok = all_pass(reports, detail);
    char buf[64];
    std::snprintf(buf, sizeof buf, "23 checks in %.1f s", s);
    return {ok && s < 300.0, ok ? std::string(buf) : detail + "; " + buf};
}

} // namespace

int main() {
    SchurEngine engine;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"base cases", [&] { return base_cases(engine); }},
        {"factorization", [&] { return factorization(engine); }},
        {"nonnegativity", [&] { return nonnegativity(engine); }},
        {"oracle equivalence", [&] { return oracle_equivalence(engine); }},
        {"partition refinement", refinement},
        {"coefficient routes", [&] { return coefficient_routes(engine); }},
        {"identity suite", [&] { return identity_suite(engine); }},
        {"closed form c(n,1)", [&] { return closed_form(engine); }},
        {"corollaries", [&] { return corollaries(engine); }},
        {"sensitivity", sensitivity},
        {"full suite runtime", full_suite},
    };

    int failed = 0;
    int i = 0;
    for (const auto &[name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << ++i << ". " << name << ": " << o.detail
                  << std::endl;
    }
    std::cout << (failed ? "FAILED " + std::to_string(failed) + " of " : "all ")
              << criteria.size() << " criteria" << (failed ? "" : " passed") << std::endl;
    return failed ? 1 : 0;
}
