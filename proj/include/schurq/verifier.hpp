#pragma once

// Mechanical checking of the identities, divisibilities and coefficientwise
// inequalities satisfied by d_n, rd_n, c(n, j) and rc(n, j).

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "schurq/engine.hpp"
#include "schurq/poly.hpp"

namespace schurq {

enum class CheckId {
    alladi_schur,     // 1.1
    factorization,    // 1.2-div
    even_shift,       // 2.1
    largest_part,     // 2.2
    odd_step,         // 2.3
    odd_mult3_step,   // 2.4
    nonneg,           // thm1-nonneg
    even_step,        // 3.1
    mult6_step,       // 3.2
    odd_double_shift, // 3.3
    rc_6N,            // 3.5
    rc_6N_1,          // 3.6
    rc_6N_2,          // 3.7
    rc_6N_3,          // 3.8
    rc_6N_4,          // 3.9
    rc_6N_5,          // 3.10
    c_lower_chain,    // 3.11
    c_lower_closed,   // 3.12
    c_q_divisibility, // 3.13
    c1_closed_form,   // 3.14
    c_recurrence,     // 3.15
    mult6_minus1,     // 3.16
    generating_fn,    // genfun
};

/// Which index a check's range runs over.
enum class IndexKind {
    subscript, // the subscript of the left-hand rd or d polynomial
    c_index,   // n in c(n, j)
    weight,    // partition weight
    part_bound // N of the enumerated d_N
};

struct CheckInfo {
    CheckId id;
    std::string_view tag;
    IndexKind kind;
    std::string_view guard;
};

std::span<const CheckInfo> all_checks();
const CheckInfo &check_info(CheckId id);
std::optional<CheckId> parse_check(std::string_view tag);

struct IndexRange {
    long lo = 0;
    long hi = 0;
};

struct IdentityCheck {
    CheckId id;
    IndexRange range;
};

/// Range ceilings per index kind.
struct VerifyConfig {
    long max_n = 60;
    long max_c = 10;
    long max_weight = 40;
    long max_oracle = 30;
};

IdentityCheck default_check(CheckId id, const VerifyConfig &config);

struct Failure {
    std::vector<long> index;
    BivarPoly lhs;
    BivarPoly rhs;
    BivarPoly difference;
    std::string note;
};

enum class Status { pass, fail, vacuous };

struct VerifyReport {
    CheckId id;
    IndexRange range;
    long tested = 0;
    long not_applicable = 0;
    std::vector<Failure> failures;
    std::vector<std::string> anomalies;
    double elapsed_ms = 0;

    /// vacuous when no index satisfied the guard.
    Status status() const noexcept;
};

VerifyReport verify_identity(SchurEngine &engine, const IdentityCheck &check);

/// c(n, j) >= q^e (1 - q^(4(n-j+1))) / (1 - q^2), e = 6jn + 5j - 2j^2 - 4n - 2.
/// A negative e is recorded as an anomaly rather than a failure.
VerifyReport verify_inequality_3_12(SchurEngine &engine, long n, long j);

/// |C(m, n)| = |D(m, n)| for every n <= max_weight, by two enumerations.
VerifyReport verify_alladi_schur(long max_weight);

std::vector<VerifyReport> run_suite(SchurEngine &engine, std::span<const CheckId> checks,
                                    const VerifyConfig &config);

bool all_passed(std::span<const VerifyReport> reports);

std::string_view status_name(Status s);

/// Machine form. include_timing=false drops elapsed_ms, for reproducibility.
nlohmann::json report_to_json(const VerifyReport &report, bool include_timing = true);
nlohmann::json reports_to_json(std::span<const VerifyReport> reports, bool include_timing = true);
/// Aligned plain-text table plus failure details.
void write_text_report(std::ostream &os, std::span<const VerifyReport> reports);

} // namespace schurq
