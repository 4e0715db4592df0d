#pragma once

// The Alladi-Schur polynomials d_N, the products p_n, the reduced quotients
// rd_n = d_n / p_{p_index(n)} and their x-coefficient tables, each reachable
// by more than one route so the routes can be checked against each other.

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "schurq/poly.hpp"

namespace schurq {

enum class Indicator { odd, mult2, mult3 };

/// chi_o(n), chi_2(n) or chi_3(n). Valid for negative n as well.
int indicator(Indicator kind, long n);

/// ceil((n + 3 chi_o(n)) / 6) - chi_o(n): the k for which p_k divides d_n.
/// Defined for n >= -1.
long p_index(long n);
/// ceil((n - 3 chi_o(n)) / 6), the single-ceiling form.
long p_index_single_ceiling(long n);
/// floor((n + 4) / 6) for n != 3 (mod 6), floor((n - 2) / 6) otherwise.
long p_index_two_case(long n);

/// The factor in d_2N = lambda(x) d_2N-3(x q^2). It is 1 + x q + x^2 q^2,
/// the same polynomial as lambda(1); 1 + x q + x q^2 does not satisfy the relation.
BivarPoly lambda_plain();
/// lambda_N = 1 + x q^(2N-1) + x^2 q^(4N-2), N >= 1.
BivarPoly lambda(long N);
/// p_n = lambda_1 lambda_2 ... lambda_n; p_0 = 1.
BivarPoly p_product(long n);

enum class CoeffFamily { c, rc };

/// Entries are polynomials in q: c(n, j) or rc(n, j) for j = 0, 1, ...
struct CoeffTable {
    CoeffFamily family = CoeffFamily::c;
    long n = 0;
    std::vector<BivarPoly> entries;

    /// Zero outside the stored range.
    BivarPoly at(long j) const;
};

/// The base reduced polynomials rd_1 ... rd_6 that seed the quotient-level
/// recurrences.
struct Seeds {
    std::array<BivarPoly, 6> reduced;

    static Seeds printed();
};

/// Memoizing calculator. Not thread-safe: call precompute() before sharing
/// read-only results, or serialize access.
class SchurEngine {
public:
    explicit SchurEngine(Seeds seeds = Seeds::printed());

    const Seeds &seeds() const noexcept { return seeds_; }

    const BivarPoly &p(long n);

    /// d_N by removal of the largest part, seeded with d_-1 = d_0 = 1 and
    /// d_1 = 1 + x q. Throws std::out_of_range for N < -1.
    const BivarPoly &d_recursive(long N);

    /// d_n / p_{p_index(n)}; throws DivisionFailure if the quotient is not exact.
    const BivarPoly &rd_by_division(long n);

    /// rd_n from the quotient-level recurrences and the seeds alone.
    const BivarPoly &rd_by_recurrence(long n);

    /// c(n, j) = [x^j] d_{6n-1} / p_n, through the division route.
    CoeffTable c_table(long n);
    BivarPoly c(long n, long j);

    /// c(n, j) from the coefficient recurrence seeded only with c(0, 0) = 1.
    const BivarPoly &c_by_andrews_recurrence(long n, long j);

    /// rc(n, j) = [x^j] rd_n, with rd_n from the recurrence route.
    CoeffTable rc_table(long n);
    BivarPoly rc(long n, long j);

    /// rc(n, j) from the closed formulas in terms of c, with the q^(-2j)
    /// shifts done by divide_by_q_power.
    BivarPoly rc_by_theorem3(long n, long j);

    /// Fills every memo table needed for d, rd indices up to max_n and c
    /// tables up to max_c.
    void precompute(long max_n, long max_c);

private:
    Seeds seeds_;
    std::map<long, BivarPoly> p_memo_;
    std::map<long, BivarPoly> d_memo_;
    std::map<long, BivarPoly> rd_div_memo_;
    std::map<long, BivarPoly> rd_rec_memo_;
    std::map<std::pair<long, long>, BivarPoly> c_rec_memo_;
};

/// q^e a, where a may only be nonzero when e >= 0. Throws std::logic_error if
/// a negative exponent would survive.
BivarPoly q_scaled(long e, const BivarPoly &a);

} // namespace schurq
