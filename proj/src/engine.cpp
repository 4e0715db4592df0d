#include "schurq/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace schurq {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

long ceil_div(long a, long b) {
    return -floor_div(-a, b);
}

void require_index(long n, long lowest, const char *what) {
    if (n < lowest)
        throw std::out_of_range(std::string(what) + ": index " + std::to_string(n) +
                                " below " + std::to_string(lowest));
}

BivarPoly x_q(long xdeg, long qdeg) {
    return BivarPoly::monomial(xdeg, qdeg);
}

} // namespace

int indicator(Indicator kind, long n) {
    switch (kind) {
    case Indicator::odd:
        return n % 2 != 0;
    case Indicator::mult2:
        return n % 2 == 0;
    case Indicator::mult3:
        return n % 3 == 0;
    }
    throw std::invalid_argument("unknown indicator");
}

long p_index(long n) {
    require_index(n, -1, "p_index");
    int odd = indicator(Indicator::odd, n);
    return ceil_div(n + 3 * odd, 6) - odd;
}

long p_index_single_ceiling(long n) {
    return ceil_div(n - 3 * indicator(Indicator::odd, n), 6);
}

long p_index_two_case(long n) {
    long r = ((n % 6) + 6) % 6;
    return r == 3 ? floor_div(n - 2, 6) : floor_div(n + 4, 6);
}

BivarPoly lambda_plain() {
    return BivarPoly{{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}};
}

BivarPoly lambda(long N) {
    require_index(N, 1, "lambda");
    return BivarPoly(1) + x_q(1, 2 * N - 1) + x_q(2, 4 * N - 2);
}

BivarPoly p_product(long n) {
    require_index(n, 0, "p");
    BivarPoly out(1);
    for (long i = 1; i <= n; ++i)
        out *= lambda(i);
    return out;
}

BivarPoly CoeffTable::at(long j) const {
    if (j < 0 || j >= static_cast<long>(entries.size()))
        return {};
    return entries[static_cast<std::size_t>(j)];
}

Seeds Seeds::printed() {
    Seeds s;
    s.reduced[0] = BivarPoly{{{0, 0}, 1}, {{1, 1}, 1}};
    s.reduced[1] = BivarPoly(1);
    s.reduced[2] = BivarPoly{{{0, 0}, 1}, {{1, 1}, 1}, {{1, 3}, 1}, {{2, 2}, 1}};
    s.reduced[3] = BivarPoly{{{0, 0}, 1}, {{1, 3}, 1}};
    s.reduced[4] = BivarPoly{{{0, 0}, 1}, {{1, 3}, 1}, {{1, 5}, 1}};
    s.reduced[5] = BivarPoly{{{0, 0}, 1}, {{1, 3}, 1}, {{1, 5}, 1}, {{2, 6}, 1}};
    return s;
}

BivarPoly q_scaled(long e, const BivarPoly &a) {
    if (a.is_zero())
        return {};
    if (e < 0)
        throw std::logic_error("q_scaled: negative q-exponent " + std::to_string(e) +
                               " on a nonzero polynomial");
    return shift(a, 0, static_cast<Exponent>(e));
}

SchurEngine::SchurEngine(Seeds seeds) : seeds_(std::move(seeds)) {}

const BivarPoly &SchurEngine::p(long n) {
    require_index(n, 0, "p");
    if (auto it = p_memo_.find(n); it != p_memo_.end())
        return it->second;
    BivarPoly value = n == 0 ? BivarPoly(1) : p(n - 1) * lambda(n);
    return p_memo_.emplace(n, std::move(value)).first->second;
}

const BivarPoly &SchurEngine::d_recursive(long N) {
    require_index(N, -1, "d_recursive");
    if (auto it = d_memo_.find(N); it != d_memo_.end())
        return it->second;
    BivarPoly value;
    if (N <= 0) {
        value = BivarPoly(1);
    } else if (N == 1) {
        value = BivarPoly(1) + x_q(1, 1);
    } else {
        long xpow = 1 + indicator(Indicator::mult2, N);
        long back = N - 3 - indicator(Indicator::mult3, N);
        value = d_recursive(N - 1) + x_q(xpow, N) * d_recursive(back);
    }
    return d_memo_.emplace(N, std::move(value)).first->second;
}

const BivarPoly &SchurEngine::rd_by_division(long n) {
    require_index(n, -1, "rd_by_division");
    if (auto it = rd_div_memo_.find(n); it != rd_div_memo_.end())
        return it->second;
    BivarPoly value = exact_divide(d_recursive(n), p(p_index(n)));
    return rd_div_memo_.emplace(n, std::move(value)).first->second;
}

const BivarPoly &SchurEngine::rd_by_recurrence(long n) {
    require_index(n, -1, "rd_by_recurrence");
    if (auto it = rd_rec_memo_.find(n); it != rd_rec_memo_.end())
        return it->second;
    BivarPoly value;
    if (n <= 0) {
        value = BivarPoly(1);
    } else if (n <= 6) {
        value = seeds_.reduced[static_cast<std::size_t>(n - 1)];
    } else if (n % 2 == 0) {
        value = substitute_x_scale(rd_by_recurrence(n - 3), 2);
    } else if (n % 3 != 0) {
        value = rd_by_recurrence(n - 1) + x_q(1, n) * rd_by_recurrence(n - 3);
    } else if (n % 6 == 3) {
        long N = (n - 3) / 6;
        value = lambda(N + 1) * rd_by_recurrence(n - 1) + x_q(1, n) * rd_by_recurrence(n - 4);
    } else {
        throw std::logic_error("rd_by_recurrence: index " + std::to_string(n) +
                               " matches no recurrence");
    }
    return rd_rec_memo_.emplace(n, std::move(value)).first->second;
}

namespace {

CoeffTable table_of(CoeffFamily family, long n, const BivarPoly &poly, long min_len) {
    CoeffTable t{family, n, {}};
    long len = std::max<long>(min_len, static_cast<long>(poly.x_degree()) + 1);
    t.entries.reserve(static_cast<std::size_t>(len));
    for (long j = 0; j < len; ++j)
        t.entries.push_back(coeff_of_x(poly, static_cast<Exponent>(j)));
    return t;
}

} // namespace

CoeffTable SchurEngine::c_table(long n) {
    require_index(n, 0, "c_table");
    return table_of(CoeffFamily::c, n, rd_by_division(6 * n - 1), n + 1);
}

BivarPoly SchurEngine::c(long n, long j) {
    require_index(n, 0, "c");
    if (j < 0)
        return {};
    return coeff_of_x(rd_by_division(6 * n - 1), static_cast<Exponent>(j));
}

const BivarPoly &SchurEngine::c_by_andrews_recurrence(long n, long j) {
    require_index(n, 0, "c_by_andrews_recurrence");
    static const BivarPoly zero;
    if (j < 0 || j > n)
        return zero;
    if (auto it = c_rec_memo_.find({n, j}); it != c_rec_memo_.end())
        return it->second;
    BivarPoly value;
    if (n == 0) {
        value = BivarPoly(1);
    } else {
        // The q^(4j) prefactor is folded into every exponent so no negative
        // power is ever materialized.
        const BivarPoly &same = c_by_andrews_recurrence(n - 1, j);
        const BivarPoly &one_down = c_by_andrews_recurrence(n - 1, j - 1);
        const BivarPoly &two_down = c_by_andrews_recurrence(n - 1, j - 2);
        long s = 4 * j;
        value = q_scaled(s, same) + q_scaled(s + 2 * n - 3, one_down) +
                q_scaled(s + 6 * n - 2 * j - 3, one_down) + q_scaled(s + 4 * n - 6, two_down) -
                q_scaled(s + 6 * n - 2 * j - 4, two_down);
    }
    return c_rec_memo_.emplace(std::pair{n, j}, std::move(value)).first->second;
}

CoeffTable SchurEngine::rc_table(long n) {
    require_index(n, 1, "rc_table");
    return table_of(CoeffFamily::rc, n, rd_by_recurrence(n), 1);
}

BivarPoly SchurEngine::rc(long n, long j) {
    require_index(n, 1, "rc");
    if (j < 0)
        return {};
    return coeff_of_x(rd_by_recurrence(n), static_cast<Exponent>(j));
}

BivarPoly SchurEngine::rc_by_theorem3(long n, long j) {
    require_index(n, 1, "rc_by_theorem3");
    if (j < 0)
        return {};
    const long N = (n + 5) / 6;
    const long r = 6 * N - n;
    auto cc = [this](long nn, long jj) { return jj < 0 ? BivarPoly{} : c(nn, jj); };
    auto down = [](const BivarPoly &a, long e) {
        return divide_by_q_power(a, static_cast<Exponent>(e));
    };
    switch (r) {
    case 0:
        return cc(N, j) + q_scaled(6 * N + 2 * (j - 2), cc(N - 1, j - 2));
    case 1:
        return cc(N, j);
    case 2:
        return cc(N, j) - q_scaled(6 * N - 1 + 2 * (j - 1), cc(N - 1, j - 1));
    case 3:
        return down(cc(N, j), 2 * j) + q_scaled(6 * N - 4, cc(N - 1, j - 2));
    case 4:
        return q_scaled(2 * j, cc(N - 1, j));
    case 5:
        return down(cc(N, j), 2 * j) - q_scaled(6 * N - 3, cc(N - 1, j - 1));
    default:
        throw std::logic_error("rc_by_theorem3: bad residue");
    }
}

void SchurEngine::precompute(long max_n, long max_c) {
    for (long n = -1; n <= max_n; ++n) {
        d_recursive(n);
        rd_by_division(n);
        rd_by_recurrence(n);
    }
    for (long n = 0; n <= max_c; ++n) {
        rd_by_division(6 * n - 1);
        for (long j = 0; j <= n; ++j)
            c_by_andrews_recurrence(n, j);
    }
}

} // namespace schurq
