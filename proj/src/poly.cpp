#include "schurq/poly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace schurq {

namespace {

// Dense scratch grids above this many cells fall back to an ordered map.
constexpr std::size_t kDenseCellLimit = std::size_t{1} << 22;

Exponent checked_exponent(long e, const char *what) {
    if (e < 0)
        throw std::invalid_argument(std::string("negative exponent for ") + what);
    return static_cast<Exponent>(e);
}

} // namespace

/// Accumulates terms into a bounded box [0, xmax] x [0, qmax], densely when
/// the box is small enough and through an ordered map otherwise.
class PolyBuilder {
public:
    PolyBuilder(Exponent xmax, Exponent qmax)
        : width_(std::size_t{qmax} + 1) {
        const std::size_t cells = (std::size_t{xmax} + 1) * width_;
        if (cells <= kDenseCellLimit)
            cells_.resize(cells);
    }

    bool dense() const noexcept { return !cells_.empty(); }

    void add(Monomial m, const Coefficient &c) {
        if (dense())
            cells_[index(m)] += c;
        else
            sparse_[m] += c;
    }

    void addmul(Monomial m, const Coefficient &a, const Coefficient &b) {
        if (dense()) {
            mpz_addmul(cells_[index(m)].get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        } else {
            auto &slot = sparse_[m];
            mpz_addmul(slot.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        }
    }

    void submul(Monomial m, const Coefficient &a, const Coefficient &b) {
        if (dense()) {
            mpz_submul(cells_[index(m)].get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        } else {
            auto &slot = sparse_[m];
            mpz_submul(slot.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        }
    }

    /// Moves cursor to the largest nonzero term at or below it (strictly below
    /// unless inclusive). Returns false when none remains.
    bool next_leading(Monomial &cursor, bool inclusive, Coefficient &out) {
        if (dense()) {
            std::size_t idx = index(cursor);
            if (!inclusive) {
                if (idx == 0)
                    return false;
                --idx;
            }
            for (;; --idx) {
                if (sgn(cells_[idx]) != 0) {
                    cursor = {static_cast<Exponent>(idx / width_),
                              static_cast<Exponent>(idx % width_)};
                    out = cells_[idx];
                    return true;
                }
                if (idx == 0)
                    return false;
            }
        }
        auto it = inclusive ? sparse_.upper_bound(cursor) : sparse_.lower_bound(cursor);
        while (it != sparse_.begin()) {
            --it;
            if (sgn(it->second) != 0) {
                cursor = it->first;
                out = it->second;
                return true;
            }
        }
        return false;
    }

    BivarPoly finish() && {
        std::vector<Term> out;
        if (dense()) {
            for (std::size_t i = 0; i < cells_.size(); ++i) {
                if (sgn(cells_[i]) != 0)
                    out.push_back({{static_cast<Exponent>(i / width_),
                                    static_cast<Exponent>(i % width_)},
                                   std::move(cells_[i])});
            }
        } else {
            for (auto &[m, c] : sparse_)
                if (sgn(c) != 0)
                    out.push_back({m, std::move(c)});
        }
        return BivarPoly(std::move(out));
    }

private:
    std::size_t index(Monomial m) const noexcept {
        return std::size_t{m.xdeg} * width_ + m.qdeg;
    }

    std::size_t width_;
    std::vector<Coefficient> cells_;
    std::map<Monomial, Coefficient> sparse_;
};

BivarPoly::BivarPoly(long constant) {
    if (constant != 0)
        terms_.push_back({{0, 0}, Coefficient(constant)});
}

BivarPoly::BivarPoly(std::initializer_list<Term> terms)
    : BivarPoly(from_terms(std::vector<Term>(terms))) {}

BivarPoly BivarPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term &a, const Term &b) { return a.mono < b.mono; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto &t : terms) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else {
            if (!out.empty() && sgn(out.back().coeff) == 0)
                out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && sgn(out.back().coeff) == 0)
        out.pop_back();
    return BivarPoly(std::move(out));
}

BivarPoly BivarPoly::monomial(long xdeg, long qdeg, Coefficient coeff) {
    Monomial m{checked_exponent(xdeg, "x"), checked_exponent(qdeg, "q")};
    if (sgn(coeff) == 0)
        return {};
    return BivarPoly(std::vector<Term>{{m, std::move(coeff)}});
}

const Term &BivarPoly::leading_term() const {
    if (terms_.empty())
        throw std::domain_error("leading term of the zero polynomial");
    return terms_.back();
}

Exponent BivarPoly::x_degree() const noexcept {
    return terms_.empty() ? 0 : terms_.back().mono.xdeg;
}

Exponent BivarPoly::max_q_degree() const noexcept {
    Exponent best = 0;
    for (const auto &t : terms_)
        best = std::max(best, t.mono.qdeg);
    return best;
}

Exponent BivarPoly::min_q_degree() const noexcept {
    if (terms_.empty())
        return 0;
    Exponent best = terms_.front().mono.qdeg;
    for (const auto &t : terms_)
        best = std::min(best, t.mono.qdeg);
    return best;
}

bool BivarPoly::has_x() const noexcept {
    return x_degree() > 0;
}

Coefficient BivarPoly::coeff(Exponent xdeg, Exponent qdeg) const {
    Monomial m{xdeg, qdeg};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term &t, const Monomial &key) { return t.mono < key; });
    if (it != terms_.end() && it->mono == m)
        return it->coeff;
    return 0;
}

BivarPoly BivarPoly::operator-() const {
    auto out = terms_;
    for (auto &t : out)
        t.coeff = -t.coeff;
    return BivarPoly(std::move(out));
}

namespace {

template <typename Combine>
std::vector<Term> merge_terms(const std::vector<Term> &a, std::span<const Term> b, Combine combine) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->mono < ib->mono)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->mono < ia->mono) {
            out.push_back({ib->mono, combine(Coefficient(0), ib->coeff)});
            ++ib;
        } else {
            Coefficient c = combine(ia->coeff, ib->coeff);
            if (sgn(c) != 0)
                out.push_back({ia->mono, std::move(c)});
            ++ia;
            ++ib;
        }
    }
    return out;
}

} // namespace

BivarPoly &BivarPoly::operator+=(const BivarPoly &other) {
    terms_ = merge_terms(terms_, other.terms_,
                         [](const Coefficient &x, const Coefficient &y) -> Coefficient { return x + y; });
    return *this;
}

BivarPoly &BivarPoly::operator-=(const BivarPoly &other) {
    terms_ = merge_terms(terms_, other.terms_,
                         [](const Coefficient &x, const Coefficient &y) -> Coefficient { return x - y; });
    return *this;
}

BivarPoly &BivarPoly::operator*=(const BivarPoly &other) {
    *this = *this * other;
    return *this;
}

BivarPoly operator*(const BivarPoly &a, const BivarPoly &b) {
    if (a.is_zero() || b.is_zero())
        return {};
    PolyBuilder acc(a.x_degree() + b.x_degree(), a.max_q_degree() + b.max_q_degree());
    for (const auto &ta : a.terms_)
        for (const auto &tb : b.terms_)
            acc.addmul({ta.mono.xdeg + tb.mono.xdeg, ta.mono.qdeg + tb.mono.qdeg}, ta.coeff, tb.coeff);
    return std::move(acc).finish();
}

BivarPoly add(const BivarPoly &a, const BivarPoly &b) {
    return a + b;
}

BivarPoly mul(const BivarPoly &a, const BivarPoly &b) {
    return a * b;
}

BivarPoly shift(const BivarPoly &a, Exponent dx, Exponent dq) {
    std::vector<Term> out(a.terms().begin(), a.terms().end());
    for (auto &t : out) {
        t.mono.xdeg += dx;
        t.mono.qdeg += dq;
    }
    return BivarPoly::from_terms(std::move(out));
}

BivarPoly substitute_x_scale(const BivarPoly &a, Exponent k) {
    std::vector<Term> out(a.terms().begin(), a.terms().end());
    for (auto &t : out)
        t.mono.qdeg += k * t.mono.xdeg;
    // x-major order is preserved and (x, q) -> (x, q + kx) is injective.
    return BivarPoly::from_terms(std::move(out));
}

BivarPoly exact_divide(const BivarPoly &num, const BivarPoly &den) {
    if (den.is_zero())
        throw std::domain_error("exact_divide: zero divisor");
    if (num.is_zero())
        return {};

    const Term &lead = den.leading_term();
    // Rows only feed lower rows, and each step down raises q by at most
    // den's top q-degree, which bounds the remainder's box.
    const Exponent qbox = num.max_q_degree() + num.x_degree() * den.max_q_degree();
    PolyBuilder rem(num.x_degree(), qbox);
    for (const auto &t : num.terms())
        rem.add(t.mono, t.coeff);

    std::vector<Term> quotient;
    Monomial cursor = num.leading_term().mono;
    Coefficient c;
    Coefficient qc;
    bool inclusive = true;
    while (rem.next_leading(cursor, inclusive, c)) {
        inclusive = false;
        if (!lead.mono.divides(cursor))
            throw DivisionFailure("exact_divide: leading monomial not divisible", cursor, c);
        if (!mpz_divisible_p(c.get_mpz_t(), lead.coeff.get_mpz_t()))
            throw DivisionFailure("exact_divide: coefficient not divisible", cursor, c);
        mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), lead.coeff.get_mpz_t());
        Monomial qm{cursor.xdeg - lead.mono.xdeg, cursor.qdeg - lead.mono.qdeg};
        for (const auto &t : den.terms())
            rem.submul({qm.xdeg + t.mono.xdeg, qm.qdeg + t.mono.qdeg}, qc, t.coeff);
        quotient.push_back({qm, qc});
    }
    return BivarPoly::from_terms(std::move(quotient));
}

BivarPoly divide_by_q_power(const BivarPoly &a, Exponent e) {
    std::vector<Term> out(a.terms().begin(), a.terms().end());
    for (auto &t : out) {
        if (t.mono.qdeg < e)
            throw DivisionFailure("divide_by_q_power: q-exponent below divisor", t.mono, t.coeff);
        t.mono.qdeg -= e;
    }
    return BivarPoly::from_terms(std::move(out));
}

BivarPoly coeff_of_x(const BivarPoly &a, Exponent j) {
    std::vector<Term> out;
    for (const auto &t : a.terms())
        if (t.mono.xdeg == j)
            out.push_back({{0, t.mono.qdeg}, t.coeff});
    return BivarPoly::from_terms(std::move(out));
}

BivarPoly truncate_q(const BivarPoly &a, Exponent max_q) {
    std::vector<Term> out;
    for (const auto &t : a.terms())
        if (t.mono.qdeg <= max_q)
            out.push_back(t);
    return BivarPoly::from_terms(std::move(out));
}

bool is_coeffwise_geq(const BivarPoly &a, const BivarPoly &b) {
    if (a.has_x() || b.has_x())
        throw std::invalid_argument("is_coeffwise_geq: arguments must be polynomials in q");
    return is_nonneg(a - b);
}

bool is_nonneg(const BivarPoly &a) {
    return std::all_of(a.terms().begin(), a.terms().end(),
                       [](const Term &t) { return sgn(t.coeff) > 0; });
}

BivarPoly geometric_expand(long qshift, long k) {
    if (qshift < 0)
        throw std::invalid_argument("geometric_expand: negative shift");
    if (k < 1)
        throw std::invalid_argument("geometric_expand: k must be positive");
    std::vector<Term> out;
    out.reserve(static_cast<std::size_t>(k));
    for (long i = 0; i < k; ++i)
        out.push_back({{0, static_cast<Exponent>(qshift + 2 * i)}, 1});
    return BivarPoly::from_terms(std::move(out));
}

std::string to_text(const BivarPoly &a) {
    if (a.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &t : a.terms()) {
        Coefficient mag = abs(t.coeff);
        bool neg = sgn(t.coeff) < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;

        bool constant = t.mono.xdeg == 0 && t.mono.qdeg == 0;
        std::vector<std::string> factors;
        if (mag != 1 || constant)
            factors.push_back(mag.get_str());
        if (t.mono.xdeg == 1)
            factors.emplace_back("x");
        else if (t.mono.xdeg > 1)
            factors.push_back("x^" + std::to_string(t.mono.xdeg));
        if (t.mono.qdeg == 1)
            factors.emplace_back("q");
        else if (t.mono.qdeg > 1)
            factors.push_back("q^" + std::to_string(t.mono.qdeg));
        for (std::size_t i = 0; i < factors.size(); ++i)
            os << (i ? " " : "") << factors[i];
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const BivarPoly &a) {
    return os << to_text(a);
}

} // namespace schurq
