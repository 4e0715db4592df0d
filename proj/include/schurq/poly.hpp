#pragma once

// Exact sparse polynomials in two variables x and q with arbitrary-precision
// integer coefficients.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace schurq {

using Coefficient = mpz_class;
using Exponent = std::uint32_t;

/// x^xdeg q^qdeg. The canonical order is lexicographic on (xdeg, qdeg).
struct Monomial {
    Exponent xdeg = 0;
    Exponent qdeg = 0;

    friend constexpr auto operator<=>(const Monomial &, const Monomial &) = default;

    constexpr bool divides(const Monomial &other) const noexcept {
        return xdeg <= other.xdeg && qdeg <= other.qdeg;
    }
};

struct Term {
    Monomial mono;
    Coefficient coeff;

    friend bool operator==(const Term &a, const Term &b) {
        return a.mono == b.mono && a.coeff == b.coeff;
    }
};

/// Raised when a requested exact division has no polynomial quotient over
/// the integers. Carries the first obstructing term of the remainder.
class DivisionFailure : public std::runtime_error {
public:
    DivisionFailure(const std::string &what, Monomial witness, Coefficient coeff)
        : std::runtime_error(what), witness_(witness), coeff_(std::move(coeff)) {}

    const Monomial &witness() const noexcept { return witness_; }
    const Coefficient &witness_coeff() const noexcept { return coeff_; }

private:
    Monomial witness_;
    Coefficient coeff_;
};

/// Immutable-by-convention value type. Terms are kept sorted ascending in
/// the canonical order with no zero coefficients, so structural equality is
/// polynomial equality.
class BivarPoly {
public:
    BivarPoly() = default;
    BivarPoly(long constant); // NOLINT(google-explicit-constructor)
    BivarPoly(std::initializer_list<Term> terms);

    /// Builds from arbitrary terms; merges duplicates and drops zeros.
    static BivarPoly from_terms(std::vector<Term> terms);
    /// coeff * x^xdeg q^qdeg; throws std::invalid_argument on negative exponents.
    static BivarPoly monomial(long xdeg, long qdeg, Coefficient coeff = 1);
    static BivarPoly x_power(long e) { return monomial(e, 0); }
    static BivarPoly q_power(long e) { return monomial(0, e); }

    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Largest term in the canonical order. Precondition: nonzero.
    const Term &leading_term() const;
    /// Highest power of x present; 0 for the zero polynomial.
    Exponent x_degree() const noexcept;
    Exponent max_q_degree() const noexcept;
    /// Lowest q exponent over all terms; 0 for the zero polynomial.
    Exponent min_q_degree() const noexcept;
    bool has_x() const noexcept;
    /// Coefficient of x^xdeg q^qdeg (zero if absent).
    Coefficient coeff(Exponent xdeg, Exponent qdeg) const;

    BivarPoly operator-() const;
    BivarPoly &operator+=(const BivarPoly &other);
    BivarPoly &operator-=(const BivarPoly &other);
    BivarPoly &operator*=(const BivarPoly &other);

    friend BivarPoly operator+(BivarPoly a, const BivarPoly &b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly &b) { return a -= b; }
    friend BivarPoly operator*(const BivarPoly &a, const BivarPoly &b);
    friend bool operator==(const BivarPoly &a, const BivarPoly &b) = default;

private:
    explicit BivarPoly(std::vector<Term> canonical) : terms_(std::move(canonical)) {}
    friend class PolyBuilder;

    std::vector<Term> terms_;
};

BivarPoly add(const BivarPoly &a, const BivarPoly &b);
BivarPoly mul(const BivarPoly &a, const BivarPoly &b);

/// Multiplies by x^dx q^dq.
BivarPoly shift(const BivarPoly &a, Exponent dx, Exponent dq);

/// The substitution x -> x q^k: each c x^a q^b becomes c x^a q^(b + k a).
BivarPoly substitute_x_scale(const BivarPoly &a, Exponent k);

/// Quotient s with s * den == num exactly, by leading-term elimination in the
/// canonical order. Throws DivisionFailure when no such s exists and
/// std::domain_error when den is zero.
BivarPoly exact_divide(const BivarPoly &num, const BivarPoly &den);

/// a / q^e; throws DivisionFailure if some term has qdeg < e.
BivarPoly divide_by_q_power(const BivarPoly &a, Exponent e);

/// The coefficient of x^j as a polynomial in q alone.
BivarPoly coeff_of_x(const BivarPoly &a, Exponent j);

/// Drops every term with qdeg > max_q.
BivarPoly truncate_q(const BivarPoly &a, Exponent max_q);

/// Coefficientwise order on polynomials in q. Throws std::invalid_argument if
/// either argument involves x.
bool is_coeffwise_geq(const BivarPoly &a, const BivarPoly &b);

bool is_nonneg(const BivarPoly &a);

/// q^qshift (1 + q^2 + ... + q^(2k-2)), i.e. q^qshift (1 - q^(2k)) / (1 - q^2).
BivarPoly geometric_expand(long qshift, long k);

/// Renders as e.g. "1 + x q + 2 x^2 q^3" in canonical order.
std::string to_text(const BivarPoly &a);
std::ostream &operator<<(std::ostream &os, const BivarPoly &a);

} // namespace schurq
