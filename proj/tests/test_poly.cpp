#include <random>

#include "schurq/poly.hpp"
#include "schurq/poly_json.hpp"
#include "test_support.hpp"

using namespace schurq;
using schurq::test::qpoly;
using schurq::test::random_poly;
using schurq::test::T;

namespace {

const BivarPoly kOnePlusXq{T(0, 0), T(1, 1)};
const BivarPoly kRd3{T(0, 0), T(1, 1), T(1, 3), T(2, 2)};
const BivarPoly kRd6{T(0, 0), T(1, 3), T(1, 5), T(2, 6)};
const BivarPoly kD4{T(0, 0), T(1, 1), T(1, 3), T(2, 2), T(2, 4), T(3, 5)};

} // namespace

TEST_SUITE("poly") {

TEST_CASE("canonical form drops zeros and merges duplicates") {
    auto p = BivarPoly::from_terms({T(1, 1, 2), T(0, 0, 0), T(1, 1, -2), T(2, 0, 3), T(2, 0, 1)});
    REQUIRE(p.size() == 1);
    CHECK(p == BivarPoly{T(2, 0, 4)});
    CHECK(BivarPoly(0).is_zero());
    CHECK_THROWS_AS(BivarPoly::monomial(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(BivarPoly::monomial(0, -3), std::invalid_argument);
}

TEST_CASE("add") {
    CHECK(kOnePlusXq + BivarPoly{} == kOnePlusXq);
    CHECK((kOnePlusXq + (-kOnePlusXq)).is_zero());
    CHECK(add(kOnePlusXq, BivarPoly{T(1, 1), T(2, 2)}) == BivarPoly{T(0, 0), T(1, 1, 2), T(2, 2)});
}

TEST_CASE("mul") {
    BivarPoly lambda1{T(0, 0), T(1, 1), T(2, 2)};
    BivarPoly rd4{T(0, 0), T(1, 3)};
    CHECK(mul(lambda1, rd4) == kD4);
    CHECK(mul(kRd3, BivarPoly{}).is_zero());
    CHECK(mul(kRd3, BivarPoly(1)) == kRd3);
}

TEST_CASE("substitute_x_scale") {
    CHECK(substitute_x_scale(kRd3, 2) == kRd6);
    CHECK(substitute_x_scale(BivarPoly(5), 7) == BivarPoly(5));
    CHECK(substitute_x_scale(BivarPoly{T(2, 1)}, 3) == BivarPoly{T(2, 7)});
}

TEST_CASE("exact_divide") {
    BivarPoly p1{T(0, 0), T(1, 1), T(2, 2)};
    CHECK(exact_divide(kD4, p1) == BivarPoly{T(0, 0), T(1, 3)});
    CHECK(exact_divide(kRd6, kRd6) == BivarPoly(1));
    CHECK(exact_divide(BivarPoly{}, kRd6).is_zero());
    CHECK_THROWS_AS(exact_divide(kRd6, BivarPoly{}), std::domain_error);
    CHECK(exact_divide(BivarPoly{T(0, 0, 6)}, BivarPoly{T(0, 0, 3)}) == BivarPoly(2));
    CHECK_THROWS_AS(exact_divide(BivarPoly{T(0, 0, 5)}, BivarPoly{T(0, 0, 3)}), DivisionFailure);
}

TEST_CASE("exact_divide reports failure when no integer quotient exists") {
    const BivarPoly num = kOnePlusXq;
    const BivarPoly den{T(0, 0), T(1, 2)};
    // Exhaustive oracle: no candidate with x-degree <= 1, q-degree <= 2 and
    // coefficients in [-2, 2] multiplies back to num.
    std::vector<Monomial> slots;
    for (Exponent x = 0; x <= 1; ++x)
        for (Exponent q = 0; q <= 2; ++q)
            slots.push_back({x, q});
    std::vector<long> coeffs(slots.size(), -2);
    bool found = false;
    for (;;) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < slots.size(); ++i)
            terms.push_back({slots[i], Coefficient(coeffs[i])});
        if (BivarPoly::from_terms(terms) * den == num)
            found = true;
        std::size_t i = 0;
        while (i < coeffs.size() && ++coeffs[i] > 2)
            coeffs[i++] = -2;
        if (i == coeffs.size())
            break;
    }
    CHECK_FALSE(found);

    try {
        (void)exact_divide(num, den);
        FAIL("expected DivisionFailure");
    } catch (const DivisionFailure &e) {
        // x q is the leading term; x q^2 does not divide it.
        CHECK(e.witness() == Monomial{1, 1});
        CHECK(e.witness_coeff() == 1);
    }
}

TEST_CASE("divide_by_q_power") {
    CHECK(divide_by_q_power(qpoly({3, 5}), 2) == qpoly({1, 3}));
    // c(1,1) = q^3 + q^5 is divisible by q^(2j) with j = 1.
    CHECK(divide_by_q_power(qpoly({3, 5}), 2) == qpoly({1, 3}));
    CHECK_THROWS_AS(divide_by_q_power(qpoly({0, 1}), 1), DivisionFailure);
    CHECK(divide_by_q_power(BivarPoly{}, 9).is_zero());
}

TEST_CASE("coeff_of_x") {
    BivarPoly rd5{T(0, 0), T(1, 3), T(1, 5)};
    CHECK(coeff_of_x(rd5, 1) == qpoly({3, 5}));
    CHECK(coeff_of_x(rd5, 4).is_zero());
    CHECK(coeff_of_x(kRd3, 2) == qpoly({2}));
    CHECK_FALSE(coeff_of_x(kRd3, 1).has_x());
}

TEST_CASE("is_coeffwise_geq") {
    CHECK(is_coeffwise_geq(qpoly({3, 5}), qpoly({5})));
    CHECK(is_coeffwise_geq(qpoly({3, 5}), qpoly({3, 5})));
    CHECK_FALSE(is_coeffwise_geq(qpoly({2}), qpoly({3})));
    CHECK_THROWS_AS(is_coeffwise_geq(kOnePlusXq, BivarPoly(1)), std::invalid_argument);
    CHECK_THROWS_AS(is_coeffwise_geq(BivarPoly(1), kOnePlusXq), std::invalid_argument);
}

TEST_CASE("is_nonneg") {
    CHECK(is_nonneg(kRd6));
    CHECK(is_nonneg(BivarPoly{}));
    CHECK_FALSE(is_nonneg(BivarPoly{T(0, 0), T(1, 1, -1)}));
}

TEST_CASE("geometric_expand") {
    CHECK(geometric_expand(3, 2) == qpoly({3, 5}));
    CHECK(geometric_expand(0, 1) == BivarPoly(1));
    CHECK(geometric_expand(5, 4) == qpoly({5, 7, 9, 11}));
    CHECK_THROWS_AS(geometric_expand(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(geometric_expand(0, 0), std::invalid_argument);
}

TEST_CASE("text rendering") {
    CHECK(to_text(BivarPoly{}) == "0");
    CHECK(to_text(kD4) == "1 + x q + x q^3 + x^2 q^2 + x^2 q^4 + x^3 q^5");
    CHECK(to_text(BivarPoly{T(0, 0, -3), T(1, 1, -1), T(0, 4, 2)}) == "-3 + 2 q^4 - x q");
}

TEST_CASE("json round trip") {
    CHECK(to_json_string(kRd3) == R"([[0,0,"1"],[1,1,"1"],[1,3,"1"],[2,2,"1"]])");
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        auto a = random_poly(rng) * random_poly(rng);
        auto s = to_json_string(a);
        CHECK(from_json_string(s) == a);
        CHECK(to_json_string(from_json_string(s)) == s);
    }
    Coefficient huge;
    huge.set_str("123456789012345678901234567890", 10);
    BivarPoly big = BivarPoly::from_terms({{{1, 2}, huge}});
    CHECK(from_json_string(to_json_string(big)) == big);
    CHECK_THROWS_AS(from_json_string("[[0,0,1]]"), std::invalid_argument);
    CHECK_THROWS_AS(from_json_string("[[0,-1,\"1\"]]"), std::invalid_argument);
    CHECK_THROWS_AS(from_json_string("{"), std::invalid_argument);
}

TEST_CASE("ring properties on random polynomials") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_poly(rng);
        auto b = random_poly(rng);
        auto c = random_poly(rng);
        CHECK((a + (-a)).is_zero());
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(substitute_x_scale(a * b, 3) == substitute_x_scale(a, 3) * substitute_x_scale(b, 3));
        CHECK(substitute_x_scale(a + b, 2) == substitute_x_scale(a, 2) + substitute_x_scale(b, 2));

        BivarPoly reassembled;
        for (Exponent j = 0; j <= a.x_degree(); ++j)
            reassembled += coeff_of_x(a, j) * BivarPoly::x_power(j);
        CHECK(reassembled == a);
    }
}

TEST_CASE("division round trip on random products") {
    std::mt19937 rng(99);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_poly(rng);
        auto b = random_poly(rng);
        if (b.is_zero())
            continue;
        auto prod = a * b;
        CHECK(exact_divide(prod, b) == a);
        ++checked;

        // Any successful division multiplies back exactly.
        auto c = random_poly(rng);
        try {
            auto s = exact_divide(c, b);
            CHECK(s * b == c);
        } catch (const DivisionFailure &) {
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("q-power division round trip") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_poly(rng);
        Exponent e = rng() % 6;
        try {
            auto s = divide_by_q_power(a, e);
            CHECK(shift(s, 0, e) == a);
            CHECK((a.is_zero() || a.min_q_degree() >= e));
        } catch (const DivisionFailure &) {
            CHECK(a.min_q_degree() < e);
        }
    }
}

TEST_CASE("large exponents take the sparse accumulator path") {
    BivarPoly a{T(0, 0), T(0, 5'000'000)};
    BivarPoly b{T(0, 0), T(1, 2, 3)};
    auto prod = a * b;
    CHECK(prod == BivarPoly{T(0, 0), T(1, 2, 3), T(0, 5'000'000), T(1, 5'000'002, 3)});
    CHECK(exact_divide(prod, b) == a);
    CHECK(exact_divide(prod, a) == b);
    CHECK_THROWS_AS(exact_divide(prod + BivarPoly(1), a), DivisionFailure);
}

} // TEST_SUITE
