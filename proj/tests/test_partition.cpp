#include <algorithm>
#include <set>
#include <sstream>

#include "schurq/engine.hpp"
#include "schurq/partition.hpp"
#include "test_support.hpp"

using namespace schurq;
using schurq::test::T;

namespace {

Partition P(std::vector<int> parts) {
    return Partition(std::move(parts));
}

bool odd_bounded_naive(const Partition &p) {
    const auto &parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] % 2 == 0)
            return false;
        if (i >= 2 && parts[i] == parts[i - 2])
            return false;
    }
    return true;
}

std::set<Partition> as_set(const std::vector<Partition> &v) {
    return {v.begin(), v.end()};
}

} // namespace

TEST_SUITE("partition") {

TEST_CASE("partition invariants") {
    CHECK(P({5, 3, 3, 1}).weight() == 12);
    CHECK(P({4, 2, 1}).even_parts() == 2);
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({3, 0}), std::invalid_argument);
    CHECK(schur_statistic(P({4, 1})).m == 3);
    CHECK(odd_statistic(P({5, 1})).m == 2);
}

TEST_CASE("is_schur") {
    CHECK(is_schur(P({4, 1})));
    CHECK(is_schur(P({})));
    CHECK_FALSE(is_schur(P({6, 3})));
    CHECK(is_schur(P({7, 3})));
    CHECK(is_schur(P({7, 4})));
    CHECK_FALSE(is_schur(P({3, 1})));
    CHECK_FALSE(is_schur(P({2, 2})));
    CHECK(is_schur(P({9, 5, 1})));
    CHECK_FALSE(is_schur(P({12, 9, 5})));
}

TEST_CASE("enumerate_schur small cases") {
    CHECK(as_set(enumerate_schur(3, 10)) == std::set<Partition>{P({}), P({1}), P({2}), P({3})});
    CHECK(enumerate_schur(0, 10) == std::vector<Partition>{P({})});

    std::set<Partition> weight5;
    for (const auto &p : enumerate_schur(5, 5))
        if (p.weight() == 5)
            weight5.insert(p);
    CHECK(weight5 == std::set<Partition>{P({5}), P({4, 1})});
}

TEST_CASE("enumerate_schur agrees with filtering all partitions") {
    for (int max_part : {0, 1, 4, 7, 20}) {
        for (long w = 0; w <= 20; ++w) {
            std::set<Partition> expected;
            for (const auto &p : enumerate_all(w))
                if (is_schur(p) && (p.length() == 0 || p.parts().front() <= max_part))
                    expected.insert(p);
            std::set<Partition> got;
            for (const auto &p : enumerate_schur(max_part, 20)) {
                CHECK(is_schur(p));
                if (p.weight() == w)
                    got.insert(p);
            }
            CHECK(got == expected);
        }
    }
    auto all = enumerate_schur(20, 20);
    CHECK(as_set(all).size() == all.size());
}

TEST_CASE("enumerate_odd_bounded") {
    CHECK(as_set(enumerate_odd_bounded(6)) == std::set<Partition>{P({5, 1}), P({3, 3})});
    CHECK(enumerate_odd_bounded(0) == std::vector<Partition>{P({})});
    CHECK(enumerate_odd_bounded(3) == std::vector<Partition>{P({3})});
    for (long w = 0; w <= 20; ++w) {
        std::set<Partition> expected;
        for (const auto &p : enumerate_all(w))
            if (odd_bounded_naive(p))
                expected.insert(p);
        auto got = enumerate_odd_bounded(w);
        CHECK(as_set(got) == expected);
        CHECK(as_set(got).size() == got.size());
    }
}

TEST_CASE("enumerate_all counts match the partition numbers") {
    const std::vector<std::size_t> p_of_n{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (std::size_t n = 0; n < p_of_n.size(); ++n)
        CHECK(enumerate_all(static_cast<long>(n)).size() == p_of_n[n]);
}

TEST_CASE("oracle_dN") {
    CHECK(oracle_dN(0) == BivarPoly(1));
    CHECK(oracle_dN(1) == BivarPoly{T(0, 0), T(1, 1)});
    CHECK(oracle_dN(2) == BivarPoly{T(0, 0), T(1, 1), T(2, 2)});
    CHECK(oracle_dN(4) == BivarPoly{T(0, 0), T(1, 1), T(1, 3), T(2, 2), T(2, 4), T(3, 5)});
}

TEST_CASE("oracle_dN is stable below its part bound") {
    for (int N = 0; N < 16; ++N)
        CHECK(truncate_q(oracle_dN(N), N) == truncate_q(oracle_dN(N + 1), N));
}

TEST_CASE("oracle_C_table") {
    auto t = oracle_C_table(10);
    CHECK(t.at({2, 6}) == 2);
    CHECK(t.at({0, 0}) == 1);
    CHECK(t.count({1, 4}) == 0);
}

TEST_CASE("refinement holds for small weights") {
    CHECK(oracle_C_table(20) == oracle_D_table(20));
    // The Schur side agrees with the enumerated d_n at q-degree <= n.
    auto schur = oracle_D_table(12);
    for (long n = 0; n <= 12; ++n) {
        auto d = oracle_dN(static_cast<int>(n));
        for (long m = 0; m <= 2 * n; ++m) {
            auto it = schur.find({m, n});
            long count = it == schur.end() ? 0 : static_cast<long>(it->second);
            CHECK(d.coeff(static_cast<Exponent>(m), static_cast<Exponent>(n)) == count);
        }
    }
}

TEST_CASE("p_K counts odd partitions up to weight 2K-1") {
    auto table = oracle_C_table(15);
    for (long K = 1; K <= 8; ++K) {
        auto pk = p_product(K);
        for (long n = 0; n <= 2 * K - 1; ++n)
            for (long m = 0; m <= 2 * n; ++m) {
                auto it = table.find({m, n});
                long count = it == table.end() ? 0 : static_cast<long>(it->second);
                CHECK(pk.coeff(static_cast<Exponent>(m), static_cast<Exponent>(n)) == count);
            }
    }
}

TEST_CASE("exports") {
    std::ostringstream os;
    write_count_csv(os, oracle_C_table(3));
    CHECK(os.str() == "m,n,count\n0,0,1\n1,1,1\n2,2,1\n1,3,1\n");
    CHECK(partitions_to_json(enumerate_odd_bounded(6)) == "[[5,1],[3,3]]");
}

} // TEST_SUITE
