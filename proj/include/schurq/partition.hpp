#pragma once

// Brute-force partition enumeration straight from the definitions. Nothing in
// here touches the recurrences, so it can serve as ground truth for them.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schurq/poly.hpp"

namespace schurq {

/// Weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int> &parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    long weight() const noexcept;
    long even_parts() const noexcept;

    friend bool operator==(const Partition &, const Partition &) = default;
    friend auto operator<=>(const Partition &, const Partition &) = default;

private:
    std::vector<int> parts_;
};

/// (m, n): the x-statistic and the weight.
struct PartitionStatistic {
    long m = 0;
    long n = 0;
    friend auto operator<=>(const PartitionStatistic &, const PartitionStatistic &) = default;
};

/// Number of parts plus number of even parts.
PartitionStatistic schur_statistic(const Partition &p);
/// Number of parts.
PartitionStatistic odd_statistic(const Partition &p);

/// Parts differ by at least 3 and no two parts are 3k and 3k + 3.
bool is_schur(const Partition &p);

using PartitionVisitor = std::function<void(const Partition &)>;

/// Visits every Schur partition with parts <= max_part and weight <= max_weight.
void for_each_schur(int max_part, long max_weight, const PartitionVisitor &visit);
std::vector<Partition> enumerate_schur(int max_part, long max_weight);

/// Partitions of `weight` into odd parts, each used at most twice.
void for_each_odd_bounded(long weight, const PartitionVisitor &visit);
std::vector<Partition> enumerate_odd_bounded(long weight);

/// All partitions of `weight`, unfiltered, in reverse lexicographic order.
std::vector<Partition> enumerate_all(long weight);

/// Sum of x^m q^|pi| over Schur partitions with parts <= max_part.
BivarPoly oracle_dN(int max_part);

/// (m, n) -> |C(m, n)| for every n <= max_weight; zero counts are omitted.
using CountTable = std::map<std::pair<long, long>, std::uint64_t>;
CountTable oracle_C_table(long max_weight);

/// (m, n) -> number of Schur partitions of n with statistic m, for n <= max_weight.
CountTable oracle_D_table(long max_weight);

/// CSV with header "m,n,count", rows sorted by (n, m).
void write_count_csv(std::ostream &os, const CountTable &table);

/// JSON array of part arrays.
std::string partitions_to_json(const std::vector<Partition> &parts);

} // namespace schurq
