#include "schurq/partition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace schurq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

long Partition::weight() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

long Partition::even_parts() const noexcept {
    long n = 0;
    for (int p : parts_)
        n += p % 2 == 0;
    return n;
}

PartitionStatistic schur_statistic(const Partition &p) {
    return {static_cast<long>(p.length()) + p.even_parts(), p.weight()};
}

PartitionStatistic odd_statistic(const Partition &p) {
    return {static_cast<long>(p.length()), p.weight()};
}

namespace {

// Whether `smaller` may sit directly below `larger` in a Schur partition.
bool schur_adjacent_ok(int larger, int smaller) {
    int gap = larger - smaller;
    if (gap < 3)
        return false;
    return !(gap == 3 && smaller % 3 == 0);
}

} // namespace

bool is_schur(const Partition &p) {
    const auto &parts = p.parts();
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (!schur_adjacent_ok(parts[i - 1], parts[i]))
            return false;
    return true;
}

namespace {

// Builds parts from the smallest upward so the gap rule prunes each branch as
// soon as it is placed. `parts` holds them in increasing order.
void schur_descend(std::vector<int> &parts, int max_part, long remaining,
                   const PartitionVisitor &visit) {
    visit(Partition(std::vector<int>(parts.rbegin(), parts.rend())));
    int lo = parts.empty() ? 1 : parts.back() + 3;
    for (int next = lo; next <= max_part && next <= remaining; ++next) {
        if (!parts.empty() && !schur_adjacent_ok(next, parts.back()))
            continue;
        parts.push_back(next);
        schur_descend(parts, max_part, remaining - next, visit);
        parts.pop_back();
    }
}

void odd_descend(std::vector<int> &parts, int max_part, long remaining,
                 const PartitionVisitor &visit) {
    if (remaining == 0) {
        visit(Partition(parts));
        return;
    }
    for (int part = std::min<long>(max_part, remaining) | 1; part >= 1; part -= 2) {
        if (part > remaining || part > max_part)
            continue;
        for (int copies = 1; copies <= 2 && part * copies <= remaining; ++copies) {
            parts.insert(parts.end(), copies, part);
            odd_descend(parts, part - 2, remaining - part * copies, visit);
            parts.resize(parts.size() - copies);
        }
    }
}

void all_descend(std::vector<int> &parts, int max_part, long remaining,
                 std::vector<Partition> &out) {
    if (remaining == 0) {
        out.emplace_back(parts);
        return;
    }
    for (int part = static_cast<int>(std::min<long>(max_part, remaining)); part >= 1; --part) {
        parts.push_back(part);
        all_descend(parts, part, remaining - part, out);
        parts.pop_back();
    }
}

} // namespace

void for_each_schur(int max_part, long max_weight, const PartitionVisitor &visit) {
    std::vector<int> parts;
    if (max_weight < 0)
        return;
    schur_descend(parts, std::max(max_part, 0), max_weight, visit);
}

std::vector<Partition> enumerate_schur(int max_part, long max_weight) {
    std::vector<Partition> out;
    for_each_schur(max_part, max_weight, [&](const Partition &p) { out.push_back(p); });
    return out;
}

void for_each_odd_bounded(long weight, const PartitionVisitor &visit) {
    if (weight < 0)
        return;
    std::vector<int> parts;
    odd_descend(parts, static_cast<int>(weight | 1), weight, visit);
}

std::vector<Partition> enumerate_odd_bounded(long weight) {
    std::vector<Partition> out;
    for_each_odd_bounded(weight, [&](const Partition &p) { out.push_back(p); });
    return out;
}

std::vector<Partition> enumerate_all(long weight) {
    std::vector<Partition> out;
    if (weight < 0)
        return out;
    std::vector<int> parts;
    all_descend(parts, static_cast<int>(weight), weight, out);
    return out;
}

BivarPoly oracle_dN(int max_part) {
    // The largest possible weight is max_part + (max_part - 3) + ..., so a
    // weight cap of max_part^2 never bites.
    std::map<Monomial, Coefficient> acc;
    long cap = static_cast<long>(std::max(max_part, 0)) * std::max(max_part, 1);
    for_each_schur(max_part, cap, [&](const Partition &p) {
        auto s = schur_statistic(p);
        acc[{static_cast<Exponent>(s.m), static_cast<Exponent>(s.n)}] += 1;
    });
    std::vector<Term> terms;
    for (auto &[m, c] : acc)
        terms.push_back({m, std::move(c)});
    return BivarPoly::from_terms(std::move(terms));
}

CountTable oracle_C_table(long max_weight) {
    CountTable table;
    for (long n = 0; n <= max_weight; ++n)
        for_each_odd_bounded(n, [&](const Partition &p) {
            auto s = odd_statistic(p);
            ++table[{s.m, s.n}];
        });
    return table;
}

CountTable oracle_D_table(long max_weight) {
    CountTable table;
    if (max_weight < 0)
        return table;
    for_each_schur(static_cast<int>(max_weight), max_weight, [&](const Partition &p) {
        auto s = schur_statistic(p);
        ++table[{s.m, s.n}];
    });
    return table;
}

void write_count_csv(std::ostream &os, const CountTable &table) {
    std::vector<std::pair<std::pair<long, long>, std::uint64_t>> rows(table.begin(), table.end());
    std::sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) {
        return std::pair(a.first.second, a.first.first) < std::pair(b.first.second, b.first.first);
    });
    os << "m,n,count\n";
    for (const auto &[key, count] : rows)
        os << key.first << ',' << key.second << ',' << count << '\n';
}

std::string partitions_to_json(const std::vector<Partition> &parts) {
    auto out = nlohmann::json::array();
    for (const auto &p : parts)
        out.push_back(p.parts());
    return out.dump();
}

} // namespace schurq
