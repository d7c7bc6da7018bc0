#include "qmodw/hamming_mod.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "qmodw/errors.hpp"
#include "qmodw/subroutines.hpp"

namespace qmodw {

namespace {

std::vector<Index> sorted(std::vector<Index> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Disjoint consecutive groups of `group` indices; the remainder is read bit by bit.
PartitionResult base_case(CountingOracle& oracle, std::span<const Index> indices, std::uint64_t m) {
    PartitionResult out;
    const std::size_t full = indices.size() - indices.size() % m;
    for (std::size_t start = 0; start < full; start += m) {
        const auto group = indices.subspan(start, m);
        const int outcome = m == 2 ? deutsch(oracle, group[0], group[1]) : mod3(oracle, group[0], group[1], group[2]);
        if (outcome == 0) {
            // weight is 0 or m, so the group is constant
            out.blocks.push_back(sorted({group.begin(), group.end()}));
        } else {
            // a group of size m with weight = outcome (mod m) and 0 < weight < m
            out.s2.insert(out.s2.end(), group.begin(), group.end());
            out.w2 += static_cast<std::uint64_t>(outcome);
        }
    }
    for (std::size_t k = full; k < indices.size(); ++k) {
        out.w2 += oracle.query_bit(indices[k]);
        out.s2.push_back(indices[k]);
    }
    std::sort(out.s2.begin(), out.s2.end());
    return out;
}

PartitionResult partition_rec(CountingOracle& oracle, std::span<const Index> indices, std::uint64_t m) {
    const ModulusSchedule schedule = factor_split(m);
    if (!schedule.split) return base_case(oracle, indices, m);
    const auto [m1, m2] = *schedule.split;

    // Step 1: blocks of size m1.
    PartitionResult first = partition_rec(oracle, indices, m1);

    // Step 2: one representative (the smallest index) per block, then recurse with m2.
    std::vector<Index> reps;
    reps.reserve(first.blocks.size());
    std::unordered_map<Index, std::size_t> block_of;
    for (std::size_t j = 0; j < first.blocks.size(); ++j) {
        reps.push_back(first.blocks[j].front());
        block_of.emplace(first.blocks[j].front(), j);
    }
    PartitionResult second = partition_rec(oracle, reps, m2);

    // Step 3: each m2-block of representatives expands into an m-block.
    PartitionResult out;
    for (const auto& rep_block : second.blocks) {
        std::vector<Index> merged;
        merged.reserve(m);
        for (Index a : rep_block) {
            const auto& b = first.blocks[block_of.at(a)];
            merged.insert(merged.end(), b.begin(), b.end());
        }
        out.blocks.push_back(sorted(std::move(merged)));
    }
    out.s2 = std::move(first.s2);
    for (Index a : second.s2) {
        const auto& b = first.blocks[block_of.at(a)];
        out.s2.insert(out.s2.end(), b.begin(), b.end());
    }
    std::sort(out.s2.begin(), out.s2.end());
    out.w2 = first.w2 + m1 * second.w2;
    return out;
}

}  // namespace

std::uint64_t query_bound(std::uint64_t n, std::uint64_t m) {
    if (m < 2) throw DomainError("modulus must be at least 2");
    return n - n / m;
}

bool is_supported_modulus(std::uint64_t m) {
    if (m < 2) return false;
    while (m % 2 == 0) m /= 2;
    while (m % 3 == 0) m /= 3;
    return m == 1;
}

ModulusSchedule factor_split(std::uint64_t m) {
    if (m < 2) throw DomainError("modulus must be at least 2");
    if (!is_supported_modulus(m))
        throw UnsupportedModulus("modulus " + std::to_string(m) + " has a prime factor other than 2 or 3");
    if (m == 2 || m == 3) return {m, std::nullopt};
    const std::uint64_t p = m % 2 == 0 ? 2 : 3;
    return {m, std::make_pair(p, m / p)};
}

PartitionResult partition_weight(CountingOracle& oracle, std::span<const Index> indices, std::uint64_t m) {
    factor_split(m);  // validates m before any query is spent
    {
        std::vector<Index> check(indices.begin(), indices.end());
        std::sort(check.begin(), check.end());
        if (std::adjacent_find(check.begin(), check.end()) != check.end())
            throw DomainError("partition indices must be distinct");
        if (!check.empty() && (check.front() < 1 || check.back() > oracle.size()))
            throw IndexOutOfRange("partition index outside [1, " + std::to_string(oracle.size()) + "]");
    }
    const std::uint64_t before = oracle.query_count();
    PartitionResult out = partition_rec(oracle, indices, m);
    out.queries = oracle.query_count() - before;
    return out;
}

PartitionResult partition_all(CountingOracle& oracle, std::uint64_t m) {
    std::vector<Index> all(oracle.size());
    std::iota(all.begin(), all.end(), Index{1});
    return partition_weight(oracle, all, m);
}

std::uint64_t weight_mod(CountingOracle& oracle, std::uint64_t m) { return partition_all(oracle, m).w2 % m; }

std::string audit_partition(const BitString& x, std::span<const Index> indices, std::uint64_t m,
                            const PartitionResult& result) {
    std::vector<Index> seen;
    for (const auto& block : result.blocks) {
        if (block.size() != m) return "block of size " + std::to_string(block.size()) + " instead of " + std::to_string(m);
        for (Index i : block)
            if (x.at(i - 1) != x.at(block.front() - 1)) return "block starting at " + std::to_string(block.front()) + " is not constant";
        seen.insert(seen.end(), block.begin(), block.end());
    }
    std::uint64_t weight = 0;
    for (Index i : result.s2) weight += x.at(i - 1);
    if (weight != result.w2) return "w2 = " + std::to_string(result.w2) + " but |x_S2| = " + std::to_string(weight);
    seen.insert(seen.end(), result.s2.begin(), result.s2.end());
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return "blocks and s2 overlap";
    std::vector<Index> expected(indices.begin(), indices.end());
    std::sort(expected.begin(), expected.end());
    if (seen != expected) return "blocks and s2 do not cover the queried indices";
    if (result.queries > query_bound(indices.size(), m))
        return "used " + std::to_string(result.queries) + " queries, bound is " +
               std::to_string(query_bound(indices.size(), m));
    return {};
}

}  // namespace qmodw
