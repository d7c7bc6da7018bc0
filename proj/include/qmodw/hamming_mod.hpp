#pragma once

// Recursive exact algorithm for the Hamming weight modulo m = 2^a 3^b.
//
// partition_weight splits the queried positions into constant blocks of size m
// (S1) and a remainder S2 whose weight is known exactly, so |x| mod m equals
// |x_{S2}| mod m. It uses at most n - floor(n/m) queries.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qmodw/oracle.hpp"

namespace qmodw {

struct PartitionResult {
    std::vector<std::vector<Index>> blocks;  // each sorted, size m, x constant on it
    std::vector<Index> s2;                   // sorted
    std::uint64_t w2 = 0;                    // |x restricted to s2|
    std::uint64_t queries = 0;
};

struct ModulusSchedule {
    std::uint64_t m = 0;
    /// (m1, m2) with m = m1 * m2; empty for the base cases 2 and 3.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> split;
};

/// ceil(n (1 - 1/m)) = n - floor(n/m). Throws DomainError when m < 2.
std::uint64_t query_bound(std::uint64_t n, std::uint64_t m);

/// Base case for 2 and 3, otherwise (smallest prime factor, m / that factor).
/// Throws DomainError when m < 2 and UnsupportedModulus when m has a prime
/// factor other than 2 or 3.
ModulusSchedule factor_split(std::uint64_t m);

/// True iff m >= 2 and m = 2^a 3^b.
bool is_supported_modulus(std::uint64_t m);

PartitionResult partition_weight(CountingOracle& oracle, std::span<const Index> indices, std::uint64_t m);

/// |x| mod m over all n input positions.
std::uint64_t weight_mod(CountingOracle& oracle, std::uint64_t m);

/// Runs partition_weight over [1, n].
PartitionResult partition_all(CountingOracle& oracle, std::uint64_t m);

/// Post-hoc audit of a PartitionResult against the known input. Returns an
/// empty string when every invariant holds, otherwise a description of the
/// first violation. For test harnesses; the algorithm never calls it.
std::string audit_partition(const BitString& x, std::span<const Index> indices, std::uint64_t m,
                            const PartitionResult& result);

}  // namespace qmodw
