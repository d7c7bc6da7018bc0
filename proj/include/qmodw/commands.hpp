#pragma once

// Report builders and command implementations behind the qmodw tool. Each
// cmd_* writes its report to `out`, diagnostics to `err`, and returns the
// process exit code.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qmodw/algebra.hpp"
#include "qmodw/hamming_mod.hpp"
#include "qmodw/oracle.hpp"

namespace qmodw {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitUnsupportedModulus = 2,
    kExitVerificationFailed = 3,
};

struct RunReport {
    std::string input;
    std::uint64_t m = 0;
    std::uint64_t residue = 0;
    std::uint64_t queries = 0;
    std::uint64_t bound = 0;
    PartitionResult partition;
    std::optional<std::vector<QueryEvent>> transcript;
};

/// Runs the algorithm on a fresh oracle. Throws ParseError, DomainError,
/// UnsupportedModulus, or InternalInvariantViolation when queries > bound.
RunReport make_run_report(const std::string& bits, std::uint64_t m, bool trace);
Json to_json(const RunReport& report);

struct SweepRow {
    std::size_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t inputs = 0;
    std::uint64_t failures = 0;
    std::uint64_t max_queries = 0;
    std::uint64_t bound = 0;
    std::uint64_t zero_input_queries = 0;  // queries used on 0^n

    bool all_correct() const { return failures == 0; }
};

struct SweepReport {
    std::vector<SweepRow> rows;  // sorted by (n, m)
    std::uint64_t total_failures() const;
};

/// Exhaustive check over all 2^n inputs for n in [1, n_max] and each modulus.
/// An input fails when the residue is wrong, the query bound is exceeded, or
/// the partition audit finds a violated invariant. threads == 0 means
/// QMODW_THREADS, falling back to the hardware concurrency.
SweepReport run_sweep(std::size_t n_max, const std::vector<std::uint64_t>& moduli, unsigned threads = 0);

/// Worker count from QMODW_THREADS, else hardware concurrency (at least 1).
unsigned default_thread_count();

std::string sweep_csv(const SweepReport& report);
std::string lower_bound_csv(std::size_t n_max);

struct RunOptions {
    std::string x;
    std::int64_t m = 0;
    bool trace = false;
};
int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err);

struct SweepOptions {
    std::int64_t n_max = 0;
    std::vector<std::int64_t> moduli;
    unsigned threads = 0;
};
int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);

struct VerifyStatesOptions {
    std::string format = "table";  // table | json
    std::string fixture_path;      // empty: embedded fixture
};
int cmd_verify_states(const VerifyStatesOptions& opts, std::ostream& out, std::ostream& err);

struct GramOptions {
    bool closed_form = false;
    std::string format = "grid";  // grid | json
};
int cmd_gram(const GramOptions& opts, std::ostream& out, std::ostream& err);

struct LowerBoundOptions {
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> m;
    bool sweep = false;
    std::int64_t n_max = 20;
};
int cmd_lower_bound(const LowerBoundOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace qmodw
