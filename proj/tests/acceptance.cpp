// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qmodw/commands.hpp"
#include "qmodw/fixtures.hpp"
#include "qmodw/hamming_mod.hpp"
#include "qmodw/polymethod.hpp"
#include "qmodw/subroutines.hpp"
#include "test_support.hpp"

using namespace qmodw;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

const std::vector<std::uint64_t> kSweepModuli = {2, 3, 4, 6, 8, 9, 12};
constexpr std::size_t kSweepMaxN = 14;

// ceil(n (m - 1) / m), computed independently of query_bound
std::uint64_t ceiling_bound(std::uint64_t n, std::uint64_t m) { return (n * (m - 1) + m - 1) / m; }

const SweepReport& sweep() {
    static const SweepReport report = run_sweep(kSweepMaxN, kSweepModuli);
    return report;
}

Outcome exhaustive_correctness() {
    std::uint64_t inputs = 0;
    std::uint64_t failures = 0;
    std::uint64_t over_bound = 0;
    for (const auto& row : sweep().rows) {
        inputs += row.inputs;
        failures += row.failures;
        if (row.inputs != (std::uint64_t{1} << row.n)) ++failures;
        if (row.max_queries > ceiling_bound(row.n, row.m)) ++over_bound;
    }
    std::ostringstream os;
    os << inputs << " runs over n<=" << kSweepMaxN << ", " << failures << " failures, " << over_bound
       << " rows over the query bound";
    return {failures == 0 && over_bound == 0 && sweep().rows.size() == kSweepMaxN * kSweepModuli.size(), os.str()};
}

Outcome tightness() {
    std::size_t rows = 0;
    std::size_t bad = 0;
    std::string first_bad;
    for (const auto& row : sweep().rows) {
        if (row.m > row.n) continue;
        ++rows;
        const std::uint64_t b = ceiling_bound(row.n, row.m);
        if (row.max_queries != b || row.zero_input_queries != b) {
            if (bad++ == 0)
                first_bad = " (first: n=" + std::to_string(row.n) + " m=" + std::to_string(row.m) + ")";
        }
    }
    return {bad == 0 && rows > 0,
            std::to_string(rows - bad) + "/" + std::to_string(rows) + " rows with max = bound attained at 0^n" + first_bad};
}

Outcome table_fidelity() {
    std::size_t matched = 0;
    for (const auto& [key, states] : embedded_state_table()) {
        const IntermediateTrace t = trace_mod3(parse_bits(key));
        for (std::size_t s = 0; s < 4; ++s) matched += t.states[s] == states[s];
    }
    return {matched == 32 && embedded_state_table().size() == 8, std::to_string(matched) + "/32 states match exactly"};
}

Outcome gram_fidelity() {
    const SquareMatrix g = gram_matrix();
    const bool display = g == embedded_gram_matrix();
    std::size_t agree48 = 0;
    std::size_t agree16 = 0;
    for (std::size_t x = 0; x < 8; ++x)
        for (std::size_t y = 0; y < 8; ++y) {
            std::array<int, 3> a{};
            std::array<int, 3> b{};
            const BitString bx = three_bit_input(x);
            const BitString by = three_bit_input(y);
            for (std::size_t i = 0; i < 3; ++i) {
                a[i] = bx[i] ? -1 : 1;
                b[i] = by[i] ? -1 : 1;
            }
            agree48 += gram_closed_form(a, b, GramVariant::Scaled48) == g(x, y);
            agree16 += gram_closed_form(a, b, GramVariant::Scaled16) == g(x, y);
        }
    std::ostringstream os;
    os << "displayed matrix " << (display ? "matches" : "differs") << ", 48-scaled " << agree48 << "/64, 16-scaled "
       << agree16 << "/64";
    return {display && agree48 == 64 && agree16 == 64, os.str()};
}

Outcome unitarity_and_determinism() {
    const auto& k = mod3_constants();
    std::size_t unitary = 0;
    for (const SquareMatrix* m : {&k.hadamard, &k.qft, &k.u, &k.v}) unitary += is_unitary(*m);
    std::size_t deterministic = 0;
    for (std::size_t x = 0; x < 8; ++x) {
        const BitString bits = three_bit_input(x);
        std::vector<AlgebraicNumber> diag(kMod3Dim, AlgebraicNumber::one());
        for (std::size_t i = 0; i < 3; ++i)
            if (bits[i]) diag[i] = -1;
        unitary += is_unitary(matmul(k.qft_dag, matmul(SquareMatrix::diagonal(diag), k.qft)));

        const auto residue = static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1) % 3);
        const StateVector final_state = trace_mod3(bits).states[3];
        Rational total = 0;
        bool ok = true;
        for (std::size_t r = 0; r < 3; ++r) {
            const Rational mass = project_mass(k.residue_projectors[r], final_state);
            total += mass;
            ok = ok && mass == (r == residue ? 1 : 0);
        }
        deterministic += ok && total == 1;
    }
    return {unitary == 12 && deterministic == 8,
            std::to_string(unitary) + "/12 unitarity checks, " + std::to_string(deterministic) + "/8 deterministic final states"};
}

Outcome symmetrization() {
    std::mt19937_64 rng(20261015);
    constexpr int kPolys = 120;
    int good = 0;
    for (int trial = 0; trial < kPolys; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
        const MultilinearPolynomial p = testing::random_multilinear(rng, n, 1 + rng() % 16);
        const UnivariatePolynomial q = symmetrize(p);
        bool ok = q.degree() <= p.degree();
        for (std::size_t k = 0; k <= n && ok; ++k) ok = q.eval(static_cast<long>(k)) == testing::brute_weight_mean(p, k);
        good += ok;
    }
    return {good == kPolys, std::to_string(good) + "/" + std::to_string(kPolys) + " random polynomials, n<=8"};
}

Outcome bound_table() {
    std::size_t rows = 0;
    std::size_t equal = 0;
    for (std::size_t n = 2; n <= 20; ++n)
        for (std::size_t m = 2; m <= n; ++m) {
            ++rows;
            const SymmetricFunctionSpec f = mod_m_spec(n, m);
            // count zero weights directly from the truth values
            const auto zeros = static_cast<std::uint64_t>(std::count(f.values.begin() + 1, f.values.end(), 0));
            const LowerBoundRow row = lower_bound_row(n, m);
            equal += zeros == ceiling_bound(n, m) && row.zero_weights == zeros && row.matches_upper_bound;
        }
    return {equal == rows, std::to_string(equal) + "/" + std::to_string(rows) + " pairs with 2<=m<=n<=20"};
}

Outcome floor_identity() {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> a_dist(1, std::uint64_t{1} << 40);
    std::uniform_int_distribution<std::uint64_t> bc_dist(1, std::uint64_t{1} << 20);
    constexpr int kTriples = 10000;
    int good = 0;
    for (int t = 0; t < kTriples; ++t) {
        const std::uint64_t a = a_dist(rng);
        const std::uint64_t b = bc_dist(rng);
        const std::uint64_t c = bc_dist(rng);
        good += (a / b) / c == a / (b * c);
    }
    return {good == kTriples, std::to_string(good) + "/" + std::to_string(kTriples) + " triples"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"exhaustive correctness", exhaustive_correctness},
        {"tightness", tightness},
        {"intermediate state table", table_fidelity},
        {"Gram matrix and closed forms", gram_fidelity},
        {"unitarity and determinism", unitarity_and_determinism},
        {"symmetrization", symmetrization},
        {"lower-bound table", bound_table},
        {"floor identity", floor_identity},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.passed;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (o.passed ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
                  << o.detail << " (" << timing << ")" << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
