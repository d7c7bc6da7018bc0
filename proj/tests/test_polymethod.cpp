#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmodw/errors.hpp"
#include "qmodw/hamming_mod.hpp"
#include "qmodw/polymethod.hpp"
#include "test_support.hpp"

using namespace qmodw;
using qmodw::testing::brute_weight_mean;

namespace {

AlgebraicNumber q(long num, long den = 1) { return make_rational(num, den); }

MultilinearPolynomial x(std::size_t n, Index i) { return MultilinearPolynomial::variable(n, i); }
MultilinearPolynomial one(std::size_t n) { return MultilinearPolynomial::constant(n, 1); }

SymmetricFunctionSpec sym(std::size_t n, std::vector<std::uint8_t> values) { return {n, std::move(values)}; }

}  // namespace

TEST_CASE("eval") {
    const MultilinearPolynomial p = x(2, 1) * x(2, 2);
    CHECK(p.eval(parse_bits("11")) == AlgebraicNumber::one());
    CHECK(p.eval(parse_bits("10")).is_zero());
    CHECK((one(3) - x(3, 1)).eval(parse_bits("000")) == AlgebraicNumber::one());
    CHECK_THROWS_AS(p.eval(parse_bits("1")), DimensionMismatch);
}

TEST_CASE("multilinear products reduce squares") {
    const MultilinearPolynomial p = x(2, 1) * x(2, 1);
    CHECK(p == x(2, 1));
    CHECK(p.degree() == 1);
    CHECK(MultilinearPolynomial(3).degree() == -1);
    CHECK_THROWS_AS(x(2, 3), IndexOutOfRange);
    CHECK_THROWS_AS(x(2, 1) + x(3, 1), DimensionMismatch);
    CHECK_THROWS_AS(MultilinearPolynomial(63), DomainError);
}

TEST_CASE("eval agrees with direct enumeration") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        const MultilinearPolynomial p = qmodw::testing::random_multilinear(rng, n, 1 + rng() % 10);
        for (std::uint64_t point = 0; point < (std::uint64_t{1} << n); ++point) {
            BitString bits(n);
            for (std::size_t i = 0; i < n; ++i) bits[i] = (point >> i) & 1U;
            CHECK(p.eval(bits) == qmodw::testing::brute_eval(p, point));
        }
    }
}

TEST_CASE("symmetrize") {
    const UnivariatePolynomial q1 = symmetrize(x(2, 1));
    CHECK(q1 == UnivariatePolynomial({0, q(1, 2)}));
    CHECK(q1.eval(0).is_zero());
    CHECK(q1.eval(1) == q(1, 2));
    CHECK(q1.eval(2) == AlgebraicNumber::one());

    // t (t - 1) / 2 = -t/2 + t^2/2
    CHECK(symmetrize(x(2, 1) * x(2, 2)) == UnivariatePolynomial({0, q(-1, 2), q(1, 2)}));
    CHECK(symmetrize(MultilinearPolynomial(4)).is_zero());
}

TEST_CASE("symmetrize matches the exhaustive weight mean") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        const MultilinearPolynomial p = qmodw::testing::random_multilinear(rng, n, 1 + rng() % 12);
        const UnivariatePolynomial s = symmetrize(p);
        CHECK(s.degree() <= p.degree());
        for (std::size_t k = 0; k <= n; ++k) CHECK(s.eval(static_cast<long>(k)) == brute_weight_mean(p, k));
    }
}

TEST_CASE("is_nondeterministic_poly") {
    const MultilinearPolynomial x1 = x(2, 1);
    const MultilinearPolynomial x2 = x(2, 2);
    const SymmetricFunctionSpec and2 = sym(2, {0, 0, 1});
    const SymmetricFunctionSpec or2 = sym(2, {0, 1, 1});
    CHECK(is_nondeterministic_poly(x1 * x2, and2));
    CHECK(is_nondeterministic_poly(x1 + x2, or2));
    CHECK_FALSE(is_nondeterministic_poly(x1 - x2, or2));
    CHECK_THROWS_AS(is_nondeterministic_poly(x(3, 1), or2), DimensionMismatch);

    // complex coefficients: x1 + i x2 vanishes only at 00
    const MultilinearPolynomial complex_or = x1 + x2 * MultilinearPolynomial::constant(2, AlgebraicNumber::imag_unit());
    CHECK(is_nondeterministic_poly(complex_or, or2));

    // non-symmetric truth table: f = x1
    const TruthTable dictator{2, {0, 1, 0, 1}};
    CHECK(is_nondeterministic_poly(x1, dictator));
    CHECK_FALSE(is_nondeterministic_poly(x2, dictator));
}

TEST_CASE("ndeg_lower_bound") {
    CHECK(ndeg_lower_bound(mod_m_spec(6, 3)) == 4);
    CHECK(ndeg_lower_bound(sym(3, {1, 1, 1, 1})) == 0);
    CHECK(ndeg_lower_bound(mod_m_spec(4, 2)) == 2);
    CHECK_THROWS_AS(ndeg_lower_bound(sym(2, {0, 1, 1})), HypothesisViolated);
    CHECK_THROWS_AS(ndeg_lower_bound(sym(2, {1, 1})), DomainError);
}

TEST_CASE("mod_m_spec") {
    CHECK(mod_m_spec(4, 2).values == std::vector<std::uint8_t>{1, 0, 1, 0, 1});
    CHECK(mod_m_spec(6, 3).values == std::vector<std::uint8_t>{1, 0, 0, 1, 0, 0, 1});
    CHECK_THROWS_AS(mod_m_spec(4, 5), DomainError);
    CHECK_THROWS_AS(mod_m_spec(4, 1), DomainError);
}

TEST_CASE("certificate_roundtrip") {
    const MultilinearPolynomial nor = (one(2) - x(2, 1)) * (one(2) - x(2, 2));
    const CertificateCheck c = certificate_roundtrip(nor, sym(2, {1, 0, 0}));
    CHECK(c.passed);
    CHECK(c.certified_roots == 2);
    CHECK(c.q.eval(0) == AlgebraicNumber::one());
    CHECK(c.q.eval(1).is_zero());
    CHECK(c.q.eval(2).is_zero());

    const CertificateCheck trivial = certificate_roundtrip(one(3), sym(3, {1, 1, 1, 1}));
    CHECK(trivial.passed);
    CHECK(trivial.certified_roots == 0);

    CHECK_THROWS_AS(certificate_roundtrip(x(2, 1), sym(2, {1, 0, 0})), PreconditionFailed);
    CHECK_THROWS_AS(certificate_roundtrip(x(2, 1) * x(2, 2), sym(2, {0, 0, 1})), HypothesisViolated);
}

TEST_CASE("certificates for MOD_m built from the zero-weight product") {
    // p = prod over the zero weights w of (|x| - w), a symmetric polynomial
    // that vanishes exactly where MOD_m does. Written multilinearly via
    // |x| = x_1 + ... + x_n.
    for (std::size_t n = 2; n <= 7; ++n)
        for (std::size_t m = 2; m <= n; ++m) {
            const SymmetricFunctionSpec f = mod_m_spec(n, m);
            MultilinearPolynomial weight(n);
            for (Index i = 1; i <= n; ++i) weight += x(n, i);
            MultilinearPolynomial p = one(n);
            for (std::size_t w = 1; w <= n; ++w)
                if (f.values[w] == 0) p = p * (weight - MultilinearPolynomial::constant(n, static_cast<long>(w)));
            const CertificateCheck c = certificate_roundtrip(p, f);
            CHECK(c.passed);
            CHECK(c.certified_roots == ndeg_lower_bound(f));
            CHECK(c.certified_roots == query_bound(n, m));
            CHECK(p.degree() >= static_cast<int>(c.certified_roots));
        }
}

TEST_CASE("zero-weight count equals the query bound") {
    for (std::size_t n = 2; n <= 20; ++n)
        for (std::size_t m = 2; m <= n; ++m) {
            const LowerBoundRow row = lower_bound_row(n, m);
            CHECK(row.zero_weights == query_bound(n, m));
            CHECK(row.matches_upper_bound);
        }
}
