#pragma once

// Polynomial-method lower bounds: multilinear polynomials over the field,
// symmetrization to a univariate polynomial in the Hamming weight, and the
// zero-weight counting bound for symmetric functions with f(0^n) = 1.

#include <cstdint>
#include <map>
#include <vector>

#include "qmodw/algebra.hpp"
#include "qmodw/oracle.hpp"

namespace qmodw {

/// Variable subset S of [n], bit (i-1) set iff x_i is in S.
using Monomial = std::uint64_t;

inline constexpr std::size_t kMaxVariables = 62;

class MultilinearPolynomial {
public:
    /// Zero polynomial in n variables. Throws DomainError for n > kMaxVariables.
    explicit MultilinearPolynomial(std::size_t n);

    static MultilinearPolynomial constant(std::size_t n, const AlgebraicNumber& c);
    /// The polynomial x_i, 1 <= i <= n.
    static MultilinearPolynomial variable(std::size_t n, Index i);

    std::size_t num_vars() const { return n_; }
    /// Largest |S| with a nonzero coefficient; -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return coeffs_.empty(); }

    AlgebraicNumber coefficient(Monomial s) const;
    void set_coefficient(Monomial s, const AlgebraicNumber& c);
    const std::map<Monomial, AlgebraicNumber>& terms() const { return coeffs_; }

    /// Exact value at a point of the Boolean cube. Throws DimensionMismatch.
    AlgebraicNumber eval(const BitString& x) const;

    MultilinearPolynomial& operator+=(const MultilinearPolynomial& rhs);
    MultilinearPolynomial& operator-=(const MultilinearPolynomial& rhs);
    MultilinearPolynomial& operator*=(const AlgebraicNumber& scale);

    friend MultilinearPolynomial operator+(MultilinearPolynomial a, const MultilinearPolynomial& b) { return a += b; }
    friend MultilinearPolynomial operator-(MultilinearPolynomial a, const MultilinearPolynomial& b) { return a -= b; }
    /// Product reduced with x_i^2 = x_i, which agrees with the ordinary
    /// product everywhere on the Boolean cube.
    friend MultilinearPolynomial operator*(const MultilinearPolynomial& a, const MultilinearPolynomial& b);

    friend bool operator==(const MultilinearPolynomial&, const MultilinearPolynomial&) = default;

private:
    void check_same_vars(const MultilinearPolynomial& other) const;

    std::size_t n_;
    std::map<Monomial, AlgebraicNumber> coeffs_;  // nonzero coefficients only
};

inline AlgebraicNumber eval(const MultilinearPolynomial& p, const BitString& x) { return p.eval(x); }

class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    /// Coefficients from the constant term upward; trailing zeros are dropped.
    explicit UnivariatePolynomial(std::vector<AlgebraicNumber> coeffs);

    /// t (t-1) ... (t-k+1)
    static UnivariatePolynomial falling_factorial(std::size_t k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<AlgebraicNumber>& coefficients() const { return coeffs_; }

    AlgebraicNumber eval(const AlgebraicNumber& t) const;

    UnivariatePolynomial& operator+=(const UnivariatePolynomial& rhs);
    UnivariatePolynomial& operator*=(const AlgebraicNumber& scale);
    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

    friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

    std::string to_string() const;

private:
    void trim();

    std::vector<AlgebraicNumber> coeffs_;
};

/// q(t) = sum_k c_k binom(t, k) with c_k = (sum_{|S|=k} a_S) / C(n, k).
/// q(k) is the mean of p over the weight-k points of the cube.
UnivariatePolynomial symmetrize(const MultilinearPolynomial& p);

/// Boolean function whose value depends only on the Hamming weight.
struct SymmetricFunctionSpec {
    std::size_t n = 0;
    std::vector<std::uint8_t> values;  // values[w] = f(x) for |x| = w; size n + 1

    /// Throws DomainError unless values has n + 1 entries, each 0 or 1.
    void validate() const;
};

/// Arbitrary Boolean function on n bits; values[idx] with bit (i-1) of idx = x_i.
struct TruthTable {
    std::size_t n = 0;
    std::vector<std::uint8_t> values;

    static TruthTable from_symmetric(const SymmetricFunctionSpec& f);
};

/// MOD_m on n bits: 1 iff |x| = 0 mod m. Requires 2 <= m <= n, else DomainError.
SymmetricFunctionSpec mod_m_spec(std::size_t n, std::size_t m);

/// p(x) != 0 exactly where f(x) = 1 on the whole cube. Throws DimensionMismatch.
bool is_nondeterministic_poly(const MultilinearPolynomial& p, const TruthTable& f);
bool is_nondeterministic_poly(const MultilinearPolynomial& p, const SymmetricFunctionSpec& f);

/// Number of weights w in [1, n] with f = 0. Throws HypothesisViolated when f(0^n) != 1.
std::size_t ndeg_lower_bound(const SymmetricFunctionSpec& f);

struct CertificateCheck {
    bool passed = false;
    std::size_t certified_roots = 0;
    UnivariatePolynomial q;
};

/// Symmetrizes a non-deterministic polynomial p for f and checks q(0) != 0 and
/// q(w) = 0 at every zero weight w of f. Throws HypothesisViolated when
/// f(0^n) != 1 and PreconditionFailed when p's support differs from f's.
CertificateCheck certificate_roundtrip(const MultilinearPolynomial& p, const SymmetricFunctionSpec& f);

struct LowerBoundRow {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t zero_weights = 0;
    std::uint64_t bound = 0;  // n - floor(n/m)
    bool matches_upper_bound = false;
};

LowerBoundRow lower_bound_row(std::size_t n, std::size_t m);

}  // namespace qmodw
