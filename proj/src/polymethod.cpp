#include "qmodw/polymethod.hpp"

#include <bit>
#include <sstream>

#include "qmodw/errors.hpp"
#include "qmodw/hamming_mod.hpp"

namespace qmodw {

namespace {

Monomial bits_to_mask(const BitString& x) {
    Monomial mask = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) mask |= Monomial{1} << i;
    return mask;
}

Rational binomial(std::size_t n, std::size_t k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return Rational(out);
}

Rational factorial(std::size_t k) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), k);
    return Rational(out);
}

}  // namespace

MultilinearPolynomial::MultilinearPolynomial(std::size_t n) : n_(n) {
    if (n > kMaxVariables) throw DomainError("at most " + std::to_string(kMaxVariables) + " variables are supported");
}

MultilinearPolynomial MultilinearPolynomial::constant(std::size_t n, const AlgebraicNumber& c) {
    MultilinearPolynomial p(n);
    p.set_coefficient(0, c);
    return p;
}

MultilinearPolynomial MultilinearPolynomial::variable(std::size_t n, Index i) {
    if (i < 1 || i > n) throw IndexOutOfRange("variable x_" + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
    MultilinearPolynomial p(n);
    p.set_coefficient(Monomial{1} << (i - 1), AlgebraicNumber::one());
    return p;
}

int MultilinearPolynomial::degree() const {
    int d = -1;
    for (const auto& [s, c] : coeffs_) d = std::max(d, std::popcount(s));
    return d;
}

AlgebraicNumber MultilinearPolynomial::coefficient(Monomial s) const {
    const auto it = coeffs_.find(s);
    return it == coeffs_.end() ? AlgebraicNumber::zero() : it->second;
}

void MultilinearPolynomial::set_coefficient(Monomial s, const AlgebraicNumber& c) {
    if (n_ < 64 && (s >> n_) != 0) throw IndexOutOfRange("monomial uses a variable beyond x_" + std::to_string(n_));
    if (c.is_zero())
        coeffs_.erase(s);
    else
        coeffs_[s] = c;
}

AlgebraicNumber MultilinearPolynomial::eval(const BitString& x) const {
    if (x.size() != n_)
        throw DimensionMismatch("point has " + std::to_string(x.size()) + " bits, polynomial has " + std::to_string(n_) + " variables");
    const Monomial ones = bits_to_mask(x);
    AlgebraicNumber sum;
    for (const auto& [s, c] : coeffs_)
        if ((s & ~ones) == 0) sum += c;
    return sum;
}

void MultilinearPolynomial::check_same_vars(const MultilinearPolynomial& other) const {
    if (n_ != other.n_) throw DimensionMismatch("polynomials have different variable counts");
}

MultilinearPolynomial& MultilinearPolynomial::operator+=(const MultilinearPolynomial& rhs) {
    check_same_vars(rhs);
    for (const auto& [s, c] : rhs.coeffs_) set_coefficient(s, coefficient(s) + c);
    return *this;
}

MultilinearPolynomial& MultilinearPolynomial::operator-=(const MultilinearPolynomial& rhs) {
    check_same_vars(rhs);
    for (const auto& [s, c] : rhs.coeffs_) set_coefficient(s, coefficient(s) - c);
    return *this;
}

MultilinearPolynomial& MultilinearPolynomial::operator*=(const AlgebraicNumber& scale) {
    if (scale.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [s, c] : coeffs_) c *= scale;
    return *this;
}

MultilinearPolynomial operator*(const MultilinearPolynomial& a, const MultilinearPolynomial& b) {
    a.check_same_vars(b);
    MultilinearPolynomial out(a.n_);
    for (const auto& [sa, ca] : a.coeffs_)
        for (const auto& [sb, cb] : b.coeffs_) out.set_coefficient(sa | sb, out.coefficient(sa | sb) + ca * cb);
    return out;
}

UnivariatePolynomial::UnivariatePolynomial(std::vector<AlgebraicNumber> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UnivariatePolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::falling_factorial(std::size_t k) {
    UnivariatePolynomial out({AlgebraicNumber::one()});
    for (std::size_t j = 0; j < k; ++j) out = out * UnivariatePolynomial({AlgebraicNumber(-static_cast<long>(j)), 1});
    return out;
}

AlgebraicNumber UnivariatePolynomial::eval(const AlgebraicNumber& t) const {
    AlgebraicNumber acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator*=(const AlgebraicNumber& scale) {
    for (auto& c : coeffs_) c *= scale;
    trim();
    return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<AlgebraicNumber> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UnivariatePolynomial(std::move(out));
}

std::string UnivariatePolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        os << '(' << coeffs_[k] << ')';
        if (k == 1) os << "·t";
        if (k > 1) os << "·t^" << k;
        first = false;
    }
    return os.str();
}

UnivariatePolynomial symmetrize(const MultilinearPolynomial& p) {
    const std::size_t n = p.num_vars();
    std::vector<AlgebraicNumber> level_sums(n + 1);
    for (const auto& [s, c] : p.terms()) level_sums[static_cast<std::size_t>(std::popcount(s))] += c;

    UnivariatePolynomial q;
    for (std::size_t k = 0; k <= n; ++k) {
        if (level_sums[k].is_zero()) continue;
        // c_k binom(t, k) = c_k / k! * t(t-1)...(t-k+1)
        const Rational scale = 1 / (binomial(n, k) * factorial(k));
        UnivariatePolynomial term = UnivariatePolynomial::falling_factorial(k);
        term *= level_sums[k] * AlgebraicNumber(scale);
        q += term;
    }
    return q;
}

void SymmetricFunctionSpec::validate() const {
    if (values.size() != n + 1) throw DomainError("symmetric function needs n + 1 values");
    for (auto v : values)
        if (v > 1) throw DomainError("symmetric function values must be 0 or 1");
}

TruthTable TruthTable::from_symmetric(const SymmetricFunctionSpec& f) {
    f.validate();
    if (f.n > 24) throw DomainError("truth tables are limited to 24 variables");
    TruthTable t{f.n, std::vector<std::uint8_t>(std::size_t{1} << f.n)};
    for (std::size_t idx = 0; idx < t.values.size(); ++idx) t.values[idx] = f.values[std::popcount(idx)];
    return t;
}

SymmetricFunctionSpec mod_m_spec(std::size_t n, std::size_t m) {
    if (m < 2 || m > n) throw DomainError("MOD_m is defined for 2 <= m <= n (got n = " + std::to_string(n) + ", m = " + std::to_string(m) + ")");
    SymmetricFunctionSpec f{n, std::vector<std::uint8_t>(n + 1)};
    for (std::size_t w = 0; w <= n; ++w) f.values[w] = w % m == 0 ? 1 : 0;
    return f;
}

bool is_nondeterministic_poly(const MultilinearPolynomial& p, const TruthTable& f) {
    if (f.values.size() != (std::size_t{1} << f.n) || p.num_vars() != f.n)
        throw DimensionMismatch("polynomial and truth table sizes differ");
    BitString x(f.n);
    for (std::size_t idx = 0; idx < f.values.size(); ++idx) {
        for (std::size_t i = 0; i < f.n; ++i) x[i] = static_cast<std::uint8_t>((idx >> i) & 1U);
        const bool nonzero = !p.eval(x).is_zero();
        if (nonzero != (f.values[idx] != 0)) return false;
    }
    return true;
}

bool is_nondeterministic_poly(const MultilinearPolynomial& p, const SymmetricFunctionSpec& f) {
    if (p.num_vars() != f.n) throw DimensionMismatch("polynomial and function sizes differ");
    return is_nondeterministic_poly(p, TruthTable::from_symmetric(f));
}

std::size_t ndeg_lower_bound(const SymmetricFunctionSpec& f) {
    f.validate();
    if (f.values[0] != 1) throw HypothesisViolated("zero-weight counting bound needs f(0^n) = 1");
    std::size_t zeros = 0;
    for (std::size_t w = 1; w <= f.n; ++w)
        if (f.values[w] == 0) ++zeros;
    return zeros;
}

CertificateCheck certificate_roundtrip(const MultilinearPolynomial& p, const SymmetricFunctionSpec& f) {
    f.validate();
    if (f.values[0] != 1) throw HypothesisViolated("certificate check needs f(0^n) = 1");
    if (!is_nondeterministic_poly(p, f))
        throw PreconditionFailed("polynomial is not a non-deterministic polynomial for f");

    CertificateCheck out;
    out.q = symmetrize(p);
    bool ok = !out.q.eval(AlgebraicNumber::zero()).is_zero();
    for (std::size_t w = 1; w <= f.n; ++w) {
        if (f.values[w] != 0) continue;
        if (out.q.eval(AlgebraicNumber(static_cast<long>(w))).is_zero())
            ++out.certified_roots;
        else
            ok = false;
    }
    // A nonzero q cannot have more roots than its degree.
    ok = ok && static_cast<int>(out.certified_roots) <= out.q.degree() && out.q.degree() <= p.degree();
    out.passed = ok;
    return out;
}

LowerBoundRow lower_bound_row(std::size_t n, std::size_t m) {
    LowerBoundRow row;
    row.n = n;
    row.m = m;
    row.zero_weights = ndeg_lower_bound(mod_m_spec(n, m));
    row.bound = query_bound(n, m);
    row.matches_upper_bound = row.zero_weights == row.bound;
    return row;
}

}  // namespace qmodw
