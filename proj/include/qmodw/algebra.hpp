#pragma once

// Exact arithmetic in the number field Q(i, sqrt2, sqrt3).
//
// An element is stored by its 8 rational coordinates over the basis
//   1, sqrt2, sqrt3, sqrt6, i, i*sqrt2, i*sqrt3, i*sqrt6
// The basis is linearly independent over Q, so the representation is unique
// and structural equality is mathematical equality.

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

namespace qmodw {

/// JSON value that keeps keys in insertion order.
using Json = nlohmann::ordered_json;

/// Arbitrary precision rational, kept in lowest terms with positive denominator.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws DivisionByZero when den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const mpz_class& num, const mpz_class& den);

/// Coordinate slots of the field basis.
enum class Basis : std::size_t {
    One = 0,
    Sqrt2 = 1,
    Sqrt3 = 2,
    Sqrt6 = 3,
    I = 4,
    ISqrt2 = 5,
    ISqrt3 = 6,
    ISqrt6 = 7,
};

inline constexpr std::size_t kFieldDegree = 8;

class AlgebraicNumber {
public:
    using Coordinates = std::array<Rational, kFieldDegree>;

    AlgebraicNumber() = default;
    AlgebraicNumber(long value) : AlgebraicNumber(make_rational(value)) {}  // NOLINT
    AlgebraicNumber(const Rational& value);                                  // NOLINT
    explicit AlgebraicNumber(Coordinates coords);

    static AlgebraicNumber zero() { return {}; }
    static AlgebraicNumber one() { return AlgebraicNumber(1L); }
    static AlgebraicNumber imag_unit() { return basis(Basis::I); }
    static AlgebraicNumber sqrt2() { return basis(Basis::Sqrt2); }
    static AlgebraicNumber sqrt3() { return basis(Basis::Sqrt3); }
    static AlgebraicNumber sqrt6() { return basis(Basis::Sqrt6); }
    /// Primitive cube root of unity e^{2 pi i / 3} = -1/2 + (sqrt3/2) i.
    static AlgebraicNumber omega();
    static AlgebraicNumber basis(Basis b, const Rational& scale = 1);

    const Rational& coord(Basis b) const { return coords_[static_cast<std::size_t>(b)]; }
    const Coordinates& coords() const { return coords_; }

    bool is_zero() const;
    bool is_real() const;
    /// True when only the coordinate on 1 may be nonzero.
    bool is_rational() const;
    /// Coordinate on 1. Meaningful as "the value" only when is_rational().
    const Rational& rational_part() const { return coords_[0]; }

    AlgebraicNumber conj() const;
    /// a^{-1}. Throws DivisionByZero on zero.
    AlgebraicNumber inv() const;
    /// a * conj(a); always real.
    AlgebraicNumber norm2() const;

    /// Numeric value for reports only.
    std::complex<double> approx() const;

    /// Human readable form, e.g. "-1/2 + 1/2·i√3". Zero renders as "0".
    std::string to_string() const;

    AlgebraicNumber operator-() const;
    AlgebraicNumber& operator+=(const AlgebraicNumber& rhs);
    AlgebraicNumber& operator-=(const AlgebraicNumber& rhs);
    AlgebraicNumber& operator*=(const AlgebraicNumber& rhs);
    AlgebraicNumber& operator/=(const AlgebraicNumber& rhs);

    friend AlgebraicNumber operator+(AlgebraicNumber lhs, const AlgebraicNumber& rhs) { return lhs += rhs; }
    friend AlgebraicNumber operator-(AlgebraicNumber lhs, const AlgebraicNumber& rhs) { return lhs -= rhs; }
    friend AlgebraicNumber operator*(const AlgebraicNumber& lhs, const AlgebraicNumber& rhs);
    friend AlgebraicNumber operator/(const AlgebraicNumber& lhs, const AlgebraicNumber& rhs) {
        return lhs * rhs.inv();
    }

    friend bool operator==(const AlgebraicNumber& lhs, const AlgebraicNumber& rhs) {
        return lhs.coords_ == rhs.coords_;
    }
    friend bool operator!=(const AlgebraicNumber& lhs, const AlgebraicNumber& rhs) { return !(lhs == rhs); }

private:
    // Field automorphism: optionally i -> -i, sqrt2 -> -sqrt2, sqrt3 -> -sqrt3.
    AlgebraicNumber galois(bool flip_i, bool flip_sqrt2, bool flip_sqrt3) const;

    Coordinates coords_{};
};

inline AlgebraicNumber add(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a + b; }
inline AlgebraicNumber mul(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a * b; }
inline AlgebraicNumber conj(const AlgebraicNumber& a) { return a.conj(); }
inline AlgebraicNumber inv(const AlgebraicNumber& a) { return a.inv(); }
inline std::complex<double> approx(const AlgebraicNumber& a) { return a.approx(); }

std::ostream& operator<<(std::ostream& os, const AlgebraicNumber& a);

/// Parses the to_string() rendering. Accepts terms like "3/4", "-√2", "1/4·i√3",
/// "i", with '*' allowed in place of '·'. Throws ParseError.
AlgebraicNumber parse_algebraic(std::string_view text);

/// Exact JSON encoding: an 8-array of [numerator, denominator] pairs. Integers
/// that do not fit in 64 bits are written as decimal strings.
Json to_json(const AlgebraicNumber& a);
AlgebraicNumber algebraic_from_json(const Json& j);

/// Rational rendered as "p/q" (or "p" when q == 1).
std::string to_string(const Rational& r);

}  // namespace qmodw
