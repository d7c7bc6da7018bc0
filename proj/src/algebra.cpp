#include "qmodw/algebra.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "qmodw/errors.hpp"

namespace qmodw {

namespace {

// Coordinate k is radical(k & 3) * (k >= 4 ? i : 1), where bit 0 of the
// radical index stands for sqrt2 and bit 1 for sqrt3.
constexpr std::size_t radical_of(std::size_t k) { return k & 3U; }
constexpr bool imaginary(std::size_t k) { return k >= 4; }

// sqrt(r) * sqrt(s) = factor * sqrt(r xor s), factor = product of the shared primes.
constexpr long radical_product_factor(std::size_t r, std::size_t s) {
    long f = 1;
    if ((r & s & 1U) != 0) f *= 2;
    if ((r & s & 2U) != 0) f *= 3;
    return f;
}

const char* const kUnitNames[kFieldDegree] = {"", "√2", "√3", "√6", "i", "i√2", "i√3", "i√6"};

}  // namespace

Rational make_rational(long num, long den) {
    return make_rational(mpz_class(num), mpz_class(den));
}

Rational make_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

AlgebraicNumber::AlgebraicNumber(const Rational& value) { coords_[0] = value; }

AlgebraicNumber::AlgebraicNumber(Coordinates coords) : coords_(std::move(coords)) {
    for (auto& c : coords_) c.canonicalize();
}

AlgebraicNumber AlgebraicNumber::basis(Basis b, const Rational& scale) {
    AlgebraicNumber a;
    a.coords_[static_cast<std::size_t>(b)] = scale;
    return a;
}

AlgebraicNumber AlgebraicNumber::omega() {
    AlgebraicNumber w;
    w.coords_[0] = make_rational(-1, 2);
    w.coords_[static_cast<std::size_t>(Basis::ISqrt3)] = make_rational(1, 2);
    return w;
}

bool AlgebraicNumber::is_zero() const {
    for (const auto& c : coords_)
        if (sgn(c) != 0) return false;
    return true;
}

bool AlgebraicNumber::is_real() const {
    for (std::size_t k = 4; k < kFieldDegree; ++k)
        if (sgn(coords_[k]) != 0) return false;
    return true;
}

bool AlgebraicNumber::is_rational() const {
    for (std::size_t k = 1; k < kFieldDegree; ++k)
        if (sgn(coords_[k]) != 0) return false;
    return true;
}

AlgebraicNumber AlgebraicNumber::galois(bool flip_i, bool flip_sqrt2, bool flip_sqrt3) const {
    AlgebraicNumber out = *this;
    for (std::size_t k = 0; k < kFieldDegree; ++k) {
        bool negate = false;
        if (flip_i && imaginary(k)) negate = !negate;
        if (flip_sqrt2 && (radical_of(k) & 1U)) negate = !negate;
        if (flip_sqrt3 && (radical_of(k) & 2U)) negate = !negate;
        if (negate) out.coords_[k] = -out.coords_[k];
    }
    return out;
}

AlgebraicNumber AlgebraicNumber::conj() const { return galois(true, false, false); }

AlgebraicNumber AlgebraicNumber::norm2() const { return *this * conj(); }

AlgebraicNumber AlgebraicNumber::inv() const {
    if (is_zero()) throw DivisionByZero();
    // Multiply through by Galois conjugates until the denominator is rational:
    //   r = a conj(a) lies in Q(sqrt2, sqrt3), s = r sigma2(r) in Q(sqrt3),
    //   t = s sigma3(s) in Q.
    const AlgebraicNumber c = conj();
    const AlgebraicNumber r = *this * c;
    const AlgebraicNumber r2 = r.galois(false, true, false);
    const AlgebraicNumber s = r * r2;
    const AlgebraicNumber s3 = s.galois(false, false, true);
    const AlgebraicNumber t = s * s3;
    if (!t.is_rational() || sgn(t.coords_[0]) == 0)
        throw InternalInvariantViolation("field norm is not a nonzero rational");
    AlgebraicNumber out = c * r2 * s3;
    for (auto& coord : out.coords_) coord /= t.coords_[0];
    return out;
}

std::complex<double> AlgebraicNumber::approx() const {
    static const double radicals[4] = {1.0, std::sqrt(2.0), std::sqrt(3.0), std::sqrt(6.0)};
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < kFieldDegree; ++k) {
        if (sgn(coords_[k]) == 0) continue;
        const double v = coords_[k].get_d() * radicals[radical_of(k)];
        (imaginary(k) ? im : re) += v;
    }
    return {re, im};
}

std::string AlgebraicNumber::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < kFieldDegree; ++k) {
        const Rational& c = coords_[k];
        if (sgn(c) == 0) continue;
        const bool negative = sgn(c) < 0;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = abs(c);
        if (k == 0) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += kUnitNames[k];
        } else {
            out += mag.get_str();
            out += "·";
            out += kUnitNames[k];
        }
    }
    return out.empty() ? "0" : out;
}

AlgebraicNumber AlgebraicNumber::operator-() const {
    AlgebraicNumber out = *this;
    for (auto& c : out.coords_) c = -c;
    return out;
}

AlgebraicNumber& AlgebraicNumber::operator+=(const AlgebraicNumber& rhs) {
    for (std::size_t k = 0; k < kFieldDegree; ++k)
        if (sgn(rhs.coords_[k]) != 0) coords_[k] += rhs.coords_[k];
    return *this;
}

AlgebraicNumber& AlgebraicNumber::operator-=(const AlgebraicNumber& rhs) {
    for (std::size_t k = 0; k < kFieldDegree; ++k)
        if (sgn(rhs.coords_[k]) != 0) coords_[k] -= rhs.coords_[k];
    return *this;
}

AlgebraicNumber operator*(const AlgebraicNumber& lhs, const AlgebraicNumber& rhs) {
    std::size_t lnz[kFieldDegree];
    std::size_t rnz[kFieldDegree];
    std::size_t ln = 0;
    std::size_t rn = 0;
    for (std::size_t k = 0; k < kFieldDegree; ++k) {
        if (sgn(lhs.coords_[k]) != 0) lnz[ln++] = k;
        if (sgn(rhs.coords_[k]) != 0) rnz[rn++] = k;
    }
    AlgebraicNumber out;
    Rational term;
    for (std::size_t a = 0; a < ln; ++a) {
        const std::size_t j = lnz[a];
        for (std::size_t b = 0; b < rn; ++b) {
            const std::size_t k = rnz[b];
            const std::size_t rj = radical_of(j);
            const std::size_t rk = radical_of(k);
            long factor = radical_product_factor(rj, rk);
            const bool both_imag = imaginary(j) && imaginary(k);
            const bool one_imag = imaginary(j) != imaginary(k);
            if (both_imag) factor = -factor;
            const std::size_t target = (rj ^ rk) + (one_imag ? 4 : 0);
            term = lhs.coords_[j] * rhs.coords_[k];
            if (factor != 1) term *= factor;
            out.coords_[target] += term;
        }
    }
    return out;
}

AlgebraicNumber& AlgebraicNumber::operator*=(const AlgebraicNumber& rhs) {
    *this = *this * rhs;
    return *this;
}

AlgebraicNumber& AlgebraicNumber::operator/=(const AlgebraicNumber& rhs) {
    *this = *this * rhs.inv();
    return *this;
}

std::ostream& operator<<(std::ostream& os, const AlgebraicNumber& a) { return os << a.to_string(); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class TermParser {
public:
    explicit TermParser(std::string_view text) : text_(text) {}

    AlgebraicNumber parse() {
        AlgebraicNumber::Coordinates coords{};
        skip_ws();
        if (at_end()) fail("empty expression");
        bool first = true;
        while (!at_end()) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [coef, unit] = parse_term();
            coords[unit] += negative ? Rational(-coef) : coef;
            first = false;
            skip_ws();
        }
        return AlgebraicNumber(std::move(coords));
    }

private:
    std::pair<Rational, std::size_t> parse_term() {
        Rational coef = 1;
        bool have_number = false;
        if (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
            coef = parse_rational();
            have_number = true;
            skip_ws();
            if (consume("·") || consume("*")) {
                skip_ws();
            } else {
                return {coef, 0};
            }
        }
        const std::size_t unit = parse_unit();
        if (unit == 0 && !have_number) fail("expected a term");
        return {coef, unit};
    }

    Rational parse_rational() {
        const mpz_class num = parse_integer();
        mpz_class den = 1;
        if (!at_end() && peek() == '/') {
            ++pos_;
            den = parse_integer();
        }
        if (den == 0) fail("zero denominator");
        return make_rational(num, den);
    }

    mpz_class parse_integer() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
        if (start == pos_) fail("expected digits");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    std::size_t parse_unit() {
        std::size_t unit = 0;
        if (consume("i")) unit = 4;
        if (consume("√")) {
            if (consume("2")) unit += 1;
            else if (consume("3")) unit += 2;
            else if (consume("6")) unit += 3;
            else fail("expected 2, 3 or 6 after √");
        } else if (unit == 0) {
            fail("expected a unit");
        }
        return unit;
    }

    bool consume(std::string_view token) {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse algebraic number '" + std::string(text_) + "' at offset " +
                         std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

Json integer_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

mpz_class integer_from_json(const Json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return mpz_class(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ParseError("invalid integer string in JSON encoding");
        }
    }
    throw ParseError("expected an integer in JSON encoding");
}

}  // namespace

AlgebraicNumber parse_algebraic(std::string_view text) { return TermParser(text).parse(); }

Json to_json(const AlgebraicNumber& a) {
    Json out = Json::array();
    for (const auto& c : a.coords())
        out.push_back(Json::array({integer_to_json(c.get_num()), integer_to_json(c.get_den())}));
    return out;
}

AlgebraicNumber algebraic_from_json(const Json& j) {
    if (!j.is_array() || j.size() != kFieldDegree)
        throw ParseError("algebraic number encoding must be an array of 8 pairs");
    AlgebraicNumber::Coordinates coords{};
    for (std::size_t k = 0; k < kFieldDegree; ++k) {
        const auto& pair = j[k];
        if (!pair.is_array() || pair.size() != 2) throw ParseError("expected [numerator, denominator]");
        const mpz_class den = integer_from_json(pair[1]);
        if (den <= 0) throw ParseError("denominator must be positive");
        coords[k] = make_rational(integer_from_json(pair[0]), den);
    }
    return AlgebraicNumber(std::move(coords));
}

}  // namespace qmodw
