#pragma once

// Random generators and brute-force reference computations shared by the
// test binaries. Nothing here calls into the code paths it is used to check.

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "qmodw/algebra.hpp"
#include "qmodw/linalg.hpp"
#include "qmodw/polymethod.hpp"

namespace qmodw::testing {

inline Rational random_rational(std::mt19937_64& rng, long span = 9) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    return make_rational(num(rng), den(rng));
}

/// Random field element; each coordinate is zero with probability ~1/2.
inline AlgebraicNumber random_algebraic(std::mt19937_64& rng, long span = 9) {
    AlgebraicNumber::Coordinates c{};
    std::bernoulli_distribution keep(0.5);
    for (auto& x : c)
        if (keep(rng)) x = random_rational(rng, span);
    return AlgebraicNumber(c);
}

inline AlgebraicNumber random_nonzero(std::mt19937_64& rng) {
    for (;;) {
        AlgebraicNumber a = random_algebraic(rng);
        if (!a.is_zero()) return a;
    }
}

inline StateVector random_state(std::mt19937_64& rng, std::size_t dim) {
    StateVector v(dim);
    for (std::size_t k = 0; k < dim; ++k) v[k] = random_algebraic(rng);
    return v;
}

/// Random multilinear polynomial in n variables with `terms` random monomials.
inline MultilinearPolynomial random_multilinear(std::mt19937_64& rng, std::size_t n, std::size_t terms) {
    MultilinearPolynomial p(n);
    std::uniform_int_distribution<Monomial> mono(0, (Monomial{1} << n) - 1);
    for (std::size_t t = 0; t < terms; ++t) p.set_coefficient(mono(rng), random_algebraic(rng));
    return p;
}

/// Direct evaluation: sum of a_S over S contained in the support of x, written
/// independently of MultilinearPolynomial::eval.
inline AlgebraicNumber brute_eval(const MultilinearPolynomial& p, std::uint64_t point) {
    AlgebraicNumber sum;
    for (const auto& [s, c] : p.terms()) {
        bool all_one = true;
        for (std::size_t i = 0; i < p.num_vars(); ++i)
            if (((s >> i) & 1U) && !((point >> i) & 1U)) all_one = false;
        if (all_one) sum += c;
    }
    return sum;
}

/// Mean of p over every point of Hamming weight k, by enumeration of the cube.
inline AlgebraicNumber brute_weight_mean(const MultilinearPolynomial& p, std::size_t k) {
    const std::size_t n = p.num_vars();
    AlgebraicNumber sum;
    long count = 0;
    for (std::uint64_t point = 0; point < (std::uint64_t{1} << n); ++point) {
        if (static_cast<std::size_t>(std::popcount(point)) != k) continue;
        sum += brute_eval(p, point);
        ++count;
    }
    return sum * AlgebraicNumber(make_rational(1, count));
}

}  // namespace qmodw::testing
