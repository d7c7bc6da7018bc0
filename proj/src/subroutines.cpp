#include "qmodw/subroutines.hpp"

#include "qmodw/errors.hpp"

namespace qmodw {

namespace {

AlgebraicNumber rat(long num, long den = 1) { return make_rational(num, den); }

// p + q*i*sqrt3
AlgebraicNumber with_i_sqrt3(const Rational& p, const Rational& q) {
    return AlgebraicNumber(p) + AlgebraicNumber::basis(Basis::ISqrt3, q);
}

SquareMatrix build_hadamard() {
    SquareMatrix h{{1, 1}, {1, -1}};
    h *= AlgebraicNumber::basis(Basis::Sqrt2, make_rational(1, 2));  // 1/sqrt2
    return h;
}

SquareMatrix build_qft() {
    const AlgebraicNumber omega = AlgebraicNumber::omega();
    const std::array<AlgebraicNumber, 3> powers = {AlgebraicNumber::one(), omega, omega * omega};
    const AlgebraicNumber scale = AlgebraicNumber::basis(Basis::Sqrt3, make_rational(1, 3));  // 1/sqrt3
    SquareMatrix m(kMod3Dim);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m(r, c) = powers[(r * c) % 3] * scale;
    m(3, 3) = AlgebraicNumber::one();
    m(4, 4) = AlgebraicNumber::one();
    return m;
}

SquareMatrix build_u() {
    const AlgebraicNumber alpha = with_i_sqrt3(make_rational(-1, 2), make_rational(3, 2));
    const AlgebraicNumber beta = with_i_sqrt3(make_rational(1, 2), make_rational(3, 2));
    SquareMatrix u{
        {4, 0, 0, 0, 0},
        {0, alpha, 0, 3, 0},
        {0, 0, alpha.conj(), 0, 3},
        {0, 3, 0, beta, 0},
        {0, 0, 3, 0, beta.conj()},
    };
    u *= rat(1, 4);
    return u;
}

SquareMatrix build_v() {
    const AlgebraicNumber gamma = with_i_sqrt3(make_rational(1, 2), make_rational(-1, 2));
    const AlgebraicNumber delta = with_i_sqrt3(make_rational(-1, 2), make_rational(-1, 2));
    SquareMatrix v{
        {AlgebraicNumber::sqrt2(), 0, 0, 0, 0},
        {0, gamma, 0, 1, 0},
        {0, 0, gamma.conj(), 0, 1},
        {0, 1, 0, delta, 0},
        {0, 0, 1, 0, delta.conj()},
    };
    v *= AlgebraicNumber::basis(Basis::Sqrt2, make_rational(1, 2));
    return v;
}

// Index of the unique projector carrying all of the (unit) mass.
int deterministic_outcome(std::span<const Projector> projectors, const StateVector& state, const char* what) {
    int outcome = -1;
    Rational total = 0;
    for (std::size_t k = 0; k < projectors.size(); ++k) {
        const Rational mass = project_mass(projectors[k], state);
        total += mass;
        if (mass == 1) {
            if (outcome != -1) throw InternalInvariantViolation(std::string(what) + ": two outcomes with unit mass");
            outcome = static_cast<int>(k);
        } else if (mass != 0) {
            throw InternalInvariantViolation(std::string(what) + ": outcome mass " + mass.get_str() + " is not 0 or 1");
        }
    }
    if (outcome == -1 || total != 1) throw InternalInvariantViolation(std::string(what) + ": no outcome with unit mass");
    return outcome;
}

// V (QFT^dag O QFT) U (QFT^dag O QFT) |0>, keeping psi1..psi4 when asked.
StateVector run_mod3_circuit(CountingOracle& oracle, const BlockView& view, IntermediateTrace* trace) {
    const Mod3Constants& k = mod3_constants();
    auto fourier_oracle = [&](const StateVector& s) {
        return apply(k.qft_dag, oracle.phase_apply(view, apply(k.qft, s)));
    };
    StateVector psi = fourier_oracle(StateVector::basis(kMod3Dim, 0));
    if (trace) trace->states[0] = psi;
    psi = apply(k.u, psi);
    if (trace) trace->states[1] = psi;
    psi = fourier_oracle(psi);
    if (trace) trace->states[2] = psi;
    psi = apply(k.v, psi);
    if (trace) trace->states[3] = psi;
    return psi;
}

}  // namespace

const Mod3Constants& mod3_constants() {
    static const Mod3Constants constants = [] {
        SquareMatrix qft = build_qft();
        SquareMatrix qft_dag = qft.adjoint();
        return Mod3Constants{
            build_hadamard(),
            std::move(qft),
            std::move(qft_dag),
            build_u(),
            build_v(),
            {Projector({0}), Projector({1, 2}), Projector({3, 4})},
        };
    }();
    return constants;
}

int deutsch(CountingOracle& oracle, Index i, Index j) {
    const Mod3Constants& k = mod3_constants();
    const BlockView view{{i, j}, 0};
    StateVector psi = apply(k.hadamard, StateVector::basis(2, 0));
    psi = oracle.phase_apply(view, psi);
    psi = apply(k.hadamard, psi);
    static const std::array<Projector, 2> outcomes = {Projector({0}), Projector({1})};
    return deterministic_outcome(outcomes, psi, "deutsch");
}

int mod3(CountingOracle& oracle, Index i, Index j, Index k) {
    const BlockView view{{i, j, k}, 2};
    const StateVector psi = run_mod3_circuit(oracle, view, nullptr);
    return deterministic_outcome(mod3_constants().residue_projectors, psi, "mod3");
}

IntermediateTrace trace_mod3(const BitString& x) {
    if (x.size() != 3) throw DomainError("trace_mod3 expects a 3-bit input");
    CountingOracle oracle(x);
    IntermediateTrace trace;
    run_mod3_circuit(oracle, BlockView{{1, 2, 3}, 2}, &trace);
    return trace;
}

BitString three_bit_input(std::size_t lex_index) {
    if (lex_index >= 8) throw IndexOutOfRange("three-bit input index must be below 8");
    return {static_cast<std::uint8_t>((lex_index >> 2) & 1U), static_cast<std::uint8_t>((lex_index >> 1) & 1U),
            static_cast<std::uint8_t>(lex_index & 1U)};
}

SquareMatrix gram_matrix() {
    std::array<StateVector, 8> finals;
    for (std::size_t x = 0; x < 8; ++x) finals[x] = trace_mod3(three_bit_input(x)).states[3];
    SquareMatrix g(8);
    for (std::size_t x = 0; x < 8; ++x)
        for (std::size_t y = 0; y < 8; ++y) g(x, y) = inner(finals[x], finals[y]);
    return g;
}

AlgebraicNumber gram_closed_form(const std::array<int, 3>& a, const std::array<int, 3>& b, GramVariant variant) {
    for (int s : a)
        if (s != 1 && s != -1) throw DomainError("sign vector entries must be +1 or -1");
    for (int s : b)
        if (s != 1 && s != -1) throw DomainError("sign vector entries must be +1 or -1");

    const long a1 = a[0], a2 = a[1], a3 = a[2];
    const long b1 = b[0], b2 = b[1], b3 = b[2];
    const long cross = a1 * b2 + a1 * b3 + a2 * b1 + a2 * b3 + a3 * b1 + a3 * b2;
    long value = 0;
    long scale = 0;
    switch (variant) {
        case GramVariant::Scaled48:
            value = 6 * (a1 * b1 + a2 * b2 + a3 * b3) + (a1 * a1 * b1 * b1 + a2 * a2 * b2 * b2 + a3 * a3 * b3 * b3) -
                    3 * cross +
                    3 * (a1 * a1 * b1 * b2 + a2 * a2 * b2 * b3 + a3 * a3 * b1 * b3 + a1 * a2 * b1 * b1 +
                         a2 * a3 * b2 * b2 + a1 * a3 * b3 * b3) +
                    9 * (a1 * a2 * b1 * b2 + a2 * a3 * b2 * b3 + a1 * a3 * b1 * b3);
            scale = 48;
            break;
        case GramVariant::Scaled16:
            value = 1 + (a1 * a2 + a1 * a3 + a2 * a3) + (b1 * b2 + b1 * b3 + b2 * b3) +
                    2 * (a1 * b1 + a2 * b2 + a3 * b3) + 3 * (a1 * a2 * b1 * b2 + a1 * a3 * b1 * b3 + a2 * a3 * b3 * b2) -
                    cross;
            scale = 16;
            break;
    }
    return make_rational(value, scale);
}

}  // namespace qmodw
