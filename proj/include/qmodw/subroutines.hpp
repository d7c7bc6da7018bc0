#pragma once

// Base quantum subroutines: Deutsch's one-query parity of two bits and the
// two-query Hamming weight mod 3 of three bits, plus the tooling that
// reproduces the mod-3 circuit's intermediate states and final-state Gram matrix.

#include <array>
#include <cstdint>
#include <string>

#include "qmodw/linalg.hpp"
#include "qmodw/oracle.hpp"

namespace qmodw {

/// Fixed matrices of the two subroutines. All entries are exact.
struct Mod3Constants {
    SquareMatrix hadamard;  // 2-dim
    SquareMatrix qft;       // 3-point DFT on |0>,|1>,|2>, identity on |3>,|4>
    SquareMatrix qft_dag;
    SquareMatrix u;
    SquareMatrix v;
    // Residue subspaces: S0 = {|0>}, S1 = {|1>,|2>}, S2 = {|3>,|4>}.
    std::array<Projector, 3> residue_projectors;
};

/// Built once on first use; immutable afterwards.
const Mod3Constants& mod3_constants();

inline constexpr std::size_t kMod3Dim = 5;

/// (x_i + x_j) mod 2 using exactly one query.
int deutsch(CountingOracle& oracle, Index i, Index j);

/// (x_i + x_j + x_k) mod 3 using exactly two queries. Throws
/// InternalInvariantViolation if the final state is not inside a single
/// residue subspace.
int mod3(CountingOracle& oracle, Index i, Index j, Index k);

/// psi1..psi4 of the mod-3 circuit on one 3-bit input.
struct IntermediateTrace {
    std::array<StateVector, 4> states;
};

/// Runs the mod-3 circuit on x (3 bits) and keeps every intermediate state.
IntermediateTrace trace_mod3(const BitString& x);

/// The 8 three-bit inputs in lexicographic order 000, 001, ..., 111.
BitString three_bit_input(std::size_t lex_index);

/// G[x][y] = <psi4(x)|psi4(y)> with rows and columns in lexicographic order.
SquareMatrix gram_matrix();

enum class GramVariant { Scaled48, Scaled16 };

/// Closed-form Gram entry for sign vectors a_i = (-1)^{x_i}, b_i = (-1)^{y_i}.
/// Throws DomainError on an entry other than +1 or -1.
AlgebraicNumber gram_closed_form(const std::array<int, 3>& a, const std::array<int, 3>& b, GramVariant variant);

}  // namespace qmodw
