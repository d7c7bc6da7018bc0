#pragma once

// Exact dense vectors and square matrices over AlgebraicNumber.

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmodw/algebra.hpp"

namespace qmodw {

class StateVector {
public:
    StateVector() = default;
    explicit StateVector(std::size_t dim) : entries_(dim) {}
    explicit StateVector(std::vector<AlgebraicNumber> entries) : entries_(std::move(entries)) {}
    StateVector(std::initializer_list<AlgebraicNumber> entries) : entries_(entries) {}

    /// Computational basis state |index> in `dim` dimensions.
    static StateVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return entries_.size(); }
    const AlgebraicNumber& operator[](std::size_t k) const { return entries_[k]; }
    AlgebraicNumber& operator[](std::size_t k) { return entries_[k]; }
    std::span<const AlgebraicNumber> entries() const { return entries_; }

    /// Sum of entry * conj(entry). Real, but in general an element of Q(sqrt2, sqrt3).
    AlgebraicNumber norm2() const;

    StateVector& operator*=(const AlgebraicNumber& scale);

    friend bool operator==(const StateVector&, const StateVector&) = default;

private:
    std::vector<AlgebraicNumber> entries_;
};

class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
    /// Row-major rows; every row must have rows.size() entries.
    SquareMatrix(std::initializer_list<std::initializer_list<AlgebraicNumber>> rows);

    static SquareMatrix identity(std::size_t dim);
    static SquareMatrix diagonal(std::span<const AlgebraicNumber> diag);

    std::size_t dim() const { return dim_; }
    const AlgebraicNumber& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    AlgebraicNumber& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

    /// Conjugate transpose.
    SquareMatrix adjoint() const;
    SquareMatrix& operator*=(const AlgebraicNumber& scale);

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<AlgebraicNumber> entries_;
};

/// Diagonal 0/1 projector onto the span of a set of computational basis states.
class Projector {
public:
    /// Throws DomainError on an empty index set or duplicate indices.
    explicit Projector(std::vector<std::size_t> indices);

    std::span<const std::size_t> indices() const { return indices_; }

private:
    std::vector<std::size_t> indices_;
};

StateVector apply(const SquareMatrix& m, const StateVector& v);
SquareMatrix matmul(const SquareMatrix& a, const SquareMatrix& b);

/// True iff M^dagger M is exactly the identity.
bool is_unitary(const SquareMatrix& m);

/// <u|v> = sum conj(u_j) v_j.
AlgebraicNumber inner(const StateVector& u, const StateVector& v);

/// Squared norm of the component of v inside the projector's subspace.
/// Throws IndexOutOfRange for indices beyond dim(v) and DomainError when the
/// mass is not rational (never the case for the algorithm's states).
Rational project_mass(const Projector& p, const StateVector& v);

Json to_json(const StateVector& v);
Json to_json(const SquareMatrix& m);
StateVector state_from_json(const Json& j);
SquareMatrix matrix_from_json(const Json& j);

std::ostream& operator<<(std::ostream& os, const StateVector& v);

}  // namespace qmodw
