#include "qmodw/linalg.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "qmodw/errors.hpp"

namespace qmodw {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* op) {
    if (a != b)
        throw DimensionMismatch(std::string(op) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw IndexOutOfRange("basis index " + std::to_string(index) + " outside dimension " + std::to_string(dim));
    StateVector v(dim);
    v[index] = AlgebraicNumber::one();
    return v;
}

AlgebraicNumber StateVector::norm2() const { return inner(*this, *this); }

StateVector& StateVector::operator*=(const AlgebraicNumber& scale) {
    for (auto& e : entries_) e *= scale;
    return *this;
}

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<AlgebraicNumber>> rows)
    : dim_(rows.size()) {
    entries_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
        if (row.size() != dim_) throw DimensionMismatch("matrix literal is not square");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

SquareMatrix SquareMatrix::identity(std::size_t dim) {
    SquareMatrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) m(k, k) = AlgebraicNumber::one();
    return m;
}

SquareMatrix SquareMatrix::diagonal(std::span<const AlgebraicNumber> diag) {
    SquareMatrix m(diag.size());
    for (std::size_t k = 0; k < diag.size(); ++k) m(k, k) = diag[k];
    return m;
}

SquareMatrix SquareMatrix::adjoint() const {
    SquareMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c).conj();
    return out;
}

SquareMatrix& SquareMatrix::operator*=(const AlgebraicNumber& scale) {
    for (auto& e : entries_) e *= scale;
    return *this;
}

Projector::Projector(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    if (indices_.empty()) throw DomainError("projector needs at least one basis index");
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
        throw DomainError("projector indices must be distinct");
}

StateVector apply(const SquareMatrix& m, const StateVector& v) {
    require_same_dim(m.dim(), v.dim(), "apply");
    const std::size_t n = v.dim();
    StateVector out(n);
    for (std::size_t c = 0; c < n; ++c) {
        if (v[c].is_zero()) continue;
        for (std::size_t r = 0; r < n; ++r) {
            const AlgebraicNumber& a = m(r, c);
            if (a.is_zero()) continue;
            out[r] += a * v[c];
        }
    }
    return out;
}

SquareMatrix matmul(const SquareMatrix& a, const SquareMatrix& b) {
    require_same_dim(a.dim(), b.dim(), "matmul");
    const std::size_t n = a.dim();
    SquareMatrix out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            const AlgebraicNumber& lhs = a(r, k);
            if (lhs.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) {
                const AlgebraicNumber& rhs = b(k, c);
                if (!rhs.is_zero()) out(r, c) += lhs * rhs;
            }
        }
    return out;
}

bool is_unitary(const SquareMatrix& m) {
    return matmul(m.adjoint(), m) == SquareMatrix::identity(m.dim());
}

AlgebraicNumber inner(const StateVector& u, const StateVector& v) {
    require_same_dim(u.dim(), v.dim(), "inner");
    AlgebraicNumber sum;
    for (std::size_t k = 0; k < u.dim(); ++k) {
        if (u[k].is_zero() || v[k].is_zero()) continue;
        sum += u[k].conj() * v[k];
    }
    return sum;
}

Rational project_mass(const Projector& p, const StateVector& v) {
    AlgebraicNumber mass;
    for (std::size_t k : p.indices()) {
        if (k >= v.dim())
            throw IndexOutOfRange("projector index " + std::to_string(k) + " outside dimension " + std::to_string(v.dim()));
        mass += v[k].norm2();
    }
    if (!mass.is_rational()) throw DomainError("projected mass " + mass.to_string() + " is not rational");
    return mass.rational_part();
}

Json to_json(const StateVector& v) {
    Json out = Json::array();
    for (const auto& e : v.entries()) out.push_back(to_json(e));
    return out;
}

Json to_json(const SquareMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

StateVector state_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("state encoding must be an array");
    std::vector<AlgebraicNumber> entries;
    entries.reserve(j.size());
    for (const auto& e : j) entries.push_back(e.is_string() ? parse_algebraic(e.get<std::string>()) : algebraic_from_json(e));
    return StateVector(std::move(entries));
}

SquareMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("matrix encoding must be an array of rows");
    SquareMatrix m(j.size());
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array() || j[r].size() != j.size()) throw ParseError("matrix encoding is not square");
        for (std::size_t c = 0; c < j.size(); ++c)
            m(r, c) = j[r][c].is_string() ? parse_algebraic(j[r][c].get<std::string>()) : algebraic_from_json(j[r][c]);
    }
    return m;
}

std::ostream& operator<<(std::ostream& os, const StateVector& v) {
    os << '(';
    for (std::size_t k = 0; k < v.dim(); ++k) os << (k ? ", " : "") << v[k];
    return os << ')';
}

}  // namespace qmodw
