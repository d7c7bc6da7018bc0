#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmodw/algebra.hpp"
#include "qmodw/commands.hpp"
#include "qmodw/errors.hpp"
#include "qmodw/hamming_mod.hpp"
#include "qmodw/oracle.hpp"
#include "qmodw/polymethod.hpp"
#include "qmodw/subroutines.hpp"

namespace py = pybind11;
using namespace qmodw;

namespace {

std::vector<std::string> entries_as_text(const StateVector& v) {
    std::vector<std::string> out;
    for (const auto& a : v.entries()) out.push_back(a.to_string());
    return out;
}

std::vector<std::vector<std::string>> matrix_as_text(const SquareMatrix& m) {
    std::vector<std::vector<std::string>> out(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) out[r].push_back(m(r, c).to_string());
    return out;
}

// coefficients keyed by the 1-based variable indices of each monomial
MultilinearPolynomial polynomial_from_terms(std::size_t n, const std::map<std::vector<Index>, std::string>& terms) {
    MultilinearPolynomial p(n);
    for (const auto& [vars, coeff] : terms) {
        MultilinearPolynomial mono = MultilinearPolynomial::constant(n, parse_algebraic(coeff));
        for (Index i : vars) mono = mono * MultilinearPolynomial::variable(n, i);
        p += mono;
    }
    return p;
}

GramVariant gram_variant(int scale) {
    if (scale == 48) return GramVariant::Scaled48;
    if (scale == 16) return GramVariant::Scaled16;
    throw DomainError("closed form scale must be 48 or 16");
}

}  // namespace

PYBIND11_MODULE(_qmodw, m) {
    m.doc() = "Exact-arithmetic simulation of the mod-m Hamming weight query algorithm";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DivisionByZero>(m, "DivisionByZero", base.ptr());
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
    py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange", base.ptr());
    py::register_exception<UnsupportedModulus>(m, "UnsupportedModulus", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<HypothesisViolated>(m, "HypothesisViolated", base.ptr());
    py::register_exception<PreconditionFailed>(m, "PreconditionFailed", base.ptr());
    py::register_exception<InternalInvariantViolation>(m, "InternalInvariantViolation", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    py::class_<AlgebraicNumber>(m, "AlgebraicNumber")
        .def(py::init<>())
        .def(py::init(&parse_algebraic), py::arg("text"))
        .def(py::init([](long v) { return AlgebraicNumber(v); }), py::arg("value"))
        .def("conj", &AlgebraicNumber::conj)
        .def("inv", &AlgebraicNumber::inv)
        .def("norm2", &AlgebraicNumber::norm2)
        .def("approx", &AlgebraicNumber::approx)
        .def("is_zero", &AlgebraicNumber::is_zero)
        .def("is_rational", &AlgebraicNumber::is_rational)
        .def("__add__", [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return a + b; })
        .def("__sub__", [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return a - b; })
        .def("__mul__", [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return a * b; })
        .def("__truediv__", [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return a / b; })
        .def("__neg__", [](const AlgebraicNumber& a) { return -a; })
        .def("__eq__", [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return a == b; })
        .def("__hash__", [](const AlgebraicNumber& a) { return py::hash(py::str(a.to_string())); })
        .def("__str__", &AlgebraicNumber::to_string)
        .def("__repr__", [](const AlgebraicNumber& a) { return "AlgebraicNumber('" + a.to_string() + "')"; });
    py::implicitly_convertible<py::int_, AlgebraicNumber>();
    py::implicitly_convertible<py::str, AlgebraicNumber>();

    py::class_<CountingOracle>(m, "CountingOracle")
        .def(py::init([](const std::string& bits) { return CountingOracle(parse_bits(bits)); }), py::arg("bits"))
        .def("__len__", &CountingOracle::size)
        .def_property_readonly("query_count", &CountingOracle::query_count)
        .def("query_bit", &CountingOracle::query_bit, py::arg("i"))
        .def("record_transcript", &CountingOracle::record_transcript, py::arg("on") = true)
        .def("transcript_json", [](const CountingOracle& o) { return to_json(o.transcript()).dump(); });

    m.def("deutsch", &deutsch, py::arg("oracle"), py::arg("i"), py::arg("j"));
    m.def("mod3", &mod3, py::arg("oracle"), py::arg("i"), py::arg("j"), py::arg("k"));
    m.def("trace_mod3", [](const std::string& bits) {
        std::vector<std::vector<std::string>> out;
        for (const auto& s : trace_mod3(parse_bits(bits)).states) out.push_back(entries_as_text(s));
        return out;
    }, py::arg("bits"));
    m.def("gram_matrix", [] { return matrix_as_text(gram_matrix()); });
    m.def("gram_closed_form", [](std::array<int, 3> a, std::array<int, 3> b, int scale) {
        return gram_closed_form(a, b, gram_variant(scale)).to_string();
    }, py::arg("a"), py::arg("b"), py::arg("scale") = 48);

    m.def("query_bound", &query_bound, py::arg("n"), py::arg("m"));
    m.def("is_supported_modulus", &is_supported_modulus, py::arg("m"));
    m.def("factor_split", [](std::uint64_t mod) { return factor_split(mod).split; }, py::arg("m"));
    m.def("weight_mod", &weight_mod, py::arg("oracle"), py::arg("m"));
    m.def("run_json", [](const std::string& bits, std::uint64_t mod, bool trace) {
        return to_json(make_run_report(bits, mod, trace)).dump();
    }, py::arg("bits"), py::arg("m"), py::arg("trace") = false);
    m.def("sweep_csv", [](std::size_t n_max, const std::vector<std::uint64_t>& moduli, unsigned threads) {
        py::gil_scoped_release release;
        return sweep_csv(run_sweep(n_max, moduli, threads));
    }, py::arg("n_max"), py::arg("moduli"), py::arg("threads") = 0);

    m.def("mod_m_spec", [](std::size_t n, std::size_t mod) { return mod_m_spec(n, mod).values; }, py::arg("n"), py::arg("m"));
    m.def("ndeg_lower_bound", [](const std::vector<std::uint8_t>& values) {
        if (values.empty()) throw DomainError("need at least one value");
        return ndeg_lower_bound(SymmetricFunctionSpec{values.size() - 1, values});
    }, py::arg("values"));
    m.def("lower_bound_row", [](std::size_t n, std::size_t mod) {
        const LowerBoundRow r = lower_bound_row(n, mod);
        py::dict d;
        d["n"] = r.n;
        d["m"] = r.m;
        d["zero_weights"] = r.zero_weights;
        d["bound"] = r.bound;
        d["matches_upper_bound"] = r.matches_upper_bound;
        return d;
    }, py::arg("n"), py::arg("m"));
    m.def("symmetrize", [](std::size_t n, const std::map<std::vector<Index>, std::string>& terms) {
        const UnivariatePolynomial q = symmetrize(polynomial_from_terms(n, terms));
        std::vector<std::string> out;
        for (const auto& c : q.coefficients()) out.push_back(c.to_string());
        return out;
    }, py::arg("n"), py::arg("terms"));
}
