#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hera/hermcode.hpp"
#include "hera/io.hpp"
#include "hera/repro.hpp"
#include "hera/simnet.hpp"

namespace py = pybind11;
using namespace hera;

namespace {

// Value wrapper so Python never needs to hold shared_ptr<const FieldSpec>.
struct PyField {
    Field f;
};

} // namespace

PYBIND11_MODULE(_hera, m) {
    m.doc() = "Secure distributed matrix multiplication over one-point Hermitian codes";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<ParamError>(m, "ParamError");
    py::register_exception<SingularError>(m, "SingularError");
    py::register_exception<AuditError>(m, "AuditError");

    py::class_<PyField>(m, "Field")
        .def_static("make",
                    [](uint32_t p, uint32_t k, const std::vector<uint32_t>& mod) {
                        return PyField{FieldSpec::make(p, k, mod)};
                    })
        .def_static("make_default",
                    [](uint32_t p, uint32_t k) { return PyField{FieldSpec::make_default(p, k)}; })
        .def_static("for_hermitian", [](uint32_t q) { return PyField{FieldSpec::for_hermitian(q)}; })
        .def_property_readonly("p", [](const PyField& f) { return f.f->p(); })
        .def_property_readonly("k", [](const PyField& f) { return f.f->k(); })
        .def_property_readonly("order", [](const PyField& f) { return f.f->order(); })
        .def_property_readonly("modulus", [](const PyField& f) { return f.f->modulus(); })
        .def("tag", [](const PyField& f) { return f.f->tag(); })
        .def("add", [](const PyField& f, uint32_t a, uint32_t b) { return f.f->add(a, b); })
        .def("sub", [](const PyField& f, uint32_t a, uint32_t b) { return f.f->sub(a, b); })
        .def("mul", [](const PyField& f, uint32_t a, uint32_t b) { return f.f->mul(a, b); })
        .def("neg", [](const PyField& f, uint32_t a) { return f.f->neg(a); })
        .def("inv", [](const PyField& f, uint32_t a) { return f.f->inv(a); })
        .def("div", [](const PyField& f, uint32_t a, uint32_t b) { return f.f->div(a, b); })
        .def("pow", [](const PyField& f, uint32_t a, uint64_t e) { return f.f->pow(a, e); })
        .def("frobenius_q",
             [](const PyField& f, uint32_t e) { return f.f->element(e).frobenius_q().enc(); });

    py::class_<FieldMatrix>(m, "FieldMatrix")
        .def(py::init([](const PyField& f, const std::vector<std::vector<uint32_t>>& rows) {
            return FieldMatrix::from_rows(f.f, rows);
        }))
        .def_property_readonly("rows", &FieldMatrix::rows)
        .def_property_readonly("cols", &FieldMatrix::cols)
        .def("to_rows", &FieldMatrix::to_rows)
        .def("rank", &FieldMatrix::rank)
        .def("__add__", &FieldMatrix::operator+)
        .def("__sub__", static_cast<FieldMatrix (FieldMatrix::*)(const FieldMatrix&) const>(
                            &FieldMatrix::operator-))
        .def("__matmul__", &FieldMatrix::operator*)
        .def("__eq__", &FieldMatrix::operator==)
        .def("solve", &FieldMatrix::solve)
        .def("inverse", &FieldMatrix::inverse);

    py::class_<CurveTable, std::shared_ptr<CurveTable>>(m, "CurveTable")
        .def(py::init([](const PyField& f) { return std::make_shared<CurveTable>(f.f); }))
        .def_property_readonly("q", &CurveTable::q)
        .def_property_readonly("genus", &CurveTable::genus)
        .def("__len__", &CurveTable::size)
        .def("point",
             [](const CurveTable& t, size_t i) {
                 const CurvePoint& p = t.point(i);
                 return std::make_pair(p.alpha.enc(), p.beta.enc());
             })
        .def("on_curve", [](const CurveTable& t, uint32_t a, uint32_t b) {
            return t.on_curve(t.field()->element(a), t.field()->element(b));
        });

    m.def("monomial_basis", [](uint32_t q, int64_t mm) {
        std::vector<std::pair<uint32_t, uint32_t>> out;
        for (const auto& mono : monomial_basis(q, mm)) out.emplace_back(mono.i, mono.j);
        return out;
    });
    m.def("rr_dim", &rr_dim);
    m.def("dual_m", &dual_m);

    py::class_<HermitianCode>(m, "HermitianCode")
        .def_property_readonly("q", [](const HermitianCode& c) { return c.q; })
        .def_property_readonly("m", [](const HermitianCode& c) { return c.m; })
        .def_property_readonly("n", &HermitianCode::n)
        .def_property_readonly("dim", &HermitianCode::dim)
        .def_property_readonly("d_star", &HermitianCode::d_star)
        .def("self_orthogonal", &HermitianCode::self_orthogonal)
        .def("self_dual", &HermitianCode::self_dual)
        .def("generator_rows", [](const HermitianCode& c) { return c.gen.to_rows(); });

    m.def("code_build", [](uint32_t q, int64_t mm) {
        auto table = std::make_shared<CurveTable>(FieldSpec::for_hermitian(q));
        return code_build(table, mm);
    });
    m.def("min_distance_bruteforce",
          [](const HermitianCode& c) { return min_distance_bruteforce(c); });
    m.def("dual_check", &dual_check);

    py::class_<SchemeParams>(m, "SchemeParams")
        .def_readonly("q", &SchemeParams::q)
        .def_readonly("L", &SchemeParams::L)
        .def_readonly("T", &SchemeParams::T)
        .def_readonly("m", &SchemeParams::m)
        .def_readonly("m_perp", &SchemeParams::m_perp)
        .def_readonly("N", &SchemeParams::N)
        .def_property_readonly("field", [](const SchemeParams& p) { return PyField{p.field}; });
    m.def("params_validate", &params_validate);

    m.def("rate", [](uint32_t q, size_t L, size_t T, size_t a, size_t b, size_t c) {
        Rational r = rate_eval(params_validate(q, L, T, a, b, c));
        return std::make_pair(r.num, r.den);
    });

    // One-call protocol run: returns (decoded rows, assignment order, costs dict).
    m.def("run", [](uint32_t q, size_t L, size_t T, const std::vector<std::vector<uint32_t>>& A,
                    const std::vector<std::vector<uint32_t>>& B, uint64_t seed) {
        size_t a = A.size(), b = A.empty() ? 0 : A[0].size();
        size_t c = B.empty() ? 0 : B[0].size();
        SchemeParams p = params_validate(q, L, T, a, b, c);
        CurveTable table(p.field);
        PointAssignment asn = assign_points(p, table, seed);
        Transcript tr = run_protocol(p, table, asn, FieldMatrix::from_rows(p.field, A),
                                     FieldMatrix::from_rows(p.field, B), seed);
        py::dict costs;
        costs["upload_symbols"] = tr.costs.upload_symbols;
        costs["download_symbols"] = tr.costs.download_symbols;
        costs["retrieved_symbols"] = tr.costs.retrieved_symbols;
        costs["rate"] = std::make_pair(tr.costs.rate.num, tr.costs.rate.den);
        return py::make_tuple(tr.decoded.to_rows(), tr.assignment_order, costs);
    }, py::arg("q"), py::arg("L"), py::arg("T"), py::arg("A"), py::arg("B"), py::arg("seed") = 0);

    m.def("transcript_json", [](uint32_t q, size_t L, size_t T,
                                const std::vector<std::vector<uint32_t>>& A,
                                const std::vector<std::vector<uint32_t>>& B, uint64_t seed) {
        size_t a = A.size(), b = A.empty() ? 0 : A[0].size();
        size_t c = B.empty() ? 0 : B[0].size();
        SchemeParams p = params_validate(q, L, T, a, b, c);
        CurveTable table(p.field);
        PointAssignment asn = assign_points(p, table, seed);
        return run_protocol(p, table, asn, FieldMatrix::from_rows(p.field, A),
                            FieldMatrix::from_rows(p.field, B), seed)
            .to_json();
    }, py::arg("q"), py::arg("L"), py::arg("T"), py::arg("A"), py::arg("B"), py::arg("seed") = 0);
}
