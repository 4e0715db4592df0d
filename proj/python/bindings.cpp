#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schurq/engine.hpp"
#include "schurq/partition.hpp"
#include "schurq/poly_json.hpp"
#include "schurq/verifier.hpp"

namespace py = pybind11;
using namespace schurq;

namespace {

py::int_ to_pyint(const Coefficient &c) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(c.get_str().c_str(), nullptr, 10));
}

// [(xdeg, qdeg, coeff), ...] in canonical order.
py::list terms(const BivarPoly &p) {
    py::list out;
    for (const auto &t : p.terms())
        out.append(py::make_tuple(t.mono.xdeg, t.mono.qdeg, to_pyint(t.coeff)));
    return out;
}

BivarPoly from_terms_list(const py::iterable &items) {
    std::vector<Term> out;
    for (auto item : items) {
        auto t = item.cast<py::tuple>();
        if (t.size() != 3)
            throw py::value_error("expected (xdeg, qdeg, coeff) triples");
        long x = t[0].cast<long>();
        long q = t[1].cast<long>();
        if (x < 0 || q < 0)
            throw py::value_error("negative exponent");
        Coefficient c(py::str(t[2]).cast<std::string>(), 10);
        out.push_back({{static_cast<Exponent>(x), static_cast<Exponent>(q)}, std::move(c)});
    }
    return BivarPoly::from_terms(std::move(out));
}

py::list table(const CoeffTable &t) {
    py::list out;
    for (const auto &e : t.entries)
        out.append(terms(e));
    return out;
}

std::vector<CheckId> checks_from(const std::optional<std::vector<std::string>> &tags) {
    std::vector<CheckId> ids;
    if (!tags) {
        for (const auto &c : all_checks())
            ids.push_back(c.id);
        return ids;
    }
    for (const auto &tag : *tags) {
        auto id = parse_check(tag);
        if (!id)
            throw py::value_error("unknown check '" + tag + "'");
        ids.push_back(*id);
    }
    return ids;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Alladi-Schur polynomials and identity checks";

    py::register_exception<DivisionFailure>(m, "DivisionFailure", PyExc_ArithmeticError);

    py::class_<SchurEngine>(m, "Engine")
        .def(py::init<>())
        .def("d", [](SchurEngine &e, long n) { return terms(e.d_recursive(n)); }, py::arg("n"))
        .def("p", [](SchurEngine &e, long n) { return terms(e.p(n)); }, py::arg("n"))
        .def(
            "rd",
            [](SchurEngine &e, long n, const std::string &route) {
                if (route == "division")
                    return terms(e.rd_by_division(n));
                if (route == "recurrence")
                    return terms(e.rd_by_recurrence(n));
                throw py::value_error("route must be 'division' or 'recurrence'");
            },
            py::arg("n"), py::arg("route") = "division")
        .def("c_table", [](SchurEngine &e, long n) { return table(e.c_table(n)); }, py::arg("n"))
        .def("c", [](SchurEngine &e, long n, long j) { return terms(e.c(n, j)); }, py::arg("n"),
             py::arg("j"))
        .def("c_recurrence",
             [](SchurEngine &e, long n, long j) { return terms(e.c_by_andrews_recurrence(n, j)); },
             py::arg("n"), py::arg("j"))
        .def("rc_table", [](SchurEngine &e, long n) { return table(e.rc_table(n)); }, py::arg("n"))
        .def("rc", [](SchurEngine &e, long n, long j) { return terms(e.rc(n, j)); }, py::arg("n"),
             py::arg("j"))
        .def("rc_closed", [](SchurEngine &e, long n, long j) { return terms(e.rc_by_theorem3(n, j)); },
             py::arg("n"), py::arg("j"))
        .def(
            "verify_json",
            [](SchurEngine &e, std::optional<std::vector<std::string>> tags, long max_n, long max_c,
               long max_weight, long max_oracle) {
                auto ids = checks_from(tags);
                auto reports = run_suite(e, ids, VerifyConfig{max_n, max_c, max_weight, max_oracle});
                return reports_to_json(reports, false).dump();
            },
            py::arg("checks") = py::none(), py::arg("max_n") = 60, py::arg("max_c") = 10,
            py::arg("max_weight") = 40, py::arg("max_oracle") = 30);

    m.def("p_index", &p_index, py::arg("n"));
    m.def("check_tags", [] {
        std::vector<std::string> tags;
        for (const auto &c : all_checks())
            tags.emplace_back(c.tag);
        return tags;
    });
    m.def("oracle_d", [](int N) { return terms(oracle_dN(N)); }, py::arg("N"));
    m.def("alladi_schur_holds",
          [](long max_weight) { return verify_alladi_schur(max_weight).status() == Status::pass; },
          py::arg("max_weight"));
    m.def("to_text", [](const py::iterable &t) { return to_text(from_terms_list(t)); },
          py::arg("terms"));
    m.def("to_json", [](const py::iterable &t) { return to_json_string(from_terms_list(t)); },
          py::arg("terms"));
    m.def("from_json", [](const std::string &s) { return terms(from_json_string(s)); },
          py::arg("text"));
}
