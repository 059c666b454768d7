#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "padicverify/bernoulli.hpp"
#include "padicverify/characters.hpp"
#include "padicverify/checks.hpp"
#include "padicverify/field_io.hpp"
#include "padicverify/lfunctions.hpp"
#include "padicverify/quadfield.hpp"
#include "padicverify/regulators.hpp"
#include "padicverify/report.hpp"

namespace py = pybind11;
using namespace padicverify;

namespace {

mpz_class to_mpz(const py::int_& v) {
    mpz_class z;
    if (mpz_set_str(z.get_mpz_t(), py::str(v).cast<std::string>().c_str(), 10) != 0)
        throw std::invalid_argument("bad integer");
    return z;
}

py::int_ to_py(const mpz_class& z) { return py::int_(py::str(z.get_str())); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact p-adic arithmetic and class-number congruence checks";

    py::class_<PadicInt>(m, "PadicInt")
        .def(py::init([](long p, int prec, const py::int_& v) {
                 return PadicInt(p, prec, to_mpz(v));
             }),
             py::arg("p"), py::arg("prec"), py::arg("value"))
        .def_readonly("p", &PadicInt::p)
        .def_readonly("prec", &PadicInt::prec)
        .def_property_readonly("residue",
                               [](const PadicInt& a) { return to_py(a.residue); })
        .def("valuation", &PadicInt::valuation)
        .def("is_unit", &PadicInt::is_unit)
        .def("__repr__", &PadicInt::str)
        .def("__eq__", [](const PadicInt& a, const PadicInt& b) { return a == b; })
        .def("__add__", [](const PadicInt& a, const PadicInt& b) { return a + b; })
        .def("__sub__", [](const PadicInt& a, const PadicInt& b) { return a - b; })
        .def("__mul__", [](const PadicInt& a, const PadicInt& b) { return a * b; })
        .def("__neg__", [](const PadicInt& a) { return -a; });

    m.def("inverse", [](const PadicInt& a) { return inverse(a); },
          "multiplicative inverse of a unit");
    m.def("teichmuller", [](const PadicInt& z) { return teichmuller(z); });
    m.def("iwasawa_log", [](const PadicInt& z) { return iwasawa_log(z); });
    m.def("fermat_quotient", &fermat_quotient);
    m.def("higher_fermat_quotient", &higher_fermat_quotient, py::arg("z"), py::arg("n"));
    m.def("hensel_sqrt",
          [](const py::int_& d, long p, int prec) { return hensel_sqrt(to_mpz(d), p, prec); },
          py::arg("d"), py::arg("p"), py::arg("prec"));

    py::class_<DirichletChar>(m, "DirichletChar")
        .def_readonly("conductor", &DirichletChar::conductor)
        .def_readonly("order", &DirichletChar::order)
        .def_readonly("parity", &DirichletChar::parity)
        .def("__call__", [](const DirichletChar& chi, const py::int_& a) {
            return eval_char(chi, to_mpz(a));
        });
    m.def("kronecker_char", [](long d) { return kronecker_char(mpz_class(d)); });
    m.def("trivial_char", &trivial_char);
    m.def("gauss_sum", &gauss_sum, py::arg("chi"), py::arg("p"), py::arg("prec"));

    m.def("bernoulli_number", [](unsigned n) {
        BigRational b = bernoulli_number(n);
        return py::make_tuple(to_py(b.get_num()), to_py(b.get_den()));
    });
    m.def("gen_bernoulli_exact", [](unsigned n, const DirichletChar& chi) {
        BigRational b = gen_bernoulli_exact(n, chi);
        return py::make_tuple(to_py(b.get_num()), to_py(b.get_den()));
    });
    m.def("gen_bernoulli_padic",
          [](unsigned n, const DirichletChar& chi, long p, int prec) {
              PadicScaled v = gen_bernoulli_padic(n, chi, p, prec);
              return py::make_tuple(v.shift, v.value);
          });

    m.def("fundamental_unit", [](long d) {
        FundamentalUnit u = fundamental_unit(mpz_class(d));
        return py::make_tuple(to_py(u.x), to_py(u.y), u.norm);
    });
    m.def("class_number", [](long d) {
        auto [h, hplus] = class_number(mpz_class(d));
        return py::make_tuple(h, hplus);
    });
    m.def("class_number_by_ideals",
          [](long d) { return class_number_by_ideals(mpz_class(d)); });

    m.def("leopoldt_lp", [](long d, long p, int prec) {
        LpValue L = leopoldt_Lp(kronecker_char(mpz_class(d)), p, prec);
        return py::make_tuple(L.value, L.embedding);
    });
    m.def("kubota_leopoldt_at_1", [](long d, long p, int prec) {
        return kubota_leopoldt_at_1(kronecker_char(mpz_class(d)), p, prec);
    });

    m.def("run_default_grid_json", [](bool stable) {
        auto reports = run_check(default_grid());
        return emit_report(reports, ReportFormat::json, stable);
    }, py::arg("stable") = true);
    m.def("run_checks_json",
          [](std::vector<std::string> checks, std::vector<long> ds, std::vector<long> ps,
             std::vector<int> ns, bool stable) {
              CheckSpec spec;
              spec.checks = std::move(checks);
              spec.ds = std::move(ds);
              spec.ps = std::move(ps);
              spec.ns = std::move(ns);
              auto reports = run_check(spec);
              return emit_report(reports, ReportFormat::json, stable);
          },
          py::arg("checks"), py::arg("ds"), py::arg("ps"), py::arg("ns"),
          py::arg("stable") = true);

    m.attr("__version__") = "0.1.0";
}
