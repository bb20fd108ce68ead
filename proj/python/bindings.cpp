// Python bindings: string-level access to the main operations, reports as
// plain dicts/lists.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qpoincare/hopf.hpp"
#include "qpoincare/little.hpp"
#include "qpoincare/parse.hpp"
#include "qpoincare/pauli_lubanski.hpp"
#include "qpoincare/rewrite.hpp"
#include "qpoincare/verify.hpp"

namespace py = pybind11;
using namespace qpoin;

namespace {

py::list checks_to_list(const std::vector<CheckResult>& checks) {
    py::list out;
    for (const auto& c : checks) {
        py::dict d;
        d["id"] = c.id;
        d["status"] = status_name(c.status);
        d["witness"] = c.witness;
        d["ms"] = c.ms;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_qpoincare, m) {
    m.doc() =
        "Exact symbolic engine for the q-deformed Poincare algebra: normal "
        "ordering, Hopf structure, the Pauli-Lubanski vector, the spin "
        "Casimir, and the little algebras.";
    m.attr("__version__") = "0.1.0";

    // translators run newest-first: register the base before the subclass
    py::register_exception<Error>(m, "AlgebraError");
    py::register_exception<ParseError>(m, "ExpressionError");

    m.def(
        "normalize",
        [](const std::string& expr) { return print(parse(expr)); },
        py::arg("expr"), "Normal-order an expression and print it.");

    m.def(
        "commutator",
        [](const std::string& x, const std::string& y) {
            return print(commutator(parse(x), parse(y)));
        },
        py::arg("x"), py::arg("y"));

    m.def(
        "star", [](const std::string& x) { return print(star(parse(x))); },
        py::arg("expr"), "The *-involution.");

    m.def(
        "coproduct",
        [](const std::string& x) { return coproduct(parse(x)).str(); },
        py::arg("expr"), "Coproduct of a Lorentz-algebra expression.");

    m.def(
        "antipode",
        [](const std::string& x) { return print(antipode(parse(x))); },
        py::arg("expr"));

    m.def(
        "eval_scalar",
        [](const std::string& expr, double q) {
            Element e = parse(expr);
            if (!e.is_zero() && !(e.terms().size() == 1 &&
                                  e.terms().begin()->first.is_unit()))
                throw DomainError("expression is not a scalar");
            Scalar s = e.is_zero() ? Scalar::zero()
                                   : e.terms().begin()->second;
            return eval_numeric(s, q);
        },
        py::arg("expr"), py::arg("q"),
        "Evaluate a scalar expression at a concrete q.");

    m.def(
        "limit_q1",
        [](const std::string& expr) {
            Element e = parse(expr);
            if (!e.is_zero() && !(e.terms().size() == 1 &&
                                  e.terms().begin()->first.is_unit()))
                throw DomainError("expression is not a scalar");
            Scalar s = e.is_zero() ? Scalar::zero()
                                   : e.terms().begin()->second;
            Limit l = limit_q1(s);
            py::dict d;
            switch (l.kind) {
                case Limit::Kind::Rational: d["kind"] = "rational"; break;
                case Limit::Kind::Irrational: d["kind"] = "irrational"; break;
                default: d["kind"] = "pole";
            }
            if (l.kind != Limit::Kind::Pole) {
                d["a"] = to_string(l.a);
                d["b"] = to_string(l.b);  // coefficient of sqrt(2)
            }
            return d;
        },
        py::arg("expr"),
        "Exact q -> 1 limit of a scalar expression; value is a + b*sqrt(2).");

    m.def("pauli_lubanski", [] {
        py::dict d;
        const PauliLubanski& pl = pauli_lubanski();
        for (int nu = 0; nu < 4; ++nu)
            d[("W_" + std::string(mu_name(nu))).c_str()] = print(pl.at(nu));
        return d;
    });

    m.def("spin_casimir", [] { return print(spin_casimir()); });

    m.def(
        "little_algebra",
        [](const std::string& which) {
            LittleAlgebraReport rep = which == "massive"
                                          ? little_algebra_massive()
                                          : little_algebra_massless();
            py::dict d;
            d["case"] = rep.case_tag;
            py::dict gens;
            for (const auto& [name, e] : rep.generators)
                gens[name.c_str()] = print(e);
            d["generators"] = gens;
            d["checks"] = checks_to_list(rep.checks);
            d["all_pass"] = rep.all_pass();
            return d;
        },
        py::arg("which"), "Little algebra report: 'massive' or 'massless'.");

    m.def(
        "verify",
        [](const std::string& suite, uint64_t seed, int trials,
           const std::vector<double>& qvalues) {
            VerifyOptions opts;
            opts.seed = seed;
            opts.trials = trials;
            opts.qvalues = qvalues;
            return checks_to_list(run_suite(suite, opts));
        },
        py::arg("suite") = "all", py::arg("seed") = 1,
        py::arg("trials") = 500, py::arg("qvalues") = std::vector<double>{},
        "Run a verification suite and return its checks.");

    m.def("suites", [] { return suite_names(); });

    m.def(
        "confluence_fuzz",
        [](uint64_t seed, int trials, int max_len) {
            FuzzReport rep = confluence_fuzz(seed, trials, max_len);
            py::dict d;
            d["trials"] = rep.trials;
            d["mismatches"] = rep.mismatches;
            d["witnesses"] = rep.witnesses;
            return d;
        },
        py::arg("seed") = 1, py::arg("trials") = 500, py::arg("max_len") = 8);
}
