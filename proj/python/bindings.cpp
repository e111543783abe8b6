#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jetcalc/conservation.hpp"
#include "jetcalc/covering.hpp"
#include "jetcalc/io.hpp"
#include "jetcalc/parser.hpp"
#include "jetcalc/symmetry.hpp"

namespace py = pybind11;
using namespace jetcalc;

namespace {

// Accepts "u_xx", "x", "w": a single coordinate given by name.
Coordinate parseCoordinate(const std::string& text, const JetContext& ctx) {
  JetExpr e = parse(text, ctx);
  const Poly& p = e.numerator();
  if (!e.isPolynomial() || p.termCount() != 1)
    throw ParseError("expected a single coordinate: '" + text + "'");
  const auto& [mon, coeff] = *p.terms().begin();
  if (mon.size() != 1 || mon[0].second != 1 || coeff != 1)
    throw ParseError("expected a single coordinate: '" + text + "'");
  return mon[0].first;
}

}  // namespace

PYBIND11_MODULE(_jetcalc, m) {
  m.doc() = "Exact jet-space calculus for PDE symmetry analysis";

  py::register_exception<ParseError>(m, "ExprParseError", PyExc_ValueError);
  auto domainError = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NotExactError>(m, "NotExactError", domainError.ptr());

  py::class_<JetContext>(m, "JetContext")
      .def(py::init<std::vector<std::string>, std::vector<std::string>,
                    std::vector<std::string>>(),
           py::arg("independents"), py::arg("dependents"),
           py::arg("fibers") = std::vector<std::string>{})
      .def_property_readonly("independents", &JetContext::independents)
      .def_property_readonly("dependents", &JetContext::dependents)
      .def_property_readonly("fibers", &JetContext::fibers)
      .def("__eq__", [](const JetContext& a, const JetContext& b) { return a == b; });

  py::class_<JetExpr>(m, "JetExpr")
      .def(py::init<>())
      .def("is_zero", &JetExpr::isZero)
      .def("is_polynomial", &JetExpr::isPolynomial)
      .def("jet_order", &JetExpr::jetOrder)
      .def("__eq__", [](const JetExpr& a, const JetExpr& b) { return a == b; })
      .def("__add__", [](const JetExpr& a, const JetExpr& b) { return a + b; })
      .def("__sub__", [](const JetExpr& a, const JetExpr& b) { return a - b; })
      .def("__mul__", [](const JetExpr& a, const JetExpr& b) { return a * b; })
      .def("__truediv__", [](const JetExpr& a, const JetExpr& b) { return a / b; })
      .def("__neg__", [](const JetExpr& a) { return -a; })
      .def("__pow__", [](const JetExpr& a, int k) { return a.pow(k); })
      .def("__repr__", [](const JetExpr& e) {
        return "<JetExpr with " + std::to_string(e.numerator().termCount()) + " term(s)>";
      });

  m.def("parse", &parse, py::arg("text"), py::arg("ctx"));
  m.def("to_string",
        static_cast<std::string (*)(const JetExpr&, const JetContext&)>(&toString),
        py::arg("expr"), py::arg("ctx"));
  m.def("partial",
        [](const JetExpr& e, const std::string& coordinate, const JetContext& ctx) {
          return e.partial(parseCoordinate(coordinate, ctx));
        },
        py::arg("expr"), py::arg("coordinate"), py::arg("ctx"));
  m.def("substitute",
        [](const JetExpr& e, const std::map<std::string, JetExpr>& bindings,
           const JetContext& ctx) {
          std::map<Coordinate, JetExpr> resolved;
          for (const auto& [name, value] : bindings)
            resolved.emplace(parseCoordinate(name, ctx), value);
          return e.substitute(resolved);
        },
        py::arg("expr"), py::arg("bindings"), py::arg("ctx"));
  m.def("total_derivative",
        [](const JetExpr& e, int i) { return totalDerivative(e, i); }, py::arg("expr"),
        py::arg("i"));
  m.def("evolutionary_derivation", &evolutionaryDerivation, py::arg("phi"), py::arg("expr"));
  m.def("jacobi_bracket", &jacobiBracket, py::arg("phi"), py::arg("psi"));

  py::class_<PdeSystem>(m, "PdeSystem")
      .def_property_readonly("context", &PdeSystem::context)
      .def("reduce", &PdeSystem::reduce, py::arg("expr"))
      .def("is_internal",
           [](const PdeSystem& sys, const std::string& coordinate) {
             return sys.isInternal(parseCoordinate(coordinate, sys.context()));
           },
           py::arg("coordinate"))
      .def("restricted_total_derivative",
           [](const PdeSystem& sys, const JetExpr& e, int i) {
             return sys.restrictedTotalDerivative(e, i);
           },
           py::arg("expr"), py::arg("i"))
      .def("prolong_equation", &PdeSystem::prolongEquation, py::arg("index"),
           py::arg("sigma_exponents"))
      .def("__repr__", [](const PdeSystem& sys) { return renderSystemFile(sys); });

  m.def("prolong_equation",
        [](const PdeSystem& sys, int s, const std::vector<int>& sigma) {
          return sys.prolongEquation(s, MultiIndex(sigma));
        },
        py::arg("system"), py::arg("index"), py::arg("sigma"));
  m.def("builtin_system", &builtinSystem, py::arg("name"));
  m.def("parse_system_file", &parseSystemFile, py::arg("text"));
  m.def("render_system_file", &renderSystemFile, py::arg("system"));

  py::class_<AnsatzSpec>(m, "AnsatzSpec")
      .def(py::init([](int order, int degree, int xtDegree, long limit) {
             return AnsatzSpec{order, degree, xtDegree, limit};
           }),
           py::arg("order"), py::arg("degree"), py::arg("xt_degree") = 0,
           py::arg("limit") = 20000)
      .def_readwrite("order", &AnsatzSpec::maxOrder)
      .def_readwrite("degree", &AnsatzSpec::maxDegree)
      .def_readwrite("xt_degree", &AnsatzSpec::xtDegree);

  m.def("symmetry_residual", &symmetryResidual, py::arg("system"), py::arg("phi"));
  m.def("solve_determining", &solveDetermining, py::arg("system"), py::arg("spec"));

  py::enum_<SymmetryClass>(m, "SymmetryClass")
      .value("POINT", SymmetryClass::Point)
      .value("CONTACT", SymmetryClass::Contact)
      .value("HIGHER", SymmetryClass::Higher);
  m.def("classify", &classify, py::arg("phi"), py::arg("ctx"));

  py::class_<InvariantSystemReport>(m, "InvariantSystemReport")
      .def_readonly("equations", &InvariantSystemReport::equations)
      .def_readonly("constraints", &InvariantSystemReport::constraints)
      .def_readonly("residuals", &InvariantSystemReport::residuals)
      .def_readonly("is_symmetry", &InvariantSystemReport::isSymmetry);
  m.def("invariant_system", &invariantSystem, py::arg("system"), py::arg("phis"));

  m.def("formal_integrate", &formalIntegrate, py::arg("expr"), py::arg("i"));

  py::class_<RecursionOperator>(m, "RecursionOperator")
      .def_static("kdv", &RecursionOperator::kdv, py::arg("ctx"));
  m.def("parse_recursion_file", &parseRecursionFile, py::arg("text"), py::arg("ctx"));
  m.def("apply_recursion", &applyRecursion, py::arg("operator"), py::arg("phi"),
        py::arg("system"));

  m.def("adjoint_residual", &adjointResidual, py::arg("system"), py::arg("upsilon"));
  m.def("solve_adjoint_determining", &solveAdjointDetermining, py::arg("system"),
        py::arg("spec"));
  m.def("euler_operator", &eulerOperator, py::arg("density"), py::arg("ctx"));
  py::class_<SelfAdjointnessReport>(m, "SelfAdjointnessReport")
      .def_readonly("self_adjoint_free", &SelfAdjointnessReport::selfAdjointFree)
      .def_readonly("self_adjoint_on_manifold", &SelfAdjointnessReport::selfAdjointOnE);
  m.def("self_adjointness_check",
        [](const PdeSystem& sys, const JetExpr& lambda) {
          return selfAdjointnessCheck(sys, lambda);
        },
        py::arg("system"), py::arg("lambda_factor"));
  m.def("self_adjointness_check",
        [](const PdeSystem& sys) { return selfAdjointnessCheck(sys); }, py::arg("system"));
  m.def("verify_conserved_current", &verifyConservedCurrent, py::arg("system"),
        py::arg("current"));

  py::class_<VerticalField>(m, "VerticalField")
      .def(py::init([](std::vector<JetExpr> coeffs) { return VerticalField{std::move(coeffs)}; }),
           py::arg("coeffs"))
      .def_readonly("coeffs", &VerticalField::coeffs);

  py::class_<FlatnessResidual>(m, "FlatnessResidual")
      .def_readonly("i", &FlatnessResidual::i)
      .def_readonly("j", &FlatnessResidual::j)
      .def_readonly("fiber", &FlatnessResidual::fiber)
      .def_readonly("value", &FlatnessResidual::value);

  py::class_<Covering>(m, "Covering")
      .def(py::init<PdeSystem, std::vector<VerticalField>>(), py::arg("base"),
           py::arg("fields"))
      .def_property_readonly("base", &Covering::base)
      .def_property_readonly("context", &Covering::context);
  m.def("parse_covering_file", &parseCoveringFile, py::arg("text"));
  m.def("extended_total_derivative", &extendedTotalDerivative, py::arg("covering"),
        py::arg("expr"), py::arg("i"));
  m.def("check_flatness", &checkFlatness, py::arg("covering"));
  m.def("is_flat",
        [](const Covering& cov) { return allZero(checkFlatness(cov)); },
        py::arg("covering"));

  py::class_<NonlocalSymmetryReport::Compatibility>(m, "NonlocalCompatibility")
      .def_readonly("i", &NonlocalSymmetryReport::Compatibility::i)
      .def_readonly("fiber", &NonlocalSymmetryReport::Compatibility::fiber)
      .def_readonly("value", &NonlocalSymmetryReport::Compatibility::value);
  py::class_<NonlocalSymmetryReport>(m, "NonlocalSymmetryReport")
      .def_readonly("determining", &NonlocalSymmetryReport::determining)
      .def_readonly("compatibility", &NonlocalSymmetryReport::compatibility)
      .def_readonly("all_zero", &NonlocalSymmetryReport::allZero);
  m.def("nonlocal_symmetry_residual", &nonlocalSymmetryResidual, py::arg("covering"),
        py::arg("phi"), py::arg("psi"));

  py::enum_<WeForm>(m, "WeForm")
      .value("LITERAL", WeForm::Literal)
      .value("QUADRATIC_B", WeForm::QuadraticB);
  py::class_<WeAnsatzResult>(m, "WeAnsatzResult")
      .def_readonly("covering", &WeAnsatzResult::covering)
      .def_readonly("relation_residuals", &WeAnsatzResult::relationResiduals)
      .def_readonly("relations_hold", &WeAnsatzResult::relationsHold);
  m.def("we_ansatz", &weAnsatz, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
        py::arg("fiber_names"), py::arg("form"));

  m.attr("__version__") = "1.0.0";
}
