#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewext/extensions.hpp"
#include "skewext/halfline.hpp"

namespace py = pybind11;
using namespace skewext;

namespace {

namespace hl = skewext::halfline;

// Terms cross the boundary as (k, rate, re, im) with the rationals as "p/q"
// strings; the Python side converts to and from fractions.Fraction.
using TermTuple = std::tuple<unsigned, std::string, std::string, std::string>;

hl::ExpPoly expoly_from_terms(const std::vector<TermTuple>& terms) {
  hl::ExpPoly f;
  for (const auto& [k, rate, re, im] : terms) {
    f.add_term(k, hl::parse_rational(rate),
               hl::RationalComplex(hl::parse_rational(re), hl::parse_rational(im)));
  }
  return f;
}

std::vector<TermTuple> expoly_terms(const hl::ExpPoly& f) {
  std::vector<TermTuple> out;
  for (const auto& [key, c] : f.terms()) {
    out.emplace_back(key.degree, hl::format_rational(key.rate), hl::format_rational(c.re),
                     hl::format_rational(c.im));
  }
  return out;
}

std::pair<std::string, std::string> rc(const hl::RationalComplex& z) {
  return {hl::format_rational(z.re), hl::format_rational(z.im)};
}

py::dict existence_dict(const ExistenceReport& r) {
  py::dict d;
  d["indices"] = r.indices;
  d["equal"] = r.equal;
  d["has_sksa_extension"] = r.has_sksa_extension;
  d["triplet_constructible"] = r.triplet_constructible;
  d["system_equal_dims"] = r.system_equal_dims;
  d["consistent"] = r.consistent();
  return d;
}

}  // namespace

PYBIND11_MODULE(_skewext, m) {
  m.doc() = "Extension theory of skew-symmetric linear relations.";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(to_string(e.code())), std::string(e.what()));
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  py::class_<Subspace>(m, "Subspace")
      .def(py::init<std::size_t>(), py::arg("ambient_dim"))
      .def_property_readonly("ambient_dim", &Subspace::ambient_dim)
      .def_property_readonly("dim", &Subspace::dim)
      .def_property_readonly("basis", &Subspace::basis)
      .def("projector", &Subspace::projector)
      .def("__repr__", [](const Subspace& s) {
        return "<Subspace dim=" + std::to_string(s.dim()) + " of C^" + std::to_string(s.ambient_dim()) + ">";
      });

  m.def("span", py::overload_cast<const Matrix&, double>(&span), py::arg("vectors"),
        py::arg("tol") = kRankTol, "Span of the columns.");
  m.def("orthocomplement", &orthocomplement);
  m.def("intersect", &intersect, py::arg("s"), py::arg("t"), py::arg("tol") = kRankTol);
  m.def("subspace_sum", &sum, py::arg("s"), py::arg("t"), py::arg("tol") = kRankTol);
  m.def("subspace_equal", &equal, py::arg("s"), py::arg("t"), py::arg("tol") = kOrthTol);
  m.def("distance", &distance);

  py::class_<Relation>(m, "Relation")
      .def_static("from_generators", &Relation::from_generators, py::arg("generators"),
                  py::arg("tol") = kRankTol)
      .def_static("zero", &Relation::zero)
      .def_static("full", &Relation::full)
      .def_property_readonly("n", &Relation::space_dim)
      .def_property_readonly("graph", &Relation::graph)
      .def_property_readonly("graph_dim", &Relation::graph_dim)
      .def("__repr__", [](const Relation& r) {
        return "<Relation on C^" + std::to_string(r.space_dim()) + ", graph dim " +
               std::to_string(r.graph_dim()) + ">";
      });

  m.def("from_operator", &from_operator, py::arg("a"), py::arg("domain"));
  m.def("adjoint", &adjoint);
  m.def("neg_adjoint", &neg_adjoint);
  m.def("negate", &negate);
  m.def("one_minus", &one_minus);
  m.def("is_skew_symmetric", &is_skew_symmetric, py::arg("t"), py::arg("tol") = kOrthTol);
  m.def("is_skew_self_adjoint", &is_skew_self_adjoint, py::arg("t"), py::arg("tol") = kOrthTol);
  m.def("is_dissipative", &is_dissipative, py::arg("t"), py::arg("tol") = kOrthTol);
  m.def("is_maximal_dissipative", &is_maximal_dissipative, py::arg("h"), py::arg("tol") = kOrthTol);
  m.def("extends", &extends, py::arg("t"), py::arg("s"), py::arg("tol") = kOrthTol);
  m.def(
      "deficiency_indices",
      [](const Relation& t, double tol) { return deficiency(t, tol).indices(); }, py::arg("t"),
      py::arg("tol") = kOrthTol);
  m.def("random_skew_symmetric", &random_skew_symmetric, py::arg("n"), py::arg("k"), py::arg("seed"));
  m.def("random_relation", &random_relation, py::arg("n"), py::arg("k"), py::arg("seed"));
  m.def("random_unitary", &random_unitary, py::arg("m"), py::arg("seed"));
  m.def("random_contraction", &random_contraction, py::arg("m"), py::arg("norm"), py::arg("seed"));

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("surjective", &VerificationReport::surjective)
      .def_readonly("identity_holds", &VerificationReport::identity_holds)
      .def_readonly("max_residual", &VerificationReport::max_residual)
      .def_readonly("tolerance", &VerificationReport::tolerance)
      .def_property_readonly("valid", &VerificationReport::valid);

  py::class_<BoundarySystem>(m, "BoundarySystem")
      .def_readonly("base", &BoundarySystem::base)
      .def_readonly("adjoint_graph", &BoundarySystem::adjoint_graph)
      .def_readonly("g1", &BoundarySystem::g1)
      .def_readonly("g2", &BoundarySystem::g2)
      .def_property_readonly("f1", &BoundarySystem::f1)
      .def_property_readonly("f2", &BoundarySystem::f2);

  py::class_<BoundaryTriplet>(m, "BoundaryTriplet")
      .def_readonly("base", &BoundaryTriplet::base)
      .def_readonly("adjoint_graph", &BoundaryTriplet::adjoint_graph)
      .def_readonly("g", &BoundaryTriplet::g)
      .def_readonly("gamma1", &BoundaryTriplet::gamma1)
      .def_readonly("gamma2", &BoundaryTriplet::gamma2);

  m.def("canonical_system", &canonical_system, py::arg("h0"), py::arg("tol") = kOrthTol);
  m.def("verify_system", &verify_system, py::arg("s"), py::arg("tol") = kOrthTol);
  m.def("verify_triplet", &verify_triplet, py::arg("t"), py::arg("tol") = kOrthTol);
  m.def("system_to_triplet", &system_to_triplet, py::arg("s"), py::arg("l0"), py::arg("tol") = kOrthTol);
  m.def("triplet_to_system", &triplet_to_system, py::arg("t"), py::arg("tol") = kOrthTol);

  m.def("theorem_a_extension", &theorem_a_extension, py::arg("s"), py::arg("l"), py::arg("tol") = kOrthTol);
  m.def("theorem_a_readoff", &theorem_a_readoff, py::arg("s"), py::arg("h"), py::arg("tol") = kOrthTol);
  m.def("theorem_b_extension", &theorem_b_extension, py::arg("t"), py::arg("l"), py::arg("tol") = kOrthTol);
  m.def("psibar_bridge_check", &psibar_bridge_check, py::arg("s"), py::arg("l0"), py::arg("l"),
        py::arg("tol") = kOrthTol);
  m.def("phi_of", &phi_of, py::arg("t"), py::arg("h"), py::arg("tol") = kOrthTol);
  m.def("phi_inverse", &phi_inverse, py::arg("t"), py::arg("k"), py::arg("tol") = kOrthTol);
  m.def(
      "existence_report",
      [](const Relation& h0, double tol) { return existence_dict(existence_report(h0, tol)); },
      py::arg("h0"), py::arg("tol") = kOrthTol);
  m.def("canonical_max_dissipative", &canonical_max_dissipative, py::arg("h0"), py::arg("tol") = kOrthTol);
  m.def("adjoint_formula_check", &adjoint_formula_check, py::arg("h0"), py::arg("tol") = kOrthTol);

  auto h = m.def_submodule("halfline", "Exact model of d/dt on L2(0, inf).");
  h.def("inner", [](const std::vector<TermTuple>& f, const std::vector<TermTuple>& g) {
    return rc(hl::inner(expoly_from_terms(f), expoly_from_terms(g)));
  });
  h.def("green_identity", [](const std::vector<TermTuple>& f, const std::vector<TermTuple>& g) {
    const hl::GreenPair p = hl::green_identity(expoly_from_terms(f), expoly_from_terms(g));
    return std::make_pair(rc(p.lhs), rc(p.rhs));
  });
  h.def("derivative", [](const std::vector<TermTuple>& f) {
    return expoly_terms(hl::derivative(expoly_from_terms(f)));
  });
  h.def("resolvent_solve", [](const std::vector<TermTuple>& f) {
    return expoly_terms(hl::resolvent_solve(expoly_from_terms(f)));
  });
  h.def("canonical_extension_apply", [](const std::vector<TermTuple>& f) {
    return expoly_terms(hl::canonical_extension_apply(expoly_from_terms(f)));
  });
  h.def("deficiency", [] {
    const hl::DeficiencyExact d = hl::deficiency_exact();
    std::vector<std::vector<TermTuple>> g1, g2;
    for (const auto& b : d.g1_basis) g1.push_back(expoly_terms(b));
    for (const auto& b : d.g2_basis) g2.push_back(expoly_terms(b));
    return std::make_pair(g1, g2);
  });
  h.def("triplet_attempt", [] { hl::triplet_attempt(); });
  h.def("existence_report", [] { return existence_dict(hl::existence_report()); });
}
