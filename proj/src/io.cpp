#include "skewext/io.hpp"

#include <fstream>

namespace skewext::io {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const json& require_field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) invalid(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::string rational_field(const json& j, const char* name) {
  const json& v = require_field(j, name);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  invalid(std::string("field '") + name + "' must be a \"p/q\" string");
}

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    invalid("complex numbers are [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) invalid("vectors are lists of [re, im] pairs");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i).transpose()));
  return out;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) invalid("matrices are lists of rows");
  if (j.empty()) return Matrix(0, 0);
  const auto cols = j[0].is_array() ? j[0].size() : 0;
  Matrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Vector row = vector_from_json(j[i]);
    if (static_cast<std::size_t>(row.size()) != cols) invalid("matrix rows have unequal lengths");
    m.row(static_cast<Eigen::Index>(i)) = row.transpose();
  }
  return m;
}

json subspace_to_json(const Subspace& s) {
  json out = json::array();
  for (Eigen::Index j = 0; j < s.basis().cols(); ++j) out.push_back(vector_to_json(s.basis().col(j)));
  return out;
}

json relation_to_json(const Relation& r) {
  return json{{"n", r.space_dim()}, {"graph_generators", subspace_to_json(r.graph())}};
}

Relation relation_from_json(const json& j) {
  const json& nj = require_field(j, "n");
  if (!nj.is_number_integer() || nj.get<long long>() < 1) invalid("'n' must be a positive integer");
  const auto n = nj.get<std::size_t>();
  const json& gens = require_field(j, "graph_generators");
  if (!gens.is_array()) invalid("'graph_generators' must be a list");
  Matrix m(static_cast<Eigen::Index>(2 * n), static_cast<Eigen::Index>(gens.size()));
  for (std::size_t c = 0; c < gens.size(); ++c) {
    const Vector v = vector_from_json(gens[c]);
    if (static_cast<std::size_t>(v.size()) != 2 * n) {
      invalid("graph generator " + std::to_string(c) + " has length " + std::to_string(v.size()) +
              ", expected " + std::to_string(2 * n));
    }
    m.col(static_cast<Eigen::Index>(c)) = v;
  }
  return Relation::from_generators(m);
}

json system_to_json(const BoundarySystem& s) {
  return json{{"base", relation_to_json(s.base)},
              {"adjoint_graph_basis", subspace_to_json(s.adjoint_graph)},
              {"g1_basis", subspace_to_json(s.g1)},
              {"g2_basis", subspace_to_json(s.g2)},
              {"F1", matrix_to_json(s.f1())},
              {"F2", matrix_to_json(s.f2())}};
}

json triplet_to_json(const BoundaryTriplet& t) {
  return json{{"base", relation_to_json(t.base)},
              {"adjoint_graph_basis", subspace_to_json(t.adjoint_graph)},
              {"g_basis", subspace_to_json(t.g)},
              {"Gamma1", matrix_to_json(t.gamma1)},
              {"Gamma2", matrix_to_json(t.gamma2)}};
}

json report_to_json(const VerificationReport& r) {
  return json{{"surjective", r.surjective},
              {"identity_holds", r.identity_holds},
              {"max_residual", r.max_residual},
              {"tolerance", r.tolerance}};
}

json param_to_json(const ExtensionParam& p) {
  return json{{"kind", std::string(to_string(p.kind()))}, {"matrix", matrix_to_json(p.matrix())}};
}

ExtensionParam param_from_json(const json& j) {
  const json& kind = require_field(j, "kind");
  if (!kind.is_string()) invalid("'kind' must be a string");
  return ExtensionParam(parse_param_kind(kind.get<std::string>()), matrix_from_json(require_field(j, "matrix")));
}

json rational_complex_to_json(const halfline::RationalComplex& z) {
  return json{{"re", halfline::format_rational(z.re)}, {"im", halfline::format_rational(z.im)}};
}

json expoly_to_json(const halfline::ExpPoly& f) {
  json out = json::array();
  for (const auto& [key, c] : f.terms()) {
    out.push_back(json{{"k", key.degree},
                       {"lambda", halfline::format_rational(key.rate)},
                       {"re", halfline::format_rational(c.re)},
                       {"im", halfline::format_rational(c.im)}});
  }
  return out;
}

halfline::ExpPoly expoly_from_json(const json& j) {
  if (!j.is_array()) invalid("exponential polynomials are lists of term records");
  halfline::ExpPoly f;
  for (const json& t : j) {
    const json& k = require_field(t, "k");
    if (!k.is_number_integer() || k.get<long long>() < 0) invalid("'k' must be a nonnegative integer");
    const auto degree = k.get<long long>();
    if (degree > static_cast<long long>(halfline::kMaxDegree)) {
      throw Error(ErrorCode::CapExceeded, "degree " + std::to_string(degree) + " exceeds the cap");
    }
    const halfline::Rational rate = halfline::parse_rational(rational_field(t, "lambda"));
    halfline::RationalComplex c(halfline::parse_rational(rational_field(t, "re")),
                                t.contains("im") ? halfline::parse_rational(rational_field(t, "im"))
                                                 : halfline::Rational(0));
    f.add_term(static_cast<unsigned>(degree), rate, c);
  }
  return f;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    invalid("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace skewext::io
