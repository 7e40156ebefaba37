// skewext: command-line front end. Every subcommand prints one JSON report
// {command, input_digest, tolerance, result, status} and exits 0 (pass),
// 1 (fail) or 2 (error / invalid input).

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "skewext/extensions.hpp"
#include "skewext/halfline.hpp"
#include "skewext/io.hpp"

using namespace skewext;
using skewext::io::json;

namespace {

struct Options {
  std::string input;
  std::string param;
  std::string l0;
  std::string out;
  std::string format = "json";
  double tol = 1e-9;
  std::uint64_t seed = 0;

  std::string mode = "A";
  std::string direction = "s2t";
  std::string check;
  std::size_t n = 2;
  std::size_t k = 1;
  bool skew = true;
  std::size_t sweep = 0;
  std::size_t n_max = 6;
  unsigned jobs = 0;
};

// Raised for malformed files and arguments; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Digest {
 public:
  void add(const std::string& bytes) {
    for (unsigned char c : bytes) {
      h_ ^= c;
      h_ *= 0x100000001b3ULL;
    }
  }
  std::string hex() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h_));
    return buf;
  }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_file(const std::string& path, Digest& digest) {
  const std::string text = slurp(path);
  digest.add(text);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, "'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string need(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string(flag) + " is required");
  return value;
}

// A matrix file is either a bare row list or an object with a "matrix" field.
Matrix matrix_file(const json& j) {
  if (j.is_object() && j.contains("matrix")) return io::matrix_from_json(j.at("matrix"));
  return io::matrix_from_json(j);
}

Matrix identity(std::size_t p) {
  const auto i = static_cast<Eigen::Index>(p);
  return Matrix::Identity(i, i);
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

json existence_to_json(const ExistenceReport& r) {
  return json{{"indices", {r.indices.first, r.indices.second}},
              {"equal_indices", r.equal},
              {"has_skew_self_adjoint_extension", r.has_sksa_extension},
              {"triplet_constructible", r.triplet_constructible},
              {"system_with_equal_dims", r.system_equal_dims},
              {"all_equivalent", r.consistent()}};
}

struct Outcome {
  json result;
  bool pass = true;
};

Outcome cmd_analyze(const Options& o, Digest& d) {
  const Relation h0 = io::relation_from_json(parse_file(need(o.input, "--input"), d));
  Outcome out;
  out.result["n"] = h0.space_dim();
  out.result["graph_dim"] = h0.graph_dim();
  const bool skew = is_skew_symmetric(h0, o.tol);
  out.result["skew_symmetric"] = skew;
  out.result["skew_self_adjoint"] = is_skew_self_adjoint(h0, o.tol);
  out.result["dissipative"] = is_dissipative(h0, o.tol);
  if (!skew) throw Error(ErrorCode::NotSkewSymmetric, "not skew-symmetric");
  const ExistenceReport rep = existence_report(h0, o.tol);
  out.result["existence"] = existence_to_json(rep);
  out.pass = rep.consistent();
  return out;
}

Outcome cmd_canonical(const Options& o, Digest& d) {
  const Relation h0 = io::relation_from_json(parse_file(need(o.input, "--input"), d));
  const BoundarySystem s = canonical_system(h0, o.tol);
  const VerificationReport rep = verify_system(s, o.tol);
  return {json{{"indices", {s.g1.dim(), s.g2.dim()}},
               {"system", io::system_to_json(s)},
               {"verification", io::report_to_json(rep)}},
          rep.valid()};
}

Outcome cmd_extend(const Options& o, Digest& d) {
  const Relation h0 = io::relation_from_json(parse_file(need(o.input, "--input"), d));
  const ExtensionParam param = io::param_from_json(parse_file(need(o.param, "--param"), d));
  const BoundarySystem s = canonical_system(h0, o.tol);
  Outcome out;
  out.result["mode"] = o.mode;
  out.result["param"] = io::param_to_json(param);

  const auto require_kind = [&](ParamKind kind) {
    if (param.kind() != kind) {
      throw Error(ErrorCode::InvalidInput, "mode " + o.mode + " needs a " +
                                               std::string(to_string(kind)) + " parameter");
    }
  };
  const auto triplet = [&] {
    Matrix l0 = identity(s.g1.dim());
    if (!o.l0.empty()) l0 = matrix_file(parse_file(o.l0, d));
    return system_to_triplet(s, l0, o.tol);
  };

  if (o.mode == "A") {
    require_kind(ParamKind::UnitaryA);
    const Relation h = theorem_a_extension(s, param.matrix(), o.tol);
    const bool sksa = is_skew_self_adjoint(h, o.tol);
    const bool contains = extends(h, negate(h0), o.tol);
    const Matrix back = theorem_a_readoff(s, h, o.tol);
    const double err = max_abs(back - param.matrix());
    out.result["extension"] = io::relation_to_json(h);
    out.result["skew_self_adjoint"] = sksa;
    out.result["extends_minus_base"] = contains;
    out.result["readoff_error"] = err;
    out.pass = sksa && contains && err <= 1e-8;
  } else if (o.mode == "B") {
    require_kind(ParamKind::UnitaryB);
    const BoundaryTriplet t = triplet();
    const Relation h = theorem_b_extension(t, param.matrix(), o.tol);
    const bool sksa = is_skew_self_adjoint(h, o.tol);
    const bool contains = extends(h, h0, o.tol);
    out.result["extension"] = io::relation_to_json(h);
    out.result["skew_self_adjoint"] = sksa;
    out.result["extends_base"] = contains;
    out.pass = sksa && contains;
  } else if (o.mode == "phi") {
    require_kind(ParamKind::Contraction);
    const BoundaryTriplet t = triplet();
    const Relation h = phi_inverse(t, param.matrix(), o.tol);
    const bool maximal = is_maximal_dissipative(h, o.tol);
    const bool contains = extends(h, h0, o.tol);
    const Matrix back = phi_of(t, h, o.tol);
    const double err = max_abs(back - param.matrix());
    const bool sksa = is_skew_self_adjoint(h, 1e-8);
    const bool unitary = is_unitary(param.matrix());
    out.result["extension"] = io::relation_to_json(h);
    out.result["maximal_dissipative"] = maximal;
    out.result["extends_base"] = contains;
    out.result["phi_round_trip_error"] = err;
    out.result["skew_self_adjoint"] = sksa;
    out.result["param_unitary"] = unitary;
    out.pass = maximal && contains && err <= 1e-8 && sksa == unitary;
  } else {
    throw UsageError("--mode must be A, B or phi");
  }
  return out;
}

Outcome cmd_convert(const Options& o, Digest& d) {
  const Relation h0 = io::relation_from_json(parse_file(need(o.input, "--input"), d));
  const BoundarySystem s = canonical_system(h0, o.tol);
  Matrix l0 = identity(s.g1.dim());
  if (!o.l0.empty()) l0 = matrix_file(parse_file(o.l0, d));
  const BoundaryTriplet t = system_to_triplet(s, l0, o.tol);
  const VerificationReport trep = verify_triplet(t, o.tol);
  Outcome out;
  out.result["direction"] = o.direction;
  if (o.direction == "s2t") {
    out.result["triplet"] = io::triplet_to_json(t);
    out.result["verification"] = io::report_to_json(trep);
    out.pass = trep.valid();
  } else if (o.direction == "t2s") {
    const BoundarySystem s2 = triplet_to_system(t, o.tol);
    const VerificationReport srep = verify_system(s2, o.tol);
    const BoundaryTriplet back = system_to_triplet(s2, identity(s2.g1.dim()), o.tol);
    const double err = std::max(max_abs(back.gamma1 - t.gamma1), max_abs(back.gamma2 - t.gamma2));
    out.result["system"] = io::system_to_json(s2);
    out.result["verification"] = io::report_to_json(srep);
    out.result["round_trip_error"] = err;
    out.pass = trep.valid() && srep.valid() && err <= 1e-10;
  } else {
    throw UsageError("--direction must be t2s or s2t");
  }
  return out;
}

Outcome cmd_generate(const Options& o, Digest& d) {
  d.add(std::to_string(o.n) + "/" + std::to_string(o.k) + "/" + std::to_string(o.seed) +
        (o.skew ? "/skew" : "/any"));
  const Relation r = o.skew ? random_skew_symmetric(o.n, o.k, o.seed) : random_relation(o.n, o.k, o.seed);
  return {io::relation_to_json(r), !o.skew || is_skew_symmetric(r, o.tol)};
}

// Half-line function files: a term list (f, with g = f) or {"f": [...], "g": [...]}.
std::pair<halfline::ExpPoly, halfline::ExpPoly> function_pair(const Options& o, Digest& d) {
  const json j = parse_file(need(o.input, "--input"), d);
  if (j.is_object()) {
    const auto f = io::expoly_from_json(j.value("f", json::array()));
    return {f, j.contains("g") ? io::expoly_from_json(j.at("g")) : f};
  }
  const auto f = io::expoly_from_json(j);
  return {f, f};
}

Outcome cmd_halfline(const Options& o, Digest& d) {
  using namespace skewext::halfline;
  Outcome out;
  out.result["check"] = o.check;
  if (o.check == "green") {
    const auto [f, g] = function_pair(o, d);
    const GreenPair p = green_identity(f, g);
    const SystemIdentity s = canonical_system_identity(f, g);
    out.result["lhs"] = io::rational_complex_to_json(p.lhs);
    out.result["rhs"] = io::rational_complex_to_json(p.rhs);
    out.result["boundary_form"] = io::rational_complex_to_json(s.unitary_side);
    out.pass = p.exact() && s.exact();
  } else if (o.check == "deficiency") {
    const DeficiencyExact def = deficiency_exact();
    json g1 = json::array();
    for (const auto& b : def.g1_basis) g1.push_back(io::expoly_to_json(b));
    json g2 = json::array();
    for (const auto& b : def.g2_basis) g2.push_back(io::expoly_to_json(b));
    out.result["indices"] = {def.g1_dim(), def.g2_dim()};
    out.result["g1_basis"] = g1;
    out.result["g2_basis"] = g2;
    out.result["g1_note"] = def.plus.note;
    out.result["g2_note"] = def.minus.note;
    out.result["existence"] = existence_to_json(halfline::existence_report());
    out.pass = def.g1_dim() == 1 && def.g2_dim() == 0;
  } else if (o.check == "triplet") {
    // The expected outcome is a DimensionMismatch: no triplet exists.
    try {
      triplet_attempt();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DimensionMismatch) throw;
      out.result["error"] = std::string(to_string(e.code()));
      out.result["message"] = e.what();
      if (e.indices()) out.result["indices"] = {e.indices()->first, e.indices()->second};
      out.result["triplet_exists"] = false;
      out.pass = true;
    }
  } else if (o.check == "dissipative") {
    const auto [f, g] = function_pair(o, d);
    const ExpPoly hf = canonical_extension_apply(f);
    const Rational value = dissipation(f);
    const InjectivityReport inj = adjoint_injectivity_check(f);
    out.result["Hf"] = io::expoly_to_json(hf);
    out.result["re_Hf_f"] = format_rational(value);
    out.result["re_one_minus_adjoint"] = format_rational(inj.value);
    out.result["norm_sq"] = format_rational(inj.norm_sq);
    out.pass = value <= 0 && inj.inequality_holds;
  } else if (o.check == "resolvent") {
    const auto [f, g] = function_pair(o, d);
    const ExpPoly u = resolvent_solve(f);
    const bool trace_zero = eval0(u).is_zero();
    const bool solves = trace_zero && u - canonical_extension_apply(u) == f;
    out.result["u"] = io::expoly_to_json(u);
    out.result["u_trace_zero"] = trace_zero;
    out.result["solves"] = solves;
    out.pass = solves;
  } else {
    throw UsageError("--check must be green, deficiency, triplet, dissipative or resolvent");
  }
  return out;
}

struct SweepRow {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  double system_residual = 0.0;
  double readoff_error = 0.0;
  double bridge_distance = 0.0;
  double phi_error = 0.0;
  bool existence_consistent = true;
  bool dissipative_ok = true;
  std::string error;

  bool pass(double tol) const {
    return error.empty() && system_residual <= tol && readoff_error <= 1e-8 &&
           bridge_distance <= tol && phi_error <= 1e-8 && existence_consistent && dissipative_ok;
  }
};

SweepRow sweep_one(std::uint64_t seed, std::size_t n_max, double tol) {
  SweepRow row;
  row.seed = seed;
  row.n = 1 + seed % n_max;
  row.k = (seed / n_max) % row.n;
  try {
    const Relation h0 = random_skew_symmetric(row.n, row.k, seed);
    const BoundarySystem s = canonical_system(h0, tol);
    row.system_residual = verify_system(s, tol).max_residual;
    const auto p = s.g1.dim();
    const Matrix l = random_unitary(p, seed ^ 0x5bd1e995);
    const Matrix l0 = random_unitary(p, seed ^ 0x27d4eb2d);
    row.readoff_error = max_abs(theorem_a_readoff(s, theorem_a_extension(s, l, tol), tol) - l);
    row.bridge_distance = distance(psibar(s, l, tol).graph(), neg_psi_of_pullback(s, l0, l, tol).graph());
    const BoundaryTriplet t = system_to_triplet(s, l0, tol);
    const Matrix k = random_contraction(p, 0.5, seed ^ 0x165667b1);
    row.phi_error = max_abs(phi_of(t, phi_inverse(t, k, tol), tol) - k);
    row.existence_consistent = existence_report(h0, tol).consistent();
    row.dissipative_ok = is_maximal_dissipative(canonical_max_dissipative(h0, tol), tol) &&
                         adjoint_formula_check(h0, tol);
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

Outcome cmd_sweep(const Options& o, Digest& d) {
  if (o.sweep == 0) throw UsageError("--sweep COUNT must be positive");
  if (o.n_max == 0) throw UsageError("--n-max must be positive");
  d.add(std::to_string(o.sweep) + "/" + std::to_string(o.seed) + "/" + std::to_string(o.n_max));
  const unsigned jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());

  // Instances are independent; each worker owns a strided slice and results
  // land in seed order so the report does not depend on scheduling.
  std::vector<SweepRow> rows(o.sweep);
  std::vector<std::future<void>> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < o.sweep; i += jobs) rows[i] = sweep_one(o.seed + i, o.n_max, o.tol);
    }));
  }
  for (auto& w : workers) w.get();

  Outcome out;
  json failures = json::array();
  double worst_residual = 0.0;
  double worst_readoff = 0.0;
  double worst_bridge = 0.0;
  double worst_phi = 0.0;
  for (const auto& r : rows) {
    worst_residual = std::max(worst_residual, r.system_residual);
    worst_readoff = std::max(worst_readoff, r.readoff_error);
    worst_bridge = std::max(worst_bridge, r.bridge_distance);
    worst_phi = std::max(worst_phi, r.phi_error);
    if (!r.pass(o.tol)) {
      failures.push_back(json{{"seed", r.seed}, {"n", r.n}, {"k", r.k}, {"error", r.error}});
    }
  }
  out.result = json{{"count", o.sweep},
                    {"max_system_residual", worst_residual},
                    {"max_readoff_error", worst_readoff},
                    {"max_bridge_distance", worst_bridge},
                    {"max_phi_round_trip_error", worst_phi},
                    {"failures", failures}};
  out.pass = failures.empty();
  return out;
}

int emit(const json& report, const Options& o) {
  const std::string text = report.dump(2) + "\n";
  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write '" << o.out << "'\n";
      return 2;
    }
    f << text;
  }
  std::cout << text;
  const std::string status = report.at("status");
  return status == "pass" ? 0 : status == "fail" ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extension theory of skew-symmetric relations: boundary systems, triplets, extensions."};
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "verification tolerance")->capture_default_str();
    sub->add_option("--out", o.out, "also write the report to this path");
    sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json"}))->capture_default_str();
  };
  const auto with_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("--input", o.input, what);
    common(sub);
    return sub;
  };

  with_input(app.add_subcommand("analyze", "skew-symmetry, deficiency indices, existence"), "relation file");
  with_input(app.add_subcommand("canonical", "canonical boundary system"), "relation file");
  auto* extend = with_input(app.add_subcommand("extend", "build an extension from a parameter"), "relation file");
  extend->add_option("--param", o.param, "parameter file");
  extend->add_option("--mode", o.mode, "A, B or phi")->check(CLI::IsMember({"A", "B", "phi"}))->capture_default_str();
  extend->add_option("--l0", o.l0, "unitary G1 -> G2 used to build the triplet (default identity)");
  auto* convert = with_input(app.add_subcommand("convert", "system <-> triplet"), "relation file");
  convert->add_option("--direction", o.direction, "s2t or t2s")->check(CLI::IsMember({"s2t", "t2s"}))->capture_default_str();
  convert->add_option("--l0", o.l0, "unitary G1 -> G2 (default identity)");
  auto* generate = app.add_subcommand("generate", "random relation");
  generate->add_option("--n", o.n, "space dimension")->capture_default_str();
  generate->add_option("--k", o.k, "graph dimension")->capture_default_str();
  generate->add_option("--seed", o.seed, "random seed")->capture_default_str();
  generate->add_flag("!--any", o.skew, "generic relation instead of a skew-symmetric one");
  common(generate);
  auto* hl = with_input(app.add_subcommand("halfline", "exact half-line model"), "function file");
  hl->add_option("--check", o.check, "green, deficiency, triplet, dissipative or resolvent")
      ->required()
      ->check(CLI::IsMember({"green", "deficiency", "triplet", "dissipative", "resolvent"}));
  auto* sweep = app.add_subcommand("sweep", "property sweep over random instances");
  sweep->add_option("--sweep", o.sweep, "number of instances")->required();
  sweep->add_option("--seed", o.seed, "first seed")->capture_default_str();
  sweep->add_option("--n-max", o.n_max, "largest space dimension")->capture_default_str();
  sweep->add_option("--jobs", o.jobs, "worker threads (default: hardware)");
  common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  std::string echo = sub->get_name();
  for (int i = 2; i < argc; ++i) echo += std::string(" ") + argv[i];

  Digest digest;
  if (sub->get_name() == "generate") {
    // The relation file itself, ready for --input.
    try {
      const json rel = cmd_generate(o, digest).result;
      const std::string text = rel.dump(2) + "\n";
      if (!o.out.empty()) std::ofstream(o.out, std::ios::binary) << text;
      std::cout << text;
      return 0;
    } catch (const Error& e) {
      std::cerr << to_string(e.code()) << ": " << e.what() << "\n";
      return 2;
    }
  }

  json report{{"command", echo}, {"tolerance", o.tol}};
  try {
    Outcome out;
    const std::string name = sub->get_name();
    if (name == "analyze") out = cmd_analyze(o, digest);
    else if (name == "canonical") out = cmd_canonical(o, digest);
    else if (name == "extend") out = cmd_extend(o, digest);
    else if (name == "convert") out = cmd_convert(o, digest);
    else if (name == "halfline") out = cmd_halfline(o, digest);
    else out = cmd_sweep(o, digest);
    report["result"] = out.result;
    report["status"] = out.pass ? "pass" : "fail";
  } catch (const Error& e) {
    report["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    report["status"] = "error";
  } catch (const UsageError& e) {
    report["error"] = {{"code", "Usage"}, {"message", e.what()}};
    report["status"] = "error";
  } catch (const nlohmann::json::exception& e) {
    report["error"] = {{"code", "InvalidInput"}, {"message", e.what()}};
    report["status"] = "error";
  }
  report["input_digest"] = digest.hex();
  return emit(report, o);
}
