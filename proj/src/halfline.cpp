#include "skewext/halfline.hpp"

#include <stdexcept>

#include "skewext/boundary.hpp"

namespace skewext::halfline {

namespace {

mpz_class factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Rational power(const Rational& base, unsigned long e) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

const Rational& one() {
  static const Rational value(1);
  return value;
}

ExpPoly exp_minus_t() { return ExpPoly::term(0, 1, RationalComplex(1)); }

}  // namespace

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw Error(ErrorCode::InvalidInput, "not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

ExpPoly ExpPoly::term(unsigned degree, const Rational& rate, const RationalComplex& coef) {
  ExpPoly f;
  f.add_term(degree, rate, coef);
  return f;
}

void ExpPoly::add_term(unsigned degree, const Rational& rate, const RationalComplex& coef) {
  if (rate <= 0) {
    throw Error(ErrorCode::InvalidInput,
                "rate " + rate.get_str() + " is not positive; exp(-rate t) is not in L2(0, inf)");
  }
  if (degree > kMaxDegree) {
    throw Error(ErrorCode::CapExceeded, "degree " + std::to_string(degree) + " exceeds the cap");
  }
  if (rate.get_den() > kMaxRateDenominator) {
    throw Error(ErrorCode::CapExceeded, "rate denominator of " + rate.get_str() + " exceeds the cap");
  }
  if (coef.is_zero()) return;
  TermKey key{degree, rate};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coef);
    return;
  }
  it->second = it->second + coef;
  if (it->second.is_zero()) terms_.erase(it);
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly out = a;
  for (const auto& [key, c] : b.terms_) out.add_term(key.degree, key.rate, c);
  return out;
}

ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly out = a;
  for (const auto& [key, c] : b.terms_) out.add_term(key.degree, key.rate, -c);
  return out;
}

ExpPoly operator*(const RationalComplex& s, const ExpPoly& f) {
  ExpPoly out;
  if (s.is_zero()) return out;
  for (const auto& [key, c] : f.terms_) out.add_term(key.degree, key.rate, s * c);
  return out;
}

ExpPoly add(const ExpPoly& f, const ExpPoly& g) { return f + g; }
ExpPoly scale(const RationalComplex& s, const ExpPoly& f) { return s * f; }

ExpPoly derivative(const ExpPoly& f) {
  ExpPoly out;
  for (const auto& [key, c] : f.terms()) {
    if (key.degree > 0) out.add_term(key.degree - 1, key.rate, RationalComplex(key.degree) * c);
    out.add_term(key.degree, key.rate, RationalComplex(-key.rate) * c);
  }
  return out;
}

RationalComplex eval0(const ExpPoly& f) {
  RationalComplex out;
  for (const auto& [key, c] : f.terms()) {
    if (key.degree == 0) out = out + c;
  }
  return out;
}

RationalComplex inner(const ExpPoly& f, const ExpPoly& g) {
  RationalComplex out;
  for (const auto& [kf, cf] : f.terms()) {
    for (const auto& [kg, cg] : g.terms()) {
      // int_0^inf t^(a+b) exp(-(l+m) t) dt = (a+b)! / (l+m)^(a+b+1)
      const unsigned long deg = kf.degree + kg.degree;
      const Rational weight = Rational(factorial(deg)) / power(kf.rate + kg.rate, deg + 1);
      out = out + RationalComplex(weight) * cf * cg.conj();
    }
  }
  return out;
}

ExpPoly adjoint_apply(const ExpPoly& f) { return RationalComplex(-1) * derivative(f); }

GreenPair green_identity(const ExpPoly& f, const ExpPoly& g) {
  return GreenPair{inner(adjoint_apply(f), g) + inner(f, adjoint_apply(g)), eval0(f) * eval0(g).conj()};
}

KernelSolution solve_first_order_kernel(const Rational& alpha, const Rational& beta) {
  KernelSolution out;
  if (beta == 0) {
    if (alpha == 0) throw Error(ErrorCode::InvalidInput, "zero operator has no finite kernel basis");
    out.note = "multiplication by a nonzero constant is injective";
    return out;
  }
  // On t^k exp(-l t): alpha f + beta f' = (alpha - beta l) t^k exp(-l t) + beta k t^(k-1) exp(-l t).
  // For each rate the map is triangular in the degree with diagonal alpha - beta l,
  // so a nonzero kernel needs l = alpha / beta; then the top degree forces
  // every coefficient above degree 0 to vanish.
  out.characteristic_rate = alpha / beta;
  out.rate_admissible = out.characteristic_rate > 0;
  if (out.rate_admissible) {
    out.basis.push_back(ExpPoly::term(0, out.characteristic_rate, RationalComplex(1)));
    out.note = "solution exp(-" + out.characteristic_rate.get_str() + " t)";
  } else {
    out.note = "solution exists only with lambda = " + out.characteristic_rate.get_str() +
               " <= 0, outside L2(0, inf)";
  }
  return out;
}

DeficiencyExact deficiency_exact() {
  DeficiencyExact out;
  // (1 - H0*) f = f + f';  (1 + H0*) f = f - f'.
  out.plus = solve_first_order_kernel(1, 1);
  out.minus = solve_first_order_kernel(1, -1);
  out.g1_basis = out.plus.basis;
  out.g2_basis = out.minus.basis;
  return out;
}

ExpPoly minimal_domain_part(const ExpPoly& f) { return f - eval0(f) * exp_minus_t(); }

CanonicalBoundaryValue canonical_F(const ExpPoly& f) {
  const ExpPoly e = exp_minus_t();
  return CanonicalBoundaryValue{eval0(f), inner(e, e).re};
}

SystemIdentity canonical_system_identity(const ExpPoly& f, const ExpPoly& g) {
  const GreenPair green = green_identity(f, g);
  return SystemIdentity{green.lhs, unitary_form(canonical_F(f), canonical_F(g))};
}

void triplet_attempt() {
  const DeficiencyExact def = deficiency_exact();
  require_equal_boundary_dims(def.g1_dim(), def.g2_dim());
  throw std::logic_error("half-line deficiency indices unexpectedly agree");
}

ExistenceReport existence_report() {
  const DeficiencyExact def = deficiency_exact();
  ExistenceReport r;
  r.indices = {def.g1_dim(), def.g2_dim()};
  r.equal = r.indices.first == r.indices.second;
  // The canonical system always exists; its boundary spaces are the deficiency spaces.
  r.system_equal_dims = r.equal;
  r.has_sksa_extension = r.equal;
  try {
    triplet_attempt();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DimensionMismatch) throw;
    r.triplet_constructible = false;
  } catch (const std::logic_error&) {
    r.triplet_constructible = true;
  }
  return r;
}

ExpPoly canonical_extension_apply(const ExpPoly& f) {
  const RationalComplex trace = eval0(f);
  if (!trace.is_zero()) {
    throw Error(ErrorCode::TraceNotZero, "f(0) = " + trace.re.get_str() + " + " + trace.im.get_str() +
                                             "i; f is outside D(H)");
  }
  return adjoint_apply(f);
}

Rational dissipation(const ExpPoly& f) { return inner(canonical_extension_apply(f), f).re; }

ExpPoly resolvent_solve(const ExpPoly& f) {
  // u(t) = exp(-t) int_0^t exp(s) f(s) ds, term by term.
  ExpPoly u;
  for (const auto& [key, c] : f.terms()) {
    const unsigned k = key.degree;
    if (key.rate == one()) {
      u.add_term(k + 1, 1, RationalComplex(Rational(1) / (k + 1)) * c);
      continue;
    }
    const Rational mu = key.rate - 1;
    const Rational kfact(factorial(k));
    u.add_term(0, 1, RationalComplex(kfact / power(mu, k + 1)) * c);
    for (unsigned j = 0; j <= k; ++j) {
      const Rational w = kfact / (Rational(factorial(j)) * power(mu, k + 1 - j));
      u.add_term(j, key.rate, RationalComplex(-w) * c);
    }
  }
  return u;
}

InjectivityReport adjoint_injectivity_check(const ExpPoly& g) {
  InjectivityReport r;
  const ExpPoly one_minus_adj = g - derivative(g);
  r.value = inner(one_minus_adj, g).re;
  r.norm_sq = inner(g, g).re;
  r.inequality_holds = r.value >= r.norm_sq;
  r.equality = r.value == r.norm_sq;
  r.g1_component_zero = eval0(g).is_zero();
  return r;
}

}  // namespace skewext::halfline
