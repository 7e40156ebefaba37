#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "skewext/error.hpp"
#include "skewext/extensions.hpp"

// Exact model of d/dt on L2(0, inf) over the exponential-polynomial family
// sum c t^k exp(-lambda t), lambda > 0 rational. H0 = d/dt on trace-zero
// members, H0* = -d/dt on the whole family.
namespace skewext::halfline {

using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

struct RationalComplex {
  Rational re;
  Rational im;

  RationalComplex() = default;
  RationalComplex(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  RationalComplex conj() const { return {re, -im}; }
  Rational norm_sq() const { return re * re + im * im; }

  friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend RationalComplex operator-(const RationalComplex& a) { return {-a.re, -a.im}; }
  friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline constexpr unsigned kMaxDegree = 32;
inline constexpr unsigned long kMaxRateDenominator = 1'000'000;

struct TermKey {
  unsigned degree = 0;
  Rational rate;

  friend bool operator<(const TermKey& a, const TermKey& b) {
    if (a.rate != b.rate) return a.rate < b.rate;
    return a.degree < b.degree;
  }
  friend bool operator==(const TermKey& a, const TermKey& b) {
    return a.degree == b.degree && a.rate == b.rate;
  }
};

// Finite sum of c t^k exp(-lambda t). Zero coefficients are never stored;
// keys are ordered by (rate, degree).
class ExpPoly {
 public:
  using Terms = std::map<TermKey, RationalComplex>;

  ExpPoly() = default;

  // c t^degree exp(-rate t). Throws InvalidInput for rate <= 0 and CapExceeded
  // beyond the degree and rate-denominator caps.
  static ExpPoly term(unsigned degree, const Rational& rate, const RationalComplex& coef);

  // Accumulates into the term with the same key.
  void add_term(unsigned degree, const Rational& rate, const RationalComplex& coef);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(const RationalComplex& s, const ExpPoly& f);
  friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

ExpPoly add(const ExpPoly& f, const ExpPoly& g);
ExpPoly scale(const RationalComplex& s, const ExpPoly& f);
ExpPoly derivative(const ExpPoly& f);
// Boundary trace f(0).
RationalComplex eval0(const ExpPoly& f);
// L2(0, inf) inner product, conjugate-linear in g.
RationalComplex inner(const ExpPoly& f, const ExpPoly& g);

// H0* f = -f'.
ExpPoly adjoint_apply(const ExpPoly& f);

struct GreenPair {
  RationalComplex lhs;  // <H0* f, g> + <f, H0* g>
  RationalComplex rhs;  // f(0) conj(g(0))
  bool exact() const { return lhs == rhs; }
};
GreenPair green_identity(const ExpPoly& f, const ExpPoly& g);

// Kernel of f -> alpha f + beta f' inside the family. Members of the kernel
// must have rate alpha / beta, which is only admissible when positive.
struct KernelSolution {
  std::vector<ExpPoly> basis;
  Rational characteristic_rate;
  bool rate_admissible = false;
  std::string note;
};
KernelSolution solve_first_order_kernel(const Rational& alpha, const Rational& beta);

struct DeficiencyExact {
  std::vector<ExpPoly> g1_basis;  // ker(1 - H0*)
  std::vector<ExpPoly> g2_basis;  // ker(1 + H0*)
  KernelSolution plus;
  KernelSolution minus;
  std::size_t g1_dim() const { return g1_basis.size(); }
  std::size_t g2_dim() const { return g2_basis.size(); }
};
DeficiencyExact deficiency_exact();

// Canonical boundary value of f. f = f0 + c exp(-t) with f0(0) = 0, so c = f(0)
// and F1 = sqrt2 * c * ||exp(-t)||. The irrational factors are kept symbolic:
// only c and ||exp(-t)||^2 are stored. F2 lives in the zero space.
struct CanonicalBoundaryValue {
  RationalComplex trace;
  Rational basis_norm_sq;

  // omega(F u, F v) = 2 c_u conj(c_v) ||exp(-t)||^2.
  friend RationalComplex unitary_form(const CanonicalBoundaryValue& u,
                                      const CanonicalBoundaryValue& v) {
    return RationalComplex(2 * u.basis_norm_sq) * u.trace * v.trace.conj();
  }
};
CanonicalBoundaryValue canonical_F(const ExpPoly& f);

// Omega(f, g) against omega(F f, F g); both exact.
struct SystemIdentity {
  RationalComplex omega_side;
  RationalComplex unitary_side;
  bool exact() const { return omega_side == unitary_side; }
};
SystemIdentity canonical_system_identity(const ExpPoly& f, const ExpPoly& g);

// f - f(0) exp(-t), the D(H0) component of f.
ExpPoly minimal_domain_part(const ExpPoly& f);

// Always throws DimensionMismatch carrying the deficiency indices (1, 0).
[[noreturn]] void triplet_attempt();

// The four equivalent existence statements evaluated on the half-line model.
// A skew-self-adjoint extension would need a unitary G1 -> G2, which needs
// equal dimensions; the triplet is attempted through system_to_triplet's
// dimension check.
ExistenceReport existence_report();

// H f = -f' on trace-zero f; throws TraceNotZero otherwise.
ExpPoly canonical_extension_apply(const ExpPoly& f);
// Re <H f, f> on the domain of H.
Rational dissipation(const ExpPoly& f);

// The unique u with u + u' = f and u(0) = 0.
ExpPoly resolvent_solve(const ExpPoly& f);

struct InjectivityReport {
  Rational value;    // Re <(1 - H*) g, g>
  Rational norm_sq;  // <g, g>
  bool inequality_holds = false;
  bool equality = false;
  bool g1_component_zero = false;
};
// H* g = g' on the whole family.
InjectivityReport adjoint_injectivity_check(const ExpPoly& g);

}  // namespace skewext::halfline
