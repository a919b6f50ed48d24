#include "kvn/runner/algebra_checks.hpp"

#include <string>

#include "kvn/algebra/operator_polynomial.hpp"
#include "kvn/algebra/quantization.hpp"
#include "kvn/algebra/text.hpp"
#include "kvn/errors.hpp"

namespace kvn::runner {

using algebra::ClassicalPolynomial;
using algebra::HbarCoefficient;
using algebra::OperatorPolynomial;
using algebra::PhaseIndex;

namespace {

// A check that passes iff `residual` is the zero polynomial.
Check zero_check(std::string name, const OperatorPolynomial& residual, Expect expect = Expect::kSmall) {
  Check c;
  c.name = std::move(name);
  c.within = residual.is_zero();
  c.expect = expect;
  c.detail = "residual = " + algebra::render(residual);
  return c;
}

OperatorPolynomial bopp(const ClassicalPolynomial& f, bool barred) {
  return algebra::bopp_quantize(f, barred ? algebra::BoppVariant::kBarred : algebra::BoppVariant::kUnbarred);
}

const HbarCoefficient kIHbar(algebra::ComplexRational::i(), 1);

void heisenberg_checks(RunReport& r, int n) {
  for (bool barred : {false, true}) {
    const char* bar = barred ? "bar" : "";
    // [Q_j, P_k] = +-i hbar delta_jk; [Q_j, Q_k] = [P_j, P_k] = 0.
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const OperatorPolynomial qj = bopp(ClassicalPolynomial::q(n, j), barred);
        const OperatorPolynomial qk = bopp(ClassicalPolynomial::q(n, k), barred);
        const OperatorPolynomial pj = bopp(ClassicalPolynomial::p(n, j), barred);
        const OperatorPolynomial pk = bopp(ClassicalPolynomial::p(n, k), barred);
        OperatorPolynomial qp = algebra::commutator(qj, pk);
        if (j == k) {
          const OperatorPolynomial ih = OperatorPolynomial::constant(n, kIHbar);
          qp = barred ? qp + ih : qp - ih;
        }
        const std::string sj = std::to_string(j + 1);
        const std::string sk = std::to_string(k + 1);
        r.checks.push_back(zero_check("heisenberg [Q" + std::string(bar) + sj + ", P" + bar + sk + "]", qp));
        if (j < k) {
          r.checks.push_back(zero_check("heisenberg [Q" + std::string(bar) + sj + ", Q" + bar + sk + "]",
                                        algebra::commutator(qj, qk)));
          r.checks.push_back(zero_check("heisenberg [P" + std::string(bar) + sj + ", P" + bar + sk + "]",
                                        algebra::commutator(pj, pk)));
        }
      }
    }
  }
  // Barred and unbarred operators commute with each other.
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      for (bool pa : {false, true}) {
        for (bool pb : {false, true}) {
          const auto a = pa ? ClassicalPolynomial::p(n, j) : ClassicalPolynomial::q(n, j);
          const auto b = pb ? ClassicalPolynomial::p(n, k) : ClassicalPolynomial::q(n, k);
          r.checks.push_back(zero_check(std::string("heisenberg [") + (pa ? "P" : "Q") + std::to_string(j + 1) + ", " +
                                            (pb ? "P" : "Q") + "bar" + std::to_string(k + 1) + "]",
                                        algebra::commutator(bopp(a, false), bopp(b, true))));
        }
      }
    }
  }
}

// Components written out in x, y, z with the lambdas on the left; the
// parser normal-orders them.
const char* const kAngularMomentumClosedForm[] = {
    "y*pz - z*py - 1/2*hbar*(ly*z - lz*y + lpy*pz - lpz*py) - 1/4*hbar^2*(lpy*lz - ly*lpz)",
    "z*px - x*pz - 1/2*hbar*(lz*x - lx*z + lpz*px - lpx*pz) - 1/4*hbar^2*(lpz*lx - lz*lpx)",
    "x*py - y*px - 1/2*hbar*(lx*y - ly*x + lpx*py - lpy*px) - 1/4*hbar^2*(lpx*ly - lx*lpy)",
};

void angular_momentum_checks(RunReport& r) {
  using algebra::Axis;
  const Axis axes[] = {Axis::kX, Axis::kY, Axis::kZ};
  const char* names[] = {"Mx", "My", "Mz"};
  for (int i = 0; i < 3; ++i)
    r.checks.push_back(zero_check(std::string("angular momentum ") + names[i] + " minus closed form",
                                  algebra::angular_momentum(axes[i]) -
                                      algebra::parse_operator(kAngularMomentumClosedForm[i], 3)));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const int k = 3 - i - j;
      // eps_ijk = +1 for cyclic (i, j, k).
      const bool cyclic = (j == (i + 1) % 3);
      const OperatorPolynomial lhs = algebra::commutator(algebra::angular_momentum(axes[i]), algebra::angular_momentum(axes[j]));
      OperatorPolynomial rhs = algebra::scale(algebra::angular_momentum(axes[k]), kIHbar);
      if (!cyclic) rhs = -rhs;
      r.checks.push_back(zero_check(std::string("angular momentum [") + names[i] + ", " + names[j] + "] - " +
                                        (cyclic ? "" : "-") + "i hbar " + names[k],
                                    lhs - rhs));
    }
  }
}

void random_identity_checks(RunReport& r, const VerifyAlgebraOptions& o) {
  std::mt19937_64 rng(o.seed);
  int difference_failures = 0;
  int commute_failures = 0;
  std::string first_difference;
  std::string first_commute;
  for (int s = 0; s < o.samples; ++s) {
    const ClassicalPolynomial h = random_polynomial(rng, o.ndof, o.max_degree);
    const OperatorPolynomial diff = algebra::verify_difference_identity(h);
    if (!diff.is_zero()) {
      if (difference_failures++ == 0)
        first_difference = "H = " + algebra::render(h) + ", residual = " + algebra::render(diff);
    }
    const OperatorPolynomial comm = algebra::commutator(algebra::moyal_generator(h), bopp(h, false));
    if (!comm.is_zero()) {
      if (commute_failures++ == 0)
        first_commute = "H = " + algebra::render(h) + ", residual = " + algebra::render(comm);
    }
  }
  const std::string tag = " (" + std::to_string(o.samples) + " random H, ndof " + std::to_string(o.ndof) +
                          ", degree <= " + std::to_string(o.max_degree) + ")";
  Check d;
  d.name = "difference identity G - [H(Q,P) - H(Qbar,Pbar)]/hbar" + tag;
  d.within = difference_failures == 0;
  d.detail = d.within ? "residual = 0 for all" : std::to_string(difference_failures) + " nonzero; first: " + first_difference;
  r.checks.push_back(d);
  Check c;
  c.name = "generator commutes [G, H(Q,P)]" + tag;
  c.within = commute_failures == 0;
  c.detail = c.within ? "residual = 0 for all" : std::to_string(commute_failures) + " nonzero; first: " + first_commute;
  r.checks.push_back(c);
}

// H = p^2/2 + q^4/4: the leading drift term is nonzero, matches its closed
// form, and is cancelled by the cubic generator term.
void nonconservation_checks(RunReport& r) {
  const ClassicalPolynomial q = ClassicalPolynomial::q();
  const ClassicalPolynomial p = ClassicalPolynomial::p();
  const ClassicalPolynomial h = p * p * algebra::Rational(1, 2) + q * q * q * q * algebra::Rational(1, 4);
  const OperatorPolynomial leading = algebra::energy_nonconservation_leading(h);
  r.checks.push_back(zero_check("notcons [L, H(Q,P)] to hbar^2, H = p^2/2 + q^4/4", leading, Expect::kNonzero));
  r.checks.push_back(zero_check("notcons leading term minus closed form",
                                leading - algebra::energy_nonconservation_closed_form(h)));
  const OperatorPolynomial g1 = algebra::commutator(algebra::moyal_term(h, 1), bopp(h, false)).truncated(2);
  r.checks.push_back(zero_check("notcons cancelled by [G1, H(Q,P)] at hbar^2", leading + g1));
}

void groenewald_checks(RunReport& r) {
  const ClassicalPolynomial q = ClassicalPolynomial::q();
  const ClassicalPolynomial p = ClassicalPolynomial::p();
  r.checks.push_back(zero_check("groenewald (q, p)", algebra::groenewald_probe(q, p)));
  r.checks.push_back(zero_check("groenewald (q^2, p^2)", algebra::groenewald_probe(q * q, p * p)));
  r.checks.push_back(zero_check("groenewald (q^3, p^3)", algebra::groenewald_probe(q * q * q, p * p * p), Expect::kNonzero));
}

}  // namespace

ClassicalPolynomial random_polynomial(std::mt19937_64& rng, int ndof, int max_degree, int terms) {
  const auto draw = [&rng](std::uint64_t n) { return static_cast<int>(rng() % n); };
  const auto add_term = [&](ClassicalPolynomial& out, int degree) {
    algebra::ClassicalMonomial m;
    for (int k = 0; k < degree; ++k) {
      const int s = draw(2 * ndof);
      const PhaseIndex idx = s < ndof ? PhaseIndex::q(s) : PhaseIndex::p(s - ndof);
      m.set_exponent(idx, m.exponent(idx) + 1);
    }
    const int num = draw(10) - 5;
    algebra::Rational c(num >= 0 ? num + 1 : num, draw(4) + 1);
    c.canonicalize();
    out.add_term(m, c);
  };
  ClassicalPolynomial out(ndof);
  for (int t = 0; t < terms; ++t) add_term(out, draw(max_degree + 1));
  // Top up until some monomial of full degree survives.
  while (out.degree() < max_degree) add_term(out, max_degree);
  return out;
}

RunReport verify_algebra(const VerifyAlgebraOptions& o) {
  if (o.ndof < 1 || o.ndof > algebra::kMaxDof)
    throw ValidationError("ndof", "must be in 1.." + std::to_string(algebra::kMaxDof), "pass --ndof 3");
  if (o.max_degree < 1 || o.max_degree > kMaxRandomDegree)
    throw ValidationError("max-degree", "must be in 1.." + std::to_string(kMaxRandomDegree),
                          "products of degree-D operators must stay within the degree cap " +
                              std::to_string(algebra::kDefaultDegreeCap));
  if (o.samples < 1) throw ValidationError("samples", "must be >= 1", "");

  RunReport r;
  r.title = "kvn verify-algebra";
  r.preamble = {{"ndof", std::to_string(o.ndof)},
                {"max_degree", std::to_string(o.max_degree)},
                {"seed", std::to_string(o.seed)},
                {"samples", std::to_string(o.samples)}};
  heisenberg_checks(r, o.ndof);
  angular_momentum_checks(r);
  random_identity_checks(r, o);
  nonconservation_checks(r);
  groenewald_checks(r);
  return r;
}

}  // namespace kvn::runner
