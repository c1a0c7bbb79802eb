#include "diskoct/bounds.hpp"

namespace diskoct::bounds {

namespace {

const Real kThree{3};

}  // namespace

Real kappa_from_degree(const Real& d) {
  if (d < 0) throw BoundsError("average degree must be non-negative");
  return boost::multiprecision::pow(kThree, -(Real(3) / 8 * d + Real(5) / 4));
}

Real kappa_derandomized() { return boost::multiprecision::pow(Real(400), -3) / 3; }

Real dead_probability_lower_bound(int deg) {
  if (deg < 2) throw BoundsError("degree inside a packed triangle is at least 2");
  return boost::multiprecision::pow(kThree, -(Real(3) / 8 * deg + Real(1) / 4));
}

Quadratic ratio_quadratic(const Real& kappa, const Real& rho0) {
  return Quadratic{kappa + 1, -((2 + rho0) * kappa + 3), 2 * rho0 * kappa};
}

RatioBound ratio_bound(const Real& kappa, const Real& rho0) {
  if (!(kappa > 0)) throw BoundsError("kappa must be positive");
  if (rho0 < 1) throw BoundsError("rho0 must be at least 1");
  const Quadratic q = ratio_quadratic(kappa, rho0);
  const Real disc = q.b * q.b - 4 * q.a * q.c;
  // disc > 0 always: q(2) = -2 < 0 with a positive leading coefficient.
  const Real root = (-q.b + boost::multiprecision::sqrt(disc)) / (2 * q.a);
  RatioBound out;
  out.raw_root = root;
  out.clamped = root < 2;
  out.rho = out.clamped ? Real(2) : root;
  return out;
}

WorstCase worst_case_ab(const Real& kappa, const Real& rho0, const Real& rho) {
  const Real denom = (3 - rho0 + rho) + (rho - 2) * kappa;
  if (denom == 0) throw BoundsError("degenerate worst-case denominator");
  WorstCase w;
  w.a = (2 * rho - rho0) / denom;
  // rho1 = rho2 forces b = a (1/3)^((3/8) d + 1/4) = 3 kappa a.
  w.b = 3 * kappa * w.a;
  w.b_exceeds_one = w.b > 1;
  return w;
}

CandidateRatios candidate_ratios(const Real& a, const Real& b, const Real& kappa, const Real& rho0,
                                 const Real& rho) {
  CandidateRatios r;
  r.rho1 = 3 * a + rho0 * (1 - a);
  r.rho2 = rho0 + (1 - 3 * kappa) * (3 - rho0) * a + (3 - rho0) * b;
  r.rho3 = 2 * b / 3 + rho * (2 - a - b / 3);
  return r;
}

BoundReport evaluate(const Real& kappa, const Real& rho0, const Real* rho_override) {
  BoundReport rep;
  rep.kappa = kappa;
  rep.rho0 = rho0;
  rep.bound = ratio_bound(kappa, rho0);
  rep.rho_used = rho_override ? *rho_override : rep.bound.rho;
  rep.worst = worst_case_ab(kappa, rho0, rep.rho_used);
  rep.ratios = candidate_ratios(rep.worst.a, rep.worst.b, kappa, rho0, rep.rho_used);
  return rep;
}

}  // namespace diskoct::bounds
