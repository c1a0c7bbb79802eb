#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace diskoct::bounds {

/// 50 significant decimal digits; results are rounded only when printed.
using Real = boost::multiprecision::cpp_bin_float_50;

class BoundsError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dead-density coefficient 3^-((3/8) d + 5/4) for average degree d >= 0.
Real kappa_from_degree(const Real& d);

/// Coefficient for the derandomized construction, whose per-vertex dead
/// density 400^-3 stands in for (1/3)^((3/8) d + 1/4) = 3 kappa.
Real kappa_derandomized();

/// (1/3)^((3/8) deg + 1/4), deg >= 2.
Real dead_probability_lower_bound(int deg);

/// Coefficients of (kappa+1) rho^2 - ((2+rho0) kappa + 3) rho + 2 rho0 kappa.
struct Quadratic {
  Real a;
  Real b;
  Real c;

  Real operator()(const Real& x) const { return (a * x + b) * x + c; }
};

Quadratic ratio_quadratic(const Real& kappa, const Real& rho0);

struct RatioBound {
  Real rho;        // max(2, raw_root)
  Real raw_root;   // larger root of the quadratic
  bool clamped = false;
};

/// Larger root of ratio_quadratic(kappa, rho0). Requires kappa > 0, rho0 >= 1.
RatioBound ratio_bound(const Real& kappa, const Real& rho0);

struct WorstCase {
  Real a;
  Real b;
  bool b_exceeds_one = false;
};

/// (a, b) maximizing min{rho1, rho2, rho3} for fixed kappa, rho0, rho.
WorstCase worst_case_ab(const Real& kappa, const Real& rho0, const Real& rho);

struct CandidateRatios {
  Real rho1;
  Real rho2;
  Real rho3;
};

/// rho1 = 3a + rho0 (1 - a)
/// rho2 = rho0 + (1 - 3 kappa)(3 - rho0) a + (3 - rho0) b
/// rho3 = 2b/3 + rho (2 - a - b/3)
CandidateRatios candidate_ratios(const Real& a, const Real& b, const Real& kappa, const Real& rho0,
                                 const Real& rho);

/// Everything the `bound` command reports for one (kappa, rho0) pair.
struct BoundReport {
  Real kappa;
  Real rho0;
  RatioBound bound;
  Real rho_used;  // the computed root unless overridden
  WorstCase worst;
  CandidateRatios ratios;
};

BoundReport evaluate(const Real& kappa, const Real& rho0, const Real* rho_override = nullptr);

}  // namespace diskoct::bounds
