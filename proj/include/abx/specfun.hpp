#pragma once

#include "abx/policy.hpp"

namespace abx::specfun {

/// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double ln_gamma(double x);

/// log|(a)_n| and the sign of the Pochhammer symbol (a)_n = Gamma(a+n)/Gamma(a).
/// sign is 0 when the product hits an exact zero (a a nonpositive integer
/// with a + n > 0).
struct LogPochhammer {
  double log_abs;
  int sign;
};
LogPochhammer ln_pochhammer(double a, long n);

/// Regularized lower incomplete gamma P(s, x) = gamma(s,x)/Gamma(s), s > 0, x >= 0.
double reg_lower_gamma(double s, double x);

/// Kummer confluent hypergeometric 1F1(a; b; z).
/// Negative z is mapped to a positive argument through 1F1(a;b;z) = e^z 1F1(b-a;b;-z)
/// so the summed series keeps single-signed terms in the paper's regimes.
SpecialValue kummer_1f1(double a, double b, double z, const SeriesPolicy& policy = {});

/// ln 1F1(a; b; z) for a > 0, b > 0, z >= 0. All series terms are positive, so
/// the log-domain sum stays exact where 1F1 itself overflows. est_error is the
/// absolute error of the log (= relative error of the value).
SpecialValue ln_kummer_1f1(double a, double b, double z, const SeriesPolicy& policy = {});

/// Gauss hypergeometric 2F1(a, b; c; z) for z < 1. Arguments z < 0 of any
/// magnitude are handled by the Pfaff map z -> z/(z-1) into (0,1); a or b a
/// nonpositive integer truncates to the exact polynomial for any z.
SpecialValue gauss_2f1(double a, double b, double c, double z, const SeriesPolicy& policy = {});

/// Humbert/confluent-Appell function
///   Phi2(b1, b2; c; x, y) = sum_{m,n>=0} (b1)_m (b2)_n / (c)_{m+n} x^m y^n / (m! n!),
/// for b1, b2, c > 0 and x, y >= 0 (the artifact's domain). Summed row-wise in
/// the log domain with adaptive rectangular truncation.
SpecialValue appell_phi2(double b1, double b2, double c, double x, double y,
                         const SeriesPolicy& policy = {});

/// e^{-x} * Phi2(b1, b2; c; x, y): bounded where the factors overflow
/// separately. For b1 = 1, c > 1, y < x the large-x evaluation goes through
/// the incomplete-gamma form
///   e^{-x} Phi2(1,b2;c;x,y) = Gamma(c) x^{1-c} sum_n (b2)_n (y/x)^n P(c-1+n, x)/n!.
SpecialValue exp_scaled_phi2(double b1, double b2, double c, double x, double y,
                             const SeriesPolicy& policy = {});

}  // namespace abx::specfun
