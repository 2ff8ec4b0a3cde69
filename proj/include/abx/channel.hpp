#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "abx/policy.hpp"

namespace abx {

/// The five model parameters plus mean SNR. Stored values are always linear;
/// construct from dB with from_db().
struct ChannelParams {
  double m_x;        // overall fading severity
  double m_y;        // LoS shadowing severity
  double omega_x;    // NLoS (diffuse) power
  double omega_y;    // LoS power, may be 0
  double alpha;      // nonlinearity exponent
  double gamma_bar;  // mean SNR

  static ChannelParams from_db(double m_x, double m_y, double omega_x_db,
                               double omega_y_db, double alpha, double gamma_bar_db);
  void validate() const;  // throws std::invalid_argument
};

double db_to_linear(double db);
double linear_to_db(double v);

/// Normalization constant C_alpha; the SNR mean equals gamma_bar by its construction.
struct CAlpha {
  double value;
};

struct OutageBounds {
  double lower;
  double upper;  // may exceed 1 at low SNR
  double exact;
};

CAlpha c_alpha(const ChannelParams& p, const SeriesPolicy& policy = {});

/// Density of the instantaneous SNR at gamma > 0.
double snr_pdf(const ChannelParams& p, double gamma, const SeriesPolicy& policy = {});

/// Distribution function of the instantaneous SNR at gamma >= 0. Values
/// straying outside [0,1] by more than the evaluation tolerance raise
/// EvalError instead of being clamped.
double snr_cdf(const ChannelParams& p, double gamma, const SeriesPolicy& policy = {});

/// Raw moment E[gamma^k], k > 0 (non-integer orders allowed).
double snr_moment(const ChannelParams& p, double k, const SeriesPolicy& policy = {});

/// Amount of fading Var[gamma]/E[gamma]^2; equals 1 in the Rayleigh regime.
double amount_of_fading(const ChannelParams& p, const SeriesPolicy& policy = {});

/// Channel quality estimation index, AoF / mean SNR.
double cqei(const ChannelParams& p, const SeriesPolicy& policy = {});

/// P{gamma <= gamma_th} = cdf at the threshold.
double outage_probability(const ChannelParams& p, double gamma_th,
                          const SeriesPolicy& policy = {});

/// High-SNR bounds: lower = upper * exp(-(gamma_th/gamma_bar)^{alpha/2}/C_alpha).
OutageBounds outage_bounds(const ChannelParams& p, double gamma_th,
                           const SeriesPolicy& policy = {});

using ConditionalBer = std::function<double(double)>;

/// Gray-coded square 16-QAM bit error rate conditioned on the instantaneous SNR.
double qam16_conditional_ber(double snr);

/// E[ber(gamma)] by adaptive quadrature against the SNR density (abs tol 1e-9).
double average_error_rate(const ChannelParams& p, const ConditionalBer& ber,
                          const SeriesPolicy& policy = {});

/// (P_out, average BER) for each gamma_bar in the grid, all else fixed.
std::vector<std::pair<double, double>> quality_reliability_curve(
    const ChannelParams& p, double gamma_th, const std::vector<double>& gamma_bar_grid,
    const ConditionalBer& ber, const SeriesPolicy& policy = {});

/// Precomputed cdf for bulk evaluation (KS statistics, sweeps). Agrees with
/// snr_cdf to ~1e-12 at a fraction of the cost per point; immutable and safe
/// to share across threads.
class CdfEvaluator {
 public:
  explicit CdfEvaluator(const ChannelParams& p, const SeriesPolicy& policy = {});
  double operator()(double gamma) const;

 private:
  double m_x_, alpha_half_, gamma_bar_, inv_c_alpha_, prefactor_, ln_gamma_mx1_;
  std::vector<double> coeff_;       // (m_y)_n delta^n / n!
  std::vector<double> coeff_tail_;  // sum of coefficients after index n
};

/// Integral of h(gamma) * pdf(gamma) over (0, gamma_hi], with gamma_hi <= 0
/// meaning the full half-line (the cutoff is then found from the density
/// tail). Substitutions tame the origin singularity for alpha*m_x/2 < 1.
double integrate_against_pdf(const ChannelParams& p, const std::function<double(double)>& h,
                             double gamma_hi, double abs_tol, double rel_tol,
                             const SeriesPolicy& policy = {});

}  // namespace abx
