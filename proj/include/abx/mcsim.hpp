#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "abx/channel.hpp"

namespace abx::mcsim {

struct SamplerConfig {
  ChannelParams params;
  std::int64_t n_samples;
  std::uint64_t seed;
  std::uint32_t stream_id = 0;
  void validate() const;
};

struct EnvelopeBatch {
  std::vector<double> samples;  // envelope R
  SamplerConfig config;
  long redraws = 0;  // zero/underflow draws rejected and redrawn
};

struct SnrSampleBatch {
  std::vector<double> samples;  // instantaneous SNR, linear
  SamplerConfig config;
  long redraws = 0;
};

struct MomentCheck {
  double empirical;
  double analytic;
  double std_error;  // leave-one-out jackknife
  bool within_band;  // |empirical - analytic| <= 3 * std_error
};

struct FitReport {
  double ks_distance;
  double ks_threshold;
  double significance;
  std::map<double, MomentCheck> moments;  // order -> check
  bool pass;
};

/// Envelope of the shadowed multi-LoS model: LoS power s ~ Gamma(shape m_y,
/// mean omega_y), then R^2 | s a noncentral-gamma variate of shape m_x and
/// diffuse power omega_x drawn through the Poisson mixture
///   K ~ Poisson(m_x s / omega_x),  R^2 ~ Gamma(m_x + K, omega_x / m_x).
EnvelopeBatch sample_bx_shadowed_envelope(const SamplerConfig& config);
EnvelopeBatch sample_bx_shadowed_envelope_serial(const SamplerConfig& config);

/// Nonlinear-envelope map to the instantaneous SNR:
///   gamma = gamma_bar * (C_alpha * m_x * R^2 / omega_x)^{2/alpha};
/// monotone in R, mean gamma_bar by the construction of C_alpha.
SnrSampleBatch alpha_transform(const EnvelopeBatch& envelopes, const ChannelParams& p);

SnrSampleBatch sample_snr_batch(const SamplerConfig& config);         // OpenMP across samples
SnrSampleBatch sample_snr_batch_serial(const SamplerConfig& config);  // reference, bit-identical

/// Asymptotic two-sided Kolmogorov-Smirnov critical value, sqrt(-ln(sig/2)/2)/sqrt(n).
double ks_critical_value(std::size_t n, double significance);

/// D_n = sup |ECDF - cdf|; the sorted variant assumes ascending samples.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);
double ks_distance_sorted(const std::vector<double>& sorted,
                          const std::function<double(double)>& cdf);
double ks_distance_sorted_serial(const std::vector<double>& sorted,
                                 const std::function<double(double)>& cdf);

/// KS against the closed-form cdf plus raw-moment gaps with jackknife bands.
FitReport validate_against_closed_form(const SnrSampleBatch& batch,
                                       const std::vector<double>& orders,
                                       double significance);

struct OutageEstimate {
  double estimate;
  double std_error;  // binomial
};
OutageEstimate estimate_outage(const SnrSampleBatch& batch, double gamma_th);

/// Jackknife standard error of the sample mean of v.
double jackknife_se_mean(const std::vector<double>& v);

/// Empirical amount of fading m2/m1^2 - 1 with its leave-one-out jackknife SE.
std::pair<double, double> empirical_aof(const std::vector<double>& samples);

}  // namespace abx::mcsim
