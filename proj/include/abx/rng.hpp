#pragma once

#include <array>
#include <cstdint>

namespace abx::rng {

/// Philox4x32-10 counter-based block cipher (Salmon et al. reference
/// constants). Distinct keys give independent streams; the period per key is
/// 2^128 blocks.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;
  static Counter round10(Counter ctr, Key key);
};

/// Random stream over the counter subspace of one sample:
///   ctr = [block_lo, block_hi, sample_index, stream_id], key = seed.
/// Every sample index owns 2^64 blocks, so per-sample rejection loops never
/// leak draws across samples and generation is reproducible bit-for-bit
/// independent of thread count or evaluation order.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint32_t stream_id, std::uint32_t sample_index);

  std::uint64_t next_u64();
  /// Uniform double strictly inside (0, 1).
  double next_unit();
  /// Standard normal via Box-Muller (pairs cached).
  double next_normal();
  /// Gamma(shape, scale) via Marsaglia-Tsang, with the power boost for shape < 1.
  double next_gamma(double shape, double scale);
  /// Poisson(mean): inversion by product for small means, PTRS transformed
  /// rejection for large ones.
  long next_poisson(double mean);

 private:
  void refill();
  std::uint32_t next_u32();

  Philox4x32::Key key_;
  Philox4x32::Counter ctr_;
  std::array<std::uint32_t, 4> buf_{};
  int buf_pos_ = 4;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace abx::rng
