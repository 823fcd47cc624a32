#ifndef FVEST_RNG_HPP
#define FVEST_RNG_HPP

#include <array>
#include <cstdint>

namespace fvest {

/// Philox4x64-10 block cipher (Random123 constants). Counter-based: the output
/// block is a pure function of (counter, key), so streams never overlap and
/// any block can be regenerated independently.
struct Philox4x64 {
  static std::array<std::uint64_t, 4> block(const std::array<std::uint64_t, 4>& counter,
                                            const std::array<std::uint64_t, 2>& key);
};

/// One reproducible random stream identified by (seed, stream). Block b >= 1 is
/// Philox4x64-10 at counter {b,0,0,0} with key {seed, stream}; this matches
/// numpy.random.Philox(key = seed + (stream << 64)).random_raw() word for word.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0)
      : key_{seed, stream} {}

  std::uint64_t next_u64();

  /// Uniform draw in the open interval (0,1), 53-bit resolution.
  double next_uniform();

  /// Standard normal via Box-Muller; consumes two uniforms per pair.
  double next_gaussian();

 private:
  void refill();

  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_{0, 0, 0, 0};
  std::array<std::uint64_t, 4> buffer_{};
  int buffer_pos_ = 4;
  double gauss_spare_ = 0.0;
  bool has_gauss_spare_ = false;
};

/// Deterministic per-replication seed: SplitMix64 output at index r of the
/// stream started at master_seed. Documented so that a manual pipeline run can
/// reproduce replication r of a Monte Carlo study exactly.
std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t r);

}  // namespace fvest

#endif  // FVEST_RNG_HPP
