#pragma once

#include <cstdint>

namespace qsiegel {

/// Counter-based generator: the stream for sample `index` under `seed` is a
/// pure function of (seed, index, stream), so Monte Carlo results do not
/// depend on how samples are scheduled across threads.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream = 0);

  std::uint64_t next_u64();

  /// Uniform on the open interval (0, 1).
  double uniform();

  double normal();

  /// Gamma(shape, 1) by Marsaglia-Tsang.
  double gamma(double shape);

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qsiegel
