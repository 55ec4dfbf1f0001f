#pragma once

#include <cstdint>
#include <vector>

namespace mvb {

// Counter-style generator (splitmix64): the state advances by a fixed
// increment and each output is a bijective hash of the state, so sequences
// and derived streams are identical across platforms and compilers.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  // Integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Independent stream derived from (current state, stream id). Used to give
  // each node / replication its own reproducible substream.
  SplitMix64 split(std::uint64_t stream) const {
    SplitMix64 probe(state_);
    const std::uint64_t base = probe.next();
    return SplitMix64(base ^ (0xd1342543de82ef95ULL * stream + 0x2545f4914f6cdd1dULL));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace mvb
