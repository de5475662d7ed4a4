#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace synprobe {

// Deterministic PRNG (xoshiro256** seeded through splitmix64) with named
// substreams. Every random decision in the project flows from one master
// seed through this class; distributions are hand-rolled so that results do
// not depend on the platform's standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Child generator derived from this generator's seed and a name.
  // Independent of how much the parent has been consumed.
  Rng substream(std::string_view name) const;
  Rng substream(std::string_view name, std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64();

  // Uniform double in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);
  float uniform_float(float lo, float hi);

  // Uniform integer in [0, n). n must be positive.
  std::size_t index(std::size_t n);

  // Fisher-Yates; std::shuffle is implementation-defined, this is not.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[index(i)]);
    }
  }

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t state_[4] = {0, 0, 0, 0};
};

// FNV-1a over bytes; used for substream derivation and config hashing.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace synprobe
