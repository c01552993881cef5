#ifndef TRILOCAL_RNG_HPP
#define TRILOCAL_RNG_HPP

#include <cstdint>
#include <random>

namespace trilocal {

/// Seeded deterministic generator. mt19937_64 output is pinned by the
/// standard, and bounded draws avoid std::uniform_int_distribution (whose
/// mapping is implementation-defined), so a (seed, call sequence) pair
/// produces identical values on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform-ish draw in [0, bound). bound must be positive; the modulo
  /// bias is irrelevant for the tiny bounds used here.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  std::uint64_t seed_for_subtask() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace trilocal

#endif  // TRILOCAL_RNG_HPP
