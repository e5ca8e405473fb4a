#ifndef MBPIRE_RNG_HPP_
#define MBPIRE_RNG_HPP_

#include <cstdint>

#include "mbpire/types.hpp"

namespace mbpire {

namespace detail {
// splitmix64 finalizer; full avalanche on 64 bits.
inline constexpr u64 mix64(u64 z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Stateless counter-based generator. Every draw is a pure function of
/// (seed, k1..k4), so simulations are reproducible under refactoring and
/// coupled constructions can share draws by sharing keys.  Substreams are
/// split off with derive() and never collide with the parent's draws.
class KeyedRng {
 public:
  explicit KeyedRng(u64 seed = 0) : seed_(detail::mix64(seed + 0x9E3779B97F4A7C15ull)) {}

  KeyedRng derive(u64 tag, u64 sub = 0) const {
    KeyedRng r;
    u64 z = seed_;
    z = detail::mix64(z ^ detail::mix64(tag + 0x165667B19E3779F9ull));
    z = detail::mix64(z ^ detail::mix64(sub + 0xD1B54A32D192ED03ull));
    r.seed_ = z;
    return r;
  }

  u64 bits(u64 k1, u64 k2 = 0, u64 k3 = 0, u64 k4 = 0) const {
    u64 z = seed_;
    z = detail::mix64(z ^ detail::mix64(k1 + 0x9E3779B97F4A7C15ull));
    z = detail::mix64(z ^ detail::mix64(k2 + 0xBF58476D1CE4E5B9ull));
    z = detail::mix64(z ^ detail::mix64(k3 + 0x94D049BB133111EBull));
    z = detail::mix64(z ^ detail::mix64(k4 + 0x2545F4914F6CDD1Dull));
    return z;
  }

  /// Uniform draw in [0, 1) with 53 random bits.
  double uniform(u64 k1, u64 k2 = 0, u64 k3 = 0, u64 k4 = 0) const {
    return static_cast<double>(bits(k1, k2, k3, k4) >> 11) * 0x1.0p-53;
  }

  u64 seed() const { return seed_; }

 private:
  u64 seed_;
};

/// Maps signed time indices (environment runs on Z) to distinct keys.
inline constexpr u64 zigzag(i64 t) {
  return (static_cast<u64>(t) << 1) ^ static_cast<u64>(t >> 63);
}

/// Key-space partition. First key slot of every draw; derive() tags reuse
/// the same constants for substream separation.
namespace stream {
inline constexpr u64 env = 1;
inline constexpr u64 immigration = 2;
inline constexpr u64 offspring = 3;
inline constexpr u64 clan = 4;
inline constexpr u64 xi = 5;
inline constexpr u64 lambda = 6;
inline constexpr u64 minorant_imm = 7;
inline constexpr u64 minorant_off = 8;
inline constexpr u64 residual_imm = 9;
inline constexpr u64 residual_off = 10;
inline constexpr u64 replica = 11;
inline constexpr u64 experiment = 12;
}  // namespace stream

}  // namespace mbpire

#endif
