#ifndef MBPIRE_TYPES_HPP_
#define MBPIRE_TYPES_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace mbpire {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// Population vector: one nonnegative count per particle type.
using Pop = std::vector<i64>;

inline i64 pop_sum(std::span<const i64> v) {
  i64 s = 0;
  for (i64 c : v) s += c;
  return s;
}

inline bool pop_is_zero(std::span<const i64> v) {
  for (i64 c : v)
    if (c != 0) return false;
  return true;
}

}  // namespace mbpire

#endif
