#pragma once

#include <random>

#include "fimhom/field.hpp"

namespace fimhom {

/// Seeded generator with hand-rolled bounded sampling. std::mt19937_64 output
/// is fully specified by the standard, so identical seeds give identical
/// streams on every platform; distribution classes would not.
class DetRng {
 public:
  explicit DetRng(u64 seed) : eng_(seed) {}

  u64 next() { return eng_(); }

  /// Uniform in [0, n) by rejection.
  u64 below(u64 n) {
    if (n == 0) return 0;
    u64 limit = ~u64{0} - (~u64{0} % n);
    u64 x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  /// Uniform in [lo, hi] inclusive.
  u64 range(u64 lo, u64 hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace fimhom
