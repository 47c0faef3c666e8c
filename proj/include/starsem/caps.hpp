#ifndef STARSEM_CAPS_HPP
#define STARSEM_CAPS_HPP

#include <cstddef>

namespace starsem {

/// Resource caps for the exhaustive machinery. The closed-form counters work
/// for any n; everything that materializes or sweeps a family is bounded.
struct Caps {
  int enum_constructive = 8;   // constructive enumeration of a family
  int enum_filter = 6;         // full sweeps over all (n+1)^n partial maps
  int greens_oracle = 5;       // ideal-based Green's/regularity oracles
  std::size_t closure_elements = 1'000'000;          // closure size bound
  unsigned long long rank_subsets = 5'000'000;       // k-subset search bound
};

}  // namespace starsem

#endif  // STARSEM_CAPS_HPP
