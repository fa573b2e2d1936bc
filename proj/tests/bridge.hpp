#pragma once

// Conversions between library objects and the oracle's bitmask complexes.
// Only meaningful on orthant cones, where generator j is vertex j.

#include <cstdint>

#include "cmlattice/complexes.hpp"
#include "cmlattice/linalg.hpp"
#include "oracle.hpp"

namespace bridge {

inline oracle::Mask mask_of(const cmlattice::Face& f) {
  oracle::Mask m = 0;
  for (auto g : f.generator_set) m |= oracle::Mask{1} << g;
  return m;
}

inline oracle::Complex to_oracle(const cmlattice::OrderIdeal& delta) {
  oracle::Complex c;
  c.n = static_cast<int>(delta.cone().dimension());
  for (auto f : delta.faces()) c.faces.insert(mask_of(delta.cone().face(f)));
  return c;
}

/// The oracle works modulo a prime; rationals are mimicked by a large one.
inline std::int64_t oracle_prime(const cmlattice::Field& f) {
  return f.is_rational() ? oracle::kBigPrime : f.characteristic();
}

}  // namespace bridge
