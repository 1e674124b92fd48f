#pragma once

#include <vector>

#include "su3franel/exact_arith.hpp"

namespace su3franel {

// Dominant SU(3) weight with Dynkin labels (p, q), both non-negative.
struct Weight {
  int p = 0;
  int q = 0;

  Weight() = default;
  Weight(int p_, int q_);

  friend bool operator==(const Weight&, const Weight&) = default;
};

// Deterministic total order used everywhere weights are enumerated or used
// as map keys: by p+q, then by the quadratic invariant p^2+pq+q^2, then by
// p descending. p+q strictly increases along the dominance order (the
// difference of comparable weights is a positive sum of simple roots), so
// this is a linear extension of dominance.
bool height_less(const Weight& a, const Weight& b);
inline bool operator<(const Weight& a, const Weight& b) {
  return height_less(a, b);
}

// True iff p + 2q = 0 (mod 3), i.e. the weight lies in the root lattice.
bool in_root_lattice(const Weight& w);

// Order of the stabilizer of (p+q, q, 0) in S3: 6 if p = q = 0, 2 if exactly
// one label vanishes, 1 otherwise.
int stabilizer_order(const Weight& w);

// Number of distinct S3 images of (p+q, q, 0); always 6 / stabilizer_order.
int weyl_orbit_size(const Weight& w);

// Strict dominance: b - a is a nonzero N-combination of the simple roots
// a1 = (2,-1) and a2 = (-1,2).
bool dominance_lt(const Weight& a, const Weight& b);
bool dominance_le(const Weight& a, const Weight& b);

Weight mirror(const Weight& w);  // (q, p)

// Dimension of the irreducible with highest weight w: (p+1)(q+1)(p+q+2)/2.
long long irrep_dimension(const Weight& w);

// All root-lattice dominant weights dominated by (n, n), in height order.
// These are exactly the candidate weights of the n-th adjoint tensor power.
std::vector<Weight> dominant_weights_in_power(int n);

}  // namespace su3franel
