#pragma once

#include <cstddef>

namespace jsrlab {

// Global numeric configuration. All "is this zero" decisions in the library
// go through zero_epsilon() scaled by the magnitude of the data involved.
struct Config {
  double zero_epsilon = 1e-10;   // scale-relative zero test: |x| <= eps * (1 + scale)
  double eig_tolerance = 1e-12;  // eigenvalue iteration convergence tolerance
  int eig_max_sweeps = 60;       // QR iterations per eigenvalue before giving up
  double condition_cap = 1e8;    // reject norm-defining factors beyond this
  int max_dim = 16;              // hard cap on matrix dimension
  int max_transport_depth = 8;   // nesting bound for transported norms
};

Config& config();

inline double zero_epsilon() { return config().zero_epsilon; }

// |x| is negligible at the given magnitude scale.
inline bool negligible(double x, double scale) {
  return x <= zero_epsilon() * (1.0 + scale) && x >= -zero_epsilon() * (1.0 + scale);
}

}  // namespace jsrlab
