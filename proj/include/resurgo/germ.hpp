#pragma once

#include "resurgo/series.hpp"

namespace resurgo {

// Borel germ at a base point z0: coefficients u_n = y_{n+1}(z0)/n! of the
// transform, with the constant term y_0(z0) carried separately as the delta
// part that resummation leaves untouched.
struct BorelGerm {
  BigComplex z0;
  Jet coeffs;           // u_0, u_1, ...
  BigComplex constant;  // y_0(z0)

  size_t size() const { return coeffs.size(); }
};

}  // namespace resurgo
