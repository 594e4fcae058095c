#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "resurgo/series.hpp"

namespace resurgo {

using ComplexFn = std::function<BigComplex(const BigComplex&)>;

struct QuadratureResult {
  BigComplex value;
  BigFloat error;  // nested-rule difference

  QuadratureResult& operator+=(const QuadratureResult& o) {
    value += o.value;
    error += o.error;
    return *this;
  }
};

// tanh-sinh rule on the straight segment [a, b], refining the step until the
// level-to-level difference drops below tol (absolute) or levels run out.
QuadratureResult tanh_sinh(const ComplexFn& f, const BigComplex& a, const BigComplex& b,
                           Precision prec, const BigFloat& tol, int max_level = 12);

// Gauss-Legendre nodes/weights on [-1, 1]; cached per (n, precision).
const std::vector<std::pair<BigFloat, BigFloat>>& gauss_legendre(int n, Precision prec);

// Adaptive bisection Gauss-Legendre on [a, b].
QuadratureResult integrate_segment(const ComplexFn& f, const BigComplex& a, const BigComplex& b,
                                   Precision prec, const BigFloat& tol, int depth_cap = 40);

// Piecewise-linear path through the waypoints.
QuadratureResult integrate_path(const ComplexFn& f, const std::vector<BigComplex>& waypoints,
                                Precision prec, const BigFloat& tol);

enum class LoopOrientation { Anticlockwise, Clockwise };

// Stadium contour wrapping the ray {start + t*dir : t in [0, length]} at
// half-width h: both straight edges plus the semicircular cap around start.
// Anticlockwise runs in along the -i*dir side and out along the +i*dir side.
QuadratureResult stadium_ray_integral(const ComplexFn& f, const BigComplex& start,
                                      const BigComplex& dir_unit, const BigFloat& length,
                                      const BigFloat& h, LoopOrientation orient, Precision prec,
                                      const BigFloat& tol);

// Closed stadium around the segment [a, b] at half-width h.
QuadratureResult stadium_segment_integral(const ComplexFn& f, const BigComplex& a,
                                          const BigComplex& b, const BigFloat& h,
                                          LoopOrientation orient, Precision prec,
                                          const BigFloat& tol);

}  // namespace resurgo
