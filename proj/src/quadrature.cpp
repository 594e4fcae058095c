#include "resurgo/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace resurgo {

namespace {

struct TSNode {
  BigFloat x, w;
};

// Nodes for one tanh-sinh level: t = j*h over the positive half (x symmetric).
// Stops before x rounds into the endpoint, where the integrand may be
// singular.
std::vector<TSNode> ts_level_nodes(Precision prec, const BigFloat& h) {
  std::vector<TSNode> nodes;
  BigFloat half_pi = BigFloat::pi(prec) / 2L;
  BigFloat one(1L, prec);
  BigFloat gap_floor = BigFloat::pow2(-(prec - 8), prec);
  long jmax = static_cast<long>(8.0 / h.to_double()) + 1;
  for (long j = 0; j <= jmax; ++j) {
    BigFloat t = h * j;
    BigFloat u = half_pi * sinh(t);
    BigFloat ch = cosh(u);
    BigFloat x = sinh(u) / ch;
    if (one - x <= gap_floor) break;
    BigFloat w = half_pi * cosh(t) / (ch * ch);
    nodes.push_back({std::move(x), std::move(w)});
  }
  return nodes;
}

}  // namespace

QuadratureResult tanh_sinh(const ComplexFn& f, const BigComplex& a, const BigComplex& b,
                           Precision prec, const BigFloat& tol, int max_level) {
  BigComplex mid = (a + b) / 2L;
  BigComplex rad = (b - a) / 2L;

  BigComplex sum(prec);
  BigComplex prev(prec);
  BigFloat h(1L, prec);
  QuadratureResult out{BigComplex(prec), BigFloat(1L, prec)};
  for (int level = 0; level <= max_level; ++level) {
    auto nodes = ts_level_nodes(prec, h);
    BigComplex acc(prec);
    for (size_t j = 0; j < nodes.size(); ++j) {
      // At refined levels even-index nodes repeat earlier levels.
      if (level > 0 && j % 2 == 0) continue;
      const auto& nd = nodes[j];
      BigComplex fp = f(mid + rad * nd.x);
      acc += fp * nd.w;
      if (j > 0) {
        BigComplex fm = f(mid - rad * nd.x);
        acc += fm * nd.w;
      }
    }
    sum = level == 0 ? acc : sum + acc;
    BigComplex value = sum * h * rad;
    if (level > 0) {
      BigFloat diff = abs(value - prev);
      out.value = value;
      out.error = diff;
      if (diff <= tol) return out;
    }
    prev = value;
    h = h / 2L;
  }
  return out;
}

const std::vector<std::pair<BigFloat, BigFloat>>& gauss_legendre(int n, Precision prec) {
  static std::mutex mu;
  static std::map<std::pair<int, Precision>, std::vector<std::pair<BigFloat, BigFloat>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, prec);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<std::pair<BigFloat, BigFloat>> nw;
  nw.reserve(n);
  for (int i = 1; i <= n; ++i) {
    // Double-precision seed, then Newton at full precision.
    double seed = std::cos(3.14159265358979324 * (i - 0.25) / (n + 0.5));
    BigFloat x(seed, prec);
    BigFloat one(1L, prec);
    BigFloat dp(prec);
    for (int it2 = 0; it2 < 80; ++it2) {
      // Legendre recurrence for P_n(x) and P_n'(x).
      BigFloat p0(1L, prec), p1 = x;
      for (int k = 2; k <= n; ++k) {
        BigFloat p2 = (x * p1 * (2 * k - 1) - p0 * (k - 1)) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = (x * p1 - p0) * n / (x * x - one);
      BigFloat dx = p1 / dp;
      x -= dx;
      if (abs(dx) <= BigFloat::pow2(-(prec - 8), prec)) break;
    }
    BigFloat w = BigFloat(2L, prec) / ((one - x * x) * dp * dp);
    nw.emplace_back(std::move(x), std::move(w));
  }
  auto res = cache.emplace(key, std::move(nw));
  return res.first->second;
}

namespace {

BigComplex gl_segment(const ComplexFn& f, const BigComplex& a, const BigComplex& b, int n,
                      Precision prec) {
  const auto& nw = gauss_legendre(n, prec);
  BigComplex mid = (a + b) / 2L;
  BigComplex rad = (b - a) / 2L;
  BigComplex acc(prec);
  for (const auto& [x, w] : nw) acc += f(mid + rad * x) * w;
  return acc * rad;
}

QuadratureResult gl_adaptive(const ComplexFn& f, const BigComplex& a, const BigComplex& b,
                             Precision prec, const BigFloat& tol, int depth) {
  constexpr int kOrder = 32;
  BigComplex whole = gl_segment(f, a, b, kOrder, prec);
  BigComplex mid = (a + b) / 2L;
  BigComplex left = gl_segment(f, a, mid, kOrder, prec);
  BigComplex right = gl_segment(f, mid, b, kOrder, prec);
  BigFloat diff = abs(whole - (left + right));
  if (diff <= tol || depth <= 0) {
    if (depth <= 0 && diff > tol)
      throw NumericalError("integrate_segment: adaptive depth exhausted");
    return {left + right, diff};
  }
  BigFloat half_tol = tol / 2L;
  QuadratureResult l = gl_adaptive(f, a, mid, prec, half_tol, depth - 1);
  QuadratureResult r = gl_adaptive(f, mid, b, prec, half_tol, depth - 1);
  l += r;
  return l;
}

}  // namespace

QuadratureResult integrate_segment(const ComplexFn& f, const BigComplex& a, const BigComplex& b,
                                   Precision prec, const BigFloat& tol, int depth_cap) {
  return gl_adaptive(f, a, b, prec, tol, depth_cap);
}

QuadratureResult integrate_path(const ComplexFn& f, const std::vector<BigComplex>& waypoints,
                                Precision prec, const BigFloat& tol) {
  QuadratureResult acc{BigComplex(prec), BigFloat(prec)};
  if (waypoints.size() < 2) return acc;
  BigFloat seg_tol = tol / static_cast<long>(waypoints.size());
  for (size_t k = 0; k + 1 < waypoints.size(); ++k)
    acc += integrate_segment(f, waypoints[k], waypoints[k + 1], prec, seg_tol);
  return acc;
}

namespace {

// Semicircle w = center + h*exp(i*theta), theta from `from` increasing by pi
// (an anticlockwise half-turn); dw = i h e^{i theta} dtheta.
QuadratureResult half_cap(const ComplexFn& f, const BigComplex& center, const BigFloat& h,
                          const BigFloat& from, Precision prec, const BigFloat& tol) {
  ComplexFn g = [&f, &center, &h, prec](const BigComplex& th) {
    BigComplex e = unit(th.real());
    return f(center + e * h) * BigComplex::i(prec) * e * h;
  };
  BigFloat zero(0L, prec);
  return integrate_segment(g, BigComplex(from, zero), BigComplex(from + BigFloat::pi(prec), zero),
                           prec, tol);
}

}  // namespace

QuadratureResult stadium_ray_integral(const ComplexFn& f, const BigComplex& start,
                                      const BigComplex& dir_unit, const BigFloat& length,
                                      const BigFloat& h, LoopOrientation orient, Precision prec,
                                      const BigFloat& tol) {
  BigComplex up = BigComplex::i(prec) * dir_unit * h;  // left normal offset
  BigComplex far = start + dir_unit * length;
  BigFloat seg_tol = tol / 3L;

  // Anticlockwise: in along the +up edge toward the tip, cap sweeping from
  // arg(up) by +pi (bulging past the tip on the -dir side), out along -up.
  QuadratureResult acc{BigComplex(prec), BigFloat(prec)};
  acc += integrate_segment(f, far + up, start + up, prec, seg_tol);
  acc += half_cap(f, start, h, arg(up), prec, seg_tol);
  acc += integrate_segment(f, start - up, far - up, prec, seg_tol);
  if (orient == LoopOrientation::Clockwise) acc.value = -acc.value;
  return acc;
}

QuadratureResult stadium_segment_integral(const ComplexFn& f, const BigComplex& a,
                                          const BigComplex& b, const BigFloat& h,
                                          LoopOrientation orient, Precision prec,
                                          const BigFloat& tol) {
  BigComplex dir = (b - a) / abs(b - a);
  BigComplex up = BigComplex::i(prec) * dir * h;
  BigFloat seg_tol = tol / 4L;

  // Anticlockwise: below-edge a->b, cap past b, above-edge b->a, cap past a.
  QuadratureResult acc{BigComplex(prec), BigFloat(prec)};
  acc += integrate_segment(f, a - up, b - up, prec, seg_tol);
  acc += half_cap(f, b, h, arg(-up), prec, seg_tol);
  acc += integrate_segment(f, b + up, a + up, prec, seg_tol);
  acc += half_cap(f, a, h, arg(up), prec, seg_tol);
  if (orient == LoopOrientation::Clockwise) acc.value = -acc.value;
  return acc;
}

}  // namespace resurgo
