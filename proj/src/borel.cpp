#include "resurgo/borel.hpp"

namespace resurgo {

namespace {

BigFloat ray_clearance(const BigComplex& s, const BigComplex& u, const BigFloat& T) {
  // Distance from s to the segment {t u: 0 <= t <= T}, u a unit vector.
  BigFloat t = (s * conj(u)).real();
  Precision prec = t.precision();
  if (t.sign() < 0) return abs(s);
  if (t > T) return abs(s - u * T);
  return abs(s - u * t);
}

}  // namespace

RaySum laplace_sum(const ComplexFn& yb, const BigComplex& y0, const BigComplex& eps,
                   const BigFloat& theta, Precision prec, const LaplaceConfig& config) {
  if (eps.is_zero()) throw std::invalid_argument("laplace_sum: epsilon must be nonzero");
  BigComplex u = unit(theta.to_precision(prec));
  BigComplex rate = u / eps;  // e^(-w/eps) = e^(-rate t) along w = t u
  if (rate.real().sign() <= 0)
    throw NumericalError("laplace_sum: non-convergent tail (rotate the ray)");

  double bits = static_cast<double>(prec) + config.tail_bits;
  BigFloat T = BigFloat(bits * 0.6931471805599453, prec) / rate.real();

  BigFloat tube = config.tube > 0 ? BigFloat(config.tube, prec) : abs(eps) / 8L;
  for (const auto& s : config.singularities) {
    if (ray_clearance(s, u, T) < tube)
      throw RayHitsSingularity("laplace_sum: ray passes within the singularity tube at w = " +
                               s.str(6));
  }

  ComplexFn f = [&](const BigComplex& w) { return exp(-w / eps) * yb(w); };
  // Geometric panels from the origin: fine near 0 where y_B varies, coarse in
  // the pure-decay tail.
  std::vector<BigComplex> panels;
  panels.push_back(BigComplex(prec));
  BigFloat step = abs(eps) / 2L;
  BigFloat t(0L, prec);
  while (t < T) {
    t = min(t + step, T);
    panels.push_back(u * t);
    step = step * 2L;
  }
  BigFloat tol = BigFloat::pow2(-static_cast<long>(prec * 3 / 4), prec) * max(abs(eps), BigFloat(1L, prec));
  QuadratureResult q{BigComplex(prec), BigFloat(prec)};
  for (size_t k = 0; k + 1 < panels.size(); ++k)
    q += integrate_segment(f, panels[k], panels[k + 1], prec, tol);
  return RaySum{eps, theta.to_precision(prec), y0 + q.value, q.error};
}

RaySum laplace_sum(const BorelGerm& germ, const BigComplex& eps, const BigFloat& theta,
                   Precision prec, const LaplaceConfig& config) {
  if (germ.coeffs.empty())
    return RaySum{eps, theta.to_precision(prec), germ.constant, BigFloat(prec)};
  size_t n = germ.coeffs.size();
  int M = static_cast<int>(n / 2);
  int L = static_cast<int>(n - 1) - M;
  PadeApproximant ap = pade(germ.coeffs, L, M);

  LaplaceConfig cfg = config;
  BigFloat res_scale(0L, prec);
  for (const auto& pl : ap.poles()) res_scale = max(res_scale, abs(pl.residue));
  for (const auto& pl : ap.poles())
    if (abs(pl.residue) >= res_scale * BigFloat(config.residue_gate, prec))
      cfg.singularities.push_back(pl.location);
  ComplexFn f = [ap](const BigComplex& w) { return ap.eval(w); };
  return laplace_sum(f, germ.constant, eps, theta, prec, cfg);
}

QuadratureResult hankel_quadrature(const ComplexFn& f, const BigComplex& chi,
                                   const BigComplex& eps, Precision prec,
                                   const HankelQuadConfig& config) {
  BigComplex dir = config.direction;
  if (dir.is_zero() || abs(dir).is_zero()) {
    if (chi.is_zero())
      throw std::invalid_argument("hankel_quadrature: need a cut direction for chi = 0");
    dir = chi;
  }
  dir = dir / abs(dir);
  BigComplex rate = dir / eps;
  if (rate.real().sign() <= 0)
    throw NumericalError("hankel_quadrature: e^(-w/eps) grows along the cut direction");

  double bits = static_cast<double>(prec) + config.tail_bits;
  BigFloat length = BigFloat(bits * 0.6931471805599453, prec) / rate.real();
  BigFloat h = config.half_width > 0 ? BigFloat(config.half_width, prec) : abs(eps) / 4L;

  ComplexFn g = [&](const BigComplex& w) { return exp(-w / eps) * f(w); };
  // Absolute tolerance keyed to the e^(-chi/eps) scale of the answer.
  BigFloat scale = abs(exp(-chi / eps));
  BigFloat tol = scale * BigFloat::pow2(-static_cast<long>(prec * 3 / 4), prec);
  return stadium_ray_integral(g, chi, dir, length, h, LoopOrientation::Anticlockwise, prec, tol);
}

BigComplex coefficients_via_hankel(const ComplexFn& f_x, const std::vector<HankelSite>& sites,
                                   unsigned long n, Precision prec,
                                   const CoeffHankelConfig& config) {
  if (n == 0) throw std::invalid_argument("coefficients_via_hankel: n must be >= 1");
  if (sites.empty()) throw std::invalid_argument("coefficients_via_hankel: no singularities given");

  // Work on the w = log x cylinder.
  std::vector<BigComplex> centers;
  for (const auto& s : sites) centers.push_back(log(s.x.to_precision(prec)));

  BigFloat h(config.half_width, prec);
  if (config.half_width <= 0) {
    // Quarter of the closest spacing between cut anchors, capped at 1/4.
    BigFloat closest(0.25, prec);
    for (size_t i = 0; i < centers.size(); ++i) {
      for (size_t j = i + 1; j < centers.size(); ++j)
        closest = min(closest, abs(centers[i] - centers[j]) / 4L);
      if (sites[i].cut_to) {
        BigComplex other = log(sites[i].cut_to->to_precision(prec));
        closest = min(closest, abs(centers[i] - other) / 4L);
      }
    }
    h = closest;
  }

  ComplexFn g = [&](const BigComplex& w) {
    return exp(-w * static_cast<long>(n)) * f_x(exp(w));
  };

  double bits = static_cast<double>(prec) + config.tail_bits;
  BigComplex acc(prec);
  BigFloat err(prec);
  for (size_t i = 0; i < sites.size(); ++i) {
    QuadratureResult q{BigComplex(prec), BigFloat(prec)};
    BigFloat tol = BigFloat::pow2(-static_cast<long>(prec * 3 / 4), prec) *
                   abs(exp(-centers[i] * static_cast<long>(n)));
    if (sites[i].cut_to) {
      BigComplex other = log(sites[i].cut_to->to_precision(prec));
      q = stadium_segment_integral(g, centers[i], other, h, LoopOrientation::Clockwise, prec, tol);
    } else {
      BigComplex dir = sites[i].direction.value_or(BigComplex(1L, 0L, prec));
      dir = dir / abs(dir);
      BigFloat rate = (dir * static_cast<long>(n)).real();
      if (rate.sign() <= 0)
        throw NumericalError("coefficients_via_hankel: e^(-wn) grows along the cut direction");
      BigFloat length = BigFloat(bits * 0.6931471805599453, prec) / rate;
      q = stadium_ray_integral(g, centers[i], dir, length, h, LoopOrientation::Clockwise, prec, tol);
    }
    acc += q.value;
    err += q.error;
  }
  BigComplex two_pi_i = BigComplex::i(prec) * BigFloat::pi(prec) * 2L;
  return acc / two_pi_i;
}

}  // namespace resurgo
