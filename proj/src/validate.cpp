#include "resurgo/validate.hpp"

#include <algorithm>

#include "resurgo/gammafn.hpp"

namespace resurgo {

JetFn ratfunc_jet(RatFunc f, BigComplex scale) {
  return [f = std::move(f), scale = std::move(scale)](const BigComplex& z0, size_t n) {
    Precision prec = z0.precision();
    if (f.is_zero() || scale.is_zero()) return Jet(n, BigComplex(prec));
    long pole = 0;
    Jet j = f.laurent(z0, n, &pole);
    if (pole > 0) throw NumericalError("ratfunc_jet: coefficient pole at expansion point");
    return jet_scale(j, scale);
  };
}

JetFn ratfunc_jet(RatFunc f) {
  Precision prec = default_precision();
  return ratfunc_jet(std::move(f), BigComplex(1L, 0L, prec));
}

LinearODE parametric_ode(const ODESpec& spec, const BigComplex& eps) {
  LinearODE ode;
  BigComplex ep(1L, 0L, eps.precision());
  for (int d = 0; d <= spec.order; ++d) {
    ode.coeffs.push_back(ratfunc_jet(spec.p(d), ep));
    ep *= eps;
  }
  // F(z; eps) collapses to one coefficient function at fixed eps.
  std::vector<RatFunc> forcing = spec.forcing;
  BigComplex e2(1L, 0L, eps.precision());
  ode.rhs = [forcing, eps](const BigComplex& z0, size_t n) {
    Precision prec = z0.precision();
    Jet acc(n, BigComplex(prec));
    BigComplex ep2(1L, 0L, prec);
    for (const auto& fk : forcing) {
      if (!fk.is_zero()) {
        long pole = 0;
        Jet j = fk.laurent(z0, n, &pole);
        if (pole > 0) throw NumericalError("parametric_ode: forcing pole on the path");
        acc = jet_add(acc, jet_scale(j, ep2));
      }
      ep2 *= eps;
    }
    return acc;
  };
  return ode;
}

ODESolutionSample integrate_linear_ode(const LinearODE& ode, const ComplexPath& path,
                                       const std::vector<BigComplex>& initial, Precision prec,
                                       const TaylorMarchConfig& config) {
  int D = ode.order();
  if (static_cast<int>(initial.size()) != D)
    throw std::invalid_argument("integrate_linear_ode: need D initial values y..y^(D-1)");
  size_t K = static_cast<size_t>(config.jet_order);

  ODESolutionSample out;
  out.path.samples.push_back(path.samples.front());
  out.states.push_back(initial);
  out.step_errors.push_back(BigFloat(prec));

  std::vector<BigComplex> state = initial;
  BigComplex z = path.samples.front();
  long steps = 0;
  BigFloat tol = BigFloat::pow2(-(prec / 2), prec);

  auto falling = [&](long n, int d) {
    BigComplex r(1L, 0L, prec);
    for (int j = 0; j < d; ++j) r *= BigComplex(n - j, 0L, prec);
    return r;
  };

  for (size_t seg = 0; seg + 1 < path.samples.size(); ++seg) {
    BigComplex target = path.samples[seg + 1];
    while (true) {
      if (++steps > config.max_steps)
        throw NumericalError("integrate_linear_ode: step budget exhausted");
      // Coefficient jets at z.
      std::vector<Jet> A;
      A.reserve(D + 1);
      for (const auto& fn : ode.coeffs) A.push_back(fn(z, K));
      Jet B = ode.rhs ? ode.rhs(z, K) : Jet(K, BigComplex(prec));
      if (abs(A[D][0]).is_zero())
        throw NumericalError("integrate_linear_ode: leading coefficient vanishes on the path");

      // Taylor coefficients c_m of y at z: c_j = y^(j)/j! for j < D, then the
      // ODE recurrence upward.
      Jet c(K + static_cast<size_t>(D), BigComplex(prec));
      BigFloat factj(1L, prec);
      for (int j = 0; j < D; ++j) {
        if (j > 1) factj = factj * j;
        c[j] = state[j] / BigComplex(factorial(j, prec), BigFloat(0L, prec));
      }
      for (long m = 0; m + D < static_cast<long>(c.size()); ++m) {
        BigComplex rhs = m < static_cast<long>(B.size()) ? B[m] : BigComplex(prec);
        for (int d = 0; d <= D; ++d) {
          const Jet& Ad = A[d];
          for (size_t l = 0; l < Ad.size(); ++l) {
            long j = m - static_cast<long>(l) + d;
            if (j < 0 || j >= static_cast<long>(c.size())) continue;
            if (d == D && l == 0) continue;  // unknown c_{m+D}
            if (j > m + D) continue;
            rhs -= Ad[l] * c[static_cast<size_t>(j)] * falling(j, d);
          }
        }
        c[static_cast<size_t>(m) + D] = rhs / (A[D][0] * falling(m + D, D));
      }

      // Radius estimate from the jet tail; step a safe fraction of it.
      BigFloat cnorm = max(jet_norm(c), BigFloat::pow2(-(prec * 2), prec));
      BigFloat rho(1e300, prec);
      for (size_t k2 = c.size() / 2; k2 < c.size(); ++k2) {
        BigFloat mag = abs(c[k2]);
        if (mag.is_zero()) continue;
        rho = min(rho, pow(cnorm / mag, BigFloat(1.0 / static_cast<double>(k2), prec)));
      }
      BigComplex dz = target - z;
      BigFloat hmax = rho * BigFloat(config.safety, prec);
      bool final_step = true;
      if (abs(dz) > hmax && hmax.sign() > 0 && hmax.is_finite()) {
        dz = dz * (hmax / abs(dz));
        final_step = false;
      }

      // Halve until the truncation tail is below tolerance.
      BigFloat scale = max(abs(state[0]), cnorm * BigFloat::pow2(-8, prec));
      for (int halve = 0;; ++halve) {
        if (halve > 80) throw NumericalError("integrate_linear_ode: step-size underflow");
        BigFloat h = abs(dz);
        BigFloat tail(0L, prec);
        BigFloat hp = pow(h, static_cast<long>(c.size() - 3));
        for (size_t k2 = c.size() - 3; k2 < c.size(); ++k2) {
          tail += abs(c[k2]) * hp;
          hp *= h;
        }
        if (tail <= tol * scale || h.is_zero()) {
          out.step_errors.push_back(tail);
          break;
        }
        dz = dz / 2L;
        final_step = final_step && false;
      }

      // Advance the state: y^(j)(z+dz) from derivative jets.
      Jet cur = c;
      std::vector<BigComplex> next(D);
      for (int j = 0; j < D; ++j) {
        next[j] = jet_eval(cur, dz);
        cur = jet_derivative(cur);
      }
      state = std::move(next);
      z += dz;
      if (final_step && abs(z - target) <= BigFloat::pow2(-(prec - 8), prec)) break;
      if (abs(z - target).is_zero()) break;
    }
    out.path.samples.push_back(z);
    out.states.push_back(state);
  }
  out.epsilon = BigComplex(prec);
  return out;
}

ODESolutionSample integrate_ode(const ODESpec& spec, const BigComplex& eps,
                                const ComplexPath& path, const std::vector<BigComplex>& initial,
                                const TaylorMarchConfig& config) {
  ODESolutionSample s =
      integrate_linear_ode(parametric_ode(spec, eps), path, initial, eps.precision(), config);
  s.epsilon = eps;
  return s;
}

JumpMeasurement measure_jump(const ComplexFn& yb, const BigComplex& y0, const BigComplex& eps,
                             const BigFloat& theta_below, const BigFloat& theta_above,
                             Precision prec, const LaplaceConfig& config) {
  RaySum below = laplace_sum(yb, y0, eps, theta_below, prec, config);
  RaySum above = laplace_sum(yb, y0, eps, theta_above, prec, config);
  JumpMeasurement m;
  m.jump = below.value - above.value;
  // Quadrature noise plus cancellation loss of the matched dominant parts.
  m.noise = below.error + above.error +
            (abs(below.value) + abs(above.value)) * BigFloat::pow2(-(prec - 6), prec);
  m.below_noise = abs(m.jump) < m.noise * 10L;
  return m;
}

JumpMeasurement measure_jump(const BorelGerm& germ, const BigComplex& eps,
                             const BigFloat& theta_below, const BigFloat& theta_above,
                             Precision prec, const LaplaceConfig& config) {
  if (germ.coeffs.empty()) throw std::invalid_argument("measure_jump: empty germ");
  size_t n = germ.coeffs.size();
  int M = static_cast<int>(n / 2);
  int L = static_cast<int>(n - 1) - M;
  PadeApproximant ap = pade(germ.coeffs, L, M);
  ComplexFn f = [ap](const BigComplex& w) { return ap.eval(w); };
  return measure_jump(f, germ.constant, eps, theta_below, theta_above, prec, config);
}

namespace {

struct ModelFitScratch {
  BigComplex chi, alpha, c_lead, c_const;
  BigFloat residual;
};

// Model values on the window for the linear least-squares basis.
ModelFitScratch fit_model(LateModel model, const Jet& f, size_t n0, size_t n1, Precision prec,
                          int depth) {
  ModelFitScratch out{BigComplex(prec), BigComplex(prec), BigComplex(prec), BigComplex(prec),
                      BigFloat(1e300, prec)};
  if (model == LateModel::Power) {
    SingularityOrderFit base = estimate_singularity_order(f);
    out.chi = base.chi;
    out.alpha = base.alpha;
    out.residual = base.residual;
    // Amplitude at the window end.
    size_t n = n1 - 1;
    out.c_lead = f[n] * pow(base.chi, static_cast<long>(n)) *
                 BigComplex(factorial(n, prec), BigFloat(0L, prec)) * gamma(base.alpha) /
                 gamma(base.alpha + BigComplex(static_cast<long>(n), 0L, prec));
    return out;
  }

  // chi from the accelerated ratio with the model's algebraic correction.
  std::vector<BigComplex> ratio;
  std::vector<BigFloat> xs;
  for (size_t n = n0; n + 1 < n1; ++n) {
    BigComplex r = f[n + 1] / f[n];
    if (model != LateModel::LogOverS)
      r = r * BigComplex(static_cast<long>(n + 1), 0L, prec) /
          BigComplex(static_cast<long>(n), 0L, prec);
    ratio.push_back(r);
    xs.push_back(BigFloat(1L, prec) / static_cast<long>(n));
  }
  size_t use = std::min<size_t>(ratio.size(), static_cast<size_t>(depth) + 1);
  std::vector<BigComplex> tail(ratio.end() - use, ratio.end());
  std::vector<BigFloat> xt(xs.end() - use, xs.end());
  BigComplex chi_inv = richardson_limit(xt, tail);
  if (chi_inv.is_zero()) return out;
  out.chi = BigComplex(1L, 0L, prec) / chi_inv;

  // Least squares on t_n = f_n chi^n n^p against {log n, 1, log n / n, 1/n}.
  auto weight = [&](size_t n) {
    return model == LateModel::LogOverS ? BigComplex(1L, 0L, prec)
                                        : BigComplex(static_cast<long>(n), 0L, prec);
  };
  const size_t R = 4;
  std::vector<BigComplex> ATA(R * R, BigComplex(prec));
  std::vector<BigComplex> ATb(R, BigComplex(prec));
  auto basis = [&](size_t n, size_t r) {
    BigFloat ln = log(BigFloat(static_cast<long>(n), prec));
    switch (r) {
      case 0: return BigComplex(ln, BigFloat(0L, prec));
      case 1: return BigComplex(1L, 0L, prec);
      case 2: return BigComplex(ln, BigFloat(0L, prec)) / static_cast<long>(n);
      default: return BigComplex(1L, 0L, prec) / static_cast<long>(n);
    }
  };
  std::vector<BigComplex> t_vals(n1, BigComplex(prec));
  BigComplex chin = pow(out.chi, static_cast<long>(n0));
  for (size_t n = n0; n < n1; ++n) {
    t_vals[n] = f[n] * chin * weight(n);
    chin *= out.chi;
    for (size_t r = 0; r < R; ++r) {
      for (size_t s = 0; s < R; ++s) ATA[r * R + s] += conj(basis(n, r)) * basis(n, s);
      ATb[r] += conj(basis(n, r)) * t_vals[n];
    }
  }
  std::vector<BigComplex> coef;
  try {
    coef = solve_linear(std::move(ATA), std::move(ATb));
  } catch (const NumericalError&) {
    return out;
  }
  // Model interpretation: t_n ~ C log n + C c.
  BigComplex C = coef[0];
  bool has_log = true;
  if (model == LateModel::LogSingularity) {
    C = coef[1];
    has_log = false;
  }
  if (abs(C).is_zero()) return out;
  out.c_lead = C;
  out.c_const = has_log ? coef[1] / C : BigComplex(prec);

  BigFloat res(0L, prec);
  for (size_t n = n0; n < n1; ++n) {
    BigComplex model_val(prec);
    for (size_t r = 0; r < R; ++r) model_val += coef[r] * basis(n, r);
    if (model == LateModel::LogSingularity) {
      // Pure 1/(n chi^n): the log parts must be noise for this model.
      model_val = coef[1] + coef[3] / static_cast<long>(n);
    }
    BigFloat denom = max(abs(t_vals[n]), BigFloat::pow2(-(prec * 2), prec));
    res = max(res, abs(t_vals[n] - model_val) / denom);
  }
  // A log model with a negligible log amplitude is really the plain one;
  // penalize so selection prefers the simpler family.
  if (model == LateModel::LogSquared || model == LateModel::LogOverS) {
    BigFloat lead = abs(coef[0]) * log(BigFloat(static_cast<long>(n1), prec));
    if (lead < abs(coef[1]) * BigFloat(1e-6, prec)) res = max(res, BigFloat(1.0, prec));
  }
  out.residual = res;
  return out;
}

}  // namespace

const char* late_model_name(LateModel m) {
  switch (m) {
    case LateModel::Power: return "power";
    case LateModel::LogSingularity: return "log";
    case LateModel::LogSquared: return "log^2";
    case LateModel::LogOverS: return "log-over-s";
  }
  return "?";
}

LateTermFit late_term_fit(const Jet& coeffs, const std::vector<LateModel>& candidates,
                          const LateFitConfig& config) {
  if (coeffs.size() < 40) throw std::invalid_argument("late_term_fit: need at least 40 coefficients");
  Precision prec = coeffs[0].precision();
  size_t n1 = coeffs.size();
  size_t n0 = static_cast<size_t>(static_cast<double>(n1) * (1.0 - config.window_fraction));
  if (n0 < 2) n0 = 2;

  LateTermFit best;
  best.residual = BigFloat(1e300, prec);
  bool any = false;
  for (LateModel m : candidates) {
    ModelFitScratch s;
    try {
      s = fit_model(m, coeffs, n0, n1, prec, config.richardson_depth);
    } catch (const NumericalError&) {
      continue;
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (!any || s.residual < best.residual) {
      any = true;
      best.model = m;
      best.chi = s.chi;
      best.alpha = s.alpha;
      best.c_lead = s.c_lead;
      best.c_const = s.c_const;
      best.residual = s.residual;
      best.window_begin = n0;
      best.window_end = n1;
    }
  }
  if (!any || best.residual > BigFloat(config.residual_threshold, prec))
    throw NumericalError("late_term_fit: no candidate model below the residual threshold");
  return best;
}

}  // namespace resurgo
