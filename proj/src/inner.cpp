#include "resurgo/inner.hpp"

#include <algorithm>
#include <cmath>

#include "resurgo/gammafn.hpp"

namespace resurgo {

GaussianRational snap_rational(const BigComplex& x, unsigned max_den, double tol) {
  if (abs(x.imag()).to_double() > tol)
    throw NumericalError("snap_rational: limit has an imaginary part");
  double v = x.real().to_double();
  // Best rational by continued fractions.
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = v;
  for (int it = 0; it < 64; ++it) {
    double a = std::floor(r);
    long ai = static_cast<long>(a);
    long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > static_cast<long>(max_den)) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = r - a;
    if (std::abs(static_cast<double>(p1) / q1 - v) < tol / 4 || frac < 1e-15) break;
    r = 1.0 / frac;
  }
  if (q1 == 0 || std::abs(static_cast<double>(p1) / q1 - v) > tol)
    throw NumericalError("snap_rational: no small rational within tolerance (non-algebraic local behaviour)");
  return GaussianRational(p1, q1);
}

LocalExponents local_exponents(const SingulantEquation& eq, const SingulantBranch& branch,
                               const RatFunc& y1) {
  Precision prec = branch.z_star.precision();
  LocalExponents out;
  out.gamma = branch.zero_order;
  out.delta = y1.is_zero() ? 0 : y1.pole_order(branch.z_star);

  // beta = lim (z-z*) a0'/a0 with a0'/a0 = -(chi''/2) Q''(chi') / Q'(chi').
  std::vector<BigComplex> samples;
  std::vector<BigFloat> radii;
  size_t first = std::min<size_t>(6, branch.path.samples.size() - 1);
  for (size_t k = first; k >= 2 && samples.size() < 5; --k) {
    const BigComplex& z = branch.path.samples[k];
    const BigComplex& lam = branch.chi_prime[k];
    Jet lj = singulant_prime_jet(eq, z, lam, 2);
    BigComplex chi2 = lj[1];  // chi''(z)
    Jet c = eq.at(z);
    Jet dc = jet_derivative(c);
    Jet ddc = jet_derivative(dc);
    BigComplex q1 = jet_eval(dc, lam);
    BigComplex q2 = jet_eval(ddc, lam);
    if (q1.is_zero()) continue;
    BigComplex m = -(z - branch.z_star) * chi2 * q2 / (q1 * 2L);
    samples.push_back(m);
    radii.push_back(abs(z - branch.z_star));
  }
  if (samples.empty()) throw NumericalError("local_exponents: no usable samples near z_star");
  BigComplex beta_lim = samples.size() > 1 ? richardson_limit(radii, samples) : samples[0];
  out.beta = snap_rational(beta_lim);
  out.alpha = (out.beta + GaussianRational(out.delta)) / GaussianRational(out.gamma);
  return out;
}

CoefficientRecurrence coefficient_recurrence(const ODESpec& spec, const GaussianRational& alpha) {
  if (spec.order != 2)
    throw std::invalid_argument(
        "coefficient_recurrence: closed-form recurrences require a second-order equation");
  CoefficientRecurrence rec;
  rec.p = spec.p(1) / spec.p(2);
  rec.q = spec.p(0) / spec.p(2);
  rec.alpha = alpha;
  return rec;
}

namespace {

// Coefficient of (z - z_star)^target in f, from its Laurent expansion.
BigComplex laurent_coeff(const RatFunc& f, const BigComplex& z_star, long target) {
  Precision prec = z_star.precision();
  if (f.is_zero()) return BigComplex(prec);
  long pole = 0;
  size_t need = static_cast<size_t>(std::max(4L, target + 16));
  Jet lau = f.laurent(z_star, need + 8, &pole);
  long idx = target + pole;
  if (idx < 0 || idx >= static_cast<long>(lau.size())) return BigComplex(prec);
  return lau[static_cast<size_t>(idx)];
}

}  // namespace

InnerLocalModel inner_local_model(const ODESpec& spec, const SingulantBranch& branch) {
  Precision prec = branch.z_star.precision();
  InnerLocalModel model;
  model.z_star = branch.z_star;
  model.gamma = branch.zero_order;
  model.chi0 = branch.leading;
  if (spec.order == 1) return model;
  if (spec.order != 2)
    throw std::invalid_argument("inner_local_model: implemented for first and second order");

  RatFunc P = spec.p(1) / spec.p(2);
  RatFunc Q = spec.p(0) / spec.p(2);
  long g = model.gamma;
  model.p0 = laurent_coeff(P, model.z_star, g - 1);
  model.q0 = laurent_coeff(Q, model.z_star, 2 * g - 2);
  // The stated vanishing orders are the minimum; more singular local forms
  // invalidate the rescaling.
  BigFloat tol = BigFloat::pow2(-(prec / 2), prec) *
                 max(BigFloat(1L, prec), max(abs(model.p0), abs(model.q0)));
  for (long j = 0; j < g - 1; ++j)
    if (abs(laurent_coeff(P, model.z_star, j)) > tol)
      throw NumericalError("inner_local_model: P more singular than the stated vanishing order");
  for (long j = 0; j < 2 * g - 2; ++j)
    if (abs(laurent_coeff(Q, model.z_star, j)) > tol)
      throw NumericalError("inner_local_model: Q more singular than the stated vanishing order");
  return model;
}

InnerProblem build_inner_problem(const ODESpec& spec, const InnerLocalModel& model,
                                 const PerturbativeSeries& series, const LocalExponents& exponents,
                                 int k) {
  Precision prec = model.z_star.precision();
  InnerProblem prob;
  prob.k = k;
  prob.alpha = exponents.alpha;
  long beta_eff = exponents.delta - k;  // z^-(delta-k) prefactor of phi_k
  long g = exponents.gamma;

  if (spec.order == 2) {
    const BigComplex& chi0 = model.chi0;
    BigComplex A0 = model.q0;
    BigComplex A1 = -chi0 * model.p0 * g;
    BigComplex A2 = chi0 * chi0 * g * g;
    BigComplex B0 = -chi0 * model.p0 * (g + beta_eff);
    BigComplex B1 = chi0 * chi0 * g * (g + 1 + 2 * beta_eff);
    BigComplex C0 = chi0 * chi0 * beta_eff * (beta_eff + 1);
    prob.ode = {Jet{C0}, Jet{B0, B1}, Jet{A0, A1, A2}};
  } else if (spec.order == 1) {
    BigComplex gc(g, 0L, prec);
    prob.ode = {Jet{BigComplex(-beta_eff, 0L, prec)}, Jet{gc, -gc}};
  } else {
    throw std::invalid_argument("build_inner_problem: implemented for first and second order");
  }

  // Initial data phi_k^(j)(0) = [ (z-z*)^(k-delta) ] y_{j+1}(z) chi_loc(z)^j
  // with the monomial local model chi_loc = chi0 (z-z*)^gamma.
  for (int j = 0; j < spec.order; ++j) {
    BigComplex val(prec);
    if (static_cast<size_t>(j + 1) < series.terms.size()) {
      long target = (k - exponents.delta) - g * j;
      val = laurent_coeff(series.terms[j + 1], model.z_star, target) *
            pow(model.chi0, static_cast<long>(j));
    }
    prob.initial.push_back(val);
  }
  return prob;
}

Jet solve_inner_series(const InnerProblem& problem, int M) {
  size_t D = problem.ode.size() - 1;
  if (problem.ode.empty() || problem.initial.size() != D)
    throw std::invalid_argument("solve_inner_series: malformed problem");
  Precision prec = problem.initial.empty() ? default_precision() : problem.initial[0].precision();
  const Jet& top = problem.ode[D];
  if (top.empty() || abs(top[0]).is_zero())
    throw NumericalError(
        "solve_inner_series: s = 0 is a singular point (nested boundary layer)");

  Jet phi(problem.initial);
  phi.resize(static_cast<size_t>(M) + 1, BigComplex(prec));
  // Falling factorial P(n, d) = n (n-1) ... (n-d+1) as BigComplex.
  auto falling = [&](long n, size_t d) {
    BigComplex r(1L, 0L, prec);
    for (size_t j = 0; j < d; ++j) r *= BigComplex(n - static_cast<long>(j), 0L, prec);
    return r;
  };
  for (long t = 0; t + static_cast<long>(D) <= M; ++t) {
    BigComplex rhs(prec);
    for (size_t d = 0; d <= D; ++d) {
      const Jet& poly = problem.ode[d];
      for (size_t m = 0; m < poly.size(); ++m) {
        long j = t - static_cast<long>(m) + static_cast<long>(d);
        if (j < 0) continue;
        if (d == D && m == 0) continue;  // the unknown phi_{t+D}
        if (static_cast<size_t>(j) >= phi.size()) continue;
        rhs += poly[m] * phi[static_cast<size_t>(j)] * falling(j, d);
      }
    }
    BigComplex denom = top[0] * falling(t + static_cast<long>(D), D);
    phi[static_cast<size_t>(t) + D] = -rhs / denom;
  }
  return phi;
}

std::vector<BigComplex> connection_constants(const Jet& phi_coeffs, const BigComplex& alpha,
                                             int depth, const ConnectionFitConfig& config) {
  if (phi_coeffs.size() < 24)
    throw std::invalid_argument("connection_constants: need more coefficients");
  Precision prec = phi_coeffs[0].precision();
  size_t n1 = phi_coeffs.size();
  size_t n0 = static_cast<size_t>(static_cast<double>(n1) * (1.0 - config.window_fraction));

  BigFloat scale = jet_norm(phi_coeffs);
  if (scale.is_zero()) return std::vector<BigComplex>(static_cast<size_t>(depth) + 1, BigComplex(prec));

  // g_i(n) = Gamma(n + alpha - i) / (Gamma(alpha - i) n!).
  auto g = [&](const BigComplex& a_i, unsigned long n) {
    return gamma(a_i + BigComplex(static_cast<long>(n), 0L, prec)) * reciprocal_gamma(a_i) /
           BigComplex(factorial(n, prec), BigFloat(0L, prec));
  };
  auto is_nonpos_int = [&](const BigComplex& a) {
    if (!abs(a.imag()).is_zero() && abs(a.imag()) > BigFloat::pow2(-(prec / 2), prec)) return false;
    double v = a.real().to_double();
    return v < 0.5 && std::abs(v - std::round(v)) < 1e-12;
  };

  Jet work = phi_coeffs;
  std::vector<BigComplex> out;
  for (int i = 0; i <= depth; ++i) {
    BigComplex ai = alpha - BigComplex(static_cast<long>(i), 0L, prec);
    if (is_nonpos_int(ai)) break;  // constants beyond the identifiable range
    auto extract = [&](size_t lo, size_t hi) {
      std::vector<BigComplex> seq;
      std::vector<BigFloat> xs;
      for (size_t n = lo; n < hi; ++n) {
        seq.push_back(work[n] / g(ai, n));
        xs.push_back(BigFloat(1L, prec) / static_cast<long>(n));
      }
      size_t use = std::min<size_t>(seq.size(), static_cast<size_t>(config.richardson_depth) + 1);
      std::vector<BigComplex> tail(seq.end() - use, seq.end());
      std::vector<BigFloat> xt(xs.end() - use, xs.end());
      return richardson_limit(xt, tail);
    };
    BigComplex c_full = extract(n0, n1);
    BigComplex c_half = extract(n0 - (n1 - n0) / 2, n1 - (n1 - n0) / 2);
    if (i == 0) {
      BigFloat drift = abs(c_full - c_half);
      BigFloat floor_scale = scale * BigFloat::pow2(-(prec / 2), prec);
      if (drift > BigFloat(config.stability_tol, prec) * max(abs(c_full), floor_scale) &&
          drift > floor_scale)
        throw NumericalError(
            "connection_constants: fit unstable (wrong alpha or a closer singularity)");
    }
    out.push_back(c_full);
    for (size_t n = 0; n < work.size(); ++n) work[n] -= c_full * g(ai, n);
  }
  return out;
}

std::vector<BigComplex> frobenius_ratios_at_one(const InnerProblem& problem, int count) {
  Precision prec = problem.initial.empty() ? default_precision() : problem.initial[0].precision();
  size_t D = problem.ode.size() - 1;
  BigComplex alpha = problem.alpha.value(prec);

  // Recast the ODE polynomials in u = 1 - s; d/ds = -d/du.
  std::vector<Jet> tilde;
  BigFloat scale(0L, prec);
  for (const auto& poly : problem.ode) {
    Jet t(poly.size(), BigComplex(prec));
    for (size_t m = 0; m < poly.size(); ++m) {
      // (1 - u)^m expanded by binomials.
      for (size_t j = 0; j <= m; ++j) {
        mpz_class bin;
        mpz_bin_uiui(bin.get_mpz_t(), m, j);
        mpq_class c = mpq_class(bin) * ((j % 2) ? -1 : 1);
        t[j] += poly[m] * GaussianRational(c).value(prec);
      }
    }
    scale = max(scale, jet_norm(t));
    tilde.push_back(std::move(t));
  }
  BigFloat zero_tol = scale * BigFloat::pow2(-(prec / 2), prec);

  auto falling = [&](const BigComplex& x, size_t d) {
    BigComplex r(1L, 0L, prec);
    for (size_t j = 0; j < d; ++j) r *= x - BigComplex(static_cast<long>(j), 0L, prec);
    return r;
  };

  // Apply the operator to sum_j b_j u^(-alpha+j). A term (d, l, j) lands on
  // the power offset q = j + l - d. Equation q determines the highest b_j it
  // reaches; at a regular singular point the top coefficient of tilde[D]
  // vanishes at u = 0, so offsets resolve b_1, b_2, ... in turn until a
  // resonance (integer alpha) kills the pivot.
  std::vector<BigComplex> b{BigComplex(1L, 0L, prec)};
  std::vector<BigComplex> ratios;
  for (long q = 0; static_cast<long>(ratios.size()) < count && q < count + 2 * static_cast<long>(D) + 4;
       ++q) {
    long jmax = q + static_cast<long>(D);
    std::vector<BigComplex> K(static_cast<size_t>(jmax) + 1, BigComplex(prec));
    for (size_t d = 0; d <= D; ++d) {
      const Jet& poly = tilde[d];
      for (size_t l = 0; l < poly.size(); ++l) {
        long j = q + static_cast<long>(d) - static_cast<long>(l);
        if (j < 0 || j > jmax) continue;
        BigComplex sgn = (d % 2) ? BigComplex(-1L, 0L, prec) : BigComplex(1L, 0L, prec);
        K[static_cast<size_t>(j)] +=
            poly[l] * sgn * falling(-alpha + BigComplex(j, 0L, prec), d);
      }
    }
    long pivot = -1;
    for (long j = jmax; j >= 0; --j)
      if (abs(K[static_cast<size_t>(j)]) > zero_tol) {
        pivot = j;
        break;
      }
    // Equations whose pivot is already known are consistency checks (the
    // indicial relation is the first); a pivot beyond the next unknown means
    // a resonance swallowed the chain.
    if (pivot < static_cast<long>(b.size())) continue;
    if (pivot > static_cast<long>(b.size())) break;
    BigComplex rhs(prec);
    for (long j = 0; j < pivot; ++j)
      rhs += K[static_cast<size_t>(j)] * b[static_cast<size_t>(j)];
    b.push_back(-rhs / K[static_cast<size_t>(pivot)]);
    ratios.push_back(b.back());
  }
  return ratios;
}

std::vector<CoefficientTrack> propagate_coefficients(const SingulantEquation& eq,
                                                     const CoefficientRecurrence& rec,
                                                     const std::vector<BigComplex>& init_values,
                                                     const BigComplex& lambda_start,
                                                     const ComplexPath& path) {
  if (path.samples.size() < 2) throw std::invalid_argument("propagate_coefficients: short path");
  Precision prec = path.samples[0].precision();
  size_t count = init_values.size();
  long stop_at = -1;
  for (long u : rec.unconstrained())
    if (u >= 0) stop_at = u;
  if (stop_at >= 0 && static_cast<long>(count) > stop_at)
    count = static_cast<size_t>(stop_at);  // a_n with n = alpha is not governed

  std::vector<CoefficientTrack> tracks(count);
  for (size_t i = 0; i < count; ++i) {
    tracks[i].index = static_cast<int>(i);
    tracks[i].initial_value = init_values[i];
    tracks[i].values.push_back(init_values[i]);
  }

  const size_t kJet = 18;
  BigComplex lam = lambda_start;
  std::vector<BigComplex> cur(init_values.begin(), init_values.begin() + count);
  BigComplex alpha = rec.alpha.value(prec);

  for (size_t seg = 0; seg + 1 < path.samples.size(); ++seg) {
    BigComplex z = path.samples[seg];
    BigComplex target = path.samples[seg + 1];
    int guard = 0;
    while (true) {
      if (++guard > (1 << 12))
        throw NumericalError("propagate_coefficients: step underflow");
      // Jets at z: lambda, F = -(d/dl)(q~)(lambda) with q~ = l^2 - p l + q,
      // i.e. F = p - 2 lambda; chi'' = lambda'.
      Jet lj = singulant_prime_jet(eq, z, lam, kJet);
      long pp = 0, qq = 0;
      Jet pj = rec.p.is_zero() ? Jet(kJet, BigComplex(prec)) : rec.p.laurent(z, kJet, &pp);
      if (pp > 0) throw NumericalError("propagate_coefficients: P singular on the path");
      Jet Fj = jet_sub(pj, jet_scale(lj, BigComplex(2L, 0L, prec)));
      Jet chi2 = jet_derivative(lj);
      chi2.resize(kJet, BigComplex(prec));
      Jet gj = jet_div(chi2, Fj, kJet);  // a0'/a0 = chi''/F
      (void)qq;

      // Advance all tracks by one jet step.
      std::vector<Jet> ajets(count);
      for (size_t i = 0; i < count; ++i) {
        Jet a(kJet + 2, BigComplex(prec));
        a[0] = cur[i];
        Jet src;  // a_{i-1}'' / ((i - alpha) F)
        if (i > 0) {
          Jet dd = jet_derivative(jet_derivative(ajets[i - 1]));
          dd.resize(kJet, BigComplex(prec));
          Jet den = jet_scale(Fj, BigComplex(static_cast<long>(i), 0L, prec) - alpha);
          src = jet_div(dd, den, kJet);
        }
        for (size_t m = 0; m + 1 < a.size() && m < kJet; ++m) {
          BigComplex acc(prec);
          for (size_t l = 0; l <= m && l < gj.size(); ++l) acc += gj[l] * a[m - l];
          if (!src.empty() && m < src.size()) acc -= src[m];
          a[m + 1] = acc / static_cast<long>(m + 1);
        }
        ajets[i] = std::move(a);
      }

      // Step size from the most restrictive jet tail.
      BigFloat rho(1e300, prec);
      auto update_rho = [&](const Jet& j) {
        for (size_t k2 = kJet / 2; k2 < j.size(); ++k2) {
          BigFloat mag = abs(j[k2]);
          if (mag.is_zero()) continue;
          BigFloat base = max(jet_norm(j), BigFloat(1L, prec));
          rho = min(rho, pow(base / mag, BigFloat(1.0 / static_cast<double>(k2), prec)));
        }
      };
      update_rho(lj);
      for (const auto& a : ajets) update_rho(a);

      BigComplex dz = target - z;
      BigFloat hmax = rho * BigFloat(0.25, prec);
      bool final_step = true;
      if (abs(dz) > hmax && hmax.sign() > 0) {
        dz = dz * (hmax / abs(dz));
        final_step = false;
      }
      BigComplex z_next = z + dz;
      for (size_t i = 0; i < count; ++i) cur[i] = jet_eval(ajets[i], dz);
      lam = continue_root(eq, z_next, jet_eval(lj, dz));
      z = z_next;
      if (final_step) break;
    }
    for (size_t i = 0; i < count; ++i) tracks[i].values.push_back(cur[i]);
  }
  return tracks;
}

}  // namespace resurgo
