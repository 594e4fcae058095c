#include "resurgo/transseries.hpp"

#include <algorithm>

#include "resurgo/gammafn.hpp"

namespace resurgo {

size_t TransSeriesComponent::sample_index(const BigComplex& z) const {
  Precision prec = z.precision();
  size_t best = SIZE_MAX;
  BigFloat best_d(1e300, prec);
  for (size_t k = offset; k < branch.path.samples.size(); ++k) {
    BigFloat d = abs(branch.path.samples[k] - z);
    if (d < best_d) {
      best_d = d;
      best = k;
    }
  }
  BigFloat tol = BigFloat(1e-9, prec) * max(BigFloat(1L, prec), abs(z));
  if (best == SIZE_MAX || best_d > tol)
    throw std::invalid_argument("TransSeriesComponent: z is not a sample of the component path");
  return best;
}

BigComplex TransSeriesComponent::chi_at(const BigComplex& z) const {
  return branch.chi[sample_index(z)];
}

BigComplex TransSeriesComponent::track_at(size_t i, const BigComplex& z) const {
  size_t k = sample_index(z);
  if (i >= tracks.size()) throw std::out_of_range("TransSeriesComponent: no such track");
  return tracks[i].values[k - offset];
}

BigComplex jump_prefactor(const BigComplex& alpha, const BigComplex& eps, const BigComplex& chi,
                          const std::vector<BigComplex>& a_values) {
  Precision prec = eps.precision();
  BigComplex two_pi_i = BigComplex::i(prec) * BigFloat::pi(prec) * 2L;
  BigComplex one(1L, 0L, prec);
  BigComplex sum(prec);
  BigComplex epow(1L, 0L, prec);
  for (size_t i = 0; i < a_values.size(); ++i) {
    sum += epow * a_values[i] * reciprocal_gamma(alpha - BigComplex(static_cast<long>(i), 0L, prec));
    epow *= eps;
  }
  return two_pi_i * exp(-chi / eps) * pow(eps, one - alpha) * sum;
}

BigComplex stokes_jump(const TransSeriesComponent& component, const BigComplex& z,
                       const BigComplex& eps, int order) {
  size_t k = component.sample_index(z);
  std::vector<BigComplex> a;
  for (size_t i = 0; i < component.tracks.size() && i <= static_cast<size_t>(order); ++i)
    a.push_back(component.tracks[i].values[k - component.offset]);
  Precision prec = eps.precision();
  return jump_prefactor(component.exponents.alpha_value(prec), eps, component.branch.chi[k], a);
}

BigComplex corollary_switch(const BigComplex& alpha, const BigComplex& a0, const BigComplex& chi,
                            const BigComplex& eps) {
  return jump_prefactor(alpha, eps, chi, {a0});
}

SwitchForm general_switch(const LateTermFit& fit, const BigComplex& chi, const BigComplex& eps) {
  Precision prec = eps.precision();
  SwitchForm out;
  BigComplex two_pi_i = BigComplex::i(prec) * BigFloat::pi(prec) * 2L;
  BigComplex expf = exp(-chi / eps);
  BigComplex log_eps = log(eps);
  BigComplex log_chi = log(chi);

  switch (fit.model) {
    case LateModel::Power: {
      // g(n, z) = (n/chi)^alpha a0 / Gamma(alpha): reduces to the power-law
      // jump through the shared prefactor (a0 = C (-chi)^alpha).
      BigComplex a0 = fit.c_lead * pow(-chi, fit.alpha);
      out.value = jump_prefactor(fit.alpha, eps, chi, {a0});
      out.coeff = a0 * reciprocal_gamma(fit.alpha);
      out.eps_power = 1;  // nominal; the true power is 1 - alpha
      out.log_power = 0;
      return out;
    }
    case LateModel::LogSingularity: {
      // f_n = C/(n chi^n): g = C.
      out.value = two_pi_i * eps * fit.c_lead * expf;
      out.coeff = fit.c_lead;
      out.eps_power = 1;
      out.log_power = 0;
      return out;
    }
    case LateModel::LogSquared: {
      // f_n = C(log n + c)/(n chi^n): g(chi/eps) = C(log chi + c - log eps).
      BigComplex bracket = log_chi + fit.c_const - log_eps;
      out.value = two_pi_i * eps * fit.c_lead * bracket * expf;
      out.coeff = -fit.c_lead;  // leading term -C log(eps)
      out.eps_power = 1;
      out.log_power = 1;
      return out;
    }
    case LateModel::LogOverS: {
      // f_n = C(log n + c)/chi^n: g(n) = C n (log n + c), so
      // g(chi/eps) = C (chi/eps)(log chi + c - log eps).
      BigComplex bracket = log_chi + fit.c_const - log_eps;
      out.value = two_pi_i * fit.c_lead * chi * bracket * expf;
      out.coeff = -fit.c_lead * chi;  // leading term -C chi log(eps)
      out.eps_power = 0;
      out.log_power = 1;
      return out;
    }
  }
  throw std::logic_error("general_switch: bad model");
}

BigComplex first_order_closed_form(const RatFunc& G, const RatFunc& H, const BigComplex& w,
                                   const BigComplex& z) {
  Precision prec = z.precision();
  if (G.is_zero()) throw std::invalid_argument("first_order_closed_form: G must be nonzero");
  BigFloat tol = BigFloat::pow2(-(prec * 3 / 4), prec) * max(BigFloat(1L, prec), abs(w));

  for (long pieces = 8; pieces <= 4096; pieces *= 4) {
    try {
      BigComplex zeta = z;
      BigComplex integral(prec);  // int_z^zeta G
      for (long kstep = 1; kstep <= pieces; ++kstep) {
        BigComplex target = -w * kstep / pieces;
        for (int it = 0;; ++it) {
          if (it > 60)
            throw NumericalError("first_order_closed_form: Newton stalled (near a turning point)");
          BigComplex err = integral - target;
          if (abs(err) <= tol) break;
          BigComplex g = G.eval(zeta);
          if (g.is_zero())
            throw NumericalError("first_order_closed_form: chi' vanished (turning point)");
          BigComplex zeta_next = zeta - err / g;
          ComplexFn gfn = [&G](const BigComplex& t) { return G.eval(t); };
          integral += integrate_segment(gfn, zeta, zeta_next, prec, tol / 4L).value;
          zeta = zeta_next;
        }
      }
      return H.eval(zeta) / G.eval(zeta);
    } catch (const NumericalError&) {
      if (pieces * 4 > 4096) throw;
    }
  }
  throw NumericalError("first_order_closed_form: Newton homotopy failed");
}

BigComplex inhomogeneous_borel_integral(const ParametricFn& H_B, const ComplexFn& H0,
                                        const BigComplex& w, const BigComplex& z, Precision prec) {
  BigComplex a = z - w;
  BigComplex b = z;
  BigComplex head = H0(a);
  if (w.is_zero()) return head;

  // Route around t = 0, where eps-dependent forcings are typically singular.
  std::vector<BigComplex> waypoints{a};
  BigComplex dir = (b - a) / abs(b - a);
  BigFloat t_on = ((-a) * conj(dir)).real();
  BigFloat seg_len = abs(b - a);
  BigFloat clearance = seg_len / 4L;
  if (t_on.sign() > 0 && t_on < seg_len) {
    BigComplex closest = a + dir * t_on;
    if (abs(closest) < clearance) {
      BigComplex normal = BigComplex::i(prec) * dir;
      // Detour on the side away from the origin.
      BigComplex side = (closest - BigComplex(prec));
      if (side.is_zero() || (side * conj(normal)).real().sign() < 0) normal = -normal;
      waypoints.push_back(closest + normal * clearance);
    }
  }
  waypoints.push_back(b);

  ComplexFn f = [&](const BigComplex& t) { return H_B(w - z + t, t); };
  BigFloat tol = BigFloat::pow2(-(prec * 3 / 4), prec);
  QuadratureResult q = integrate_path(f, waypoints, prec, tol);
  return head + q.value;
}

TransSeriesComponent build_component(const ODESpec& spec, const SingulantEquation& eq,
                                     const PerturbativeSeries& series,
                                     const SingulantBranch& branch,
                                     const ComponentBuildConfig& config) {
  Precision prec = branch.z_star.precision();
  if (series.terms.size() < 2)
    throw std::invalid_argument("build_component: need the perturbative series through order 1");

  TransSeriesComponent comp;
  comp.branch = branch;
  comp.exponents = local_exponents(eq, branch, series.terms[1]);
  const LocalExponents& ex = comp.exponents;

  InnerLocalModel model = inner_local_model(spec, branch);
  BigComplex alpha_v = ex.alpha_value(prec);
  long n_tracks = ex.alpha_is_positive_integer()
                      ? ex.alpha_int()
                      : static_cast<long>(config.max_tracks);

  // Matched leading constants a_{i,0} from the inner problems at k = gamma*i;
  // the new constant of track i is the (1-s)^(-alpha+i) weight of phi_{gamma i}.
  std::vector<BigComplex> a0s;
  for (long i = 0; i < n_tracks; ++i) {
    int k = static_cast<int>(ex.gamma * i);
    InnerProblem prob = build_inner_problem(spec, model, series, ex, k);
    Jet phi = solve_inner_series(prob, config.inner_terms);
    int depth = std::max<int>(config.constant_depth, static_cast<int>(i));
    std::vector<BigComplex> C = connection_constants(phi, alpha_v, depth);
    BigComplex Ci = static_cast<size_t>(i) < C.size() ? C[static_cast<size_t>(i)] : BigComplex(prec);
    // a_i0 = C * (-chi0)^(alpha - i).
    a0s.push_back(Ci * pow(-model.chi0, alpha_v - BigComplex(i, 0L, prec)));
  }
  comp.truncation_order = static_cast<int>(n_tracks) - 1;

  if (spec.order == 1) {
    // First order: a_0 is constant in z; the track is flat along the path.
    CoefficientTrack t;
    t.index = 0;
    t.matched = true;
    t.initial_value = a0s.empty() ? BigComplex(prec) : a0s[0];
    comp.offset = 1;
    for (size_t k = comp.offset; k < branch.path.samples.size(); ++k)
      t.values.push_back(t.initial_value);
    comp.tracks.push_back(std::move(t));
    return comp;
  }

  CoefficientRecurrence rec = coefficient_recurrence(spec, ex.alpha);

  // Seed just off z_star with the homogeneous local shape a_i ~ a_{i,0}
  // (z - z_star)^beta and propagate outward along the branch path. (Exact
  // when the local data is monomial, as in pole-type boundary layers; the
  // general sub-leading corrections belong to deeper inner-outer levels.)
  size_t s0 = std::min<size_t>(17, branch.path.samples.size() - 2);
  BigComplex start = branch.path.samples[s0];
  BigComplex local = pow(start - branch.z_star, ex.beta.value(prec));
  std::vector<BigComplex> seeds;
  for (const auto& a0 : a0s) seeds.push_back(a0 * local);

  ComplexPath sub;
  sub.samples.assign(branch.path.samples.begin() + s0, branch.path.samples.end());
  std::vector<CoefficientTrack> tracks =
      propagate_coefficients(eq, rec, seeds, branch.chi_prime[s0], sub);
  for (auto& t : tracks) t.matched = true;
  comp.offset = s0;
  comp.tracks = std::move(tracks);
  return comp;
}

}  // namespace resurgo
