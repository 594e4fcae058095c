#include "resurgo/singulant.hpp"

#include <algorithm>
#include <cmath>

namespace resurgo {

Jet SingulantEquation::at(const BigComplex& z) const {
  Jet out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.is_zero() ? BigComplex(z.precision()) : c.eval(z));
  return out;
}

BigComplex SingulantEquation::eval(const BigComplex& z, const BigComplex& lambda) const {
  return jet_eval(at(z), lambda);
}

SingulantEquation singulant_equation(const ODESpec& spec) {
  if (spec.order < 1) throw std::invalid_argument("singulant_equation: need order >= 1");
  SingulantEquation eq;
  eq.coeffs.reserve(spec.coeffs.size());
  for (size_t i = 0; i < spec.coeffs.size(); ++i) {
    RatFunc c = spec.coeffs[i];
    if (i % 2 == 1) c = -c;  // (-lambda)^i
    eq.coeffs.push_back(std::move(c));
  }
  return eq;
}

ComplexPath ComplexPath::from_waypoints(const std::vector<BigComplex>& waypoints,
                                        const BigFloat& max_step) {
  if (waypoints.size() < 1) throw std::invalid_argument("ComplexPath: empty waypoint list");
  ComplexPath p;
  p.samples.push_back(waypoints[0]);
  for (size_t k = 0; k + 1 < waypoints.size(); ++k) {
    BigComplex delta = waypoints[k + 1] - waypoints[k];
    BigFloat len = abs(delta);
    long pieces = std::max(1L, (len / max_step).to_long() + 1);
    for (long j = 1; j <= pieces; ++j)
      p.samples.push_back(waypoints[k] + delta * j / pieces);
  }
  return p;
}

ComplexPath ComplexPath::circle(const BigComplex& center, const BigFloat& radius, int segments,
                                Precision prec) {
  ComplexPath p;
  BigFloat two_pi = BigFloat::pi(prec) * 2L;
  for (int k = 0; k <= segments; ++k) {
    BigFloat theta = two_pi * k / segments;
    p.samples.push_back(center + polar(radius, theta));
  }
  return p;
}

namespace {

// All roots at z, refined from predicted values by Newton (falls back to a
// full Aberth solve when prediction is poor).
std::vector<BigComplex> roots_near(const SingulantEquation& eq, const BigComplex& z,
                                   const std::vector<BigComplex>& predicted) {
  Precision prec = z.precision();
  Jet c = eq.at(z);
  while (!c.empty() && abs(c.back()).is_zero()) c.pop_back();
  if (static_cast<int>(c.size()) - 1 != static_cast<int>(predicted.size()))
    throw NumericalError("continue_roots: leading coefficient degenerates along the path");
  Jet dc = jet_derivative(c);
  BigFloat cnorm = jet_norm(c);
  BigFloat tol = cnorm * BigFloat::pow2(-(prec * 2 / 3), prec);

  std::vector<BigComplex> out;
  out.reserve(predicted.size());
  for (const auto& p0 : predicted) {
    BigComplex x = p0;
    bool ok = false;
    for (int it = 0; it < 60; ++it) {
      BigComplex f = jet_eval(c, x);
      if (abs(f) <= tol) {
        ok = true;
        break;
      }
      BigComplex d = jet_eval(dc, x);
      if (d.is_zero()) break;
      x -= f / d;
    }
    if (!ok) {
      // Aberth fallback, matched to the prediction.
      auto all = poly_roots(c);
      BigFloat best(1e300, prec);
      for (const auto& rc : all) {
        BigFloat dist = abs(rc.root - p0);
        if (dist < best) {
          best = dist;
          x = rc.root;
        }
      }
    }
    out.push_back(x);
  }
  return out;
}

BigFloat min_separation(const std::vector<BigComplex>& v) {
  Precision prec = v.empty() ? default_precision() : v[0].precision();
  BigFloat best(1e300, prec);
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) best = min(best, abs(v[i] - v[j]));
  return best;
}

}  // namespace

RootTracks continue_roots(const SingulantEquation& eq, const ComplexPath& path,
                          const std::vector<BigComplex>& start_roots) {
  if (path.samples.empty()) throw std::invalid_argument("continue_roots: empty path");
  Precision prec = path.samples[0].precision();
  size_t nb = start_roots.size();
  BigFloat collision_tol = BigFloat::pow2(-(prec / 3), prec);
  if (min_separation(start_roots) <= collision_tol)
    throw std::invalid_argument("continue_roots: start roots not separated");

  RootTracks out;
  out.path.samples.push_back(path.samples[0]);
  out.lambda.assign(nb, {});
  std::vector<BigComplex> cur = roots_near(eq, path.samples[0], start_roots);
  for (size_t b = 0; b < nb; ++b) out.lambda[b].push_back(cur[b]);

  for (size_t k = 1; k < path.samples.size(); ++k) {
    BigComplex from = out.path.samples.back();
    BigComplex to = path.samples[k];
    // March from->to, halving the step when identities are at risk.
    int guard = 0;
    while (true) {
      if (++guard > 1 << 16)
        throw TurningPointError("continue_roots: unresolved collision (turning point)", from);
      BigComplex target = to;
      bool accepted = false;
      int halvings = 0;
      while (halvings <= 48) {
        // Predict by the previous value (plus slope when available).
        std::vector<BigComplex> pred = cur;
        auto cand = roots_near(eq, target, pred);
        // Identity safety: each track must stay closer to its own prediction
        // than half the local separation.
        BigFloat sep = min_separation(cand);
        bool safe = true;
        for (size_t b = 0; b < nb && safe; ++b)
          if (abs(cand[b] - cur[b]) * 2L > sep) safe = false;
        // Distinctness of the matched roots.
        for (size_t b = 0; b < nb && safe; ++b)
          for (size_t b2 = b + 1; b2 < nb && safe; ++b2)
            if (abs(cand[b] - cand[b2]) <= collision_tol * max(BigFloat(1L, prec), abs(cand[b])))
              safe = false;
        if (safe) {
          cur = std::move(cand);
          out.path.samples.push_back(target);
          for (size_t b = 0; b < nb; ++b) out.lambda[b].push_back(cur[b]);
          accepted = true;
          break;
        }
        target = from + (target - from) / 2L;
        ++halvings;
      }
      if (!accepted)
        throw TurningPointError("continue_roots: unresolved collision (turning point)", from);
      if (out.path.samples.back() == to) break;
      from = out.path.samples.back();
    }
  }
  return out;
}

namespace {

// Root at z predicted by `guess`, polished by Newton.
BigComplex root_from_guess(const SingulantEquation& eq, const BigComplex& z,
                           const BigComplex& guess, Precision prec) {
  Jet c = eq.at(z);
  while (!c.empty() && abs(c.back()).is_zero()) c.pop_back();
  Jet dc = jet_derivative(c);
  BigFloat tol = jet_norm(c) * BigFloat::pow2(-(prec * 2 / 3), prec);
  BigComplex x = guess;
  for (int it = 0; it < 60; ++it) {
    BigComplex f = jet_eval(c, x);
    if (abs(f) <= tol) break;
    BigComplex d = jet_eval(dc, x);
    if (d.is_zero()) break;
    x -= f / d;
  }
  return x;
}

// chi' along one straight segment with endpoint track values, integrated by
// Gauss-Legendre with a half-split Richardson check. Interior values are
// predicted by linear interpolation of the endpoints, which keeps the branch
// identity even where siblings nearly collide (the prediction error is
// second order in the segment length, the sibling gap first order).
BigComplex segment_chi_increment(const SingulantEquation& eq, const BigComplex& a,
                                 const BigComplex& b, const BigComplex& lam_a,
                                 const BigComplex& lam_b, Precision prec, const BigFloat& tol,
                                 int depth = 24) {
  constexpr int kOrder = 24;
  const auto& nw = gauss_legendre(kOrder, prec);

  auto sweep = [&](const BigComplex& s0, const BigComplex& s1, const BigComplex& l0,
                   const BigComplex& l1) {
    BigComplex mid = (s0 + s1) / 2L;
    BigComplex rad = (s1 - s0) / 2L;
    BigComplex lmid = (l0 + l1) / 2L;
    BigComplex lrad = (l1 - l0) / 2L;
    BigComplex acc(prec);
    for (const auto& [x, w] : nw) {
      BigComplex zt = mid + rad * x;
      BigComplex guess = lmid + lrad * x;
      acc += root_from_guess(eq, zt, guess, prec) * w;
    }
    return acc * rad;
  };

  BigComplex mid = (a + b) / 2L;
  BigComplex lam_mid = root_from_guess(eq, mid, (lam_a + lam_b) / 2L, prec);
  BigComplex whole = sweep(a, b, lam_a, lam_b);
  BigComplex left = sweep(a, mid, lam_a, lam_mid);
  BigComplex right = sweep(mid, b, lam_mid, lam_b);
  if (abs(whole - (left + right)) <= tol || depth <= 0) return left + right;
  BigComplex l = segment_chi_increment(eq, a, mid, lam_a, lam_mid, prec, tol / 2L, depth - 1);
  BigComplex r = segment_chi_increment(eq, mid, b, lam_mid, lam_b, prec, tol / 2L, depth - 1);
  return l + r;
}

}  // namespace

SingulantBranch integrate_singulant(const SingulantEquation& eq, const ComplexPath& path,
                                    const std::vector<BigComplex>& lambda_track,
                                    const BigComplex& z_star) {
  if (path.samples.size() != lambda_track.size() || path.samples.size() < 2)
    throw std::invalid_argument("integrate_singulant: track/path mismatch");
  Precision prec = z_star.precision();
  if (abs(path.samples.front() - z_star) > BigFloat::pow2(-(prec / 4), prec) * max(BigFloat(1L, prec), abs(z_star)))
    throw std::invalid_argument("integrate_singulant: path must start at z_star");

  SingulantBranch br;
  br.z_star = z_star;
  br.path = path;
  br.chi_prime = lambda_track;
  br.chi.assign(path.samples.size(), BigComplex(prec));
  BigFloat tol = BigFloat::pow2(-(prec * 3 / 4), prec);

  BigComplex acc(prec);
  for (size_t k = 1; k < path.samples.size(); ++k) {
    acc += segment_chi_increment(eq, path.samples[k - 1], path.samples[k], lambda_track[k - 1],
                                 lambda_track[k], prec, tol);
    br.chi[k] = acc;
  }

  // Vanishing order from the log-log slope over the first few samples.
  br.zero_order = 1;
  for (size_t k = 1; k + 1 < std::min<size_t>(path.samples.size(), 6); ++k) {
    BigFloat r1 = abs(path.samples[k] - z_star);
    BigFloat r2 = abs(path.samples[k + 1] - z_star);
    if (r1.is_zero() || r2.is_zero() || abs(br.chi[k]).is_zero()) continue;
    BigFloat slope = log(abs(br.chi[k + 1]) / abs(br.chi[k])) / log(r2 / r1);
    long g = (slope + BigFloat(0.5, prec)).to_long();
    if (g >= 1) br.zero_order = static_cast<int>(g);
    break;
  }
  // Leading constant X1 = chi / (z - z_star)^gamma near the base of the fan.
  size_t probe = std::min<size_t>(2, path.samples.size() - 1);
  BigComplex dz = path.samples[probe] - z_star;
  br.leading = br.chi[probe] / pow(dz, static_cast<long>(br.zero_order));
  return br;
}

std::vector<SingulantBranch> singulant_branches(const SingulantEquation& eq,
                                                const BigComplex& z_star,
                                                const BigComplex& z_base) {
  Precision prec = z_base.precision();
  Jet c0 = eq.at(z_base);
  auto clusters = poly_roots(c0);
  std::vector<BigComplex> start;
  for (const auto& rc : clusters)
    for (int m = 0; m < rc.multiplicity; ++m) start.push_back(rc.root);

  // Geometric fan toward z_star: dense near the collision point.
  std::vector<BigComplex> fan;
  BigComplex delta = z_base - z_star;
  const int kLevels = 40;
  fan.push_back(z_star);
  for (int j = kLevels; j >= 0; --j) fan.push_back(z_star + delta * BigFloat::pow2(-j, prec));

  std::vector<SingulantBranch> out;
  for (size_t b = 0; b < start.size(); ++b) {
    // Track from the base inward (reverse fan), then integrate outward.
    std::vector<BigComplex> inward{start[b]};
    std::vector<BigComplex> pts{z_base};
    BigComplex cur = start[b];
    for (size_t k = fan.size() - 1; k-- > 1;) {
      std::vector<BigComplex> nxt = roots_near(eq, fan[k], {cur});
      cur = nxt[0];
      inward.push_back(cur);
      pts.push_back(fan[k]);
    }
    // Limit value at z_star by extrapolating the last two samples.
    BigComplex lam_star = inward.back() * 2L - inward[inward.size() - 2];
    pts.push_back(z_star);
    inward.push_back(lam_star);
    std::reverse(pts.begin(), pts.end());
    std::reverse(inward.begin(), inward.end());
    ComplexPath path;
    path.samples = std::move(pts);
    SingulantBranch br = integrate_singulant(eq, path, inward, z_star);
    br.id = static_cast<int>(b);
    out.push_back(std::move(br));
  }
  return out;
}

BigComplex continue_root(const SingulantEquation& eq, const BigComplex& z,
                         const BigComplex& guess) {
  return root_from_guess(eq, z, guess, z.precision());
}

Jet singulant_prime_jet(const SingulantEquation& eq, const BigComplex& z0,
                        const BigComplex& lambda0, size_t n) {
  Precision prec = z0.precision();
  // Coefficient jets c_i(z0 + h).
  std::vector<Jet> cj;
  cj.reserve(eq.coeffs.size());
  for (const auto& c : eq.coeffs) {
    long pole = 0;
    Jet j = c.is_zero() ? Jet(n, BigComplex(prec)) : c.laurent(z0, n, &pole);
    if (pole > 0) throw NumericalError("singulant_prime_jet: coefficient pole at expansion point");
    cj.push_back(std::move(j));
  }
  // Newton in jet space: L <- L - Q(L)/Q'(L), doubling the attained order.
  Jet L{lambda0};
  L.resize(n, BigComplex(prec));
  for (size_t pass = 0; pass < 2 + static_cast<size_t>(std::log2(static_cast<double>(n) + 1)); ++pass) {
    // Q(L) = sum_i c_i L^i and Q'(L), truncated at n.
    Jet q(n, BigComplex(prec));
    Jet dq(n, BigComplex(prec));
    Jet power{BigComplex(1L, 0L, prec)};
    power.resize(n, BigComplex(prec));
    for (size_t i = 0; i < cj.size(); ++i) {
      q = jet_add(q, jet_mul(cj[i], power, n));
      if (i + 1 < cj.size()) {
        Jet t = jet_mul(cj[i + 1], power, n);
        for (auto& u : t) u *= static_cast<long>(i + 1);
        dq = jet_add(dq, t);
      }
      power = jet_mul(power, L, n);
    }
    Jet corr = jet_div(q, dq, n);
    L = jet_sub(L, corr);
  }
  return L;
}

BranchCursor::BranchCursor(const SingulantEquation& eq, BigComplex z, BigComplex lambda,
                           BigComplex chi)
    : eq_(&eq), z_(std::move(z)), lambda_(std::move(lambda)), chi_(std::move(chi)),
      prec_(z_.precision()) {}

BranchCursor BranchCursor::at_branch_base(const SingulantEquation& eq,
                                          const SingulantBranch& branch) {
  return BranchCursor(eq, branch.z_base(), branch.chi_prime.back(), branch.chi_base());
}

void BranchCursor::move_to(const BigComplex& z_new) {
  int guard = 0;
  while (abs(z_new - z_) > BigFloat::pow2(-(prec_ - 8), prec_)) {
    if (++guard > 1 << 14) throw NumericalError("BranchCursor: step size underflow");
    step(z_new);
  }
}

void BranchCursor::step(const BigComplex& target) {
  const size_t kJet = 20;
  Jet lj = singulant_prime_jet(*eq_, z_, lambda_, kJet);
  Jet cj = jet_antiderivative(lj, prec_);
  // Convergence-radius estimate from the jet tail.
  BigFloat rho(1e300, prec_);
  for (size_t k = kJet / 2; k < lj.size(); ++k) {
    BigFloat mag = abs(lj[k]);
    if (mag.is_zero()) continue;
    BigFloat est = pow(max(abs(lj[0]), BigFloat(1L, prec_)) / mag,
                       BigFloat(1.0 / static_cast<double>(k), prec_));
    rho = min(rho, est);
  }
  BigComplex dz = target - z_;
  BigFloat h = abs(dz);
  BigFloat cap = rho * BigFloat(0.25, prec_);
  if (h > cap && cap.sign() > 0) dz = dz * (cap / h);
  BigComplex z_next = z_ + dz;
  BigComplex lam_pred = jet_eval(lj, dz);
  chi_ += jet_eval(cj, dz);
  // Newton polish on the exact equation keeps the track honest.
  Jet c = eq_->at(z_next);
  Jet dc = jet_derivative(c);
  BigComplex x = lam_pred;
  for (int it = 0; it < 40; ++it) {
    BigComplex f = jet_eval(c, x);
    if (abs(f) <= jet_norm(c) * BigFloat::pow2(-(prec_ * 2 / 3), prec_)) break;
    BigComplex d = jet_eval(dc, x);
    if (d.is_zero()) throw TurningPointError("BranchCursor: derivative vanished", z_next);
    x -= f / d;
  }
  if (abs(x - lam_pred) > max(BigFloat(1L, prec_), abs(x)) * BigFloat(0.25, prec_))
    throw TurningPointError("BranchCursor: branch identity lost", z_next);
  z_ = z_next;
  lambda_ = x;
}

}  // namespace resurgo
