#include "resurgo/pade.hpp"

#include <algorithm>

#include "resurgo/gammafn.hpp"

namespace resurgo {

PadeApproximant::PadeApproximant(Jet num, Jet den, int L, int M)
    : num_(std::move(num)), den_(std::move(den)), L_(L), M_(M) {
  // Poles and residues via the shared root finder; a tight root cluster of
  // size m is reported once with the coefficient of (w-r)^-m as its strength.
  Jet d = den_;
  while (!d.empty() && abs(d.back()).is_zero()) d.pop_back();
  if (d.size() <= 1) return;
  Precision prec = d[0].precision();
  auto clusters = poly_roots(d);
  for (const auto& rc : clusters) {
    Jet dt(d.size(), BigComplex(prec));
    {
      // Taylor shift of den to the root.
      Jet work = d;
      for (size_t k = 0; k < dt.size(); ++k) {
        BigComplex carry(prec);
        for (size_t j = work.size(); j-- > 0;) {
          carry = work[j] + carry * rc.root;
          work[j] = carry;
        }
        dt[k] = work.front();
        work.erase(work.begin());
      }
    }
    size_t m = static_cast<size_t>(rc.multiplicity);
    BigComplex strength = jet_eval(num_, rc.root) / (m < dt.size() ? dt[m] : dt.back());
    poles_.push_back({rc.root, strength});
  }
  std::sort(poles_.begin(), poles_.end(),
            [](const PadePole& a, const PadePole& b) { return abs(a.location) < abs(b.location); });
}

BigComplex PadeApproximant::eval(const BigComplex& w) const {
  return jet_eval(num_, w) / jet_eval(den_, w);
}

PadeApproximant pade(const Jet& coeffs, int L, int M) {
  if (L < 0 || M < 0) throw std::invalid_argument("pade: negative order");
  if (coeffs.size() < static_cast<size_t>(L + M + 1))
    throw std::invalid_argument("pade: need L+M+1 coefficients");
  Precision prec = coeffs[0].precision();
  auto c = [&](long i) { return i < 0 ? BigComplex(prec) : coeffs[static_cast<size_t>(i)]; };

  Jet den(M + 1, BigComplex(prec));
  den[0] = BigComplex(1L, 0L, prec);
  if (M > 0) {
    std::vector<BigComplex> A(static_cast<size_t>(M) * M, BigComplex(prec));
    std::vector<BigComplex> b(M, BigComplex(prec));
    for (int k = 1; k <= M; ++k) {
      for (int j = 1; j <= M; ++j) A[(k - 1) * static_cast<size_t>(M) + (j - 1)] = c(L + k - j);
      b[k - 1] = -c(L + k);
    }
    std::vector<BigComplex> q;
    try {
      q = solve_linear(std::move(A), std::move(b));
    } catch (const NumericalError&) {
      throw NumericalError(
          "pade: singular linear system (degenerate germ); try reducing the denominator order M");
    }
    for (int j = 1; j <= M; ++j) den[j] = q[j - 1];
  }
  Jet num(L + 1, BigComplex(prec));
  for (int i = 0; i <= L; ++i) {
    BigComplex acc(prec);
    for (int j = 0; j <= std::min(i, M); ++j) acc += den[j] * c(i - j);
    num[i] = acc;
  }
  return PadeApproximant(std::move(num), std::move(den), L, M);
}

PadeApproximant pade(const BorelGerm& germ, int L, int M) { return pade(germ.coeffs, L, M); }

namespace {

struct Cluster {
  BigComplex centroid;
  int size = 0;
  std::vector<PadePole> members;
};

std::vector<Cluster> cluster_poles(const std::vector<PadePole>& poles, double rel_radius,
                                   Precision prec) {
  std::vector<Cluster> out;
  std::vector<bool> used(poles.size(), false);
  for (size_t i = 0; i < poles.size(); ++i) {
    if (used[i]) continue;
    Cluster cl;
    cl.members.push_back(poles[i]);
    used[i] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      for (size_t j = 0; j < poles.size(); ++j) {
        if (used[j]) continue;
        for (const auto& m : cl.members) {
          BigFloat rad = max(abs(m.location), BigFloat(1L, prec)) * BigFloat(rel_radius, prec);
          if (abs(poles[j].location - m.location) <= rad) {
            cl.members.push_back(poles[j]);
            used[j] = true;
            grew = true;
            break;
          }
        }
      }
    }
    BigComplex centroid(prec);
    int mult = 0;
    for (const auto& m : cl.members) centroid += m.location;
    centroid = centroid / static_cast<long>(cl.members.size());
    mult = static_cast<int>(cl.members.size());
    cl.centroid = centroid;
    cl.size = mult;
    out.push_back(std::move(cl));
  }
  std::sort(out.begin(), out.end(),
            [](const Cluster& a, const Cluster& b) { return abs(a.centroid) < abs(b.centroid); });
  return out;
}

}  // namespace

std::vector<BorelSingularity> detect_singularities(const PadeApproximant& p,
                                                   const PadeApproximant& higher,
                                                   const StabilityConfig& config) {
  std::vector<BorelSingularity> out;
  if (p.poles().empty()) return out;
  Precision prec = p.poles()[0].location.precision();

  // Drop Froissart noise, then keep poles reproduced by the higher order.
  BigFloat res_scale(0L, prec);
  for (const auto& pl : p.poles()) res_scale = max(res_scale, abs(pl.residue));
  std::vector<PadePole> stable;
  for (const auto& pl : p.poles()) {
    if (abs(pl.residue) < res_scale * BigFloat(config.residue_floor, prec)) continue;
    BigFloat best(1e300, prec);
    for (const auto& hq : higher.poles()) best = min(best, abs(pl.location - hq.location));
    BigFloat tol = max(abs(pl.location), BigFloat(1L, prec)) * BigFloat(config.match_tol, prec);
    if (best <= tol) stable.push_back(pl);
  }
  if (stable.empty()) return out;

  auto clusters = cluster_poles(stable, config.cluster_radius, prec);

  // Greedy string walk from each remaining head, nearest-to-origin first.
  std::vector<bool> consumed(clusters.size(), false);
  BigFloat ang_tol(config.angular_tol, prec);
  for (size_t head = 0; head < clusters.size(); ++head) {
    if (consumed[head]) continue;
    std::vector<size_t> chain{head};
    size_t cur = head;
    while (true) {
      // Next unconsumed cluster continuing the ray from the head through cur.
      size_t best_j = SIZE_MAX;
      BigFloat best_d(1e300, prec);
      for (size_t j = 0; j < clusters.size(); ++j) {
        if (consumed[j] || j == cur || j == head) continue;
        bool in_chain = false;
        for (size_t k : chain) in_chain |= (k == j);
        if (in_chain) continue;
        BigComplex step = clusters[j].centroid - clusters[cur].centroid;
        BigFloat d = abs(step);
        if (d.is_zero()) continue;
        BigComplex base = chain.size() == 1
                              ? step
                              : clusters[cur].centroid - clusters[chain[chain.size() - 2]].centroid;
        BigFloat dang = abs(arg(step * conj(base)));
        if (chain.size() > 1 && dang > ang_tol) continue;
        if (d < best_d) {
          best_d = d;
          best_j = j;
        }
      }
      if (best_j == SIZE_MAX) break;
      // Monotone outward spacing.
      if (chain.size() > 1) {
        BigFloat prev = abs(clusters[cur].centroid - clusters[chain[chain.size() - 2]].centroid);
        if (best_d < prev * BigFloat(0.7, prec)) break;
      }
      chain.push_back(best_j);
      cur = best_j;
    }
    if (static_cast<int>(chain.size()) >= config.min_string) {
      BorelSingularity s;
      s.chi = clusters[head].centroid;
      s.kind = SingularityKind::BranchCutHead;
      s.cluster_multiplicity = clusters[head].size;
      for (size_t k : chain) {
        consumed[k] = true;
        for (const auto& m : clusters[k].members) s.support.push_back(m);
      }
      out.push_back(std::move(s));
    }
  }
  for (size_t j = 0; j < clusters.size(); ++j) {
    if (consumed[j]) continue;
    BorelSingularity s;
    s.chi = clusters[j].centroid;
    s.kind = SingularityKind::IsolatedPole;
    s.cluster_multiplicity = clusters[j].size;
    s.alpha = BigComplex(static_cast<long>(clusters[j].size), 0L, prec);
    s.support = clusters[j].members;
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const BorelSingularity& a, const BorelSingularity& b) {
    return abs(a.chi) < abs(b.chi);
  });
  return out;
}

std::vector<BorelSingularity> detect_singularities(const Jet& coeffs, int L, int M,
                                                   const StabilityConfig& config) {
  PadeApproximant base = pade(coeffs, L, M);
  int L2 = L + 2, M2 = M + 2;
  if (coeffs.size() < static_cast<size_t>(L2 + M2 + 1)) {
    L2 = L - 2;
    M2 = M - 2;
    if (L2 < 0 || M2 < 1) throw std::invalid_argument("detect_singularities: germ too short");
  }
  PadeApproximant higher = pade(coeffs, L2, M2);
  return detect_singularities(base, higher, config);
}

PadeApproximant pade_about_singularity(const Jet& coeff_samples, const BigComplex& chi) {
  (void)chi;  // location bookkeeping only; poles come out in t = w - chi
  if (coeff_samples.size() < 8)
    throw std::invalid_argument("pade_about_singularity: need at least 8 coefficients");
  int total = static_cast<int>(coeff_samples.size()) - 1;
  int M = total / 2;
  int L = total - M;
  return pade(coeff_samples, L, M);
}

SingularityOrderFit estimate_singularity_order(const Jet& coeffs) {
  if (coeffs.size() < 12) throw std::invalid_argument("estimate_singularity_order: germ too short");
  Precision prec = coeffs[0].precision();
  size_t n1 = coeffs.size() - 1;
  size_t n0 = coeffs.size() * 3 / 5;

  // s_n = (n+1) u_{n+1} / u_n -> (n + alpha)/chi is linear in n.
  std::vector<BigComplex> s(coeffs.size(), BigComplex(prec));
  for (size_t n = 0; n + 1 < coeffs.size(); ++n) {
    if (abs(coeffs[n]).is_zero()) throw NumericalError("estimate_singularity_order: zero coefficient");
    s[n] = coeffs[n + 1] * static_cast<long>(n + 1) / coeffs[n];
  }
  std::vector<BigComplex> dchi, alph;
  std::vector<BigFloat> xs;
  for (size_t n = n0; n + 2 < coeffs.size(); ++n) {
    dchi.push_back(s[n + 1] - s[n]);
    xs.push_back(BigFloat(1L, prec) / static_cast<long>(n));
  }
  BigComplex chi_inv = richardson_limit(xs, dchi);
  BigComplex chi = BigComplex(1L, 0L, prec) / chi_inv;
  std::vector<BigComplex> al;
  std::vector<BigFloat> xs2;
  for (size_t n = n0; n + 2 < coeffs.size(); ++n) {
    al.push_back(s[n] * chi - BigComplex(static_cast<long>(n), 0L, prec));
    xs2.push_back(BigFloat(1L, prec) / static_cast<long>(n));
  }
  BigComplex alpha = richardson_limit(xs2, al);

  // Residual of the factorial-over-power model over the tail window.
  BigComplex a0 = coeffs[n1] * pow(chi, static_cast<long>(n1)) * BigComplex(factorial(n1, prec), BigFloat(0L, prec)) /
                  gamma(alpha + BigComplex(static_cast<long>(n1), 0L, prec)) * gamma(alpha) *
                  pow(chi, alpha);
  BigFloat residual(0L, prec);
  for (size_t n = n0; n < coeffs.size(); ++n) {
    BigComplex model = a0 * gamma(alpha + BigComplex(static_cast<long>(n), 0L, prec)) /
                       gamma(alpha) / BigComplex(factorial(n, prec), BigFloat(0L, prec)) /
                       pow(chi, alpha) / pow(chi, static_cast<long>(n));
    residual = max(residual, abs(coeffs[n] - model) / abs(coeffs[n]));
  }
  return {chi, alpha, residual};
}

}  // namespace resurgo
