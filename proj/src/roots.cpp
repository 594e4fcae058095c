#include <algorithm>
#include <numeric>

#include "resurgo/poly.hpp"
#include "resurgo/series.hpp"

namespace resurgo {

namespace {

// Bini-style starting points: radii from the max-|coeff| bound, angles spread
// with an irrational twist so no start sits on a symmetry axis.
std::vector<BigComplex> initial_guesses(const std::vector<BigComplex>& c, Precision prec) {
  size_t deg = c.size() - 1;
  BigFloat an = abs(c.back());
  BigFloat rmax(0L, prec);
  for (size_t k = 0; k < deg; ++k) rmax = max(rmax, abs(c[k]) / an);
  rmax = rmax + BigFloat(1L, prec);
  std::vector<BigComplex> x(deg, BigComplex(prec));
  BigFloat two_pi = BigFloat::pi(prec) * 2L;
  for (size_t k = 0; k < deg; ++k) {
    BigFloat frac(static_cast<double>(k) / static_cast<double>(deg), prec);
    BigFloat theta = two_pi * frac + BigFloat(0.3181989, prec);
    BigFloat r = rmax * BigFloat(0.5 + 0.4 * ((k * 7919) % deg + 1) / static_cast<double>(deg + 1), prec);
    x[k] = polar(r, theta);
  }
  return x;
}

BigComplex horner(const std::vector<BigComplex>& c, const BigComplex& x, BigComplex* dp) {
  Precision prec = x.precision();
  BigComplex p(prec), d(prec);
  for (size_t k = c.size(); k-- > 0;) {
    d = d * x + p;
    p = p * x + c[k];
  }
  if (dp) *dp = d;
  return p;
}

}  // namespace

std::vector<RootCluster> poly_roots(const std::vector<BigComplex>& coeffs, const RootOptions& opts) {
  std::vector<BigComplex> c = coeffs;
  while (!c.empty() && abs(c.back()).is_zero()) c.pop_back();
  if (c.size() <= 1) throw std::invalid_argument("poly_roots: polynomial must be nonconstant and nonzero");
  Precision prec = c[0].precision();

  // Zero roots split off exactly.
  size_t zero_mult = 0;
  while (zero_mult + 1 < c.size() && c[zero_mult].is_zero()) ++zero_mult;
  std::vector<BigComplex> cc(c.begin() + zero_mult, c.end());

  size_t deg = cc.size() - 1;
  std::vector<BigComplex> x;
  std::vector<RootCluster> out;
  if (deg > 0) {
    x = initial_guesses(cc, prec);
    BigFloat cnorm(0L, prec);
    for (const auto& ck : cc) cnorm = max(cnorm, abs(ck));
    BigFloat target = cnorm * BigFloat::pow2(-(prec / 2), prec);
    // Multiple roots pass the residual test while the approximants are still
    // spread ~2^(-prec/2m) apart; drive the Newton correction below the
    // clustering radius so clusters actually form.
    BigFloat corr_target = BigFloat::pow2(-(prec / 4) - 4, prec);

    std::vector<bool> done(deg, false);
    bool all_done = false;
    int iter = 0;
    for (; iter < opts.max_iterations && !all_done; ++iter) {
      all_done = true;
      for (size_t i = 0; i < deg; ++i) {
        BigComplex d(prec);
        BigComplex p = horner(cc, x[i], &d);
        BigFloat scale_i = max(abs(x[i]), BigFloat(1L, prec));
        if (abs(p) <= target && (d.is_zero() || abs(p / d) <= corr_target * scale_i)) {
          done[i] = true;
          continue;
        }
        all_done = false;
        BigComplex newton = d.is_zero() ? BigComplex(prec) : p / d;
        BigComplex repulsion(prec);
        for (size_t j = 0; j < deg; ++j) {
          if (j == i) continue;
          BigComplex diff = x[i] - x[j];
          if (diff.is_zero()) {
            diff = BigComplex(BigFloat::pow2(-(prec / 2), prec), BigFloat(0L, prec));
          }
          repulsion += BigComplex(1L, 0L, prec) / diff;
        }
        BigComplex denom = BigComplex(1L, 0L, prec) - newton * repulsion;
        BigComplex step = denom.is_zero() ? newton : newton / denom;
        x[i] -= step;
      }
    }
    if (!all_done) {
      // Multiple roots stall the residual test; accept if the correction has
      // collapsed below the cluster radius, else report failure.
      BigFloat radius = BigFloat::pow2(-(prec / 4), prec);
      for (size_t i = 0; i < deg; ++i) {
        BigComplex d(prec);
        BigComplex p = horner(cc, x[i], &d);
        BigFloat corr = d.is_zero() ? BigFloat(1L, prec) : abs(p / d);
        if (!done[i] && corr > radius)
          throw NumericalError("poly_roots: no convergence after iteration cap (precision too low)");
      }
    }
  }

  // Single-linkage clustering within 2^(-prec/4) * scale.
  BigFloat scale(1L, prec);
  for (const auto& xi : x) scale = max(scale, abs(xi));
  BigFloat radius = scale * BigFloat::pow2(-(prec / 4), prec);
  std::vector<size_t> parent(x.size());
  std::iota(parent.begin(), parent.end(), size_t{0});
  auto find = [&parent](size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j)
      if (abs(x[i] - x[j]) <= radius) parent[find(i)] = find(j);
  for (size_t i = 0; i < x.size(); ++i) {
    if (find(i) != i) continue;
    BigComplex centroid(prec);
    int count = 0;
    for (size_t j = 0; j < x.size(); ++j) {
      if (find(j) != i) continue;
      centroid += x[j];
      ++count;
    }
    centroid = centroid / static_cast<long>(count);
    out.push_back({centroid, count});
  }
  if (zero_mult > 0) out.push_back({BigComplex(prec), static_cast<int>(zero_mult)});
  std::sort(out.begin(), out.end(),
            [](const RootCluster& a, const RootCluster& b) { return abs(a.root) < abs(b.root); });
  return out;
}

std::vector<RootCluster> poly_roots(const Poly& p, Precision prec, const RootOptions& opts) {
  if (p.is_zero()) throw std::invalid_argument("poly_roots: zero polynomial");
  std::vector<BigComplex> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.push_back(q.value(prec));
  return poly_roots(c, opts);
}

}  // namespace resurgo
