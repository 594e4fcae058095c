#include "resurgo/perturbative.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace resurgo {

PerturbativeSeries expand_perturbative(const ODESpec& spec, int M) {
  if (spec.order < 1 || spec.coeffs.size() != static_cast<size_t>(spec.order) + 1)
    throw std::invalid_argument("expand_perturbative: bad coefficient count");
  if (spec.p(0).is_zero())
    throw std::domain_error("expand_perturbative: P_0 vanishes (degenerate leading balance)");
  if (M < 0) throw std::invalid_argument("expand_perturbative: M must be >= 0");

  // y_n = (F_n - sum_{i>=1} P_i y_{n-i}^(i)) / P_0. Cache the derivative
  // ladders of earlier terms; order N needs the first N derivatives.
  std::vector<std::vector<RatFunc>> derivs;  // derivs[n][j] = y_n^(j)
  PerturbativeSeries out;
  out.terms.reserve(M + 1);
  for (int n = 0; n <= M; ++n) {
    RatFunc rhs = spec.f(n);
    for (int i = 1; i <= std::min(n, spec.order); ++i) {
      if (spec.p(i).is_zero()) continue;
      const RatFunc& d = derivs[n - i][i];
      if (d.is_zero()) continue;
      rhs -= spec.p(i) * d;
    }
    RatFunc yn = rhs / spec.p(0);
    std::vector<RatFunc> ladder(spec.order + 1);
    ladder[0] = yn;
    for (int j = 1; j <= spec.order; ++j) ladder[j] = ladder[j - 1].derivative();
    derivs.push_back(std::move(ladder));
    out.terms.push_back(std::move(yn));
  }
  return out;
}

namespace {

void add_point(std::vector<SingularPoint>& pts, const BigComplex& z, SingularSource source,
               int order, const BigFloat& radius) {
  for (auto& p : pts) {
    if (abs(p.z - z) <= radius) {
      if (order > p.order) p.order = order;
      // Coefficient-driven classification wins over forcing when both apply.
      if (source != SingularSource::ForcingPole && p.source == SingularSource::ForcingPole)
        p.source = source;
      return;
    }
  }
  pts.push_back({z, source, order});
}

}  // namespace

PhysicalSingularSet singular_set(const PerturbativeSeries& series, const ODESpec& spec,
                                 Precision prec, size_t scan_terms) {
  if (series.terms.empty()) throw std::invalid_argument("singular_set: empty series");
  BigFloat radius = BigFloat::pow2(-(prec / 4), prec);
  PhysicalSingularSet out;

  auto scan_ratfunc = [&](const RatFunc& f, SingularSource source) {
    if (f.is_zero() || f.den().degree() < 1) return;
    for (const auto& rc : poly_roots(f.den(), prec))
      add_point(out.points, rc.root, source, rc.multiplicity, radius);
  };

  for (size_t n = 0; n < series.terms.size() && n < scan_terms; ++n)
    scan_ratfunc(series.terms[n], SingularSource::ForcingPole);
  for (const auto& p : spec.coeffs) {
    if (p.is_zero()) continue;
    if (p.num().degree() >= 1)
      for (const auto& rc : poly_roots(p.num(), prec))
        add_point(out.points, rc.root, SingularSource::CoefficientZero, 0, radius);
    scan_ratfunc(p, SingularSource::CoefficientPole);
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const SingularPoint& a, const SingularPoint& b) { return abs(a.z) < abs(b.z); });
  return out;
}

BorelGerm borel_germ(const PerturbativeSeries& series, const BigComplex& z0,
                     const PhysicalSingularSet* guard) {
  Precision prec = z0.precision();
  if (guard && guard->contains_near(z0, BigFloat::pow2(-(prec / 4), prec)))
    throw std::domain_error("borel_germ: base point lies in the physical singular set");
  BorelGerm g;
  g.z0 = z0;
  g.constant = series.terms.empty() ? BigComplex(prec) : series.terms[0].eval(z0);
  for (size_t n = 1; n < series.terms.size(); ++n)
    g.coeffs.push_back(series.terms[n].eval(z0) / BigComplex(factorial(n - 1, prec), BigFloat(0L, prec)));
  return g;
}

BorelPDE borel_transform_ode(const ODESpec& spec) {
  BorelPDE pde;
  pde.coeffs = spec.coeffs;
  PerturbativeSeries lead = expand_perturbative(spec, spec.order);
  mpq_class fact(1);
  for (int k = 0; k < spec.order; ++k) {
    if (k > 1) fact *= k;  // k! built incrementally
    pde.initial_data.push_back(lead.terms[k + 1] * RatFunc(GaussianRational(mpq_class(1) / fact, mpq_class(0))));
  }
  return pde;
}

std::string BorelPDE::str() const {
  std::ostringstream os;
  int N = static_cast<int>(coeffs.size()) - 1;
  bool first = true;
  for (int i = N; i >= 0; --i) {
    if (coeffs[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs[i].str() << ")";
    if (i > 0) os << " d_z^" << i;
    if (N - i > 0) os << " d_w^" << (N - i);
  }
  return os.str();
}

BigComplex ode_residual(const ODESpec& spec, const PerturbativeSeries& series,
                        const BigComplex& z, const BigComplex& eps) {
  Precision prec = z.precision();
  // sum_i eps^i P_i(z) Y^(i)(z) - F(z; eps) with Y the truncated sum.
  std::vector<RatFunc> partial(series.terms.begin(), series.terms.end());
  BigComplex total(prec);
  for (int i = 0; i <= spec.order; ++i) {
    BigComplex acc(prec);
    BigComplex ep(1L, 0L, prec);
    for (size_t n = 0; n < partial.size(); ++n) {
      if (!partial[n].is_zero()) acc += partial[n].eval(z) * ep;
      ep *= eps;
    }
    total += pow(eps, static_cast<long>(i)) * spec.p(i).eval(z) * acc;
    if (i < spec.order)
      for (auto& t : partial) t = t.derivative();
  }
  BigComplex forcing(prec);
  BigComplex ep(1L, 0L, prec);
  for (size_t k = 0; k < spec.forcing.size(); ++k) {
    if (!spec.forcing[k].is_zero()) forcing += spec.forcing[k].eval(z) * ep;
    ep *= eps;
  }
  return total - forcing;
}

}  // namespace resurgo
