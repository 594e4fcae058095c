#pragma once

#include "resurgo/germ.hpp"
#include "resurgo/ratfunc.hpp"

namespace resurgo {

// Singularly perturbed linear ODE  sum_i eps^i P_i(z) y^(i)(z) = F(z; eps),
// with F(z; eps) = sum_k eps^k F_k(z).
struct ODESpec {
  int order = 1;                 // N
  std::vector<RatFunc> coeffs;   // P_0..P_N; P_0 is the undifferentiated term
  std::vector<RatFunc> forcing;  // F_0..F_K

  const RatFunc& p(size_t i) const { return coeffs[i]; }
  RatFunc f(size_t k) const { return k < forcing.size() ? forcing[k] : RatFunc(); }
};

struct PerturbativeSeries {
  std::vector<RatFunc> terms;  // y_0..y_M

  size_t size() const { return terms.size(); }
  const RatFunc& operator[](size_t n) const { return terms[n]; }
};

enum class SingularSource { ForcingPole, CoefficientZero, CoefficientPole };

struct SingularPoint {
  BigComplex z;
  SingularSource source;
  int order;  // max pole order delta seen among the examined terms
};

struct PhysicalSingularSet {
  std::vector<SingularPoint> points;

  bool contains_near(const BigComplex& z, const BigFloat& radius) const {
    for (const auto& p : points)
      if (abs(p.z - z) <= radius) return true;
    return false;
  }
};

// Borel PDE record: operator sum_i P_i(z) d_z^i d_w^(N-i) plus the w-Taylor
// initial data u_0..u_{N-1} (u_k = y_{k+1}/k!) the forcing induces.
struct BorelPDE {
  std::vector<RatFunc> coeffs;
  std::vector<RatFunc> initial_data;
  std::string str() const;
};

// Order-by-order solution of the ODE; back-substitution of the result leaves
// residual O(eps^(M+1)). Throws std::domain_error when P_0 vanishes
// identically (degenerate leading balance).
PerturbativeSeries expand_perturbative(const ODESpec& spec, int M);

// Union of pole locations of the early terms and zeros/poles of the P_i,
// deduplicated by clustering. `scan_terms` caps how many series terms are
// root-hunted; the denominators repeat after the first few orders.
PhysicalSingularSet singular_set(const PerturbativeSeries& series, const ODESpec& spec,
                                 Precision prec, size_t scan_terms = 12);

// Borel germ at z0: u_n = y_{n+1}(z0)/n! with the constant part y_0(z0) held
// separately. Throws when z0 sits on (or too close to) a pole.
BorelGerm borel_germ(const PerturbativeSeries& series, const BigComplex& z0,
                     const PhysicalSingularSet* guard = nullptr);

BorelPDE borel_transform_ode(const ODESpec& spec);

// Residual of the truncated series pushed back through the ODE at one sample.
BigComplex ode_residual(const ODESpec& spec, const PerturbativeSeries& series,
                        const BigComplex& z, const BigComplex& eps);

}  // namespace resurgo
