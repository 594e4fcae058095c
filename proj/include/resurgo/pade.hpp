#pragma once

#include <optional>

#include "resurgo/germ.hpp"

namespace resurgo {

struct PadePole {
  BigComplex location;
  BigComplex residue;  // residue of the rational approximant (simple pole)
};

// Rational interpolant of a germ, type [L:M]; Taylor expansion matches the
// input through order L+M.
class PadeApproximant {
 public:
  PadeApproximant() = default;
  PadeApproximant(Jet num, Jet den, int L, int M);

  const Jet& num() const { return num_; }
  const Jet& den() const { return den_; }
  int L() const { return L_; }
  int M() const { return M_; }
  const std::vector<PadePole>& poles() const { return poles_; }

  BigComplex eval(const BigComplex& w) const;
  BigComplex operator()(const BigComplex& w) const { return eval(w); }

 private:
  Jet num_, den_;
  int L_ = 0, M_ = 0;
  std::vector<PadePole> poles_;
};

// [L:M] Pade approximant from the first L+M+1 coefficients, solving the
// Toeplitz system at working precision. Throws NumericalError with a
// reduce-M hint when the system is singular.
PadeApproximant pade(const Jet& coeffs, int L, int M);
PadeApproximant pade(const BorelGerm& germ, int L, int M);

enum class SingularityKind { IsolatedPole, BranchCutHead, Unresolved };

struct BorelSingularity {
  BigComplex chi;
  SingularityKind kind = SingularityKind::Unresolved;
  std::optional<BigComplex> alpha;  // estimated order, when computable
  int cluster_multiplicity = 1;
  std::vector<PadePole> support;  // poles backing this classification
};

struct StabilityConfig {
  // A pole counts as stable if a pole of the comparison approximant lies
  // within match_tol (relative to |pole|, with an absolute floor).
  double match_tol = 1e-6;
  // Poles with |residue| below residue_floor * scale are numerical noise.
  double residue_floor = 1e-20;
  // Branch-cut heuristic: at least min_string poles collinear within
  // angular_tol radians, with monotone spacing from the head outward.
  int min_string = 4;
  double angular_tol = 0.05;
  // Poles closer than cluster_radius * |location| merge into one singularity.
  double cluster_radius = 1e-4;
};

// Classifies the poles of `p` against a second approximant of nearby order
// (stability across orders), collapsing aligned strings into a cut head.
std::vector<BorelSingularity> detect_singularities(const PadeApproximant& p,
                                                   const PadeApproximant& higher,
                                                   const StabilityConfig& config = {});

// Convenience: builds [L:M] and [L+2:M+2] from the germ and classifies.
std::vector<BorelSingularity> detect_singularities(const Jet& coeffs, int L, int M,
                                                   const StabilityConfig& config = {});

// Pade approximant of a shifted germ sum_i a_i t^i around a singularity chi;
// pole locations are in the local variable t = w - chi. Requires >= 8
// samples; orders default to near-diagonal in the available count.
PadeApproximant pade_about_singularity(const Jet& coeff_samples, const BigComplex& chi);

// Late-coefficient estimate of (chi, alpha, a0) for the nearest singularity of
// a germ, from the factorial-over-power model u_n ~ a0 Gamma(n+alpha) /
// (Gamma(alpha) Gamma(n+1) chi^(n+alpha)) via Richardson-accelerated ratios.
struct SingularityOrderFit {
  BigComplex chi;
  BigComplex alpha;
  BigFloat residual;
};
SingularityOrderFit estimate_singularity_order(const Jet& coeffs);

}  // namespace resurgo
