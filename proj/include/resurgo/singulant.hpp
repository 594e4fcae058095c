#pragma once

#include "resurgo/perturbative.hpp"
#include "resurgo/quadrature.hpp"

namespace resurgo {

// Algebraic equation for lambda = chi'(z): sum_i P_i(z) (-lambda)^i = 0,
// stored as a polynomial in lambda with rational-function coefficients. The
// sign pattern is what the Borel-plane singularity ansatz produces; for
// second order it reads (chi')^2 - P chi' + Q = 0.
struct SingulantEquation {
  std::vector<RatFunc> coeffs;  // ascending in lambda

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  // Numeric lambda-polynomial coefficients at a point.
  Jet at(const BigComplex& z) const;
  BigComplex eval(const BigComplex& z, const BigComplex& lambda) const;
};

SingulantEquation singulant_equation(const ODESpec& spec);

struct ComplexPath {
  std::vector<BigComplex> samples;

  static ComplexPath from_waypoints(const std::vector<BigComplex>& waypoints,
                                    const BigFloat& max_step);
  // Circle around `center`, anticlockwise, closed (first sample repeated).
  static ComplexPath circle(const BigComplex& center, const BigFloat& radius, int segments,
                            Precision prec);
  const BigComplex& front() const { return samples.front(); }
  const BigComplex& back() const { return samples.back(); }
};

struct TurningPointError : NumericalError {
  TurningPointError(const std::string& msg, BigComplex where)
      : NumericalError(msg), location(std::move(where)) {}
  BigComplex location;
};

// chi' values for all branches along a path; tracks keep their identity by
// nearest-match continuation with adaptive sub-stepping near collisions.
struct RootTracks {
  ComplexPath path;                             // possibly refined
  std::vector<std::vector<BigComplex>> lambda;  // [branch][sample]
};

RootTracks continue_roots(const SingulantEquation& eq, const ComplexPath& path,
                          const std::vector<BigComplex>& start_roots);

// One branch of the singulant with chi(z_star) = 0.
struct SingulantBranch {
  int id = 0;
  BigComplex z_star;
  ComplexPath path;                    // starts at z_star
  std::vector<BigComplex> chi_prime;   // along path
  std::vector<BigComplex> chi;         // along path, chi[0] = 0
  int zero_order = 1;                  // gamma
  BigComplex leading;                  // X1 in chi ~ X1 (z - z_star)^gamma

  const BigComplex& z_base() const { return path.back(); }
  BigComplex chi_base() const { return chi.back(); }
};

// Integrates chi = int chi' along the track's path (adaptive Gauss with a
// Richardson half-step check) and estimates the vanishing order at z_star.
// The track's path must start at z_star.
SingulantBranch integrate_singulant(const SingulantEquation& eq, const ComplexPath& path,
                                    const std::vector<BigComplex>& lambda_track,
                                    const BigComplex& z_star);

// All branches through z_star seen from a base point: solves the roots at
// z_base, tracks each to z_star along a geometrically refined segment, and
// integrates chi outward with chi(z_star) = 0.
std::vector<SingulantBranch> singulant_branches(const SingulantEquation& eq,
                                                const BigComplex& z_star,
                                                const BigComplex& z_base);

// Taylor jet of chi'(z) at (z0, lambda0) by implicit Newton in jet space;
// z0 must be regular for the equation's coefficients and the root simple.
Jet singulant_prime_jet(const SingulantEquation& eq, const BigComplex& z0,
                        const BigComplex& lambda0, size_t n);

// Newton-polished root of the lambda-polynomial at z, starting from `guess`.
BigComplex continue_root(const SingulantEquation& eq, const BigComplex& z,
                         const BigComplex& guess);

// Continuously movable evaluation point on a singulant branch, carrying
// (z, chi', chi). Movements must follow a path (no jumps across cuts).
class BranchCursor {
 public:
  BranchCursor(const SingulantEquation& eq, BigComplex z, BigComplex lambda, BigComplex chi);
  static BranchCursor at_branch_base(const SingulantEquation& eq, const SingulantBranch& branch);

  const BigComplex& z() const { return z_; }
  const BigComplex& chi_prime() const { return lambda_; }
  const BigComplex& chi() const { return chi_; }

  // Moves along the straight segment to z_new, adapting the step to the
  // jet's convergence; throws TurningPointError on branch collision.
  void move_to(const BigComplex& z_new);

 private:
  void step(const BigComplex& target);
  const SingulantEquation* eq_;
  BigComplex z_, lambda_, chi_;
  Precision prec_;
};

}  // namespace resurgo
