#pragma once

#include <memory>

#include "resurgo/singulant.hpp"

namespace resurgo {

struct DomainRect {
  double re0 = -2, im0 = -2, re1 = 2, im1 = 2;

  bool contains(const BigComplex& z) const {
    double x = z.real().to_double(), y = z.imag().to_double();
    return x >= re0 && x <= re1 && y >= im0 && y <= im1;
  }
};

enum class StokesEnd { HitSingularSet, LeftDomain, Closed, Stalled };

struct StokesLine {
  int branch_id = 0;
  std::vector<BigComplex> points;
  StokesEnd end = StokesEnd::LeftDomain;
};

// Continuously movable (chi, chi') evaluation the tracer drives. Movements
// must be path-continuous; implementations carry their own branch state.
class SingulantProbe {
 public:
  virtual ~SingulantProbe() = default;
  virtual void move_to(const BigComplex& z) = 0;
  virtual BigComplex z() const = 0;
  virtual BigComplex chi() const = 0;
  virtual BigComplex chi_prime() const = 0;
  virtual std::unique_ptr<SingulantProbe> clone() const = 0;
};

// Probe over a tracked ODE singulant branch.
class BranchProbe : public SingulantProbe {
 public:
  BranchProbe(const SingulantEquation& eq, const SingulantBranch& branch)
      : cursor_(BranchCursor::at_branch_base(eq, branch)) {}
  explicit BranchProbe(BranchCursor cursor) : cursor_(std::move(cursor)) {}
  void move_to(const BigComplex& z) override { cursor_.move_to(z); }
  BigComplex z() const override { return cursor_.z(); }
  BigComplex chi() const override { return cursor_.chi(); }
  BigComplex chi_prime() const override { return cursor_.chi_prime(); }
  std::unique_ptr<SingulantProbe> clone() const override {
    return std::make_unique<BranchProbe>(cursor_);
  }

 private:
  BranchCursor cursor_;
};

// Probe over an explicitly given rational singulant chi(z).
class ClosedFormProbe : public SingulantProbe {
 public:
  ClosedFormProbe(RatFunc chi, BigComplex z)
      : chi_fn_(std::move(chi)), dchi_fn_(chi_fn_.derivative()), z_(std::move(z)) {}
  void move_to(const BigComplex& z) override { z_ = z; }
  BigComplex z() const override { return z_; }
  BigComplex chi() const override { return chi_fn_.eval(z_); }
  BigComplex chi_prime() const override { return dchi_fn_.eval(z_); }
  std::unique_ptr<SingulantProbe> clone() const override {
    return std::make_unique<ClosedFormProbe>(*this);
  }

 private:
  RatFunc chi_fn_, dchi_fn_;
  BigComplex z_;
};

struct StokesTraceConfig {
  double step = 0.02;            // Re(chi) increment per predictor step
  double seed_radius = 5e-3;     // offset from z_star where tracing starts
  double singular_margin = 2e-2; // stop distance from the physical singular set
  double imag_tol = 1e-12;       // |Im chi| <= imag_tol * max(|chi|, floor)
  int max_points = 4000;
};

// Traces the locus Im chi = 0, Re chi > 0 from a seed point outward.
StokesLine trace_stokes_from(SingulantProbe& probe, const DomainRect& domain,
                             const std::vector<BigComplex>& singular_points,
                             const StokesTraceConfig& config = {});

// Seeds at z_star along the rays where the local model X1 (z-z_star)^gamma is
// real positive, then traces each admissible direction of the branch.
std::vector<StokesLine> trace_stokes_lines(const SingulantEquation& eq,
                                           const SingulantBranch& branch, const DomainRect& domain,
                                           const std::vector<BigComplex>& singular_points,
                                           const StokesTraceConfig& config = {});

// Same seeding for an explicit rational singulant; z_star iterates over the
// zeros of chi. A constant chi yields no lines.
std::vector<StokesLine> trace_stokes_lines(const RatFunc& chi, const DomainRect& domain,
                                           const std::vector<BigComplex>& singular_points,
                                           const StokesTraceConfig& config = {},
                                           Precision prec = default_precision());

}  // namespace resurgo
