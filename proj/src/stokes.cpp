#include "resurgo/stokes.hpp"

namespace resurgo {

namespace {

bool near_any(const BigComplex& z, const std::vector<BigComplex>& pts, const BigFloat& margin) {
  for (const auto& p : pts)
    if (abs(z - p) <= margin) return true;
  return false;
}

}  // namespace

StokesLine trace_stokes_from(SingulantProbe& seed_probe, const DomainRect& domain,
                             const std::vector<BigComplex>& singular_points,
                             const StokesTraceConfig& config) {
  Precision prec = seed_probe.z().precision();
  StokesLine line;
  BigFloat margin(config.singular_margin, prec);
  BigFloat floor_scale(1e-30, prec);
  BigFloat imag_tol(config.imag_tol, prec);
  BigComplex seed = seed_probe.z();
  BigFloat h(config.step, prec);

  std::unique_ptr<SingulantProbe> probe = seed_probe.clone();
  line.points.push_back(seed);
  for (int n = 0; n < config.max_points; ++n) {
    std::unique_ptr<SingulantProbe> saved = probe->clone();
    bool advanced = false;
    while (!advanced) {
      try {
        // Predictor: chi -> chi + h along the level line of Im chi.
        BigComplex cp = probe->chi_prime();
        if (abs(cp).is_zero()) throw NumericalError("stokes trace: chi' vanished");
        BigComplex dz = BigComplex(h, BigFloat(0L, prec)) / cp;
        probe->move_to(probe->z() + dz);
        // Corrector: push Im chi back to zero along i/chi'.
        bool corrected = false;
        for (int it = 0; it < 8; ++it) {
          BigComplex chi = probe->chi();
          BigFloat target = imag_tol * max(abs(chi), floor_scale);
          if (abs(chi.imag()) <= target) {
            corrected = true;
            break;
          }
          BigComplex corr = BigComplex(BigFloat(0L, prec), -chi.imag()) / probe->chi_prime();
          if (abs(corr) > h * BigFloat(0.75, prec))
            throw NumericalError("stokes trace: corrector step too large");
          probe->move_to(probe->z() + corr);
        }
        if (!corrected) throw NumericalError("stokes trace: corrector did not settle");
        advanced = true;
      } catch (const NumericalError&) {
        probe = saved->clone();
        h = h / 2L;
        if (h < BigFloat(1e-9, prec)) {
          line.end = StokesEnd::Stalled;
          return line;
        }
      }
    }
    line.points.push_back(probe->z());
    // Gentle step growth back toward the configured scale.
    if (h < BigFloat(config.step, prec)) h = h * 2L;

    if (!domain.contains(probe->z())) {
      line.end = StokesEnd::LeftDomain;
      return line;
    }
    if (near_any(probe->z(), singular_points, margin) && line.points.size() > 3) {
      line.end = StokesEnd::HitSingularSet;
      return line;
    }
    if (line.points.size() > 8 && abs(probe->z() - seed) < BigFloat(config.step, prec) / 2L) {
      line.end = StokesEnd::Closed;
      return line;
    }
  }
  line.end = StokesEnd::Stalled;
  return line;
}

namespace {

std::vector<BigFloat> seed_directions(const BigComplex& leading, int gamma, Precision prec) {
  // Candidate rays solve Im(X1 r^g e^{i g theta}) = 0; keep Re > 0.
  std::vector<BigFloat> out;
  BigFloat pi = BigFloat::pi(prec);
  BigFloat argx = arg(leading);
  for (int k = 0; k < 2 * gamma; ++k) {
    BigFloat theta = (pi * k - argx) / static_cast<long>(gamma);
    BigFloat phase = argx + theta * gamma;
    if (cos(phase).sign() > 0) out.push_back(theta);
  }
  return out;
}

}  // namespace

std::vector<StokesLine> trace_stokes_lines(const SingulantEquation& eq,
                                           const SingulantBranch& branch, const DomainRect& domain,
                                           const std::vector<BigComplex>& singular_points,
                                           const StokesTraceConfig& config) {
  Precision prec = branch.z_star.precision();
  std::vector<StokesLine> out;
  BigFloat seed_r(config.seed_radius, prec);
  BigFloat base_r = abs(branch.z_base() - branch.z_star);
  BigFloat base_arg = arg(branch.z_base() - branch.z_star);

  for (const BigFloat& theta : seed_directions(branch.leading, branch.zero_order, prec)) {
    // Walk the cursor from the branch base around the circle |z - z_star| =
    // |base|, then radially inward to the seed point; both legs avoid the
    // collision at z_star.
    BranchCursor cursor = BranchCursor::at_branch_base(eq, branch);
    BigFloat dtheta = theta - base_arg;
    const int kArc = 24;
    try {
      for (int j = 1; j <= kArc; ++j)
        cursor.move_to(branch.z_star + polar(base_r, base_arg + dtheta * j / kArc));
      cursor.move_to(branch.z_star + polar(seed_r, theta));
    } catch (const NumericalError&) {
      continue;  // direction unreachable for this branch (monodromy wall)
    }
    BranchProbe probe(cursor);
    StokesLine line = trace_stokes_from(probe, domain, singular_points, config);
    line.branch_id = branch.id;
    line.points.insert(line.points.begin(), branch.z_star);
    out.push_back(std::move(line));
  }
  return out;
}

std::vector<StokesLine> trace_stokes_lines(const RatFunc& chi, const DomainRect& domain,
                                           const std::vector<BigComplex>& singular_points,
                                           const StokesTraceConfig& config, Precision prec) {
  std::vector<StokesLine> out;
  if (chi.is_zero() || chi.num().degree() < 1) return out;  // constant: no lines
  for (const auto& rc : poly_roots(chi.num(), prec)) {
    if (!domain.contains(rc.root)) continue;
    int gamma = rc.multiplicity;
    // Leading coefficient from a small probe offset.
    BigFloat r0(config.seed_radius, prec);
    BigComplex probe_pt = rc.root + BigComplex(r0, BigFloat(0L, prec));
    BigComplex leading = chi.eval(probe_pt) / pow(probe_pt - rc.root, static_cast<long>(gamma));
    for (const BigFloat& theta : seed_directions(leading, gamma, prec)) {
      ClosedFormProbe probe(chi, rc.root + polar(r0, theta));
      StokesLine line = trace_stokes_from(probe, domain, singular_points, config);
      line.points.insert(line.points.begin(), rc.root);
      out.push_back(std::move(line));
    }
  }
  return out;
}

}  // namespace resurgo
