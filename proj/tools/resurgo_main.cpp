// Borel-plane exponential asymptotics toolkit: perturbative series, Borel
// germs, Pade singularity scans, singulants, Stokes graphs, trans-series
// assembly, and jump validation for singularly perturbed linear ODEs.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "resurgo/io.hpp"
#include "resurgo/stokes.hpp"
#include "resurgo/transseries.hpp"

namespace fs = std::filesystem;
using namespace resurgo;

namespace {

struct RunConfig {
  std::string spec_path;
  std::string out_dir = ".";
  long precision = 0;  // 0: from spec / env / default
  int terms = 0;       // 0: from spec
  std::string pade_orders = "20:21";
  std::string z_text = "1,0";
  std::vector<std::string> eps_list;
  std::vector<double> domain;  // re0,im0,re1,im1
  double tol = 1e-6;

  std::string describe(const std::string& command) const {
    std::ostringstream os;
    os << "command=" << command << " spec=" << spec_path << " out=" << out_dir
       << " precision=" << precision << " terms=" << terms << " pade=" << pade_orders
       << " z=" << z_text << " eps=";
    for (size_t i = 0; i < eps_list.size(); ++i) os << (i ? ";" : "") << eps_list[i];
    os << " tol=" << tol;
    return os.str();
  }
};

BigComplex parse_point(const std::string& text, Precision prec) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    return BigComplex(BigFloat::parse(text, prec), BigFloat(0L, prec));
  return BigComplex(BigFloat::parse(text.substr(0, comma), prec),
                    BigFloat::parse(text.substr(comma + 1), prec));
}

std::pair<int, int> parse_pade_orders(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("--pade expects L:M", 1, 1);
  return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

struct Session {
  SpecFile spec;
  Precision prec;
  RunConfig cfg;
  std::string command;

  fs::path out_file(const std::string& name) const {
    fs::create_directories(cfg.out_dir);
    return fs::path(cfg.out_dir) / name;
  }
  void write(const std::string& name, const std::string& contents) const {
    std::ofstream out(out_file(name));
    out << contents;
    std::cout << "wrote " << (fs::path(cfg.out_dir) / name).string() << "\n";
  }
  std::string csv_header(const std::string& columns) const {
    return "# " + cfg.describe(command) + "\n" + columns + "\n";
  }
};

Session open_session(const RunConfig& cfg, const std::string& command) {
  Session s{load_spec_file(cfg.spec_path), 256, cfg, command};
  s.prec = s.spec.precision_bits;
  if (const char* env = std::getenv("RESURGO_PRECISION")) s.prec = std::atol(env);
  if (cfg.precision > 0) s.prec = cfg.precision;
  if (s.prec < 64) s.prec = 64;
  set_default_precision(s.prec);
  if (cfg.terms > 0) s.spec.series_order = cfg.terms;
  return s;
}

std::string complex_csv(const BigComplex& v) {
  return v.real().str(20) + "," + v.imag().str(20);
}

int cmd_expand(const RunConfig& cfg) {
  Session s = open_session(cfg, "expand");
  PerturbativeSeries series = expand_perturbative(s.spec.ode, s.spec.series_order);
  BigComplex z = parse_point(cfg.z_text, s.prec);

  std::ostringstream os;
  os << "{\n  \"schema\": \"" << kSchemaTag << "\",\n  \"terms\": [";
  for (size_t n = 0; n < series.terms.size(); ++n)
    os << (n ? ", " : "") << "\"" << series.terms[n].str() << "\"";
  os << "],\n  \"samples_at\": " << json_complex(z, 24) << ",\n  \"samples\": [";
  for (size_t n = 0; n < series.terms.size(); ++n) {
    BigComplex v(s.prec);
    try {
      v = series.terms[n].eval(z);
    } catch (const std::domain_error&) {
    }
    os << (n ? ", " : "") << json_complex(v, 24);
  }
  os << "]\n}\n";
  s.write("series.json", os.str());
  return 0;
}

int cmd_germ(const RunConfig& cfg) {
  Session s = open_session(cfg, "germ");
  PerturbativeSeries series = expand_perturbative(s.spec.ode, s.spec.series_order);
  PhysicalSingularSet gamma_z = singular_set(series, s.spec.ode, s.prec);
  BigComplex z = parse_point(cfg.z_text, s.prec);
  BorelGerm germ = borel_germ(series, z, &gamma_z);

  std::ostringstream os;
  os << "{\n  \"schema\": \"" << kSchemaTag << "\",\n  \"z0\": " << json_complex(germ.z0, 24)
     << ",\n  \"constant\": " << json_complex(germ.constant, 24) << ",\n  \"coeffs\": [";
  for (size_t n = 0; n < germ.coeffs.size(); ++n)
    os << (n ? ", " : "") << json_complex(germ.coeffs[n], 24);
  os << "]\n}\n";
  s.write("germ.json", os.str());
  return 0;
}

int cmd_pade(const RunConfig& cfg) {
  Session s = open_session(cfg, "pade");
  auto [L, M] = parse_pade_orders(cfg.pade_orders);
  PerturbativeSeries series = expand_perturbative(s.spec.ode, s.spec.series_order);
  PhysicalSingularSet gamma_z = singular_set(series, s.spec.ode, s.prec);
  BigComplex z = parse_point(cfg.z_text, s.prec);
  if (gamma_z.contains_near(z, BigFloat(1e-8, s.prec)))
    throw NumericalError("pade: z lies on the physical singular set (boundary layer); "
                         "pick a base point off Gamma_z");
  BorelGerm germ = borel_germ(series, z, &gamma_z);
  PadeApproximant ap = pade(germ, L, M);
  auto sing = detect_singularities(germ.coeffs, L, M);

  std::ostringstream csv;
  csv << s.csv_header("re_w,im_w,abs_residue,classification");
  for (const auto& pole : ap.poles()) {
    std::string cls = "unstable";
    for (const auto& bs : sing) {
      for (const auto& sp : bs.support)
        if (abs(sp.location - pole.location).to_double() < 1e-12) {
          cls = bs.kind == SingularityKind::IsolatedPole     ? "isolated-pole"
                : bs.kind == SingularityKind::BranchCutHead  ? "branch-cut"
                                                             : "unresolved";
        }
    }
    csv << complex_csv(pole.location) << "," << abs(pole.residue).str(8) << "," << cls << "\n";
  }
  s.write("pade_poles.csv", csv.str());

  std::ostringstream js;
  js << "{\n  \"schema\": \"" << kSchemaTag << "\",\n  \"z\": " << json_complex(z, 24)
     << ",\n  \"orders\": \"" << L << ":" << M << "\",\n  \"singularities\": [";
  for (size_t i = 0; i < sing.size(); ++i) {
    js << (i ? ",\n    " : "\n    ") << "{\"chi\": " << json_complex(sing[i].chi, 24)
       << ", \"kind\": \""
       << (sing[i].kind == SingularityKind::IsolatedPole    ? "isolated-pole"
           : sing[i].kind == SingularityKind::BranchCutHead ? "branch-cut-head"
                                                            : "unresolved")
       << "\", \"order\": " << sing[i].cluster_multiplicity << "}";
  }
  js << "\n  ]\n}\n";
  s.write("singularities.json", js.str());
  return 0;
}

int cmd_singulant(const RunConfig& cfg) {
  Session s = open_session(cfg, "singulant");
  PerturbativeSeries series = expand_perturbative(s.spec.ode, std::min(s.spec.series_order, 12));
  PhysicalSingularSet gamma_z = singular_set(series, s.spec.ode, s.prec);
  SingulantEquation eq = singulant_equation(s.spec.ode);
  BigComplex z_base = parse_point(cfg.z_text, s.prec);

  std::ostringstream js;
  js << "{\n  \"schema\": \"" << kSchemaTag << "\",\n  \"branches\": [";
  bool first = true;
  for (const auto& p : gamma_z.points) {
    std::vector<SingulantBranch> branches;
    try {
      branches = singulant_branches(eq, p.z, z_base);
    } catch (const NumericalError& e) {
      std::cerr << "note: skipping z_star = " << p.z.str(6) << ": " << e.what() << "\n";
      continue;
    }
    for (const auto& br : branches) {
      js << (first ? "\n    " : ",\n    ");
      first = false;
      js << "{\"z_star\": " << json_complex(br.z_star, 24) << ", \"branch\": " << br.id
         << ", \"zero_order\": " << br.zero_order
         << ", \"chi_at_base\": " << json_complex(br.chi_base(), 24)
         << ", \"chi_prime_at_base\": " << json_complex(br.chi_prime.back(), 24) << "}";
    }
  }
  js << "\n  ]\n}\n";
  s.write("singulants.json", js.str());
  return 0;
}

DomainRect domain_from(const RunConfig& cfg) {
  DomainRect rect;
  if (cfg.domain.size() == 4) {
    rect.re0 = cfg.domain[0];
    rect.im0 = cfg.domain[1];
    rect.re1 = cfg.domain[2];
    rect.im1 = cfg.domain[3];
  }
  return rect;
}

void write_stokes_outputs(const Session& s, const std::vector<StokesLine>& lines) {
  std::ostringstream csv;
  csv << s.csv_header("line_id,re_z,im_z");
  for (size_t i = 0; i < lines.size(); ++i)
    for (const auto& p : lines[i].points) csv << i << "," << complex_csv(p) << "\n";
  s.write("stokes_lines.csv", csv.str());

  std::ostringstream js;
  js << "{\n  \"schema\": \"" << kSchemaTag << "\",\n  \"lines\": [";
  for (size_t i = 0; i < lines.size(); ++i) {
    js << (i ? ",\n    " : "\n    ") << "{\"branch\": " << lines[i].branch_id << ", \"end\": \""
       << (lines[i].end == StokesEnd::HitSingularSet ? "hit-singular-set"
           : lines[i].end == StokesEnd::LeftDomain   ? "left-domain"
           : lines[i].end == StokesEnd::Closed       ? "closed"
                                                     : "stalled")
       << "\", \"points\": [";
    for (size_t k = 0; k < lines[i].points.size(); ++k)
      js << (k ? ", " : "") << json_complex(lines[i].points[k], 12);
    js << "]}";
  }
  js << "\n  ]\n}\n";
  s.write("stokes_graph.json", js.str());
}

int cmd_stokes(const RunConfig& cfg) {
  Session s = open_session(cfg, "stokes");
  DomainRect rect = domain_from(cfg);
  std::vector<StokesLine> lines;

  if (!s.spec.explicit_singulants.empty()) {
    for (const auto& chi : s.spec.explicit_singulants) {
      auto traced = trace_stokes_lines(chi, rect, {}, {}, s.prec);
      lines.insert(lines.end(), traced.begin(), traced.end());
    }
    write_stokes_outputs(s, lines);
    return 0;
  }

  PerturbativeSeries series = expand_perturbative(s.spec.ode, std::min(s.spec.series_order, 12));
  PhysicalSingularSet gamma_z = singular_set(series, s.spec.ode, s.prec);
  SingulantEquation eq = singulant_equation(s.spec.ode);
  BigComplex z_base = parse_point(cfg.z_text, s.prec);
  std::vector<BigComplex> singular_pts;
  for (const auto& p : gamma_z.points) singular_pts.push_back(p.z);

  for (const auto& p : gamma_z.points) {
    std::vector<SingulantBranch> branches;
    try {
      branches = singulant_branches(eq, p.z, z_base);
    } catch (const NumericalError& e) {
      std::cerr << "note: skipping z_star = " << p.z.str(6) << ": " << e.what() << "\n";
      continue;
    }
    for (const auto& br : branches) {
      auto traced = trace_stokes_lines(eq, br, rect, singular_pts);
      lines.insert(lines.end(), traced.begin(), traced.end());
    }
  }
  write_stokes_outputs(s, lines);
  return 0;
}

int cmd_transseries(const RunConfig& cfg) {
  Session s = open_session(cfg, "transseries");
  PerturbativeSeries series = expand_perturbative(s.spec.ode, s.spec.series_order);
  PhysicalSingularSet gamma_z = singular_set(series, s.spec.ode, s.prec);
  BigComplex z_base = parse_point(cfg.z_text, s.prec);

  std::ostringstream js;
  js << "{\n  \"schema\": \"" << kSchemaTag << "\",\n  \"components\": [";
  bool first = true;

  if (gamma_z.points.empty()) {
    js << "],\n  \"note\": \"empty physical singular set: no components\"\n}\n";
    s.write("transseries.json", js.str());
    return 0;
  }

  if (s.spec.ode.order == 1) {
    // First order is exactly soluble in the Borel plane; report the closed
    // form data instead of an inner-matched component.
    RatFunc G = s.spec.ode.p(0) / s.spec.ode.p(1);
    RatFunc H = s.spec.ode.forcing.size() > 1 ? s.spec.ode.forcing[1] / s.spec.ode.p(1) : RatFunc();
    js << "],\n  \"first_order_closed_form\": {\"G\": \"" << G.str() << "\", \"H\": \"" << H.str()
       << "\", \"y_B\": \"(H/G)(chi^-1(chi(z) - w)), chi = int G\"}\n}\n";
    s.write("transseries.json", js.str());
    return 0;
  }

  SingulantEquation eq = singulant_equation(s.spec.ode);
  for (const auto& p : gamma_z.points) {
    std::vector<SingulantBranch> branches;
    try {
      branches = singulant_branches(eq, p.z, z_base);
    } catch (const NumericalError& e) {
      std::cerr << "note: skipping z_star = " << p.z.str(6) << ": " << e.what() << "\n";
      continue;
    }
    for (const auto& br : branches) {
      TransSeriesComponent comp;
      try {
        comp = build_component(s.spec.ode, eq, series, br);
      } catch (const NumericalError& e) {
        std::cerr << "note: branch " << br.id << " at z_star = " << p.z.str(6)
                  << " not matched: " << e.what() << "\n";
        continue;
      }
      js << (first ? "\n    " : ",\n    ");
      first = false;
      js << "{\"z_star\": " << json_complex(br.z_star, 24) << ", \"branch\": " << br.id
         << ", \"gamma\": " << comp.exponents.gamma << ", \"delta\": " << comp.exponents.delta
         << ", \"beta\": \"" << comp.exponents.beta.str() << "\", \"alpha\": \""
         << comp.exponents.alpha.str() << "\", \"chi_at_base\": "
         << json_complex(br.chi_base(), 24) << ", \"matched_constants\": [";
      for (size_t i = 0; i < comp.tracks.size(); ++i) {
        BigComplex a0 = comp.tracks[i].values.back();
        js << (i ? ", " : "") << "{\"index\": " << comp.tracks[i].index
           << ", \"value_at_base\": " << json_complex(a0, 24)
           << ", \"matched\": " << (comp.tracks[i].matched ? "true" : "false") << "}";
      }
      js << "]}";
    }
  }
  js << "\n  ]\n}\n";
  s.write("transseries.json", js.str());
  return 0;
}

int cmd_jump(const RunConfig& cfg) {
  Session s = open_session(cfg, "jump");
  PerturbativeSeries series = expand_perturbative(s.spec.ode, s.spec.series_order);
  PhysicalSingularSet gamma_z = singular_set(series, s.spec.ode, s.prec);
  if (gamma_z.points.empty()) throw NumericalError("jump: empty physical singular set");
  SingulantEquation eq = singulant_equation(s.spec.ode);
  BigComplex z = parse_point(cfg.z_text, s.prec);
  auto branches = singulant_branches(eq, gamma_z.points[0].z, z);

  std::ostringstream js;
  js << "{\n  \"schema\": \"" << kSchemaTag << "\",\n  \"predictions\": [";
  bool first = true;
  for (const auto& br : branches) {
    TransSeriesComponent comp;
    try {
      comp = build_component(s.spec.ode, eq, series, br);
    } catch (const NumericalError&) {
      continue;
    }
    for (const auto& etext : cfg.eps_list) {
      BigComplex eps = parse_point(etext, s.prec);
      BigComplex jump = stokes_jump(comp, z, eps, comp.truncation_order);
      js << (first ? "\n    " : ",\n    ");
      first = false;
      js << "{\"branch\": " << br.id << ", \"eps\": " << json_complex(eps, 12)
         << ", \"chi\": " << json_complex(comp.chi_at(z), 24)
         << ", \"jump\": " << json_complex(jump, 24) << "}";
    }
  }
  js << "\n  ]\n}\n";
  s.write("jump.json", js.str());
  return 0;
}

int cmd_validate(const RunConfig& cfg) {
  Session s = open_session(cfg, "validate");
  PerturbativeSeries series = expand_perturbative(s.spec.ode, s.spec.series_order);
  PhysicalSingularSet gamma_z = singular_set(series, s.spec.ode, s.prec);
  if (gamma_z.points.empty()) throw NumericalError("validate: empty physical singular set");
  SingulantEquation eq = singulant_equation(s.spec.ode);
  BigComplex z = parse_point(cfg.z_text, s.prec);
  auto branches = singulant_branches(eq, gamma_z.points[0].z, z);
  if (branches.empty()) throw NumericalError("validate: no singulant branches");

  // Validate against the branch with the smallest |chi| at the probe (the
  // dominant exponential).
  size_t pick = 0;
  for (size_t b = 1; b < branches.size(); ++b)
    if (abs(branches[b].chi_base()) < abs(branches[pick].chi_base())) pick = b;
  TransSeriesComponent comp = build_component(s.spec.ode, eq, series, branches[pick]);
  BorelGerm germ = borel_germ(series, z);

  bool ok = true;
  std::ostringstream js;
  js << "{\n  \"schema\": \"" << kSchemaTag << "\",\n  \"rows\": [";
  bool first = true;
  for (const auto& etext : cfg.eps_list) {
    BigComplex eps = parse_point(etext, s.prec);
    BigComplex chi = comp.chi_at(z);
    BigFloat dir = arg(chi);
    JumpMeasurement m = measure_jump(germ, eps, dir - BigFloat(0.35, s.prec),
                                     dir + BigFloat(0.35, s.prec), s.prec);
    BigComplex pred = stokes_jump(comp, z, eps, comp.truncation_order);
    BigFloat rel = abs(abs(m.jump) - abs(pred)) / max(abs(pred), BigFloat::pow2(-2000, s.prec));
    bool row_ok = rel.to_double() <= cfg.tol && !m.below_noise;
    ok = ok && row_ok;
    js << (first ? "\n    " : ",\n    ");
    first = false;
    js << "{\"eps\": " << json_complex(eps, 12) << ", \"predicted\": " << json_complex(pred, 24)
       << ", \"measured\": " << json_complex(m.jump, 24) << ", \"rel_error\": \"" << rel.str(6)
       << "\", \"noise_floor\": \"" << m.noise.str(6) << "\""
       << (m.below_noise ? ", \"warning\": \"below noise floor for this precision\"" : "") << "}";
    if (m.below_noise)
      std::cerr << "warning: measured jump below the noise floor at eps = " << eps.str(6)
                << " (noise " << m.noise.str(4) << ")\n";
  }
  js << "\n  ],\n  \"pass\": " << (ok ? "true" : "false") << "\n}\n";
  s.write("validation.json", js.str());
  if (!ok) throw ValidationError("validate: predicted and measured jumps disagree");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Borel-plane exponential asymptotics for singularly perturbed linear ODEs"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--spec", cfg.spec_path, "problem spec JSON")->required();
    sub->add_option("--out", cfg.out_dir, "output directory");
    sub->add_option("--precision", cfg.precision, "working precision in bits");
    sub->add_option("--terms", cfg.terms, "perturbative series length");
    sub->add_option("--pade", cfg.pade_orders, "Pade orders L:M");
    sub->add_option("--z", cfg.z_text, "base/probe point RE,IM");
    sub->add_option("--eps", cfg.eps_list, "epsilon values RE[,IM]");
    sub->add_option("--domain", cfg.domain, "rectangle RE0,IM0,RE1,IM1")->expected(4);
    sub->add_option("--tol", cfg.tol, "validation tolerance");
  };

  std::map<std::string, int (*)(const RunConfig&)> handlers{
      {"expand", cmd_expand},       {"germ", cmd_germ},     {"pade", cmd_pade},
      {"singulant", cmd_singulant}, {"stokes", cmd_stokes}, {"transseries", cmd_transseries},
      {"jump", cmd_jump},           {"validate", cmd_validate}};
  std::map<std::string, std::string> blurbs{
      {"expand", "perturbative series y_0..y_M (exact + sampled)"},
      {"germ", "Borel germ coefficients at a base point"},
      {"pade", "Pade pole cloud and singularity classification"},
      {"singulant", "singulant branches chi through each boundary layer"},
      {"stokes", "trace the Stokes graph"},
      {"transseries", "assemble trans-series components with matched constants"},
      {"jump", "predicted Stokes jumps"},
      {"validate", "predicted vs measured jump report"}};
  for (auto& [name, fn] : handlers) add_common(app.add_subcommand(name, blurbs[name]));

  CLI11_PARSE(app, argc, argv);
  std::string chosen = app.get_subcommands().front()->get_name();
  try {
    return handlers[chosen](cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return 4;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
