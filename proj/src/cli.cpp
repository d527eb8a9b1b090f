#include "ringgate/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ringgate/analysis.hpp"
#include "ringgate/angles.hpp"
#include "ringgate/closed_form.hpp"
#include "ringgate/gates.hpp"
#include "ringgate/oracle.hpp"
#include "ringgate/table_io.hpp"
#include "ringgate/units.hpp"

namespace ringgate::cli {
namespace {

using nlohmann::json;

unsigned workers_from_env() {
  if (const char* v = std::getenv("RINGGATE_WORKERS")) {
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return 0;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open output file '" + path + "'");
  f << text;
}

std::string fmt_complex(cplx z) {
  return format_double(z.real()) + (z.imag() < 0 ? "-" : "+") + format_double(std::abs(z.imag())) + "i";
}

std::string fmt_matrix(const SpinorMatrix& m) {
  return "[[" + fmt_complex(m(0, 0)) + ", " + fmt_complex(m(0, 1)) + "], [" + fmt_complex(m(1, 0)) +
         ", " + fmt_complex(m(1, 1)) + "]]";
}

std::string fmt6(double v) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(6);
  s << v;
  return s.str();
}

int cmd_tmatrix(const RingConfig& cfg, const std::string& format, std::ostream& out) {
  validate(cfg);
  const auto dec = transmission(cfg);
  const auto label = classify_gate(dec, cfg);
  const auto sol = solve_scattering(cfg);
  const double fid = fidelity_up_to_phase(dec.T, sol.Tmat);
  if (format == "json") {
    json doc = {{"schema_version", 1},
                {"params", {{"ka", cfg.ka}, {"x", cfg.x}, {"gamma", cfg.gamma}}},
                {"rows", json::array()}};
    doc["rows"].push_back({{"method", "closed"}, {"t_mag", dec.t_mag}, {"delta", dec.delta},
                           {"delta0", dec.delta0}, {"delta_plus", dec.delta_plus},
                           {"delta_minus", dec.delta_minus}, {"U", matrix_to_json(dec.U)},
                           {"T", matrix_to_json(dec.T)}, {"gate", to_string(label.kind)},
                           {"gate_angle", label.angle}});
    doc["rows"].push_back({{"method", "oracle"}, {"T", matrix_to_json(sol.Tmat)},
                           {"R", matrix_to_json(sol.Rmat)}, {"residual", sol.residual},
                           {"conservation_defect", sol.conservation_defect},
                           {"condition_estimate", sol.condition_estimate},
                           {"fidelity_vs_closed", fid}});
    out << doc.dump(2) << "\n";
    return exit_ok;
  }
  if (format != "text") throw InvalidArgument("tmatrix format must be text or json");
  out << "ka                  = " << format_double(cfg.ka) << "\n"
      << "x                   = " << format_double(cfg.x) << "\n"
      << "gamma               = " << format_double(cfg.gamma) << "\n"
      << "theta               = " << format_double(-std::atan(cfg.x)) << "\n"
      << "t_mag               = " << format_double(dec.t_mag) << "\n"
      << "delta               = " << format_double(dec.delta) << "\n"
      << "delta/pi            = " << fmt6(dec.delta / pi) << "\n"
      << "delta0              = " << format_double(dec.delta0) << "\n"
      << "gate                = " << to_string(label.kind) << " (angle " << format_double(label.angle) << ")\n"
      << "U                   = " << fmt_matrix(dec.U) << "\n"
      << "T closed            = " << fmt_matrix(dec.T) << "\n"
      << "T oracle            = " << fmt_matrix(sol.Tmat) << "\n"
      << "R oracle            = " << fmt_matrix(sol.Rmat) << "\n"
      << "oracle residual     = " << format_double(sol.residual) << "\n"
      << "conservation defect = " << format_double(sol.conservation_defect) << "\n"
      << "fidelity            = " << format_double(fid) << "\n";
  return exit_ok;
}

std::vector<LosslessRow> lossless_rows(double gamma, double x_fixed, Range ka, Range x,
                                       const CurveOptions& opt) {
  std::vector<LosslessRow> rows;
  const auto reflection = [](const RingConfig& cfg) {
    try {
      return std::sqrt(0.5 * solve_scattering(cfg).Rmat.squaredNorm());
    } catch (const std::runtime_error&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };
  if (std::abs(gamma - pi) < 1e-12) {
    for (double k : lossless_points_diametric(x_fixed, ka)) {
      const auto dec = transmission_diametric(k, x_fixed);
      rows.push_back({-1, k, x_fixed, pi, dec.t_mag, dec.delta, reflection({k, x_fixed, pi})});
    }
    return rows;
  }
  const auto curves = delta_zero_curves(gamma, ka, x, opt);
  for (std::size_t c = 0; c < curves.size(); ++c)
    for (const auto& p : lossless_points(curves[c]))
      rows.push_back({static_cast<int>(c), p.ka, p.x, gamma, p.t_mag, p.delta, reflection({p.ka, p.x, gamma})});
  return rows;
}

int cmd_units(double radius, double mass_ratio, double energy, double alpha,
              const std::string& theta_text, std::ostream& out) {
  if (!theta_text.empty()) {
    const double theta = parse_angle(theta_text);
    const double a = units::alpha_for_theta(theta, radius, mass_ratio);
    out << "theta     = " << format_double(theta) << "\n"
        << "x         = " << format_double(-std::tan(theta)) << "\n"
        << "alpha_eVm = " << format_double(a) << "\n";
    return exit_ok;
  }
  const auto d = units::to_dimensionless({radius, mass_ratio, alpha, energy});
  const double theta = -std::atan(d.x);
  out << "ka            = " << format_double(d.ka) << "\n"
      << "x             = " << format_double(d.x) << "\n"
      << "theta         = " << format_double(theta) << "\n"
      << "|theta|/(pi/2) = " << format_double(std::abs(theta) / (0.5 * pi)) << "\n";
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spin transmission of a two-terminal Rashba quantum ring and the single-qubit gates it realizes"};
  app.require_subcommand(1);
  unsigned workers = workers_from_env();
  app.add_option("--workers", workers, "Worker threads for scans (0 = all cores)");

  // Shared angle/range options are parsed from strings so "0.5pi" works.
  std::string gamma_text = "pi";
  double ka = 20.4, x = 1.0;
  double ka_min = 19.0, ka_max = 22.0, x_min = 0.0, x_max = 3.5;
  std::size_t nka = 500, nx = 350;
  std::string format = "csv", tm_format = "text", out_path, file, method = "closed";
  double radius = 0.25e-6, mass_ratio = 0.023, energy = 11.13e-3, alpha = 0.0;
  std::string theta_text;

  auto* tm = app.add_subcommand("tmatrix", "Single point: closed form and oracle transmission");
  tm->add_option("--ka", ka, "Dimensionless wavenumber k*a")->required();
  tm->add_option("--x", x, "Spin-orbit ratio omega/Omega")->required();
  tm->add_option("--gamma", gamma_text, "Junction angle (radians, 'pi' suffix allowed)");
  tm->add_option("--format", tm_format, "text|json");

  auto* sc = app.add_subcommand("scan", "Efficiency surface on a (ka, x) grid");
  auto* cu = app.add_subcommand("curves", "delta = 0 phase-gate curves");
  auto* ll = app.add_subcommand("lossless", "Lossless gate points (gamma = pi uses --x)");
  for (auto* s : {sc, cu, ll}) {
    s->add_option("--gamma", gamma_text, "Junction angle");
    s->add_option("--ka-min", ka_min);
    s->add_option("--ka-max", ka_max);
    s->add_option("--x-min", x_min);
    s->add_option("--x-max", x_max);
    s->add_option("--nka", nka, "ka samples");
    s->add_option("--nx", nx, "x samples");
    s->add_option("--format", format, "csv|json");
    s->add_option("--out", out_path, "Output file (default stdout)");
  }
  ll->add_option("--x", x, "Fixed spin-orbit ratio for gamma = pi");

  auto* co = app.add_subcommand("compose", "Compose rings in series from a JSON gate sequence");
  co->add_option("--file", file, "Gate sequence JSON")->required()->check(CLI::ExistingFile);
  co->add_option("--method", method, "closed|oracle (overrides the file)");
  co->add_option("--out", out_path, "Output file (default stdout)");

  auto* un = app.add_subcommand("units", "Laboratory <-> dimensionless conversion");
  un->add_option("--radius", radius, "Ring radius in m");
  un->add_option("--mass-ratio", mass_ratio, "m*/m_e");
  un->add_option("--energy", energy, "Carrier energy in eV");
  un->add_option("--alpha", alpha, "Rashba coefficient in eV m");
  un->add_option("--theta", theta_text, "Target tilt angle; prints the Rashba coefficient");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    const double gamma = parse_angle(gamma_text);
    if (*tm) return cmd_tmatrix({ka, x, gamma}, tm_format, out);
    if (*un) return cmd_units(radius, mass_ratio, energy, alpha, theta_text, out);

    if (*co) {
      std::ifstream f(file);
      json doc;
      try {
        doc = json::parse(f);
      } catch (const json::exception& e) {
        throw InvalidArgument(std::string("cannot parse ") + file + ": " + e.what());
      }
      if (co->count("--method")) {
        doc["params"]["method"] = method;
      }
      const GateSequence seq = sequence_from_json(doc);
      write_output(emit_table(seq, Format::json, {{"source", file}}), out_path, out);
      const json fid = standard_fidelities(seq.composed);
      err << "fidelity vs X = " << fmt6(fid["X"]) << ", Z = " << fmt6(fid["Z"]) << ", H = "
          << fmt6(fid["H"]) << "\n";
      for (const auto& w : seq.warnings) err << "warning: " << w << "\n";
      return exit_ok;
    }

    if ((*cu || *ll) && !cu->count("--x-min") && !ll->count("--x-min")) x_min = 0.1;
    const Format fmt = parse_format(format);
    const Range ka_r{ka_min, ka_max}, x_r{x_min, x_max};
    CurveOptions opt;
    if (cu->count("--nka") || ll->count("--nka")) opt.ka_samples = nka;
    if (cu->count("--nx") || ll->count("--nx")) opt.x_samples = nx;
    opt.workers = workers;
    if (!*sc) {
      nka = opt.ka_samples;
      nx = opt.x_samples;
    }
    const json params = {{"gamma", gamma}, {"ka_range", {ka_min, ka_max}}, {"x_range", {x_min, x_max}},
                         {"nka", nka}, {"nx", nx}};
    if (*sc) {
      write_output(emit_table(scan_grid(gamma, ka_r, x_r, nka, nx, workers), fmt, params), out_path, out);
      return exit_ok;
    }
    if (*cu) {
      write_output(emit_table(delta_zero_curves(gamma, ka_r, x_r, opt), fmt, params), out_path, out);
      return exit_ok;
    }
    if (*ll) {
      json p = params;
      p["x"] = x;
      write_output(emit_table(lossless_rows(gamma, x, ka_r, x_r, opt), fmt, p), out_path, out);
      return exit_ok;
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const DegeneratePointError& e) {
    err << "degenerate point: " << e.what() << "\n";
    return exit_degenerate;
  } catch (const SingularSystemError& e) {
    err << "degenerate point: " << e.what() << "\n";
    return exit_degenerate;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_usage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace ringgate::cli
