#include "ringgate/table_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ringgate/angles.hpp"

namespace ringgate {

using nlohmann::json;

namespace {

json document(const json& params) {
  json doc;
  doc["schema_version"] = 1;
  doc["params"] = params.is_null() ? json::object() : params;
  doc["rows"] = json::array();
  return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

// JSON has no NaN; non-finite values become null.
json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string join(std::initializer_list<std::string> cells) {
  std::string line;
  bool first = true;
  for (const auto& c : cells) {
    if (!first) line += ',';
    line += c;
    first = false;
  }
  line += '\n';
  return line;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw InvalidArgument("unknown format '" + std::string(name) + "' (csv|json)");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string emit_table(const ScanGrid& grid, Format fmt, const json& params) {
  if (fmt == Format::csv) {
    std::string out = "ka,x,gamma,t_mag,delta,delta0,flag\n";
    for (std::size_t i = 0; i < grid.ka_axis.size(); ++i)
      for (std::size_t j = 0; j < grid.x_axis.size(); ++j) {
        const auto& c = grid.at(i, j);
        out += join({format_double(grid.ka_axis[i]), format_double(grid.x_axis[j]),
                     format_double(grid.gamma), format_double(c.t_mag), format_double(c.delta),
                     format_double(c.delta0), to_string(c.flag)});
      }
    return out;
  }
  json doc = document(params);
  for (std::size_t i = 0; i < grid.ka_axis.size(); ++i)
    for (std::size_t j = 0; j < grid.x_axis.size(); ++j) {
      const auto& c = grid.at(i, j);
      doc["rows"].push_back({{"ka", grid.ka_axis[i]}, {"x", grid.x_axis[j]}, {"gamma", grid.gamma},
                             {"t_mag", num(c.t_mag)}, {"delta", num(c.delta)},
                             {"delta0", num(c.delta0)}, {"flag", to_string(c.flag)}});
    }
  return dump(doc);
}

std::string emit_table(const std::vector<Curve>& curves, Format fmt, const json& params) {
  if (fmt == Format::csv) {
    std::string out = "curve,ka,x,gamma,t_mag,delta\n";
    for (std::size_t c = 0; c < curves.size(); ++c)
      for (const auto& p : curves[c].points)
        out += join({std::to_string(c), format_double(p.ka), format_double(p.x),
                     format_double(curves[c].gamma), format_double(p.t_mag), format_double(p.delta)});
    return out;
  }
  json doc = document(params);
  for (std::size_t c = 0; c < curves.size(); ++c)
    for (const auto& p : curves[c].points)
      doc["rows"].push_back({{"curve", c}, {"ka", p.ka}, {"x", p.x}, {"gamma", curves[c].gamma},
                             {"t_mag", p.t_mag}, {"delta", p.delta}});
  return dump(doc);
}

std::string emit_table(const std::vector<LosslessRow>& rows, Format fmt, const json& params) {
  if (fmt == Format::csv) {
    std::string out = "curve,ka,x,gamma,t_mag,delta,reflection_norm\n";
    for (const auto& r : rows)
      out += join({std::to_string(r.curve), format_double(r.ka), format_double(r.x),
                   format_double(r.gamma), format_double(r.t_mag), format_double(r.delta),
                   format_double(r.reflection_norm)});
    return out;
  }
  json doc = document(params);
  for (const auto& r : rows)
    doc["rows"].push_back({{"curve", r.curve}, {"ka", r.ka}, {"x", r.x}, {"gamma", r.gamma},
                           {"t_mag", r.t_mag}, {"delta", r.delta},
                           {"reflection_norm", num(r.reflection_norm)}});
  return dump(doc);
}

json matrix_to_json(const SpinorMatrix& m) {
  json re = json::array(), im = json::array();
  for (int r = 0; r < 2; ++r) {
    re.push_back({m(r, 0).real(), m(r, 1).real()});
    im.push_back({m(r, 0).imag(), m(r, 1).imag()});
  }
  return {{"re", re}, {"im", im}};
}

SpinorMatrix matrix_from_json(const json& j) {
  SpinorMatrix m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = cplx(j.at("re").at(r).at(c).get<double>(), j.at("im").at(r).at(c).get<double>());
  return m;
}

json standard_fidelities(const SpinorMatrix& m) {
  return {{"X", fidelity_up_to_phase(m, target_library(TargetGate::X))},
          {"Z", fidelity_up_to_phase(m, target_library(TargetGate::Z))},
          {"H", fidelity_up_to_phase(m, target_library(TargetGate::H))}};
}

std::string emit_table(const GateSequence& seq, Format fmt, const json& params) {
  if (fmt == Format::csv) throw InvalidArgument("GateSequence has no CSV form; use json");
  json p = params.is_null() ? json::object() : params;
  p["method"] = to_string(seq.method);
  json lp = json::array();
  for (const auto& z : seq.link_phases) lp.push_back({z.real(), z.imag()});
  p["link_phases"] = lp;
  json doc = document(p);
  for (std::size_t i = 0; i < seq.items.size(); ++i) {
    const auto& cfg = seq.items[i];
    doc["rows"].push_back({{"ka", cfg.ka}, {"x", cfg.x}, {"gamma", cfg.gamma},
                           {"t_mag", seq.element_efficiency[i]},
                           {"T", matrix_to_json(seq.element_matrices[i])}});
  }
  doc["composed"] = matrix_to_json(seq.composed);
  doc["total_efficiency"] = seq.total_efficiency;
  doc["fidelities"] = standard_fidelities(seq.composed);
  doc["warnings"] = seq.warnings;
  return dump(doc);
}

GateSequence sequence_from_json(const json& doc) {
  try {
    if (doc.contains("schema_version") && doc.at("schema_version").get<int>() != 1)
      throw InvalidArgument("unsupported schema_version");
    Method method = Method::closed;
    std::vector<cplx> link_phases;
    if (doc.contains("params")) {
      const json& p = doc.at("params");
      if (p.contains("method")) method = parse_method(p.at("method").get<std::string>());
      if (p.contains("link_phases"))
        for (const auto& z : p.at("link_phases")) link_phases.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
    }
    std::vector<RingConfig> items;
    for (const auto& row : doc.at("rows")) {
      const json& g = row.at("gamma");
      const double gamma = g.is_string() ? parse_angle(g.get<std::string>()) : g.get<double>();
      RingConfig cfg{row.at("ka").get<double>(), row.at("x").get<double>(), gamma};
      validate(cfg);
      items.push_back(cfg);
    }
    return compose(std::move(items), method, std::move(link_phases));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed gate sequence: ") + e.what());
  }
}

CsvTable parse_csv(std::string_view text) {
  CsvTable t;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (header) {
      t.header = std::move(cells);
      header = false;
    } else {
      t.rows.push_back(std::move(cells));
    }
  }
  return t;
}

}  // namespace ringgate
