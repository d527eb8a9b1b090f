#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringgate/analysis.hpp"
#include "ringgate/gates.hpp"

namespace ringgate {

enum class Format { csv, json };

Format parse_format(std::string_view name);

/// 17 significant digits; "nan"/"inf"/"-inf" for non-finite values.
std::string format_double(double v);

/// One refined lossless point with its oracle cross-check.
struct LosslessRow {
  int curve = -1;  // -1 for diametric points
  double ka = 0.0;
  double x = 0.0;
  double gamma = 0.0;
  double t_mag = 0.0;
  double delta = 0.0;
  double reflection_norm = 0.0;  // oracle ||R||_F / sqrt(2)
};

/// Column sets:
///   ScanGrid    ka,x,gamma,t_mag,delta,delta0,flag
///   curves      curve,ka,x,gamma,t_mag,delta
///   lossless    curve,ka,x,gamma,t_mag,delta,reflection_norm
///   GateSequence (JSON only) params/rows/composed/total_efficiency/fidelities
/// JSON documents are {"schema_version":1, "params":{...}, "rows":[...]} with
/// extra top-level keys for sequences. Output is byte-stable for equal input.
std::string emit_table(const ScanGrid& grid, Format fmt, const nlohmann::json& params = {});
std::string emit_table(const std::vector<Curve>& curves, Format fmt, const nlohmann::json& params = {});
std::string emit_table(const std::vector<LosslessRow>& rows, Format fmt, const nlohmann::json& params = {});
std::string emit_table(const GateSequence& seq, Format fmt, const nlohmann::json& params = {});

/// Fidelities of a composed matrix against X, Z and H.
nlohmann::json standard_fidelities(const SpinorMatrix& m);

nlohmann::json matrix_to_json(const SpinorMatrix& m);
SpinorMatrix matrix_from_json(const nlohmann::json& j);

/// Reads rings (rows: {"ka", "x", "gamma"}; gamma may be a number or an angle
/// string such as "0.5pi"), params.method and params.link_phases ([[re, im], ...]),
/// then composes them. Throws InvalidArgument on malformed documents.
GateSequence sequence_from_json(const nlohmann::json& doc);

/// Splits one CSV table into its header and raw cell rows.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};
CsvTable parse_csv(std::string_view text);

}  // namespace ringgate
