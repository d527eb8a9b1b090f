#include "doctest.h"
#include "ringgate/cli.hpp"
#include "ringgate/table_io.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

using namespace ringgate;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data_file(const char* name) { return std::string(RINGGATE_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("cli: units") {
  const auto r = run_cli({"units", "--radius", "0.25e-6", "--mass-ratio", "0.023", "--energy", "11.13e-3"});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out.find("ka            = 20.49226863990") != std::string::npos);
  const auto t = run_cli({"units", "--theta", "-0.25pi"});
  CHECK(t.code == cli::exit_ok);
  CHECK(t.out.find("alpha_eVm = ") != std::string::npos);
  CHECK(run_cli({"units", "--radius", "-1"}).code == cli::exit_usage);
}

TEST_CASE("cli: tmatrix reports delta = pi on the diametric line") {
  const auto r = run_cli({"tmatrix", "--ka", "20.4", "--x", "1.0", "--gamma", "pi"});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out.find("delta/pi            = 1.000000") != std::string::npos);
  CHECK(r.out.find("gate                = rotation") != std::string::npos);
  const auto j = run_cli({"tmatrix", "--ka", "20.4", "--x", "1.0", "--gamma", "0.5pi", "--format", "json"});
  REQUIRE(j.code == cli::exit_ok);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc.contains("rows"));
}

TEST_CASE("cli: exit codes") {
  CHECK(run_cli({}).code == cli::exit_usage);
  CHECK(run_cli({"tmatrix", "--ka", "abc", "--x", "1"}).code == cli::exit_usage);
  CHECK(run_cli({"tmatrix", "--ka", "20", "--x", "1", "--bogus"}).code == cli::exit_usage);
  CHECK(run_cli({"tmatrix", "--ka", "20", "--x", "1", "--gamma", "7"}).code == cli::exit_usage);
  CHECK(run_cli({"tmatrix", "--ka", "20", "--x", "1", "--gamma", "0.5pie"}).code == cli::exit_usage);
  CHECK(run_cli({"scan", "--format", "xml", "--nka", "3", "--nx", "3"}).code == cli::exit_usage);
  CHECK(run_cli({"compose", "--file", "/nonexistent.json"}).code == cli::exit_usage);
  const auto d = run_cli({"tmatrix", "--ka", "1", "--x", "0", "--gamma", "pi"});
  CHECK(d.code == cli::exit_degenerate);
  CHECK(d.err.find("degenerate") != std::string::npos);
  CHECK(run_cli({"tmatrix", "--ka", "20", "--x", "0", "--gamma", "pi"}).code == cli::exit_degenerate);
  CHECK(run_cli({"--help"}).code == cli::exit_ok);
}

TEST_CASE("cli: scan CSV re-parses to the emitted values") {
  const std::vector<std::string> args{"scan", "--gamma", "0.5pi", "--nka", "17", "--nx", "13"};
  const auto r = run_cli(args);
  REQUIRE(r.code == cli::exit_ok);
  const auto table = parse_csv(r.out);
  CHECK(table.header == std::vector<std::string>{"ka", "x", "gamma", "t_mag", "delta", "delta0", "flag"});
  REQUIRE(table.rows.size() == 17 * 13);
  const auto grid = scan_grid(0.5 * 3.141592653589793, {19.0, 22.0}, {0.0, 3.5}, 17, 13);
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    const auto& cell = grid.cells[i];
    REQUIRE(std::stod(row[0]) == grid.ka_axis[i / 13]);
    REQUIRE(std::stod(row[1]) == grid.x_axis[i % 13]);
    if (cell.flag != PointFlag::degenerate) {
      REQUIRE(std::stod(row[3]) == cell.t_mag);
      REQUIRE(std::stod(row[4]) == cell.delta);
      REQUIRE(std::stod(row[5]) == cell.delta0);
    }
    REQUIRE(row[6] == to_string(cell.flag));
  }
  CHECK(run_cli(args).out == r.out);
  const auto js = run_cli({"scan", "--gamma", "0.5pi", "--nka", "5", "--nx", "4", "--format", "json"});
  REQUIRE(js.code == cli::exit_ok);
  CHECK(nlohmann::json::parse(js.out)["rows"].size() == 20);
}

TEST_CASE("cli: curves and lossless are byte-stable across runs and worker counts") {
  const auto a = run_cli({"--workers", "1", "lossless", "--gamma", "0.5pi"});
  const auto b = run_cli({"--workers", "4", "lossless", "--gamma", "0.5pi"});
  REQUIRE(a.code == cli::exit_ok);
  CHECK(a.out == b.out);
  const auto table = parse_csv(a.out);
  CHECK(table.header.back() == "reflection_norm");
  REQUIRE(!table.rows.empty());
  for (const auto& row : table.rows) CHECK(std::stod(row.back()) < 1e-3);

  const auto c1 = run_cli({"curves", "--gamma", "0.5pi"});
  REQUIRE(c1.code == cli::exit_ok);
  CHECK(c1.out == run_cli({"curves", "--gamma", "0.5pi"}).out);
  CHECK(parse_csv(c1.out).header.front() == "curve");
  CHECK(run_cli({"curves", "--gamma", "pi"}).code == cli::exit_usage);

  const auto d = run_cli({"lossless", "--gamma", "pi", "--x", "1", "--format", "json"});
  REQUIRE(d.code == cli::exit_ok);
  CHECK(nlohmann::json::parse(d.out)["rows"].size() >= 1);
}

TEST_CASE("cli: compose two quarter-phase rings") {
  const auto r = run_cli({"compose", "--file", data_file("z_from_two_quarter_phase.json")});
  REQUIRE(r.code == cli::exit_ok);
  CHECK(r.err.find("Z = 1.000000") != std::string::npos);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["fidelities"]["Z"].get<double>() > 1.0 - 1e-9);
  CHECK(doc["total_efficiency"].get<double>() > 1.0 - 1e-6);
  CHECK(doc["rows"].size() == 2);

  const auto o = run_cli({"compose", "--file", data_file("hadamard.json"), "--method", "oracle"});
  REQUIRE(o.code == cli::exit_ok);
  CHECK(o.err.find("H = 1.000000") != std::string::npos);
  CHECK(run_cli({"compose", "--file", data_file("not.json")}).err.find("X = 1.000000") != std::string::npos);
  CHECK(run_cli({"compose", "--file", data_file("not.json"), "--method", "exact"}).code == cli::exit_usage);
}
