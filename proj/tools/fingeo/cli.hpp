#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fingeo/gf.hpp"
#include "fingeo/plane.hpp"

namespace fingeo::cli {

using nlohmann::json;

/// Flags shared by every subcommand.
struct Global {
  int workers = 1;
  std::optional<std::uint64_t> seed;
  bool allow_long = false;
  bool json_out = false;
  bool stable = false;  // timing_ms written as 0 for byte-stable reports
};

/// Result of one command: payload plus the optional report fields.
struct Outcome {
  std::optional<Field> field;
  json payload = json::object();
  std::string human;
  int status = 0;  // 0 ok, 1 verification failure
  std::optional<std::uint64_t> nodes;
  std::optional<bool> exhausted;
};

/// Field selection: --q with optional --irr.
struct FieldOpt {
  int q = 0;
  std::string irr;

  void attach(CLI::App* app) {
    app->add_option("--q", q, "field order (prime power)")->required();
    app->add_option("--irr", irr, "defining polynomial coefficients c0,...,cn (monic)");
  }
  Field make() const;
};

/// The selected subcommand stores its work here during parsing.
using Action = std::function<Outcome()>;

void register_algebra(CLI::App& app, const Global& g, Action& action);
void register_geometry(CLI::App& app, const Global& g, Action& action);
void register_search(CLI::App& app, const Global& g, Action& action);

json point_json(const Plane& P, int pnt);
json set_json(const Plane& P, const PointSet& S);
json field_json(const Field& F);
std::vector<int> parse_ints(const std::string& csv);

}  // namespace fingeo::cli
