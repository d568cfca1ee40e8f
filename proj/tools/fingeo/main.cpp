// fingeo: command-line front end. Exit status 0 ok, 1 verification failure,
// 2 usage error.

#include <chrono>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "fingeo/error.hpp"
#include "fingeo/search.hpp"

namespace fingeo::cli {

Field FieldOpt::make() const {
  if (q < 2) throw Error(Errc::UsageError, "--q must be a prime power >= 2");
  if (irr.empty()) return field_of_order(q);
  const auto ps = nt::prime_factors(q);
  if (ps.size() != 1) throw Error(Errc::UsageError, std::to_string(q) + " is not a prime power");
  const auto c = parse_ints(irr);
  Field F = Field::make(static_cast<int>(ps[0]), static_cast<int>(c.size()) - 1, c);
  if (F.q() != static_cast<std::uint32_t>(q)) throw Error(Errc::UsageError, "--irr degree does not match --q");
  return F;
}

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw Error(Errc::ParseError, "bad integer `" + tok + "`");
    }
  }
  return out;
}

json field_json(const Field& F) { return {{"p", F.p()}, {"n", F.n()}, {"irr", F.irr()}}; }

json point_json(const Plane& P, int pnt) {
  const auto& t = P.point(pnt);
  return std::to_string(t[0].rep) + ":" + std::to_string(t[1].rep) + ":" + std::to_string(t[2].rep);
}

// Parsed options of the selected subcommand chain, keyed by "sub.sub.--name".
json spec_echo(const CLI::App& app, const std::string& prefix = "") {
  json j = json::object();
  for (const CLI::Option* opt : app.get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    const auto& r = opt->results();
    j[prefix + opt->get_name()] = r.size() == 1 ? json(r[0]) : json(r);
  }
  for (const CLI::App* sub : app.get_subcommands()) j.update(spec_echo(*sub, prefix + sub->get_name() + "."));
  return j;
}

json set_json(const Plane& P, const PointSet& S) {
  json pts = json::array();
  for (int x : S) pts.push_back(point_json(P, x));
  return pts;
}

}  // namespace fingeo::cli

int main(int argc, char** argv) {
  using namespace fingeo;
  using namespace fingeo::cli;

  CLI::App app{"Finite geometry toolkit: directions, lacunary polynomials, blocking sets, arcs, linear sets"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--workers", g.workers, "search worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for randomized modes");
  app.add_flag("--allow-long", g.allow_long, "permit long-running searches");
  app.add_flag("--json", g.json_out, "print the JSON report instead of a summary");
  app.add_flag("--stable", g.stable, "write timing_ms as 0");

  Action action;
  register_algebra(app, g, action);
  register_geometry(app, g, action);
  register_search(app, g, action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::string command;
  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);

  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    if (!action) throw Error(Errc::UsageError, "no action selected");
    out = action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::UsageError || e.code() == Errc::ParseError ? 2 : 1;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  json report{{"schema", "fingeo.report.v1"}, {"engine", kEngineVersion}, {"command", command}};
  report["spec"] = spec_echo(app);
  report["field"] = out.field ? field_json(*out.field) : json(nullptr);
  report["payload"] = out.payload;
  if (out.nodes) report["nodes"] = *out.nodes;
  if (out.exhausted) report["exhausted"] = *out.exhausted;
  report["timing_ms"] = g.stable ? 0.0 : ms;
  if (g.seed) report["seed"] = *g.seed;

  if (g.json_out) std::cout << report.dump(2) << '\n';
  else std::cout << out.human << (out.human.empty() || out.human.back() == '\n' ? "" : "\n");
  return out.status;
}
