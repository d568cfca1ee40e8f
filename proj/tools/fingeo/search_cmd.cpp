// Subcommands: search run|certify, suite.

#include <memory>
#include <sstream>

#include "cli.hpp"
#include "fingeo/search.hpp"
#include "fingeo/suite.hpp"

namespace fingeo::cli {

namespace {

struct ProblemOpt {
  FieldOpt field;
  std::string kind = "blocking";
  int t = 1;
  int n = 2;
  int min_size = 0;
  int max_size = 0;
  std::string mode = "exists";
  bool nontrivial = false;
  std::string symmetry = "none";
  std::uint64_t budget = 1'000'000'000ull;
  std::int64_t time_limit_ms = 0;

  void attach(CLI::App* app, bool with_mode) {
    field.attach(app);
    app->add_option("--kind", kind, "blocking | arc | maximal-arc")
        ->check(CLI::IsMember({"blocking", "arc", "maximal-arc"}));
    app->add_option("--t", t, "multiplicity for blocking sets");
    app->add_option("--n", n, "points per line for arcs");
    app->add_option("--min-size", min_size, "smallest cardinality");
    app->add_option("--max-size", max_size, "largest cardinality (required except for maximal arcs)");
    if (with_mode)
      app->add_option("--mode", mode, "exists | all | iso")->check(CLI::IsMember({"exists", "all", "iso"}));
    app->add_flag("--nontrivial", nontrivial, "blocking sets containing no line");
    app->add_option("--symmetry", symmetry, "none | root")->check(CLI::IsMember({"none", "root"}));
    app->add_option("--budget", budget, "node budget");
    app->add_option("--time-limit-ms", time_limit_ms, "wall-clock limit, 0 for none");
  }

  SearchProblem make(const Global& g) const {
    SearchProblem pr{field.make()};
    pr.kind = kind == "blocking" ? SearchKind::TFoldBlocking : kind == "arc" ? SearchKind::KnArc : SearchKind::MaximalArc;
    pr.param = pr.kind == SearchKind::TFoldBlocking ? t : n;
    pr.min_size = min_size;
    pr.size_bound = max_size;
    if (pr.kind == SearchKind::MaximalArc && max_size == 0) {
      pr.size_bound = (n - 1) * (static_cast<int>(pr.field.q()) + 1) + 1;
      pr.min_size = pr.size_bound;
    }
    pr.mode = mode == "exists" ? SearchMode::Exists : mode == "all" ? SearchMode::EnumerateAll : SearchMode::EnumerateUpToIso;
    pr.nontrivial = nontrivial;
    pr.symmetry = symmetry == "root" ? Symmetry::Root : Symmetry::None;
    pr.node_budget = budget;
    pr.time_limit_ms = time_limit_ms;
    pr.workers = g.workers;
    // PG(2,q) for q >= 7, and multiple blocking for q >= 5, can run for minutes.
    const int q = static_cast<int>(pr.field.q());
    const bool heavy = q >= 7 || (pr.kind == SearchKind::TFoldBlocking && t >= 2 && q >= 5);
    if (heavy && !g.allow_long) throw Error(Errc::UsageError, "this search needs --allow-long");
    return pr;
  }
};

json cases_json(const std::vector<RootCase>& cases) {
  json a = json::array();
  for (const auto& c : cases) a.push_back({{"prefix", c.prefix}, {"nodes", c.nodes}});
  return a;
}

}  // namespace

void register_search(CLI::App& app, const Global& g, Action& action) {
  {
    auto* top = app.add_subcommand("search", "exhaustive search for blocking sets and arcs");
    top->require_subcommand(1);

    auto* run_cmd = top->add_subcommand("run", "search and report witnesses");
    auto po = std::make_shared<ProblemOpt>();
    po->attach(run_cmd, true);
    run_cmd->callback([=, &g, &action] {
      action = [=, &g] {
        Outcome o;
        const SearchProblem pr = po->make(g);
        o.field = pr.field;
        const Plane P(pr.field);
        const auto res = run(pr);
        json ws = json::array();
        bool verified = true;
        for (const auto& w : res.witnesses) {
          ws.push_back(set_json(P, w));
          verified = verified && verify_witness(P, pr, w);
        }
        o.payload = {{"kind", kind_name(pr.kind)},
                     {"mode", mode_name(pr.mode)},
                     {"witnesses", ws},
                     {"count", res.witnesses.size()},
                     {"verified", verified},
                     {"budget_exceeded", res.budget_exceeded}};
        if (res.iso_classes) o.payload["iso_classes"] = *res.iso_classes;
        o.nodes = res.nodes;
        o.exhausted = res.exhausted;
        std::ostringstream os;
        os << res.witnesses.size() << " witness(es), " << res.nodes << " nodes, "
           << (res.exhausted ? "exhausted" : "NOT exhausted");
        if (!res.witnesses.empty()) os << "\nfirst: " << set_json(P, res.witnesses.front()).dump();
        o.human = os.str();
        if (!verified) o.status = 1;
        return o;
      };
    });

    auto* cert = top->add_subcommand("certify", "certify that no witness exists");
    auto co = std::make_shared<ProblemOpt>();
    co->attach(cert, false);
    cert->callback([=, &g, &action] {
      action = [=, &g] {
        Outcome o;
        const SearchProblem pr = co->make(g);
        o.field = pr.field;
        const auto c = certify_nonexistence(pr);
        o.payload = {{"engine", c.engine},
                     {"problem", c.problem},
                     {"problem_hash", c.problem_hash},
                     {"root_cases", cases_json(c.root_cases)}};
        o.nodes = c.nodes;
        o.exhausted = true;
        o.human = "no witness: " + c.problem + " (" + std::to_string(c.nodes) + " nodes)";
        return o;
      };
    });
  }

  {
    auto* suite = app.add_subcommand("suite", "acceptance criteria self-check");
    auto only = std::make_shared<std::vector<int>>();
    suite->add_option("--only", *only, "run these criterion ids")->delimiter(',')->check(CLI::Range(1, 13));
    suite->callback([=, &g, &action] {
      action = [=, &g] {
        Outcome o;
        SuiteOptions so;
        so.allow_long = g.allow_long;
        so.workers = g.workers;
        so.only.insert(only->begin(), only->end());
        json list = json::array();
        std::ostringstream os;
        for (const auto& r : run_suite(so)) {
          list.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"long_skipped", r.long_skipped},
                          {"detail", r.detail}, {"ms", g.stable ? 0.0 : r.ms}});
          os << (r.pass ? "PASS" : "FAIL") << " C" << r.id << ' ' << r.name << (r.long_skipped ? " [long parts skipped]" : "")
             << '\n';
          if (!r.pass) {
            o.status = 1;
            os << "  " << r.detail << '\n';
          }
        }
        o.payload = {{"criteria", list}, {"seed", so.seed}};
        o.human = os.str();
        return o;
      };
    });
  }
}

}  // namespace fingeo::cli
