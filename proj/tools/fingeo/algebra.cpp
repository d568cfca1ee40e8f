// Subcommands: field, directions, poly, redei.

#include <fstream>
#include <memory>
#include <sstream>

#include "cli.hpp"
#include "fingeo/directions.hpp"
#include "fingeo/io.hpp"
#include "fingeo/poly.hpp"
#include "fingeo/redei.hpp"

namespace fingeo::cli {

namespace {

struct FnOpt {
  std::string kind = "half_power";
  int e = 1;
  std::string table;

  void attach(CLI::App* app) {
    app->add_option("--fn", kind, "half_power | frob | trace | table")
        ->check(CLI::IsMember({"half_power", "frob", "trace", "table"}));
    app->add_option("--e", e, "subfield exponent for frob/trace");
    app->add_option("--table", table, "value table f(0),...,f(q-1) as reps (with --fn table)");
  }

  FieldFn make(const Field& F) const {
    if (kind == "table") {
      if (table.empty()) throw Error(Errc::UsageError, "--fn table needs --table");
      return FieldFn::parse(F, table);
    }
    if (kind == "half_power") return example_function(ExampleKind::HalfPower, F);
    if (kind == "frob") return example_function(ExampleKind::FrobPower, F, e);
    return example_function(ExampleKind::SubfieldTrace, F, e);
  }
};

json elems(const std::vector<Elem>& v) {
  json a = json::array();
  for (Elem x : v) a.push_back(x.rep);
  return a;
}

json report_json(const DirectionReport& r) {
  json j{{"N", r.N}, {"e", r.e}, {"directions", elems(r.dirs)}, {"cases", r.cases}};
  j["linear_over"] = r.linear_over ? json(*r.linear_over) : json(nullptr);
  return j;
}

json intervals_json(const std::vector<IntervalHit>& hits) {
  json a = json::array();
  for (const auto& h : hits) a.push_back({{"e", h.e}, {"strict", h.strict}});
  return a;
}

json profile_json(const LacunaryProfile& p) {
  return {{"g", p.g.to_string()}, {"h", p.h.to_string()}, {"k", p.k}, {"e", p.e},
          {"fully_reducible", p.fully_reducible}, {"coprime", p.coprime}};
}

json vanishing_json(const VanishingProfile& v) {
  return {{"identically_zero", v.identically_zero}, {"zero_off_dirs", v.zero_off_dirs},
          {"degree_drop", v.degree_drop}, {"complement_range_holds", v.complement_range_holds},
          {"printed_range_holds", v.printed_range_holds}, {"g_degree_bound", v.g_degree_bound},
          {"max_g_degree", v.max_g_degree}};
}

}  // namespace

void register_algebra(CLI::App& app, const Global&, Action& action) {
  // field
  {
    auto* sub = app.add_subcommand("field", "field parameters, tables, trace and norm");
    auto fo = std::make_shared<FieldOpt>();
    auto sub_e = std::make_shared<int>(0);
    auto tables = std::make_shared<bool>(false);
    fo->attach(sub);
    sub->add_option("--sub", *sub_e, "also list trace and norm down to GF(p^e)");
    sub->add_flag("--tables", *tables, "include addition and multiplication tables (q <= 64)");
    sub->callback([=, &action] {
      action = [=] {
        Outcome o;
        const Field F = fo->make();
        o.field = F;
        o.payload = {{"q", F.q()}, {"primitive", F.primitive().rep}, {"irr_text", F.to_string()}};
        if (*tables) {
          if (F.q() > 64) throw Error(Errc::TooLarge, "tables only for q <= 64");
          json add = json::array(), mul = json::array();
          for (Elem a : F.elements()) {
            json ra = json::array(), rm = json::array();
            for (Elem b : F.elements()) {
              ra.push_back(F.add(a, b).rep);
              rm.push_back(F.mul(a, b).rep);
            }
            add.push_back(ra);
            mul.push_back(rm);
          }
          o.payload["add"] = add;
          o.payload["mul"] = mul;
        }
        if (*sub_e) {
          std::vector<Elem> tr, nm;
          for (Elem a : F.elements()) {
            tr.push_back(F.trace_to(*sub_e, a));
            nm.push_back(F.norm_to(*sub_e, a));
          }
          o.payload["trace"] = elems(tr);
          o.payload["norm"] = elems(nm);
        }
        std::ostringstream os;
        os << "GF(" << F.q() << ") = GF(" << F.p() << ")[x]/(" << F.to_string() << "), primitive element "
           << F.primitive().rep;
        o.human = os.str();
        return o;
      };
    });
  }

  // directions
  {
    auto* top = app.add_subcommand("directions", "directions determined by a function");
    top->require_subcommand(1);
    for (std::string verb : {"compute", "classify"}) {
      auto* sub = top->add_subcommand(verb, verb == "compute" ? "direction set and e" : "full classification");
      auto fo = std::make_shared<FieldOpt>();
      auto fn = std::make_shared<FnOpt>();
      fo->attach(sub);
      fn->attach(sub);
      sub->callback([=, &action] {
        action = [=] {
          Outcome o;
          const Field F = fo->make();
          o.field = F;
          const FieldFn f = fn->make(F);
          const auto rep = directions_of(f);
          o.payload = report_json(rep);
          std::ostringstream os;
          os << "N = " << rep.N << ", e = " << rep.e;
          if (verb == "classify") {
            if (rep.N >= 2) o.payload["intervals"] = intervals_json(check_redei_intervals(F, rep.N));
            const auto v = linearity_verdict(f.normalized());
            o.payload["linearity_hypothesis"] = v.linearity_hypothesis;
            o.payload["linearity_holds"] = v.linearity_holds;
            os << ", cases";
            for (int c : rep.cases) os << ' ' << c;
            if (v.linearity_hypothesis) os << ", linear over GF(p^e): " << (v.linearity_holds ? "yes" : "NO");
            if (v.linearity_hypothesis && !v.linearity_holds) o.status = 1;
            if (rep.cases.empty()) o.status = 1;
          }
          o.human = os.str();
          return o;
        };
      });
    }
    auto* ex = top->add_subcommand("examples", "the three standard examples");
    auto fo = std::make_shared<FieldOpt>();
    fo->attach(ex);
    ex->callback([=, &action] {
      action = [=] {
        Outcome o;
        const Field F = fo->make();
        o.field = F;
        json list = json::array();
        std::ostringstream os;
        auto put = [&](const std::string& name, int e, const FieldFn& f) {
          const int N = directions_of(f).N;
          list.push_back({{"fn", name}, {"e", e}, {"N", N}});
          os << name << (e ? " e=" + std::to_string(e) : "") << ": N = " << N << '\n';
        };
        if (F.p() != 2) put("half_power", 0, example_function(ExampleKind::HalfPower, F));
        for (int e = 1; e < F.n(); ++e)
          if (F.n() % e == 0) {
            put("frob", e, example_function(ExampleKind::FrobPower, F, e));
            put("trace", e, example_function(ExampleKind::SubfieldTrace, F, e));
          }
        o.payload["examples"] = list;
        o.human = os.str();
        return o;
      };
    });
  }

  // poly
  {
    auto* top = app.add_subcommand("poly", "lacunary polynomial classification");
    top->require_subcommand(1);
    for (std::string verb : {"classify-xqg", "classify-split", "lacunary"}) {
      auto* sub = top->add_subcommand(verb, verb == "classify-xqg"     ? "X^q + g trichotomy"
                                            : verb == "classify-split" ? "X^q g + h nine-case classification"
                                                                       : "lacunary split X^q g + h");
      if (verb != "lacunary") sub->alias(verb == "classify-xqg" ? "classify-t6" : "classify-t7");
      auto fo = std::make_shared<FieldOpt>();
      auto text = std::make_shared<std::string>();
      fo->attach(sub);
      sub->add_option("--poly", *text, "coefficients c0,c1,... as reps")->required();
      sub->callback([=, &action] {
        action = [=] {
          Outcome o;
          const Field F = fo->make();
          o.field = F;
          const Poly f = Poly::parse(F, *text);
          std::ostringstream os;
          if (verb == "classify-xqg") {
            json tags = json::array();
            for (auto t : classify_xq_plus_g(f)) {
              tags.push_back(xqg_tag_name(t));
              os << xqg_tag_name(t) << ' ';
            }
            o.payload["tags"] = tags;
            if (tags.empty()) o.status = 1;
          } else if (verb == "classify-split") {
            const auto r = classify_lacunary(f);
            o.payload = {{"e", r.e}, {"k", r.k}, {"cases", r.cases}};
            o.payload["case4_form"] = r.case4_form ? json(*r.case4_form) : json(nullptr);
            os << "e = " << r.e << ", k = " << r.k << ", cases";
            for (int c : r.cases) os << ' ' << c;
            if (r.cases.empty()) o.status = 1;
          } else {
            const auto p = lacunary_split(f);
            o.payload = profile_json(p);
            os << "g = " << p.g.to_string() << ", h = " << p.h.to_string() << ", k = " << p.k << ", e = " << p.e;
          }
          o.human = os.str();
          return o;
        };
      });
    }
  }

  // redei
  {
    auto* top = app.add_subcommand("redei", "Redei polynomials");
    top->require_subcommand(1);
    auto* graph = top->add_subcommand("graph", "Redei polynomial of a function graph");
    auto fo = std::make_shared<FieldOpt>();
    auto fn = std::make_shared<FnOpt>();
    fo->attach(graph);
    fn->attach(graph);
    graph->callback([=, &action] {
      action = [=] {
        Outcome o;
        const Field F = fo->make();
        o.field = F;
        const FieldFn f = fn->make(F);
        const auto rep = directions_of(f);
        const auto R = redei_poly_of_function(f);
        const auto vp = vanishing_profile(R, rep.dirs);
        o.payload = {{"N", rep.N}, {"directions", elems(rep.dirs)}, {"vanishing", vanishing_json(vp)}};
        json spec = json::array();
        for (Elem y : rep.dirs) spec.push_back({{"y", y.rep}, {"R", R.specialize(y).to_string()}});
        o.payload["specializations"] = spec;
        std::ostringstream os;
        os << "N = " << rep.N << ", r_i = 0 for i <= q-N: " << (vp.complement_range_holds ? "yes" : "no")
           << ", max deg g = " << vp.max_g_degree << " (bound " << vp.g_degree_bound << ")";
        o.human = os.str();
        if (!vp.complement_range_holds || vp.max_g_degree > vp.g_degree_bound) o.status = 1;
        return o;
      };
    });
    auto* blk = top->add_subcommand("blocking", "Redei polynomial of a blocking set in standard position");
    auto file = std::make_shared<std::string>();
    blk->add_option("--file", *file, "point-set file")->required()->check(CLI::ExistingFile);
    blk->callback([=, &action] {
      action = [=] {
        Outcome o;
        std::ifstream in(*file);
        const auto ps = read_point_set(in);
        o.field = ps.field;
        const Plane P(ps.field);
        const auto br = blocking_redei(P, ps.points);
        o.payload = {{"d", br.d},
                     {"tangent", br.position.tangent},
                     {"tangent_point", point_json(P, br.position.tangent_point)},
                     {"f", br.fx.to_string()},
                     {"lacunary", profile_json(br.profile)},
                     {"divisibility_ok", br.divisibility_ok},
                     {"vanishing_ok", br.vanishing_ok},
                     {"shape_ok", br.shape_ok}};
        std::ostringstream os;
        os << "d = " << br.d << ", X^q-X divides R[X,y]: " << (br.divisibility_ok ? "yes" : "no")
           << ", vanishing: " << (br.vanishing_ok ? "yes" : "no") << ", shape: " << (br.shape_ok ? "yes" : "no");
        o.human = os.str();
        if (!br.divisibility_ok || !br.vanishing_ok || !br.shape_ok) o.status = 1;
        return o;
      };
    });
  }
}

}  // namespace fingeo::cli
