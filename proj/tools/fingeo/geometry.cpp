// Subcommands: blocking, arcs, linearset.

#include <fstream>
#include <memory>
#include <sstream>

#include "cli.hpp"
#include "fingeo/arcs.hpp"
#include "fingeo/blocking.hpp"
#include "fingeo/io.hpp"
#include "fingeo/linearsets.hpp"

namespace fingeo::cli {

namespace {

PointSetFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::UsageError, "cannot open " + path);
  return read_point_set(in);
}

void save(const std::string& path, const Plane& P, const PointSet& S) {
  if (path.empty()) return;
  std::ofstream os(path);
  if (!os) throw Error(Errc::UsageError, "cannot write " + path);
  write_point_set(os, P, S);
}

json blocking_json(const BlockingReport& r) {
  json sp = json::object();
  for (const auto& [k, v] : r.spectrum) sp[std::to_string(k)] = v;
  return {{"size", r.size},           {"t_max", r.t_max},       {"spectrum", sp},     {"t", r.t},
          {"minimal", r.minimal},     {"contains_line", r.contains_line}, {"redei_type", r.redei_type},
          {"szonyi_ok", r.szonyi_ok}, {"small", r.small},       {"d", r.d}};
}

std::string blocking_text(const BlockingReport& r) {
  std::ostringstream os;
  os << "|B| = " << r.size << ", every line meets B in >= " << r.t_max << " points, spectrum {";
  bool first = true;
  for (const auto& [k, v] : r.spectrum) {
    os << (first ? "" : ", ") << k << ':' << v;
    first = false;
  }
  os << "}, minimal: " << (r.minimal ? "yes" : "no") << ", Redei type: " << (r.redei_type ? "yes" : "no");
  return os.str();
}

json arc_json(const ArcReport& r) {
  return {{"k", r.k},           {"n", r.n},       {"n_max", r.n_max},       {"barlotti_bound", r.barlotti_bound},
          {"is_arc", r.is_arc}, {"is_maximal", r.is_maximal}, {"complete", r.complete}};
}

std::string arc_text(const ArcReport& r) {
  std::ostringstream os;
  os << "k = " << r.k << ", max on a line " << r.n_max << " (n = " << r.n << "), bound " << r.barlotti_bound
     << ", maximal: " << (r.is_maximal ? "yes" : "no") << ", complete: " << (r.complete ? "yes" : "no");
  return os.str();
}

struct ReductionOpt {
  int q = 0;
  int sub = 0;
  void attach(CLI::App* app) {
    app->add_option("--q", q, "order q^s of the plane's field")->required();
    app->add_option("--sub", sub, "order q of the subfield")->required();
  }
  Reduction make() const { return Reduction(field_of_order(q), field_of_order(sub)); }
};

Subspace load_subspace(const std::string& path, const Field& F) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::UsageError, "cannot open " + path);
  return read_subspace(in, F);
}

}  // namespace

void register_geometry(CLI::App& app, const Global& g, Action& action) {
  // blocking
  {
    auto* top = app.add_subcommand("blocking", "blocking sets");
    top->require_subcommand(1);

    auto* an = top->add_subcommand("analyze", "intersection spectrum and minimality");
    auto file = std::make_shared<std::string>();
    auto t = std::make_shared<int>(0);
    an->add_option("--file", *file, "point-set file")->required()->check(CLI::ExistingFile);
    an->add_option("--t", *t, "judge minimality as a t-fold set (default: the largest t)");
    an->callback([=, &action] {
      action = [=] {
        Outcome o;
        const auto ps = load(*file);
        o.field = ps.field;
        const Plane P(ps.field);
        const auto r = analyze(P, ps.points, *t > 0 ? std::optional<int>(*t) : std::nullopt);
        o.payload = blocking_json(r);
        o.human = blocking_text(r);
        if (r.t_max < 1) o.status = 1;
        return o;
      };
    });

    auto* co = top->add_subcommand("construct", "standard constructions");
    auto fo = std::make_shared<FieldOpt>();
    auto kind = std::make_shared<std::string>("baer");
    auto index = std::make_shared<int>(0);
    auto tt = std::make_shared<int>(1);
    auto fn = std::make_shared<std::string>("trace");
    auto e = std::make_shared<int>(1);
    auto out = std::make_shared<std::string>();
    fo->attach(co);
    co->add_option("--kind", *kind, "baer | partition | union | redei | three-lines")
        ->check(CLI::IsMember({"baer", "partition", "union", "redei", "three-lines"}));
    co->add_option("--index", *index, "partition member index");
    co->add_option("--t", *tt, "number of partition members in the union");
    co->add_option("--fn", *fn, "function for --kind redei: half_power | frob | trace")
        ->check(CLI::IsMember({"half_power", "frob", "trace"}));
    co->add_option("--e", *e, "subfield exponent for frob/trace");
    co->add_option("--out", *out, "write the point set to this file");
    co->callback([=, &action] {
      action = [=] {
        Outcome o;
        const Field F = fo->make();
        o.field = F;
        const Plane P(F);
        PointSet S;
        if (*kind == "baer") S = baer_subplane(P);
        else if (*kind == "partition") S = baer_partition_member(P, *index);
        else if (*kind == "union") S = partition_union(P, *tt);
        else if (*kind == "three-lines") S = three_lines(P);
        else {
          const ExampleKind k = *fn == "half_power" ? ExampleKind::HalfPower
                                : *fn == "frob"     ? ExampleKind::FrobPower
                                                    : ExampleKind::SubfieldTrace;
          S = redei_graph(P, example_function(k, F, *e));
        }
        save(*out, P, S);
        const auto r = analyze(P, S);
        o.payload = {{"points", set_json(P, S)}, {"analysis", blocking_json(r)}};
        o.human = blocking_text(r);
        return o;
      };
    });

    auto* bo = top->add_subcommand("bounds", "lower bounds on blocking set sizes");
    auto model = std::make_shared<std::string>("bruen");
    auto bq = std::make_shared<int>(0);
    auto bt = std::make_shared<int>(1);
    bo->add_option("--model", *model, "bruen | prime | tfold | double")
        ->check(CLI::IsMember({"bruen", "prime", "tfold", "double"}));
    bo->add_option("--q", *bq, "plane order")->required();
    bo->add_option("--t", *bt, "multiplicity t");
    bo->callback([=, &action] {
      action = [=] {
        Outcome o;
        const Field F = field_of_order(*bq);
        o.field = F;
        const BoundModel m = *model == "bruen"   ? BoundModel::Bruen
                             : *model == "prime" ? BoundModel::PrimeOrder
                             : *model == "tfold" ? BoundModel::TFold
                                                 : BoundModel::DoublePrime;
        const int t = *model == "double" && *bt == 1 ? 2 : *bt;
        const auto r = lower_bound({F.p(), F.n(), t, m});
        o.payload = {{"bound", r.value}, {"basis", r.basis}, {"t", t}};
        if (m == BoundModel::TFold) o.payload["c"] = r.value - static_cast<std::int64_t>(t) * (F.q() + 1);
        o.human = "|B| >= " + std::to_string(r.value) + " (" + r.basis + ")";
        return o;
      };
    });
  }

  // arcs
  {
    auto* top = app.add_subcommand("arcs", "(k,n)-arcs, conics, hyperovals");
    top->require_subcommand(1);

    auto* an = top->add_subcommand("analyze", "arc report");
    auto file = std::make_shared<std::string>();
    auto n = std::make_shared<int>(2);
    an->add_option("--file", *file, "point-set file")->required()->check(CLI::ExistingFile);
    an->add_option("--n", *n, "at most n points per line");
    an->callback([=, &action] {
      action = [=] {
        Outcome o;
        const auto ps = load(*file);
        o.field = ps.field;
        const Plane P(ps.field);
        const auto r = arc_analyze(P, ps.points, *n);
        o.payload = arc_json(r);
        o.human = arc_text(r);
        if (!r.is_arc) o.status = 1;
        return o;
      };
    });

    auto* cn = top->add_subcommand("conic", "points of a nondegenerate conic");
    auto fo = std::make_shared<FieldOpt>();
    auto coeffs = std::make_shared<std::string>("0,1,0,0,0,0");
    auto out = std::make_shared<std::string>();
    fo->attach(cn);
    cn->add_option("--coeffs", *coeffs, "a,b,c,d,e,f of a x^2+b y^2+c z^2+d xy+e xz+f yz (reps)")->required();
    cn->add_option("--out", *out, "write the point set to this file");
    cn->callback([=, &action] {
      action = [=] {
        Outcome o;
        const Field F = fo->make();
        o.field = F;
        const Plane P(F);
        const auto c = parse_ints(*coeffs);
        if (c.size() != 6) throw Error(Errc::UsageError, "--coeffs needs six entries");
        QuadForm form;
        for (int i = 0; i < 6; ++i) {
          if (c[i] < 0 || c[i] >= static_cast<int>(F.q())) throw Error(Errc::UsageError, "coefficient out of range");
          form[i] = Elem{static_cast<std::uint32_t>(c[i])};
        }
        const PointSet S = conic_points(P, form);
        save(*out, P, S);
        o.payload = {{"points", set_json(P, S)}, {"size", S.size()}};
        o.human = "conic with " + std::to_string(S.size()) + " points";
        return o;
      };
    });

    auto* ex = top->add_subcommand("extend", "add the nucleus of a (q+1)-arc, q even");
    auto efile = std::make_shared<std::string>();
    auto eout = std::make_shared<std::string>();
    ex->add_option("--file", *efile, "point-set file")->required()->check(CLI::ExistingFile);
    ex->add_option("--out", *eout, "write the hyperoval to this file");
    ex->callback([=, &action] {
      action = [=] {
        Outcome o;
        const auto ps = load(*efile);
        o.field = ps.field;
        const Plane P(ps.field);
        const int nuc = nucleus(P, ps.points);
        const PointSet H = extend_to_hyperoval(P, ps.points);
        save(*eout, P, H);
        const auto r = arc_analyze(P, H, 2);
        o.payload = {{"nucleus", point_json(P, nuc)}, {"points", set_json(P, H)}, {"report", arc_json(r)}};
        o.human = "nucleus " + point_json(P, nuc).get<std::string>() + "; " + arc_text(r);
        if (!r.is_maximal) o.status = 1;
        return o;
      };
    });
  }

  // linearset
  {
    auto* top = app.add_subcommand("linearset", "field reduction and linear sets");
    top->require_subcommand(1);

    auto* rd = top->add_subcommand("reduce", "field reduction and spread");
    auto ro = std::make_shared<ReductionOpt>();
    ro->attach(rd);
    rd->callback([=, &action] {
      action = [=] {
        Outcome o;
        const Reduction R = ro->make();
        o.field = R.big();
        // spread partition check over all nonzero vectors
        std::int64_t covered = 0;
        bool ok = true;
        for (int x = 0; x < R.plane().size(); ++x) {
          const Subspace E = R.spread_element(x);
          if (E.dim() != R.s()) ok = false;
          E.for_each_nonzero(R.small(), [&](const Row& v) {
            ++covered;
            if (R.point_of(v) != x) ok = false;
          });
        }
        const std::int64_t expect = nt::ipow(R.small().q(), R.dim()) - 1;
        o.payload = {{"s", R.s()},
                     {"dim", R.dim()},
                     {"spread_elements", R.spread_size()},
                     {"vectors_covered", covered},
                     {"partition_ok", ok && covered == expect}};
        o.human = "V(" + std::to_string(R.dim()) + "," + std::to_string(R.small().q()) + "): " +
                  std::to_string(R.spread_size()) + " spread elements, partition " + (ok && covered == expect ? "ok" : "BROKEN");
        if (!(ok && covered == expect)) o.status = 1;
        return o;
      };
    });

    auto* bw = top->add_subcommand("bw", "the linear set B(W)");
    auto bro = std::make_shared<ReductionOpt>();
    auto wfile = std::make_shared<std::string>();
    auto bout = std::make_shared<std::string>();
    bro->attach(bw);
    bw->add_option("--file", *wfile, "subspace file")->required()->check(CLI::ExistingFile);
    bw->add_option("--out", *bout, "write B(W) to this file");
    bw->callback([=, &action] {
      action = [=] {
        Outcome o;
        const Reduction R = bro->make();
        o.field = R.big();
        const Subspace W = load_subspace(*wfile, R.small());
        const PointSet B = B_of_W(R, W);
        save(*bout, R.plane(), B);
        const auto r = analyze(R.plane(), B);
        o.payload = {{"dim_W", W.dim()},
                     {"scattered", is_scattered(R, W)},
                     {"points", set_json(R.plane(), B)},
                     {"analysis", blocking_json(r)}};
        if (W.dim() == R.s() + 1) {
          bool ok = true;
          try {
            ok = linear_blocking_check(R.plane(), B, static_cast<int>(R.small().q()), R.s());
          } catch (const Error&) {
            ok = false;
          }
          o.payload["blocking_ok"] = ok;
          if (!ok) o.status = 1;
        }
        o.human = "|B(W)| = " + std::to_string(B.size()) + "; " + blocking_text(r);
        return o;
      };
    });

    auto* sc = top->add_subcommand("scattered", "scattered subspaces");
    auto sro = std::make_shared<ReductionOpt>();
    auto sfile = std::make_shared<std::string>();
    auto limit = std::make_shared<int>(0);
    auto rdim = std::make_shared<int>(0);
    auto restarts = std::make_shared<int>(200);
    auto sout = std::make_shared<std::string>();
    sro->attach(sc);
    sc->add_option("--file", *sfile, "test this subspace")->check(CLI::ExistingFile);
    sc->add_option("--max", *limit, "exhaustive maximum scattered dimension up to this limit");
    sc->add_option("--random-dim", *rdim, "randomized search for a scattered subspace (needs --seed)");
    sc->add_option("--restarts", *restarts, "restarts for the randomized search");
    sc->add_option("--out", *sout, "write a found subspace to this file");
    sc->callback([=, &g, &action] {
      const int modes = !sfile->empty() + (*limit > 0) + (*rdim > 0);
      if (modes != 1) throw CLI::ValidationError("scattered", "choose exactly one of --file, --max, --random-dim");
      if (*rdim > 0 && !g.seed) throw CLI::ValidationError("--seed", "randomized mode needs --seed");
      action = [=, &g] {
        Outcome o;
        const Reduction R = sro->make();
        o.field = R.big();
        if (!sfile->empty()) {
          const Subspace W = load_subspace(*sfile, R.small());
          const bool s = is_scattered(R, W);
          o.payload = {{"dim", W.dim()}, {"scattered", s}, {"size_B", B_of_W(R, W).size()}};
          o.human = std::string("scattered: ") + (s ? "yes" : "no");
        } else if (*limit > 0) {
          const int d = max_scattered_dim(R, *limit);
          o.payload = {{"max_scattered_dim", d}, {"authoritative", true}};
          o.exhausted = true;
          o.human = "maximum scattered dimension " + std::to_string(d);
        } else {
          const auto W = random_scattered(R, *rdim, *g.seed, *restarts);
          o.payload = {{"found", W.has_value()}, {"authoritative", false}};
          if (W) {
            if (!sout->empty()) {
              std::ofstream os(*sout);
              write_subspace(os, *W);
            }
            json rows = json::array();
            for (const auto& row : W->basis()) {
              json r = json::array();
              for (Elem x : row) r.push_back(x.rep);
              rows.push_back(r);
            }
            o.payload["basis"] = rows;
            if (W->dim() == R.s() + 2) {
              const auto ti = two_intersection_from_W(R, *W);
              o.payload["fold"] = ti.report.t_max;
              o.payload["fold_ok"] = ti.fold_ok;
              if (!ti.fold_ok) o.status = 1;
            }
          }
          o.human = W ? "found a scattered " + std::to_string(*rdim) + "-space (randomized, not authoritative)"
                      : "none found (randomized, not authoritative)";
        }
        return o;
      };
    });
  }
}

}  // namespace fingeo::cli
