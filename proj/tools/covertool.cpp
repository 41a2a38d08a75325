// covertool: batch front door for the cover-statistics library.
//
// Subcommands: zeta, mednykh, oracle, surface, ovb, resolve, xstar, enemb,
// trace, accept.  Output is JSON on stdout (--csv for a flat key,value
// rendering); exact rationals are printed as "p/q".  Runs are deterministic:
// identical configuration produces byte-identical primary output.
//
// Exit codes: 0 success, 1 acceptance failures, 2 usage error,
// 3 invalid input (bad word / out-of-domain argument), 4 resource-cap
// violation, 5 file I/O failure, 6 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cover/acceptance.hpp"
#include "cover/core_graph.hpp"
#include "cover/expectation.hpp"
#include "cover/growth.hpp"
#include "cover/partition_algebra.hpp"
#include "cover/perm.hpp"
#include "cover/resolution.hpp"
#include "cover/sym_rep.hpp"
#include "cover/tiled_surface.hpp"
#include "cover/trace_numerics.hpp"
#include "nlohmann/json.hpp"

namespace {

using cover::Rat;
using json = nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";

struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat parse_rational(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::domain_error("not a rational: " + s);
  r.canonicalize();
  return r;
}

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
              out);
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

void emit(const json& body, bool csv) {
  json out;
  out["tool"] = "covertool";
  out["version"] = kVersion;
  for (auto it = body.begin(); it != body.end(); ++it)
    out[it.key()] = it.value();
  if (csv) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(out, "", rows);
    std::printf("key,value\n");
    for (const auto& [k, v] : rows) std::printf("%s,%s\n", k.c_str(), v.c_str());
  } else {
    std::printf("%s\n", out.dump(2).c_str());
  }
}

json stats_json(const cover::SurfaceStats& st) {
  return json{{"v", st.v},
              {"e", st.e},
              {"f", st.f},
              {"d", st.d},
              {"ef", {st.ef[0], st.ef[1], st.ef[2], st.ef[3]}},
              {"chi", st.chi()},
              {"D", st.D()},
              {"theta", st.theta()}};
}

cover::TiledSurface surface_arg(const std::string& word) {
  if (word.empty()) return cover::single_vertex();
  return cover::from_word(word);
}

cover::CoverTuple cover_arg(int n, long long index) {
  if (n < 1 || n > 5)
    throw CapError("cover enumeration supports 1 <= n <= 5");
  const auto& E = cover::hom_ensemble(n);
  if (index < 0 || (size_t)index >= E.size())
    throw std::domain_error("cover index out of range (0.." +
                            std::to_string(E.size() - 1) + ")");
  return E.tuple((size_t)index);
}

void check_eps(const Rat& eps) {
  if (eps <= 0 || eps > Rat(1, 16))
    throw std::domain_error("eps must lie in (0, 1/16]");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cover statistics toolkit"};
  app.require_subcommand(1);
  bool csv = false;
  int jobs = 1;
  app.add_flag("--csv", csv, "flat key,value output instead of JSON");
  app.add_option("--jobs", jobs,
                 "worker count (results are independent of this value)")
      ->check(CLI::PositiveNumber);

  // ---- zeta
  auto* c_zeta = app.add_subcommand("zeta", "Witten zeta value of S_n");
  int zn = 0, zs = 2, zb = 0;
  c_zeta->add_option("--n", zn, "symmetric group degree")->required();
  c_zeta->add_option("--s", zs, "exponent (default 2)");
  c_zeta->add_option("--restricted", zb,
                     "restrict to partitions with b, b-check >= this");

  // ---- mednykh
  auto* c_med = app.add_subcommand("mednykh", "surface-group homomorphism count");
  int mn = 0, mg = 2;
  c_med->add_option("--n", mn, "symmetric group degree")->required();
  c_med->add_option("--genus", mg, "genus (default 2)");

  // ---- oracle
  auto* c_orc = app.add_subcommand(
      "oracle", "expected fixed points of a word map over uniform covers");
  std::string oword, oroute = "enumerate";
  int on = 0;
  c_orc->add_option("--word", oword, "word over a,b,c,d,A,B,C,D")->required();
  c_orc->add_option("--n", on, "cover degree (1..5)")->required();
  c_orc->add_option("--route", oroute, "enumerate | formula | resolution")
      ->check(CLI::IsMember({"enumerate", "formula", "resolution"}));

  // ---- surface
  auto* c_surf = app.add_subcommand("surface", "surface statistics/predicates");
  std::string sword;
  bool sstats = false;
  c_surf->add_option("--word", sword, "word; its annular surface is used")
      ->required();
  c_surf->add_flag("--stats", sstats, "print statistics and predicates");

  // ---- ovb
  auto* c_ovb = app.add_subcommand(
      "ovb", "run the boundary-growth algorithm on word images in a cover");
  std::string vword, veps = "1/32";
  int vn = 0;
  long long vindex = 0;
  bool vtrace = false;
  c_ovb->add_option("--word", vword, "word")->required();
  c_ovb->add_option("--n", vn, "cover degree (1..5)")->required();
  c_ovb->add_option("--index", vindex, "cover index in the ensemble");
  c_ovb->add_option("--eps", veps, "adaptedness parameter, rational <= 1/16");
  c_ovb->add_flag("--trace", vtrace, "include per-step growth traces");

  // ---- resolve
  auto* c_res = app.add_subcommand("resolve", "resolution of a word in a cover");
  std::string rword, reps = "1/32";
  int rn = 0;
  long long rindex = 0;
  c_res->add_option("--word", rword, "word")->required();
  c_res->add_option("--n", rn, "cover degree (1..5)")->required();
  c_res->add_option("--index", rindex, "cover index in the ensemble");
  c_res->add_option("--eps", reps, "adaptedness parameter, rational <= 1/16");

  // ---- xstar
  auto* c_xs = app.add_subcommand(
      "xstar", "relator-restricted tuple count via the rational formula");
  std::string xword;
  int xn = 0;
  bool xbrute = false;
  c_xs->add_option("--word", xword, "word (omit for the single vertex)");
  c_xs->add_option("--n", xn, "degree")->required();
  c_xs->add_flag("--brute", xbrute, "cross-check by enumeration (n <= 4)");

  // ---- enemb
  auto* c_en = app.add_subcommand(
      "enemb", "expected embedding count, all computable routes");
  std::string eword;
  int en = 0;
  c_en->add_option("--word", eword, "word (omit for the single vertex)");
  c_en->add_option("--n", en, "cover degree")->required();

  // ---- trace
  auto* c_tr = app.add_subcommand(
      "trace", "trace-formula numerics over a length spectrum");
  std::string tspectrum, tdisc;
  double tT = 0, teps = 0;
  int tn = 0;
  c_tr->add_option("--spectrum", tspectrum, "length-spectrum CSV")->required();
  c_tr->add_option("--T", tT, "test-function scale; geometric-side mode");
  c_tr->add_option("--n", tn, "cover degree; bound-pipeline mode (T=4 log n)");
  c_tr->add_option("--eps", teps, "also report the fourier lower-bound C_eps");
  c_tr->add_option("--disc", tdisc,
                   "discrepancy CSV (header length,value) for --T mode");

  // ---- accept
  auto* c_acc =
      app.add_subcommand("accept", "run the release checklist (criteria 1-10)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*c_zeta) {
      if (zn < 1 || zs < 1) throw std::domain_error("need n >= 1, s >= 1");
      Rat z = zb > 0 ? cover::restricted_zeta(zn, zb, zs)
                     : cover::witten_zeta(zn, zs);
      emit(json{{"subcommand", "zeta"},
                {"n", zn},
                {"s", zs},
                {"restricted_b", zb},
                {"value", rat_str(z)}},
           csv);
    } else if (*c_med) {
      if (mn < 1 || mg < 2) throw std::domain_error("need n >= 1, genus >= 2");
      emit(json{{"subcommand", "mednykh"},
                {"n", mn},
                {"genus", mg},
                {"value", cover::mednykh_count(mn, mg).get_str()}},
           csv);
    } else if (*c_orc) {
      if (on < 1 || on > 5) throw CapError("oracle supports 1 <= n <= 5");
      Rat value;
      if (oroute == "enumerate") {
        value = cover::expected_fix(oword, on);
      } else if (oroute == "formula") {
        value = cover::expected_morphisms(cover::from_word(oword), on);
      } else {
        const auto& E = cover::hom_ensemble(on);
        Rat total = 0;
        for (size_t i = 0; i < E.size(); ++i)
          total += Rat((long)cover::resolve_in_cover(oword, E.tuple(i))
                           .morphs.size());
        value = total / Rat((long)E.size());
      }
      emit(json{{"subcommand", "oracle"},
                {"word", oword},
                {"n", on},
                {"route", oroute},
                {"value", rat_str(value)}},
           csv);
    } else if (*c_surf) {
      auto Y = cover::from_word(sword);
      auto st = Y.stats();
      json body{{"subcommand", "surface"}, {"word", sword}};
      body["stats"] = stats_json(st);
      if (sstats) {
        body["boundary_reduced"] = cover::is_boundary_reduced(Y);
        body["strongly_boundary_reduced"] =
            cover::is_strongly_boundary_reduced(Y);
        body["adapted_at_1_32"] =
            !cover::find_bad_piece(Y, mpq_class(1, 32)).has_value();
        body["boundary_cycles"] = (int)cover::boundary_cycles(Y).size();
      }
      emit(body, csv);
    } else if (*c_ovb) {
      Rat eps = parse_rational(veps);
      check_eps(eps);
      auto phi = cover_arg(vn, vindex);
      auto Z = phi.surface();
      auto C = cover::from_word(vword);
      json runs = json::array();
      for (const auto& m : cover::morphisms(C, Z)) {
        auto Y = cover::SubComplex::image_of_morphism(C, Z, m);
        cover::GrowthTrace tr;
        auto Yp = cover::ovb(Y, eps, &tr);
        auto out = Yp.extract();
        json run{{"before", stats_json(Y.extract().stats())},
                 {"after", stats_json(out.stats())},
                 {"adapted", !cover::find_bad_piece(out, eps).has_value()},
                 {"step_a_visits", tr.step_a_visits}};
        if (vtrace) run["trace"] = json::parse(tr.to_json());
        runs.push_back(std::move(run));
      }
      emit(json{{"subcommand", "ovb"},
                {"word", vword},
                {"n", vn},
                {"index", vindex},
                {"eps", rat_str(eps)},
                {"runs", runs}},
           csv);
    } else if (*c_res) {
      Rat eps = parse_rational(reps);
      check_eps(eps);
      auto phi = cover_arg(rn, rindex);
      auto cr = cover::resolve_in_cover(rword, phi, eps);
      json entries = json::array();
      for (const auto& e : cr.entries)
        entries.push_back(json{{"stats", stats_json(e.stats)},
                               {"adapted", e.adapted},
                               {"multiplicity", e.multiplicity},
                               {"key", e.key}});
      emit(json{{"subcommand", "resolve"},
                {"word", rword},
                {"n", rn},
                {"index", rindex},
                {"eps", rat_str(eps)},
                {"morphisms", (long long)cr.morphs.size()},
                {"entries", entries}},
           csv);
    } else if (*c_xs) {
      auto Y = surface_arg(xword);
      auto F = cover::xstar_rational(Y);
      Rat density = cover::evaluate(F, xn);  // |X*| / (n!)^4
      cover::Int f4 = cover::factorial(xn) * cover::factorial(xn) *
                      cover::factorial(xn) * cover::factorial(xn);
      Rat count = density * Rat(f4);
      json body{{"subcommand", "xstar"},
                {"word", xword},
                {"n", xn},
                {"terms", (long long)F.terms.size()},
                {"density", rat_str(density)},
                {"count", rat_str(count)}};
      if (xbrute) {
        if (xn > 4) throw CapError("--brute supports n <= 4");
        body["brute_force"] = cover::xstar_count_bruteforce(Y, xn).get_str();
      }
      emit(body, csv);
    } else if (*c_en) {
      auto Y = surface_arg(eword);
      json body{{"subcommand", "enemb"}, {"word", eword}, {"n", en}};
      if (en <= 5)
        body["enumerate"] = rat_str(cover::expected_embeddings(Y, en));
      body["kernel_formula"] = cover::en_emb_formula(Y, en);
      body["xi_n"] = cover::xi_n(Y, en);
      body["xi_top_level"] = cover::xi_top_term(Y, en);
      emit(body, csv);
    } else if (*c_tr) {
      auto sp = cover::spectrum_from_csv_file(tspectrum);
      json body{{"subcommand", "trace"},
                {"spectrum", tspectrum},
                {"entries", (long long)sp.entries.size()}};
      if (tn > 0) {
        auto rep = cover::bound_pipeline_demo(sp, tn);
        body["pipeline"] = json::parse(rep.to_json());
      } else if (tT > 0) {
        std::map<double, double> disc;
        if (!tdisc.empty()) {
          std::ifstream in(tdisc);
          if (!in) throw std::ios_base::failure("cannot open " + tdisc);
          std::string line;
          std::getline(in, line);  // header length,value
          double l, v;
          char comma;
          while (in >> l >> comma >> v) disc[l] = v;
        }
        auto g = cover::geometric_side(sp, tT, disc);
        body["T"] = tT;
        body["primitive_sum"] = g.primitive_sum;
        body["nonprimitive_sum"] = g.nonprimitive_sum;
        body["total"] = g.total();
        body["missing_discrepancies"] = g.missing;
      } else {
        throw std::domain_error("trace needs --n (pipeline) or --T "
                                "(geometric side)");
      }
      if (teps > 0) body["c_eps"] = cover::c_eps(teps);
      emit(body, csv);
    } else if (*c_acc) {
      auto results = cover::run_acceptance(&std::cerr);
      json rows = json::array();
      for (const auto& r : results)
        rows.push_back(json{{"id", r.id},
                            {"name", r.name},
                            {"pass", r.pass},
                            {"detail", r.detail}});
      bool ok = cover::all_passed(results);
      emit(json{{"subcommand", "accept"},
                {"pass", ok},
                {"criteria", rows}},
           csv);
      return ok ? 0 : 1;
    }
  } catch (const CapError& e) {
    std::fprintf(stderr, "resource cap: %s\n", e.what());
    return 4;
  } catch (const std::ios_base::failure& e) {
    std::fprintf(stderr, "file error: %s\n", e.what());
    return 5;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 6;
  }
  return 0;
}
