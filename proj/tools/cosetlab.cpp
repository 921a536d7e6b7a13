#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cosetlab/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace cosetlab;

namespace {

constexpr const char* kConvention = "permutations compose left-to-right";

struct GroupOpts {
  std::string preset;
  std::string file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--preset", preset, "preset group name (C1..C24, S3, S4, A4, D4, D5, D6, Q8, V4, products with x)");
    cmd->add_option("--group", file, "group-spec file");
  }
  std::pair<std::string, FiniteGroup> load() const {
    if (!preset.empty() && !file.empty()) throw Error("give either --preset or --group, not both");
    if (!preset.empty()) return {preset, parse_group("preset " + preset)};
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw Error("cannot open group file '" + file + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      return {fs::path(file).stem().string(), parse_group(ss.str())};
    }
    throw Error("a group is required (--preset or --group)");
  }
};

void write_output(const std::string& out_file, const std::string& content) {
  if (out_file.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_file, std::ios::binary);
  if (!out) throw Error("cannot write '" + out_file + "'");
  out << content;
}

ordered_json fingerprint_json(const Fingerprint& fp) {
  ordered_json j;
  j["size"] = fp.size;
  j["idempotents"] = fp.idem_count;
  j["units"] = fp.unit_count;
  j["green_profile"] = fp.green_profile;
  j["unit_order_profile"] = fp.unit_order_profile;
  return j;
}

ordered_json classification_json(const ClassificationReport& rep) {
  ordered_json j;
  j["theta_dual_iso"] = rep.theta_dual_iso;
  j["g_nilpotent"] = rep.g_nilpotent;
  if (rep.g_nilpotent_length)
    j["g_nilpotent_length"] = *rep.g_nilpotent_length;
  else
    j["g_nilpotent_length"] = nullptr;
  j["nilpotent_witness"] = rep.nilpotent_witness;
  j["g_solvable"] = rep.g_solvable;
  if (rep.g_solvable_length)
    j["g_solvable_length"] = *rep.g_solvable_length;
  else
    j["g_solvable_length"] = nullptr;
  j["solvable_witness"] = rep.solvable_witness;
  if (rep.unit_nilpotency_class)
    j["unit_nilpotency_class"] = *rep.unit_nilpotency_class;
  else
    j["unit_nilpotency_class"] = nullptr;
  if (rep.unit_derived_length)
    j["unit_derived_length"] = *rep.unit_derived_length;
  else
    j["unit_derived_length"] = nullptr;
  j["trivial"] = rep.trivial;
  return j;
}

ordered_json header_json(const std::string& group_name) {
  ordered_json j;
  j["schema"] = 1;
  j["convention"] = kConvention;
  j["group"] = group_name;
  return j;
}

int cmd_analyze(const GroupOpts& opts, bool json, const std::string& out_file) {
  auto [name, g] = opts.load();
  SubgroupLattice lat = enumerate_subgroups(g);
  auto defects = subnormal_defects(lat);
  auto cls = nilpotency_class(g);
  auto dl = derived_length(g);
  if (json) {
    ordered_json j = header_json(name);
    j["order"] = g.order();
    j["backend"] = g.backend();
    j["abelian"] = g.is_abelian();
    j["nilpotency_class"] = cls ? ordered_json(*cls) : ordered_json(nullptr);
    j["derived_length"] = dl ? ordered_json(*dl) : ordered_json(nullptr);
    j["subgroups"] = ordered_json::array();
    for (int i = 0; i < lat.count(); ++i) {
      ordered_json s;
      s["id"] = i;
      s["order"] = lat.subgroups[i].order();
      s["members"] = lat.subgroups[i].members;
      s["normal"] = static_cast<bool>(lat.normal_in_g[i]);
      s["conjugacy_class"] = lat.conj_class[i];
      s["subnormal_defect"] = defects[i] ? ordered_json(*defects[i]) : ordered_json(nullptr);
      j["subgroups"].push_back(std::move(s));
    }
    write_output(out_file, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  out << "# analyze " << name << " (schema 1); " << kConvention << "\n";
  out << "order " << g.order() << " backend " << g.backend() << "\n";
  out << "abelian " << (g.is_abelian() ? "yes" : "no") << "\n";
  out << "nilpotency_class " << (cls ? std::to_string(*cls) : "none") << "\n";
  out << "derived_length " << (dl ? std::to_string(*dl) : "none") << "\n";
  out << "subgroups " << lat.count() << "\n";
  for (int i = 0; i < lat.count(); ++i) {
    out << "  #" << i << " |H|=" << lat.subgroups[i].order()
        << (lat.normal_in_g[i] ? " normal" : "") << " class=" << lat.conj_class[i] << " defect="
        << (defects[i] ? std::to_string(*defects[i]) : "none") << "\n";
  }
  write_output(out_file, out.str());
  return 0;
}

int cmd_coset_monoid(const GroupOpts& opts, bool json, const std::string& out_file) {
  auto [name, g] = opts.load();
  CosetMonoid K = build_coset_monoid(enumerate_subgroups(g));
  std::string table = emit_imonoid(K.monoid);
  std::string sidecar = coset_sidecar_json(K);
  if (!out_file.empty()) {
    write_output(out_file, table);
    write_output(out_file + ".json", sidecar);
    return 0;
  }
  std::cout << table;
  if (json) std::cout << sidecar;
  return 0;
}

int cmd_series(const GroupOpts& opts, const std::string& kind_name, bool composition,
               const std::string& refine_csv, int defect_elem, const std::string& out_file) {
  auto [name, g] = opts.load();
  CosetMonoid K = build_coset_monoid(enumerate_subgroups(g));
  const FiniteInverseMonoid& S = K.monoid;
  EContext E = EContext::build(S);
  FactorCache cache(S, E);
  SeriesKind kind = kind_name == "central" ? SeriesKind::central : SeriesKind::subcentral;

  ordered_json j = header_json(name);
  j["kind"] = to_string(kind);
  if (composition) {
    CompositionEnum comp = composition_series(S, E, kind);
    ordered_json arr = ordered_json::array();
    for (const auto& s : comp.series) {
      ordered_json one;
      one["chain"] = s.chain;
      one["factors"] = ordered_json::array();
      for (auto [lo, hi] : series_steps(s))
        one["factors"].push_back(fingerprint_json(cache.factor(lo, hi).fp));
      arr.push_back(std::move(one));
    }
    j["composition"]["series"] = std::move(arr);
    j["composition"]["truncated"] = comp.truncated;
    if (comp.series.size() > 1) {
      ordered_json matches = ordered_json::array();
      for (size_t i = 1; i < comp.series.size(); ++i) {
        SeriesMatch match = series_isomorphic(cache, comp.series[0], comp.series[i]);
        ordered_json m;
        m["series"] = i;
        m["isomorphic_to_first"] = match.ok;
        m["matching"] = match.matching;
        matches.push_back(std::move(m));
      }
      j["composition"]["matching"] = std::move(matches);
    }
  }
  if (!refine_csv.empty()) {
    std::vector<int> chain;
    std::stringstream ss(refine_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) chain.push_back(std::stoi(tok));
    RefineResult r = refine_chain(S, E, chain);
    j["refine"]["input"] = chain;
    if (r.series) {
      j["refine"]["chain"] = r.series->chain;
      j["refine"]["factors"] = ordered_json::array();
      for (auto [lo, hi] : series_steps(*r.series))
        j["refine"]["factors"].push_back(fingerprint_json(cache.factor(lo, hi).fp));
    } else {
      j["refine"]["error"] = r.error;
    }
  }
  if (defect_elem >= 0) {
    auto d = defect(S, E, defect_elem);
    j["defect"]["idempotent"] = defect_elem;
    j["defect"]["value"] = d ? ordered_json(*d) : ordered_json(nullptr);
  }
  write_output(out_file, j.dump(2) + "\n");
  return 0;
}

int cmd_classify(const GroupOpts& opts, const std::string& out_file) {
  auto [name, g] = opts.load();
  CosetMonoid K = build_coset_monoid(enumerate_subgroups(g));
  EContext E = EContext::build(K.monoid);
  GContext G(K.monoid, E);
  UnitGroup units = group_of_units(K.monoid);
  ClassificationReport rep = g_lengths(K.monoid, E, G, units);
  ordered_json j = header_json(name);
  j.update(classification_json(rep));
  auto cls = nilpotency_class(g);
  auto dl = derived_length(g);
  j["group_nilpotency_class"] = cls ? ordered_json(*cls) : ordered_json(nullptr);
  j["group_derived_length"] = dl ? ordered_json(*dl) : ordered_json(nullptr);
  write_output(out_file, j.dump(2) + "\n");
  return 0;
}

int cmd_verify(const std::string& corpus_dir, int max_order, bool json,
               const std::string& out_file) {
  std::vector<CorpusEntry> corpus;
  if (corpus_dir.empty()) {
    corpus = default_corpus();
  } else {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(corpus_dir))
      if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
      std::ifstream in(p);
      std::stringstream ss;
      ss << in.rdbuf();
      corpus.push_back({p.stem().string(), ss.str()});
    }
  }
  VerifyCaps caps;
  caps.max_order = max_order;
  VerificationMatrix m = run_verify(corpus, caps);
  write_output(out_file, json ? m.to_json() : m.to_text());
  return m.all_green() ? 0 : 1;
}

ordered_json probe6_json(const Problem6Result& r) {
  ordered_json j;
  j["variant"] = to_string(r.variant);
  j["e"] = r.e;
  j["f"] = r.f;
  j["h"] = r.h;
  if (r.skipped) {
    j["skipped"] = r.skip_reason;
    return j;
  }
  j["m_set"] = r.m_set;
  j["product_of_maximal"] = r.product_of_maximal;
  j["min_theta_order"] = r.min_theta_order;
  j["product_of_min_theta"] = r.product_of_min_theta;
  j["c_for_min"] = r.found_c_for_min ? ordered_json(r.c_min) : ordered_json(nullptr);
  j["c_for_max"] = r.found_c_for_max ? ordered_json(r.c_max) : ordered_json(nullptr);
  return j;
}

int cmd_probe(const GroupOpts& opts, const std::string& problem, int k,
              const std::string& variant_name, long long max_tuples, int max_order,
              const std::string& out_file) {
  if (problem == "2" || problem == "5") {
    ordered_json j;
    j["schema"] = 1;
    j["problem"] = "P" + problem;
    j["skipped"] = "not finitely probeable: quantifies over infinite groups";
    write_output(out_file, j.dump(2) + "\n");
    return 0;
  }
  auto [name, g] = opts.load();
  if (g.order() > max_order) {
    ordered_json j = header_json(name);
    j["problem"] = "P" + problem;
    j["skipped"] = "group order " + std::to_string(g.order()) + " exceeds probe cap " +
                   std::to_string(max_order) + " (raise with --max-order)";
    write_output(out_file, j.dump(2) + "\n");
    return 0;
  }
  CosetMonoid K = build_coset_monoid(enumerate_subgroups(g));
  ordered_json j = header_json(name);
  if (problem == "1") {
    Problem1Result r = probe_problem1(K);
    j["problem"] = "P1";
    if (r.skipped) {
      j["skipped"] = r.skip_reason;
    } else {
      j["examined"] = r.examined;
      j["instances"] = ordered_json::array();
      bool replay_ok = true;
      for (const auto& inst : r.instances) {
        ordered_json i;
        i["e"] = inst.e;
        i["g"] = inst.found ? ordered_json(inst.g) : ordered_json(nullptr);
        i["counterexample_candidate"] = !inst.found;
        replay_ok = replay_ok && replay_problem1(K, inst);
        j["instances"].push_back(std::move(i));
      }
      j["witnesses_replay"] = replay_ok;
    }
  } else if (problem == "3") {
    Problem3Result r = probe_problem3(K, k, max_tuples);
    j["problem"] = "P3";
    j["k"] = k;
    if (r.skipped) {
      j["skipped"] = r.skip_reason;
    } else {
      j["examined"] = r.examined;
      j["truncated"] = r.truncated;
      j["instances"] = ordered_json::array();
      bool replay_ok = true;
      for (const auto& inst : r.instances) {
        ordered_json i;
        i["e"] = inst.e;
        i["tuple"] = inst.found ? ordered_json(inst.tuple) : ordered_json(nullptr);
        i["counterexample_candidate"] = !inst.found && !r.truncated;
        replay_ok = replay_ok && replay_problem3(K, k, inst);
        j["instances"].push_back(std::move(i));
      }
      j["witnesses_replay"] = replay_ok;
    }
  } else if (problem == "4a") {
    Problem4aResult r = probe_problem4a(K);
    j["problem"] = "P4a";
    if (r.skipped) {
      j["skipped"] = r.skip_reason;
    } else {
      j["ds_S"] = r.ds_s;
      j["instances"] = ordered_json::array();
      bool replay_ok = true;
      for (const auto& inst : r.instances) {
        ordered_json i;
        i["e"] = inst.e;
        i["ds_filter"] = inst.ds_filter;
        i["diff"] = inst.diff;
        replay_ok = replay_ok && replay_problem4a(K, inst);
        j["instances"].push_back(std::move(i));
      }
      j["max_diff"] = r.max_diff;
      j["witnesses_replay"] = replay_ok;
    }
  } else if (problem == "6") {
    GVariant v = variant_name == "solvable" ? GVariant::solvable : GVariant::nilpotent;
    auto results = probe_problem6_all(K, v);
    j["problem"] = "P6";
    j["variant"] = to_string(v);
    j["instances"] = ordered_json::array();
    bool replay_ok = true;
    for (const auto& r : results) {
      replay_ok = replay_ok && replay_problem6(K, r);
      j["instances"].push_back(probe6_json(r));
    }
    j["witnesses_replay"] = replay_ok;
  } else {
    throw Error("unknown problem '" + problem + "' (use 1, 2, 3, 4a, 5 or 6)");
  }
  write_output(out_file, j.dump(2) + "\n");
  return 0;
}

int cmd_dot(const GroupOpts& opts, const std::string& target, const std::string& out_file) {
  auto [name, g] = opts.load();
  SubgroupLattice lat = enumerate_subgroups(g);
  if (target == "subgroup-lattice") {
    write_output(out_file, lattice_dot(lat));
    return 0;
  }
  if (target == "idempotent-order") {
    CosetMonoid K = build_coset_monoid(lat);
    write_output(out_file, idempotent_order_dot(K.monoid));
    return 0;
  }
  throw Error("unknown dot target '" + target + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coset monoid laboratory: K(G) construction, idempotent series and corpus verification"};
  app.require_subcommand(1);

  std::string out_file;
  bool json = false;
  app.add_option("--out", out_file, "write output to this file")->capture_default_str();
  app.add_flag("--json", json, "emit JSON instead of text where applicable");

  GroupOpts g_analyze, g_coset, g_series, g_classify, g_probe, g_dot;

  auto* analyze = app.add_subcommand("analyze", "group, lattice and oracle summary");
  g_analyze.attach(analyze);

  auto* coset = app.add_subcommand("coset-monoid", "emit K(G) in imonoid format plus JSON sidecar");
  g_coset.attach(coset);

  auto* series = app.add_subcommand("series", "idempotent series operations on K(G)");
  g_series.attach(series);
  std::string kind = "subcentral";
  bool composition = false;
  std::string refine_csv;
  int defect_elem = -1;
  series->add_option("--kind", kind, "subcentral|central")->capture_default_str();
  series->add_flag("--composition", composition, "enumerate composition series");
  series->add_option("--refine", refine_csv, "comma-separated idempotent element indices");
  series->add_option("--defect", defect_elem, "idempotent element index");

  auto* classify = app.add_subcommand("classify", "G-nilpotent/G-solvable classification of K(G)");
  g_classify.attach(classify);

  auto* verify = app.add_subcommand("verify", "run every check over a corpus of groups");
  std::string corpus_dir;
  int max_order = 24;
  verify->add_option("--corpus", corpus_dir, "directory of group-spec files (default: built-in corpus)");
  verify->add_option("--max-order", max_order, "verify order cap")->capture_default_str();

  auto* probe = app.add_subcommand("probe", "finite probes of the open-problem translations");
  g_probe.attach(probe);
  std::string problem;
  int k = 7;
  std::string variant = "nilpotent";
  long long max_tuples = 1000000;
  int probe_max_order = 24;
  probe->add_option("--problem", problem, "1|2|3|4a|5|6")->required();
  probe->add_option("--max-order", probe_max_order, "probe order cap")->capture_default_str();
  probe->add_option("--k", k, "conjugate count for problem 3 (5 or 7)")->capture_default_str();
  probe->add_option("--variant", variant, "nilpotent|solvable (problem 6)")->capture_default_str();
  probe->add_option("--max-tuples", max_tuples, "tuple cap for problem 3")->capture_default_str();

  auto* dot = app.add_subcommand("dot", "DOT Hasse diagram");
  g_dot.attach(dot);
  std::string target = "subgroup-lattice";
  dot->add_option("--target", target, "subgroup-lattice|idempotent-order")->capture_default_str();

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(g_analyze, json, out_file);
    if (coset->parsed()) return cmd_coset_monoid(g_coset, json, out_file);
    if (series->parsed())
      return cmd_series(g_series, kind, composition, refine_csv, defect_elem, out_file);
    if (classify->parsed()) return cmd_classify(g_classify, out_file);
    if (verify->parsed()) return cmd_verify(corpus_dir, max_order, json, out_file);
    if (probe->parsed())
      return cmd_probe(g_probe, problem, k, variant, max_tuples, probe_max_order, out_file);
    if (dot->parsed()) return cmd_dot(g_dot, target, out_file);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
