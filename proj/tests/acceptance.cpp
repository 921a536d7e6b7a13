// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs the full default corpus end to end.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cosetlab/verify.hpp"

namespace fs = std::filesystem;
using namespace cosetlab;

namespace {

struct Criterion {
  std::string name;
  bool pass = true;
  std::string detail{};

  void expect(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string show(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

}  // namespace

int main() {
  std::vector<Criterion> results;
  std::vector<CorpusEntry> corpus = default_corpus();
  std::vector<std::unique_ptr<GroupBundle>> bundles;

  // [1] construction soundness: every corpus K(G) passes the full axiom
  // suite; the whole corpus builds in under 60 seconds
  {
    Criterion c{"1 construction soundness (axiom suite over the corpus, <60s)"};
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& entry : corpus) {
      try {
        bundles.push_back(make_bundle(entry.name, parse_group(entry.spec)));
        const FiniteInverseMonoid& s = bundles.back()->S();
        // revalidate from the raw table: associativity, unique inverses,
        // commuting idempotents, identity and zero laws
        FiniteInverseMonoid again = FiniteInverseMonoid::validate(
            s.size(), s.table(), s.identity(), s.zero(), s.labels());
        c.expect(again.table() == s.table(), entry.name + ": revalidation changed the table");
      } catch (const std::exception& ex) {
        c.expect(false, entry.name + ": " + ex.what());
      }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(secs < 60.0, "corpus build took " + std::to_string(secs) + "s");
    std::ostringstream d;
    d << corpus.size() << " groups in " << secs << "s";
    if (c.pass) c.detail = d.str();
    results.push_back(c);
  }

  // [2] dictionary: exact equality/bijection on every corpus group
  {
    Criterion c{"2 dictionary (counts, idempotents, centrality, D-classes, order, filters, defects)"};
    for (const auto& b : bundles) {
      DictionaryReport rep = check_dictionary(b->K);
      c.expect(rep.ok, b->name + ": " + (rep.failures.empty() ? "" : rep.failures.front()));
    }
    results.push_back(c);
  }

  // [3] the structural check catalogue holds extensionally on all applicable tuples
  {
    Criterion c{"3 structure checks (fgeq i-iii, thecon i-v, phie, iso2, iso2pe i-ii)"};
    for (const auto& b : bundles) {
      const std::vector<std::pair<std::string, CheckResult>> runs = {
          {"fgeq-i", checks::fgeq_i(b->S(), b->units)},
          {"fgeq-ii", checks::fgeq_ii(b->S(), b->units)},
          {"fgeq-iii", checks::fgeq_iii(b->S(), b->units, b->E)},
          {"thecon-i", checks::thecon_i(b->S(), b->units)},
          {"thecon-ii", checks::thecon_ii(b->S(), b->units)},
          {"thecon-iii", checks::thecon_iii(b->S(), b->E)},
          {"thecon-iv", checks::thecon_iv(b->S(), b->E)},
          {"thecon-v", checks::thecon_v(b->S(), b->units, b->E)},
          {"phie", checks::phie(b->S(), b->E)},
          {"iso2", checks::iso2(b->S(), b->E)},
          {"iso2pe-i", checks::iso2pe_i(b->S(), b->E, *b->cache)},
          {"iso2pe-ii", checks::iso2pe_ii(b->S(), b->E, *b->cache)},
      };
      for (const auto& [name, r] : runs)
        c.expect(r.passed(), b->name + "/" + name + ": " + r.detail);
    }
    results.push_back(c);
  }

  // [4] Jordan-Holder: all pairs of composition series isomorphic, and every
  // pair of full series has length-m*n refinements with isomorphic pairing
  {
    Criterion c{"4 jordan-holder (pairwise isomorphic composition series + schreier refinements)"};
    for (const auto& b : bundles) {
      c.expect(b->K.lattice.count() <= 30,
               b->name + ": subgroup count " + std::to_string(b->K.lattice.count()));
      for (SeriesKind kind : {SeriesKind::subcentral, SeriesKind::central}) {
        CompositionEnum comp = composition_series(b->S(), b->E, kind);
        c.expect(!comp.truncated, b->name + ": enumeration truncated");
        c.expect(!comp.series.empty(), b->name + ": no composition series");
        for (const auto& g1 : comp.series)
          for (const auto& g2 : comp.series) {
            SeriesMatch match = series_isomorphic(*b->cache, g1, g2);
            c.expect(match.ok, b->name + ": composition series not isomorphic");
            SchreierResult r = schreier_refinement(b->S(), b->E, *b->cache, g1, g2);
            c.expect(r.ok, b->name + ": refinement failed: " + r.error);
            if (r.ok) {
              int mn = g1.length() * g2.length();
              c.expect(static_cast<int>(r.left_full.size()) == mn + 1 &&
                           static_cast<int>(r.right_full.size()) == mn + 1,
                       b->name + ": refinement length not m*n");
              c.expect(r.pairing_isomorphic, b->name + ": factor pairing not isomorphic");
            }
          }
      }
    }
    results.push_back(c);
  }

  // [5] snchr: group oracles equal monoid lengths, including the none cases
  {
    Criterion c{"5 snchr (nilpotency class and derived length match the monoid lengths)"};
    for (const auto& b : bundles) {
      CheckResult r = snchr_check(b->K);
      c.expect(r.passed(), b->name + ": " + r.detail);
    }
    auto spot = [&](const std::string& name, std::optional<int> cls, std::optional<int> dl) {
      for (const auto& b : bundles)
        if (b->name == name) {
          EContext E = EContext::build(b->S());
          GContext G(b->S(), E);
          ClassificationReport rep = g_lengths(b->S(), E, G, b->units);
          c.expect(rep.g_nilpotent_length == cls, name + ": nilpotent length " +
                                                      show(rep.g_nilpotent_length) + " != " +
                                                      show(cls));
          c.expect(rep.g_solvable_length == dl,
                   name + ": solvable length " + show(rep.g_solvable_length) + " != " + show(dl));
          return;
        }
      c.expect(false, "missing corpus group " + name);
    };
    spot("Q8", 2, 2);
    spot("D4", 2, 2);
    spot("S3", std::nullopt, 2);
    spot("S4", std::nullopt, 3);
    spot("C6", 1, 1);
    spot("V4", 1, 1);
    results.push_back(c);
  }

  // [6] remaining classification checks on every applicable instance
  {
    Criterion c{"6 nseq, nsl1eq, gnilu, fasec, subcanti, aabtrans, nilsubc(i-iii), sei"};
    for (const auto& b : bundles) {
      const std::vector<std::pair<std::string, CheckResult>> runs = {
          {"nseq", nseq_check(b->S(), b->E, *b->G)},
          {"sei", sei_check(b->S(), b->E, *b->G, b->units)},
          {"nsl1eq", nsl1eq_check(b->S(), b->E, *b->G, b->units)},
          {"gnilu", gnilu_check(b->S(), b->E, *b->G, b->units)},
          {"fasec", fasec_check(b->S(), b->units)},
          {"niliff", niliff_check(b->S(), b->E, *b->G, b->units)},
          {"aabtrans", aabtrans_check(b->S(), b->E)},
          {"subcanti", subcanti_check(b->S(), b->E)},
          {"nilsubc", nilsubc_check(b->S(), b->E, *b->G, b->units)},
      };
      for (const auto& [name, r] : runs) {
        c.expect(!r.failed(), b->name + "/" + name + ": " + r.detail);
        // hypothesis-free checks must actually run
        if (name == "nseq" || name == "gnilu" || name == "fasec" || name == "aabtrans" ||
            name == "subcanti" || name == "niliff")
          c.expect(r.passed(), b->name + "/" + name + " skipped: " + r.detail);
      }
    }
    results.push_back(c);
  }

  // [7] determinism: byte-identical verify runs (library and CLI) and
  // representative-swap invariance
  {
    Criterion c{"7 determinism (byte-identical verify, 100 representative swaps per group)"};
    VerificationMatrix m1 = run_verify(corpus);
    VerificationMatrix m2 = run_verify(corpus);
    c.expect(m1.to_json() == m2.to_json(), "library verify JSON differs between runs");
    c.expect(m1.to_text() == m2.to_text(), "library verify text differs between runs");
    c.expect(m1.all_green(), "verify matrix has fails or errors");
#ifdef COSETLAB_CLI_PATH
    fs::path tmp = fs::temp_directory_path();
    fs::path f1 = tmp / "cosetlab_verify_run1.json";
    fs::path f2 = tmp / "cosetlab_verify_run2.json";
    std::string cli = COSETLAB_CLI_PATH;
    for (const fs::path& f : {f1, f2}) {
      std::string cmd = "\"" + cli + "\" verify --json --out \"" + f.string() + "\"";
      int rc = std::system(cmd.c_str());
      c.expect(rc == 0, "CLI verify exited with " + std::to_string(rc));
    }
    c.expect(read_file(f1) == read_file(f2), "CLI verify outputs differ between runs");
    fs::remove(f1);
    fs::remove(f2);
#endif
    for (const auto& b : bundles)
      c.expect(representative_swap_test(b->K, 100, 100), b->name + ": representative swap changed a product");
    results.push_back(c);
  }

  // [8] probes complete with replayable witnesses
  {
    Criterion c{"8 probes (4a over the solvable corpus, 6 exhaustive over K(Q8))"};
    int finite_max = -1;
    for (const auto& b : bundles) {
      Problem4aResult r = probe_problem4a(b->K);
      c.expect(!r.skipped, b->name + ": 4a skipped: " + r.skip_reason);
      if (r.skipped) continue;
      for (const auto& inst : r.instances)
        c.expect(replay_problem4a(b->K, inst),
                 b->name + ": 4a witness does not replay at e=" + std::to_string(inst.e));
      finite_max = std::max(finite_max, r.max_diff);
    }
    c.expect(finite_max >= 0, "no primitive idempotents found anywhere");
    for (const auto& b : bundles) {
      if (b->name != "Q8") continue;
      for (GVariant v : {GVariant::nilpotent, GVariant::solvable}) {
        auto results6 = probe_problem6_all(b->K, v);
        c.expect(results6.size() == 216, "problem 6 not exhaustive over K(Q8) triples");
        for (const auto& r : results6)
          c.expect(replay_problem6(b->K, r), "problem 6 witness does not replay");
      }
    }
#ifdef COSETLAB_CLI_PATH
    fs::path tmp = fs::temp_directory_path();
    std::string cli = COSETLAB_CLI_PATH;
    fs::path out4 = tmp / "cosetlab_probe4a.json";
    int rc4 = std::system(
        ("\"" + cli + "\" probe --problem=4a --preset S4 --out \"" + out4.string() + "\"").c_str());
    c.expect(rc4 == 0, "CLI probe 4a failed");
    c.expect(read_file(out4).find("\"witnesses_replay\": true") != std::string::npos,
             "CLI probe 4a witnesses do not replay");
    fs::path out6 = tmp / "cosetlab_probe6.json";
    int rc6 = std::system(
        ("\"" + cli + "\" probe --problem=6 --preset Q8 --out \"" + out6.string() + "\"").c_str());
    c.expect(rc6 == 0, "CLI probe 6 failed");
    c.expect(read_file(out6).find("\"witnesses_replay\": true") != std::string::npos,
             "CLI probe 6 witnesses do not replay");
    fs::remove(out4);
    fs::remove(out6);
#endif
    if (c.pass) c.detail = "empirical max d_s(S)-d_s(filter) = " + std::to_string(finite_max);
    results.push_back(c);
  }

  bool all_pass = true;
  for (const auto& c : results) {
    std::cout << (c.pass ? "PASS" : "FAIL") << " [" << c.name << "]";
    if (!c.detail.empty()) std::cout << ": " << c.detail;
    std::cout << "\n";
    all_pass = all_pass && c.pass;
  }
  std::cout << (all_pass ? "acceptance: all criteria satisfied" : "acceptance: FAILURES present")
            << "\n";
  return all_pass ? 0 : 1;
}
