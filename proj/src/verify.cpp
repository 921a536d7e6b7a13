#include "cosetlab/verify.hpp"

#include <set>
#include <sstream>

#include "cosetlab/table_iso.hpp"
#include "json.hpp"

namespace cosetlab {

std::unique_ptr<GroupBundle> make_bundle(const std::string& name, const FiniteGroup& g) {
  auto b = std::make_unique<GroupBundle>();
  b->name = name;
  b->K = build_coset_monoid(enumerate_subgroups(g));
  b->units = group_of_units(b->K.monoid);
  b->E = EContext::build(b->K.monoid);
  b->G.emplace(b->K.monoid, b->E);
  b->cache.emplace(b->K.monoid, b->E);
  b->dual_iso = is_dual_isomorphism(b->K.monoid, b->units).ok;
  return b;
}

namespace checks {

namespace {

// e-theta as S element indices
std::vector<int> theta_elems(const FiniteInverseMonoid& S, const UnitGroup& units, int e) {
  std::vector<int> out;
  for (int gs : units.elems)
    if (S.mul(e, gs) == e) out.push_back(gs);
  return out;
}

std::string elem(const FiniteInverseMonoid& S, int x) {
  return std::to_string(x) + " (" + S.label(x) + ")";
}

}  // namespace

CheckResult fgeq_i(const FiniteInverseMonoid& S, const UnitGroup& units) {
  if (!is_factorizable(S, units)) return CheckResult::skipped("monoid not factorizable");
  for (int e : S.idempotents()) {
    std::vector<int> rhs;
    for (int e2 : S.idempotents()) {
      if (!S.leq(e, e2)) continue;
      for (int gs : theta_elems(S, units, e)) rhs.push_back(S.mul(e2, gs));
    }
    if (sorted_unique(std::move(rhs)) != filter_up(S, e).members)
      return CheckResult::failure("filter of " + elem(S, e) + " != [e,1]*(e theta)");
  }
  return CheckResult::ok();
}

CheckResult fgeq_ii(const FiniteInverseMonoid& S, const UnitGroup& units) {
  if (!is_factorizable(S, units)) return CheckResult::skipped("monoid not factorizable");
  for (int e : S.idempotents()) {
    std::vector<int> lhs;
    for (int s = 0; s < S.size(); ++s) lhs.push_back(S.mul(e, s));
    std::vector<int> rhs;
    for (int e2 : S.idempotents()) {
      if (!S.leq(e2, e)) continue;
      for (int gs : units.elems) rhs.push_back(S.mul(e2, gs));
    }
    if (sorted_unique(std::move(lhs)) != sorted_unique(std::move(rhs)))
      return CheckResult::failure("eS != [0,e]*G at idempotent " + elem(S, e));
  }
  return CheckResult::ok();
}

CheckResult fgeq_iii(const FiniteInverseMonoid& S, const UnitGroup& units, const EContext& E) {
  if (!is_factorizable(S, units)) return CheckResult::skipped("monoid not factorizable");
  const int k = static_cast<int>(E.idems.size());
  long long pairs = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!E.eleq[i][j] || !E.central_in_filter[i][j]) continue;
      ++pairs;
      int e = E.idems[i], f = E.idems[j];
      FactorView fv = factor_submonoid(S, e, f);
      auto th = theta_elems(S, units, e);
      std::vector<int> interval_prod;
      for (int e2 : S.idempotents()) {
        if (!S.leq(e, e2) || !S.leq(e2, f)) continue;
        for (int gs : th) interval_prod.push_back(S.mul(e2, gs));
      }
      if (sorted_unique(std::move(interval_prod)) != fv.view.members)
        return CheckResult::failure("F_(e,f) != [e,f]*(e theta) at e=" + elem(S, e) +
                                    " f=" + elem(S, f));
      for (int x : fv.view.members)
        if (S.mul(f, x) != x || S.mul(x, f) != x)
          return CheckResult::failure("f not the identity of F_(e,f) at e=" + elem(S, e) +
                                      " f=" + elem(S, f));
      std::vector<int> uf;
      for (int gs : th) uf.push_back(S.mul(f, gs));
      if (sorted_unique(std::move(uf)) != fv.units)
        return CheckResult::failure("UF_(e,f) != f*(e theta) at e=" + elem(S, e) +
                                    " f=" + elem(S, f));
    }
  return CheckResult::ok(std::to_string(pairs) + " pairs");
}

CheckResult thecon_i(const FiniteInverseMonoid& S, const UnitGroup& units) {
  for (int e : S.idempotents())
    for (int gi = 0; gi < units.group.order(); ++gi) {
      int gs = units.elems[gi];
      int conj = S.mul(S.mul(S.inv(gs), e), gs);
      std::vector<int> lhs = natural_connection(S, units, conj).members;
      std::vector<int> rhs;
      for (int x : natural_connection(S, units, e).members)
        rhs.push_back(units.group.conjugate(x, gi));
      std::sort(rhs.begin(), rhs.end());
      if (lhs != rhs)
        return CheckResult::failure("(g^-1 e g)theta != g^-1 (e theta) g at e=" + elem(S, e) +
                                    " g=" + elem(S, gs));
    }
  return CheckResult::ok();
}

CheckResult thecon_ii(const FiniteInverseMonoid& S, const UnitGroup& units) {
  if (!is_factorizable(S, units)) return CheckResult::skipped("monoid not factorizable");
  std::set<std::vector<int>> images;
  for (int e : S.idempotents())
    if (!images.insert(natural_connection(S, units, e).members).second)
      return CheckResult::skipped("theta not injective");
  std::vector<int> cent = centre(S);
  for (int e : S.idempotents()) {
    Subgroup th = natural_connection(S, units, e);
    bool central = set_contains(cent, e);
    bool normal = is_normal_in_group(units.group, th);
    if (central != normal)
      return CheckResult::failure("central(" + std::to_string(central) + ") != normal(" +
                                  std::to_string(normal) + ") at idempotent " + elem(S, e));
  }
  return CheckResult::ok();
}

CheckResult thecon_iii(const FiniteInverseMonoid& S, const EContext& E) {
  const int k = static_cast<int>(E.idems.size());
  for (int i = 0; i < k; ++i) {
    if (!E.central[i]) continue;
    for (int j = 0; j < k; ++j) {
      int jn = E.join[i][j];
      if (jn < 0) continue;
      View filt = filter_up(S, E.idems[j]);
      if (!is_central_in(S, E.idems[jn], filt))
        return CheckResult::failure("e v f not central in the filter of f at e=" +
                                    elem(S, E.idems[i]) + " f=" + elem(S, E.idems[j]));
      if (E.central[j] && !E.central[jn])
        return CheckResult::failure("join of central idempotents not central at e=" +
                                    elem(S, E.idems[i]) + " f=" + elem(S, E.idems[j]));
    }
  }
  return CheckResult::ok();
}

CheckResult thecon_iv(const FiniteInverseMonoid& S, const EContext& E) {
  const int k = static_cast<int>(E.idems.size());
  long long tuples = 0;
  for (int i2 = 0; i2 < k; ++i2)
    for (int i1 = 0; i1 < k; ++i1) {
      if (!E.eleq[i2][i1] || !E.central_in_filter[i2][i1]) continue;
      for (int jf = 0; jf < k; ++jf) {
        int j1 = E.join[i1][jf], j2 = E.join[i2][jf];
        if (j1 < 0 || j2 < 0) continue;
        ++tuples;
        View filt = filter_up(S, E.idems[j2]);
        if (!is_central_in(S, E.idems[j1], filt))
          return CheckResult::failure("e1 v f not central in (e2 v f)-filter at e1=" +
                                      elem(S, E.idems[i1]) + " e2=" + elem(S, E.idems[i2]) +
                                      " f=" + elem(S, E.idems[jf]));
      }
    }
  return CheckResult::ok(std::to_string(tuples) + " tuples");
}

CheckResult thecon_v(const FiniteInverseMonoid& S, const UnitGroup& units, const EContext& E) {
  DualIsoReport dual = is_dual_isomorphism(S, units);
  if (!dual.ok) return CheckResult::skipped("theta not a dual isomorphism: " + dual.witness);
  const int k = static_cast<int>(E.idems.size());
  long long tuples = 0;
  for (int i2 = 0; i2 < k; ++i2)
    for (int i1 = 0; i1 < k; ++i1) {
      if (!E.eleq[i2][i1] || !E.central_in_filter[i2][i1]) continue;
      for (int jf = 0; jf < k; ++jf) {
        if (!E.central[jf]) continue;
        ++tuples;
        int p1 = S.mul(E.idems[i1], E.idems[jf]);
        int p2 = S.mul(E.idems[i2], E.idems[jf]);
        View filt = filter_up(S, p2);
        if (!is_central_in(S, p1, filt))
          return CheckResult::failure("e1*f not central in (e2*f)-filter at e1=" +
                                      elem(S, E.idems[i1]) + " e2=" + elem(S, E.idems[i2]) +
                                      " f=" + elem(S, E.idems[jf]));
      }
    }
  return CheckResult::ok(std::to_string(tuples) + " tuples");
}

CheckResult phie(const FiniteInverseMonoid& S, const EContext& E) {
  const int k = static_cast<int>(E.idems.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!E.eleq[i][j] || !E.central_in_filter[i][j]) continue;
      int e = E.idems[i], f = E.idems[j];
      PhiMap phi = phi_homomorphism(S, e, f);
      std::vector<int> image_of(S.size(), -1);
      for (size_t a = 0; a < phi.domain.size(); ++a) image_of[phi.domain[a]] = phi.image_of[a];
      for (int a : phi.domain)
        for (int b : phi.domain) {
          int ab = S.mul(a, b);
          if (image_of[ab] < 0)
            return CheckResult::failure("filter not closed under products at e=" + elem(S, e));
          if (image_of[ab] != S.mul(image_of[a], image_of[b]))
            return CheckResult::failure("phi not a homomorphism at e=" + elem(S, e) +
                                        " f=" + elem(S, f) + " a=" + elem(S, a) +
                                        " b=" + elem(S, b));
        }
      std::vector<int> image = sorted_unique(std::vector<int>(phi.image_of));
      if (image != factor_submonoid(S, e, f).view.members)
        return CheckResult::failure("im(phi) != F_(e,f) at e=" + elem(S, e) + " f=" + elem(S, f));
    }
  return CheckResult::ok();
}

CheckResult iso2(const FiniteInverseMonoid& S, const EContext& E, long long instance_cap) {
  const int k = static_cast<int>(E.idems.size());
  long long instances = 0;
  // Ambient semigroup = the filter of e; rho = kernel of a |-> f*a for each f
  // central there; T ranges over the sub-filters. The e = zero row is the
  // whole-monoid instance family.
  for (int i = 0; i < k; ++i) {
    const std::vector<int>& ambient = E.filters[i];
    for (int j = 0; j < k; ++j) {
      if (!E.eleq[i][j] || !E.central_in_filter[i][j]) continue;
      int e = E.idems[i], f = E.idems[j];
      auto related = [&](int a, int b) { return S.mul(f, a) == S.mul(f, b); };
      // a |-> f*a is a homomorphism on the ambient filter, so its kernel is a
      // congruence there; the homomorphism property is what gets verified
      for (int a : ambient)
        for (int b : ambient)
          if (S.mul(f, S.mul(a, b)) != S.mul(S.mul(f, a), S.mul(f, b)))
            return CheckResult::failure("kernel map not a homomorphism at e=" + elem(S, e) +
                                        " f=" + elem(S, f));
      for (int g = 0; g < k; ++g) {
        if (!E.eleq[i][g]) continue;  // sub-filter generator must lie in the ambient
        if (++instances > instance_cap)
          return CheckResult::skipped("instance cap " + std::to_string(instance_cap) +
                                      " exceeded after " + std::to_string(instances - 1));
        const std::vector<int>& t_members = E.filters[g];
        std::vector<int> ft;
        for (int t : t_members) ft.push_back(S.mul(f, t));
        ft = sorted_unique(std::move(ft));
        std::vector<int> u_members;
        for (int s : ambient)
          if (set_contains(ft, S.mul(f, s))) u_members.push_back(s);
        // U must be an inverse subsemigroup
        for (int x : u_members) {
          if (!set_contains(u_members, S.inv(x)))
            return CheckResult::failure("U not closed under inverses at e=" + elem(S, e) +
                                        " f=" + elem(S, f) + " g=" + elem(S, E.idems[g]));
          for (int y : u_members)
            if (!set_contains(u_members, S.mul(x, y)))
              return CheckResult::failure("U not closed under products at e=" + elem(S, e) +
                                          " f=" + elem(S, f) + " g=" + elem(S, E.idems[g]));
        }
        QuotientTable qu = quotient_table(S, u_members, related);
        QuotientTable qt = quotient_table(S, t_members, related);
        if (!tables_isomorphic(qu.n, qu.table, qt.n, qt.table))
          return CheckResult::failure("U/rho_U not isomorphic to T/rho_T at e=" + elem(S, e) +
                                      " f=" + elem(S, f) + " g=" + elem(S, E.idems[g]));
      }
    }
  }
  return CheckResult::ok(std::to_string(instances) + " instances");
}

CheckResult iso2pe_i(const FiniteInverseMonoid& S, const EContext& E, FactorCache& cache) {
  const int k = static_cast<int>(E.idems.size());
  long long pairs = 0;
  for (int i = 0; i < k; ++i) {
    if (!E.central[i]) continue;
    int e = E.idems[i];
    for (int j = 0; j < k; ++j) {
      int f = E.idems[j];
      int jn = E.join[i][j];
      if (jn < 0) continue;
      ++pairs;
      int ef = S.mul(e, f);
      // F_{f, e v f} vs F_{ef, e}; both preconditions hold for central e
      if (!cache.isomorphic(f, E.idems[jn], ef, e))
        return CheckResult::failure("F_(f, e v f) not isomorphic to F_(ef, e) at e=" +
                                    elem(S, e) + " f=" + elem(S, f));
    }
  }
  return CheckResult::ok(std::to_string(pairs) + " pairs");
}

CheckResult iso2pe_ii(const FiniteInverseMonoid& S, const EContext& E, FactorCache& cache) {
  const int k = static_cast<int>(E.idems.size());
  std::vector<std::pair<int, int>> central_pairs;  // (e position, e1 position)
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (E.eleq[i][j] && E.central_in_filter[i][j]) central_pairs.emplace_back(i, j);
  long long tuples = 0, skipped = 0;
  for (auto [ie, ie1] : central_pairs)
    for (auto [jf, jf1] : central_pairs) {
      int e = E.idems[ie], e1 = E.idems[ie1];
      int f = E.idems[jf], f1 = E.idems[jf1];
      int j_ef = E.join[ie][jf], j_ef1 = E.join[ie][jf1], j_e1f = E.join[ie1][jf];
      if (j_ef < 0 || j_ef1 < 0 || j_e1f < 0) {
        ++skipped;
        continue;
      }
      ++tuples;
      int a_lo = S.mul(e1, E.idems[j_ef]);
      int a_hi = S.mul(e1, E.idems[j_ef1]);
      int b_lo = S.mul(f1, E.idems[j_ef]);
      int b_hi = S.mul(f1, E.idems[j_e1f]);
      if (!is_central_in(S, a_hi, filter_up(S, a_lo)))
        return CheckResult::failure("e1(e v f1) not central in [e1(e v f)]-filter at e=" +
                                    elem(S, e) + " e1=" + elem(S, e1) + " f=" + elem(S, f) +
                                    " f1=" + elem(S, f1));
      if (!is_central_in(S, b_hi, filter_up(S, b_lo)))
        return CheckResult::failure("f1(e1 v f) not central in [f1(e v f)]-filter at e=" +
                                    elem(S, e) + " e1=" + elem(S, e1) + " f=" + elem(S, f) +
                                    " f1=" + elem(S, f1));
      if (!cache.isomorphic(a_lo, a_hi, b_lo, b_hi))
        return CheckResult::failure("factors not isomorphic at e=" + elem(S, e) + " e1=" +
                                    elem(S, e1) + " f=" + elem(S, f) + " f1=" + elem(S, f1));
    }
  return CheckResult::ok(std::to_string(tuples) + " tuples, " + std::to_string(skipped) +
                         " skipped for missing joins");
}

CheckResult subcs(const FiniteInverseMonoid& S, const EContext& E) {
  auto defects = all_defects(S, E);
  std::vector<int> subcentral;
  for (size_t i = 0; i < E.idems.size(); ++i)
    if (defects[i]) subcentral.push_back(E.idems[i]);
  for (int e : subcentral) {
    RefineResult r = refine_chain(S, E, {e});
    if (!r.series)
      return CheckResult::failure("refinement of [" + elem(S, e) + "] failed: " + r.error);
  }
  long long pairs = 0;
  for (int e1 : subcentral)
    for (int e2 : subcentral) {
      if (e1 == e2 || !S.leq(e1, e2)) continue;
      ++pairs;
      RefineResult r = refine_chain(S, E, {e1, e2});
      if (!r.series)
        return CheckResult::failure("refinement of [" + elem(S, e1) + ", " + elem(S, e2) +
                                    "] failed: " + r.error);
    }
  return CheckResult::ok(std::to_string(pairs) + " chains");
}

CheckResult schre(const FiniteInverseMonoid& S, const EContext& E, FactorCache& cache,
                  size_t series_cap) {
  for (SeriesKind kind : {SeriesKind::subcentral, SeriesKind::central}) {
    CompositionEnum comp = composition_series(S, E, kind, series_cap);
    if (comp.truncated)
      return CheckResult::skipped(std::string("composition series enumeration truncated (") +
                                  to_string(kind) + ")");
    for (const auto& g1 : comp.series)
      for (const auto& g2 : comp.series) {
        SchreierResult r = schreier_refinement(S, E, cache, g1, g2);
        if (!r.ok)
          return CheckResult::failure(std::string(to_string(kind)) +
                                      " refinement failed: " + r.error);
        int mn = g1.length() * g2.length();
        if (static_cast<int>(r.left_full.size()) != mn + 1 ||
            static_cast<int>(r.right_full.size()) != mn + 1)
          return CheckResult::failure("refinement lengths are not m*n");
        if (!r.pairing_isomorphic)
          return CheckResult::failure(std::string(to_string(kind)) +
                                      " factor pairing not isomorphic");
      }
  }
  return CheckResult::ok();
}

CheckResult jorh(const FiniteInverseMonoid& S, const EContext& E, FactorCache& cache,
                 size_t series_cap) {
  std::string detail;
  for (SeriesKind kind : {SeriesKind::subcentral, SeriesKind::central}) {
    CompositionEnum comp = composition_series(S, E, kind, series_cap);
    if (comp.truncated)
      return CheckResult::skipped(std::string("composition series enumeration truncated (") +
                                  to_string(kind) + ")");
    for (const auto& g1 : comp.series)
      for (const auto& g2 : comp.series) {
        SeriesMatch match = series_isomorphic(cache, g1, g2);
        if (!match.ok)
          return CheckResult::failure(std::string(to_string(kind)) + " series [" +
                                      join_ints(g1.chain) + "] and [" + join_ints(g2.chain) +
                                      "] not isomorphic");
      }
    detail += std::string(to_string(kind)) + "=" + std::to_string(comp.series.size()) + " ";
  }
  return CheckResult::ok(detail + "composition series");
}

CheckResult jorhex(const FiniteInverseMonoid& S, const EContext& E) {
  ChainConditionReport rep = chain_condition_report(S, E);
  if (!rep.acc || !rep.dcc) return CheckResult::failure("chain condition failed on finite poset");
  if (!rep.subcentral_composition_exists)
    return CheckResult::failure("no composition subcentral series found");
  if (!rep.central_composition_exists)
    return CheckResult::failure("no composition central series found");
  return CheckResult::ok("|E_c|=" + std::to_string(rep.central_count) +
                         " |E_sc|=" + std::to_string(rep.subcentral_count));
}

}  // namespace checks

const std::vector<BundleCheck>& all_bundle_checks() {
  static const std::vector<BundleCheck> list = {
      {"dictionary",
       [](GroupBundle& b) {
         DictionaryReport rep = check_dictionary(b.K);
         if (!rep.ok) return CheckResult::failure(rep.failures.front());
         return CheckResult::ok("|K|=" + std::to_string(b.S().size()));
       }},
      {"fgeq-i", [](GroupBundle& b) { return checks::fgeq_i(b.S(), b.units); }},
      {"fgeq-ii", [](GroupBundle& b) { return checks::fgeq_ii(b.S(), b.units); }},
      {"fgeq-iii", [](GroupBundle& b) { return checks::fgeq_iii(b.S(), b.units, b.E); }},
      {"thecon-i", [](GroupBundle& b) { return checks::thecon_i(b.S(), b.units); }},
      {"thecon-ii", [](GroupBundle& b) { return checks::thecon_ii(b.S(), b.units); }},
      {"thecon-iii", [](GroupBundle& b) { return checks::thecon_iii(b.S(), b.E); }},
      {"thecon-iv", [](GroupBundle& b) { return checks::thecon_iv(b.S(), b.E); }},
      {"thecon-v", [](GroupBundle& b) { return checks::thecon_v(b.S(), b.units, b.E); }},
      {"phie", [](GroupBundle& b) { return checks::phie(b.S(), b.E); }},
      {"iso2", [](GroupBundle& b) { return checks::iso2(b.S(), b.E); }},
      {"iso2pe-i", [](GroupBundle& b) { return checks::iso2pe_i(b.S(), b.E, *b.cache); }},
      {"iso2pe-ii", [](GroupBundle& b) { return checks::iso2pe_ii(b.S(), b.E, *b.cache); }},
      {"subcs", [](GroupBundle& b) { return checks::subcs(b.S(), b.E); }},
      {"schre", [](GroupBundle& b) { return checks::schre(b.S(), b.E, *b.cache); }},
      {"jorh", [](GroupBundle& b) { return checks::jorh(b.S(), b.E, *b.cache); }},
      {"jorhex", [](GroupBundle& b) { return checks::jorhex(b.S(), b.E); }},
      {"nseq", [](GroupBundle& b) { return nseq_check(b.S(), b.E, *b.G); }},
      {"sei", [](GroupBundle& b) { return sei_check(b.S(), b.E, *b.G, b.units); }},
      {"nsl1eq", [](GroupBundle& b) { return nsl1eq_check(b.S(), b.E, *b.G, b.units); }},
      {"gnilu", [](GroupBundle& b) { return gnilu_check(b.S(), b.E, *b.G, b.units); }},
      {"fasec", [](GroupBundle& b) { return fasec_check(b.S(), b.units); }},
      {"niliff", [](GroupBundle& b) { return niliff_check(b.S(), b.E, *b.G, b.units); }},
      {"snchr", [](GroupBundle& b) { return snchr_check(b.K); }},
      {"aabtrans", [](GroupBundle& b) { return aabtrans_check(b.S(), b.E); }},
      {"subcanti", [](GroupBundle& b) { return subcanti_check(b.S(), b.E); }},
      {"nilsubc", [](GroupBundle& b) { return nilsubc_check(b.S(), b.E, *b.G, b.units); }},
  };
  return list;
}

std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> out;
  for (int i = 1; i <= 12; ++i)
    out.push_back({"C" + std::to_string(i), "preset C" + std::to_string(i)});
  for (const char* name :
       {"V4", "S3", "D4", "D5", "D6", "Q8", "A4", "S4", "C2xC4", "C2xC2xC2", "S3xC2"})
    out.push_back({name, std::string("preset ") + name});
  return out;
}

VerificationMatrix run_verify(const std::vector<CorpusEntry>& corpus, const VerifyCaps& caps) {
  VerificationMatrix m;
  for (const auto& check : all_bundle_checks()) m.checks.push_back(check.first);
  for (const auto& entry : corpus) {
    m.groups.push_back(entry.name);
    m.row_errors.emplace_back();
    std::vector<CheckResult> row;
    try {
      FiniteGroup g = parse_group(entry.spec);
      if (g.order() > caps.max_order) {
        row.assign(m.checks.size(),
                   CheckResult::skipped("order " + std::to_string(g.order()) +
                                        " exceeds verify cap " + std::to_string(caps.max_order)));
      } else {
        auto bundle = make_bundle(entry.name, g);
        for (const auto& check : all_bundle_checks()) {
          CheckResult r = check.second(*bundle);
          if (r.failed()) ++m.fail_count;
          row.push_back(std::move(r));
        }
      }
    } catch (const std::exception& ex) {
      m.row_errors.back() = ex.what();
      ++m.error_count;
      row.assign(m.checks.size(), CheckResult::skipped(std::string("group error: ") + ex.what()));
    }
    m.cells.push_back(std::move(row));
  }
  return m;
}

std::string VerificationMatrix::to_text() const {
  std::ostringstream out;
  out << "# verification matrix (schema 1); permutations compose left-to-right\n";
  out << "# cells: P=pass F=fail s=skip\n";
  size_t name_width = 5;
  for (const auto& g : groups) name_width = std::max(name_width, g.size());
  for (size_t c = 0; c < checks.size(); ++c)
    out << "# col " << (c + 1) << ": " << checks[c] << "\n";
  out << std::string(name_width, ' ') << " ";
  for (size_t c = 0; c < checks.size(); ++c) out << (c % 10 == 9 ? '|' : '.');
  out << "\n";
  for (size_t r = 0; r < groups.size(); ++r) {
    out << groups[r] << std::string(name_width - groups[r].size(), ' ') << " ";
    for (const auto& cell : cells[r]) {
      char ch = cell.status == CheckResult::Status::pass   ? 'P'
                : cell.status == CheckResult::Status::fail ? 'F'
                                                           : 's';
      out << ch;
    }
    out << "\n";
  }
  for (size_t r = 0; r < groups.size(); ++r) {
    if (!row_errors[r].empty()) out << "error " << groups[r] << ": " << row_errors[r] << "\n";
    for (size_t c = 0; c < cells[r].size(); ++c) {
      const CheckResult& cell = cells[r][c];
      if (cell.status == CheckResult::Status::fail)
        out << "FAIL " << groups[r] << "/" << checks[c] << ": " << cell.detail << "\n";
      else if (cell.status == CheckResult::Status::skip && row_errors[r].empty())
        out << "skip " << groups[r] << "/" << checks[c] << ": " << cell.detail << "\n";
    }
  }
  out << "fails=" << fail_count << " errors=" << error_count << "\n";
  return out.str();
}

std::string VerificationMatrix::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["convention"] = "permutations compose left-to-right";
  j["groups"] = groups;
  j["checks"] = checks;
  j["cells"] = nlohmann::ordered_json::array();
  for (size_t r = 0; r < groups.size(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& cell : cells[r]) {
      nlohmann::ordered_json c;
      c["status"] = cell.status == CheckResult::Status::pass   ? "pass"
                    : cell.status == CheckResult::Status::fail ? "fail"
                                                               : "skip";
      if (!cell.detail.empty()) c["detail"] = cell.detail;
      row.push_back(std::move(c));
    }
    j["cells"].push_back(std::move(row));
  }
  j["row_errors"] = row_errors;
  j["fails"] = fail_count;
  j["errors"] = error_count;
  return j.dump(2) + "\n";
}

}  // namespace cosetlab
