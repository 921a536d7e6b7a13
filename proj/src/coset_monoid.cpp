#include "cosetlab/coset_monoid.hpp"

#include <map>

#include "json.hpp"

namespace cosetlab {

namespace {

std::vector<int> coset_members(const FiniteGroup& G, const Subgroup& H, int a) {
  std::vector<int> m;
  m.reserve(H.members.size());
  for (int h : H.members) m.push_back(G.mul(h, a));
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

CosetMonoid build_coset_monoid(const SubgroupLattice& lat) {
  const FiniteGroup& G = lat.group;
  CosetMonoid K;
  K.lattice = lat;

  // enumerate cosets subgroup by subgroup, ordered by minimal representative
  std::vector<std::vector<int>> elem_at;  // [subgroup id][group element] -> monoid index
  elem_at.assign(lat.count(), std::vector<int>(G.order(), -1));
  for (int s = 0; s < lat.count(); ++s) {
    for (int g = 0; g < G.order(); ++g) {
      if (elem_at[s][g] >= 0) continue;
      CosetElement ce;
      ce.subgroup_id = s;
      ce.members = coset_members(G, lat.subgroups[s], g);
      ce.rep = ce.members[0];
      int idx = static_cast<int>(K.elements.size());
      if (idx >= kMonoidSizeCap)
        throw Error("coset monoid exceeds size cap " + std::to_string(kMonoidSizeCap));
      for (int m : ce.members) elem_at[s][m] = idx;
      K.elements.push_back(std::move(ce));
    }
  }
  const int n = static_cast<int>(K.elements.size());

  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    const CosetElement& cx = K.elements[x];
    for (int y = 0; y < n; ++y) {
      const CosetElement& cy = K.elements[y];
      // Ha * Kb = <H, K^(a^-1)> ab;  K^(a^-1) = a K a^-1
      int kconj = lat.conj_by[cy.subgroup_id][G.inv(cx.rep)];
      int l = lat.join[cx.subgroup_id][kconj];
      table[x * n + y] = elem_at[l][G.mul(cx.rep, cy.rep)];
    }
  }

  K.idem_of_subgroup.assign(lat.count(), -1);
  K.subgroup_of_element.resize(n);
  for (int x = 0; x < n; ++x) {
    const CosetElement& ce = K.elements[x];
    K.subgroup_of_element[x] = ce.subgroup_id;
    if (ce.members == lat.subgroups[ce.subgroup_id].members)
      K.idem_of_subgroup[ce.subgroup_id] = x;
  }
  int identity = elem_at[lat.trivial_id()][G.identity()];
  int zero = elem_at[lat.full_id()][G.identity()];

  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x)
    labels[x] =
        "H" + std::to_string(K.elements[x].subgroup_id) + "*" + G.label(K.elements[x].rep);

  K.monoid = FiniteInverseMonoid::validate(n, std::move(table), identity, zero, std::move(labels));
  return K;
}

bool check_reverse_inclusion_order(const CosetMonoid& K) {
  const int n = K.monoid.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool rev = is_subset(K.elements[y].members, K.elements[x].members);
      if (K.monoid.leq(x, y) != rev) return false;
    }
  return true;
}

DictionaryReport check_dictionary(const CosetMonoid& K) {
  const FiniteInverseMonoid& S = K.monoid;
  const SubgroupLattice& lat = K.lattice;
  DictionaryReport rep;

  for (int s = 0; s < lat.count(); ++s)
    rep.coset_count_expected += lat.group.order() / lat.subgroups[s].order();
  rep.expect(rep.coset_count_expected == S.size(),
             "|K(G)| != sum of subgroup indices: " + std::to_string(S.size()) + " vs " +
                 std::to_string(rep.coset_count_expected));

  // idempotents <-> subgroups: Ha idempotent iff a in H
  rep.expect(static_cast<int>(S.idempotents().size()) == lat.count(),
             "idempotent count " + std::to_string(S.idempotents().size()) +
                 " != subgroup count " + std::to_string(lat.count()));
  for (int x = 0; x < S.size(); ++x) {
    bool is_sub = K.elements[x].members == lat.subgroups[K.elements[x].subgroup_id].members;
    rep.expect(S.is_idempotent(x) == is_sub,
               "idempotency mismatch at element " + std::to_string(x));
  }
  for (int s = 0; s < lat.count(); ++s)
    rep.expect(K.idem_of_subgroup[s] >= 0, "subgroup " + std::to_string(s) + " has no idempotent");

  // central idempotents <-> normal subgroups
  std::vector<int> cent = centre(S);
  for (int s = 0; s < lat.count(); ++s) {
    bool central = set_contains(cent, K.idem_of_subgroup[s]);
    rep.expect(central == lat.normal_in_g[s],
               "centrality/normality mismatch at subgroup " + std::to_string(s));
  }

  // D-equivalence of idempotents <-> conjugacy of subgroups
  GreenClasses green = green_classes(S);
  for (int s = 0; s < lat.count(); ++s)
    for (int t = 0; t < lat.count(); ++t) {
      bool deq = green.d[K.idem_of_subgroup[s]] == green.d[K.idem_of_subgroup[t]];
      bool conj = lat.conj_class[s] == lat.conj_class[t];
      if (deq != conj) {
        rep.expect(false, "D-class/conjugacy mismatch at subgroups " + std::to_string(s) + "," +
                              std::to_string(t));
        break;
      }
    }

  rep.expect(check_reverse_inclusion_order(K), "natural order is not reverse coset inclusion");

  // joins and products of idempotents
  for (int s = 0; s < lat.count(); ++s)
    for (int t = 0; t < lat.count(); ++t) {
      int es = K.idem_of_subgroup[s], et = K.idem_of_subgroup[t];
      int prod = S.mul(es, et);
      rep.expect(prod == K.idem_of_subgroup[lat.join[s][t]],
                 "idempotent product != generated subgroup at (" + std::to_string(s) + "," +
                     std::to_string(t) + ")");
      int join = natural_join(S, es, et);
      rep.expect(join == K.idem_of_subgroup[lat.meet[s][t]],
                 "idempotent join != subgroup intersection at (" + std::to_string(s) + "," +
                     std::to_string(t) + ")");
    }

  // unit group isomorphic to G via g -> coset {g} of the trivial subgroup
  UnitGroup units = group_of_units(S);
  rep.expect(is_factorizable(S, units), "coset monoid is not factorizable");
  rep.expect(units.group.order() == lat.group.order(), "unit group order mismatch");
  if (units.group.order() == lat.group.order()) {
    bool hom = true, bij = true;
    std::vector<int> image(lat.group.order(), -1);
    for (int g = 0; g < lat.group.order(); ++g) {
      int xg = -1;
      for (int x = 0; x < S.size(); ++x)
        if (K.elements[x].subgroup_id == lat.trivial_id() && K.elements[x].rep == g) xg = x;
      if (xg < 0 || units.index_of[xg] < 0) {
        bij = false;
        break;
      }
      image[g] = xg;
    }
    if (bij)
      for (int a = 0; a < lat.group.order() && hom; ++a)
        for (int b = 0; b < lat.group.order() && hom; ++b)
          if (S.mul(image[a], image[b]) != image[lat.group.mul(a, b)]) hom = false;
    rep.expect(bij && hom, "g -> {g} is not an isomorphism onto the units");
  }

  // theta is a dual isomorphism onto all of L(G)
  DualIsoReport dual = is_dual_isomorphism(S, units);
  rep.expect(dual.ok, "theta not a dual isomorphism: " + dual.witness);
  for (int s = 0; s < lat.count(); ++s) {
    Subgroup th = natural_connection(S, units, K.idem_of_subgroup[s]);
    std::vector<int> as_g;  // unit-group indices back to G elements via rep
    for (int gi : th.members) as_g.push_back(K.elements[units.elems[gi]].rep);
    std::sort(as_g.begin(), as_g.end());
    rep.expect(as_g == lat.subgroups[s].members,
               "theta image of subgroup " + std::to_string(s) + " is not the subgroup itself");
  }

  // filter of the H-idempotent is K(H)
  for (int s = 0; s < lat.count(); ++s) {
    View filt = filter_up(S, K.idem_of_subgroup[s]);
    FiniteInverseMonoid filt_m = materialize(S, filt);
    FiniteGroup H = extract_subgroup(lat.group, lat.subgroups[s]);
    CosetMonoid KH = build_coset_monoid(enumerate_subgroups(H));
    rep.expect(monoid_isomorphic(filt_m, KH.monoid).has_value(),
               "filter of subgroup " + std::to_string(s) + " not isomorphic to K(H)");
  }

  // subcentral defect of the H-idempotent == subnormal defect of H
  auto defects = subnormal_defects(lat);
  EContext E = EContext::build(S);
  {
    // BFS from zero over edges (e -> f) with e <= f and f central in e-filter
    const int k = static_cast<int>(E.idems.size());
    std::vector<int> dist(k, -1);
    std::vector<int> queue;
    int z = E.pos[S.zero()];
    dist[z] = 0;
    queue.push_back(z);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int i = queue[qi];
      for (int j = 0; j < k; ++j)
        if (dist[j] < 0 && i != j && E.eleq[i][j] && E.central_in_filter[i][j]) {
          dist[j] = dist[i] + 1;
          queue.push_back(j);
        }
    }
    for (int s = 0; s < lat.count(); ++s) {
      int p = E.pos[K.idem_of_subgroup[s]];
      int monoid_defect = dist[p];
      int group_defect = defects[s] ? *defects[s] : -1;
      rep.expect(monoid_defect == group_defect,
                 "defect mismatch at subgroup " + std::to_string(s) + ": monoid " +
                     std::to_string(monoid_defect) + " vs group " + std::to_string(group_defect));
    }
  }
  return rep;
}

bool representative_swap_test(const CosetMonoid& K, int swaps, uint64_t seed) {
  const FiniteGroup& G = K.group();
  const SubgroupLattice& lat = K.lattice;
  const int n = K.monoid.size();
  SplitMix64 rng(seed);
  std::map<std::pair<int, std::vector<int>>, int> index;
  for (int x = 0; x < n; ++x)
    index[{K.elements[x].subgroup_id, K.elements[x].members}] = x;
  for (int i = 0; i < swaps; ++i) {
    int x = rng.below(n), y = rng.below(n);
    const CosetElement& cx = K.elements[x];
    const CosetElement& cy = K.elements[y];
    int a = cx.members[rng.below(static_cast<int>(cx.members.size()))];
    int b = cy.members[rng.below(static_cast<int>(cy.members.size()))];
    int kconj = lat.conj_by[cy.subgroup_id][G.inv(a)];
    int l = lat.join[cx.subgroup_id][kconj];
    auto prod = coset_members(G, lat.subgroups[l], G.mul(a, b));
    int z = index.at({l, prod});
    if (z != K.monoid.mul(x, y)) return false;
  }
  return true;
}

std::string coset_sidecar_json(const CosetMonoid& K) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["convention"] = "permutations compose left-to-right";
  j["group_order"] = K.group().order();
  j["elements"] = nlohmann::ordered_json::array();
  for (int x = 0; x < K.monoid.size(); ++x) {
    nlohmann::ordered_json e;
    e["index"] = x;
    e["subgroup"] = K.elements[x].subgroup_id;
    e["rep"] = K.elements[x].rep;
    e["members"] = K.elements[x].members;
    e["label"] = K.monoid.label(x);
    j["elements"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

}  // namespace cosetlab
