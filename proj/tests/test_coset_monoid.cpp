#include "cosetlab/coset_monoid.hpp"

#include <set>

#include "doctest.h"

using namespace cosetlab;

namespace {

CosetMonoid k_of(const std::string& preset) {
  return build_coset_monoid(enumerate_subgroups(preset_group(preset)));
}

int idem_of(const CosetMonoid& K, const std::vector<std::string>& labels) {
  std::vector<int> gens;
  for (const auto& l : labels)
    for (int i = 0; i < K.group().order(); ++i)
      if (K.group().label(i) == l) gens.push_back(i);
  REQUIRE(gens.size() == labels.size());
  int id = K.lattice.find(subgroup_generate(K.group(), gens).members);
  REQUIRE(id >= 0);
  return K.idem_of_subgroup[id];
}

}  // namespace

TEST_SUITE_BEGIN("coset_monoid");

TEST_CASE("K(C1) has one element") {
  CosetMonoid K = k_of("C1");
  CHECK(K.monoid.size() == 1);
  CHECK(K.monoid.is_trivial());
}

TEST_CASE("K(C2) multiplication by hand") {
  CosetMonoid K = k_of("C2");
  const FiniteInverseMonoid& s = K.monoid;
  REQUIRE(s.size() == 3);
  int one = s.identity(), zero = s.zero();
  int a = 3 - one - zero;
  CHECK(s.mul(a, a) == one);  // {a}*{a} = {1}
  CHECK(s.mul(a, zero) == zero);
  CHECK(s.mul(zero, a) == zero);
  // {a} and {1} incomparable, C2 below both
  CHECK_FALSE(s.leq(a, one));
  CHECK_FALSE(s.leq(one, a));
  CHECK(s.leq(zero, a));
  CHECK(s.leq(zero, one));
}

TEST_CASE("coset counts") {
  CHECK(k_of("S3").monoid.size() == 18);  // 6 + 3*3 + 2 + 1
  CosetMonoid K4 = k_of("S4");
  long long expected = 0;
  for (int i = 0; i < K4.lattice.count(); ++i)
    expected += K4.group().order() / K4.lattice.subgroups[i].order();
  CHECK(K4.monoid.size() == expected);
}

TEST_CASE("element count cross-checked against raw coset enumeration") {
  for (const char* name : {"S3", "D4", "Q8", "A4", "C12"}) {
    CosetMonoid K = k_of(name);
    const FiniteGroup& g = K.group();
    std::set<std::vector<int>> raw;
    for (int s = 0; s < K.lattice.count(); ++s)
      for (int a = 0; a < g.order(); ++a) {
        std::vector<int> coset;
        for (int h : K.lattice.subgroups[s].members) coset.push_back(g.mul(h, a));
        std::sort(coset.begin(), coset.end());
        raw.insert(std::move(coset));
      }
    CHECK(static_cast<int>(raw.size()) == K.monoid.size());
  }
}

TEST_CASE("idempotents are exactly the subgroup cosets") {
  CosetMonoid K = k_of("D4");
  for (int x = 0; x < K.monoid.size(); ++x) {
    bool is_subgroup_coset =
        K.elements[x].members == K.lattice.subgroups[K.elements[x].subgroup_id].members;
    CHECK(K.monoid.is_idempotent(x) == is_subgroup_coset);
  }
  CHECK(K.monoid.idempotents().size() == static_cast<size_t>(K.lattice.count()));
}

TEST_CASE("natural order is reverse inclusion") {
  for (const char* name : {"C2", "S3", "D4", "Q8"}) CHECK(check_reverse_inclusion_order(k_of(name)));
}

TEST_CASE("zero is the least element") {
  CosetMonoid K = k_of("S3");
  for (int x = 0; x < K.monoid.size(); ++x) CHECK(K.monoid.leq(K.monoid.zero(), x));
}

TEST_CASE("dictionary report on the difficult corpus members") {
  for (const char* name : {"S3", "S4", "Q8", "C2xC4"}) {
    DictionaryReport rep = check_dictionary(k_of(name));
    if (!rep.ok) FAIL(name, ": ", rep.failures.front());
    CHECK(rep.ok);
  }
}

TEST_CASE("central idempotents of K(S3) are the three normal subgroups") {
  CosetMonoid K = k_of("S3");
  std::vector<int> cent = centre(K.monoid);
  std::vector<int> central_idems;
  for (int e : K.monoid.idempotents())
    if (set_contains(cent, e)) central_idems.push_back(e);
  CHECK(central_idems.size() == 3);
}

TEST_CASE("defect of the double-transposition idempotent in K(S4) is 2") {
  CosetMonoid K = k_of("S4");
  EContext E = EContext::build(K.monoid);
  int e = idem_of(K, {"(1 2)(3 4)"});
  // BFS over centrality edges mirrors the subnormal chain <(12)(34)> <| V4 <| S4
  auto defects = subnormal_defects(K.lattice);
  CHECK(defects[K.subgroup_of_element[e]] == 2);
}

TEST_CASE("unit group of K(G) is G") {
  for (const char* name : {"S3", "Q8", "A4"}) {
    CosetMonoid K = k_of(name);
    UnitGroup u = group_of_units(K.monoid);
    CHECK(u.group.order() == K.group().order());
    CHECK(group_isomorphic(u.group, K.group()).has_value());
  }
}

TEST_CASE("theta is a dual isomorphism onto the full subgroup lattice") {
  for (const char* name : {"S3", "D4", "C2xC2xC2"}) {
    CosetMonoid K = k_of(name);
    UnitGroup u = group_of_units(K.monoid);
    CHECK(is_dual_isomorphism(K.monoid, u).ok);
    std::set<std::vector<int>> images;
    for (int e : K.monoid.idempotents()) {
      std::vector<int> reps;
      for (int gi : natural_connection(K.monoid, u, e).members)
        reps.push_back(K.elements[u.elems[gi]].rep);
      images.insert(sorted_unique(std::move(reps)));
    }
    CHECK(images.size() == static_cast<size_t>(K.lattice.count()));
  }
}

TEST_CASE("representative swaps never change the table") {
  for (const char* name : {"S3", "S4", "Q8", "D6"})
    CHECK(representative_swap_test(k_of(name), 100, 0x5eed));
}

TEST_CASE("filter of an idempotent is the coset monoid of its subgroup") {
  CosetMonoid K = k_of("S3");
  int a3 = idem_of(K, {"(1 2 3)"});
  FiniteInverseMonoid filt = materialize(K.monoid, filter_up(K.monoid, a3));
  CosetMonoid KA3 = k_of("C3");  // A3 is cyclic of order 3
  CHECK(monoid_isomorphic(filt, KA3.monoid).has_value());
}

TEST_CASE("sidecar json carries subgroup and members per element") {
  CosetMonoid K = k_of("C2");
  std::string j = coset_sidecar_json(K);
  CHECK(j.find("\"schema\": 1") != std::string::npos);
  CHECK(j.find("\"subgroup\"") != std::string::npos);
  CHECK(j.find("\"members\"") != std::string::npos);
  CHECK(j.find("left-to-right") != std::string::npos);
}

TEST_CASE("idempotent order of K(G) is the subgroup lattice flipped") {
  CosetMonoid K = k_of("S3");
  const FiniteInverseMonoid& s = K.monoid;
  const SubgroupLattice& lat = K.lattice;
  auto covers_lat = [&](int i, int j) {  // H_i covered by H_j in containment
    if (i == j || !lat.leq[i][j]) return false;
    for (int k = 0; k < lat.count(); ++k)
      if (k != i && k != j && lat.leq[i][k] && lat.leq[k][j]) return false;
    return true;
  };
  auto covers_idem = [&](int si, int sj) {  // e_{H_i} covered by e_{H_j} in natural order
    int a = K.idem_of_subgroup[si], b = K.idem_of_subgroup[sj];
    if (a == b || !s.leq(a, b)) return false;
    for (int e : s.idempotents())
      if (e != a && e != b && s.leq(a, e) && s.leq(e, b)) return false;
    return true;
  };
  for (int i = 0; i < lat.count(); ++i)
    for (int j = 0; j < lat.count(); ++j)
      CHECK(covers_lat(i, j) == covers_idem(j, i));
  std::string dot = idempotent_order_dot(s);
  CHECK(dot.find("digraph idempotents") != std::string::npos);
  // 6 nodes either way
  CHECK(std::count(dot.begin(), dot.end(), '[') >= 6);
}

TEST_CASE("build is deterministic") {
  CosetMonoid a = k_of("S4");
  CosetMonoid b = k_of("S4");
  CHECK(a.monoid.table() == b.monoid.table());
  CHECK(emit_imonoid(a.monoid) == emit_imonoid(b.monoid));
  CHECK(coset_sidecar_json(a) == coset_sidecar_json(b));
}

TEST_SUITE_END();
