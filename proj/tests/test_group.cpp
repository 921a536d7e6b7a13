#include "cosetlab/group.hpp"

#include <set>

#include "doctest.h"

using namespace cosetlab;

namespace {

int find_label(const FiniteGroup& g, const std::string& label) {
  for (int i = 0; i < g.order(); ++i)
    if (g.label(i) == label) return i;
  FAIL("no element labeled ", label);
  return -1;
}

Subgroup gen(const FiniteGroup& g, const std::vector<std::string>& labels) {
  std::vector<int> gens;
  for (const auto& l : labels) gens.push_back(find_label(g, l));
  return subgroup_generate(g, gens);
}

}  // namespace

TEST_SUITE_BEGIN("group");

TEST_CASE("preset C1 is the trivial group") {
  FiniteGroup g = parse_group("preset C1");
  CHECK(g.order() == 1);
  CHECK(g.identity() == 0);
}

TEST_CASE("permutation spec closure") {
  FiniteGroup g = parse_group("perm degree=3 gens=(1 2);(1 2 3)");
  CHECK(g.order() == 6);
  CHECK(g.backend() == "permutation-of-degree-3");
  CHECK(g.label(g.identity()) == "e");
}

TEST_CASE("Q8 has exactly one element of order 2") {
  FiniteGroup q8 = parse_group("preset Q8");
  CHECK(q8.order() == 8);
  int count = 0;
  for (int x = 0; x < q8.order(); ++x)
    if (x != q8.identity() && q8.mul(x, x) == q8.identity()) ++count;
  CHECK(count == 1);
}

TEST_CASE("preset orders") {
  CHECK(parse_group("preset S3").order() == 6);
  CHECK(parse_group("preset S4").order() == 24);
  CHECK(parse_group("preset A4").order() == 12);
  CHECK(parse_group("preset D4").order() == 8);
  CHECK(parse_group("preset D5").order() == 10);
  CHECK(parse_group("preset D6").order() == 12);
  CHECK(parse_group("preset V4").order() == 4);
  CHECK(parse_group("preset C2xC4").order() == 8);
  CHECK(parse_group("preset C2xC2xC2").order() == 8);
  CHECK(parse_group("preset S3xC2").order() == 12);
}

TEST_CASE("parse errors carry line and column") {
  CHECK_THROWS_WITH_AS(parse_group("perm degree=3 gens=(1 4)"),
                       doctest::Contains("line 1"), Error);
  CHECK_THROWS_WITH_AS(parse_group("bogus"), doctest::Contains("parse error"), Error);
  CHECK_THROWS_WITH_AS(parse_group("table 2\n0 1\n1"), doctest::Contains("ended early"), Error);
}

TEST_CASE("non-group table rejected with witness") {
  // left-zero semigroup: row i constant i; associative but no identity
  CHECK_THROWS_WITH_AS(parse_group("table 2\n0 0\n1 1"), doctest::Contains("identity"), Error);
  // smallest non-associative loop: identity and inverses exist, associativity fails
  CHECK_THROWS_WITH_AS(FiniteGroup::from_table(5, {0, 1, 2, 3, 4,  //
                                                   1, 0, 3, 4, 2,  //
                                                   2, 4, 0, 1, 3,  //
                                                   3, 2, 4, 0, 1,  //
                                                   4, 3, 1, 2, 0}),
                       doctest::Contains("triple"), Error);
}

TEST_CASE("table round trip via parse") {
  FiniteGroup c3 = parse_group("table 3\n0 1 2\n1 2 0\n2 0 1");
  CHECK(c3.order() == 3);
  CHECK(c3.element_order(1) == 3);
}

TEST_CASE("subgroup_generate closure") {
  FiniteGroup s3 = preset_group("S3");
  CHECK(subgroup_generate(s3, {}).order() == 1);
  CHECK(gen(s3, {"(1 2)", "(1 3)"}).order() == 6);
  FiniteGroup s4 = preset_group("S4");
  CHECK(gen(s4, {"(1 2)(3 4)"}).order() == 2);
}

TEST_CASE("conjugate_subgroup") {
  FiniteGroup s3 = preset_group("S3");
  Subgroup h = gen(s3, {"(1 2)"});
  CHECK(conjugate_subgroup(s3, h, s3.identity()).members == h.members);
  Subgroup conj = conjugate_subgroup(s3, h, find_label(s3, "(1 2 3)"));
  CHECK(conj.members == gen(s3, {"(2 3)"}).members);
  Subgroup a3 = gen(s3, {"(1 2 3)"});
  for (int g = 0; g < s3.order(); ++g)
    CHECK(conjugate_subgroup(s3, a3, g).members == a3.members);
}

TEST_CASE("conjugation composes") {
  FiniteGroup s4 = preset_group("S4");
  Subgroup h = gen(s4, {"(1 2 3)"});
  for (int g1 = 0; g1 < s4.order(); g1 += 5)
    for (int g2 = 0; g2 < s4.order(); g2 += 7) {
      auto once = conjugate_subgroup(s4, h, s4.mul(g1, g2));
      auto twice = conjugate_subgroup(s4, conjugate_subgroup(s4, h, g1), g2);
      CHECK(once.members == twice.members);
    }
}

TEST_CASE("is_normal") {
  FiniteGroup s3 = preset_group("S3");
  Subgroup a3 = gen(s3, {"(1 2 3)"});
  Subgroup c2 = gen(s3, {"(1 2)"});
  Subgroup all = gen(s3, {"(1 2)", "(1 2 3)"});
  CHECK(is_normal(s3, a3, a3));
  CHECK(is_normal(s3, a3, all));
  CHECK_FALSE(is_normal(s3, c2, all));
  CHECK_THROWS_AS(is_normal(s3, all, c2), Error);
  FiniteGroup s4 = preset_group("S4");
  Subgroup v4 = gen(s4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK(is_normal(s4, v4, gen(s4, {"(1 2)", "(1 2 3 4)"})));
}

TEST_CASE("normalizer") {
  FiniteGroup s3 = preset_group("S3");
  CHECK(normalizer(s3, subgroup_generate(s3, {})).order() == 6);
  Subgroup c2 = gen(s3, {"(1 2)"});
  CHECK(normalizer(s3, c2).members == c2.members);
  CHECK(normalizer(s3, gen(s3, {"(1 2 3)"})).order() == 6);
}

TEST_CASE("quotient_group") {
  FiniteGroup s3 = preset_group("S3");
  Subgroup all = gen(s3, {"(1 2)", "(1 2 3)"});
  CHECK(quotient_group(s3, all).order() == 1);
  CHECK(quotient_group(s3, gen(s3, {"(1 2 3)"})).order() == 2);
  CHECK_THROWS_AS(quotient_group(s3, gen(s3, {"(1 2)"})), Error);

  FiniteGroup s4 = preset_group("S4");
  Subgroup v4 = gen(s4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  FiniteGroup q = quotient_group(s4, v4);
  CHECK(q.order() == 6);
  CHECK(group_isomorphic(q, s3).has_value());
}

TEST_CASE("quotient order multiplies out") {
  for (const char* name : {"S4", "D4", "Q8", "C12"}) {
    FiniteGroup g = preset_group(name);
    Subgroup z = center(g);
    if (is_normal_in_group(g, z))
      CHECK(quotient_group(g, z).order() * z.order() == g.order());
  }
}

TEST_CASE("classical series oracles") {
  CHECK(nilpotency_class(preset_group("C1")) == 0);
  CHECK(nilpotency_class(preset_group("C6")) == 1);
  CHECK(nilpotency_class(preset_group("Q8")) == 2);
  CHECK(nilpotency_class(preset_group("D4")) == 2);
  CHECK_FALSE(nilpotency_class(preset_group("S3")).has_value());
  CHECK_FALSE(nilpotency_class(preset_group("S4")).has_value());
  CHECK(derived_length(preset_group("S3")) == 2);
  CHECK(derived_length(preset_group("S4")) == 3);
  CHECK(derived_length(preset_group("A4")) == 2);
  CHECK(derived_length(preset_group("C9")) == 1);
}

TEST_CASE("nilpotent implies solvable with smaller or equal derived length") {
  for (const char* name : {"C1", "C2", "C12", "V4", "Q8", "D4", "D5", "D6", "S3", "A4", "S4",
                           "C2xC4", "C2xC2xC2", "S3xC2"}) {
    FiniteGroup g = preset_group(name);
    auto cls = nilpotency_class(g);
    auto dl = derived_length(g);
    if (cls.has_value()) {
      REQUIRE(dl.has_value());
      CHECK(*dl <= *cls);
    }
  }
}

TEST_CASE("inverse is involutive and identity two-sided on corpus groups") {
  for (const char* name : {"C8", "S3", "D4", "Q8", "A4"}) {
    FiniteGroup g = preset_group(name);
    for (int a = 0; a < g.order(); ++a) {
      CHECK(g.inv(g.inv(a)) == a);
      CHECK(g.mul(a, g.identity()) == a);
      CHECK(g.mul(g.identity(), a) == a);
    }
  }
}

TEST_CASE("center and commutator basics") {
  FiniteGroup q8 = preset_group("Q8");
  CHECK(center(q8).order() == 2);
  FiniteGroup s3 = preset_group("S3");
  Subgroup all = gen(s3, {"(1 2)", "(1 2 3)"});
  CHECK(commutator_subgroup(s3, all, all).order() == 3);
  CHECK(center(s3).order() == 1);
}

TEST_CASE("group_isomorphic distinguishes C4 from V4") {
  CHECK_FALSE(group_isomorphic(preset_group("C4"), preset_group("V4")).has_value());
  CHECK(group_isomorphic(preset_group("D6"), preset_group("S3xC2")).has_value());
  auto iso = group_isomorphic(preset_group("S4"), preset_group("S4"));
  REQUIRE(iso.has_value());
  FiniteGroup s4 = preset_group("S4");
  for (int a = 0; a < s4.order(); ++a)
    for (int b = 0; b < s4.order(); ++b)
      CHECK((*iso)[s4.mul(a, b)] == s4.mul((*iso)[a], (*iso)[b]));
}

TEST_CASE("order cap enforced") {
  CHECK_THROWS_WITH_AS(parse_group("preset C65"), doctest::Contains("cap"), Error);
  CHECK_THROWS_WITH_AS(FiniteGroup::from_permutations(16, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11,
                                                            12, 13, 14, 15, 0},
                                                           {1, 0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11,
                                                            12, 13, 14, 15}}),
                       doctest::Contains("cap"), Error);
}

TEST_SUITE_END();
