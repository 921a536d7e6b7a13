#include "cosetlab/verify.hpp"

#include "doctest.h"

using namespace cosetlab;

TEST_SUITE_BEGIN("verify");

TEST_CASE("default corpus lists the expected groups") {
  auto corpus = default_corpus();
  CHECK(corpus.size() == 23);
  CHECK(corpus.front().name == "C1");
  CHECK(corpus.back().name == "S3xC2");
}

TEST_CASE("trivial group row is all pass or reasoned skip") {
  VerificationMatrix m = run_verify({{"C1", "preset C1"}});
  CHECK(m.fail_count == 0);
  CHECK(m.error_count == 0);
  bool saw_nsl1eq_skip = false;
  for (size_t c = 0; c < m.checks.size(); ++c) {
    const CheckResult& cell = m.cells[0][c];
    CHECK_FALSE(cell.failed());
    if (cell.status == CheckResult::Status::skip) {
      CHECK_FALSE(cell.detail.empty());  // no silent skips
      if (m.checks[c] == "nsl1eq") {
        saw_nsl1eq_skip = true;
        CHECK(cell.detail.find("trivial") != std::string::npos);
      }
    }
  }
  CHECK(saw_nsl1eq_skip);
}

TEST_CASE("invalid corpus entry errors without aborting the batch") {
  VerificationMatrix m = run_verify({{"bad", "nonsense"}, {"C2", "preset C2"}});
  CHECK(m.error_count == 1);
  CHECK_FALSE(m.row_errors[0].empty());
  CHECK(m.row_errors[1].empty());
  CHECK(m.fail_count == 0);
  for (const auto& cell : m.cells[1]) CHECK_FALSE(cell.failed());
  CHECK_FALSE(m.all_green());
}

TEST_CASE("order cap skips oversized groups with a reason") {
  VerifyCaps caps;
  caps.max_order = 8;
  VerificationMatrix m = run_verify({{"C12", "preset C12"}, {"C8", "preset C8"}}, caps);
  CHECK(m.error_count == 0);
  for (const auto& cell : m.cells[0]) {
    CHECK(cell.status == CheckResult::Status::skip);
    CHECK(cell.detail.find("cap") != std::string::npos);
  }
  for (const auto& cell : m.cells[1]) CHECK(cell.passed());
}

TEST_CASE("matrix emission is deterministic and carries the schema") {
  std::vector<CorpusEntry> corpus{{"C4", "preset C4"}, {"S3", "preset S3"}};
  VerificationMatrix a = run_verify(corpus);
  VerificationMatrix b = run_verify(corpus);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_text() == b.to_text());
  CHECK(a.to_json().find("\"schema\": 1") != std::string::npos);
  CHECK(a.to_text().find("left-to-right") != std::string::npos);
}

TEST_CASE("check columns match the documented order") {
  const auto& checks = all_bundle_checks();
  CHECK(checks.size() == 27);
  CHECK(checks.front().first == "dictionary");
  CHECK(checks.back().first == "nilsubc");
}

TEST_CASE("structure checks skip on a non-factorizable monoid") {
  // B2 with identity: fgeq hypotheses unmet, checks skip rather than fail
  FiniteInverseMonoid i2 = symmetric_inverse_monoid(2);
  View v;
  for (int x = 0; x < i2.size(); ++x) {
    bool is_swap = x != i2.identity() && i2.mul(x, i2.inv(x)) == i2.identity() &&
                   i2.mul(i2.inv(x), x) == i2.identity();
    if (!is_swap) v.members.push_back(x);
  }
  v.identity = i2.identity();
  FiniteInverseMonoid b2 = materialize(i2, v);
  UnitGroup units = group_of_units(b2);
  CHECK(checks::fgeq_i(b2, units).status == CheckResult::Status::skip);
  CHECK(checks::thecon_ii(b2, units).status == CheckResult::Status::skip);
  // thecon-i has no factorizability hypothesis and holds here
  CHECK(checks::thecon_i(b2, units).passed());
}

TEST_CASE("structure checks pass on the symmetric inverse monoid") {
  FiniteInverseMonoid i2 = symmetric_inverse_monoid(2);
  UnitGroup units = group_of_units(i2);
  EContext E = EContext::build(i2);
  CHECK(checks::fgeq_i(i2, units).passed());
  CHECK(checks::fgeq_ii(i2, units).passed());
  CHECK(checks::fgeq_iii(i2, units, E).passed());
  CHECK(checks::thecon_i(i2, units).passed());
  CHECK(checks::thecon_ii(i2, units).status == CheckResult::Status::skip);  // theta not injective
  CHECK(checks::thecon_iii(i2, E).passed());
  CHECK(checks::thecon_iv(i2, E).passed());
  CHECK(checks::phie(i2, E).passed());
}

TEST_SUITE_END();
