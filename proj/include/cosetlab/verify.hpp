#ifndef COSETLAB_VERIFY_HPP
#define COSETLAB_VERIFY_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cosetlab/conjectures.hpp"
#include "cosetlab/nilpotency.hpp"
#include "cosetlab/series.hpp"

namespace cosetlab {

// Everything the per-group checks need, built once. Neither copyable nor
// movable: the caches hold references into the monoid and idempotent context.
struct GroupBundle {
  std::string name;
  CosetMonoid K;
  UnitGroup units;
  EContext E;
  std::optional<GContext> G;
  std::optional<FactorCache> cache;
  bool dual_iso = false;

  GroupBundle() = default;
  GroupBundle(const GroupBundle&) = delete;
  GroupBundle& operator=(const GroupBundle&) = delete;

  const FiniteInverseMonoid& S() const { return K.monoid; }
};
std::unique_ptr<GroupBundle> make_bundle(const std::string& name, const FiniteGroup& g);

namespace checks {

// Extensional structure checks over a factorizable inverse monoid. Each
// runs over every applicable tuple and reports the first violation.
CheckResult fgeq_i(const FiniteInverseMonoid& S, const UnitGroup& units);
CheckResult fgeq_ii(const FiniteInverseMonoid& S, const UnitGroup& units);
CheckResult fgeq_iii(const FiniteInverseMonoid& S, const UnitGroup& units, const EContext& E);
CheckResult thecon_i(const FiniteInverseMonoid& S, const UnitGroup& units);
CheckResult thecon_ii(const FiniteInverseMonoid& S, const UnitGroup& units);
CheckResult thecon_iii(const FiniteInverseMonoid& S, const EContext& E);
CheckResult thecon_iv(const FiniteInverseMonoid& S, const EContext& E);
CheckResult thecon_v(const FiniteInverseMonoid& S, const UnitGroup& units, const EContext& E);
CheckResult phie(const FiniteInverseMonoid& S, const EContext& E);
CheckResult iso2(const FiniteInverseMonoid& S, const EContext& E,
                 long long instance_cap = 100000);
CheckResult iso2pe_i(const FiniteInverseMonoid& S, const EContext& E, FactorCache& cache);
CheckResult iso2pe_ii(const FiniteInverseMonoid& S, const EContext& E, FactorCache& cache);
CheckResult subcs(const FiniteInverseMonoid& S, const EContext& E);
CheckResult schre(const FiniteInverseMonoid& S, const EContext& E, FactorCache& cache,
                  size_t series_cap = 10000);
CheckResult jorh(const FiniteInverseMonoid& S, const EContext& E, FactorCache& cache,
                 size_t series_cap = 10000);
CheckResult jorhex(const FiniteInverseMonoid& S, const EContext& E);

}  // namespace checks

// Named checks over a bundle, in the fixed matrix column order.
using BundleCheck = std::pair<std::string, std::function<CheckResult(GroupBundle&)>>;
const std::vector<BundleCheck>& all_bundle_checks();

struct CorpusEntry {
  std::string name;
  std::string spec;  // group-spec text
};
std::vector<CorpusEntry> default_corpus();

struct VerifyCaps {
  int max_order = 24;
  size_t series_cap = 10000;
};

struct VerificationMatrix {
  std::vector<std::string> groups;
  std::vector<std::string> checks;
  std::vector<std::vector<CheckResult>> cells;  // [group][check]
  std::vector<std::string> row_errors;          // empty string = no error
  int fail_count = 0;
  int error_count = 0;

  bool all_green() const { return fail_count == 0 && error_count == 0; }
  std::string to_text() const;
  std::string to_json() const;
};

VerificationMatrix run_verify(const std::vector<CorpusEntry>& corpus,
                              const VerifyCaps& caps = {});

}  // namespace cosetlab

#endif
