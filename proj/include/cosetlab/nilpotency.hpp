#ifndef COSETLAB_NILPOTENCY_HPP
#define COSETLAB_NILPOTENCY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cosetlab/coset_monoid.hpp"
#include "cosetlab/series.hpp"

namespace cosetlab {

// Memoized data behind the G-nilpotent / G-solvable series conditions.
class GContext {
 public:
  GContext(const FiniteInverseMonoid& S, const EContext& E) : S_(S), E_(E) {}

  const std::vector<int>& factor_members(int a, int b);  // F_{a,b}, S element indices
  const std::vector<int>& factor_units(int a, int b);    // UF_{a,b}
  const std::vector<int>& centre_of_principal(int b);    // Z(F_{0,b}) = Z(bS)
  // step conditions on a central pair a <= b
  bool nilpotent_step(int a, int b);  // F_{a,b} inside Z(F_{0,b})
  bool solvable_step(int a, int b);   // F_{a,b} commutative

  const FiniteInverseMonoid& monoid() const { return S_; }
  const EContext& ectx() const { return E_; }

 private:
  const FiniteInverseMonoid& S_;
  const EContext& E_;
  std::map<std::pair<int, int>, std::vector<int>> members_, units_;
  std::map<int, std::vector<int>> centres_;
};

bool is_g_nilpotent_series(const FiniteInverseMonoid& S, const EContext& E, GContext& G,
                           const std::vector<int>& chain, std::string* why = nullptr);
bool is_g_solvable_series(const FiniteInverseMonoid& S, const EContext& E, GContext& G,
                          const std::vector<int>& chain, std::string* why = nullptr);

struct ClassificationReport {
  bool theta_dual_iso = false;
  bool g_nilpotent = false;
  std::optional<int> g_nilpotent_length;
  std::vector<int> nilpotent_witness;
  bool g_solvable = false;
  std::optional<int> g_solvable_length;
  std::vector<int> solvable_witness;
  std::optional<int> unit_nilpotency_class;
  std::optional<int> unit_derived_length;
  bool trivial = false;
};
// Shortest qualifying central series of each kind, by BFS over central
// idempotents, plus the group-side oracles for the unit group.
ClassificationReport g_lengths(const FiniteInverseMonoid& S, const EContext& E, GContext& G,
                               const UnitGroup& units);

// The series definitions agree with the UF-criterion (units of each factor
// central in S, resp. abelian) on every central chain 0 -> 1.
CheckResult nseq_check(const FiniteInverseMonoid& S, const EContext& E, GContext& G,
                       size_t chain_cap = 20000);

// Intervals of a G-nilpotent series consist of central idempotents and any
// of them can be inserted without breaking the series.
CheckResult sei_check(const FiniteInverseMonoid& S, const EContext& E, GContext& G,
                      const UnitGroup& units);

// length 1 of either kind coincides with commutativity
CheckResult nsl1eq_check(const FiniteInverseMonoid& S, const EContext& E, GContext& G,
                         const UnitGroup& units);

// G-nilpotent (solvable) of length n bounds the class (derived length) of the
// unit group and of every subgroup H_e of S.
CheckResult gnilu_check(const FiniteInverseMonoid& S, const EContext& E, GContext& G,
                        const UnitGroup& units);

// H_e isomorphic to N_e/(e theta intersect N_e) for every idempotent e.
CheckResult fasec_check(const FiniteInverseMonoid& S, const UnitGroup& units);

// S G-nilpotent (solvable) iff the unit group is nilpotent (solvable) and the
// theta image contains a central (abelian) series of it.
CheckResult niliff_check(const FiniteInverseMonoid& S, const EContext& E, GContext& G,
                         const UnitGroup& units);

// nilpotency_class(G) == g_nilpotent_length(K(G)) and derived_length(G) ==
// g_solvable_length(K(G)), including the none/none cases.
CheckResult snchr_check(const CosetMonoid& K);

// anti-abnormality is transitive along filters
CheckResult aabtrans_check(const FiniteInverseMonoid& S, const EContext& E);
// every subcentral idempotent is anti-abnormal
CheckResult subcanti_check(const FiniteInverseMonoid& S, const EContext& E);

// For G-nilpotent S: every idempotent is subcentral (with the explicit
// witness chain e_i * f validated), every nonzero idempotent is central in
// some smaller filter, and every 0-minimal idempotent is central.
CheckResult nilsubc_check(const FiniteInverseMonoid& S, const EContext& E, GContext& G,
                          const UnitGroup& units);

}  // namespace cosetlab

#endif
