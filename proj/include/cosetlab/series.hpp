#ifndef COSETLAB_SERIES_HPP
#define COSETLAB_SERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cosetlab/inverse_monoid.hpp"

namespace cosetlab {

enum class SeriesKind { subcentral, central };
const char* to_string(SeriesKind k);

// Ascending idempotent chain starting at zero. Entries are element indices;
// repeats are allowed (refinements produce them).
struct IdempotentSeries {
  SeriesKind kind = SeriesKind::subcentral;
  std::vector<int> chain;

  int length() const { return static_cast<int>(chain.size()) - 1; }
};

struct SeriesCheck {
  bool ok = true;
  std::string violation;
};
// chain[0] == zero, weakly ascending, and each next entry central in the
// filter of the previous (subcentral) or in S (central).
SeriesCheck is_series(const FiniteInverseMonoid& S, const EContext& E,
                      const std::vector<int>& chain, SeriesKind kind);

// Shortest subcentral series 0 -> e, as a BFS distance; nullopt when e is
// not subcentral. Positions follow E.idems.
std::vector<std::optional<int>> all_defects(const FiniteInverseMonoid& S, const EContext& E);
std::optional<int> defect(const FiniteInverseMonoid& S, const EContext& E, int e);
bool is_subcentral(const FiniteInverseMonoid& S, const EContext& E, int e);

// Refines a chain of subcentral idempotents into a full subcentral series
// of S by splicing the shortest per-entry series, joined upward.
struct RefineResult {
  std::optional<IdempotentSeries> series;
  std::string error;  // non-subcentral entry, or "no join" detail
};
RefineResult refine_chain(const FiniteInverseMonoid& S, const EContext& E,
                          const std::vector<int>& chain);

struct FactorDescriptor {
  int e = -1, f = -1;  // element indices, e <= f
  FiniteInverseMonoid factor;
  FiniteGroup unit_group;
  Fingerprint fp;
};

// Materialized factors and pairwise isomorphism results, memoized. Series
// checks hit the same few factors many times.
class FactorCache {
 public:
  FactorCache(const FiniteInverseMonoid& S, const EContext& E) : S_(S), E_(E) {}
  const FactorDescriptor& factor(int e, int f);
  bool isomorphic(int e1, int f1, int e2, int f2);
  const FiniteInverseMonoid& monoid() const { return S_; }
  const EContext& ectx() const { return E_; }

 private:
  const FiniteInverseMonoid& S_;
  const EContext& E_;
  std::map<std::pair<int, int>, FactorDescriptor> factors_;
  std::map<std::tuple<int, int, int, int>, bool> iso_;
};

// e_ij = e_i(e_{i-1} v f_j), f_ij = f_j(e_i v f_{j-1}). Both refinements have
// length m*n (duplicates retained in *_full, collapsed in left/right) and the
// step factors pair up isomorphically.
struct SchreierResult {
  bool ok = false;
  std::string error;
  std::vector<int> left_full, right_full;  // m*n + 1 entries each
  IdempotentSeries left, right;            // collapsed views
  std::vector<std::array<int, 4>> pairing;  // e_lo, e_hi, f_lo, f_hi per step
  bool pairing_isomorphic = false;
  std::string note;
};
SchreierResult schreier_refinement(const FiniteInverseMonoid& S, const EContext& E,
                                   FactorCache& cache, const IdempotentSeries& g1,
                                   const IdempotentSeries& g2);

// All strictly ascending series 0 -> 1 admitting no strict insertion, DFS in
// idempotent-index order, capped.
struct CompositionEnum {
  std::vector<IdempotentSeries> series;
  bool truncated = false;
};
CompositionEnum composition_series(const FiniteInverseMonoid& S, const EContext& E,
                                   SeriesKind kind, size_t cap = 10000);

std::vector<std::pair<int, int>> series_steps(const IdempotentSeries& g);

// Materialized factor descriptors of every step of the series.
std::vector<FactorDescriptor> factors(FactorCache& cache, const IdempotentSeries& g);

// Bipartite matching of factors under isomorphism.
struct SeriesMatch {
  bool ok = false;
  std::vector<int> matching;  // g1 step index -> g2 step index
};
SeriesMatch series_isomorphic(FactorCache& cache, const IdempotentSeries& g1,
                              const IdempotentSeries& g2);

struct ChainConditionReport {
  int central_count = 0;
  int subcentral_count = 0;
  bool subcentral_composition_exists = false;
  bool central_composition_exists = false;
  bool acc = true, dcc = true;  // finite posets always satisfy both
};
ChainConditionReport chain_condition_report(const FiniteInverseMonoid& S, const EContext& E);

}  // namespace cosetlab

#endif
