#ifndef COSETLAB_COSET_MONOID_HPP
#define COSETLAB_COSET_MONOID_HPP

#include <string>
#include <vector>

#include "cosetlab/inverse_monoid.hpp"
#include "cosetlab/lattice.hpp"

namespace cosetlab {

// A right coset Ha, identified by its member set; the representative is the
// minimal element index of the coset.
struct CosetElement {
  int subgroup_id = -1;
  int rep = -1;
  std::vector<int> members;
};

// K(G): all right cosets of all subgroups under Ha * Kb = <H, K^(a^-1)> ab.
// The identity is the coset {1} of the trivial subgroup and the zero is G.
struct CosetMonoid {
  SubgroupLattice lattice;
  FiniteInverseMonoid monoid;
  std::vector<CosetElement> elements;    // per monoid element
  std::vector<int> idem_of_subgroup;     // subgroup id -> element index
  std::vector<int> subgroup_of_element;  // element index -> subgroup id

  const FiniteGroup& group() const { return lattice.group; }
};

CosetMonoid build_coset_monoid(const SubgroupLattice& lat);

// natural order == reverse coset inclusion, checked on all pairs
bool check_reverse_inclusion_order(const CosetMonoid& K);

// Every dictionary item from group-side structure to monoid-side structure.
// Any mismatch is reported with a witness.
struct DictionaryReport {
  bool ok = true;
  std::vector<std::string> failures;
  long long coset_count_expected = 0;  // sum over H of [G:H]

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};
DictionaryReport check_dictionary(const CosetMonoid& K);

// Re-derives table entries from random non-canonical coset representatives;
// returns false if any product disagrees with the table (it never should:
// coset identity is by member set).
bool representative_swap_test(const CosetMonoid& K, int swaps, uint64_t seed);

// JSON sidecar for the imonoid emission: element index -> subgroup/members.
std::string coset_sidecar_json(const CosetMonoid& K);

}  // namespace cosetlab

#endif
