#ifndef COSETLAB_LATTICE_HPP
#define COSETLAB_LATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cosetlab/group.hpp"

namespace cosetlab {

// Complete subgroup lattice of a finite group. Subgroup index 0 is the
// trivial subgroup and the last index is G itself; order is deterministic
// (by order, then lexicographic member set).
struct SubgroupLattice {
  FiniteGroup group;
  std::vector<Subgroup> subgroups;
  std::vector<std::vector<bool>> leq;   // [i][j]: H_i <= H_j
  std::vector<std::vector<int>> join;   // id of <H_i, H_j>
  std::vector<std::vector<int>> meet;   // id of H_i intersect H_j
  std::vector<bool> normal_in_g;
  std::vector<int> conj_class;                  // class index per subgroup
  std::vector<std::vector<int>> conj_classes;   // subgroup ids per class
  std::vector<std::vector<int>> conj_by;        // [id][g] -> id of g^-1 H g

  int count() const { return static_cast<int>(subgroups.size()); }
  int trivial_id() const { return 0; }
  int full_id() const { return count() - 1; }
  // id of the subgroup with this member set, or -1
  int find(const std::vector<int>& members) const;
};

SubgroupLattice enumerate_subgroups(const FiniteGroup& G);

// Shortest chain H = K_m <| K_{m-1} <| ... <| K_0 = G (BFS downward over
// normality edges); nullopt entries are not subnormal.
std::vector<std::optional<int>> subnormal_defects(const SubgroupLattice& lat);
std::optional<int> subnormal_defect(const SubgroupLattice& lat, int id);

// Hasse diagram of containment in DOT; normal subgroups get a distinct shape.
std::string lattice_dot(const SubgroupLattice& lat);

}  // namespace cosetlab

#endif
