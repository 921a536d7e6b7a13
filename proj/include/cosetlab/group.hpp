#ifndef COSETLAB_GROUP_HPP
#define COSETLAB_GROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "cosetlab/util.hpp"

namespace cosetlab {

// Order cap for full-table validation. Defaults to 64; the environment
// variable COSETLAB_CAP_ORDER overrides it.
int cap_order();

// A permutation on points 0..d-1, stored as the image vector.
// Composition is fixed left-to-right throughout: (a*b)(x) = b(a(x)),
// i.e. apply a first, then b.
using Perm = std::vector<int>;

Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
// 1-based cycle notation; the identity prints as "e".
std::string cycle_notation(const Perm& p);

class FiniteGroup {
 public:
  FiniteGroup() = default;  // empty placeholder; real instances come from the factories

  // Closure of the generators under left-to-right composition. Elements are
  // indexed in lexicographic order of their image vectors, so the identity
  // always gets index 0.
  static FiniteGroup from_permutations(int degree, const std::vector<Perm>& gens);

  // Cayley table, row-major: table[a*n + b] = a*b. The identity is located,
  // associativity and inverses are verified; failures carry a witness.
  static FiniteGroup from_table(int order, std::vector<int> table,
                                std::vector<std::string> labels = {});

  int order() const { return n_; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return id_; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& backend() const { return backend_; }
  const std::vector<Perm>& perms() const { return perms_; }  // empty for table backend
  const std::vector<int>& table() const { return mul_; }

  bool is_abelian() const;
  int element_order(int a) const;
  int conjugate(int a, int g) const { return mul(mul(inv(g), a), g); }  // g^-1 a g

 private:
  void validate() const;

  int n_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  int id_ = 0;
  std::vector<std::string> labels_;
  std::string backend_;
  std::vector<Perm> perms_;
};

// A subgroup is its sorted member-index set; `id` is assigned once a lattice
// enumerates it.
struct Subgroup {
  std::vector<int> members;
  int id = -1;

  int order() const { return static_cast<int>(members.size()); }
  bool operator==(const Subgroup& o) const { return members == o.members; }
};

Subgroup subgroup_generate(const FiniteGroup& G, const std::vector<int>& gens);
Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& H, int g);  // g^-1 H g
// Pre: H <= K (throws otherwise).
bool is_normal(const FiniteGroup& G, const Subgroup& H, const Subgroup& K);
bool is_normal_in_group(const FiniteGroup& G, const Subgroup& H);
Subgroup normalizer(const FiniteGroup& G, const Subgroup& H);

// Right-coset group with minimal-index canonical representatives. Pre: N
// normal in G (throws otherwise).
FiniteGroup quotient_group(const FiniteGroup& G, const Subgroup& N);

// The subgroup as a standalone group. For a permutation parent the members
// stay permutations; otherwise the table is reindexed. If given,
// `index_map` receives parent-index -> subgroup-index (-1 outside H).
FiniteGroup extract_subgroup(const FiniteGroup& G, const Subgroup& H,
                             std::vector<int>* index_map = nullptr);

Subgroup center(const FiniteGroup& G);
Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& H, const Subgroup& K);

// G >= G' >= G'' >= ..., last entry repeated-stable.
std::vector<Subgroup> derived_series(const FiniteGroup& G);
// G = gamma_1 >= gamma_2 = [G,G] >= [gamma_2,G] >= ...
std::vector<Subgroup> lower_central_series(const FiniteGroup& G);
std::optional<int> nilpotency_class(const FiniteGroup& G);
std::optional<int> derived_length(const FiniteGroup& G);

// Group-spec text: one declaration, grammar
//   perm degree=<n> gens=<cycles>(;<cycles>)*
//   table <n>        (followed by n rows of n 0-based indices)
//   preset <name>
FiniteGroup parse_group(const std::string& text);
FiniteGroup preset_group(const std::string& name);
FiniteGroup direct_product(const std::vector<FiniteGroup>& factors);

std::optional<std::vector<int>> group_isomorphic(const FiniteGroup& A, const FiniteGroup& B);

}  // namespace cosetlab

#endif
