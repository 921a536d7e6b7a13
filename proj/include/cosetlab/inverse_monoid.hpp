#ifndef COSETLAB_INVERSE_MONOID_HPP
#define COSETLAB_INVERSE_MONOID_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cosetlab/group.hpp"

namespace cosetlab {

constexpr int kMonoidSizeCap = 4096;
constexpr int kIsoCap = 512;

// Finite inverse monoid with zero over a dense multiplication table. The
// inverse map is derived (and its uniqueness verified), never supplied.
class FiniteInverseMonoid {
 public:
  FiniteInverseMonoid() = default;  // empty placeholder; build through validate()

  // Verifies every axiom exhaustively: associativity, two-sided identity and
  // zero, existence and uniqueness of inverses, commuting idempotents.
  // Violations throw with a witnessing pair/triple.
  static FiniteInverseMonoid validate(int n, std::vector<int> table, int identity, int zero,
                                      std::vector<std::string> labels = {});

  int size() const { return n_; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return id_; }
  int zero() const { return zero_; }
  bool is_idempotent(int a) const { return is_idem_[a]; }
  const std::vector<int>& idempotents() const { return idems_; }
  // natural order: a <= b iff a = (a a^-1) b
  bool leq(int a, int b) const { return leq_[a * n_ + b]; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& table() const { return mul_; }
  bool is_trivial() const { return n_ == 1; }
  bool is_commutative() const;

 private:
  int n_ = 0;
  std::vector<int> mul_, inv_;
  int id_ = 0, zero_ = 0;
  std::vector<bool> is_idem_;
  std::vector<int> idems_;
  std::vector<bool> leq_;
  std::vector<std::string> labels_;
};

// `imonoid <n> identity=<i> zero=<z>` followed by n rows of n indices.
FiniteInverseMonoid parse_imonoid(const std::string& text);
std::string emit_imonoid(const FiniteInverseMonoid& S);

// A subset of a monoid closed under mul and inv, with its own identity.
struct View {
  std::vector<int> members;  // sorted
  int identity = -1;
};

// {s : s >= a}; a must be idempotent. The view's identity is 1 of S.
View filter_up(const FiniteInverseMonoid& S, int a);
std::vector<int> centre(const FiniteInverseMonoid& S);
// c must lie in the view and commute with every member.
bool is_central_in(const FiniteInverseMonoid& S, int c, const View& view);

struct GreenClasses {
  std::vector<int> r, l, h, d;  // class index per element
  std::vector<std::vector<int>> r_classes, l_classes, h_classes, d_classes;
};
// Computed from principal ideals; D is the join of R and L.
GreenClasses green_classes(const FiniteInverseMonoid& S);

struct UnitGroup {
  FiniteGroup group;
  std::vector<int> elems;     // group index -> S element
  std::vector<int> index_of;  // S element -> group index, -1 if not a unit
};
UnitGroup group_of_units(const FiniteInverseMonoid& S);

bool is_factorizable(const FiniteInverseMonoid& S, const UnitGroup& units);

// e theta = {g in G : eg = e} = e-filter intersected with the units.
Subgroup natural_connection(const FiniteInverseMonoid& S, const UnitGroup& units, int e);

// least upper bound of {a, b} in the natural order over all of S, or -1
int natural_join(const FiniteInverseMonoid& S, int a, int b);

struct DualIsoReport {
  bool ok = true;
  std::string witness;
};
// Checks that theta is injective, order-reversing both ways, that the image
// is closed under generated-subgroup and intersection, that (ef)theta is the
// generated subgroup, and that (e v f)theta is the intersection whenever the
// join exists.
DualIsoReport is_dual_isomorphism(const FiniteInverseMonoid& S, const UnitGroup& units);

// F_{e,f} = f * (e-filter) with identity f, plus its intrinsic unit set
// {x : x x^-1 = x^-1 x = f}. Pre: e <= f and f central in the e-filter.
struct FactorView {
  View view;
  std::vector<int> units;
};
FactorView factor_submonoid(const FiniteInverseMonoid& S, int e, int f);

// a -> f*a on the e-filter. Pre as factor_submonoid.
struct PhiMap {
  std::vector<int> domain;    // the e-filter, sorted
  std::vector<int> image_of;  // aligned with domain
};
PhiMap phi_homomorphism(const FiniteInverseMonoid& S, int e, int f);

// Standalone monoid from a view (throws if the view is not closed or has no
// zero). index_map, if given, receives parent index -> view index.
FiniteInverseMonoid materialize(const FiniteInverseMonoid& S, const View& view,
                                std::vector<int>* index_map = nullptr);

std::optional<std::vector<int>> monoid_isomorphic(const FiniteInverseMonoid& S,
                                                  const FiniteInverseMonoid& T,
                                                  int cap = kIsoCap);

bool is_pre_idempotent(const FiniteInverseMonoid& S, int a);  // a^2 <= a
// The R-class of e within the view contains exactly one pre-idempotent.
bool is_anti_abnormal(const FiniteInverseMonoid& S, int e, const View& view);

FiniteInverseMonoid direct_product(const FiniteInverseMonoid& A, const FiniteInverseMonoid& B);

// Partial bijections on n points; zero is the empty map. Element count is
// sum_k binom(n,k)^2 k!.
FiniteInverseMonoid symmetric_inverse_monoid(int points);

// Quotient of a subsemigroup (given by `members`) of S by a relation that
// must be a congruence on it; throws with a witness otherwise. Classes are
// represented by their minimal member.
struct QuotientTable {
  int n = 0;
  std::vector<int> table;
  std::vector<int> class_of;      // per members[] position
  std::vector<int> rep_of_class;  // S element index
};
QuotientTable quotient_table(const FiniteInverseMonoid& S, const std::vector<int>& members,
                             const std::function<bool(int, int)>& related);

// Shared idempotent structure: filters, centrality, joins/meets. Built once
// per monoid and passed to the series and nilpotency machinery.
struct EContext {
  std::vector<int> idems;                          // sorted element indices
  std::vector<int> pos;                            // element -> position or -1
  std::vector<std::vector<int>> filters;           // per position, sorted members
  std::vector<std::vector<char>> central_in_filter;  // [i][j]: e_j central in filter of e_i
  std::vector<char> central;                       // central in S, per position
  std::vector<std::vector<char>> eleq;             // order restricted to idempotents
  std::vector<std::vector<int>> join;              // position or -1 (no join)
  std::vector<std::vector<int>> meet;              // position of e_i * e_j

  static EContext build(const FiniteInverseMonoid& S);
};

// Monoid table fingerprint used to prune isomorphism tests and to describe
// series factors in reports.
struct Fingerprint {
  int size = 0;
  int idem_count = 0;
  int unit_count = 0;
  std::vector<int> green_profile;       // sorted R, L, H, D class sizes
  std::vector<int> unit_order_profile;  // sorted element orders of the unit group
  std::vector<std::pair<int, int>> degree_profile;  // sorted (|aa^-1 class|, |a^-1a class|)

  bool operator==(const Fingerprint&) const = default;
};
Fingerprint fingerprint(const FiniteInverseMonoid& S);

// Hasse diagram of the natural order restricted to idempotents, in DOT.
std::string idempotent_order_dot(const FiniteInverseMonoid& S);

}  // namespace cosetlab

#endif
