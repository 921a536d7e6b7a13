#ifndef COSETLAB_CONJECTURES_HPP
#define COSETLAB_CONJECTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "cosetlab/nilpotency.hpp"

namespace cosetlab {

enum class GVariant { nilpotent, solvable };
const char* to_string(GVariant v);

// Classification of materialized filters, memoized per generating idempotent.
class FilterClassifier {
 public:
  explicit FilterClassifier(const FiniteInverseMonoid& S) : S_(S) {}
  const ClassificationReport& classify(int e);

 private:
  const FiniteInverseMonoid& S_;
  std::map<int, ClassificationReport> memo_;
};

// Probe: in a monoid with no central idempotents beyond 0 and 1, every
// idempotent with G-nilpotent filter should admit a unit g with
// e-filter intersect g^-1(e-filter)g = {1}.
struct Problem1Result {
  bool skipped = false;
  std::string skip_reason;
  struct Instance {
    int e = -1;
    bool found = false;
    int g = -1;  // witness unit (S element index) when found
  };
  std::vector<Instance> instances;
  long long examined = 0;
};
Problem1Result probe_problem1(const CosetMonoid& K);
bool replay_problem1(const CosetMonoid& K, const Problem1Result::Instance& inst);

// Probe: k conjugates of a G-solvable filter with trivial intersection.
struct Problem3Result {
  int k = 7;
  bool skipped = false;
  std::string skip_reason;
  struct Instance {
    int e = -1;
    bool found = false;
    std::vector<int> tuple;  // unit S-element indices, size k, when found
  };
  std::vector<Instance> instances;
  long long examined = 0;
  bool truncated = false;
};
Problem3Result probe_problem3(const CosetMonoid& K, int k, long long max_tuples = 1000000);
bool replay_problem3(const CosetMonoid& K, int k, const Problem3Result::Instance& inst);

// Probe: d_s(S) - d_s(e-filter) over primitive idempotents e.
struct Problem4aResult {
  bool skipped = false;
  std::string skip_reason;
  int ds_s = -1;
  struct Instance {
    int e = -1;
    int ds_filter = -1;
    int diff = -1;
  };
  std::vector<Instance> instances;
  int max_diff = -1;  // -1 when no primitive idempotents
};
Problem4aResult probe_problem4a(const CosetMonoid& K);
bool replay_problem4a(const CosetMonoid& K, const Problem4aResult::Instance& inst);

// Probe: products over M = {e v f' v h' : f' D f, h' D h} and central
// idempotents below them with a qualifying filter.
struct Problem6Result {
  GVariant variant = GVariant::nilpotent;
  bool skipped = false;
  std::string skip_reason;
  int e = -1, f = -1, h = -1;
  std::vector<int> m_set;
  int product_of_maximal = -1;   // over maximal elements of M
  int min_theta_order = -1;      // m = min |x theta|
  int product_of_min_theta = -1; // over elements with |x theta| = m
  bool found_c_for_min = false;
  int c_min = -1;
  bool found_c_for_max = false;
  int c_max = -1;
};
Problem6Result probe_problem6(const CosetMonoid& K, int e, int f, int h, GVariant v);
std::vector<Problem6Result> probe_problem6_all(const CosetMonoid& K, GVariant v);
bool replay_problem6(const CosetMonoid& K, const Problem6Result& r);

// Idempotents commute, so products over subsets of E do not depend on the
// evaluation order; asserted as a property and relied on by problem 6.
int idempotent_product(const FiniteInverseMonoid& S, const std::vector<int>& idems);

}  // namespace cosetlab

#endif
