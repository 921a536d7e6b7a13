#ifndef COSETLAB_UTIL_HPP
#define COSETLAB_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cosetlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sorted-vector set helpers. All element sets in this library are kept as
// strictly increasing vectors of indices.
inline bool set_contains(const std::vector<int>& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<int> set_intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline std::string join_ints(const std::vector<int>& v, const std::string& sep = ",") {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

// Outcome of one named verification check. Skips always carry a reason.
struct CheckResult {
  enum class Status { pass, fail, skip };
  Status status = Status::pass;
  std::string detail;

  static CheckResult ok(std::string d = {}) { return {Status::pass, std::move(d)}; }
  static CheckResult failure(std::string d) { return {Status::fail, std::move(d)}; }
  static CheckResult skipped(std::string reason) { return {Status::skip, std::move(reason)}; }
  bool passed() const { return status == Status::pass; }
  bool failed() const { return status == Status::fail; }
};

// Deterministic small PRNG (splitmix64) for the seeded randomized tests.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}
  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

 private:
  uint64_t state_;
};

}  // namespace cosetlab

#endif
