#include "cosetlab/table_iso.hpp"

#include <algorithm>
#include <map>

namespace cosetlab {

namespace {

// One refinement round: the new color of a is determined by its old color,
// its square's color, and the multiset of (c(b), c(ab), c(ba)) over all b.
// Color ids are assigned in sorted signature order, so they are canonical and
// comparable across two tables refined side by side.
std::vector<int> refine_once(int n, const std::vector<int>& t, const std::vector<int>& c,
                             int* color_count) {
  const long long base = n + 1;
  std::vector<std::vector<long long>> sigs(n);
  for (int a = 0; a < n; ++a) {
    std::vector<long long>& s = sigs[a];
    s.reserve(n + 2);
    s.push_back(c[a]);
    s.push_back(c[t[a * n + a]]);
    std::vector<long long> row;
    row.reserve(n);
    for (int b = 0; b < n; ++b) {
      row.push_back((c[b] * base + c[t[a * n + b]]) * base + c[t[b * n + a]]);
    }
    std::sort(row.begin(), row.end());
    s.insert(s.end(), row.begin(), row.end());
  }
  std::map<std::vector<long long>, int> ids;
  for (int a = 0; a < n; ++a) ids.emplace(sigs[a], 0);
  int next = 0;
  for (auto& kv : ids) kv.second = next++;
  *color_count = next;
  std::vector<int> out(n);
  for (int a = 0; a < n; ++a) out[a] = ids.at(sigs[a]);
  return out;
}

}  // namespace

std::vector<int> table_colors(int n, const std::vector<int>& t) {
  std::vector<int> c(n, 0);
  int count = 1;
  for (int round = 0; round < n; ++round) {
    int next_count = 0;
    std::vector<int> nc = refine_once(n, t, c, &next_count);
    bool stable = next_count == count;
    c = std::move(nc);
    count = next_count;
    if (stable) break;
  }
  return c;
}

namespace {

struct Search {
  int n;
  const std::vector<int>& t1;
  const std::vector<int>& t2;
  std::vector<int> c1, c2;
  std::vector<int> gens;               // greedy generating sequence of table 1
  std::vector<int> map;                // t1 index -> t2 index, -1 unset
  std::vector<int> rmap;               // t2 index -> t1 index
  std::vector<std::vector<int>> trail; // mapped t1 elements added per gen level

  bool closure_from(const std::vector<int>& seeds, std::vector<bool>* in) const {
    // products of already-present elements, fixpoint
    std::vector<int> todo = seeds;
    while (!todo.empty()) {
      int x = todo.back();
      todo.pop_back();
      for (int a = 0; a < n; ++a)
        if ((*in)[a]) {
          for (int p : {t1[x * n + a], t1[a * n + x]})
            if (!(*in)[p]) {
              (*in)[p] = true;
              todo.push_back(p);
            }
        }
    }
    return true;
  }

  // Propagate products of mapped elements. Newly mapped t1 elements are
  // recorded in `added` so the level can be undone on backtrack.
  bool extend(std::vector<int>& added, std::vector<int> worklist) {
    while (!worklist.empty()) {
      int x = worklist.back();
      worklist.pop_back();
      for (int a = 0; a < n; ++a) {
        if (map[a] < 0) continue;
        const int pairs[2][2] = {{t1[x * n + a], t2[map[x] * n + map[a]]},
                                 {t1[a * n + x], t2[map[a] * n + map[x]]}};
        for (auto& pr : pairs) {
          int p = pr[0], q = pr[1];
          if (map[p] >= 0) {
            if (map[p] != q) return false;
          } else {
            if (rmap[q] >= 0) return false;  // injectivity
            if (c1[p] != c2[q]) return false;
            map[p] = q;
            rmap[q] = p;
            added.push_back(p);
            worklist.push_back(p);
          }
        }
      }
    }
    return true;
  }

  void undo(const std::vector<int>& added) {
    for (int p : added) {
      rmap[map[p]] = -1;
      map[p] = -1;
    }
  }

  bool assign(size_t gi) {
    if (gi == gens.size()) {
      // generating sequence covers everything, so the map is total; the
      // propagation already verified every product of mapped pairs
      for (int a = 0; a < n; ++a)
        if (map[a] < 0) return false;
      return true;
    }
    int g = gens[gi];
    if (map[g] >= 0) return assign(gi + 1);  // already forced by products
    for (int x = 0; x < n; ++x) {
      if (rmap[x] >= 0 || c2[x] != c1[g]) continue;
      std::vector<int> added{g};
      map[g] = x;
      rmap[x] = g;
      if (extend(added, {g}) && assign(gi + 1)) return true;
      undo(added);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> tables_isomorphic(int n1, const std::vector<int>& t1,
                                                  int n2, const std::vector<int>& t2) {
  if (n1 != n2) return std::nullopt;
  const int n = n1;
  if (n == 0) return std::vector<int>{};
  std::vector<int> c1 = table_colors(n, t1);
  std::vector<int> c2 = table_colors(n, t2);
  std::vector<int> s1 = c1, s2 = c2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return std::nullopt;

  Search srch{n, t1, t2, std::move(c1), std::move(c2), {}, {}, {}, {}};
  // greedy generating sequence
  std::vector<bool> covered(n, false);
  for (int a = 0; a < n; ++a) {
    if (covered[a]) continue;
    srch.gens.push_back(a);
    covered[a] = true;
    srch.closure_from({a}, &covered);
  }
  srch.map.assign(n, -1);
  srch.rmap.assign(n, -1);
  if (!srch.assign(0)) return std::nullopt;
  return srch.map;
}

}  // namespace cosetlab
