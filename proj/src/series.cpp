#include "cosetlab/series.hpp"

#include <array>
#include <deque>

namespace cosetlab {

const char* to_string(SeriesKind k) {
  return k == SeriesKind::subcentral ? "subcentral" : "central";
}

SeriesCheck is_series(const FiniteInverseMonoid& S, const EContext& E,
                      const std::vector<int>& chain, SeriesKind kind) {
  SeriesCheck out;
  auto fail = [&](std::string w) {
    out.ok = false;
    out.violation = std::move(w);
    return out;
  };
  if (chain.empty()) return fail("empty chain");
  for (int e : chain)
    if (e < 0 || e >= S.size() || !S.is_idempotent(e))
      return fail("entry " + std::to_string(e) + " is not an idempotent");
  if (chain.front() != S.zero()) return fail("chain does not start at zero");
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    int a = chain[i], b = chain[i + 1];
    if (!S.leq(a, b))
      return fail("chain not ascending at positions " + std::to_string(i) + "," +
                  std::to_string(i + 1));
    bool central = kind == SeriesKind::central ? static_cast<bool>(E.central[E.pos[b]])
                                               : static_cast<bool>(E.central_in_filter[E.pos[a]][E.pos[b]]);
    if (!central)
      return fail("entry " + std::to_string(b) + " not central in " +
                  (kind == SeriesKind::central
                       ? std::string("S")
                       : "the filter of " + std::to_string(a)));
  }
  return out;
}

std::vector<std::optional<int>> all_defects(const FiniteInverseMonoid& S, const EContext& E) {
  const int k = static_cast<int>(E.idems.size());
  std::vector<std::optional<int>> dist(k);
  std::deque<int> queue;
  int z = E.pos[S.zero()];
  dist[z] = 0;
  queue.push_back(z);
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < k; ++j)
      if (!dist[j] && i != j && E.eleq[i][j] && E.central_in_filter[i][j]) {
        dist[j] = *dist[i] + 1;
        queue.push_back(j);
      }
  }
  return dist;
}

std::optional<int> defect(const FiniteInverseMonoid& S, const EContext& E, int e) {
  if (!S.is_idempotent(e)) throw Error("defect requires an idempotent");
  return all_defects(S, E)[E.pos[e]];
}

bool is_subcentral(const FiniteInverseMonoid& S, const EContext& E, int e) {
  return defect(S, E, e).has_value();
}

namespace {

// shortest subcentral path 0 -> target as element indices (BFS with parents)
std::optional<std::vector<int>> defect_path(const FiniteInverseMonoid& S, const EContext& E,
                                            int target) {
  const int k = static_cast<int>(E.idems.size());
  std::vector<int> parent(k, -2);
  std::deque<int> queue;
  int z = E.pos[S.zero()], t = E.pos[target];
  parent[z] = -1;
  queue.push_back(z);
  while (!queue.empty() && parent[t] == -2) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < k; ++j)
      if (parent[j] == -2 && i != j && E.eleq[i][j] && E.central_in_filter[i][j]) {
        parent[j] = i;
        queue.push_back(j);
      }
  }
  if (parent[t] == -2) return std::nullopt;
  std::vector<int> path;
  for (int cur = t; cur != -1; cur = parent[cur]) path.push_back(E.idems[cur]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

RefineResult refine_chain(const FiniteInverseMonoid& S, const EContext& E,
                          const std::vector<int>& chain) {
  RefineResult out;
  if (chain.empty()) {
    out.error = "empty chain";
    return out;
  }
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!S.leq(chain[i], chain[i + 1])) {
      out.error = "input chain not ascending";
      return out;
    }
  std::vector<int> result;
  for (size_t i = 0; i < chain.size(); ++i) {
    auto path = defect_path(S, E, chain[i]);
    if (!path) {
      out.error = "entry " + std::to_string(chain[i]) + " is not subcentral";
      return out;
    }
    if (i == 0) {
      result = *path;
      continue;
    }
    int prev = chain[i - 1];
    for (size_t j = 1; j < path->size(); ++j) {
      int jn = E.join[E.pos[prev]][E.pos[(*path)[j]]];
      if (jn < 0) {
        out.error = "no join of " + std::to_string(prev) + " and " + std::to_string((*path)[j]);
        return out;
      }
      result.push_back(E.idems[jn]);
    }
  }
  if (result.back() != S.identity()) result.push_back(S.identity());
  IdempotentSeries series{SeriesKind::subcentral, std::move(result)};
  SeriesCheck check = is_series(S, E, series.chain, SeriesKind::subcentral);
  if (!check.ok) {
    out.error = "refinement failed validation: " + check.violation;
    return out;
  }
  out.series = std::move(series);
  return out;
}

const FactorDescriptor& FactorCache::factor(int e, int f) {
  auto it = factors_.find({e, f});
  if (it != factors_.end()) return it->second;
  FactorView fv = factor_submonoid(S_, e, f);
  FactorDescriptor d;
  d.e = e;
  d.f = f;
  d.factor = materialize(S_, fv.view);
  d.unit_group = group_of_units(d.factor).group;
  d.fp = fingerprint(d.factor);
  return factors_.emplace(std::make_pair(e, f), std::move(d)).first->second;
}

bool FactorCache::isomorphic(int e1, int f1, int e2, int f2) {
  if (e1 == e2 && f1 == f2) return true;
  auto key = std::make_tuple(e1, f1, e2, f2);
  auto it = iso_.find(key);
  if (it != iso_.end()) return it->second;
  const FactorDescriptor& a = factor(e1, f1);
  const FactorDescriptor& b = factor(e2, f2);
  bool ok = monoid_isomorphic(a.factor, b.factor).has_value();
  iso_.emplace(key, ok);
  iso_.emplace(std::make_tuple(e2, f2, e1, f1), ok);
  return ok;
}

namespace {

std::vector<int> collapse(const std::vector<int>& full) {
  std::vector<int> out;
  for (int e : full)
    if (out.empty() || out.back() != e) out.push_back(e);
  return out;
}

}  // namespace

SchreierResult schreier_refinement(const FiniteInverseMonoid& S, const EContext& E,
                                   FactorCache& cache, const IdempotentSeries& g1,
                                   const IdempotentSeries& g2) {
  SchreierResult out;
  if (g1.kind != g2.kind) {
    out.error = "series kinds differ";
    return out;
  }
  for (const IdempotentSeries* g : {&g1, &g2}) {
    SeriesCheck c = is_series(S, E, g->chain, g->kind);
    if (!c.ok) {
      out.error = "input is not a series: " + c.violation;
      return out;
    }
    if (g->chain.back() != S.identity()) {
      out.error = "input series does not end at the identity";
      return out;
    }
  }
  const std::vector<int>& e = g1.chain;
  const std::vector<int>& f = g2.chain;
  const int m = static_cast<int>(e.size()) - 1;
  const int n = static_cast<int>(f.size()) - 1;
  auto join_of = [&](int a, int b) {
    int j = E.join[E.pos[a]][E.pos[b]];
    return j < 0 ? -1 : E.idems[j];
  };
  // left_full: e_{1,0}, then e_ij for i = 1..m, j = 1..n
  out.left_full.push_back(S.zero());
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      int jn = join_of(e[i - 1], f[j]);
      if (jn < 0) {
        out.error = "no join of " + std::to_string(e[i - 1]) + " and " + std::to_string(f[j]);
        return out;
      }
      out.left_full.push_back(S.mul(e[i], jn));
    }
  out.right_full.push_back(S.zero());
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= m; ++i) {
      int jn = join_of(e[i], f[j - 1]);
      if (jn < 0) {
        out.error = "no join of " + std::to_string(e[i]) + " and " + std::to_string(f[j - 1]);
        return out;
      }
      out.right_full.push_back(S.mul(f[j], jn));
    }
  out.note = "duplicate terms retained in *_full; e_{i,0} and f_{0,j} collapse onto the previous "
             "block's last term";

  for (const std::vector<int>* full : {&out.left_full, &out.right_full}) {
    SeriesCheck c = is_series(S, E, *full, g1.kind);
    if (!c.ok) {
      out.error = "refinement not a series: " + c.violation;
      return out;
    }
  }
  // inputs' terms appear in the outputs
  for (int i = 0; i <= m; ++i)
    if (std::find(out.left_full.begin(), out.left_full.end(), e[i]) == out.left_full.end()) {
      out.error = "left refinement misses input term " + std::to_string(e[i]);
      return out;
    }
  for (int j = 0; j <= n; ++j)
    if (std::find(out.right_full.begin(), out.right_full.end(), f[j]) == out.right_full.end()) {
      out.error = "right refinement misses input term " + std::to_string(f[j]);
      return out;
    }

  out.left = {g1.kind, collapse(out.left_full)};
  out.right = {g1.kind, collapse(out.right_full)};
  out.pairing_isomorphic = true;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      int step = (i - 1) * n + j;  // position in left_full
      int elo = out.left_full[step - 1], ehi = out.left_full[step];
      int fstep = (j - 1) * m + i;  // position in right_full
      int flo = out.right_full[fstep - 1], fhi = out.right_full[fstep];
      out.pairing.push_back({elo, ehi, flo, fhi});
      if (!cache.isomorphic(elo, ehi, flo, fhi)) out.pairing_isomorphic = false;
    }
  out.ok = true;
  return out;
}

CompositionEnum composition_series(const FiniteInverseMonoid& S, const EContext& E,
                                   SeriesKind kind, size_t cap) {
  CompositionEnum out;
  const int k = static_cast<int>(E.idems.size());
  std::vector<int> chain{S.zero()};
  std::function<void(int)> dfs = [&](int top_pos) {
    if (out.truncated) return;
    if (E.idems[top_pos] == S.identity()) {
      if (out.series.size() >= cap) {
        out.truncated = true;
        return;
      }
      out.series.push_back({kind, chain});
      return;
    }
    // admissible strict successors of the current top
    std::vector<char> admissible(k, 0);
    for (int j = 0; j < k; ++j) {
      if (j == top_pos || !E.eleq[top_pos][j]) continue;
      admissible[j] = kind == SeriesKind::central ? E.central[j]
                                                  : E.central_in_filter[top_pos][j];
    }
    for (int j = 0; j < k; ++j) {
      if (!admissible[j]) continue;
      bool minimal = true;
      for (int l = 0; l < k && minimal; ++l)
        if (l != j && admissible[l] && E.eleq[l][j]) minimal = false;
      if (!minimal) continue;
      chain.push_back(E.idems[j]);
      dfs(j);
      chain.pop_back();
    }
  };
  dfs(E.pos[S.zero()]);
  return out;
}

std::vector<std::pair<int, int>> series_steps(const IdempotentSeries& g) {
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i + 1 < g.chain.size(); ++i) out.emplace_back(g.chain[i], g.chain[i + 1]);
  return out;
}

std::vector<FactorDescriptor> factors(FactorCache& cache, const IdempotentSeries& g) {
  std::vector<FactorDescriptor> out;
  for (auto [lo, hi] : series_steps(g)) out.push_back(cache.factor(lo, hi));
  return out;
}

SeriesMatch series_isomorphic(FactorCache& cache, const IdempotentSeries& g1,
                              const IdempotentSeries& g2) {
  SeriesMatch out;
  auto s1 = series_steps(g1);
  auto s2 = series_steps(g2);
  if (s1.size() != s2.size()) return out;
  const int n = static_cast<int>(s1.size());
  std::vector<std::vector<char>> edge(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      edge[i][j] =
          cache.isomorphic(s1[i].first, s1[i].second, s2[j].first, s2[j].second);
  // Kuhn's augmenting-path matching; the diagonal is tried first so that a
  // series against itself matches identically
  std::vector<int> match_right(n, -1);
  std::function<bool(int, std::vector<char>&)> try_match = [&](int i, std::vector<char>& used) {
    for (int jj = 0; jj <= n; ++jj) {
      int j = jj == 0 ? i : jj - 1;
      if (jj > 0 && j == i) continue;
      if (!edge[i][j] || used[j]) continue;
      used[j] = 1;
      if (match_right[j] < 0 || try_match(match_right[j], used)) {
        match_right[j] = i;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < n; ++i) {
    std::vector<char> used(n, 0);
    if (!try_match(i, used)) return out;
  }
  out.ok = true;
  out.matching.assign(n, -1);
  for (int j = 0; j < n; ++j) out.matching[match_right[j]] = j;
  return out;
}

ChainConditionReport chain_condition_report(const FiniteInverseMonoid& S, const EContext& E) {
  ChainConditionReport rep;
  auto defects = all_defects(S, E);
  for (size_t i = 0; i < E.idems.size(); ++i) {
    if (defects[i]) ++rep.subcentral_count;
    if (E.central[i]) ++rep.central_count;
  }
  rep.subcentral_composition_exists =
      !composition_series(S, E, SeriesKind::subcentral, 1).series.empty();
  rep.central_composition_exists =
      !composition_series(S, E, SeriesKind::central, 1).series.empty();
  return rep;
}

}  // namespace cosetlab
