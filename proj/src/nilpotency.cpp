#include "cosetlab/nilpotency.hpp"

#include <deque>
#include <functional>
#include <set>

namespace cosetlab {

const std::vector<int>& GContext::factor_members(int a, int b) {
  auto it = members_.find({a, b});
  if (it != members_.end()) return it->second;
  return members_.emplace(std::make_pair(a, b), factor_submonoid(S_, a, b).view.members)
      .first->second;
}

const std::vector<int>& GContext::factor_units(int a, int b) {
  auto it = units_.find({a, b});
  if (it != units_.end()) return it->second;
  return units_.emplace(std::make_pair(a, b), factor_submonoid(S_, a, b).units).first->second;
}

const std::vector<int>& GContext::centre_of_principal(int b) {
  auto it = centres_.find(b);
  if (it != centres_.end()) return it->second;
  std::vector<int> view;
  view.reserve(S_.size());
  for (int s = 0; s < S_.size(); ++s) view.push_back(S_.mul(b, s));
  view = sorted_unique(std::move(view));
  std::vector<int> z;
  for (int c : view) {
    bool central = true;
    for (int s : view)
      if (S_.mul(c, s) != S_.mul(s, c)) {
        central = false;
        break;
      }
    if (central) z.push_back(c);
  }
  return centres_.emplace(b, std::move(z)).first->second;
}

bool GContext::nilpotent_step(int a, int b) {
  const std::vector<int>& z = centre_of_principal(b);
  for (int x : factor_members(a, b))
    if (!set_contains(z, x)) return false;
  return true;
}

bool GContext::solvable_step(int a, int b) {
  const std::vector<int>& f = factor_members(a, b);
  for (int x : f)
    for (int y : f)
      if (S_.mul(x, y) != S_.mul(y, x)) return false;
  return true;
}

namespace {

// chain must be central idempotents, ascending, 0 -> 1
bool check_central_chain(const FiniteInverseMonoid& S, const EContext& E,
                         const std::vector<int>& chain, std::string* why) {
  if (chain.empty() || chain.front() != S.zero() || chain.back() != S.identity()) {
    if (why) *why = "chain must run from zero to the identity";
    return false;
  }
  for (size_t i = 0; i < chain.size(); ++i) {
    int p = chain[i] >= 0 && chain[i] < S.size() ? E.pos[chain[i]] : -1;
    if (p < 0 || !E.central[p]) {
      if (why) *why = "entry " + std::to_string(chain[i]) + " is not a central idempotent";
      return false;
    }
    if (i > 0 && !S.leq(chain[i - 1], chain[i])) {
      if (why) *why = "chain not ascending at position " + std::to_string(i);
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_g_nilpotent_series(const FiniteInverseMonoid& S, const EContext& E, GContext& G,
                           const std::vector<int>& chain, std::string* why) {
  if (!check_central_chain(S, E, chain, why)) return false;
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!G.nilpotent_step(chain[i], chain[i + 1])) {
      if (why)
        *why = "factor (" + std::to_string(chain[i]) + "," + std::to_string(chain[i + 1]) +
               ") not inside the centre of the principal submonoid";
      return false;
    }
  return true;
}

bool is_g_solvable_series(const FiniteInverseMonoid& S, const EContext& E, GContext& G,
                          const std::vector<int>& chain, std::string* why) {
  if (!check_central_chain(S, E, chain, why)) return false;
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!G.solvable_step(chain[i], chain[i + 1])) {
      if (why)
        *why = "factor (" + std::to_string(chain[i]) + "," + std::to_string(chain[i + 1]) +
               ") not commutative";
      return false;
    }
  return true;
}

namespace {

struct Bfs {
  std::optional<int> dist;
  std::vector<int> witness;
};

Bfs shortest_series(const FiniteInverseMonoid& S, const EContext& E,
                    const std::function<bool(int, int)>& step) {
  const int k = static_cast<int>(E.idems.size());
  int z = E.pos[S.zero()], one = E.pos[S.identity()];
  std::vector<int> parent(k, -2), dist(k, -1);
  std::deque<int> queue;
  parent[z] = -1;
  dist[z] = 0;
  queue.push_back(z);
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    if (i == one) break;
    for (int j = 0; j < k; ++j) {
      if (parent[j] != -2 || i == j || !E.central[j] || !E.eleq[i][j]) continue;
      if (!step(E.idems[i], E.idems[j])) continue;
      parent[j] = i;
      dist[j] = dist[i] + 1;
      queue.push_back(j);
    }
  }
  Bfs out;
  if (parent[one] == -2) return out;
  out.dist = dist[one];
  for (int cur = one; cur != -1; cur = parent[cur]) out.witness.push_back(E.idems[cur]);
  std::reverse(out.witness.begin(), out.witness.end());
  return out;
}

}  // namespace

ClassificationReport g_lengths(const FiniteInverseMonoid& S, const EContext& E, GContext& G,
                               const UnitGroup& units) {
  ClassificationReport rep;
  rep.trivial = S.is_trivial();
  rep.theta_dual_iso = is_dual_isomorphism(S, units).ok;
  Bfs nil = shortest_series(S, E, [&](int a, int b) { return G.nilpotent_step(a, b); });
  Bfs sol = shortest_series(S, E, [&](int a, int b) { return G.solvable_step(a, b); });
  rep.g_nilpotent = nil.dist.has_value();
  rep.g_nilpotent_length = nil.dist;
  rep.nilpotent_witness = nil.witness;
  rep.g_solvable = sol.dist.has_value();
  rep.g_solvable_length = sol.dist;
  rep.solvable_witness = sol.witness;
  rep.unit_nilpotency_class = nilpotency_class(units.group);
  rep.unit_derived_length = derived_length(units.group);
  return rep;
}

CheckResult nseq_check(const FiniteInverseMonoid& S, const EContext& E, GContext& G,
                       size_t chain_cap) {
  const int k = static_cast<int>(E.idems.size());
  std::vector<int> z = centre(S);
  std::vector<int> chain{S.zero()};
  long long examined = 0;
  bool truncated = false;
  CheckResult result = CheckResult::ok();
  std::function<void(int)> dfs = [&](int top) {
    if (truncated || result.failed()) return;
    if (E.idems[top] == S.identity()) {
      if (++examined > static_cast<long long>(chain_cap)) {
        truncated = true;
        return;
      }
      bool nil_def = is_g_nilpotent_series(S, E, G, chain);
      bool sol_def = is_g_solvable_series(S, E, G, chain);
      bool nil_uf = true, sol_uf = true;
      for (size_t i = 0; i + 1 < chain.size(); ++i) {
        for (int u : G.factor_units(chain[i], chain[i + 1])) {
          if (!set_contains(z, u)) nil_uf = false;
          for (int v : G.factor_units(chain[i], chain[i + 1]))
            if (S.mul(u, v) != S.mul(v, u)) sol_uf = false;
        }
      }
      if (nil_def != nil_uf || sol_def != sol_uf) {
        result = CheckResult::failure("criteria disagree on chain [" + join_ints(chain) +
                                      "]: series-def nil=" + std::to_string(nil_def) +
                                      " UF-nil=" + std::to_string(nil_uf) +
                                      " series-def sol=" + std::to_string(sol_def) +
                                      " UF-sol=" + std::to_string(sol_uf));
      }
    }
    for (int j = 0; j < k && !result.failed() && !truncated; ++j) {
      if (j == top || !E.central[j] || !E.eleq[top][j]) continue;
      chain.push_back(E.idems[j]);
      dfs(j);
      chain.pop_back();
    }
  };
  dfs(E.pos[S.zero()]);
  if (result.failed()) return result;
  if (truncated) return CheckResult::skipped("central chain enumeration exceeded cap");
  return CheckResult::ok(std::to_string(examined) + " central chains");
}

CheckResult sei_check(const FiniteInverseMonoid& S, const EContext& E, GContext& G,
                      const UnitGroup& units) {
  ClassificationReport rep = g_lengths(S, E, G, units);
  if (!rep.g_nilpotent) return CheckResult::skipped("not G-nilpotent");
  const auto& chain = rep.nilpotent_witness;
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    int a = chain[i], b = chain[i + 1];
    for (int e : E.idems) {
      if (!S.leq(a, e) || !S.leq(e, b)) continue;
      if (!E.central[E.pos[e]])
        return CheckResult::failure("interval idempotent " + std::to_string(e) +
                                    " of step (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") not central");
      if (!G.nilpotent_step(a, e) || !G.nilpotent_step(e, b))
        return CheckResult::failure("inserting " + std::to_string(e) + " into step (" +
                                    std::to_string(a) + "," + std::to_string(b) +
                                    ") breaks the series");
    }
  }
  return CheckResult::ok();
}

CheckResult nsl1eq_check(const FiniteInverseMonoid& S, const EContext& E, GContext& G,
                         const UnitGroup& units) {
  if (S.is_trivial()) return CheckResult::skipped("trivial monoid");
  ClassificationReport rep = g_lengths(S, E, G, units);
  bool n1 = rep.g_nilpotent_length == std::optional<int>(1);
  bool s1 = rep.g_solvable_length == std::optional<int>(1);
  bool comm = S.is_commutative();
  if (n1 != s1 || s1 != comm)
    return CheckResult::failure("nil-length-1=" + std::to_string(n1) + " sol-length-1=" +
                                std::to_string(s1) + " commutative=" + std::to_string(comm));
  return CheckResult::ok();
}

namespace {

// maximal subgroup H_e of S as a standalone group
FiniteGroup h_class_group(const FiniteInverseMonoid& S, int e) {
  std::vector<int> members;
  for (int a = 0; a < S.size(); ++a)
    if (S.mul(a, S.inv(a)) == e && S.mul(S.inv(a), a) == e) members.push_back(a);
  const int m = static_cast<int>(members.size());
  std::vector<int> local(S.size(), -1);
  for (int i = 0; i < m; ++i) local[members[i]] = i;
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = S.mul(members[i], members[j]);
      if (local[p] < 0) throw Error("H-class not closed");
      table[i * m + j] = local[p];
    }
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = S.label(members[i]);
  return FiniteGroup::from_table(m, std::move(table), std::move(labels));
}

}  // namespace

CheckResult gnilu_check(const FiniteInverseMonoid& S, const EContext& E, GContext& G,
                        const UnitGroup& units) {
  ClassificationReport rep = g_lengths(S, E, G, units);
  if (!rep.g_nilpotent && !rep.g_solvable)
    return CheckResult::skipped("neither G-nilpotent nor G-solvable");
  if (rep.g_nilpotent) {
    if (!rep.unit_nilpotency_class || *rep.unit_nilpotency_class > *rep.g_nilpotent_length)
      return CheckResult::failure("unit group class exceeds G-nilpotent length");
    for (int e : E.idems) {
      auto cls = nilpotency_class(h_class_group(S, e));
      if (!cls || *cls > *rep.g_nilpotent_length)
        return CheckResult::failure("H-class of " + std::to_string(e) +
                                    " exceeds class bound " +
                                    std::to_string(*rep.g_nilpotent_length));
    }
  }
  if (rep.g_solvable) {
    if (!rep.unit_derived_length || *rep.unit_derived_length > *rep.g_solvable_length)
      return CheckResult::failure("unit group derived length exceeds G-solvable length");
    for (int e : E.idems) {
      auto dl = derived_length(h_class_group(S, e));
      if (!dl || *dl > *rep.g_solvable_length)
        return CheckResult::failure("H-class of " + std::to_string(e) +
                                    " exceeds derived length bound " +
                                    std::to_string(*rep.g_solvable_length));
    }
  }
  return CheckResult::ok();
}

CheckResult fasec_check(const FiniteInverseMonoid& S, const UnitGroup& units) {
  for (int e : S.idempotents()) {
    FiniteGroup he = h_class_group(S, e);
    Subgroup ne;  // normalizer of e inside the unit group
    for (int gi = 0; gi < units.group.order(); ++gi) {
      int gs = units.elems[gi];
      if (S.mul(S.mul(S.inv(gs), e), gs) == e) ne.members.push_back(gi);
    }
    Subgroup th = natural_connection(S, units, e);
    Subgroup ker;
    ker.members = set_intersect(th.members, ne.members);
    if (!is_normal(units.group, ker, ne))
      return CheckResult::failure("e-theta intersect N_e not normal in N_e at idempotent " +
                                  std::to_string(e));
    std::vector<int> to_sub;
    FiniteGroup ne_group = extract_subgroup(units.group, ne, &to_sub);
    Subgroup ker_sub;
    for (int x : ker.members) ker_sub.members.push_back(to_sub[x]);
    std::sort(ker_sub.members.begin(), ker_sub.members.end());
    FiniteGroup quotient = quotient_group(ne_group, ker_sub);
    if (!group_isomorphic(he, quotient))
      return CheckResult::failure("H-class of idempotent " + std::to_string(e) +
                                  " not isomorphic to N_e/(e-theta intersect N_e)");
  }
  return CheckResult::ok();
}

CheckResult niliff_check(const FiniteInverseMonoid& S, const EContext& E, GContext& G,
                         const UnitGroup& units) {
  ClassificationReport rep = g_lengths(S, E, G, units);
  if (!rep.theta_dual_iso) return CheckResult::skipped("theta is not a dual isomorphism");
  const FiniteGroup& U = units.group;
  std::set<std::vector<int>> image_set;
  for (int e : S.idempotents()) image_set.insert(natural_connection(S, units, e).members);
  std::vector<std::vector<int>> nodes;  // image subgroups normal in U
  for (const auto& m : image_set) {
    Subgroup h;
    h.members = m;
    if (is_normal_in_group(U, h)) nodes.push_back(m);
  }
  std::vector<int> full(U.order());
  for (int i = 0; i < U.order(); ++i) full[i] = i;
  std::vector<int> triv{U.identity()};
  auto reaches = [&](bool central_kind) {
    // descending chains full -> triv, successive condition on commutators
    auto cond = [&](const std::vector<int>& a, const std::vector<int>& b) {
      if (!is_subset(b, a) || b == a) return false;
      for (int x : a)
        for (int y : central_kind ? full : a) {
          int c = U.mul(U.mul(U.inv(x), U.inv(y)), U.mul(x, y));
          if (!set_contains(b, c)) return false;
        }
      return true;
    };
    std::vector<char> seen(nodes.size(), 0);
    std::deque<int> queue;
    for (size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i] == full) {
        seen[i] = 1;
        queue.push_back(static_cast<int>(i));
      }
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      if (nodes[i] == triv) return true;
      for (size_t j = 0; j < nodes.size(); ++j)
        if (!seen[j] && cond(nodes[i], nodes[j])) {
          seen[j] = 1;
          queue.push_back(static_cast<int>(j));
        }
    }
    return false;
  };
  bool rhs_nil = rep.unit_nilpotency_class.has_value() && reaches(true);
  bool rhs_sol = rep.unit_derived_length.has_value() && reaches(false);
  if (rep.g_nilpotent != rhs_nil)
    return CheckResult::failure("G-nilpotent=" + std::to_string(rep.g_nilpotent) +
                                " but group-side criterion=" + std::to_string(rhs_nil));
  if (rep.g_solvable != rhs_sol)
    return CheckResult::failure("G-solvable=" + std::to_string(rep.g_solvable) +
                                " but group-side criterion=" + std::to_string(rhs_sol));
  return CheckResult::ok();
}

CheckResult snchr_check(const CosetMonoid& K) {
  EContext E = EContext::build(K.monoid);
  GContext G(K.monoid, E);
  UnitGroup units = group_of_units(K.monoid);
  ClassificationReport rep = g_lengths(K.monoid, E, G, units);
  auto cls = nilpotency_class(K.group());
  auto dl = derived_length(K.group());
  auto show = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("none");
  };
  if (cls != rep.g_nilpotent_length)
    return CheckResult::failure("nilpotency class " + show(cls) + " != G-nilpotent length " +
                                show(rep.g_nilpotent_length));
  if (dl != rep.g_solvable_length)
    return CheckResult::failure("derived length " + show(dl) + " != G-solvable length " +
                                show(rep.g_solvable_length));
  return CheckResult::ok("class=" + show(cls) + " derived=" + show(dl));
}

namespace {

// anti[i][j]: e_i anti-abnormal within the filter of e_j (needs e_j <= e_i).
std::vector<std::vector<char>> anti_abnormal_table(const FiniteInverseMonoid& S,
                                                   const EContext& E) {
  const int k = static_cast<int>(E.idems.size());
  std::vector<std::vector<char>> anti(k, std::vector<char>(k, 0));
  for (int j = 0; j < k; ++j) {
    std::vector<int> count(S.size(), 0);
    for (int a : E.filters[j])
      if (is_pre_idempotent(S, a)) ++count[S.mul(a, S.inv(a))];
    for (int i = 0; i < k; ++i)
      if (E.eleq[j][i]) anti[i][j] = count[E.idems[i]] == 1;
  }
  return anti;
}

}  // namespace

CheckResult aabtrans_check(const FiniteInverseMonoid& S, const EContext& E) {
  const int k = static_cast<int>(E.idems.size());
  auto anti = anti_abnormal_table(S, E);
  long long instances = 0;
  for (int g = 0; g < k; ++g)
    for (int f = 0; f < k; ++f) {
      if (!E.eleq[g][f]) continue;
      for (int e = 0; e < k; ++e) {
        if (!E.eleq[f][e]) continue;
        if (anti[e][f] && anti[f][g]) {
          ++instances;
          if (!anti[e][g])
            return CheckResult::failure(
                "transitivity fails at idempotents e=" + std::to_string(E.idems[e]) +
                " f=" + std::to_string(E.idems[f]) + " g=" + std::to_string(E.idems[g]));
        }
      }
    }
  return CheckResult::ok(std::to_string(instances) + " applicable triples");
}

CheckResult subcanti_check(const FiniteInverseMonoid& S, const EContext& E) {
  auto anti = anti_abnormal_table(S, E);
  auto defects = all_defects(S, E);
  int zero_pos = E.pos[S.zero()];
  for (size_t i = 0; i < E.idems.size(); ++i)
    if (defects[i] && !anti[i][zero_pos])
      return CheckResult::failure("subcentral idempotent " + std::to_string(E.idems[i]) +
                                  " is not anti-abnormal");
  return CheckResult::ok();
}

CheckResult nilsubc_check(const FiniteInverseMonoid& S, const EContext& E, GContext& G,
                          const UnitGroup& units) {
  ClassificationReport rep = g_lengths(S, E, G, units);
  if (!rep.g_nilpotent) return CheckResult::skipped("not G-nilpotent");
  auto defects = all_defects(S, E);
  for (size_t i = 0; i < E.idems.size(); ++i)
    if (!defects[i])
      return CheckResult::failure("idempotent " + std::to_string(E.idems[i]) +
                                  " is not subcentral");
  // the constructive witness chain f_i = e_i * f
  for (int f : E.idems) {
    std::vector<int> chain;
    for (int e : rep.nilpotent_witness) {
      int t = S.mul(e, f);
      if (chain.empty() || chain.back() != t) chain.push_back(t);
    }
    if (chain.back() != f)
      return CheckResult::failure("witness chain for idempotent " + std::to_string(f) +
                                  " does not end at it");
    SeriesCheck c = is_series(S, E, chain, SeriesKind::subcentral);
    if (!c.ok)
      return CheckResult::failure("witness chain for idempotent " + std::to_string(f) +
                                  " invalid: " + c.violation);
  }
  // (ii) every nonzero idempotent is central in some strictly smaller filter
  for (size_t i = 0; i < E.idems.size(); ++i) {
    if (E.idems[i] == S.zero()) continue;
    bool found = false;
    for (size_t e = 0; e < E.idems.size() && !found; ++e)
      if (e != i && E.eleq[e][i] && E.central_in_filter[e][i]) found = true;
    if (!found)
      return CheckResult::failure("no strictly smaller filter makes idempotent " +
                                  std::to_string(E.idems[i]) + " central");
  }
  // (iii) 0-minimal idempotents are central
  int zero_pos = E.pos[S.zero()];
  for (size_t i = 0; i < E.idems.size(); ++i) {
    if (static_cast<int>(i) == zero_pos) continue;
    bool minimal = true;
    for (size_t j = 0; j < E.idems.size() && minimal; ++j)
      if (j != i && static_cast<int>(j) != zero_pos && E.eleq[j][i]) minimal = false;
    if (minimal && !E.central[i])
      return CheckResult::failure("0-minimal idempotent " + std::to_string(E.idems[i]) +
                                  " is not central");
  }
  return CheckResult::ok("parts i-iii; E-reflexivity out of scope");
}

}  // namespace cosetlab
