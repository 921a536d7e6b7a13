#include "cosetlab/conjectures.hpp"

#include <functional>

namespace cosetlab {

const char* to_string(GVariant v) { return v == GVariant::nilpotent ? "nilpotent" : "solvable"; }

const ClassificationReport& FilterClassifier::classify(int e) {
  auto it = memo_.find(e);
  if (it != memo_.end()) return it->second;
  FiniteInverseMonoid filt = materialize(S_, filter_up(S_, e));
  EContext E = EContext::build(filt);
  GContext G(filt, E);
  UnitGroup units = group_of_units(filt);
  return memo_.emplace(e, g_lengths(filt, E, G, units)).first->second;
}

int idempotent_product(const FiniteInverseMonoid& S, const std::vector<int>& idems) {
  if (idems.empty()) return S.identity();
  int acc = idems[0];
  for (size_t i = 1; i < idems.size(); ++i) acc = S.mul(acc, idems[i]);
  return acc;
}

namespace {

std::vector<int> central_idempotents(const EContext& E) {
  std::vector<int> out;
  for (size_t i = 0; i < E.idems.size(); ++i)
    if (E.central[i]) out.push_back(E.idems[i]);
  return out;
}

std::vector<int> conjugated_filter(const FiniteInverseMonoid& S, const std::vector<int>& filt,
                                   int g) {
  std::vector<int> out;
  out.reserve(filt.size());
  for (int x : filt) out.push_back(S.mul(S.mul(S.inv(g), x), g));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Problem1Result probe_problem1(const CosetMonoid& K) {
  const FiniteInverseMonoid& S = K.monoid;
  Problem1Result out;
  EContext E = EContext::build(S);
  std::vector<int> ec = central_idempotents(E);
  if (ec.size() != 2) {
    out.skipped = true;
    out.skip_reason = ec.size() < 2 ? "trivial group" : "group not simple: E_c has " +
                                                            std::to_string(ec.size()) +
                                                            " central idempotents";
    return out;
  }
  FilterClassifier fc(S);
  UnitGroup units = group_of_units(S);
  for (int e : S.idempotents()) {
    if (!fc.classify(e).g_nilpotent) continue;
    Problem1Result::Instance inst;
    inst.e = e;
    std::vector<int> filt = filter_up(S, e).members;
    for (int g : units.elems) {
      ++out.examined;
      auto inter = set_intersect(filt, conjugated_filter(S, filt, g));
      if (inter == std::vector<int>{S.identity()}) {
        inst.found = true;
        inst.g = g;
        break;
      }
    }
    out.instances.push_back(inst);
  }
  return out;
}

bool replay_problem1(const CosetMonoid& K, const Problem1Result::Instance& inst) {
  const FiniteInverseMonoid& S = K.monoid;
  if (!inst.found) return true;  // negative instances replay via re-running the probe
  std::vector<int> filt = filter_up(S, inst.e).members;
  return set_intersect(filt, conjugated_filter(S, filt, inst.g)) ==
         std::vector<int>{S.identity()};
}

Problem3Result probe_problem3(const CosetMonoid& K, int k, long long max_tuples) {
  const FiniteInverseMonoid& S = K.monoid;
  Problem3Result out;
  out.k = k;
  EContext E = EContext::build(S);
  FilterClassifier fc(S);
  for (int f : central_idempotents(E)) {
    if (f == S.identity()) continue;
    if (fc.classify(f).g_solvable) {
      out.skipped = true;
      out.skip_reason = "central idempotent " + std::to_string(f) + " has a G-solvable filter";
      return out;
    }
  }
  UnitGroup units = group_of_units(S);
  for (int e : S.idempotents()) {
    if (!fc.classify(e).g_solvable) continue;
    Problem3Result::Instance inst;
    inst.e = e;
    std::vector<int> filt = filter_up(S, e).members;
    std::vector<int> tuple;
    std::function<bool(const std::vector<int>&)> search = [&](const std::vector<int>& inter) {
      if (static_cast<int>(tuple.size()) == k) {
        ++out.examined;
        if (out.examined > max_tuples) {
          out.truncated = true;
          return false;
        }
        return inter == std::vector<int>{S.identity()};
      }
      if (inter == std::vector<int>{S.identity()}) {
        // already trivial; pad with the identity unit
        while (static_cast<int>(tuple.size()) < k) tuple.push_back(S.identity());
        ++out.examined;
        return true;
      }
      for (int g : units.elems) {
        if (out.truncated) return false;
        tuple.push_back(g);
        if (search(set_intersect(inter, conjugated_filter(S, filt, g)))) return true;
        tuple.pop_back();
      }
      return false;
    };
    inst.found = search(filt) && !out.truncated;
    if (inst.found) inst.tuple = tuple;
    out.instances.push_back(inst);
    if (out.truncated) break;
  }
  return out;
}

bool replay_problem3(const CosetMonoid& K, int k, const Problem3Result::Instance& inst) {
  const FiniteInverseMonoid& S = K.monoid;
  if (!inst.found) return true;
  if (static_cast<int>(inst.tuple.size()) != k) return false;
  std::vector<int> filt = filter_up(S, inst.e).members;
  std::vector<int> inter = filt;
  for (int g : inst.tuple) inter = set_intersect(inter, conjugated_filter(S, filt, g));
  return inter == std::vector<int>{S.identity()};
}

namespace {

std::vector<int> primitive_idempotents(const FiniteInverseMonoid& S, const EContext& E) {
  std::vector<int> out;
  int zero_pos = E.pos[S.zero()];
  for (size_t i = 0; i < E.idems.size(); ++i) {
    if (static_cast<int>(i) == zero_pos) continue;
    bool covers_zero = true;
    for (size_t j = 0; j < E.idems.size() && covers_zero; ++j)
      if (j != i && static_cast<int>(j) != zero_pos && E.eleq[j][i]) covers_zero = false;
    if (covers_zero) out.push_back(E.idems[i]);
  }
  return out;
}

}  // namespace

Problem4aResult probe_problem4a(const CosetMonoid& K) {
  const FiniteInverseMonoid& S = K.monoid;
  Problem4aResult out;
  EContext E = EContext::build(S);
  GContext G(S, E);
  UnitGroup units = group_of_units(S);
  ClassificationReport rep = g_lengths(S, E, G, units);
  if (!rep.g_solvable) {
    out.skipped = true;
    out.skip_reason = "monoid is not G-solvable";
    return out;
  }
  out.ds_s = *rep.g_solvable_length;
  FilterClassifier fc(S);
  for (int e : primitive_idempotents(S, E)) {
    const ClassificationReport& fr = fc.classify(e);
    if (!fr.g_solvable)
      throw Error("filter of primitive idempotent " + std::to_string(e) +
                  " unexpectedly not G-solvable");
    Problem4aResult::Instance inst;
    inst.e = e;
    inst.ds_filter = *fr.g_solvable_length;
    inst.diff = out.ds_s - inst.ds_filter;
    out.max_diff = std::max(out.max_diff, inst.diff);
    out.instances.push_back(inst);
  }
  return out;
}

bool replay_problem4a(const CosetMonoid& K, const Problem4aResult::Instance& inst) {
  const FiniteInverseMonoid& S = K.monoid;
  FilterClassifier fc(S);
  const ClassificationReport& fr = fc.classify(inst.e);
  if (!fr.g_solvable || *fr.g_solvable_length != inst.ds_filter) return false;
  EContext E = EContext::build(S);
  GContext G(S, E);
  UnitGroup units = group_of_units(S);
  ClassificationReport rep = g_lengths(S, E, G, units);
  return rep.g_solvable && inst.diff == *rep.g_solvable_length - inst.ds_filter;
}

Problem6Result probe_problem6(const CosetMonoid& K, int e, int f, int h, GVariant v) {
  const FiniteInverseMonoid& S = K.monoid;
  Problem6Result out;
  out.variant = v;
  out.e = e;
  out.f = f;
  out.h = h;
  FilterClassifier fc(S);
  auto good = [&](int x) {
    const ClassificationReport& r = fc.classify(x);
    return v == GVariant::nilpotent ? r.g_nilpotent : r.g_solvable;
  };
  for (int x : {e, f, h})
    if (!S.is_idempotent(x) || !good(x)) {
      out.skipped = true;
      out.skip_reason = "filter of " + std::to_string(x) + " is not G-" +
                        std::string(to_string(v));
      return out;
    }
  EContext E = EContext::build(S);
  GreenClasses green = green_classes(S);
  UnitGroup units = group_of_units(S);
  auto d_idems = [&](int x) {
    std::vector<int> out_set;
    for (int y : S.idempotents())
      if (green.d[y] == green.d[x]) out_set.push_back(y);
    return out_set;
  };
  std::vector<int> m_set;
  for (int f2 : d_idems(f))
    for (int h2 : d_idems(h)) {
      int j1 = natural_join(S, f2, h2);
      if (j1 < 0) throw Error("problem 6: missing join");
      int j2 = natural_join(S, e, j1);
      if (j2 < 0) throw Error("problem 6: missing join");
      m_set.push_back(j2);
    }
  out.m_set = sorted_unique(std::move(m_set));

  std::vector<int> maximal;
  for (int x : out.m_set) {
    bool is_max = true;
    for (int y : out.m_set)
      if (y != x && S.leq(x, y)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(x);
  }
  out.product_of_maximal = idempotent_product(S, maximal);

  int m = -1;
  std::vector<int> theta_sizes;
  for (int x : out.m_set) {
    int sz = static_cast<int>(natural_connection(S, units, x).members.size());
    theta_sizes.push_back(sz);
    if (m < 0 || sz < m) m = sz;
  }
  out.min_theta_order = m;
  std::vector<int> minimal_theta;
  for (size_t i = 0; i < out.m_set.size(); ++i)
    if (theta_sizes[i] == m) minimal_theta.push_back(out.m_set[i]);
  out.product_of_min_theta = idempotent_product(S, minimal_theta);

  auto find_c = [&](int bound, bool* found, int* c_out) {
    for (size_t i = 0; i < E.idems.size(); ++i) {
      int c = E.idems[i];
      if (!E.central[i] || !S.leq(c, bound)) continue;
      if (good(c)) {
        *found = true;
        *c_out = c;
        return;
      }
    }
  };
  find_c(out.product_of_min_theta, &out.found_c_for_min, &out.c_min);
  find_c(out.product_of_maximal, &out.found_c_for_max, &out.c_max);
  return out;
}

std::vector<Problem6Result> probe_problem6_all(const CosetMonoid& K, GVariant v) {
  std::vector<Problem6Result> out;
  const auto& idems = K.monoid.idempotents();
  for (int e : idems)
    for (int f : idems)
      for (int h : idems) out.push_back(probe_problem6(K, e, f, h, v));
  return out;
}

bool replay_problem6(const CosetMonoid& K, const Problem6Result& r) {
  Problem6Result again = probe_problem6(K, r.e, r.f, r.h, r.variant);
  if (again.skipped != r.skipped) return false;
  if (r.skipped) return true;
  if (again.m_set != r.m_set || again.product_of_maximal != r.product_of_maximal ||
      again.min_theta_order != r.min_theta_order ||
      again.product_of_min_theta != r.product_of_min_theta)
    return false;
  const FiniteInverseMonoid& S = K.monoid;
  FilterClassifier fc(S);
  auto good = [&](int x) {
    const ClassificationReport& rep = fc.classify(x);
    return r.variant == GVariant::nilpotent ? rep.g_nilpotent : rep.g_solvable;
  };
  std::vector<int> cent = centre(S);
  if (r.found_c_for_min &&
      !(set_contains(cent, r.c_min) && S.leq(r.c_min, r.product_of_min_theta) && good(r.c_min)))
    return false;
  if (r.found_c_for_max &&
      !(set_contains(cent, r.c_max) && S.leq(r.c_max, r.product_of_maximal) && good(r.c_max)))
    return false;
  return again.found_c_for_min == r.found_c_for_min &&
         again.found_c_for_max == r.found_c_for_max;
}

}  // namespace cosetlab
