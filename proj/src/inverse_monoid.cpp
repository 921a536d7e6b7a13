#include "cosetlab/inverse_monoid.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "cosetlab/table_iso.hpp"

namespace cosetlab {

bool FiniteInverseMonoid::is_commutative() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteInverseMonoid FiniteInverseMonoid::validate(int n, std::vector<int> table, int identity,
                                                  int zero, std::vector<std::string> labels) {
  if (n < 1) throw Error("monoid size must be >= 1");
  if (n > kMonoidSizeCap)
    throw Error("monoid size " + std::to_string(n) + " exceeds hard cap " +
                std::to_string(kMonoidSizeCap));
  if (static_cast<int>(table.size()) != n * n) throw Error("monoid table is not square");
  for (int i = 0; i < n * n; ++i)
    if (table[i] < 0 || table[i] >= n)
      throw Error("monoid table entry out of range at flat index " + std::to_string(i));
  if (identity < 0 || identity >= n || zero < 0 || zero >= n)
    throw Error("identity/zero index out of range");

  FiniteInverseMonoid S;
  S.n_ = n;
  S.mul_ = std::move(table);
  S.id_ = identity;
  S.zero_ = zero;

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (S.mul(S.mul(a, b), c) != S.mul(a, S.mul(b, c)))
          throw Error("associativity fails at triple (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")");
  for (int a = 0; a < n; ++a) {
    if (S.mul(identity, a) != a || S.mul(a, identity) != a)
      throw Error("identity law fails at element " + std::to_string(a));
    if (S.mul(zero, a) != zero || S.mul(a, zero) != zero)
      throw Error("zero law fails at element " + std::to_string(a));
  }
  S.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (S.mul(S.mul(a, b), a) == a && S.mul(S.mul(b, a), b) == b) {
        if (S.inv_[a] >= 0)
          throw Error("inverse not unique for element " + std::to_string(a) + ": both " +
                      std::to_string(S.inv_[a]) + " and " + std::to_string(b));
        S.inv_[a] = b;
      }
    if (S.inv_[a] < 0) throw Error("element " + std::to_string(a) + " has no inverse");
  }
  S.is_idem_.assign(n, false);
  for (int a = 0; a < n; ++a)
    if (S.mul(a, a) == a) {
      S.is_idem_[a] = true;
      S.idems_.push_back(a);
    }
  for (int e : S.idems_)
    for (int f : S.idems_)
      if (S.mul(e, f) != S.mul(f, e))
        throw Error("idempotents " + std::to_string(e) + " and " + std::to_string(f) +
                    " do not commute");
  S.leq_.assign(static_cast<size_t>(n) * n, false);
  for (int a = 0; a < n; ++a) {
    int ea = S.mul(a, S.inv_[a]);
    for (int b = 0; b < n; ++b) S.leq_[a * n + b] = S.mul(ea, b) == a;
  }
  if (labels.empty()) {
    labels.resize(n);
    for (int a = 0; a < n; ++a) labels[a] = "m" + std::to_string(a);
  }
  if (static_cast<int>(labels.size()) != n) throw Error("label count mismatch");
  S.labels_ = std::move(labels);
  return S;
}

FiniteInverseMonoid parse_imonoid(const std::string& text) {
  std::istringstream in(text);
  std::string kw;
  if (!(in >> kw) || kw != "imonoid") throw Error("imonoid parse: expected 'imonoid'");
  int n = 0;
  if (!(in >> n) || n < 1) throw Error("imonoid parse: bad size");
  auto field = [&](const std::string& name) {
    std::string tok;
    if (!(in >> tok) || tok.rfind(name + "=", 0) != 0)
      throw Error("imonoid parse: expected '" + name + "='");
    return std::stoi(tok.substr(name.size() + 1));
  };
  int identity = field("identity");
  int zero = field("zero");
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n * n; ++i)
    if (!(in >> table[i])) throw Error("imonoid parse: table ended early");
  return FiniteInverseMonoid::validate(n, std::move(table), identity, zero);
}

std::string emit_imonoid(const FiniteInverseMonoid& S) {
  std::ostringstream out;
  out << "imonoid " << S.size() << " identity=" << S.identity() << " zero=" << S.zero() << "\n";
  for (int a = 0; a < S.size(); ++a) {
    for (int b = 0; b < S.size(); ++b) {
      if (b) out << " ";
      out << S.mul(a, b);
    }
    out << "\n";
  }
  return out.str();
}

View filter_up(const FiniteInverseMonoid& S, int a) {
  if (!S.is_idempotent(a))
    throw Error("filter_up requires an idempotent, got element " + std::to_string(a));
  View v;
  v.identity = S.identity();
  for (int s = 0; s < S.size(); ++s)
    if (S.leq(a, s)) v.members.push_back(s);
  return v;
}

std::vector<int> centre(const FiniteInverseMonoid& S) {
  std::vector<int> out;
  for (int c = 0; c < S.size(); ++c) {
    bool central = true;
    for (int s = 0; s < S.size() && central; ++s)
      if (S.mul(c, s) != S.mul(s, c)) central = false;
    if (central) out.push_back(c);
  }
  return out;
}

bool is_central_in(const FiniteInverseMonoid& S, int c, const View& view) {
  if (!set_contains(view.members, c)) return false;
  for (int s : view.members)
    if (S.mul(c, s) != S.mul(s, c)) return false;
  return true;
}

GreenClasses green_classes(const FiniteInverseMonoid& S) {
  const int n = S.size();
  auto classify = [&](bool right) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> cls(n);
    for (int a = 0; a < n; ++a) {
      std::vector<int> ideal;
      ideal.reserve(n);
      for (int s = 0; s < n; ++s) ideal.push_back(right ? S.mul(a, s) : S.mul(s, a));
      ideal = sorted_unique(std::move(ideal));
      auto [it, fresh] = ids.emplace(std::move(ideal), static_cast<int>(ids.size()));
      (void)fresh;
      cls[a] = it->second;
    }
    return cls;
  };
  GreenClasses g;
  g.r = classify(true);
  g.l = classify(false);
  // H = R meet L
  std::map<std::pair<int, int>, int> hids;
  g.h.resize(n);
  for (int a = 0; a < n; ++a) {
    auto [it, fresh] = hids.emplace(std::make_pair(g.r[a], g.l[a]), static_cast<int>(hids.size()));
    (void)fresh;
    g.h[a] = it->second;
  }
  // D = join of R and L (union-find over elements)
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<int, int> r_first, l_first;
  for (int a = 0; a < n; ++a) {
    if (auto [it, fresh] = r_first.emplace(g.r[a], a); !fresh) parent[root(a)] = root(it->second);
    if (auto [it, fresh] = l_first.emplace(g.l[a], a); !fresh) parent[root(a)] = root(it->second);
  }
  std::map<int, int> dids;
  g.d.resize(n);
  for (int a = 0; a < n; ++a) {
    auto [it, fresh] = dids.emplace(root(a), static_cast<int>(dids.size()));
    (void)fresh;
    g.d[a] = it->second;
  }
  auto collect = [&](const std::vector<int>& cls) {
    int k = *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<std::vector<int>> out(k);
    for (int a = 0; a < n; ++a) out[cls[a]].push_back(a);
    return out;
  };
  g.r_classes = collect(g.r);
  g.l_classes = collect(g.l);
  g.h_classes = collect(g.h);
  g.d_classes = collect(g.d);
  return g;
}

UnitGroup group_of_units(const FiniteInverseMonoid& S) {
  UnitGroup u;
  u.index_of.assign(S.size(), -1);
  for (int g = 0; g < S.size(); ++g)
    if (S.mul(g, S.inv(g)) == S.identity() && S.mul(S.inv(g), g) == S.identity()) {
      u.index_of[g] = static_cast<int>(u.elems.size());
      u.elems.push_back(g);
    }
  const int m = static_cast<int>(u.elems.size());
  std::vector<int> table(static_cast<size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = S.label(u.elems[i]);
    for (int j = 0; j < m; ++j) {
      int p = S.mul(u.elems[i], u.elems[j]);
      if (u.index_of[p] < 0) throw Error("units not closed under multiplication");
      table[i * m + j] = u.index_of[p];
    }
  }
  u.group = FiniteGroup::from_table(m, std::move(table), std::move(labels));
  return u;
}

bool is_factorizable(const FiniteInverseMonoid& S, const UnitGroup& units) {
  for (int s = 0; s < S.size(); ++s) {
    int e = S.mul(s, S.inv(s));
    bool below_unit = false;
    for (int g : units.elems)
      if (S.mul(e, g) == s) {
        below_unit = true;
        break;
      }
    if (!below_unit) return false;
  }
  return true;
}

Subgroup natural_connection(const FiniteInverseMonoid& S, const UnitGroup& units, int e) {
  if (!S.is_idempotent(e)) throw Error("natural_connection requires an idempotent");
  Subgroup out;
  for (size_t gi = 0; gi < units.elems.size(); ++gi)
    if (S.mul(e, units.elems[gi]) == e) out.members.push_back(static_cast<int>(gi));
  return out;
}

int natural_join(const FiniteInverseMonoid& S, int a, int b) {
  std::vector<int> uppers;
  for (int s = 0; s < S.size(); ++s)
    if (S.leq(a, s) && S.leq(b, s)) uppers.push_back(s);
  for (int u : uppers) {
    bool least = true;
    for (int v : uppers)
      if (!S.leq(u, v)) {
        least = false;
        break;
      }
    if (least) return u;
  }
  return -1;
}

DualIsoReport is_dual_isomorphism(const FiniteInverseMonoid& S, const UnitGroup& units) {
  DualIsoReport rep;
  auto fail = [&](std::string w) {
    rep.ok = false;
    rep.witness = std::move(w);
    return rep;
  };
  const auto& E = S.idempotents();
  std::vector<std::vector<int>> theta(E.size());
  std::map<std::vector<int>, int> image;  // member set -> idempotent position
  for (size_t i = 0; i < E.size(); ++i) {
    theta[i] = natural_connection(S, units, E[i]).members;
    auto [it, fresh] = image.emplace(theta[i], static_cast<int>(i));
    if (!fresh)
      return fail("theta not injective: idempotents " + std::to_string(E[it->second]) + " and " +
                  std::to_string(E[i]) + " have the same image");
  }
  for (size_t i = 0; i < E.size(); ++i)
    for (size_t j = 0; j < E.size(); ++j) {
      bool le = S.leq(E[i], E[j]);
      bool rev = is_subset(theta[j], theta[i]);
      if (le != rev)
        return fail("theta not order-reversing at idempotents " + std::to_string(E[i]) + "," +
                    std::to_string(E[j]));
    }
  for (size_t i = 0; i < E.size(); ++i)
    for (size_t j = i; j < E.size(); ++j) {
      auto gen = subgroup_generate(units.group, set_union(theta[i], theta[j])).members;
      if (!image.count(gen))
        return fail("image not closed under generated subgroup at idempotents " +
                    std::to_string(E[i]) + "," + std::to_string(E[j]));
      int prod = S.mul(E[i], E[j]);
      int ppos = static_cast<int>(std::lower_bound(E.begin(), E.end(), prod) - E.begin());
      if (theta[ppos] != gen)
        return fail("(ef)theta != <e theta, f theta> at idempotents " + std::to_string(E[i]) +
                    "," + std::to_string(E[j]));
      auto inter = set_intersect(theta[i], theta[j]);
      if (!image.count(inter))
        return fail("image not closed under intersection at idempotents " + std::to_string(E[i]) +
                    "," + std::to_string(E[j]));
      int join = natural_join(S, E[i], E[j]);
      if (join >= 0) {
        if (!S.is_idempotent(join))
          return fail("join of idempotents " + std::to_string(E[i]) + "," + std::to_string(E[j]) +
                      " is not idempotent");
        int jpos = static_cast<int>(std::lower_bound(E.begin(), E.end(), join) - E.begin());
        if (theta[jpos] != inter)
          return fail("(e v f)theta != e theta intersect f theta at idempotents " +
                      std::to_string(E[i]) + "," + std::to_string(E[j]));
      }
    }
  return rep;
}

FactorView factor_submonoid(const FiniteInverseMonoid& S, int e, int f) {
  if (!S.is_idempotent(e) || !S.is_idempotent(f))
    throw Error("factor_submonoid requires idempotents");
  if (!S.leq(e, f)) throw Error("factor_submonoid requires e <= f");
  View filt = filter_up(S, e);
  if (!is_central_in(S, f, filt))
    throw Error("factor_submonoid: " + std::to_string(f) + " is not central in the filter of " +
                std::to_string(e));
  FactorView out;
  out.view.identity = f;
  std::vector<int> members;
  members.reserve(filt.members.size());
  for (int a : filt.members) members.push_back(S.mul(f, a));
  out.view.members = sorted_unique(std::move(members));
  for (int x : out.view.members)
    if (S.mul(x, S.inv(x)) == f && S.mul(S.inv(x), x) == f) out.units.push_back(x);
  return out;
}

PhiMap phi_homomorphism(const FiniteInverseMonoid& S, int e, int f) {
  if (!S.is_idempotent(e) || !S.is_idempotent(f))
    throw Error("phi_homomorphism requires idempotents");
  View filt = filter_up(S, e);
  if (!is_central_in(S, f, filt))
    throw Error("phi_homomorphism: " + std::to_string(f) + " is not central in the filter of " +
                std::to_string(e));
  PhiMap out;
  out.domain = filt.members;
  out.image_of.reserve(out.domain.size());
  for (int a : out.domain) out.image_of.push_back(S.mul(f, a));
  return out;
}

FiniteInverseMonoid materialize(const FiniteInverseMonoid& S, const View& view,
                                std::vector<int>* index_map) {
  const int m = static_cast<int>(view.members.size());
  std::vector<int> local(S.size(), -1);
  for (int i = 0; i < m; ++i) local[view.members[i]] = i;
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = S.mul(view.members[i], view.members[j]);
      if (local[p] < 0)
        throw Error("materialize: view not closed under multiplication (" +
                    std::to_string(view.members[i]) + "*" + std::to_string(view.members[j]) + ")");
      table[i * m + j] = local[p];
    }
  for (int i = 0; i < m; ++i)
    if (local[S.inv(view.members[i])] < 0) throw Error("materialize: view not closed under inverse");
  if (local[view.identity] < 0) throw Error("materialize: identity not in view");
  int zero = -1;
  for (int i = 0; i < m && zero < 0; ++i) {
    bool absorbs = true;
    for (int j = 0; j < m && absorbs; ++j)
      if (table[i * m + j] != i || table[j * m + i] != i) absorbs = false;
    if (absorbs) zero = i;
  }
  if (zero < 0) throw Error("materialize: view has no zero element");
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = S.label(view.members[i]);
  if (index_map) *index_map = local;
  return FiniteInverseMonoid::validate(m, std::move(table), local[view.identity], zero,
                                       std::move(labels));
}

std::optional<std::vector<int>> monoid_isomorphic(const FiniteInverseMonoid& S,
                                                  const FiniteInverseMonoid& T, int cap) {
  if (S.size() > cap || T.size() > cap)
    throw Error("monoid_isomorphic: size exceeds cap " + std::to_string(cap));
  if (S.size() != T.size()) return std::nullopt;
  if (fingerprint(S) != fingerprint(T)) return std::nullopt;
  return tables_isomorphic(S.size(), S.table(), T.size(), T.table());
}

bool is_pre_idempotent(const FiniteInverseMonoid& S, int a) {
  return S.leq(S.mul(a, a), a);
}

bool is_anti_abnormal(const FiniteInverseMonoid& S, int e, const View& view) {
  if (!S.is_idempotent(e) || !set_contains(view.members, e))
    throw Error("is_anti_abnormal: e must be an idempotent member of the view");
  // R-class within an inverse subsemigroup: a R e iff a a^-1 = e
  int count = 0;
  for (int a : view.members)
    if (S.mul(a, S.inv(a)) == e && is_pre_idempotent(S, a)) ++count;
  return count == 1;
}

FiniteInverseMonoid direct_product(const FiniteInverseMonoid& A, const FiniteInverseMonoid& B) {
  const int n = A.size() * B.size();
  if (n > kMonoidSizeCap) throw Error("direct_product exceeds monoid size cap");
  auto enc = [&](int a, int b) { return a * B.size() + b; };
  std::vector<int> table(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < B.size(); ++b) {
      labels[enc(a, b)] = "(" + A.label(a) + "," + B.label(b) + ")";
      for (int c = 0; c < A.size(); ++c)
        for (int d = 0; d < B.size(); ++d)
          table[enc(a, b) * n + enc(c, d)] = enc(A.mul(a, c), B.mul(b, d));
    }
  return FiniteInverseMonoid::validate(n, std::move(table), enc(A.identity(), B.identity()),
                                       enc(A.zero(), B.zero()), std::move(labels));
}

FiniteInverseMonoid symmetric_inverse_monoid(int points) {
  if (points < 1 || points > 4) throw Error("symmetric_inverse_monoid supports 1..4 points");
  // partial bijection = image vector with -1 for undefined
  std::vector<std::vector<int>> elems;
  std::vector<int> cur(points, -1);
  std::function<void(int, unsigned)> gen = [&](int i, unsigned used) {
    if (i == points) {
      elems.push_back(cur);
      return;
    }
    cur[i] = -1;
    gen(i + 1, used);
    for (int v = 0; v < points; ++v)
      if (!(used & (1u << v))) {
        cur[i] = v;
        gen(i + 1, used | (1u << v));
      }
    cur[i] = -1;
  };
  gen(0, 0);
  std::sort(elems.begin(), elems.end());
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elems.size());
  auto compose = [&](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> out(points, -1);
    for (int x = 0; x < points; ++x)
      if (p[x] >= 0) out[x] = q[p[x]];
    return out;
  };
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i * n + j] = index.at(compose(elems[i], elems[j]));
  std::vector<int> id(points), empty(points, -1);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    std::string l = "[";
    for (int x = 0; x < points; ++x) {
      if (x) l += " ";
      l += elems[i][x] < 0 ? "-" : std::to_string(elems[i][x] + 1);
    }
    labels[i] = l + "]";
  }
  return FiniteInverseMonoid::validate(n, std::move(table), index.at(id), index.at(empty),
                                       std::move(labels));
}

QuotientTable quotient_table(const FiniteInverseMonoid& S, const std::vector<int>& members,
                             const std::function<bool(int, int)>& related) {
  const int m = static_cast<int>(members.size());
  QuotientTable q;
  q.class_of.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    if (q.class_of[i] >= 0) continue;
    int cls = q.n++;
    q.rep_of_class.push_back(members[i]);
    for (int j = i; j < m; ++j)
      if (q.class_of[j] < 0 && related(members[i], members[j])) q.class_of[j] = cls;
  }
  std::vector<int> local(S.size(), -1);
  for (int i = 0; i < m; ++i) local[members[i]] = i;
  q.table.assign(static_cast<size_t>(q.n) * q.n, -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = S.mul(members[i], members[j]);
      if (local[p] < 0)
        throw Error("quotient_table: member set not closed under multiplication");
      int cls = q.class_of[local[p]];
      int& slot = q.table[q.class_of[i] * q.n + q.class_of[j]];
      if (slot < 0)
        slot = cls;
      else if (slot != cls)
        throw Error("quotient_table: relation is not a congruence (witness " +
                    std::to_string(members[i]) + "," + std::to_string(members[j]) + ")");
    }
  return q;
}

EContext EContext::build(const FiniteInverseMonoid& S) {
  EContext E;
  E.idems = S.idempotents();
  const int k = static_cast<int>(E.idems.size());
  E.pos.assign(S.size(), -1);
  for (int i = 0; i < k; ++i) E.pos[E.idems[i]] = i;
  E.filters.resize(k);
  for (int i = 0; i < k; ++i) E.filters[i] = filter_up(S, E.idems[i]).members;
  E.eleq.assign(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) E.eleq[i][j] = S.leq(E.idems[i], E.idems[j]);
  E.central_in_filter.assign(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!E.eleq[i][j]) continue;
      bool central = true;
      for (int s : E.filters[i])
        if (S.mul(E.idems[j], s) != S.mul(s, E.idems[j])) {
          central = false;
          break;
        }
      E.central_in_filter[i][j] = central;
    }
  E.central.assign(k, 0);
  int zero_pos = E.pos[S.zero()];
  for (int j = 0; j < k; ++j) E.central[j] = E.central_in_filter[zero_pos][j];
  E.join.assign(k, std::vector<int>(k, -1));
  E.meet.assign(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int jn = natural_join(S, E.idems[i], E.idems[j]);
      if (jn >= 0 && E.pos[jn] < 0)
        throw Error("join of idempotents is not idempotent (witness " +
                    std::to_string(E.idems[i]) + "," + std::to_string(E.idems[j]) + ")");
      E.join[i][j] = jn < 0 ? -1 : E.pos[jn];
      E.meet[i][j] = E.pos[S.mul(E.idems[i], E.idems[j])];
    }
  return E;
}

Fingerprint fingerprint(const FiniteInverseMonoid& S) {
  Fingerprint fp;
  fp.size = S.size();
  fp.idem_count = static_cast<int>(S.idempotents().size());
  GreenClasses g = green_classes(S);
  for (const auto* classes : {&g.r_classes, &g.l_classes, &g.h_classes, &g.d_classes}) {
    std::vector<int> sizes;
    for (const auto& c : *classes) sizes.push_back(static_cast<int>(c.size()));
    std::sort(sizes.begin(), sizes.end());
    fp.green_profile.insert(fp.green_profile.end(), sizes.begin(), sizes.end());
    fp.green_profile.push_back(-1);  // separator
  }
  UnitGroup u = group_of_units(S);
  fp.unit_count = u.group.order();
  for (int i = 0; i < u.group.order(); ++i)
    fp.unit_order_profile.push_back(u.group.element_order(i));
  std::sort(fp.unit_order_profile.begin(), fp.unit_order_profile.end());
  std::vector<int> rsize(S.size()), lsize(S.size());
  for (int a = 0; a < S.size(); ++a) {
    rsize[a] = static_cast<int>(g.r_classes[g.r[a]].size());
    lsize[a] = static_cast<int>(g.l_classes[g.l[a]].size());
  }
  for (int a = 0; a < S.size(); ++a)
    fp.degree_profile.emplace_back(rsize[S.mul(a, S.inv(a))], lsize[S.mul(S.inv(a), a)]);
  std::sort(fp.degree_profile.begin(), fp.degree_profile.end());
  return fp;
}

std::string idempotent_order_dot(const FiniteInverseMonoid& S) {
  const auto& E = S.idempotents();
  std::vector<int> cent = centre(S);
  std::ostringstream out;
  out << "// idempotent natural order; permutations compose left-to-right\n";
  out << "digraph idempotents {\n  rankdir=BT;\n";
  for (size_t i = 0; i < E.size(); ++i)
    out << "  e" << E[i] << " [label=\"e" << E[i] << "\" shape="
        << (set_contains(cent, E[i]) ? "box" : "ellipse") << "];\n";
  for (size_t i = 0; i < E.size(); ++i)
    for (size_t j = 0; j < E.size(); ++j) {
      if (i == j || !S.leq(E[i], E[j])) continue;
      bool cover = true;
      for (size_t k = 0; k < E.size() && cover; ++k)
        if (k != i && k != j && S.leq(E[i], E[k]) && S.leq(E[k], E[j])) cover = false;
      if (cover) out << "  e" << E[i] << " -> e" << E[j] << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace cosetlab
