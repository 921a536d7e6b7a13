#include "cosetlab/group.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "cosetlab/table_iso.hpp"

namespace cosetlab {

int cap_order() {
  static int cap = [] {
    if (const char* env = std::getenv("COSETLAB_CAP_ORDER")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end == env || *end != '\0' || v < 1)
        throw Error("COSETLAB_CAP_ORDER must be a positive integer, got '" + std::string(env) + "'");
      return static_cast<int>(v);
    }
    return 64;
  }();
  return cap;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

Perm perm_inverse(const Perm& a) {
  Perm out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<int>(i);
  return out;
}

std::string cycle_notation(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

void FiniteGroup::validate() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      int v = mul_[a * n_ + b];
      if (v < 0 || v >= n_)
        throw Error("group table entry out of range at (" + std::to_string(a) + "," +
                    std::to_string(b) + ")");
    }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw Error("non-group table: associativity fails at triple (" + std::to_string(a) +
                      "," + std::to_string(b) + "," + std::to_string(c) + ")");
  for (int a = 0; a < n_; ++a)
    if (mul(id_, a) != a || mul(a, id_) != a)
      throw Error("non-group table: identity law fails at element " + std::to_string(a));
  for (int a = 0; a < n_; ++a)
    if (mul(a, inv_[a]) != id_ || mul(inv_[a], a) != id_)
      throw Error("non-group table: inverse fails at element " + std::to_string(a));
}

FiniteGroup FiniteGroup::from_permutations(int degree, const std::vector<Perm>& gens) {
  if (degree < 1) throw Error("permutation degree must be >= 1");
  for (const Perm& g : gens) {
    if (static_cast<int>(g.size()) != degree) throw Error("generator degree mismatch");
    std::vector<bool> hit(degree, false);
    for (int x : g) {
      if (x < 0 || x >= degree || hit[x]) throw Error("generator is not a permutation");
      hit[x] = true;
    }
  }
  Perm id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  std::set<Perm> seen{id};
  std::vector<Perm> todo{id};
  while (!todo.empty()) {
    Perm cur = todo.back();
    todo.pop_back();
    for (const Perm& g : gens) {
      Perm prod = perm_compose(cur, g);
      if (seen.insert(prod).second) {
        if (static_cast<int>(seen.size()) > cap_order())
          throw Error("group order exceeds cap " + std::to_string(cap_order()) +
                      " (set COSETLAB_CAP_ORDER to override)");
        todo.push_back(prod);
      }
    }
  }
  FiniteGroup G;
  G.n_ = static_cast<int>(seen.size());
  G.perms_.assign(seen.begin(), seen.end());  // lexicographic; identity first
  std::map<Perm, int> index;
  for (int i = 0; i < G.n_; ++i) index[G.perms_[i]] = i;
  G.id_ = index.at(id);
  G.mul_.resize(static_cast<size_t>(G.n_) * G.n_);
  G.inv_.resize(G.n_);
  for (int a = 0; a < G.n_; ++a) {
    G.inv_[a] = index.at(perm_inverse(G.perms_[a]));
    for (int b = 0; b < G.n_; ++b)
      G.mul_[a * G.n_ + b] = index.at(perm_compose(G.perms_[a], G.perms_[b]));
  }
  G.labels_.resize(G.n_);
  for (int a = 0; a < G.n_; ++a) G.labels_[a] = cycle_notation(G.perms_[a]);
  G.backend_ = "permutation-of-degree-" + std::to_string(degree);
  G.validate();
  return G;
}

FiniteGroup FiniteGroup::from_table(int order, std::vector<int> table,
                                    std::vector<std::string> labels) {
  if (order < 1) throw Error("group order must be >= 1");
  if (order > cap_order())
    throw Error("group order " + std::to_string(order) + " exceeds cap " +
                std::to_string(cap_order()) + " (set COSETLAB_CAP_ORDER to override)");
  if (static_cast<int>(table.size()) != order * order) throw Error("group table is not square");
  FiniteGroup G;
  G.n_ = order;
  G.mul_ = std::move(table);
  int id = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a)
      if (G.mul_[e * order + a] != a || G.mul_[a * order + e] != a) ok = false;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw Error("non-group table: no two-sided identity");
  G.id_ = id;
  G.inv_.assign(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b)
      if (G.mul_[a * order + b] == id && G.mul_[b * order + a] == id) {
        G.inv_[a] = b;
        break;
      }
    if (G.inv_[a] < 0)
      throw Error("non-group table: element " + std::to_string(a) + " has no two-sided inverse");
  }
  if (labels.empty()) {
    labels.resize(order);
    for (int a = 0; a < order; ++a) labels[a] = "g" + std::to_string(a);
  }
  if (static_cast<int>(labels.size()) != order) throw Error("label count mismatch");
  G.labels_ = std::move(labels);
  G.backend_ = "cayley-table";
  G.validate();
  return G;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != id_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

Subgroup subgroup_generate(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<bool> in(G.order(), false);
  std::vector<int> todo;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = true;
      todo.push_back(x);
    }
  };
  add(G.identity());
  for (int g : gens) {
    if (g < 0 || g >= G.order()) throw Error("generator index out of range");
    add(g);
  }
  while (!todo.empty()) {
    int x = todo.back();
    todo.pop_back();
    add(G.inv(x));
    for (int a = 0; a < G.order(); ++a)
      if (in[a]) {
        add(G.mul(x, a));
        add(G.mul(a, x));
      }
  }
  Subgroup H;
  for (int a = 0; a < G.order(); ++a)
    if (in[a]) H.members.push_back(a);
  return H;
}

Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& H, int g) {
  Subgroup out;
  out.members.reserve(H.members.size());
  for (int h : H.members) out.members.push_back(G.conjugate(h, g));
  std::sort(out.members.begin(), out.members.end());
  return out;
}

bool is_normal(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
  if (!is_subset(H.members, K.members))
    throw Error("is_normal contract violation: H is not contained in K");
  for (int k : K.members)
    if (conjugate_subgroup(G, H, k).members != H.members) return false;
  return true;
}

bool is_normal_in_group(const FiniteGroup& G, const Subgroup& H) {
  for (int g = 0; g < G.order(); ++g)
    if (conjugate_subgroup(G, H, g).members != H.members) return false;
  return true;
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H) {
  Subgroup out;
  for (int g = 0; g < G.order(); ++g)
    if (conjugate_subgroup(G, H, g).members == H.members) out.members.push_back(g);
  return out;
}

FiniteGroup quotient_group(const FiniteGroup& G, const Subgroup& N) {
  if (!is_normal_in_group(G, N)) throw Error("quotient_group: subgroup is not normal");
  std::vector<int> coset_rep(G.order(), -1);  // element -> minimal rep of its coset Ng
  std::vector<int> reps;
  for (int g = 0; g < G.order(); ++g) {
    if (coset_rep[g] >= 0) continue;
    std::vector<int> members;
    members.reserve(N.members.size());
    for (int x : N.members) members.push_back(G.mul(x, g));
    std::sort(members.begin(), members.end());
    int rep = members[0];
    for (int m : members) coset_rep[m] = rep;
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end());
  std::map<int, int> index;
  for (size_t i = 0; i < reps.size(); ++i) index[reps[i]] = static_cast<int>(i);
  int q = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[i * q + j] = index.at(coset_rep[G.mul(reps[i], reps[j])]);
  std::vector<std::string> labels(q);
  for (int i = 0; i < q; ++i) labels[i] = "[" + G.label(reps[i]) + "]";
  return FiniteGroup::from_table(q, std::move(table), std::move(labels));
}

FiniteGroup extract_subgroup(const FiniteGroup& G, const Subgroup& H,
                             std::vector<int>* index_map) {
  const int m = H.order();
  std::vector<int> sub_index(G.order(), -1);
  for (int i = 0; i < m; ++i) sub_index[H.members[i]] = i;
  if (!G.perms().empty()) {
    std::vector<Perm> gens;
    gens.reserve(m);
    for (int g : H.members) gens.push_back(G.perms()[g]);
    FiniteGroup S = FiniteGroup::from_permutations(static_cast<int>(G.perms()[0].size()), gens);
    if (S.order() != m) throw Error("extract_subgroup: member set not closed");
    if (index_map) {
      std::map<Perm, int> where;
      for (int i = 0; i < m; ++i) where[S.perms()[i]] = i;
      index_map->assign(G.order(), -1);
      for (int g : H.members) (*index_map)[g] = where.at(G.perms()[g]);
    }
    return S;
  }
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int v = sub_index[G.mul(H.members[i], H.members[j])];
      if (v < 0) throw Error("extract_subgroup: member set not closed");
      table[i * m + j] = v;
    }
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = G.label(H.members[i]);
  if (index_map) *index_map = sub_index;
  return FiniteGroup::from_table(m, std::move(table), std::move(labels));
}

Subgroup center(const FiniteGroup& G) {
  Subgroup out;
  for (int g = 0; g < G.order(); ++g) {
    bool central = true;
    for (int x = 0; x < G.order() && central; ++x)
      if (G.mul(g, x) != G.mul(x, g)) central = false;
    if (central) out.members.push_back(g);
  }
  return out;
}

Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
  std::vector<int> gens;
  for (int h : H.members)
    for (int k : K.members)
      gens.push_back(G.mul(G.mul(G.inv(h), G.inv(k)), G.mul(h, k)));
  return subgroup_generate(G, sorted_unique(std::move(gens)));
}

static Subgroup whole_group(const FiniteGroup& G) {
  Subgroup all;
  all.members.resize(G.order());
  for (int i = 0; i < G.order(); ++i) all.members[i] = i;
  return all;
}

std::vector<Subgroup> derived_series(const FiniteGroup& G) {
  std::vector<Subgroup> series{whole_group(G)};
  for (;;) {
    Subgroup next = commutator_subgroup(G, series.back(), series.back());
    if (next.members == series.back().members) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& G) {
  Subgroup all = whole_group(G);
  std::vector<Subgroup> series{all};
  for (;;) {
    Subgroup next = commutator_subgroup(G, series.back(), all);
    if (next.members == series.back().members) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<int> nilpotency_class(const FiniteGroup& G) {
  auto series = lower_central_series(G);
  if (series.back().order() != 1) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

std::optional<int> derived_length(const FiniteGroup& G) {
  auto series = derived_series(G);
  if (series.back().order() != 1) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

// ---------------------------------------------------------------------------
// presets

static FiniteGroup quaternion_group() {
  // index = axis*2 + (1 if negative); axes 0=1, 1=i, 2=j, 3=k
  auto qmul = [](int a, int b) {
    int ax = a / 2, bx = b / 2;
    int sign = ((a % 2) + (b % 2)) % 2;
    int cx;
    if (ax == 0)
      cx = bx;
    else if (bx == 0)
      cx = ax;
    else if (ax == bx) {
      cx = 0;
      sign ^= 1;  // i*i = -1
    } else {
      // i*j=k, j*k=i, k*i=j and the reversed products pick up a sign
      static const int prod[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
      static const int neg[4][4] = {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}};
      cx = prod[ax][bx];
      sign ^= neg[ax][bx];
    }
    return cx * 2 + sign;
  };
  std::vector<int> table(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) table[a * 8 + b] = qmul(a, b);
  return FiniteGroup::from_table(8, std::move(table),
                                 {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

static Perm make_cycle(int degree, const std::vector<int>& pts) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  for (size_t i = 0; i < pts.size(); ++i) p[pts[i]] = pts[(i + 1) % pts.size()];
  return p;
}

FiniteGroup direct_product(const std::vector<FiniteGroup>& factors) {
  if (factors.empty()) throw Error("direct_product of no factors");
  if (factors.size() == 1) return factors[0];
  long total = 1;
  for (const auto& f : factors) {
    total *= f.order();
    if (total > cap_order())
      throw Error("product order exceeds cap " + std::to_string(cap_order()));
  }
  int n = static_cast<int>(total);
  int k = static_cast<int>(factors.size());
  // mixed-radix decode, last factor fastest
  auto decode = [&](int idx) {
    std::vector<int> parts(k);
    for (int i = k - 1; i >= 0; --i) {
      parts[i] = idx % factors[i].order();
      idx /= factors[i].order();
    }
    return parts;
  };
  auto encode = [&](const std::vector<int>& parts) {
    int idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * factors[i].order() + parts[i];
    return idx;
  };
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    auto pa = decode(a);
    for (int b = 0; b < n; ++b) {
      auto pb = decode(b);
      std::vector<int> pc(k);
      for (int i = 0; i < k; ++i) pc[i] = factors[i].mul(pa[i], pb[i]);
      table[a * n + b] = encode(pc);
    }
  }
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    auto pa = decode(a);
    std::string l = "(";
    for (int i = 0; i < k; ++i) {
      if (i) l += ",";
      l += factors[i].label(pa[i]);
    }
    labels[a] = l + ")";
  }
  return FiniteGroup::from_table(n, std::move(table), std::move(labels));
}

FiniteGroup preset_group(const std::string& name) {
  if (name.find('x') != std::string::npos) {
    std::vector<FiniteGroup> parts;
    size_t pos = 0;
    while (pos <= name.size()) {
      size_t next = name.find('x', pos);
      std::string part = name.substr(pos, next == std::string::npos ? next : next - pos);
      if (part.empty()) throw Error("bad preset product name '" + name + "'");
      parts.push_back(preset_group(part));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return direct_product(parts);
  }
  if (name.size() >= 2 && name[0] == 'C') {
    char* end = nullptr;
    long v = std::strtol(name.c_str() + 1, &end, 10);
    if (*end == '\0' && v >= 1) {
      int n = static_cast<int>(v);
      if (n == 1) return FiniteGroup::from_table(1, {0}, {"e"});
      std::vector<int> pts(n);
      for (int i = 0; i < n; ++i) pts[i] = i;
      return FiniteGroup::from_permutations(n, {make_cycle(n, pts)});
    }
  }
  if (name == "S3")
    return FiniteGroup::from_permutations(3, {make_cycle(3, {0, 1}), make_cycle(3, {0, 1, 2})});
  if (name == "S4")
    return FiniteGroup::from_permutations(4, {make_cycle(4, {0, 1}), make_cycle(4, {0, 1, 2, 3})});
  if (name == "A4")
    return FiniteGroup::from_permutations(
        4, {make_cycle(4, {0, 1, 2}),
            perm_compose(make_cycle(4, {0, 1}), make_cycle(4, {2, 3}))});
  if (name == "D4")
    return FiniteGroup::from_permutations(4, {make_cycle(4, {0, 1, 2, 3}), make_cycle(4, {0, 2})});
  if (name == "D5")
    return FiniteGroup::from_permutations(
        5, {make_cycle(5, {0, 1, 2, 3, 4}),
            perm_compose(make_cycle(5, {1, 4}), make_cycle(5, {2, 3}))});
  if (name == "D6")
    return FiniteGroup::from_permutations(
        6, {make_cycle(6, {0, 1, 2, 3, 4, 5}),
            perm_compose(make_cycle(6, {1, 5}), make_cycle(6, {2, 4}))});
  if (name == "Q8") return quaternion_group();
  if (name == "V4")
    return FiniteGroup::from_permutations(
        4, {perm_compose(make_cycle(4, {0, 1}), make_cycle(4, {2, 3})),
            perm_compose(make_cycle(4, {0, 2}), make_cycle(4, {1, 3}))});
  throw Error("unknown preset '" + name + "'");
}

// ---------------------------------------------------------------------------
// group-spec parsing

namespace {

struct Scanner {
  const std::string& text;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Scanner(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("parse error at line " + std::to_string(line) + " col " + std::to_string(col) +
                ": " + what);
  }
  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }
  char advance() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  void skip_spaces() {  // spaces and tabs only, not newlines
    while (!eof() && (peek() == ' ' || peek() == '\t')) advance();
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }
  bool try_consume(const std::string& kw) {
    if (text.compare(pos, kw.size(), kw) != 0) return false;
    for (size_t i = 0; i < kw.size(); ++i) advance();
    return true;
  }
  int parse_int() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (advance() - '0');
      if (v > 1'000'000) fail("integer too large");
    }
    return static_cast<int>(v);
  }
  std::string parse_word() {
    std::string w;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      w += advance();
    if (w.empty()) fail("expected name");
    return w;
  }
};

Perm parse_cycles(Scanner& sc, int degree) {
  Perm acc(degree);
  for (int i = 0; i < degree; ++i) acc[i] = i;
  bool any = false;
  for (;;) {
    sc.skip_spaces();
    if (sc.peek() != '(') break;
    sc.advance();
    std::vector<int> pts;
    for (;;) {
      sc.skip_spaces();
      if (sc.peek() == ')') {
        sc.advance();
        break;
      }
      int p = sc.parse_int();
      if (p < 1 || p > degree) sc.fail("cycle point " + std::to_string(p) + " out of 1.." +
                                       std::to_string(degree));
      pts.push_back(p - 1);
    }
    std::vector<int> dedup = pts;
    std::sort(dedup.begin(), dedup.end());
    if (std::adjacent_find(dedup.begin(), dedup.end()) != dedup.end())
      sc.fail("repeated point within a cycle");
    acc = perm_compose(acc, make_cycle(degree, pts));
    any = true;
  }
  if (!any) sc.fail("expected cycle '('");
  return acc;
}

}  // namespace

FiniteGroup parse_group(const std::string& text) {
  Scanner sc(text);
  sc.skip_ws();
  if (sc.try_consume("perm")) {
    sc.skip_spaces();
    if (!sc.try_consume("degree=")) sc.fail("expected 'degree='");
    int degree = sc.parse_int();
    if (degree < 1) sc.fail("degree must be >= 1");
    sc.skip_spaces();
    if (!sc.try_consume("gens=")) sc.fail("expected 'gens='");
    std::vector<Perm> gens;
    gens.push_back(parse_cycles(sc, degree));
    for (;;) {
      sc.skip_spaces();
      if (sc.peek() != ';') break;
      sc.advance();
      gens.push_back(parse_cycles(sc, degree));
    }
    sc.skip_ws();
    if (!sc.eof()) sc.fail("trailing input after permutation declaration");
    return FiniteGroup::from_permutations(degree, gens);
  }
  if (sc.try_consume("table")) {
    sc.skip_spaces();
    int n = sc.parse_int();
    if (n < 1) sc.fail("table size must be >= 1");
    if (n > cap_order())
      throw Error("group order " + std::to_string(n) + " exceeds cap " +
                  std::to_string(cap_order()));
    std::vector<int> table;
    table.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n * n; ++i) {
      sc.skip_ws();
      if (sc.eof()) sc.fail("table ended early (" + std::to_string(i) + " of " +
                            std::to_string(n * n) + " entries)");
      int v = sc.parse_int();
      if (v < 0 || v >= n) sc.fail("table entry " + std::to_string(v) + " out of range");
      table.push_back(v);
    }
    sc.skip_ws();
    if (!sc.eof()) sc.fail("trailing input after table");
    return FiniteGroup::from_table(n, std::move(table));
  }
  if (sc.try_consume("preset")) {
    sc.skip_spaces();
    std::string name = sc.parse_word();
    sc.skip_ws();
    if (!sc.eof()) sc.fail("trailing input after preset name");
    FiniteGroup G = preset_group(name);
    if (G.order() > cap_order())
      throw Error("group order " + std::to_string(G.order()) + " exceeds cap " +
                  std::to_string(cap_order()));
    return G;
  }
  sc.fail("expected 'perm', 'table' or 'preset'");
}

std::optional<std::vector<int>> group_isomorphic(const FiniteGroup& A, const FiniteGroup& B) {
  if (A.order() != B.order()) return std::nullopt;
  std::vector<int> pa(A.order()), pb(B.order());
  for (int i = 0; i < A.order(); ++i) pa[i] = A.element_order(i);
  for (int i = 0; i < B.order(); ++i) pb[i] = B.element_order(i);
  std::vector<int> sa = pa, sb = pb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  return tables_isomorphic(A.order(), A.table(), B.order(), B.table());
}

}  // namespace cosetlab
