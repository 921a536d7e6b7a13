#include "cosetlab/lattice.hpp"

#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace cosetlab {

int SubgroupLattice::find(const std::vector<int>& members) const {
  // subgroups are sorted by (order, members); binary search
  const int target_order = static_cast<int>(members.size());
  int lo = 0, hi = count() - 1;
  while (lo <= hi) {
    int mid = (lo + hi) / 2;
    const Subgroup& s = subgroups[mid];
    if (s.order() == target_order && s.members == members) return mid;
    bool less =
        s.order() < target_order || (s.order() == target_order && s.members < members);
    if (less)
      lo = mid + 1;
    else
      hi = mid - 1;
  }
  return -1;
}

SubgroupLattice enumerate_subgroups(const FiniteGroup& G) {
  if (G.order() > cap_order())
    throw Error("enumerate_subgroups: order " + std::to_string(G.order()) + " exceeds cap " +
                std::to_string(cap_order()));
  // all cyclic subgroups, then close under join with cyclic subgroups
  std::set<std::vector<int>> found;
  found.insert({G.identity()});
  std::vector<std::vector<int>> cyclics;
  for (int g = 0; g < G.order(); ++g) {
    auto c = subgroup_generate(G, {g}).members;
    if (found.insert(c).second) cyclics.push_back(c);
  }
  cyclics.push_back({G.identity()});
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<int>> snapshot(found.begin(), found.end());
    for (const auto& h : snapshot)
      for (const auto& c : cyclics) {
        if (is_subset(c, h)) continue;
        auto j = subgroup_generate(G, set_union(h, c)).members;
        if (found.insert(j).second) changed = true;
      }
  }

  SubgroupLattice lat;
  lat.group = G;
  lat.subgroups.reserve(found.size());
  for (const auto& m : found) {
    Subgroup s;
    s.members = m;
    lat.subgroups.push_back(std::move(s));
  }
  std::sort(lat.subgroups.begin(), lat.subgroups.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  const int m = lat.count();
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) {
    lat.subgroups[i].id = i;
    index[lat.subgroups[i].members] = i;
  }

  lat.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      lat.leq[i][j] = is_subset(lat.subgroups[i].members, lat.subgroups[j].members);

  lat.join.assign(m, std::vector<int>(m, -1));
  lat.meet.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      auto u = subgroup_generate(G, set_union(lat.subgroups[i].members, lat.subgroups[j].members));
      auto it = index.find(u.members);
      if (it == index.end()) throw Error("lattice enumeration incomplete: join missing");
      lat.join[i][j] = lat.join[j][i] = it->second;
      auto w = set_intersect(lat.subgroups[i].members, lat.subgroups[j].members);
      auto it2 = index.find(w);
      if (it2 == index.end()) throw Error("lattice enumeration incomplete: meet missing");
      lat.meet[i][j] = lat.meet[j][i] = it2->second;
    }

  lat.conj_by.assign(m, std::vector<int>(G.order(), -1));
  for (int i = 0; i < m; ++i)
    for (int g = 0; g < G.order(); ++g) {
      auto c = conjugate_subgroup(G, lat.subgroups[i], g);
      auto it = index.find(c.members);
      if (it == index.end()) throw Error("lattice enumeration incomplete: conjugate missing");
      lat.conj_by[i][g] = it->second;
    }

  lat.normal_in_g.assign(m, true);
  for (int i = 0; i < m; ++i)
    for (int g = 0; g < G.order(); ++g)
      if (lat.conj_by[i][g] != i) {
        lat.normal_in_g[i] = false;
        break;
      }

  lat.conj_class.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    if (lat.conj_class[i] >= 0) continue;
    int cls = static_cast<int>(lat.conj_classes.size());
    std::vector<int> members;
    for (int g = 0; g < G.order(); ++g) {
      int j = lat.conj_by[i][g];
      if (lat.conj_class[j] < 0) {
        lat.conj_class[j] = cls;
        members.push_back(j);
      }
    }
    std::sort(members.begin(), members.end());
    lat.conj_classes.push_back(std::move(members));
  }
  return lat;
}

std::vector<std::optional<int>> subnormal_defects(const SubgroupLattice& lat) {
  const int m = lat.count();
  // normal_pair[j][i]: H_i proper subgroup of H_j with H_i normal in H_j
  std::vector<std::vector<int>> down(m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) {
      if (i == j || !lat.leq[i][j]) continue;
      bool normal = true;
      for (int k : lat.subgroups[j].members)
        if (conjugate_subgroup(lat.group, lat.subgroups[i], k).members !=
            lat.subgroups[i].members) {
          normal = false;
          break;
        }
      if (normal) down[j].push_back(i);
    }
  std::vector<std::optional<int>> dist(m);
  std::deque<int> queue;
  dist[lat.full_id()] = 0;
  queue.push_back(lat.full_id());
  while (!queue.empty()) {
    int j = queue.front();
    queue.pop_front();
    for (int i : down[j])
      if (!dist[i]) {
        dist[i] = *dist[j] + 1;
        queue.push_back(i);
      }
  }
  return dist;
}

std::optional<int> subnormal_defect(const SubgroupLattice& lat, int id) {
  return subnormal_defects(lat)[id];
}

std::string lattice_dot(const SubgroupLattice& lat) {
  const int m = lat.count();
  std::ostringstream out;
  out << "// subgroup lattice of a group of order " << lat.group.order() << "\n";
  out << "// permutations compose left-to-right\n";
  out << "digraph lattice {\n  rankdir=BT;\n";
  for (int i = 0; i < m; ++i)
    out << "  s" << i << " [label=\"#" << i << " |H|=" << lat.subgroups[i].order() << "\" shape="
        << (lat.normal_in_g[i] ? "box" : "ellipse") << "];\n";
  // transitive reduction of containment
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !lat.leq[i][j]) continue;
      bool covered = true;
      for (int k = 0; k < m && covered; ++k)
        if (k != i && k != j && lat.leq[i][k] && lat.leq[k][j]) covered = false;
      if (covered) out << "  s" << i << " -> s" << j << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace cosetlab
