#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

namespace {

int tail_of(const std::vector<Edge>& edges, Dart d) { return d % 2 == 0 ? edges[d / 2].tail : edges[d / 2].head; }

}  // namespace

std::vector<std::vector<Dart>> trace_faces(const std::vector<Edge>& edges, const std::vector<std::vector<Dart>>& rotation) {
  auto successor = [&](Dart d) {
    const auto& list = rotation[tail_of(edges, d)];
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i] == d) return list[(i + 1) % list.size()];
    }
    throw std::logic_error("dart missing from rotation");
  };
  std::set<Dart> seen;
  std::vector<std::vector<Dart>> walks;
  for (Dart start = 0; start < 2 * static_cast<int>(edges.size()); ++start) {
    if (seen.count(start)) continue;
    std::vector<Dart> w;
    Dart d = start;
    do {
      seen.insert(d);
      w.push_back(d);
      d = successor(d ^ 1);
    } while (d != start);
    walks.push_back(w);
  }
  return walks;
}

std::multiset<int> face_sizes(const std::vector<std::vector<Dart>>& walks) {
  std::multiset<int> s;
  for (const auto& w : walks) s.insert(static_cast<int>(w.size()));
  return s;
}

std::multiset<int> face_sizes(const CellComplex& k) { return face_sizes(k.faces()); }

std::multiset<int> degrees(const CellComplex& k) {
  std::vector<int> deg(k.vertex_count(), 0);
  for (const Edge& e : k.edges()) {
    ++deg[e.tail];
    ++deg[e.head];
  }
  return {deg.begin(), deg.end()};
}

int euler(const CellComplex& k) {
  return k.vertex_count() - static_cast<int>(k.edges().size()) + static_cast<int>(k.faces().size());
}

int face_containing(const CellComplex& k, Dart d) {
  for (std::size_t f = 0; f < k.faces().size(); ++f) {
    const auto& w = k.faces()[f];
    if (std::find(w.begin(), w.end(), d) != w.end()) return static_cast<int>(f);
  }
  throw std::logic_error("dart on no face");
}

std::vector<Incidence> incidences(const CellComplex& k) {
  const int nv = k.vertex_count();
  const int ne = static_cast<int>(k.edges().size());
  std::vector<Incidence> out;
  for (Dart d = 0; d < 2 * ne; ++d) out.push_back({d, tail_of(k.edges(), d), nv + d / 2});
  for (Dart d = 0; d < 2 * ne; ++d) out.push_back({2 * ne + d, nv + d / 2, nv + ne + face_containing(k, d)});
  return out;
}

bool is_matching(const CellComplex& k, const std::set<int>& hasse_edges) {
  std::set<int> used;
  for (const Incidence& inc : incidences(k)) {
    if (!hasse_edges.count(inc.id)) continue;
    if (!used.insert(inc.lower).second || !used.insert(inc.upper).second) return false;
  }
  return true;
}

long count_alternating_cycles(const CellComplex& k, const std::set<int>& hasse_edges) {
  const int nv = k.vertex_count();
  const int ne = static_cast<int>(k.edges().size());
  const int cells = nv + ne + static_cast<int>(k.faces().size());
  long total = 0;
  for (int level = 0; level < 2; ++level) {
    // Arcs of this level as (from, to) with multiplicity.
    std::vector<std::vector<int>> out(cells);
    for (const Incidence& inc : incidences(k)) {
      if ((inc.id < 2 * ne ? 0 : 1) != level) continue;
      if (hasse_edges.count(inc.id)) out[inc.lower].push_back(inc.upper);
      else out[inc.upper].push_back(inc.lower);
    }
    for (int s = 0; s < cells; ++s) {
      std::vector<char> on_path(cells, 0);
      std::function<void(int)> dfs = [&](int u) {
        on_path[u] = 1;
        for (int w : out[u]) {
          if (w == s) ++total;
          else if (w > s && !on_path[w]) dfs(w);
        }
        on_path[u] = 0;
      };
      dfs(s);
    }
  }
  return total;
}

long for_each_matching(const CellComplex& k, const std::function<bool(const std::set<int>&)>& visit) {
  const std::vector<Incidence> inc = incidences(k);
  const int cells = k.vertex_count() + static_cast<int>(k.edges().size()) + static_cast<int>(k.faces().size());
  std::vector<char> used(cells, 0);
  std::set<int> current;
  long count = 0;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == inc.size()) {
      ++count;
      if (!visit(current)) stop = true;
      return;
    }
    rec(i + 1);
    const Incidence& x = inc[i];
    if (!used[x.lower] && !used[x.upper]) {
      used[x.lower] = used[x.upper] = 1;
      current.insert(x.id);
      rec(i + 1);
      current.erase(x.id);
      used[x.lower] = used[x.upper] = 0;
    }
  };
  rec(0);
  return count;
}

std::vector<int> c_values(const CellComplex& k, const std::set<int>& matched_edges) {
  std::vector<int> c;
  for (const auto& w : k.faces()) {
    int n = 0;
    for (Dart d : w) n += matched_edges.count(d / 2) ? 0 : 1;
    c.push_back(n);
  }
  return c;
}

int flow_target(const CellComplex& k, const std::map<int, int>& pairs, int v) {
  for (int steps = 0; steps <= k.vertex_count(); ++steps) {
    auto it = pairs.find(v);
    if (it == pairs.end()) return v;
    const Edge& e = k.edges()[it->second];
    v = e.tail == v ? e.head : e.tail;
  }
  throw std::logic_error("flow does not terminate");
}

int twice_index_sum(const CellComplex& k, const std::map<int, int>& pairs) {
  std::set<int> matched;
  for (const auto& [v, e] : pairs) matched.insert(e);
  int sum = 2 * (k.vertex_count() - static_cast<int>(pairs.size()));
  for (int c : c_values(k, matched)) sum += 2 - c;
  return sum;
}

}  // namespace oracle
