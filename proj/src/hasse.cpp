#include "dlf/hasse.hpp"

#include <algorithm>
#include <sstream>

#include "dlf/generators.hpp"

namespace dlf {

std::string to_string(Cell c) {
  static constexpr char prefix[] = {'v', 'e', 'f'};
  std::ostringstream os;
  if (c.dim >= 0 && c.dim <= 2) {
    os << prefix[c.dim] << c.id;
  } else {
    os << 'c' << c.dim << ':' << c.id;
  }
  return os.str();
}

HasseDiagram::HasseDiagram(std::vector<Cell> nodes, std::vector<HasseEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), up_(nodes_.size()), down_(nodes_.size()) {
  for (std::size_t h = 0; h < edges_.size(); ++h) {
    const HasseEdge& e = edges_[h];
    if (e.lower < 0 || e.upper < 0 || e.lower >= node_count() || e.upper >= node_count() ||
        nodes_[e.upper].dim != nodes_[e.lower].dim + 1) {
      throw std::invalid_argument("Hasse edge " + std::to_string(h) + " does not join adjacent dimensions");
    }
    up_[e.lower].push_back(static_cast<int>(h));
    down_[e.upper].push_back(static_cast<int>(h));
  }
}

int HasseDiagram::find(Cell c) const {
  auto it = std::find(nodes_.begin(), nodes_.end(), c);
  return it == nodes_.end() ? -1 : static_cast<int>(it - nodes_.begin());
}

int HasseDiagram::euler_characteristic() const {
  int chi = 0;
  for (const Cell& c : nodes_) chi += (c.dim % 2 == 0) ? 1 : -1;
  return chi;
}

HasseDiagram hasse_diagram(const CellComplex& k) {
  std::vector<Cell> nodes;
  nodes.reserve(k.cell_count());
  for (VertexId v = 0; v < k.vertex_count(); ++v) nodes.push_back({0, v});
  for (EdgeId e = 0; e < k.edge_count(); ++e) nodes.push_back({1, e});
  for (FaceId f = 0; f < k.face_count(); ++f) nodes.push_back({2, f});

  std::vector<HasseEdge> edges;
  edges.reserve(2 * k.dart_count());
  for (Dart d = 0; d < k.dart_count(); ++d) edges.push_back({vertex_node(k, k.tail(d)), edge_node(k, edge_of(d))});
  for (Dart d = 0; d < k.dart_count(); ++d) edges.push_back({edge_node(k, edge_of(d)), face_node(k, k.face_of(d))});
  return HasseDiagram(std::move(nodes), std::move(edges));
}

Matching::Matching(std::vector<int> hasse_edges) : edges_(std::move(hasse_edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Matching::contains(int h) const { return std::binary_search(edges_.begin(), edges_.end(), h); }

Matching Matching::united(const Matching& other) const {
  std::vector<int> all = edges_;
  all.insert(all.end(), other.edges_.begin(), other.edges_.end());
  return Matching(std::move(all));
}

const char* to_string(MatchingErrc code) {
  switch (code) {
    case MatchingErrc::UnknownEdge: return "UnknownEdge";
    case MatchingErrc::NotAMatching: return "NotAMatching";
    case MatchingErrc::NotMorse: return "NotMorse";
    case MatchingErrc::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

MatchingError::MatchingError(MatchingErrc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

std::vector<int> partners(const HasseDiagram& h, const Matching& m) {
  std::vector<int> partner(h.node_count(), -1);
  for (int e : m.edges()) {
    if (e < 0 || e >= h.edge_count()) {
      throw MatchingError(MatchingErrc::UnknownEdge, "Hasse edge " + std::to_string(e) + " does not exist");
    }
    for (int n : {h.edge(e).lower, h.edge(e).upper}) {
      if (partner[n] != -1) {
        throw MatchingError(MatchingErrc::NotAMatching, "cell " + to_string(h.node(n)) + " is matched twice");
      }
      partner[n] = e;
    }
  }
  return partner;
}

namespace {

// Out-edges of the modified Hasse digraph: the matched edge upward, every
// other incidence downward.
template <typename Visit>
void for_each_step(const HasseDiagram& h, const std::vector<int>& partner, int level, int x, Visit&& visit) {
  const int p = partner[x];
  if (p != -1 && h.edge(p).lower == x && (level < 0 || h.level(p) == level)) visit(p, h.edge(p).upper);
  for (int e : h.down_edges(x)) {
    if (e == p || (level >= 0 && h.level(e) != level)) continue;
    visit(e, h.edge(e).lower);
  }
}

std::vector<int> find_cycle(const HasseDiagram& h, const std::vector<int>& partner, int level) {
  const int n = h.node_count();
  std::vector<char> color(n, 0);
  std::vector<int> via(n, -1);
  struct Frame {
    int node;
    std::vector<std::pair<int, int>> steps;
    std::size_t next = 0;
  };
  for (int root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    std::vector<Frame> stack;
    auto push = [&](int x) {
      Frame f{x, {}, 0};
      for_each_step(h, partner, level, x, [&](int e, int y) { f.steps.emplace_back(e, y); });
      color[x] = 1;
      stack.push_back(std::move(f));
    };
    push(root);
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next == top.steps.size()) {
        color[top.node] = 2;
        stack.pop_back();
        continue;
      }
      auto [e, y] = top.steps[top.next++];
      if (color[y] == 1) {
        std::vector<int> cycle{e};
        for (int x = top.node; x != y; x = h.edge(via[x]).lower == x ? h.edge(via[x]).upper : h.edge(via[x]).lower) {
          cycle.push_back(via[x]);
        }
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (color[y] == 0) {
        via[y] = e;
        push(y);
      }
    }
  }
  return {};
}

void require_morse(const HasseDiagram& h, const std::vector<int>& partner) {
  if (!find_cycle(h, partner, -1).empty()) {
    throw MatchingError(MatchingErrc::NotMorse, "matching contains a closed gradient path");
  }
}

void extend_paths(const HasseDiagram& h, const std::vector<int>& partner, GradientPath& current,
                  std::vector<GradientPath>& out) {
  const int x = current.cells.back();
  const int p = partner[x];
  if (p == -1 || h.edge(p).lower != x) {
    current.ends_critical = (p == -1);
    out.push_back(current);
    return;
  }
  const int sigma = h.edge(p).upper;
  std::vector<int> steps;
  for (int e : h.down_edges(sigma)) {
    if (e != p) steps.push_back(e);
  }
  std::stable_sort(steps.begin(), steps.end(), [&](int a, int b) { return h.edge(a).lower < h.edge(b).lower; });
  if (steps.empty()) {
    current.ends_critical = false;
    out.push_back(current);
    return;
  }
  for (int e : steps) {
    current.cells.push_back(h.edge(e).lower);
    current.witnesses.push_back(sigma);
    current.descents.push_back(e);
    extend_paths(h, partner, current, out);
    current.cells.pop_back();
    current.witnesses.pop_back();
    current.descents.pop_back();
  }
}

std::vector<GradientPath> paths_from(const HasseDiagram& h, const std::vector<int>& partner, int from) {
  std::vector<GradientPath> out;
  GradientPath current;
  current.dim = h.dim(from);
  current.cells.push_back(from);
  extend_paths(h, partner, current, out);
  return out;
}

}  // namespace

std::vector<int> find_gradient_cycle(const HasseDiagram& h, const Matching& m, int level) {
  return find_cycle(h, partners(h, m), level);
}

bool is_morse_matching(const HasseDiagram& h, const Matching& m) {
  return find_cycle(h, partners(h, m), -1).empty();
}

std::vector<Cell> critical_cells(const HasseDiagram& h, const Matching& m) {
  const auto partner = partners(h, m);
  require_morse(h, partner);
  std::vector<Cell> out;
  for (int n = 0; n < h.node_count(); ++n) {
    if (partner[n] == -1) out.push_back(h.node(n));
  }
  return out;
}

FormanEuler forman_euler_check(const HasseDiagram& h, const Matching& m) {
  FormanEuler r;
  for (const Cell& c : critical_cells(h, m)) {
    if (c.dim == 0) ++r.m0;
    if (c.dim == 1) ++r.m1;
    if (c.dim == 2) ++r.m2;
  }
  r.chi = h.euler_characteristic();
  r.holds = (r.m0 - r.m1 + r.m2 == r.chi);
  return r;
}

std::vector<GradientPath> gradient_paths(const HasseDiagram& h, const Matching& m, int p, int from) {
  const auto partner = partners(h, m);
  require_morse(h, partner);
  if (from < 0 || from >= h.node_count() || h.dim(from) != p) {
    throw MatchingError(MatchingErrc::DimensionMismatch, "start cell is not of dimension " + std::to_string(p));
  }
  return paths_from(h, partner, from);
}

HasseDiagram forman_reduce(const HasseDiagram& h, const Matching& m) {
  const auto partner = partners(h, m);
  require_morse(h, partner);
  std::vector<int> reduced_index(h.node_count(), -1);
  std::vector<Cell> nodes;
  for (int n = 0; n < h.node_count(); ++n) {
    if (partner[n] == -1) {
      reduced_index[n] = static_cast<int>(nodes.size());
      nodes.push_back(h.node(n));
    }
  }
  std::vector<HasseEdge> edges;
  for (int e = 0; e < h.edge_count(); ++e) {
    const int upper = h.edge(e).upper;
    if (partner[upper] != -1) continue;
    for (const GradientPath& path : paths_from(h, partner, h.edge(e).lower)) {
      if (path.ends_critical) edges.push_back({reduced_index[path.cells.back()], reduced_index[upper]});
    }
  }
  return HasseDiagram(std::move(nodes), std::move(edges));
}

Matching repair_to_acyclic(const HasseDiagram& h, Matching m) {
  for (;;) {
    const auto cycle = find_cycle(h, partners(h, m), -1);
    if (cycle.empty()) return m;
    int drop = -1;
    for (int e : cycle) {
      if (m.contains(e) && (drop == -1 || e < drop)) drop = e;
    }
    std::vector<int> kept;
    for (int e : m.edges()) {
      if (e != drop) kept.push_back(e);
    }
    m = Matching(std::move(kept));
  }
}

Matching random_morse_matching(const HasseDiagram& h, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> order(h.edge_count());
  for (int e = 0; e < h.edge_count(); ++e) order[e] = e;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> used(h.node_count(), 0);
  std::vector<int> chosen;
  for (int e : order) {
    const auto [lo, up] = h.edge(e);
    if (used[lo] || used[up] || uniform_below(rng, 2) == 0) continue;
    used[lo] = used[up] = 1;
    chosen.push_back(e);
  }
  return repair_to_acyclic(h, Matching(std::move(chosen)));
}

}  // namespace dlf
