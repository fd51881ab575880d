#include "dlf/linefield.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "dlf/generators.hpp"

namespace dlf {

std::string to_string(HalfInteger h) {
  std::ostringstream os;
  if (h.is_integer()) {
    os << h.twice() / 2;
  } else {
    os << h.twice() << "/2";
  }
  return os.str();
}

const char* to_string(FieldErrc code) {
  switch (code) {
    case FieldErrc::NotVertexLevel: return "NotVertexLevel";
    case FieldErrc::NotIncident: return "NotIncident";
    case FieldErrc::NotAMatching: return "NotAMatching";
    case FieldErrc::NotAcyclic: return "NotAcyclic";
    case FieldErrc::UnknownVertex: return "UnknownVertex";
    case FieldErrc::UnknownEdge: return "UnknownEdge";
    case FieldErrc::UnknownFace: return "UnknownFace";
  }
  return "Unknown";
}

FieldError::FieldError(FieldErrc code, int cell, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), cell_(cell) {}

namespace {

// First vertex (ascending) lying on a closed flow, or -1. `next` maps a
// matched vertex to the far end of its edge and a critical vertex to -1.
VertexId vertex_on_flow_cycle(const std::vector<VertexId>& next) {
  const int n = static_cast<int>(next.size());
  std::vector<char> state(n, 0);  // 0 new, 1 on current walk, 2 done
  for (VertexId start = 0; start < n; ++start) {
    std::vector<VertexId> walk;
    VertexId v = start;
    while (v != -1 && state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      v = next[v];
    }
    const bool closed = (v != -1 && state[v] == 1);
    for (VertexId w : walk) state[w] = 2;
    if (closed) return v;
  }
  return -1;
}

std::vector<VertexId> flow_map(const CellComplex& k, const std::vector<Dart>& vertex_dart) {
  std::vector<VertexId> next(k.vertex_count(), -1);
  for (VertexId v = 0; v < k.vertex_count(); ++v) {
    if (vertex_dart[v] != -1) next[v] = k.head(vertex_dart[v]);
  }
  return next;
}

}  // namespace

LineField::LineField(CellComplex complex, Matching mv)
    : complex_(std::move(complex)),
      mv_(std::move(mv)),
      vertex_dart_(complex_.vertex_count(), -1),
      edge_matched_(complex_.edge_count(), 0) {
  for (int h : mv_.edges()) {
    if (h < 0 || h >= complex_.dart_count()) {
      throw FieldError(FieldErrc::NotVertexLevel, h,
                       "Hasse edge " + std::to_string(h) + " is not a vertex-edge incidence");
    }
    const VertexId v = complex_.tail(h);
    const EdgeId e = edge_of(h);
    if (vertex_dart_[v] != -1) throw FieldError(FieldErrc::NotAMatching, v, "vertex " + std::to_string(v) + " matched twice");
    if (edge_matched_[e]) throw FieldError(FieldErrc::NotAMatching, e, "edge " + std::to_string(e) + " matched twice");
    vertex_dart_[v] = h;
    edge_matched_[e] = 1;
  }
  const VertexId bad = vertex_on_flow_cycle(flow_map(complex_, vertex_dart_));
  if (bad != -1) {
    throw FieldError(FieldErrc::NotAcyclic, bad, "closed gradient path through vertex " + std::to_string(bad));
  }
}

LineField LineField::from_pairs(CellComplex complex, const std::vector<std::pair<VertexId, EdgeId>>& pairs) {
  std::vector<int> darts;
  for (auto [v, e] : pairs) {
    if (v < 0 || v >= complex.vertex_count()) throw FieldError(FieldErrc::UnknownVertex, v, "no vertex " + std::to_string(v));
    if (e < 0 || e >= complex.edge_count()) throw FieldError(FieldErrc::UnknownEdge, e, "no edge " + std::to_string(e));
    if (complex.edge(e).tail == v) {
      darts.push_back(dart_of(e));
    } else if (complex.edge(e).head == v) {
      darts.push_back(dart_of(e, true));
    } else {
      throw FieldError(FieldErrc::NotIncident, e,
                       "edge " + std::to_string(e) + " is not incident to vertex " + std::to_string(v));
    }
  }
  const std::size_t requested = darts.size();
  Matching m(std::move(darts));
  if (static_cast<std::size_t>(m.size()) != requested) {
    throw FieldError(FieldErrc::NotAMatching, -1, "a (vertex, edge) pair is listed twice");
  }
  return LineField(std::move(complex), std::move(m));
}

VertexId LineField::flow_step(VertexId v) const {
  return vertex_dart_[v] == -1 ? -1 : complex_.head(vertex_dart_[v]);
}

VertexId LineField::flow_target(VertexId v) const {
  while (vertex_dart_[v] != -1) v = complex_.head(vertex_dart_[v]);
  return v;
}

std::vector<std::pair<VertexId, EdgeId>> LineField::pairs() const {
  std::vector<std::pair<VertexId, EdgeId>> out;
  for (int d : mv_.edges()) out.emplace_back(complex_.tail(d), edge_of(d));
  return out;
}

int vertex_index(const LineField& field, VertexId v) {
  if (v < 0 || v >= field.complex().vertex_count()) {
    throw FieldError(FieldErrc::UnknownVertex, v, "no vertex " + std::to_string(v));
  }
  return field.vertex_matched(v) ? 0 : 1;
}

int face_c_value(const LineField& field, FaceId f) {
  if (f < 0 || f >= field.complex().face_count()) {
    throw FieldError(FieldErrc::UnknownFace, f, "no face " + std::to_string(f));
  }
  int c = 0;
  for (Dart d : field.complex().walk(f)) {
    if (!field.edge_matched(edge_of(d))) ++c;
  }
  return c;
}

HalfInteger face_index(const LineField& field, FaceId f) {
  return HalfInteger(1) - HalfInteger::from_twice(face_c_value(field, f));
}

bool is_critical_face(const LineField& field, FaceId f) { return face_c_value(field, f) != 2; }

IndexReport index_report(const LineField& field) {
  const CellComplex& k = field.complex();
  IndexReport r;
  for (VertexId v = 0; v < k.vertex_count(); ++v) r.vertex_indices.push_back(vertex_index(field, v));
  for (FaceId f = 0; f < k.face_count(); ++f) {
    r.c_values.push_back(face_c_value(field, f));
    r.face_indices.push_back(HalfInteger(1) - HalfInteger::from_twice(r.c_values.back()));
  }
  return r;
}

LineFieldEuler euler_check(const LineField& field) {
  const IndexReport r = index_report(field);
  LineFieldEuler out;
  for (int i : r.vertex_indices) out.vertex_sum += i;
  for (HalfInteger i : r.face_indices) out.face_sum += i;
  out.chi = field.complex().euler_characteristic();
  out.holds = (HalfInteger(out.vertex_sum) + out.face_sum == HalfInteger(out.chi));
  return out;
}

LineField spanning_tree_field(const CellComplex& k, VertexId root) {
  if (root < 0 || root >= k.vertex_count()) throw FieldError(FieldErrc::UnknownVertex, root, "no vertex " + std::to_string(root));
  std::vector<char> reached(k.vertex_count(), 0);
  std::vector<int> matched;
  std::deque<VertexId> queue{root};
  reached[root] = 1;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    std::vector<Dart> out(k.rotation().around(x).begin(), k.rotation().around(x).end());
    std::sort(out.begin(), out.end());
    for (Dart d : out) {
      const VertexId y = k.head(d);
      if (reached[y]) continue;
      reached[y] = 1;
      matched.push_back(vertex_level_edge(opposite(d)));
      queue.push_back(y);
    }
  }
  return LineField(k, Matching(std::move(matched)));
}

LineField random_field(const CellComplex& k, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Dart> order(k.dart_count());
  for (Dart d = 0; d < k.dart_count(); ++d) order[d] = d;
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Dart> vertex_dart(k.vertex_count(), -1);
  std::vector<char> edge_used(k.edge_count(), 0);
  for (Dart d : order) {
    const VertexId v = k.tail(d);
    if (vertex_dart[v] != -1 || edge_used[edge_of(d)] || uniform_below(rng, 2) == 0) continue;
    vertex_dart[v] = d;
    edge_used[edge_of(d)] = 1;
  }

  for (;;) {
    const auto next = flow_map(k, vertex_dart);
    const VertexId start = vertex_on_flow_cycle(next);
    if (start == -1) break;
    Dart drop = vertex_dart[start];
    for (VertexId v = next[start]; v != start; v = next[v]) drop = std::min(drop, vertex_dart[v]);
    vertex_dart[k.tail(drop)] = -1;
  }

  std::vector<int> matched;
  for (Dart d : vertex_dart) {
    if (d != -1) matched.push_back(vertex_level_edge(d));
  }
  return LineField(k, Matching(std::move(matched)));
}

}  // namespace dlf
