#include "curvlink/metric_graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <queue>
#include <utility>

namespace curvlink {

VertexId MetricGraph::add_vertex(std::string_view label) {
  std::string key(label);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  const VertexId id = labels_.size();
  labels_.push_back(key);
  index_.emplace(std::move(key), id);
  incidence_.emplace_back();
  return id;
}

EdgeId MetricGraph::add_edge(std::string_view u, std::string_view v, double length, std::string tag,
                             bool shared) {
  const VertexId a = add_vertex(u);
  const VertexId b = add_vertex(v);
  return add_edge(a, b, length, std::move(tag), shared);
}

EdgeId MetricGraph::add_edge(VertexId u, VertexId v, double length, std::string tag, bool shared) {
  if (u >= labels_.size() || v >= labels_.size()) {
    throw DomainError("edge endpoint is not a vertex of the graph");
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw DomainError("edge lengths must be finite and positive");
  }
  if (shared) {
    for (EdgeId e : incidence_[u]) {
      const Edge& old = edges_[e];
      const bool same_ends = (old.u == u && old.v == v) || (old.u == v && old.v == u);
      if (old.shared && same_ends && old.length == length) return e;
    }
  }
  const EdgeId id = edges_.size();
  edges_.push_back({u, v, length, std::move(tag), shared});
  incidence_[u].push_back(id);
  if (v != u) incidence_[v].push_back(id);
  return id;
}

std::optional<VertexId> MetricGraph::find(std::string_view label) const {
  if (auto it = index_.find(std::string(label)); it != index_.end()) return it->second;
  return std::nullopt;
}

VertexId MetricGraph::at(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw DomainError("unknown vertex '" + std::string(label) + "'");
}

double MetricGraph::max_edge_length() const {
  double best = 0.0;
  for (const Edge& e : edges_) best = std::max(best, e.length);
  return best;
}

namespace {

struct Dijkstra {
  std::vector<double> dist;
  std::vector<EdgeId> via;  // edge used to reach each vertex
};

constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

Dijkstra run_dijkstra(const MetricGraph& g, VertexId source, std::optional<EdgeId> skip) {
  const std::size_t n = g.vertex_count();
  Dijkstra out{std::vector<double>(n, kUnreachable), std::vector<EdgeId>(n, kNoEdge)};
  std::vector<char> done(n, 0);
  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  out.dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    const auto [d, w] = heap.top();
    heap.pop();
    if (done[w]) continue;
    done[w] = 1;
    for (EdgeId e : g.incident(w)) {
      if (skip && *skip == e) continue;
      const Edge& edge = g.edge(e);
      if (edge.is_loop()) continue;
      const VertexId x = edge.other(w);
      const double nd = d + edge.length;
      if (nd < out.dist[x]) {
        out.dist[x] = nd;
        out.via[x] = e;
        heap.push({nd, x});
      }
    }
  }
  return out;
}

void require_vertex(const MetricGraph& g, VertexId v) {
  if (v >= g.vertex_count()) throw DomainError("unknown vertex id " + std::to_string(v));
}

}  // namespace

std::vector<double> distances_from(const MetricGraph& g, VertexId source, std::optional<EdgeId> skip) {
  require_vertex(g, source);
  return run_dijkstra(g, source, skip).dist;
}

std::vector<std::vector<double>> all_pairs_distances(const MetricGraph& g) {
  std::vector<std::vector<double>> d;
  d.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) d.push_back(run_dijkstra(g, v, std::nullopt).dist);
  return d;
}

PathResult shortest_path(const MetricGraph& g, VertexId u, VertexId v, std::optional<EdgeId> skip) {
  require_vertex(g, u);
  require_vertex(g, v);
  const Dijkstra run = run_dijkstra(g, u, skip);
  PathResult out;
  if (run.dist[v] == kUnreachable) return out;
  out.length = run.dist[v];
  for (VertexId w = v; w != u;) {
    out.vertices.push_back(w);
    const EdgeId e = run.via[w];
    out.edges.push_back(e);
    w = g.edge(e).other(w);
  }
  out.vertices.push_back(u);
  std::reverse(out.vertices.begin(), out.vertices.end());
  std::reverse(out.edges.begin(), out.edges.end());
  return out;
}

PathResult shortest_path(const MetricGraph& g, std::string_view u, std::string_view v) {
  return shortest_path(g, g.at(u), g.at(v));
}

SystoleResult systole(const MetricGraph& g) {
  SystoleResult best;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.is_loop()) {
      if (edge.length < best.length) {
        best.length = edge.length;
        best.witness = CycleWitness{{edge.u}, {e}, edge.length};
      }
      continue;
    }
    // Cheap lower bound before running a search without this edge.
    if (edge.length >= best.length) continue;
    PathResult back = shortest_path(g, edge.u, edge.v, e);
    if (!back.reachable()) continue;
    const double total = edge.length + back.length;
    if (total < best.length) {
      best.length = total;
      CycleWitness w;
      w.vertices = std::move(back.vertices);
      w.edges = std::move(back.edges);
      w.edges.push_back(e);
      w.length = total;
      best.witness = std::move(w);
    }
  }
  return best;
}

double brute_force_systole(const MetricGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 12) throw DomainError("brute_force_systole supports at most 12 vertices");
  double best = kUnreachable;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) best = std::min(best, e.length);
  }
  // Every circle through two or more vertices is enumerated from its smallest
  // vertex, extending simple paths through larger vertices only.
  std::vector<char> on_path(n, 0);
  std::function<void(VertexId, VertexId, double, EdgeId, std::size_t)> extend =
      [&](VertexId start, VertexId at, double len, EdgeId first, std::size_t depth) {
        for (EdgeId e : g.incident(at)) {
          const Edge& edge = g.edge(e);
          if (edge.is_loop()) continue;
          const VertexId next = edge.other(at);
          const double total = len + edge.length;
          if (total >= best) continue;
          if (next == start) {
            if (depth >= 2 || e != first) best = total;
            continue;
          }
          if (next < start || on_path[next]) continue;
          on_path[next] = 1;
          extend(start, next, total, depth == 0 ? e : first, depth + 1);
          on_path[next] = 0;
        }
      };
  for (VertexId s = 0; s < n; ++s) {
    on_path[s] = 1;
    extend(s, s, 0.0, kNoEdge, 0);
    on_path[s] = 0;
  }
  return best;
}

Cat1Result is_cat1(const MetricGraph& g, double tol) {
  if (!(tol >= 0.0)) throw DomainError("tolerance must be non-negative");
  Cat1Result out;
  out.systole = systole(g);
  out.pass = out.systole.acyclic() || out.systole.length >= kTwoPi - tol;
  return out;
}

double point_distance(const MetricGraph& g, const std::vector<std::vector<double>>& dist,
                      GraphPoint p, GraphPoint q) {
  const Edge& e = g.edge(p.edge);
  const Edge& f = g.edge(q.edge);
  const double x = p.offset;
  const double y = q.offset;
  double best = std::min({x + dist[e.u][f.u] + y, x + dist[e.u][f.v] + (f.length - y),
                          (e.length - x) + dist[e.v][f.u] + y,
                          (e.length - x) + dist[e.v][f.v] + (f.length - y)});
  if (p.edge == q.edge) {
    const double lo = std::min(x, y);
    const double hi = std::max(x, y);
    best = std::min({best, hi - lo, lo + dist[e.u][e.v] + (e.length - hi)});
  }
  return best;
}

namespace {

// a*x + b*y + c
struct Affine {
  double a;
  double b;
  double c;
  double operator()(double x, double y) const { return a * x + b * y + c; }
};

// Line a*x + b*y = c.
struct Line {
  double a;
  double b;
  double c;
};

struct Candidate {
  double value;
  double x;
  double y;
};

// Exact maximum of min_i f_i over a convex polygon. The maximum of a concave
// piecewise-affine function is attained at a vertex of the arrangement formed
// by the pairwise equality lines f_i = f_j and the polygon boundary.
template <class Inside>
Candidate maximize_min_affine(const std::vector<Affine>& fs, const std::vector<Line>& boundary,
                              Inside inside) {
  std::vector<Line> lines = boundary;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      const Line l{fs[i].a - fs[j].a, fs[i].b - fs[j].b, fs[j].c - fs[i].c};
      if (std::abs(l.a) > 0.0 || std::abs(l.b) > 0.0) lines.push_back(l);
    }
  }
  auto eval = [&](double x, double y) {
    double m = kUnreachable;
    for (const Affine& f : fs) m = std::min(m, f(x, y));
    return m;
  };
  Candidate best{-kUnreachable, 0.0, 0.0};
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Line& l1 = lines[i];
      const Line& l2 = lines[j];
      const double det = l1.a * l2.b - l2.a * l1.b;
      if (std::abs(det) < 1e-14) continue;
      double x = (l1.c * l2.b - l2.c * l1.b) / det;
      double y = (l1.a * l2.c - l2.a * l1.c) / det;
      if (!inside(x, y)) continue;
      const double v = eval(x, y);
      if (v > best.value) best = {v, x, y};
    }
  }
  return best;
}

}  // namespace

DiameterResult diameter(const MetricGraph& g, int resolution) {
  if (resolution < 1) throw DomainError("diameter resolution must be >= 1");
  const std::size_t n = g.vertex_count();
  if (n == 0) throw DomainError("diameter of an empty graph is undefined");
  const auto dist = all_pairs_distances(g);
  for (const auto& row : dist) {
    for (double d : row) {
      if (d == kUnreachable) throw DomainError("diameter requires a connected graph");
    }
  }
  DiameterResult out;
  if (g.edge_count() == 0) return out;

  constexpr double kSlack = 1e-12;
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    const double le = e.length;
    for (EdgeId j = i; j < g.edge_count(); ++j) {
      const Edge& f = g.edge(j);
      const double lf = f.length;
      Candidate c;
      if (i != j) {
        const std::vector<Affine> fs{
            {1.0, 1.0, dist[e.u][f.u]},
            {1.0, -1.0, dist[e.u][f.v] + lf},
            {-1.0, 1.0, le + dist[e.v][f.u]},
            {-1.0, -1.0, le + dist[e.v][f.v] + lf},
        };
        const std::vector<Line> box{{1, 0, 0}, {1, 0, le}, {0, 1, 0}, {0, 1, lf}};
        c = maximize_min_affine(fs, box, [&](double& x, double& y) {
          if (x < -kSlack || x > le + kSlack || y < -kSlack || y > lf + kSlack) return false;
          x = std::clamp(x, 0.0, le);
          y = std::clamp(y, 0.0, lf);
          return true;
        });
      } else {
        // Points x <= y on the same edge: direct route or around through the rest of the graph.
        const std::vector<Affine> fs{{-1.0, 1.0, 0.0}, {1.0, -1.0, dist[e.u][e.v] + le}};
        const std::vector<Line> tri{{1, 0, 0}, {0, 1, le}, {1, -1, 0}};
        c = maximize_min_affine(fs, tri, [&](double& x, double& y) {
          if (x < -kSlack || y > le + kSlack || x > y + kSlack) return false;
          x = std::clamp(x, 0.0, le);
          y = std::clamp(y, x, le);
          return true;
        });
      }
      if (c.value > out.length) out = {c.value, {i, c.x}, {j, c.y}};

      for (int a = 0; a <= resolution; ++a) {
        for (int b = 0; b <= resolution; ++b) {
          const GraphPoint p{i, le * a / resolution};
          const GraphPoint q{j, lf * b / resolution};
          const double d = point_distance(g, dist, p, q);
          if (d > out.length) out = {d, p, q};
        }
      }
    }
  }
  return out;
}

}  // namespace curvlink
