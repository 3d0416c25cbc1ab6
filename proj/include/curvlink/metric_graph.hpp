#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "curvlink/angle.hpp"

namespace curvlink {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  VertexId u;
  VertexId v;
  double length;  // radians
  std::string tag;
  bool shared = false;

  bool is_loop() const { return u == v; }
  VertexId other(VertexId w) const { return w == u ? v : u; }
};

/// Finite metric graph with labelled vertices. Parallel edges and self-loops
/// are allowed; every edge has a finite positive length.
class MetricGraph {
 public:
  /// Adds a vertex, or returns the id of an existing vertex with that label.
  VertexId add_vertex(std::string_view label);

  /// Adds an edge between labelled vertices (created on demand).
  ///
  /// When `shared` is set and an edge already exists with the same endpoints,
  /// the same length and the shared flag, the two are the same geometric arc
  /// and no new edge is added; the id of the existing edge is returned.
  EdgeId add_edge(std::string_view u, std::string_view v, double length, std::string tag = {},
                  bool shared = false);
  EdgeId add_edge(VertexId u, VertexId v, double length, std::string tag = {}, bool shared = false);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  std::optional<VertexId> find(std::string_view label) const;
  /// Throws DomainError for unknown labels.
  VertexId at(std::string_view label) const;

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Ids of edges incident to v; a self-loop appears once.
  const std::vector<EdgeId>& incident(VertexId v) const { return incidence_.at(v); }

  double max_edge_length() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

struct PathResult {
  double length = kUnreachable;
  std::vector<VertexId> vertices;  // u ... v; empty when unreachable
  std::vector<EdgeId> edges;

  bool reachable() const { return !vertices.empty(); }
};

/// Closed walk that is an embedded circle: no repeated vertex except the
/// basepoint and no repeated edge.
struct CycleWitness {
  std::vector<VertexId> vertices;  // v0 v1 ... v_{k-1}; edge i joins v_i and v_{i+1 mod k}
  std::vector<EdgeId> edges;
  double length = 0.0;
};

/// Single-source distances; `skip` removes one edge from consideration.
std::vector<double> distances_from(const MetricGraph& g, VertexId source,
                                   std::optional<EdgeId> skip = std::nullopt);

/// All-pairs vertex distances (kUnreachable between components).
std::vector<std::vector<double>> all_pairs_distances(const MetricGraph& g);

PathResult shortest_path(const MetricGraph& g, VertexId u, VertexId v,
                         std::optional<EdgeId> skip = std::nullopt);
PathResult shortest_path(const MetricGraph& g, std::string_view u, std::string_view v);

struct SystoleResult {
  double length = kUnreachable;
  std::optional<CycleWitness> witness;  // empty for forests

  bool acyclic() const { return !witness.has_value(); }
};

/// Length of the shortest embedded circle, with a witness.
SystoleResult systole(const MetricGraph& g);

/// Exhaustive enumeration of embedded circles; test oracle for systole().
/// Throws DomainError for graphs with more than 12 vertices.
double brute_force_systole(const MetricGraph& g);

struct Cat1Result {
  bool pass = true;
  SystoleResult systole;
};

/// A graph is CAT(1) iff every embedded circle has length >= 2pi.
Cat1Result is_cat1(const MetricGraph& g, double tol = kDefaultTol);

/// A point of the graph: position `offset` along edge `edge` measured from
/// its `u` endpoint.
struct GraphPoint {
  EdgeId edge = 0;
  double offset = 0.0;
};

struct DiameterResult {
  double length = 0.0;
  GraphPoint p;
  GraphPoint q;
};

/// Diameter over all points of the graph, edge interiors included.
///
/// For each pair of edges the distance between interior points is the minimum
/// of the affine functions obtained by routing through each endpoint pair (and
/// the direct route along a shared edge). Its maximum over the parameter
/// rectangle is found exactly by evaluating every vertex of the arrangement of
/// those functions; `resolution` additionally samples each edge at
/// `resolution` evenly spaced points as a cross-check.
/// Throws DomainError when the graph is disconnected or resolution < 1.
DiameterResult diameter(const MetricGraph& g, int resolution = 16);

/// Distance between two points of the graph.
double point_distance(const MetricGraph& g, const std::vector<std::vector<double>>& dist,
                      GraphPoint p, GraphPoint q);

}  // namespace curvlink
