#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvlink/angle.hpp"
#include "curvlink/dihedral.hpp"
#include "curvlink/metric_graph.hpp"

namespace curvlink {

/// Relator index m_ij; std::nullopt encodes infinity (no relation).
using RelatorIndex = std::optional<int>;

/// Unordered generator pair, stored with first < second.
using GenPair = std::pair<std::size_t, std::size_t>;

GenPair make_pair_key(std::size_t i, std::size_t j);

/// Generators and relator indices of an Artin group. Pairs without an index
/// are unrelated (infinite index).
class ArtinDefiningGraph {
 public:
  ArtinDefiningGraph() = default;
  explicit ArtinDefiningGraph(std::vector<std::string> generators);

  /// A(m,n,p) on generators a, b, c with m = m_ab, n = m_bc, p = m_ac.
  static ArtinDefiningGraph triangle(RelatorIndex m, RelatorIndex n, RelatorIndex p);

  std::size_t add_generator(std::string label);
  /// Sets m_ij; nullopt removes the relation. Finite indices must be >= 2.
  void set_index(std::size_t i, std::size_t j, RelatorIndex m);
  void set_index(const std::string& a, const std::string& b, RelatorIndex m);

  RelatorIndex index(std::size_t i, std::size_t j) const;
  std::size_t size() const { return generators_.size(); }
  const std::string& generator(std::size_t i) const { return generators_.at(i); }
  const std::vector<std::string>& generators() const { return generators_; }
  std::size_t generator_id(const std::string& label) const;

  /// Pairs with a finite index, in lexicographic order.
  const std::map<GenPair, int>& relations() const { return relations_; }

 private:
  std::vector<std::string> generators_;
  std::map<GenPair, int> relations_;
};

/// Per-relation metric parameter delta. Pairs with index 2 always use the
/// flat torus (generator angle pi/2) regardless of any stored value.
class DeltaAssignment {
 public:
  /// delta_ij = symmetric_alpha(m_ij) / 2 for every finite pair.
  static DeltaAssignment symmetric(const ArtinDefiningGraph& g);

  void set(std::size_t i, std::size_t j, Angle delta);
  std::optional<Angle> get(std::size_t i, std::size_t j) const;
  const std::map<GenPair, Angle>& values() const { return deltas_; }

  /// Block for the pair under this assignment; throws DomainError when a
  /// pair with index >= 3 has no delta.
  DihedralBlock block(const ArtinDefiningGraph& g, std::size_t i, std::size_t j) const;

  /// True when every block has alpha, beta >= pi/2 - tol.
  bool triples_eligible(const ArtinDefiningGraph& g, double tol = kDefaultTol) const;

 private:
  std::map<GenPair, Angle> deltas_;
};

inline std::string plus_label(const std::string& x) { return x + "+"; }
inline std::string minus_label(const std::string& x) { return x + "-"; }

/// Schematic link of one block: K4 on {a+, a-, b+, b-} with
/// a+b+ = a-b- = alpha, a+b- = a-b+ = beta and antipodal chords a+a-, b+b- of
/// length pi. For m = 2 this is the circle a+ c+ a- c- of quarter arcs plus
/// the two chords.
MetricGraph block_link(int m, Angle delta, const std::string& a = "a", const std::string& b = "b");
MetricGraph block_link(const DihedralBlock& block, const std::string& a = "a",
                       const std::string& b = "b");

/// Vertex link of the glued complex: the union of the block links over all
/// finite pairs, identified along x+ and x- labels, with one antipodal chord
/// per generator.
MetricGraph combined_link(const ArtinDefiningGraph& g, const DeltaAssignment& d);

struct LGraphParams {
  Angle rho;
  Angle sigma;
  int n_r = 1;  // H(r)-arcs joining r+ and r-
  int n_s = 1;  // H(s)-arcs joining s+ and s-
};

/// Two circles of circumference 2pi sharing an arc z+ .. z- of length pi,
/// carrying antipodal pairs r+-, s+- at offsets rho and sigma, plus n_r and
/// n_s extra arcs of length pi across those pairs. Vertex labels are
/// "z+", "z-", "r+", "r-", "s+", "s-".
MetricGraph l_graph(const LGraphParams& p);

/// pi + min(rho + sigma, pi - rho, pi - sigma).
double l_graph_diameter_formula(Angle rho, Angle sigma);

}  // namespace curvlink
