#pragma once

#include <array>
#include <optional>
#include <vector>

#include "curvlink/links.hpp"
#include "curvlink/metric_graph.hpp"

namespace curvlink {

struct CurvatureVerdict {
  bool pass = true;
  double systole = kUnreachable;  // radians; infinity when the link is a forest
  std::optional<CycleWitness> witness;
  MetricGraph link;  // graph the witness refers to
  DeltaAssignment deltas_used;
};

/// Link condition for the complex glued from the blocks of g under d.
CurvatureVerdict check(const ArtinDefiningGraph& g, const DeltaAssignment& d,
                       double tol = kDefaultTol);

/// Raised by triples_check when some alpha or beta is below pi/2.
class ReductionInapplicable : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Same verdict as check() when every block has alpha, beta >= pi/2: only
/// triangles a^e b^f c^g over triples of pairwise related generators (and the
/// block-internal triangles) can be shorter than 2pi. The witness, when
/// present, refers to the combined link.
CurvatureVerdict triples_check(const ArtinDefiningGraph& g, const DeltaAssignment& d,
                               double tol = kDefaultTol);

/// True iff A(m,n,p) is of finite (spherical) type: 1/m + 1/n + 1/p > 1.
bool finite_type(int m, int n, int p);

struct ThresholdRow {
  int n = 0;
  std::optional<int> minimal_m;    // empty when no m <= m_max passes
  Angle required_alpha;            // 2pi - pi/2 - alpha(n)
  std::vector<int> failing_m;      // scanned m values that fail
  int finite_type_failures = 0;    // failing m with A(m,n,2) of finite type
};

/// Least m >= max(3, n) for which A(m,n,2) passes under the symmetric model.
/// Scanning from n lists each unordered pair {m, n} once.
std::vector<ThresholdRow> enumerate_amn2(int m_max, const std::vector<int>& n_values,
                                         double tol = kDefaultTol);

using Triple = std::array<int, 3>;  // sorted, largest first

/// Triples m1 >= m2 >= m3 >= 2 of finite indices <= max_index whose
/// three-block link fails under the symmetric model.
std::vector<Triple> excluded_triples(int max_index, double tol = kDefaultTol);

/// Sampled alpha -> alpha + 2 beta(alpha) over the open interval (90, 180)
/// degrees for one relator index: the binding constraint when a triple
/// {m, m, m} is glued from identical blocks.
struct Envelope {
  int m = 0;
  double step_deg = 0.0;
  std::vector<std::pair<double, double>> samples_deg;  // (alpha, alpha + 2 beta)
  double max_value_deg = 0.0;
  double argmax_alpha_deg = 0.0;
  double supremum_deg = 0.0;  // limit as alpha -> 180
  double margin_deg = 0.0;    // 360 - max_value_deg
};

Envelope alpha_plus_two_beta_envelope(int m, double step_deg = 0.01);

enum class SolveMode { symmetric, free };

struct SolveResult {
  bool feasible = false;
  double slack = 0.0;  // systole - 2pi of the best link found, radians
  DeltaAssignment deltas;
  std::optional<CycleWitness> binding_cycle;
  MetricGraph link;
  std::vector<Envelope> envelopes;  // filled when infeasible
  std::size_t evaluations = 0;
};

/// Searches delta assignments maximizing systole - 2pi of the combined link.
///
/// Free mode runs a sequence of levels with grid spacings
/// grid_step * 2^k (k descending to 0, coarsest <= 8 degrees) from a fixed
/// set of seeds. Each level does coordinate grid sweeps, first with one delta
/// per distinct relator index, then per pair, followed by a compass-search
/// refinement that also tries signed pairs of directions; every move must
/// strictly improve the slack. Halving grid_step
/// only appends a level, so the returned slack never decreases.
SolveResult solve_deltas(const ArtinDefiningGraph& g, SolveMode mode, Angle grid_step,
                         double tol = kDefaultTol);

/// Slack (systole - 2pi) of the combined link; +infinity for forests.
double link_slack(const ArtinDefiningGraph& g, const DeltaAssignment& d);

}  // namespace curvlink
