#include <algorithm>
#include <cmath>
#include <set>

#include "curvlink/verdict.hpp"

namespace curvlink {

namespace {

// Search box for delta, in degrees. The open interval (0, 90) is closed off a
// little inside its endpoints.
constexpr double kDeltaLoDeg = 1e-3;
constexpr double kDeltaHiDeg = 90.0 - 1e-3;
constexpr double kCoarsestLevelDeg = 8.0;
constexpr double kRefineFloorDeg = 1e-6;
constexpr double kImprovement = 1e-13;
constexpr int kMaxSweeps = 40;
// Above this many related pairs, diagonal moves use tied groups only.
constexpr std::size_t kPairwiseLimit = 8;

class Search {
 public:
  Search(const ArtinDefiningGraph& g, std::vector<GenPair> pairs)
      : g_(g), pairs_(std::move(pairs)) {
    std::set<int> ms;
    for (const auto& p : pairs_) ms.insert(*g_.index(p.first, p.second));
    distinct_m_.assign(ms.begin(), ms.end());
  }

  // x holds one delta (degrees) per entry of pairs_.
  double slack(const std::vector<double>& x) {
    ++evaluations;
    DeltaAssignment d = base_;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      d.set(pairs_[i].first, pairs_[i].second, Angle::degrees(x[i]));
    }
    return link_slack(g_, d);
  }

  DeltaAssignment assignment(const std::vector<double>& x) const {
    DeltaAssignment d = base_;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      d.set(pairs_[i].first, pairs_[i].second, Angle::degrees(x[i]));
    }
    return d;
  }

  void set_base(DeltaAssignment base) { base_ = std::move(base); }

  // Sweeps over groups of coordinates moved together; group members get the
  // same delta. Accepts only strict improvements.
  void grid_sweeps(std::vector<double>& x, double& value, double h,
                   const std::vector<std::vector<std::size_t>>& groups) {
    const long count = static_cast<long>(std::ceil(90.0 / h));
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      bool improved = false;
      for (const auto& group : groups) {
        std::vector<double> best_x = x;
        double best = value;
        std::vector<double> trial = x;
        for (long k = 1; k < count; ++k) {
          const double delta = static_cast<double>(k) * h;
          if (delta < kDeltaLoDeg || delta > kDeltaHiDeg) continue;
          for (std::size_t i : group) trial[i] = delta;
          const double v = slack(trial);
          if (v > best + kImprovement) {
            best = v;
            best_x = trial;
          }
        }
        if (best > value + kImprovement) {
          x = std::move(best_x);
          value = best;
          improved = true;
        }
      }
      if (!improved) break;
    }
  }

  // Compass search with step halving. Directions are the given groups moved
  // together, plus every signed combination of two groups: at a kink where two
  // cycles tie, only such diagonal moves can lengthen both.
  void refine(std::vector<double>& x, double& value, double h,
              const std::vector<std::vector<std::size_t>>& groups) {
    std::vector<std::vector<double>> dirs;
    const std::size_t n = x.size();
    auto unit = [&](std::size_t gi) {
      std::vector<double> d(n, 0.0);
      for (std::size_t i : groups[gi]) d[i] = 1.0;
      return d;
    };
    for (std::size_t a = 0; a < groups.size(); ++a) {
      const auto da = unit(a);
      for (double s : {1.0, -1.0}) {
        std::vector<double> d = da;
        for (double& c : d) c *= s;
        dirs.push_back(d);
      }
      for (std::size_t b = a + 1; b < groups.size(); ++b) {
        const auto db = unit(b);
        for (double sa : {1.0, -1.0}) {
          for (double sb : {1.0, -1.0}) {
            std::vector<double> d(n);
            for (std::size_t i = 0; i < n; ++i) d[i] = sa * da[i] + sb * db[i];
            dirs.push_back(d);
          }
        }
      }
    }
    for (double step = h / 2.0; step >= kRefineFloorDeg; step /= 2.0) {
      bool moved = true;
      int guard = 0;
      while (moved && guard++ < 200) {
        moved = false;
        for (const auto& d : dirs) {
          std::vector<double> trial = x;
          for (std::size_t i = 0; i < n; ++i) {
            trial[i] = std::clamp(x[i] + d[i] * step, kDeltaLoDeg, kDeltaHiDeg);
          }
          if (trial == x) continue;
          const double v = slack(trial);
          if (v > value + kImprovement) {
            x = std::move(trial);
            value = v;
            moved = true;
          }
        }
      }
    }
  }

  std::vector<std::vector<std::size_t>> tied_groups() const {
    std::vector<std::vector<std::size_t>> groups;
    for (int m : distinct_m_) {
      std::vector<std::size_t> group;
      for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (*g_.index(pairs_[i].first, pairs_[i].second) == m) group.push_back(i);
      }
      groups.push_back(std::move(group));
    }
    return groups;
  }

  std::vector<std::vector<std::size_t>> single_groups() const {
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < pairs_.size(); ++i) groups.push_back({i});
    return groups;
  }

  std::size_t evaluations = 0;

 private:
  const ArtinDefiningGraph& g_;
  std::vector<GenPair> pairs_;
  std::vector<int> distinct_m_;
  DeltaAssignment base_;
};

std::vector<Envelope> envelopes_for(const ArtinDefiningGraph& g, const MetricGraph& link,
                                    const std::optional<CycleWitness>& cycle) {
  std::vector<Envelope> out;
  if (!cycle) return out;
  std::set<int> ms;
  auto generator_of = [&](VertexId v) {
    const std::string& l = link.label(v);
    return g.generator_id(l.substr(0, l.size() - 1));
  };
  for (EdgeId e : cycle->edges) {
    const Edge& edge = link.edge(e);
    const std::size_t a = generator_of(edge.u);
    const std::size_t b = generator_of(edge.v);
    if (a == b) continue;
    if (auto m = g.index(a, b); m && *m >= 3) ms.insert(*m);
  }
  for (int m : ms) out.push_back(alpha_plus_two_beta_envelope(m, 0.01));
  return out;
}

}  // namespace

SolveResult solve_deltas(const ArtinDefiningGraph& g, SolveMode mode, Angle grid_step, double tol) {
  const double h = grid_step.deg();
  if (!(h > 0.0 && h < 90.0)) throw DomainError("grid step must lie in (0, 90) degrees");

  const DeltaAssignment sym = DeltaAssignment::symmetric(g);
  std::vector<GenPair> pairs;
  for (const auto& [pair, m] : g.relations()) {
    if (m >= 3) pairs.push_back(pair);
  }

  Search search(g, pairs);
  search.set_base(sym);

  std::vector<double> best_x;
  for (const auto& p : pairs) best_x.push_back(sym.get(p.first, p.second)->deg());
  double best = search.slack(best_x);

  if (mode == SolveMode::free && !pairs.empty()) {
    std::vector<double> levels;
    double top = h;
    while (top * 2.0 <= kCoarsestLevelDeg) top *= 2.0;
    for (double l = top; l >= h * 0.999; l /= 2.0) levels.push_back(l);

    std::vector<std::vector<double>> seeds{best_x};
    for (double t : {10.0, 20.0, 30.0, 40.0, 50.0, 60.0, 70.0, 80.0, 85.0}) {
      seeds.emplace_back(pairs.size(), t);
    }
    const auto tied = search.tied_groups();
    const auto single = search.single_groups();
    for (auto x : seeds) {
      double value = search.slack(x);
      for (double level : levels) {
        search.grid_sweeps(x, value, level, tied);
        search.grid_sweeps(x, value, level, single);
        search.refine(x, value, level, tied);
        search.refine(x, value, level, pairs.size() <= kPairwiseLimit ? single : tied);
      }
      if (value > best + kImprovement) {
        best = value;
        best_x = x;
      }
    }
  }

  SolveResult out;
  out.deltas = search.assignment(best_x);
  out.link = combined_link(g, out.deltas);
  const SystoleResult sys = systole(out.link);
  out.slack = sys.length - kTwoPi;
  out.binding_cycle = sys.witness;
  out.feasible = out.slack >= -tol;
  out.evaluations = search.evaluations;
  if (!out.feasible) out.envelopes = envelopes_for(g, out.link, out.binding_cycle);
  return out;
}

}  // namespace curvlink
