#include "curvlink/verdict.hpp"

#include <algorithm>
#include <cmath>

namespace curvlink {

CurvatureVerdict check(const ArtinDefiningGraph& g, const DeltaAssignment& d, double tol) {
  CurvatureVerdict v;
  v.link = combined_link(g, d);
  const Cat1Result r = is_cat1(v.link, tol);
  v.pass = r.pass;
  v.systole = r.systole.length;
  v.witness = r.systole.witness;
  v.deltas_used = d;
  return v;
}

namespace {

// Shortest edge of the link joining two labelled vertices.
EdgeId edge_between(const MetricGraph& g, VertexId u, VertexId v) {
  std::optional<EdgeId> best;
  for (EdgeId e : g.incident(u)) {
    const Edge& edge = g.edge(e);
    if (edge.other(u) != v || edge.is_loop()) continue;
    if (!best || edge.length < g.edge(*best).length) best = e;
  }
  if (!best) throw DomainError("no edge between " + g.label(u) + " and " + g.label(v));
  return *best;
}

CycleWitness triangle_witness(const MetricGraph& g, const std::array<std::string, 3>& labels) {
  CycleWitness w;
  for (const auto& l : labels) w.vertices.push_back(g.at(l));
  for (std::size_t i = 0; i < 3; ++i) {
    const EdgeId e = edge_between(g, w.vertices[i], w.vertices[(i + 1) % 3]);
    w.edges.push_back(e);
    w.length += g.edge(e).length;
  }
  return w;
}

std::string signed_label(const std::string& x, bool plus) {
  return plus ? plus_label(x) : minus_label(x);
}

}  // namespace

CurvatureVerdict triples_check(const ArtinDefiningGraph& g, const DeltaAssignment& d, double tol) {
  if (!d.triples_eligible(g)) {
    throw ReductionInapplicable("triples reduction needs every alpha and beta >= 90 degrees");
  }
  CurvatureVerdict v;
  v.link = combined_link(g, d);
  v.deltas_used = d;

  std::map<GenPair, DihedralBlock> blocks;
  for (const auto& [pair, m] : g.relations()) {
    blocks.emplace(pair, d.block(g, pair.first, pair.second));
  }

  double best = kUnreachable;
  std::array<std::string, 3> best_labels;
  auto consider = [&](double len, std::array<std::string, 3> labels) {
    if (len < best) {
      best = len;
      best_labels = std::move(labels);
    }
  };

  // Triangles inside one block: x+ y+ y- uses alpha, the chord and beta.
  for (const auto& [pair, b] : blocks) {
    const auto& x = g.generator(pair.first);
    const auto& y = g.generator(pair.second);
    consider(b.alpha().rad() + b.beta().rad() + kPi, {plus_label(x), plus_label(y), minus_label(y)});
  }

  // Triangles x^e y^f z^h across three pairwise related generators. The edge
  // between two generators is alpha when the signs agree and beta otherwise.
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto bij = blocks.find({i, j});
      if (bij == blocks.end()) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        auto bjk = blocks.find({j, k});
        auto bik = blocks.find({i, k});
        if (bjk == blocks.end() || bik == blocks.end()) continue;
        for (int mask = 0; mask < 4; ++mask) {
          // First sign fixed to +; the all-flipped triangle has equal length.
          const bool si = true;
          const bool sj = mask & 1;
          const bool sk = mask & 2;
          auto side = [](const DihedralBlock& b, bool s1, bool s2) {
            return s1 == s2 ? b.alpha().rad() : b.beta().rad();
          };
          const double len = side(bij->second, si, sj) + side(bjk->second, sj, sk) +
                             side(bik->second, si, sk);
          consider(len, {signed_label(g.generator(i), si), signed_label(g.generator(j), sj),
                         signed_label(g.generator(k), sk)});
        }
      }
    }
  }

  v.systole = best;
  v.pass = best >= kTwoPi - tol;
  if (best < kUnreachable) v.witness = triangle_witness(v.link, best_labels);
  return v;
}

bool finite_type(int m, int n, int p) {
  // 1/m + 1/n + 1/p > 1  <=>  np + mp + mn > mnp
  const long long a = m, b = n, c = p;
  return b * c + a * c + a * b > a * b * c;
}

std::vector<ThresholdRow> enumerate_amn2(int m_max, const std::vector<int>& n_values, double tol) {
  std::vector<ThresholdRow> rows;
  for (int n : n_values) {
    if (n < 2) throw DomainError("relator index n must be >= 2");
    ThresholdRow row;
    row.n = n;
    row.required_alpha = Angle::radians(kTwoPi - kPi / 2.0) - DihedralBlock::symmetric(n).alpha();
    for (int m = std::max(3, n); m <= m_max; ++m) {
      const auto g = ArtinDefiningGraph::triangle(m, n, 2);
      if (is_cat1(combined_link(g, DeltaAssignment::symmetric(g)), tol).pass) {
        row.minimal_m = m;
        break;
      }
      row.failing_m.push_back(m);
      if (finite_type(m, n, 2)) ++row.finite_type_failures;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Triple> excluded_triples(int max_index, double tol) {
  if (max_index < 2) throw DomainError("max_index must be >= 2");
  std::vector<Triple> out;
  for (int m1 = 2; m1 <= max_index; ++m1) {
    for (int m2 = 2; m2 <= m1; ++m2) {
      for (int m3 = 2; m3 <= m2; ++m3) {
        const auto g = ArtinDefiningGraph::triangle(m1, m2, m3);
        if (!is_cat1(combined_link(g, DeltaAssignment::symmetric(g)), tol).pass) {
          out.push_back({m1, m2, m3});
        }
      }
    }
  }
  return out;
}

Envelope alpha_plus_two_beta_envelope(int m, double step_deg) {
  if (!(step_deg > 0.0 && step_deg < 90.0)) throw DomainError("envelope step must lie in (0, 90)");
  Envelope env;
  env.m = m;
  env.step_deg = step_deg;
  env.max_value_deg = -kUnreachable;
  for (long k = 1;; ++k) {
    const double alpha = 90.0 + static_cast<double>(k) * step_deg;
    if (alpha >= 180.0 - 1e-12) break;
    const double value = alpha + 2.0 * beta_of(m, Angle::degrees(alpha / 2.0)).deg();
    env.samples_deg.emplace_back(alpha, value);
    if (value > env.max_value_deg) {
      env.max_value_deg = value;
      env.argmax_alpha_deg = alpha;
    }
  }
  // Endpoint limits: beta -> theta as alpha -> 180, beta -> beta(45 deg) as alpha -> 90.
  const double upper = 180.0 + 2.0 * theta_of(m).deg();
  const double lower = 90.0 + 2.0 * beta_of(m, Angle::degrees(45.0)).deg();
  env.supremum_deg = std::max({env.max_value_deg, upper, lower});
  env.margin_deg = 360.0 - env.max_value_deg;
  return env;
}

double link_slack(const ArtinDefiningGraph& g, const DeltaAssignment& d) {
  return systole(combined_link(g, d)).length - kTwoPi;
}

}  // namespace curvlink
