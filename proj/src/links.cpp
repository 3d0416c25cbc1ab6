#include "curvlink/links.hpp"

#include <algorithm>
#include <cmath>

namespace curvlink {

GenPair make_pair_key(std::size_t i, std::size_t j) {
  if (i == j) throw DomainError("a relation needs two distinct generators");
  return i < j ? GenPair{i, j} : GenPair{j, i};
}

ArtinDefiningGraph::ArtinDefiningGraph(std::vector<std::string> generators) {
  for (auto& g : generators) add_generator(std::move(g));
}

ArtinDefiningGraph ArtinDefiningGraph::triangle(RelatorIndex m, RelatorIndex n, RelatorIndex p) {
  ArtinDefiningGraph g({"a", "b", "c"});
  g.set_index(0, 1, m);
  g.set_index(1, 2, n);
  g.set_index(0, 2, p);
  return g;
}

std::size_t ArtinDefiningGraph::add_generator(std::string label) {
  if (label.empty()) throw DomainError("generator labels must be non-empty");
  if (std::find(generators_.begin(), generators_.end(), label) != generators_.end()) {
    throw DomainError("duplicate generator '" + label + "'");
  }
  generators_.push_back(std::move(label));
  return generators_.size() - 1;
}

void ArtinDefiningGraph::set_index(std::size_t i, std::size_t j, RelatorIndex m) {
  if (i >= size() || j >= size()) throw DomainError("generator index out of range");
  const GenPair key = make_pair_key(i, j);
  if (!m) {
    relations_.erase(key);
    return;
  }
  if (*m < 2) throw DomainError("finite relator indices must be >= 2, got " + std::to_string(*m));
  relations_[key] = *m;
}

void ArtinDefiningGraph::set_index(const std::string& a, const std::string& b, RelatorIndex m) {
  set_index(generator_id(a), generator_id(b), m);
}

RelatorIndex ArtinDefiningGraph::index(std::size_t i, std::size_t j) const {
  if (auto it = relations_.find(make_pair_key(i, j)); it != relations_.end()) return it->second;
  return std::nullopt;
}

std::size_t ArtinDefiningGraph::generator_id(const std::string& label) const {
  auto it = std::find(generators_.begin(), generators_.end(), label);
  if (it == generators_.end()) throw DomainError("unknown generator '" + label + "'");
  return static_cast<std::size_t>(it - generators_.begin());
}

DeltaAssignment DeltaAssignment::symmetric(const ArtinDefiningGraph& g) {
  DeltaAssignment d;
  for (const auto& [pair, m] : g.relations()) {
    d.deltas_[pair] = DihedralBlock::symmetric(m).delta();
  }
  return d;
}

void DeltaAssignment::set(std::size_t i, std::size_t j, Angle delta) {
  if (!(delta.rad() > 0.0 && delta.rad() < kPi / 2.0)) {
    throw DomainError("delta must lie in (0, 90) degrees");
  }
  deltas_[make_pair_key(i, j)] = delta;
}

std::optional<Angle> DeltaAssignment::get(std::size_t i, std::size_t j) const {
  if (auto it = deltas_.find(make_pair_key(i, j)); it != deltas_.end()) return it->second;
  return std::nullopt;
}

DihedralBlock DeltaAssignment::block(const ArtinDefiningGraph& g, std::size_t i, std::size_t j) const {
  const RelatorIndex m = g.index(i, j);
  if (!m) throw DomainError("pair " + g.generator(i) + "," + g.generator(j) + " has no relation");
  if (*m == 2) return DihedralBlock::symmetric(2);
  const auto delta = get(i, j);
  if (!delta) {
    throw DomainError("missing delta for pair " + g.generator(i) + "," + g.generator(j));
  }
  return DihedralBlock(*m, *delta);
}

bool DeltaAssignment::triples_eligible(const ArtinDefiningGraph& g, double tol) const {
  for (const auto& [pair, m] : g.relations()) {
    const DihedralBlock b = block(g, pair.first, pair.second);
    if (b.alpha().rad() < kPi / 2.0 - tol || b.beta().rad() < kPi / 2.0 - tol) return false;
  }
  return true;
}

namespace {

void add_block_edges(MetricGraph& g, const DihedralBlock& block, const std::string& a,
                     const std::string& b) {
  const std::string ab = a + b;
  const double alpha = block.alpha().rad();
  const double beta = block.beta().rad();
  g.add_edge(plus_label(a), plus_label(b), alpha, "alpha_" + ab);
  g.add_edge(minus_label(a), minus_label(b), alpha, "alpha_" + ab);
  g.add_edge(plus_label(a), minus_label(b), beta, "beta_" + ab);
  g.add_edge(minus_label(a), plus_label(b), beta, "beta_" + ab);
  g.add_edge(plus_label(a), minus_label(a), kPi, "chord_" + a, true);
  g.add_edge(plus_label(b), minus_label(b), kPi, "chord_" + b, true);
}

}  // namespace

MetricGraph block_link(const DihedralBlock& block, const std::string& a, const std::string& b) {
  MetricGraph g;
  for (const auto& x : {a, b}) {
    g.add_vertex(plus_label(x));
    g.add_vertex(minus_label(x));
  }
  add_block_edges(g, block, a, b);
  return g;
}

MetricGraph block_link(int m, Angle delta, const std::string& a, const std::string& b) {
  if (m == 2) return block_link(DihedralBlock::symmetric(2), a, b);
  return block_link(DihedralBlock(m, delta), a, b);
}

MetricGraph combined_link(const ArtinDefiningGraph& g, const DeltaAssignment& d) {
  MetricGraph out;
  for (const auto& x : g.generators()) {
    out.add_vertex(plus_label(x));
    out.add_vertex(minus_label(x));
  }
  for (const auto& [pair, m] : g.relations()) {
    add_block_edges(out, d.block(g, pair.first, pair.second), g.generator(pair.first),
                    g.generator(pair.second));
  }
  return out;
}

MetricGraph l_graph(const LGraphParams& p) {
  const double rho = p.rho.rad();
  const double sigma = p.sigma.rad();
  if (!(rho > 0.0 && sigma > 0.0 && rho + sigma < kPi)) {
    throw DomainError("L-graph needs rho, sigma > 0 and rho + sigma < 180 degrees");
  }
  if (p.n_r < 0 || p.n_r > 2 || p.n_s < 0 || p.n_s > 2) {
    throw DomainError("L-graph arc counts must be 0, 1 or 2");
  }
  MetricGraph g;
  for (const char* v : {"z+", "z-", "r+", "r-", "s+", "s-"}) g.add_vertex(v);
  // Shared arc z+ -> r+ -> s- -> z-.
  g.add_edge("z+", "r+", rho, "shared");
  g.add_edge("r+", "s-", kPi - rho - sigma, "shared");
  g.add_edge("s-", "z-", sigma, "shared");
  // Free half of C_r: z+ -> r- -> z-, with r- antipodal to r+.
  g.add_edge("z+", "r-", kPi - rho, "free_r");
  g.add_edge("r-", "z-", rho, "free_r");
  // Free half of C_s: z+ -> s+ -> z-, with s+ antipodal to s-.
  g.add_edge("z+", "s+", sigma, "free_s");
  g.add_edge("s+", "z-", kPi - sigma, "free_s");
  for (int i = 0; i < p.n_r; ++i) g.add_edge("r+", "r-", kPi, "H(r)");
  for (int i = 0; i < p.n_s; ++i) g.add_edge("s+", "s-", kPi, "H(s)");
  return g;
}

double l_graph_diameter_formula(Angle rho, Angle sigma) {
  const double r = rho.rad();
  const double s = sigma.rad();
  if (!(r > 0.0 && s > 0.0 && r + s < kPi)) {
    throw DomainError("formula needs rho, sigma > 0 and rho + sigma < 180 degrees");
  }
  return kPi + std::min({r + s, kPi - r, kPi - s});
}

}  // namespace curvlink
