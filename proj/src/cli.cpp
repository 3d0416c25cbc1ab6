#include "curvlink/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "curvlink/coxeter.hpp"
#include "curvlink/dihedral.hpp"
#include "curvlink/io.hpp"
#include "curvlink/verdict.hpp"

namespace curvlink::cli {

using io::json;

std::vector<int> parse_int_list(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string item;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw io::InputError("bad integer '" + s + "' in list '" + spec + "'");
    }
    if (used != s.size()) throw io::InputError("bad integer '" + s + "' in list '" + spec + "'");
    return v;
  };
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (const auto dots = item.find(".."); dots != std::string::npos) {
      const int lo = to_int(item.substr(0, dots));
      const int hi = to_int(item.substr(dots + 2));
      if (hi < lo) throw io::InputError("empty range '" + item + "'");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(to_int(item));
    }
  }
  if (out.empty()) throw io::InputError("empty integer list '" + spec + "'");
  return out;
}

namespace {

std::string fixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

json report(const std::string& command, json params, double tol) {
  return {{"command", command}, {"version", kVersion}, {"params", std::move(params)},
          {"tolerance", tol}};
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double default_tolerance() {
  if (const char* env = std::getenv("CURVLINK_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v >= 0.0)) {
      throw io::InputError(std::string("CURVLINK_TOL is not a non-negative number: ") + env);
    }
    return v;
  }
  return kDefaultTol;
}

std::optional<int> parse_index(const std::string& s) {
  if (s == "inf" || s == "infinity") return std::nullopt;
  const auto v = parse_int_list(s);
  if (v.size() != 1) throw io::InputError("bad relator index '" + s + "'");
  return v.front();
}

DeltaAssignment load_deltas(const ArtinDefiningGraph& g, const std::string& spec) {
  if (spec == "auto" || spec == "symmetric") return DeltaAssignment::symmetric(g);
  return io::deltas_from_json(g, io::read_json_file(spec));
}

json verdict_json(const CurvatureVerdict& v, const ArtinDefiningGraph& g) {
  json out{{"pass", v.pass},
           {"systole_deg", number_or_null(rad_to_deg(v.systole))},
           {"systole_rad", number_or_null(v.systole)},
           {"deltas", io::deltas_to_json(g, v.deltas_used)}};
  if (v.witness) out["witness"] = io::witness_to_json(v.link, *v.witness);
  return out;
}

json envelope_json(const Envelope& e) {
  return {{"m", e.m},
          {"step_deg", e.step_deg},
          {"max_alpha_plus_2beta_deg", e.max_value_deg},
          {"argmax_alpha_deg", e.argmax_alpha_deg},
          {"supremum_deg", e.supremum_deg},
          {"margin_below_360_deg", e.margin_deg}};
}

struct Options {
  double tol = kDefaultTol;
  std::optional<double> tol_flag;
  // table1
  std::string m_list = "3..13,18,19,21,22,43,44";
  std::string format = "csv";
  int precision = 3;
  // block-link
  int m = 3;
  std::optional<double> delta_deg;
  // check / triples-check / solve-deltas
  std::string input;
  std::string deltas = "auto";
  double grid_deg = 0.5;
  std::string mode = "free";
  // enumerate / excluded-triples
  std::string family = "amn2";
  int m_max = 60;
  std::string n_list = "3..8";
  bool csv = false;
  bool json_flag = false;
  int max_index = 60;
  // diam-l
  double rho_deg = 60.0;
  double sigma_deg = 60.0;
  int n_r = 1;
  int n_s = 1;
  int resolution = 16;
  // coxeter-order
  std::string indices = "3,3,3";
  std::string word = "abc";
  long cap = 10000;
};

int cmd_table1(const Options& o, std::ostream& out) {
  const auto ms = parse_int_list(o.m_list);
  const auto rows = table1(ms);
  if (o.format == "json") {
    json doc = report("table1", {{"m", ms}, {"precision", o.precision}}, o.tol);
    doc["rows"] = json::array();
    for (const auto& r : rows) {
      doc["rows"].push_back({{"m", r.m},
                             {"theta_deg", r.theta_deg},
                             {"theta_rad", deg_to_rad(r.theta_deg)},
                             {"cos_theta", r.cos_theta},
                             {"cos_alpha", r.cos_alpha},
                             {"alpha_deg", r.alpha_deg},
                             {"alpha_rad", deg_to_rad(r.alpha_deg)}});
    }
    out << doc.dump(2) << "\n";
    return 0;
  }
  if (o.format != "csv") throw io::InputError("unknown format '" + o.format + "'");
  out << "m,theta_deg,cos_theta,cos_alpha,alpha_deg\n";
  for (const auto& r : rows) {
    out << r.m << ',' << fixed(r.theta_deg, o.precision) << ','
        << fixed(r.cos_theta, o.precision + 1) << ',' << fixed(r.cos_alpha, o.precision + 1) << ','
        << fixed(r.alpha_deg, o.precision) << '\n';
  }
  return 0;
}

int cmd_block_link(const Options& o, std::ostream& out) {
  const DihedralBlock block =
      (o.delta_deg && o.m != 2) ? DihedralBlock(o.m, Angle::degrees(*o.delta_deg))
                                : DihedralBlock::symmetric(o.m);
  const MetricGraph g = block_link(block);
  const Cat1Result r = is_cat1(g, o.tol);
  json doc = report("block-link", {{"m", o.m}, {"delta_deg", block.delta().deg()}}, o.tol);
  doc["theta_deg"] = block.theta().deg();
  doc["alpha_deg"] = block.alpha().deg();
  doc["beta_deg"] = block.beta().deg();
  doc["alpha_rad"] = block.alpha().rad();
  doc["beta_rad"] = block.beta().rad();
  doc["graph"] = io::graph_to_json(g);
  doc["systole_deg"] = number_or_null(rad_to_deg(r.systole.length));
  doc["cat1"] = r.pass;
  out << doc.dump(2) << "\n";
  return r.pass ? 0 : 1;
}

int cmd_check(const Options& o, std::ostream& out, bool triples) {
  const ArtinDefiningGraph g = io::artin_from_json(io::read_json_file(o.input));
  const DeltaAssignment d = load_deltas(g, o.deltas);
  CurvatureVerdict v;
  try {
    v = triples ? triples_check(g, d, o.tol) : check(g, d, o.tol);
  } catch (const ReductionInapplicable& e) {
    throw io::InputError(e.what());
  } catch (const DomainError& e) {
    throw io::InputError(e.what());
  }
  json doc = report(triples ? "triples-check" : "check",
                    {{"input", o.input}, {"deltas", o.deltas}}, o.tol);
  doc["verdict"] = verdict_json(v, g);
  out << doc.dump(2) << "\n";
  return v.pass ? 0 : 1;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.family != "amn2") throw io::InputError("unknown family '" + o.family + "'");
  const auto ns = parse_int_list(o.n_list);
  const auto rows = enumerate_amn2(o.m_max, ns, o.tol);
  if (o.csv) {
    out << "n,minimal_m,required_alpha_deg,failing_count,finite_type_failures\n";
    for (const auto& r : rows) {
      out << r.n << ',' << (r.minimal_m ? std::to_string(*r.minimal_m) : "none") << ','
          << fixed(r.required_alpha.deg(), 3) << ',' << r.failing_m.size() << ','
          << r.finite_type_failures << '\n';
    }
    return 0;
  }
  json doc = report("enumerate", {{"family", o.family}, {"m_max", o.m_max}, {"n", ns}}, o.tol);
  doc["rows"] = json::array();
  for (const auto& r : rows) {
    doc["rows"].push_back({{"n", r.n},
                           {"minimal_m", r.minimal_m ? json(*r.minimal_m) : json(nullptr)},
                           {"required_alpha_deg", r.required_alpha.deg()},
                           {"failing_m", r.failing_m},
                           {"finite_type_failures", r.finite_type_failures}});
  }
  out << doc.dump(2) << "\n";
  return 0;
}

int cmd_excluded(const Options& o, std::ostream& out) {
  const auto triples = excluded_triples(o.max_index, o.tol);
  if (o.csv) {
    out << "m1,m2,m3\n";
    for (const auto& t : triples) out << t[0] << ',' << t[1] << ',' << t[2] << '\n';
    return 0;
  }
  json doc = report("excluded-triples", {{"max", o.max_index}}, o.tol);
  doc["rows"] = triples;
  out << doc.dump(2) << "\n";
  return 0;
}

int cmd_diam_l(const Options& o, std::ostream& out) {
  const LGraphParams p{Angle::degrees(o.rho_deg), Angle::degrees(o.sigma_deg), o.n_r, o.n_s};
  const MetricGraph g = l_graph(p);
  const DiameterResult d = diameter(g, o.resolution);
  const double formula = l_graph_diameter_formula(p.rho, p.sigma);
  auto dist = [&](const char* a, const char* b) {
    return rad_to_deg(shortest_path(g, a, b).length);
  };
  json doc = report("diam-l",
                    {{"rho_deg", o.rho_deg},
                     {"sigma_deg", o.sigma_deg},
                     {"n_r", o.n_r},
                     {"n_s", o.n_s},
                     {"resolution", o.resolution}},
                    o.tol);
  doc["diameter_deg"] = rad_to_deg(d.length);
  doc["diameter_rad"] = d.length;
  doc["formula_deg"] = rad_to_deg(formula);
  doc["cross_distances_deg"] = {{dist("r+", "s+"), dist("r+", "s-")},
                                {dist("r-", "s+"), dist("r-", "s-")}};
  doc["witness"] = {{"p", {{"edge", d.p.edge}, {"offset_deg", rad_to_deg(d.p.offset)}}},
                    {"q", {{"edge", d.q.edge}, {"offset_deg", rad_to_deg(d.q.offset)}}}};
  doc["graph"] = io::graph_to_json(g);
  out << doc.dump(2) << "\n";
  return 0;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const ArtinDefiningGraph g = io::artin_from_json(io::read_json_file(o.input));
  SolveMode mode;
  if (o.mode == "free") {
    mode = SolveMode::free;
  } else if (o.mode == "symmetric") {
    mode = SolveMode::symmetric;
  } else {
    throw io::InputError("unknown mode '" + o.mode + "'");
  }
  const SolveResult r = solve_deltas(g, mode, Angle::degrees(o.grid_deg), o.tol);
  json doc = report("solve-deltas", {{"input", o.input}, {"mode", o.mode}, {"grid_deg", o.grid_deg}},
                    o.tol);
  doc["feasible"] = r.feasible;
  doc["slack_deg"] = number_or_null(rad_to_deg(r.slack));
  doc["slack_rad"] = number_or_null(r.slack);
  doc["deltas"] = io::deltas_to_json(g, r.deltas);
  doc["evaluations"] = r.evaluations;
  if (r.binding_cycle) doc["binding_cycle"] = io::witness_to_json(r.link, *r.binding_cycle);
  doc["envelopes"] = json::array();
  for (const auto& e : r.envelopes) doc["envelopes"].push_back(envelope_json(e));
  out << doc.dump(2) << "\n";
  return r.feasible ? 0 : 1;
}

int cmd_coxeter(const Options& o, std::ostream& out) {
  std::vector<std::optional<int>> idx;
  std::stringstream ss(o.indices);
  std::string item;
  while (std::getline(ss, item, ',')) idx.push_back(parse_index(item));
  if (idx.size() != 3) throw io::InputError("--indices needs three entries m,n,p");
  const ReflectionRep rep(CoxeterMatrix::triangle(idx[0], idx[1], idx[2]));
  const OrderResult r = element_order(rep, parse_word(o.word), o.cap);
  json jidx = json::array();
  for (const auto& i : idx) jidx.push_back(i ? json(*i) : json("inf"));
  json doc = report("coxeter-order", {{"indices", jidx}, {"word", o.word}, {"cap", o.cap}}, o.tol);
  doc["kind"] = to_string(r.kind);
  doc["order"] = r.order ? json(*r.order) : json("infinite");
  if (r.kind == OrderKind::undetermined) doc["order"] = nullptr;
  doc["spectral_radius"] = r.spectral_radius;
  doc["norm_growth"] = r.norm_growth;
  out << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Link-condition verification for Artin group building blocks", "curvlink"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.add_option("--tol", o.tol_flag, "Tolerance in radians (default 1e-9, or $CURVLINK_TOL)");

  auto* t1 = app.add_subcommand("table1", "Symmetric alpha = beta table");
  t1->add_option("--m", o.m_list, "Relator indices, e.g. 3..13,18");
  t1->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  t1->add_option("--precision", o.precision, "Decimals for degrees")->check(CLI::Range(0, 15));

  auto* bl = app.add_subcommand("block-link", "Schematic link of one building block");
  bl->add_option("--m", o.m, "Relator index")->required();
  bl->add_option("--delta-deg", o.delta_deg, "Metric parameter delta (default: symmetric)");

  auto* ck = app.add_subcommand("check", "Link condition for a glued complex");
  auto* tc = app.add_subcommand("triples-check", "Link condition via the triples reduction");
  for (auto* sub : {ck, tc}) {
    sub->add_option("--input", o.input, "Artin defining graph JSON")->required();
    sub->add_option("--deltas", o.deltas, "auto or a deltas JSON file");
    sub->add_option("--tol", o.tol_flag, "Tolerance in radians");
  }

  auto* en = app.add_subcommand("enumerate", "Thresholds for A(m,n,2)");
  en->add_option("--family", o.family, "Family (amn2)");
  en->add_option("--m-max", o.m_max, "Largest m scanned");
  en->add_option("--n", o.n_list, "Values of n, e.g. 3..8");
  en->add_flag("--csv", o.csv, "CSV output");

  auto* ex = app.add_subcommand("excluded-triples", "Failing index triples, symmetric model");
  ex->add_option("--max", o.max_index, "Largest index");
  ex->add_flag("--csv", o.csv, "CSV output");

  auto* dl = app.add_subcommand("diam-l", "Diameter of the L-graph family");
  dl->add_option("--rho-deg", o.rho_deg, "rho in degrees");
  dl->add_option("--sigma-deg", o.sigma_deg, "sigma in degrees");
  dl->add_option("--nr", o.n_r, "Number of H(r)-arcs")->check(CLI::Range(0, 2));
  dl->add_option("--ns", o.n_s, "Number of H(s)-arcs")->check(CLI::Range(0, 2));
  dl->add_option("--resolution", o.resolution, "Sampling density per edge")->check(CLI::PositiveNumber);

  auto* sd = app.add_subcommand("solve-deltas", "Search delta assignments");
  sd->add_option("--input", o.input, "Artin defining graph JSON")->required();
  sd->add_option("--grid-deg", o.grid_deg, "Grid spacing in degrees");
  sd->add_option("--mode", o.mode, "free or symmetric");
  sd->add_flag("--json", o.json_flag, "JSON output (default)");
  sd->add_option("--tol", o.tol_flag, "Tolerance in radians");

  auto* co = app.add_subcommand("coxeter-order", "Order of a word in a rank-3 Coxeter group");
  co->add_option("--indices", o.indices, "m,n,p with m = m_ab, n = m_bc, p = m_ac (inf allowed)");
  co->add_option("--word", o.word, "Word in letters a, b, c");
  co->add_option("--cap", o.cap, "Largest power tried")->check(CLI::PositiveNumber);
  co->add_flag("--json", o.json_flag, "JSON output (default)");

  std::vector<std::string> argv_storage{"curvlink"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    o.tol = o.tol_flag ? *o.tol_flag : default_tolerance();
    if (!(o.tol >= 0.0)) throw io::InputError("tolerance must be non-negative");
    if (*t1) return cmd_table1(o, out);
    if (*bl) return cmd_block_link(o, out);
    if (*ck) return cmd_check(o, out, false);
    if (*tc) return cmd_check(o, out, true);
    if (*en) return cmd_enumerate(o, out);
    if (*ex) return cmd_excluded(o, out);
    if (*dl) return cmd_diam_l(o, out);
    if (*sd) return cmd_solve(o, out);
    if (*co) return cmd_coxeter(o, out);
  } catch (const io::InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace curvlink::cli
