// racg: classification, convexity, domain, word-metric and divergence
// computations for right-angled Coxeter groups given by finite defining
// graphs. JSON on stdout; exit 0 on success, 1 on errors, 2 when --assert is
// given and the command's verdict is negative.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "racg/cayley.hpp"
#include "racg/cfs.hpp"
#include "racg/constructions.hpp"
#include "racg/convexity.hpp"
#include "racg/fixtures.hpp"
#include "racg/graph_io.hpp"
#include "racg/hhs.hpp"
#include "racg/metric_graph.hpp"
#include "racg/spiral.hpp"

using json = nlohmann::ordered_json;
using namespace racg;

namespace {

constexpr int kSchema = 1;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

SimplicialGraph load_graph(const std::string& path) {
  return graph_from_json_text(read_file(path));
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::string> word_letters(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

json labels_json(const SimplicialGraph& g, const Bitset& b) {
  json arr = json::array();
  b.for_each([&](int v) { arr.push_back(g.label(v)); });
  return arr;
}

json square_json(const SimplicialGraph& g, const Square& s) {
  return json::array({g.label(s.diag1[0]), g.label(s.diag1[1]),
                      g.label(s.diag2[0]), g.label(s.diag2[1])});
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

size_t element_budget(size_t flag_value) {
  if (flag_value != 0) return flag_value;
  if (const char* env = std::getenv("RACG_BUDGET")) {
    long long v = std::atoll(env);
    if (v > 0) return size_t(v);
  }
  return kDefaultElementBudget;
}

// integer r range "2..16" or single value "5"
std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    int v = std::stoi(s);
    return {v, v};
  }
  return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

// growth-law expressions: "i", "i^K", "B^i", optionally wrapped in ceil().
// Fractional exponents need the ceil() wrapper and one decimal .5; values
// saturate well below overflow so bound comparisons stay ordered.
struct GrowthLaw {
  enum Kind { PowI, BasePow } kind = PowI;
  long long p = 1, q = 1;  // exponent p/q for i^(p/q)
  long long base = 2;
  bool ceil_wrap = false;
  std::string text;

  static constexpr long long kCap = (1LL << 60);

  long long operator()(int i) const {
    if (kind == BasePow) {
      long long v = 1;
      for (int k = 0; k < i; ++k) {
        if (v > kCap / base) return kCap;
        v *= base;
      }
      return v;
    }
    long long ip = 1;
    for (int k = 0; k < p; ++k) {
      if (i > 0 && ip > kCap / i) return kCap;
      ip *= i;
    }
    if (q == 1) return ip;
    long long s = (long long)std::sqrt((double)ip);
    while (s > 0 && s * s > ip) --s;
    while ((s + 1) * (s + 1) <= ip) ++s;
    if (s * s == ip) return s;
    return ceil_wrap ? s + 1 : s;
  }

  static GrowthLaw parse(std::string s) {
    GrowthLaw f;
    f.text = s;
    auto strip = [&](const std::string& pre) {
      if (s.size() > pre.size() + 1 && s.compare(0, pre.size(), pre) == 0 &&
          s.back() == ')') {
        s = s.substr(pre.size(), s.size() - pre.size() - 1);
        return true;
      }
      return false;
    };
    if (strip("ceil(")) f.ceil_wrap = true;
    else strip("floor(");
    auto caret = s.find('^');
    if (caret == std::string::npos) {
      if (s != "i") throw std::invalid_argument("unsupported growth law: " + f.text);
      f.kind = PowI;
      f.p = 1;
      return f;
    }
    std::string lhs = s.substr(0, caret), rhs = s.substr(caret + 1);
    if (lhs == "i") {
      f.kind = PowI;
      auto dot = rhs.find('.');
      if (dot == std::string::npos) {
        f.p = std::stoll(rhs);
        f.q = 1;
      } else {
        if (rhs.substr(dot + 1) != "5")
          throw std::invalid_argument("only .5 exponents supported: " + f.text);
        f.p = 2 * std::stoll(rhs.substr(0, dot)) + 1;
        f.q = 2;
        if (!f.ceil_wrap)
          throw std::invalid_argument("fractional exponent needs ceil(): " +
                                      f.text);
      }
      if (f.p < 1) throw std::invalid_argument("exponent must be positive");
      return f;
    }
    if (rhs == "i") {
      f.kind = BasePow;
      f.base = std::stoll(lhs);
      if (f.base < 2) throw std::invalid_argument("base must be at least 2");
      return f;
    }
    throw std::invalid_argument("unsupported growth law: " + f.text);
  }
};

json sigma_json(const std::optional<long long>& sigma) {
  if (!sigma) return json("inf");
  return json(*sigma);
}

std::string csv_line(const DivergenceEntry& e) {
  std::string s = e.rho.str() + "," + std::to_string(e.n) + "," +
                  std::to_string(e.r) + ",";
  s += e.sigma ? std::to_string(*e.sigma) : std::string("inf");
  return s + "\n";
}

// ---------------------------------------------------------------------------

int cmd_classify(const std::string& path, const std::string& dot_path,
                 bool assert_flag) {
  SimplicialGraph g = load_graph(path);
  CfsVerdict v = classify_cfs(g);
  json out;
  out["schema"] = kSchema;
  out["cfs"] = v.cfs;
  out["strongly_cfs"] = v.strongly_cfs;
  switch (v.failure) {
    case CfsFailure::None: out["reason"] = nullptr; break;
    case CfsFailure::OmegaEmpty: out["reason"] = "omega-empty"; break;
    case CfsFailure::UncoveredVertex:
      out["reason"] = "uncovered-vertex:" + g.label(v.uncovered_vertex);
      break;
    case CfsFailure::SquareGraphDisconnected:
      out["reason"] = "square-graph-disconnected";
      break;
  }
  if (v.certificate) {
    json cert;
    cert["clique_factor"] = labels_json(g, v.certificate->clique_factor);
    cert["omega"] = labels_json(g, v.certificate->omega);
    cert["component_squares"] = json::array();
    for (const Square& s : v.certificate->component)
      cert["component_squares"].push_back(square_json(g, s));
    out["certificate"] = cert;
  } else {
    out["certificate"] = nullptr;
  }
  emit(out);
  if (!dot_path.empty()) {
    SquareGraph sg = square_graph(g);
    std::vector<int> highlight;
    if (v.certificate)
      for (const Square& s : v.certificate->component)
        for (int i = 0; i < sg.size(); ++i)
          if (sg.squares[i] == s) highlight.push_back(i);
    write_file(dot_path, square_graph_to_dot(g, sg, highlight));
  }
  return assert_flag && !v.cfs ? 2 : 0;
}

int cmd_sqc(const std::string& path, const std::string& delta_csv,
            bool assert_flag) {
  SimplicialGraph g = load_graph(path);
  Bitset delta = g.subset(split_csv(delta_csv));
  SqcVerdict v = is_strongly_quasiconvex_special(g, delta);
  DichotomyWitness w = orthogonal_dichotomy_witness(g, delta);
  json out;
  out["schema"] = kSchema;
  out["delta"] = labels_json(g, delta);
  out["strongly_quasiconvex"] = v.strongly_quasiconvex;
  out["stable"] = is_stable_special(g, delta);
  out["finite_index"] = is_finite_index_special(g, delta);
  if (v.violating_square)
    out["violating_square"] = square_json(g, *v.violating_square);
  else
    out["violating_square"] = nullptr;
  if (!w.confirmed) {
    out["witness"] = {{"lambda", labels_json(g, *w.lambda)},
                      {"lambda_prime", labels_json(g, *w.lambda_prime)}};
  } else {
    out["witness"] = nullptr;
  }
  emit(out);
  return assert_flag && !v.strongly_quasiconvex ? 2 : 0;
}

int cmd_domains(const std::string& path, const std::string& lambda_csv,
                const std::string& mu_csv, bool atoms, bool hypotheses) {
  SimplicialGraph g = load_graph(path);
  if (atoms) {
    AtomGraph ag = atom_graph(g);
    std::ostringstream os;
    os << "graph atoms {\n";
    for (int i = 0; i < ag.size(); ++i)
      os << "  a" << i << " [label=\"{" << g.label(ag.atoms[i].first) << ","
         << g.label(ag.atoms[i].second) << "}\"];\n";
    for (int i = 0; i < ag.size(); ++i)
      for (int j : ag.adj[i])
        if (i < j) os << "  a" << i << " -- a" << j << ";\n";
    os << "}\n";
    std::cout << os.str();
    return 0;
  }
  json out;
  out["schema"] = kSchema;
  if (hypotheses) {
    HypothesisVerdict v = coverage_connectivity_check(g);
    switch (v.kind) {
      case Hypothesis::Applies: out["hypotheses"] = "applies"; break;
      case Hypothesis::FailsCover:
        out["hypotheses"] = v.uncovered_vertex >= 0
                                ? "fails-cover:" + g.label(v.uncovered_vertex)
                                : "fails-cover";
        break;
      case Hypothesis::FailsConnectivity:
        out["hypotheses"] = "fails-connectivity:" +
                            std::to_string(v.atom_components) + "-components";
        break;
    }
    emit(out);
    return 0;
  }
  if (lambda_csv.empty()) throw std::runtime_error("--lambda is required");
  Domain d1(g, g.subset(split_csv(lambda_csv)));
  out["lambda"] = labels_json(g, d1.lambda);
  out["lambda_unbounded"] = is_unbounded(d1);
  out["lambda_in_s_star"] = in_s_star(d1);
  if (!mu_csv.empty()) {
    Domain d2(g, g.subset(split_csv(mu_csv)));
    out["mu"] = labels_json(g, d2.lambda);
    out["mu_unbounded"] = is_unbounded(d2);
    out["mu_in_s_star"] = in_s_star(d2);
    out["relation"] = to_string(relation(d1, d2));
  }
  emit(out);
  return 0;
}

int cmd_embed(const std::string& path, const std::string& out_path,
              const std::string& map_path) {
  SimplicialGraph gamma = load_graph(path);
  CfsEmbedding e = cfs_embed(gamma);
  if (!out_path.empty())
    write_file(out_path, graph_to_json(e.omega).dump(2) + "\n");
  if (!map_path.empty()) {
    json m;
    for (int v = 0; v < gamma.size(); ++v)
      m[gamma.label(v)] = e.omega.label(e.embedding.vertex_map[v]);
    write_file(map_path, m.dump(2) + "\n");
  }
  Bitset img = e.embedding.image(e.omega);
  json out;
  out["schema"] = kSchema;
  out["gamma_vertices"] = gamma.size();
  out["omega_vertices"] = e.omega.size();
  out["image"] = labels_json(e.omega, img);
  out["ambient_cfs"] = classify_cfs(e.omega).cfs;
  out["image_strongly_quasiconvex"] =
      is_strongly_quasiconvex_special(e.omega, img).strongly_quasiconvex;
  out["image_finite_index"] = is_finite_index_special(e.omega, img);
  out["image_stable"] = is_stable_special(e.omega, img);
  emit(out);
  return 0;
}

void emit_graph(const SimplicialGraph& g, const std::string& out_path,
                bool as_dot) {
  std::string text = as_dot ? graph_to_dot(g) : graph_to_json(g).dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

int cmd_ladder(int n, const std::string& out_path, bool as_dot) {
  emit_graph(ladder_graph(n), out_path, as_dot);
  return 0;
}

int cmd_fixture(const std::string& name, int n, const std::string& verts,
                const std::string& out_path, bool list, bool as_dot) {
  if (list) {
    json out;
    out["schema"] = kSchema;
    out["fixtures"] = json::array();
    for (const auto& nm : fixture_names()) {
      GraphFixture f = make_fixture(nm);
      out["fixtures"].push_back(
          {{"name", f.name}, {"note", f.note}, {"vertices", f.graph.size()}});
    }
    emit(out);
    return 0;
  }
  if (name.empty()) throw std::runtime_error("fixture name required (or --list)");
  SimplicialGraph g;
  if (name == "isolated-square") {
    auto vs = split_csv(verts);
    if (vs.size() != 4)
      throw std::runtime_error("--verts needs four comma-separated labels");
    g = isolated_square_fixture(n, vs[0], vs[1], vs[2], vs[3]);
  } else {
    g = make_fixture(name).graph;
  }
  emit_graph(g, out_path, as_dot);
  return 0;
}

int cmd_cayley_dist(const std::string& path, const std::string& word) {
  SimplicialGraph g = load_graph(path);
  GroupElement e = normal_form(g, word_letters(word));
  json out;
  out["schema"] = kSchema;
  out["word"] = word;
  out["normal_form"] = e.str();
  out["length"] = e.length();
  emit(out);
  return 0;
}

int cmd_cayley_ball(const std::string& path, int r, size_t budget,
                    const std::string& edges_path) {
  SimplicialGraph g = load_graph(path);
  CayleyBall b(g, r, budget);
  json out;
  out["schema"] = kSchema;
  out["radius"] = r;
  out["elements"] = b.size();
  out["spheres"] = b.sphere_sizes();
  emit(out);
  if (!edges_path.empty()) {
    std::ostringstream os;
    for (size_t id = 0; id < b.size(); ++id)
      for (int nb : b.neighbors(int(id)))
        if (size_t(nb) > id)
          os << b.label(int(id)) << "\t" << b.label(nb) << "\n";
    write_file(edges_path, os.str());
  }
  return 0;
}

int cmd_cayley_probe(const std::string& path, const std::string& delta_csv,
                     int r, int D, size_t budget, bool assert_flag) {
  SimplicialGraph g = load_graph(path);
  Bitset delta = g.subset(split_csv(delta_csv));
  ProbeResult res = geodesic_quasiconvexity_probe(g, delta, r, D, budget);
  json out;
  out["schema"] = kSchema;
  out["delta"] = labels_json(g, delta);
  out["radius"] = r;
  out["D"] = D;
  out["pass"] = res.pass;
  if (res.violation) {
    auto lbl = [&](const std::vector<int>& w) {
      std::string s = GroupElement(g, w).str();
      return s.empty() ? std::string("e") : s;
    };
    out["violation"] = {{"x", lbl(res.violation->x)},
                        {"y", lbl(res.violation->y)},
                        {"v", lbl(res.violation->v)},
                        {"dxy", res.violation->dxy},
                        {"dxv", res.violation->dxv},
                        {"dvy", res.violation->dvy},
                        {"dist_to_subgroup", res.violation->dist_to_subgroup}};
  } else {
    out["violation"] = nullptr;
  }
  out["pairs_checked"] = res.pairs_checked;
  out["pairs_uncertain"] = res.pairs_uncertain;
  out["points_uncertain"] = res.points_uncertain;
  emit(out);
  return assert_flag && !res.pass ? 2 : 0;
}

struct DivergeArgs {
  std::string rho = "1";
  std::string ns = "3";
  std::string rs = "2..16";
  std::string csv_path;
  int threads = 1;
};

int run_diverge(const MetricGraph& g, const DivergeArgs& a) {
  std::vector<Rational> rhos;
  for (const auto& s : split_csv(a.rho)) rhos.push_back(Rational::parse(s));
  std::vector<int> ns;
  for (const auto& s : split_csv(a.ns)) ns.push_back(std::stoi(s));
  auto [rlo, rhi] = parse_range(a.rs);
  std::vector<int> rs;
  for (int r = rlo; r <= rhi; ++r) rs.push_back(r);
  auto entries = divergence_profile(g, rhos, ns, rs, a.threads);
  if (!a.csv_path.empty()) {
    std::string text = "rho,n,r,sigma\n";
    for (const auto& e : entries) text += csv_line(e);
    write_file(a.csv_path, text);
  }
  json out;
  out["schema"] = kSchema;
  out["entries"] = json::array();
  for (const auto& e : entries)
    out["entries"].push_back({{"rho", e.rho.str()},
                              {"n", e.n},
                              {"r", e.r},
                              {"sigma", sigma_json(e.sigma)}});
  emit(out);
  return 0;
}

int cmd_contract(const MetricGraph& g, const std::string& retraction_kind,
                 const GridSpace* grid, const std::string& A_str, long long D,
                 bool assert_flag) {
  std::vector<int> ret;
  if (retraction_kind == "closest") {
    ret = closest_point_retraction(g);
  } else if (retraction_kind == "vertical") {
    if (!grid)
      throw std::runtime_error("vertical retraction is grid-specific");
    ret.resize(g.size());
    for (int x = 0; x < grid->width; ++x)
      for (int y = -grid->half_height; y <= grid->half_height; ++y)
        ret[grid->id(x, y)] = grid->id(x, 0);
  } else {
    throw std::runtime_error("unknown retraction: " + retraction_kind);
  }
  ContractionResult r = contraction_test(g, ret, Rational::parse(A_str), D);
  json out;
  out["schema"] = kSchema;
  out["A"] = A_str;
  out["D"] = D;
  out["retraction"] = retraction_kind;
  out["pass"] = r.pass;
  if (!r.pass) {
    out["condition"] = r.condition;
    json w = json::array();
    for (int v : r.witness) w.push_back(g.label(v));
    out["witness"] = w;
    out["value"] = r.value;
    out["allowed"] = r.allowed;
  }
  emit(out);
  return assert_flag && !r.pass ? 2 : 0;
}

int cmd_spiral(long long K, long long L, bool check, int max_segments,
               long long max_len, bool assert_flag) {
  Gauge gauge = spiral_constants(K, L);
  json out;
  out["schema"] = kSchema;
  out["K"] = K;
  out["L"] = L;
  out["lambda"] = gauge.lambda.str();
  out["eps"] = gauge.eps.str();
  if (check) {
    auto specs = generate_spirals(K, L, max_segments, max_len);
    size_t failures = 0;
    json first = nullptr;
    for (const auto& spec : specs) {
      LatticePath p = spec.build();
      auto v = quasigeodesic_check(p, gauge);
      if (v) {
        ++failures;
        if (first.is_null())
          first = {{"t", v->t}, {"s", v->s}, {"dt", v->dt}, {"dist", v->dist}};
      }
    }
    out["spirals"] = specs.size();
    out["failures"] = failures;
    out["first_violation"] = first;
    emit(out);
    return assert_flag && failures > 0 ? 2 : 0;
  }
  emit(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Combinatorics, convexity and metric geometry of right-angled Coxeter "
      "groups given by finite defining graphs"};
  app.require_subcommand(1);
  bool assert_flag = false;
  app.add_flag("--assert", assert_flag,
               "exit with status 2 when the command's verdict is negative");

  std::string cl_path, cl_dot;
  auto* classify = app.add_subcommand(
      "classify",
      "decide the squares-coverage property of a defining graph (clique "
      "factor split, covering connected component of the square graph) and "
      "its strengthening requiring the whole square graph connected");
  classify->add_option("graph", cl_path, "graph json file")->required();
  classify->add_option("--dot", cl_dot,
                       "write the square graph as dot, covering component "
                       "highlighted");

  std::string sq_path, sq_delta;
  auto* sqc = app.add_subcommand(
      "sqc",
      "decide strong quasiconvexity of the special subgroup generated by "
      "--delta (no induced 4-cycle may have exactly one diagonal inside), "
      "plus stability and finite index");
  sqc->add_option("graph", sq_path)->required();
  sqc->add_option("--delta", sq_delta, "comma-separated vertex labels")
      ->required();

  std::string dm_path, dm_lambda, dm_mu;
  bool dm_atoms = false, dm_hyp = false;
  auto* domains = app.add_subcommand(
      "domains",
      "relations between special-subgroup domains at the identity coset: "
      "nesting by containment, orthogonality by link inclusion, "
      "unboundedness, and membership among domains with unbounded orthogonal "
      "partners");
  domains->add_option("graph", dm_path)->required();
  domains->add_option("--lambda", dm_lambda, "first domain");
  domains->add_option("--mu", dm_mu, "second domain");
  domains->add_flag("--atoms", dm_atoms,
                    "emit the diagonal-pair adjacency graph as dot");
  domains->add_flag("--hypotheses", dm_hyp,
                    "check square coverage and diagonal-sequence "
                    "connectivity after clique-factor removal");

  std::string em_path, em_out, em_map;
  auto* embed = app.add_subcommand(
      "embed",
      "glue the given graph onto a ladder along vertices pairwise at "
      "distance at least 3; the resulting ambient group contains the given "
      "group as an infinite-index strongly quasiconvex special subgroup");
  embed->add_option("gamma", em_path)->required();
  embed->add_option("-o,--output", em_out, "write the ambient graph json");
  embed->add_option("--map", em_map, "write the vertex identification json");

  int la_n = 1;
  std::string la_out;
  auto* ladder = app.add_subcommand(
      "ladder",
      "emit the 2n-vertex ladder graph: consecutive level pairs joined by "
      "all four edges");
  ladder->add_option("n", la_n, "number of levels")->required();
  ladder->add_option("-o,--output", la_out);
  bool la_dot = false;
  ladder->add_flag("--dot", la_dot, "emit dot instead of json");

  std::string fx_name, fx_verts, fx_out;
  int fx_n = 13;
  bool fx_list = false;
  auto* fixture = app.add_subcommand("fixture", "emit a named fixture graph");
  fixture->add_option("name", fx_name);
  fixture->add_option("--n", fx_n, "ladder levels for isolated-square");
  fixture->add_option("--verts", fx_verts,
                      "four glued vertices for isolated-square");
  fixture->add_option("-o,--output", fx_out);
  fixture->add_flag("--list", fx_list, "list available fixtures");
  bool fx_dot = false;
  fixture->add_flag("--dot", fx_dot, "emit dot instead of json");

  auto* cayley = app.add_subcommand(
      "cayley", "word problem, balls and geodesic probes in the word metric");
  cayley->require_subcommand(1);
  std::string cd_path, cd_word;
  auto* cdist = cayley->add_subcommand(
      "dist",
      "shortlex normal form and word length of a product of generators");
  cdist->add_option("graph", cd_path)->required();
  cdist->add_option("-w,--word", cd_word, "space-separated generators")
      ->required();
  std::string cb_path, cb_edges;
  int cb_r = 3;
  size_t budget_flag = 0;
  auto* cball = cayley->add_subcommand(
      "ball",
      "enumerate all elements of word length up to r with generator edges");
  cball->add_option("graph", cb_path)->required();
  cball->add_option("-r,--radius", cb_r)->required();
  bool cb_stats = false;
  cball->add_flag("--stats", cb_stats,
                  "print element count and sphere sizes (the default)");
  cball->add_option("--budget", budget_flag, "element budget override");
  cball->add_option("--edges", cb_edges,
                    "write the edge list, elements labeled by normal forms");
  std::string cp_path, cp_delta;
  int cp_r = 6, cp_d = 1;
  auto* cprobe = cayley->add_subcommand(
      "probe",
      "search ball geodesics with endpoints in the special subgroup for "
      "points provably farther than D from the subgroup; distances the ball "
      "cannot certify are never reported as violations");
  cprobe->add_option("graph", cp_path)->required();
  cprobe->add_option("--delta", cp_delta)->required();
  cprobe->add_option("-r,--radius", cp_r);
  cprobe->add_option("-d,--distance", cp_d);
  cprobe->add_option("--budget", budget_flag);

  auto* diverge = app.add_subcommand(
      "diverge",
      "divergence profile: shortest connections between boundary-sphere "
      "points avoiding a neighborhood of the marked subspace");
  diverge->require_subcommand(1);
  DivergeArgs dv;
  std::string dv_f = "ceil(i^1.5)";
  int dv_imax = 40, dv_width = 200, dv_height = 60, dv_spine = 20,
      dv_branch = 10;
  auto add_diverge_common = [&](CLI::App* c) {
    c->add_option("--rho", dv.rho, "comma list of rationals in (0,1]");
    c->add_option("--n", dv.ns, "comma list of integers >= 2");
    c->add_option("--r", dv.rs, "radius or range lo..hi");
    c->add_option("--csv", dv.csv_path, "write rho,n,r,sigma rows");
    c->add_option("--threads", dv.threads);
  };
  auto* dmodel = diverge->add_subcommand(
      "model", "ray with an arc of length f(i) over the i-th segment");
  dmodel->add_option("--f", dv_f, "growth law, e.g. i^2, 2^i, ceil(i^1.5)");
  dmodel->add_option("--imax", dv_imax, "number of arcs");
  add_diverge_common(dmodel);
  auto* dgrid = diverge->add_subcommand(
      "grid", "lattice box with the horizontal axis marked");
  dgrid->add_option("--width", dv_width);
  dgrid->add_option("--height", dv_height,
                    "total vertical extent; rows span -height/2..height/2");
  add_diverge_common(dgrid);
  auto* dtree = diverge->add_subcommand(
      "tree", "marked spine with a branch at every spine vertex");
  dtree->add_option("--spine", dv_spine);
  dtree->add_option("--branch", dv_branch);
  add_diverge_common(dtree);

  auto* contract = app.add_subcommand(
      "contract-test",
      "falsify the contraction conditions for a retraction at constants "
      "(A, D): coarse fixing of the marked set, coarse Lipschitz across "
      "edges, and collapse of balls of radius floor(A d(x,Y))");
  contract->require_subcommand(1);
  std::string ct_A = "1";
  long long ct_D = 2;
  std::string ct_ret = "closest";
  std::string ct_f = "ceil(i^1.5)";
  int ct_imax = 40, ct_width = 60, ct_height = 24, ct_spine = 20,
      ct_branch = 10;
  auto add_contract_common = [&](CLI::App* c) {
    c->add_option("--A", ct_A, "ball-radius factor in (0,1]");
    c->add_option("--D", ct_D, "diameter bound, >= 1");
    c->add_option("--retraction", ct_ret, "closest or vertical");
  };
  auto* cmodel = contract->add_subcommand("model", "arc model space");
  cmodel->add_option("--f", ct_f);
  cmodel->add_option("--imax", ct_imax);
  add_contract_common(cmodel);
  auto* cgrid = contract->add_subcommand("grid", "lattice box");
  cgrid->add_option("--width", ct_width);
  cgrid->add_option("--height", ct_height);
  add_contract_common(cgrid);
  auto* ctree = contract->add_subcommand("tree", "comb tree");
  ctree->add_option("--spine", ct_spine);
  ctree->add_option("--branch", ct_branch);
  add_contract_common(ctree);

  long long sp_K = 1, sp_L = 0, sp_maxlen = 200;
  int sp_maxseg = 6;
  bool sp_check = false;
  auto* spiral = app.add_subcommand(
      "spiral",
      "constants making alternating-axis geometric spirals quasi-geodesics "
      "of the lattice plane, with an exhaustive verification grid");
  spiral->add_option("--K", sp_K);
  spiral->add_option("--L", sp_L);
  spiral->add_flag("--check", sp_check,
                   "verify all generated spirals against the constants");
  spiral->add_option("--max-segments", sp_maxseg);
  spiral->add_option("--max-len", sp_maxlen);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) return cmd_classify(cl_path, cl_dot, assert_flag);
    if (*sqc) return cmd_sqc(sq_path, sq_delta, assert_flag);
    if (*domains)
      return cmd_domains(dm_path, dm_lambda, dm_mu, dm_atoms, dm_hyp);
    if (*embed) return cmd_embed(em_path, em_out, em_map);
    if (*ladder) return cmd_ladder(la_n, la_out, la_dot);
    if (*fixture)
      return cmd_fixture(fx_name, fx_n, fx_verts, fx_out, fx_list, fx_dot);
    if (*cdist) return cmd_cayley_dist(cd_path, cd_word);
    if (*cball)
      return cmd_cayley_ball(cb_path, cb_r, element_budget(budget_flag),
                             cb_edges);
    if (*cprobe)
      return cmd_cayley_probe(cp_path, cp_delta, cp_r, cp_d,
                              element_budget(budget_flag), assert_flag);
    if (*dmodel) {
      GrowthLaw f = GrowthLaw::parse(dv_f);
      ModelSpace m = model_space([&](int i) { return f(i); }, dv_imax);
      return run_diverge(m.g, dv);
    }
    if (*dgrid) {
      GridSpace s = grid_space(dv_width, dv_height / 2);
      return run_diverge(s.g, dv);
    }
    if (*dtree) return run_diverge(comb_tree(dv_spine, dv_branch), dv);
    if (*cmodel) {
      GrowthLaw f = GrowthLaw::parse(ct_f);
      ModelSpace m = model_space([&](int i) { return f(i); }, ct_imax);
      return cmd_contract(m.g, ct_ret, nullptr, ct_A, ct_D, assert_flag);
    }
    if (*cgrid) {
      GridSpace s = grid_space(ct_width, ct_height / 2);
      return cmd_contract(s.g, ct_ret, &s, ct_A, ct_D, assert_flag);
    }
    if (*ctree)
      return cmd_contract(comb_tree(ct_spine, ct_branch), ct_ret, nullptr,
                          ct_A, ct_D, assert_flag);
    if (*spiral)
      return cmd_spiral(sp_K, sp_L, sp_check, sp_maxseg, sp_maxlen,
                        assert_flag);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
