// Command line front end for the lieorb library.
//
// Exit codes: 0 when the requested computation succeeds and every check it
// runs passes, 1 when a check fails, 2 on usage or configuration errors.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lieorb/curated.hpp"
#include "lieorb/dynkin.hpp"
#include "lieorb/exclusion.hpp"
#include "lieorb/matmodel.hpp"
#include "lieorb/partitions.hpp"
#include "lieorb/verify.hpp"

using namespace lieorb;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> root_vec(const Root& r) { return {r.data(), r.data() + r.size()}; }

std::string root_str(const Root& r) {
  std::string s;
  for (int i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r(i));
  return s;
}

json rat_vector_json(const RatVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i).str());
  return a;
}

json rat_matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(rat_vector_json(m.row(i).transpose()));
  return rows;
}

std::string element_str(const ChevalleyAlgebra& g, const LieElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : x.terms()) {
    if (!s.empty()) s += " + ";
    s += (c == Rational(1) ? "" : c.str() + "*") + g.basis_label(k);
  }
  return s;
}

void print_matrix(std::ostream& os, const RatMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::size_t w = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) w = std::max(w, (cells[i][j] = m(i, j).str()).size());
  for (const auto& row : cells) {
    os << "  [";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << std::setw(static_cast<int>(w)) << row[j];
    os << "]\n";
  }
}

CartanType parse_type(const std::string& s) {
  try {
    return CartanType::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

WeightedDiagram parse_diagram(const CartanType& t, const std::string& s) {
  try {
    return WeightedDiagram::parse(t, s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

// ------------------------------------------------------------------ roots

int cmd_roots(const std::string& type, bool as_json) {
  const RootSystem rs = build_root_system(parse_type(type));
  if (as_json) {
    json roots = json::array();
    for (int i = 0; i < rs.size(); ++i)
      roots.push_back({{"index", i},
                       {"coords", root_vec(rs.root(i))},
                       {"height", rs.height(i)},
                       {"norm2", rs.norm2(rs.root(i)).str()},
                       {"long", rs.is_long(rs.root(i))}});
    json cm = json::array();
    for (int i = 0; i < rs.rank(); ++i) {
      json row = json::array();
      for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan_matrix()(i, j));
      cm.push_back(row);
    }
    std::cout << json{{"type", rs.type().name()},
                      {"rank", rs.rank()},
                      {"num_roots", rs.size()},
                      {"cartan_matrix", cm},
                      {"highest_root", root_vec(rs.highest_root())},
                      {"roots", roots}}
                     .dump(2)
              << "\n";
    return kOk;
  }
  std::cout << rs.type().name() << ": " << rs.size() << " roots, " << rs.num_positive() << " positive\n";
  std::cout << "highest root (" << root_str(rs.highest_root()) << ")\n";
  for (int i = 0; i < rs.size(); ++i)
    std::cout << std::setw(4) << i << "  (" << root_str(rs.root(i)) << ")  height " << rs.height(i) << "  "
              << (rs.is_long(rs.root(i)) ? "long" : "short") << " |r|^2=" << rs.norm2(rs.root(i)).str() << "\n";
  return kOk;
}

// ---------------------------------------------------------------- algebra

int cmd_algebra(const std::string& type, bool dim, bool orbit_min, bool as_json) {
  const ChevalleyAlgebra g = build_algebra(parse_type(type));
  if (!dim && !orbit_min) dim = orbit_min = true;
  json out{{"type", g.type().name()}};
  if (dim) out["dim"] = g.dim();
  if (orbit_min) {
    const LieElement x = g.X(g.roots().highest_root_index());
    out["min_orbit_dim"] = orbit_dimension(g, x);
    out["min_orbit_projective_dim"] = projective_orbit_dimension(g, x);
  }
  if (as_json) {
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  if (dim) std::cout << g.type().name() << " dim " << g.dim() << "\n";
  if (orbit_min)
    std::cout << g.type().name() << " minimal orbit dim " << out["min_orbit_dim"].get<int>() << ", projective dim "
              << out["min_orbit_projective_dim"].get<int>() << "\n";
  return kOk;
}

// ------------------------------------------------------------------ check

struct GradedInput {
  ChevalleyAlgebra g;
  Grading gr;
};

GradedInput graded(const std::string& type, const std::string& diagram) {
  const CartanType t = parse_type(type);
  ChevalleyAlgebra g = build_algebra(t);
  Grading gr = grading_from_diagram(g, parse_diagram(t, diagram));
  return {std::move(g), std::move(gr)};
}

int cmd_key_lemma(const std::string& type, const std::string& diagram, bool as_json) {
  const auto [g, gr] = graded(type, diagram);
  const auto gen = generic_element(g, gr);
  if (!gen) {
    const std::string msg = "diagram " + gr.diagram.str() + " has no sl2 triple through g(2)";
    if (as_json) std::cout << json{{"type", g.type().name()}, {"diagram", gr.diagram.str()}, {"error", msg}}.dump(2) << "\n";
    else std::cout << msg << "\n";
    return kCheckFailed;
  }
  const LieElement& n0 = gen->triple.n0;
  const auto w = key_lemma_witness(g, gr, n0);
  const int omega = omega_kernel_dim(g, gr, n0);
  if (as_json) {
    std::cout << json{{"type", g.type().name()},
                      {"diagram", gr.diagram.str()},
                      {"N0", element_json(g, n0)},
                      {"N1", element_json(g, gen->triple.n1)},
                      {"H", element_json(g, gr.h)},
                      {"centralizer_in_n_perp", !w},
                      {"witness", w ? element_json(g, *w) : json(nullptr)},
                      {"omega_kernel_dim", omega},
                      {"orbit_dim", orbit_dimension(g, n0)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << g.type().name() << " diagram " << gr.diagram.str() << "\n"
              << "  N0 = " << element_str(g, n0) << "\n"
              << "  orbit dim " << orbit_dimension(g, n0) << ", omega kernel " << omega << "\n"
              << "  centralizer of N0 in n_perp: " << (w ? "no" : "yes") << "\n";
    if (w) std::cout << "  witness " << element_str(g, *w) << "\n";
  }
  return w ? kCheckFailed : kOk;
}

int cmd_pairing(const std::string& type, const std::string& diagram, std::uint64_t seed, bool as_json) {
  const auto [g, gr] = graded(type, diagram);
  const PairingVerdict v = pairing_criterion(g, gr, {seed, 1000});
  const char* status = v.status == PairingStatus::Holds              ? "holds"
                        : v.status == PairingStatus::FailsWithWitness ? "fails_with_witness"
                                                                      : "probabilistic_holds";
  if (as_json) {
    json out{{"type", g.type().name()}, {"diagram", gr.diagram.str()}, {"dim_g2", gr.piece_dim(2)}, {"status", status}};
    if (v.witness) out["witness"] = {{"N", element_json(g, v.witness->first)}, {"Q", element_json(g, v.witness->second)}};
    if (v.status == PairingStatus::ProbabilisticHolds) out["samples"] = v.samples;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << g.type().name() << " diagram " << gr.diagram.str() << ": pairing criterion " << status << "\n";
    if (v.witness)
      std::cout << "  N = " << element_str(g, v.witness->first) << "\n  Q = " << element_str(g, v.witness->second)
                << "\n";
    if (v.status == PairingStatus::ProbabilisticHolds) std::cout << "  " << v.samples << " samples\n";
  }
  return v.status == PairingStatus::FailsWithWitness ? kCheckFailed : kOk;
}

int cmd_exclusion(const std::string& type, const std::string& diagram, bool as_json) {
  const CartanType t = parse_type(type);
  if (t.family != Family::E && t.family != Family::F) throw UsageError("exclusion tests exist for E6, E7, E8 and F4");
  const ChevalleyAlgebra g = build_algebra(t);
  const WeightedDiagram wd = parse_diagram(t, diagram);
  const ExclusionVerdict v = exclusion(g, wd);
  json out{{"type", t.name()}, {"diagram", wd.str()}, {"status", to_string(v.status)}, {"s", v.s}};
  if (t.family == Family::E) out["m"] = v.m;
  if (v.n) {
    out["N"] = element_json(g, *v.n);
    out["Z"] = element_json(g, *v.z);
    out["N_roots"] = {root_vec(v.n_roots[0]), root_vec(v.n_roots[1])};
    out["Z_root"] = root_vec(v.z_root);
    out["bracket_vanishes"] = v.bracket_vanishes;
    out["N_in_n"] = v.n_in_n;
    out["Z_outside_n_perp"] = v.z_outside_n_perp;
  }
  if (v.status == ExclusionStatus::InG2Case) {
    out["N_in_g2"] = v.n_in_g2;
    out["centralizer_in_g_minus2"] = v.centralizer_in_g_minus2;
  }
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << t.name() << " diagram " << wd.str() << ": " << to_string(v.status) << "\n";
    if (v.n)
      std::cout << "  N = " << element_str(g, *v.n) << "\n  Z = " << element_str(g, *v.z) << "\n  [N,Z] = 0: "
                << (v.bracket_vanishes ? "yes" : "no") << ", N in n: " << (v.n_in_n ? "yes" : "no")
                << ", Z outside n_perp: " << (v.z_outside_n_perp ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_table(const std::string& file, const std::string& exceptional, const std::string& data_dir, bool as_json) {
  const auto dir = resolve_data_dir(data_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(data_dir));
  std::vector<SharedOrbitRecord> rows;
  std::vector<ExceptionalOrbitRecord> ex;
  try {
    rows = load_table(file.empty() ? dir / "table62.tsv" : std::filesystem::path(file));
    ex = load_exceptional(exceptional.empty() ? dir / "exceptional_orbits.json" : std::filesystem::path(exceptional));
  } catch (const DataError& e) {
    throw UsageError(e.what());
  }
  const TableReport rep = validate_tables(rows, ex);
  if (as_json) {
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"line", c.line}, {"row", c.row}, {"instance", c.instance}, {"check", c.what}, {"ok", c.ok},
                        {"detail", c.detail}});
    std::cout << json{{"rows", rep.rows}, {"ok", rep.ok()}, {"checks", checks}}.dump(2) << "\n";
  } else {
    std::cout << rep.rows << " rows, " << rep.checks.size() << " cross-checks\n";
    for (const auto& c : rep.checks)
      std::cout << (c.ok ? "  ok    " : "  FAIL  ") << "line " << c.line << "  " << c.instance << ": " << c.what
                << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  }
  return rep.ok() ? kOk : kCheckFailed;
}

// ------------------------------------------------------------------ orbit

json orbit_json(const JordanOrbit& o) {
  json j{{"partition", o.partition}, {"label", o.str()}, {"dim", orbit_dim(o)}, {"diagram", weighted_diagram(o).str()}};
  j["pi1_order"] = o.is_zero() ? json(nullptr) : json(pi1_order(o));
  return j;
}

int cmd_orbit_list(const std::string& type, bool poset_flag, bool as_json) {
  const CartanType t = parse_type(type);
  if (!t.is_classical()) throw UsageError("orbit list needs a classical type");
  const OrbitPoset poset = enumerate_orbits(t);
  if (as_json) {
    json orbits = json::array();
    for (std::size_t i = 0; i < poset.orbits.size(); ++i) {
      json o = orbit_json(poset.orbits[i]);
      if (poset_flag) {
        json below = json::array();
        for (int j : poset.covered_by(static_cast<int>(i))) below.push_back(poset.orbits[j].str());
        o["covers"] = below;
      }
      orbits.push_back(o);
    }
    std::cout << json{{"type", t.name()}, {"count", poset.orbits.size()}, {"orbits", orbits}}.dump(2) << "\n";
    return kOk;
  }
  std::cout << t.name() << ": " << poset.orbits.size() << " nilpotent orbits\n";
  for (std::size_t i = 0; i < poset.orbits.size(); ++i) {
    const auto& o = poset.orbits[i];
    std::cout << "  " << std::left << std::setw(24) << o.str() << std::right << " dim " << std::setw(3) << orbit_dim(o)
              << "  diagram " << weighted_diagram(o).str();
    if (!o.is_zero()) std::cout << "  pi1 " << pi1_order(o);
    if (poset_flag) {
      std::cout << "  covers";
      for (int j : poset.covered_by(static_cast<int>(i))) std::cout << " " << poset.orbits[j].str();
    }
    std::cout << "\n";
  }
  return kOk;
}

int cmd_orbit_info(const std::string& type, const std::string& partition, bool as_json) {
  const CartanType t = parse_type(type);
  if (!t.is_classical()) throw UsageError("orbit info needs a classical type");
  JordanOrbit o = zero_orbit(t);
  try {
    o = JordanOrbit::parse(t, partition);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const OrbitPoset poset = enumerate_orbits(t);
  const int i = poset.index_of(o);
  json below = json::array(), above = json::array();
  for (int j : poset.covered_by(i)) below.push_back(poset.orbits[j].str());
  for (int j : poset.covers_of(i)) above.push_back(poset.orbits[j].str());
  json out = orbit_json(o);
  out["type"] = t.name();
  out["closure_covers"] = below;
  out["covered_by"] = above;
  const auto codim = boundary_codim(poset, i);
  out["boundary_codim"] = codim ? json(*codim) : json(nullptr);
  if (as_json) {
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << t.name() << " orbit " << o.str() << "\n"
            << "  dim " << orbit_dim(o) << ", diagram " << weighted_diagram(o).str() << "\n";
  if (!o.is_zero()) std::cout << "  pi1 order " << pi1_order(o) << "\n";
  std::cout << "  closure contains " << below.dump() << "\n  contained in closures of " << above.dump() << "\n";
  if (codim) std::cout << "  boundary codimension " << *codim << "\n";
  return kOk;
}

// ------------------------------------------------------------------ model

int cmd_model_sp(int n, const std::string& vector, bool as_json) {
  if (n < 1) throw UsageError("--n must be positive");
  const SymplecticSpace space(n);
  RatVector v = fixture_vector(n);
  if (!vector.empty()) {
    std::vector<int> c;
    try {
      c = parse_int_list(vector);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    if (static_cast<int>(c.size()) != 2 * n) throw UsageError("--vector needs 2n entries");
    for (int i = 0; i < 2 * n; ++i) v(i) = c[i];
    if (v.isZero(0)) throw UsageError("--vector must be nonzero");
  }
  const RankOneElement x = mu(space, v);
  const Partition jt = jordan_type(x.matrix);
  const auto fiber = mu_fiber(space, x.matrix);
  const int kk = kk_rank_at(space, v);
  const int expected = orbit_dim(sp_minimal_orbit(n));
  const bool ok = fiber.size() == 2 && kk == expected && preserves_form(x.matrix, space.form);
  if (as_json) {
    json fib = json::array();
    for (const auto& w : fiber) fib.push_back(rat_vector_json(w));
    std::cout << json{{"n", n},
                      {"v", rat_vector_json(v)},
                      {"mu", rat_matrix_json(x.matrix)},
                      {"in_sp", preserves_form(x.matrix, space.form)},
                      {"jordan_type", jt},
                      {"fiber", fib},
                      {"kk_rank", kk},
                      {"min_orbit_dim", expected}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "sp(" << 2 * n << "), v = " << rat_vector_json(v).dump() << "\nmu(v) = v v^T J:\n";
    print_matrix(std::cout, x.matrix);
    std::cout << "Jordan type " << json(jt).dump() << "\nfiber:";
    for (const auto& w : fiber) std::cout << " " << rat_vector_json(w).dump();
    std::cout << "\nKostant-Kirillov rank " << kk << " (minimal orbit dim " << expected << ")\n";
  }
  return ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------- verify-paper

int cmd_verify(VerifyConfig cfg, const std::string& data_dir, bool list, bool as_json) {
  if (list) {
    for (const auto& s : verify_suites()) std::cout << std::left << std::setw(22) << s.name << s.summary << "\n";
    return kOk;
  }
  cfg.data_dir = resolve_data_dir(data_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(data_dir));
  VerifyResult res;
  try {
    res = verify_paper(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const DataError& e) {
    throw UsageError(e.what());
  }
  if (as_json) {
    json reports = json::array();
    for (const auto& r : res.reports) reports.push_back(to_json(r));
    std::cout << json{{"seed", cfg.seed}, {"ok", res.ok()}, {"reports", reports}}.dump(2) << "\n";
  } else {
    int pass = 0, fail = 0, prob = 0;
    for (const auto& r : res.reports) {
      const char* tag = r.status == Status::Pass ? "PASS " : r.status == Status::Fail ? "FAIL " : "PROB ";
      std::cout << tag << std::left << std::setw(20) << r.suite << r.check;
      if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
      if (r.runtime_ms) std::cout << "  " << std::fixed << std::setprecision(1) << *r.runtime_ms << " ms";
      std::cout << "\n";
      if (r.status == Status::Fail && !r.witness.is_null()) std::cout << "      witness " << r.witness.dump() << "\n";
      (r.status == Status::Pass ? pass : r.status == Status::Fail ? fail : prob)++;
    }
    std::cout << res.reports.size() << " checks: " << pass << " pass, " << fail << " fail, " << prob
              << " probabilistic\n";
  }
  return res.ok() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with root systems, Chevalley algebras and nilpotent orbits", "lieorb"};
  app.require_subcommand(1);

  std::string type, diagram, partition, file, exceptional, data_dir, vector, only;
  bool as_json = false, want_dim = false, want_orbit = false, poset = false, demo = false, timing = false, list = false;
  std::uint64_t seed = PairingOptions{}.seed;
  int n = 2;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  auto* roots = app.add_subcommand("roots", "List the roots of a simple type");
  roots->add_option("--type", type, "Cartan type, e.g. B3")->required();
  roots->add_flag("--json", as_json, "Machine-readable JSON output");

  auto* algebra = app.add_subcommand("algebra", "Dimension and minimal orbit of a simple Lie algebra");
  algebra->add_option("--type", type)->required();
  algebra->add_flag("--dim", want_dim, "Print the dimension");
  algebra->add_flag("--orbit-dim-min", want_orbit, "Print the minimal orbit dimension");
  algebra->add_flag("--json", as_json, "Machine-readable JSON output");

  auto* check = app.add_subcommand("check", "Lemma-level checks on a weighted diagram, or the curated table");
  check->require_subcommand(1);
  auto add_graded = [&](CLI::App* c) {
    c->add_option("--type", type)->required();
    c->add_option("--diagram", diagram, "Labels, e.g. 0,1")->required();
    c->add_flag("--json", as_json, "Machine-readable JSON output");
  };
  auto* key = check->add_subcommand("key-lemma", "Centralizer of a generic N0 against n_perp");
  add_graded(key);
  auto* pairing = check->add_subcommand("pairing", "[N,Q] != 0 for N in g(2), Q in g(-2)");
  add_graded(pairing);
  pairing->add_option("--seed", seed);
  auto* excl = check->add_subcommand("exclusion", "E-type and F4 root obstructions");
  add_graded(excl);
  auto* table = check->add_subcommand("table", "Validate the shared-orbit table");
  table->add_option("--file", file, "Table TSV (default: <data-dir>/table62.tsv)");
  table->add_option("--exceptional", exceptional, "Exceptional orbit JSON");
  table->add_option("--data-dir", data_dir);
  table->add_flag("--json", as_json, "Machine-readable JSON output");

  auto* orbit = app.add_subcommand("orbit", "Classical nilpotent orbits");
  orbit->require_subcommand(1);
  auto* olist = orbit->add_subcommand("list", "All orbits of a classical type");
  olist->add_option("--type", type)->required();
  olist->add_flag("--poset", poset, "Show closure covering relations");
  olist->add_flag("--json", as_json, "Machine-readable JSON output");
  auto* oinfo = orbit->add_subcommand("info", "Invariants of one orbit");
  oinfo->add_option("--type", type)->required();
  oinfo->add_option("--partition", partition, "Parts, e.g. 3,1,1 or 2^2,1:II")->required();
  oinfo->add_flag("--json", as_json, "Machine-readable JSON output");

  auto* model = app.add_subcommand("model", "Matrix models");
  model->require_subcommand(1);
  auto* sp = model->add_subcommand("sp", "The moment map V -> sp(2n), v -> v^2");
  sp->add_option("--n", n, "Half the dimension of V")->check(CLI::Range(1, 8));
  sp->add_flag("--demo", demo, "Run on the fixed fixture vector (default)");
  sp->add_option("--vector", vector, "Use this vector instead, 2n comma-separated integers");
  sp->add_flag("--json", as_json, "Machine-readable JSON output");

  auto* verify = app.add_subcommand("verify-paper", "Replay the full computational case analysis");
  verify->add_option("--seed", seed, "Seed for the pseudo-random fixtures");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--only", only, "Comma-separated suite names");
  verify->add_option("--data-dir", data_dir, "Directory with table62.tsv and exceptional_orbits.json");
  verify->add_flag("--timing", timing, "Report per-check runtimes");
  verify->add_flag("--list", list, "List the suites");
  verify->add_flag("--json", as_json, "Machine-readable JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*roots) return cmd_roots(type, as_json);
    if (*algebra) return cmd_algebra(type, want_dim, want_orbit, as_json);
    if (*key) return cmd_key_lemma(type, diagram, as_json);
    if (*pairing) return cmd_pairing(type, diagram, seed, as_json);
    if (*excl) return cmd_exclusion(type, diagram, as_json);
    if (*table) return cmd_table(file, exceptional, data_dir, as_json);
    if (*olist) return cmd_orbit_list(type, poset, as_json);
    if (*oinfo) return cmd_orbit_info(type, partition, as_json);
    if (*sp) return cmd_model_sp(n, vector, as_json);
    if (*verify) {
      VerifyConfig cfg;
      cfg.seed = seed;
      cfg.jobs = jobs;
      cfg.timing = timing;
      if (!only.empty()) {
        std::stringstream ss(only);
        for (std::string s; std::getline(ss, s, ',');) cfg.only.push_back(s);
      }
      return cmd_verify(cfg, data_dir, list, as_json);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
