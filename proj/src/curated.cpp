#include "lieorb/curated.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <numeric>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lieorb/dynkin.hpp"

#ifndef LIEORB_SOURCE_DATA_DIR
#define LIEORB_SOURCE_DATA_DIR "data"
#endif

namespace lieorb {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Family family_from_letter(char c) {
  static const std::string letters = "ABCDEFG";
  const auto pos = letters.find(c);
  if (pos == std::string::npos) throw std::invalid_argument(std::string("unknown family '") + c + "'");
  return static_cast<Family>(pos);
}

std::string join_parts(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

}  // namespace

// ---------------------------------------------------------------- TypeExpr

TypeExpr TypeExpr::parse(std::string_view text) {
  static const std::regex fixed(R"(([A-G])(\d+))");
  static const std::regex param(R"(([A-G])_(?:\{(\d*)l([+-]\d+)?\}|(l)))");
  const std::string s(text);
  std::smatch m;
  TypeExpr e;
  if (std::regex_match(s, m, fixed)) {
    e.family = family_from_letter(m[1].str()[0]);
    e.offset = std::stoi(m[2]);
    e.at(0);  // validates the rank
    return e;
  }
  if (std::regex_match(s, m, param)) {
    e.family = family_from_letter(m[1].str()[0]);
    if (m[4].matched) {
      e.coef = 1;
    } else {
      e.coef = m[2].length() ? std::stoi(m[2]) : 1;
      e.offset = m[3].matched ? std::stoi(m[3]) : 0;
    }
    if (e.coef <= 0) throw std::invalid_argument("bad rank expression in '" + s + "'");
    return e;
  }
  throw std::invalid_argument("cannot parse type '" + s + "'");
}

CartanType TypeExpr::at(int l) const { return CartanType{family, coef * l + offset}; }

std::string TypeExpr::str() const {
  std::string s(1, family_letter(family));
  if (!parametric()) return s + std::to_string(offset);
  if (coef == 1 && offset == 0) return s + "_l";
  s += "_{";
  if (coef != 1) s += std::to_string(coef);
  s += "l";
  if (offset > 0) s += "+" + std::to_string(offset);
  if (offset < 0) s += std::to_string(offset);
  return s + "}";
}

// --------------------------------------------------------------- OrbitSpec

OrbitSpec OrbitSpec::parse(std::string_view text) {
  OrbitSpec o;
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty orbit");
  if (s.front() != '(') {
    static const std::regex ident(R"([a-z][a-z0-9_]*)");
    if (!std::regex_match(s, ident)) throw std::invalid_argument("bad orbit name '" + s + "'");
    o.name = s;
    return o;
  }
  if (s.back() != ')') throw std::invalid_argument("unbalanced parentheses in '" + s + "'");
  std::vector<std::string> items;
  std::istringstream in(s.substr(1, s.size() - 2));
  for (std::string item; std::getline(in, item, ',');) items.push_back(item);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i] == "...") {
      if (i == 0 || i + 2 != items.size() || items[i + 1] != items[i - 1])
        throw std::invalid_argument("'...' must sit between two equal trailing parts in '" + s + "'");
      o.fill = std::stoi(items[i + 1]);
      o.prefix.pop_back();
      break;
    }
    std::size_t used = 0;
    const int v = std::stoi(items[i], &used);
    if (used != items[i].size() || v <= 0) throw std::invalid_argument("bad part '" + items[i] + "'");
    o.prefix.push_back(v);
  }
  if (o.prefix.empty() && o.fill == 0) throw std::invalid_argument("empty partition");
  return o;
}

JordanOrbit OrbitSpec::at(const CartanType& t) const {
  if (named()) throw std::invalid_argument("named orbit '" + name + "' has no partition");
  Partition p = prefix;
  const int n = standard_dim(t);
  int total = std::accumulate(p.begin(), p.end(), 0);
  if (fill > 0) {
    if ((n - total) % fill != 0 || total > n) throw std::invalid_argument("cannot fill " + str() + " for " + t.name());
    for (; total < n; total += fill) p.push_back(fill);
  }
  return {t, p, is_very_even(t, p) ? 1 : 0};
}

std::string OrbitSpec::str() const {
  if (named()) return name;
  std::string s = "(" + join_parts(prefix);
  if (fill > 0) s += (prefix.empty() ? "" : ",") + std::to_string(fill) + ",...," + std::to_string(fill);
  return s + ")";
}

// ------------------------------------------------------------------- table

std::vector<SharedOrbitRecord> parse_table(std::string_view text) {
  std::vector<SharedOrbitRecord> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!header) {
      if (line != kTableHeader) throw DataError("expected header '" + std::string(kTableHeader) + "'", no);
      header = true;
      continue;
    }
    std::vector<std::string> cols;
    std::istringstream ls(line);
    for (std::string c; std::getline(ls, c, '\t');) cols.push_back(c);
    if (cols.size() != 4) throw DataError("expected 4 tab-separated columns, got " + std::to_string(cols.size()), no);
    try {
      SharedOrbitRecord r;
      r.g = TypeExpr::parse(cols[0]);
      r.g_prime = TypeExpr::parse(cols[1]);
      r.orbit = OrbitSpec::parse(cols[2]);
      std::size_t used = 0;
      r.degree = std::stoi(cols[3], &used);
      if (used != cols[3].size() || r.degree < 1) throw std::invalid_argument("degree must be a positive integer");
      r.line = no;
      rows.push_back(r);
    } catch (const DataError&) {
      throw;
    } catch (const std::exception& e) {
      throw DataError(e.what(), no);
    }
  }
  if (!header) throw DataError("missing header");
  return rows;
}

std::vector<SharedOrbitRecord> load_table(const std::filesystem::path& path) { return parse_table(read_file(path)); }

std::string serialize_table(const std::vector<SharedOrbitRecord>& rows) {
  std::string out(kTableHeader);
  out += '\n';
  for (const auto& r : rows)
    out += r.g.str() + '\t' + r.g_prime.str() + '\t' + r.orbit.str() + '\t' + std::to_string(r.degree) + '\n';
  return out;
}

// ------------------------------------------------------------- exceptional

std::vector<ExceptionalOrbitRecord> parse_exceptional(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("orbits") || !doc["orbits"].is_array())
    throw DataError("expected an object with an 'orbits' array");
  std::vector<ExceptionalOrbitRecord> out;
  int k = 0;
  for (const auto& o : doc["orbits"]) {
    const std::string where = "orbits[" + std::to_string(k++) + "]";
    try {
      ExceptionalOrbitRecord r;
      r.g = CartanType::parse(o.at("g").get<std::string>());
      if (r.g.family != Family::G && r.g.family != Family::F) throw DataError("only G2 and F4 orbits are curated");
      r.name = o.at("name").get<std::string>();
      r.labels = o.at("labels").get<std::vector<int>>();
      r.dimension = o.at("dimension").get<int>();
      r.pi1_order = o.at("pi1_order").get<int>();
      if (!o.at("closure_normal").is_null()) r.closure_normal = o.at("closure_normal").get<bool>();
      r.citation = o.at("citation").get<std::string>();
      r.diagram();  // label count and range
      if (r.dimension <= 0 || r.dimension % 2 != 0) throw DataError("dimension must be positive and even");
      if (r.pi1_order < 1) throw DataError("pi1_order must be positive");
      out.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw DataError(where + ": " + e.what());
    }
  }
  return out;
}

std::vector<ExceptionalOrbitRecord> load_exceptional(const std::filesystem::path& path) {
  return parse_exceptional(read_file(path));
}

std::string serialize_exceptional(const std::vector<ExceptionalOrbitRecord>& recs) {
  json arr = json::array();
  for (const auto& r : recs) {
    json o;
    o["g"] = r.g.name();
    o["name"] = r.name;
    o["labels"] = r.labels;
    o["dimension"] = r.dimension;
    o["pi1_order"] = r.pi1_order;
    o["closure_normal"] = r.closure_normal ? json(*r.closure_normal) : json(nullptr);
    o["citation"] = r.citation;
    arr.push_back(o);
  }
  return json{{"orbits", arr}}.dump(2) + "\n";
}

const ExceptionalOrbitRecord* find_exceptional(const std::vector<ExceptionalOrbitRecord>& recs, const CartanType& g,
                                               std::string_view name) {
  for (const auto& r : recs)
    if (r.g == g && r.name == name) return &r;
  return nullptr;
}

std::filesystem::path resolve_data_dir(const std::optional<std::filesystem::path>& explicit_dir) {
  if (explicit_dir) return *explicit_dir;
  if (const char* env = std::getenv("LIEORB_DATA_DIR"); env && *env) return env;
  return LIEORB_SOURCE_DATA_DIR;
}

// -------------------------------------------------------------- validation

std::vector<int> validation_ranks(const TypeExpr& g) {
  if (!g.parametric()) return {g.offset};
  const int lo = g.family == Family::D ? 4 : 2;
  std::vector<int> out;
  for (int l = lo; l <= 6; ++l) out.push_back(l);
  return out;
}

bool TableReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const TableCheck& c) { return c.ok; });
}

namespace {

class AlgebraCache {
 public:
  const ChevalleyAlgebra& get(const CartanType& t) {
    auto it = cache_.find(t.name());
    if (it == cache_.end()) it = cache_.emplace(t.name(), std::make_unique<ChevalleyAlgebra>(build_algebra(t))).first;
    return *it->second;
  }

 private:
  std::map<std::string, std::unique_ptr<ChevalleyAlgebra>> cache_;
};

int min_orbit_dim(AlgebraCache& cache, const CartanType& t) {
  const auto& g = cache.get(t);
  return orbit_dimension(g, g.X(g.roots().highest_root_index()));
}

}  // namespace

TableReport validate_tables(const std::vector<SharedOrbitRecord>& rows,
                            const std::vector<ExceptionalOrbitRecord>& exceptional) {
  TableReport rep;
  rep.rows = static_cast<int>(rows.size());
  AlgebraCache cache;
  for (const auto& r : rows) {
    const std::string row = r.g.str() + " " + r.g_prime.str() + " " + r.orbit.str() + " " + std::to_string(r.degree);
    auto add = [&](const std::string& instance, const std::string& what, bool ok, std::string detail) {
      rep.checks.push_back({r.line, row, instance, what, ok, std::move(detail)});
    };
    for (int l : validation_ranks(r.g)) {
      CartanType t, tp;
      try {
        t = r.g.at(l);
        tp = r.g_prime.at(l);
      } catch (const std::exception& e) {
        add(r.g.str() + " l=" + std::to_string(l), "types", false, e.what());
        continue;
      }
      const int target = min_orbit_dim(cache, tp);
      if (!r.orbit.named()) {
        std::optional<JordanOrbit> o;
        try {
          o = r.orbit.at(t);
        } catch (const std::exception& e) {
          add(t.name() + " " + r.orbit.str(), "orbit valid", false, e.what());
          continue;
        }
        const std::string inst = t.name() + " " + o->str();
        add(inst, "orbit valid", true, "");
        const int pi1 = pi1_order(*o);
        add(inst, "pi1 order equals degree", pi1 == r.degree,
            "pi1 = " + std::to_string(pi1) + ", degree = " + std::to_string(r.degree));
        const int d = orbit_dim(*o);
        add(inst, "dim O equals dim O_min of " + tp.name(), d == target,
            std::to_string(d) + " vs " + std::to_string(target));
        continue;
      }
      const std::string inst = t.name() + " " + r.orbit.name;
      const ExceptionalOrbitRecord* rec = find_exceptional(exceptional, t, r.orbit.name);
      if (!rec) {
        add(inst, "curated metadata present", false, "no exceptional record");
        continue;
      }
      add(inst, "curated metadata present", true, "");
      add(inst, "curated pi1 order equals degree", rec->pi1_order == r.degree,
          "pi1 = " + std::to_string(rec->pi1_order) + ", degree = " + std::to_string(r.degree));
      const auto& g = cache.get(t);
      const Grading gr = grading_from_diagram(g, rec->diagram());
      const auto gen = generic_element(g, gr);
      if (!gen) {
        add(inst, "diagram realizes a nilpotent orbit", false, "no sl2 triple for " + rec->diagram().str());
        continue;
      }
      const int d = orbit_dimension(g, gen->triple.n0);
      add(inst, "curated dimension", d == rec->dimension,
          "computed " + std::to_string(d) + ", curated " + std::to_string(rec->dimension));
      add(inst, "dim O equals dim O_min of " + tp.name(), d == target,
          std::to_string(d) + " vs " + std::to_string(target));
      if (r.orbit.name == "short") {
        const auto sd = short_root_orbit_diagram(g);
        add(inst, "diagram equals short root vector diagram", sd && *sd == rec->diagram(),
            "computed " + (sd ? sd->str() : std::string("none")) + ", curated " + rec->diagram().str());
      } else if (r.orbit.name == "sub") {
        const int expect = g.dim() - g.rank() - 2;
        add(inst, "subregular codimension 2 in the nilpotent cone", d == expect,
            std::to_string(d) + " vs " + std::to_string(expect));
      }
    }
  }
  return rep;
}

}  // namespace lieorb
