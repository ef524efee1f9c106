#include "posetform/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace posetform {

Poset parse_poset_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::pair<int, int>> pairs;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t pos = line.find('#');
    if (pos != std::string::npos) line = line.substr(0, pos);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "n") {
      if (n >= 0) throw ParseError("duplicate size line", lineno, 1);
      if (!(ls >> n) || n < 1)
        throw ParseError("expected positive count after 'n'", lineno, 3);
      continue;
    }
    int i, j;
    std::string rel;
    std::istringstream rs(line);
    if (!(rs >> i >> rel >> j) || rel != "<")
      throw ParseError("expected 'i < j' relation", lineno, 1);
    if (n < 0) throw ParseError("relation before size line", lineno, 1);
    if (i < 1 || i > n || j < 1 || j > n)
      throw ParseError("element index out of range", lineno, 1);
    pairs.emplace_back(i, j);
  }
  if (n < 0) throw ParseError("missing 'n <count>' line", lineno ? lineno : 1, 1);
  try {
    return Poset::from_relations(n, pairs);
  } catch (const CycleInOrder&) {
    throw ParseError("relations close into a cycle", lineno, 1);
  }
}

std::string poset_to_text(const Poset& p) {
  std::ostringstream out;
  out << "n " << p.n() << "\n";
  for (auto [i, j] : p.relations()) out << i << " < " << j << "\n";
  return out.str();
}

namespace {

struct DslParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit DslParser(const std::string& str) : s(str) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, 1, static_cast<int>(pos) + 1);
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stol(s.substr(start, pos - start));
  }
  Rat rational() {
    long num = integer();
    if (eat('/')) return rat(num, integer());
    return Rat(num);
  }
  std::string name() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected family name");
    std::string id = s.substr(start, pos - start);
    for (auto& c : id) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return id;
  }
  std::vector<long> int_args() {
    std::vector<long> args;
    if (!eat('(')) fail("expected '('");
    args.push_back(integer());
    while (eat(',')) args.push_back(integer());
    if (!eat(')')) fail("expected ')'");
    return args;
  }

  Poset term() {
    std::string id = name();
    try {
      if (id == "v") return family_V();
      if (id == "example4") return example4_fixture();
      if (id == "zeta") {
        if (!eat('(')) fail("expected '('");
        Rat r = rational();
        if (!eat(')')) fail("expected ')'");
        return zeta_generate(r).poset;
      }
      std::vector<long> a = int_args();
      auto ints = [&] { return std::vector<int>(a.begin(), a.end()); };
      if (id == "chain" && a.size() == 1) return chain(a[0]);
      if (id == "antichain" && a.size() == 1) return antichain(a[0]);
      if (id == "primitive") return primitive(ints());
      if (id == "crown" && a.size() == 1) return crown(a[0]);
      if (id == "fence" && a.size() == 2) return fence(a[0], a[1]);
      if (id == "wattle") return wattle(ints());
      if (id == "star" && a.size() >= 3) return standard_star(ints());
      if (id == "dtilde" && a.size() == 1) return standard_dtilde(a[0]);
      if (id == "dn" && a.size() == 1) return standard_dn(a[0]);
    } catch (const BadParams& e) {
      fail(e.what());
    } catch (const BadRational& e) {
      fail(e.what());
    }
    fail("unknown family '" + id + "' (or wrong argument count)");
  }

  Poset expr() {
    Poset p = term();
    while (true) {
      skip_ws();
      if (!eat('+')) break;
      p = disjoint_union(p, term());
    }
    skip_ws();
    if (pos != s.size()) fail("trailing input");
    return p;
  }
};

}  // namespace

Poset parse_dsl(const std::string& expr) { return DslParser(expr).expr(); }

Poset parse_input(const std::string& arg) {
  std::ifstream f(arg);
  if (f.good()) {
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_poset_text(buf.str());
  }
  return parse_dsl(arg);
}

Json rat_json(const Rat& r) { return rat_str(r); }

Json vec_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_str(x));
  return a;
}

Json mat_json(const RatMat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json witness_json(const ConeWitness& w) {
  Json j;
  j["cone"] = cone_kind_name(w.cone);
  j["vector"] = vec_json(w.vector);
  j["gradient"] = vec_json(w.gradient);
  j["coordinate_sum"] = rat_str(w.coordinate_sum);
  return j;
}

Json dynkin_json(const DynkinWitness& w) {
  Json j;
  j["pivot"] = w.pivot + 1;  // 1-based in output
  j["vector"] = vec_json(w.vector);
  j["pivot_gradient"] = rat_str(w.pivot_gradient);
  return j;
}

namespace {

Json index_list(const std::vector<int>& v) {
  Json a = Json::array();
  for (int i : v) a.push_back(i + 1);
  return a;
}

Json index_lists(const std::vector<std::vector<int>>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(index_list(v));
  return a;
}

}  // namespace

Json structure_json(const StructureReport& rep) {
  Json j;
  j["connected"] = rep.connected;
  j["components"] = index_lists(rep.components);
  j["cyclic"] = rep.cyclic;
  j["simple_cycle"] =
      rep.simple_cycle ? index_list(*rep.simple_cycle) : Json(nullptr);
  j["junction_points"] = index_list(rep.junction_points);
  j["junction_components"] = index_lists(rep.junction_components);
  j["width"] = rep.width;
  j["terminal_points"] = index_list(rep.terminal_points);
  j["branch_points"] = index_list(rep.branch_points);
  j["incidence"] = rep.incidence;
  return j;
}

Json minimum_json(const SimplexMinimum& m) {
  Json j;
  j["value"] = rat_str(m.value);
  j["value_approx"] = approx(m.value);
  j["minimizer"] = vec_json(m.minimizer);
  j["support"] = index_list(m.support);
  j["interior"] = m.interior;
  j["p_value"] = rat_str(m.p_value);
  j["p_value_approx"] = approx(m.p_value);
  return j;
}

Json classification_json(const Classification& c) {
  Json j;
  j["shape"] = shape_name(c.shape);
  if (c.wattle) {
    j["wattle_orders"] = c.wattle->orders;
    j["wattle_t"] = c.wattle->t;
  }
  j["r"] = c.r ? Json(rat_str(*c.r)) : Json(nullptr);
  j["rep_type"] = rep_type_name(c.rep);
  j["p_value"] = rat_str(c.p_value);
  j["p_value_approx"] = approx(c.p_value);
  j["in_list_I"] = c.in_list_I;
  j["in_list_II"] = c.in_list_II;
  j["utmost"] = c.utmost;
  j["antimonotonous"] = c.antimonotonous;
  if (c.c_witness) j["c_witness"] = witness_json(*c.c_witness);
  j["p_faithful"] = c.p_faithful;
  return j;
}

Json analysis_report(const Poset& p, int cap, int box) {
  Json j;
  Json echo;
  echo["n"] = p.n();
  Json rels = Json::array();
  for (auto [a, b] : p.relations()) rels.push_back(Json::array({a, b}));
  echo["relations"] = rels;
  if (!p.labels().empty()) echo["labels"] = p.labels();
  j["poset"] = std::move(echo);
  j["structure"] = structure_json(structure(p));

  QuadraticForm f = form_of_poset(p);
  Json form;
  form["A"] = mat_json(f.A);
  form["two_A"] = mat_json(f.A.scaled(2));
  Rat det = determinant(f.A);
  form["det_A"] = rat_str(det);
  form["det_two_A"] = rat_str(det * Rat(mpz_class(1) << f.n));
  Definiteness d = definiteness(f);
  switch (d.kind) {
    case DefinitenessKind::PositiveDefinite:
      form["definiteness"] = "positive_definite";
      break;
    case DefinitenessKind::PositiveSemidefiniteDegenerate:
      form["definiteness"] = "positive_semidefinite_degenerate";
      break;
    case DefinitenessKind::Indefinite:
      form["definiteness"] = "indefinite";
      break;
  }
  if (d.certificate) form["certificate"] = vec_json(*d.certificate);
  j["form"] = std::move(form);

  Json cones;
  auto c = c_cone(f);
  cones["C"] = c ? witness_json(*c) : Json(nullptr);
  auto hat = hat_cones(f);
  cones["Chat"] = hat ? witness_json(*hat) : Json(nullptr);
  auto st = stationary_cone(f);
  cones["St"] = st ? witness_json(*st) : Json(nullptr);
  auto fw = faithful_witness(p);
  if (fw) {
    Json fj;
    fj["vector"] = vec_json(fw->u);
    fj["value"] = rat_str(fw->value);
    fj["strictness_certified"] = fw->strictness_certified;
    cones["St_tilde"] = std::move(fj);
  } else {
    cones["St_tilde"] = nullptr;
  }
  Json dynkin = Json::array();
  for (int m = 0; m < f.n; ++m) {
    DynkinSearch ds = dynkin_vector(f, m, box);
    Json e;
    e["pivot"] = m + 1;
    e["witness"] = ds.witness ? dynkin_json(*ds.witness) : Json(nullptr);
    e["exhaustive"] = ds.exhaustive;
    dynkin.push_back(std::move(e));
  }
  cones["dynkin"] = std::move(dynkin);
  j["cones"] = std::move(cones);

  j["minimum"] = minimum_json(minimum_of_poset(p, cap));
  j["classification"] = classification_json(classify(p, cap));
  return j;
}

}  // namespace posetform
