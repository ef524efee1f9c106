#include "posetform/campaign.hpp"

#include <algorithm>
#include <random>

namespace posetform {

namespace {

Json poset_row(const Poset& p) {
  Json j;
  j["n"] = p.n();
  Json rels = Json::array();
  for (auto [a, b] : p.relations()) rels.push_back(Json::array({a, b}));
  j["relations"] = rels;
  return j;
}

RatVec random_vec(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  RatVec v(n);
  for (int i = 0; i < n; ++i) v[i] = rat(num(rng), den(rng));
  return v;
}

bool identities_hold(const QuadraticForm& f, std::mt19937& rng, int reps) {
  for (int it = 0; it < reps; ++it) {
    RatVec u = random_vec(rng, f.n), v = random_vec(rng, f.n);
    RatVec gu = gradient(f, u), gv = gradient(f, v);
    // (1) f(u+v) = f(u) + f(v) + sum u'_i v_i
    if (evaluate(f, vec_add(u, v)) !=
        evaluate(f, u) + evaluate(f, v) + dot(gu, v))
      return false;
    // (2) symmetry of the pairing, and the epsilon expansion at eps = 3/2
    if (dot(gu, v) != dot(gv, u)) return false;
    Rat eps = rat(3, 2);
    if (evaluate(f, vec_add(u, vec_scaled(v, eps))) !=
        evaluate(f, u) + eps * eps * evaluate(f, v) + eps * dot(u, gv))
      return false;
    // (3) f(u) = 1/2 sum u_i u'_i
    if (evaluate(f, u) != dot(u, gu) / 2) return false;
  }
  return true;
}

// does any proper induced subposet have a cyclic Gamma?
bool minimally_cyclic(const Poset& p) {
  if (!structure(p).cyclic) return false;
  const int n = p.n();
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) keep.push_back(i);
    if (keep.size() < 4) continue;  // a Gamma cycle needs >= 4 vertices
    if (structure(induced_subposet(p, keep)).cyclic) return false;
  }
  return true;
}

bool gamma_is_path(const Poset& p) {
  GammaClass gc = gamma_class(p);
  return gc.kind == GammaKind::Chain || gc.kind == GammaKind::An;
}

}  // namespace

std::vector<std::string> campaign_names() {
  return {"theorem", "prop1", "prop2", "prop6",     "prop7",
          "lemma8",  "lemma12", "identities", "hypothesis"};
}

CampaignResult run_campaign(const std::string& name, int n_max,
                            std::ostream* jsonl,
                            const std::set<std::string>* resume_keys) {
  auto names = campaign_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw UnknownCampaign("unknown campaign '" + name + "'");
  if (n_max < 1 || n_max > 7)
    throw CapExceeded("campaigns run at 1 <= n_max <= 7");

  CampaignResult res;
  res.name = name;
  res.n_max = n_max;

  static const int expected_census[] = {1, 2, 5, 16, 63, 318};
  std::mt19937 rng(20250817);

  for (int n = 1; n <= n_max; ++n) {
    std::vector<Poset> all = enumerate_posets(n);
    if (n <= 6 && static_cast<int>(all.size()) != expected_census[n - 1])
      throw std::logic_error("census mismatch at n = " + std::to_string(n));
    res.census.push_back(static_cast<int>(all.size()));

    for (const Poset& p : all) {
      ++res.posets;
      std::string key = canonical_key(p);
      if (resume_keys && resume_keys->count(key)) continue;
      QuadraticForm f = form_of_poset(p);
      StructureReport rep = structure(p);
      bool psd = is_psd(definiteness(f));

      Json row = poset_row(p);
      row["campaign"] = name;
      row["key"] = key;
      bool ok = true;
      bool applicable = true;

      if (name == "theorem") {
        applicable = rep.connected && psd;
        if (applicable) {
          bool antimono = !c_cone(f).has_value();
          Recognition rec = recognize(p);
          bool rset = rec.shape == Shape::Chain || rec.shape == Shape::RSet;
          row["antimonotonous"] = antimono;
          row["shape"] = shape_name(rec.shape);
          ok = antimono == rset;
        }
      } else if (name == "prop1") {
        auto st = stationary_cone(f);
        auto ct = c_tilde(f);
        row["st_nonempty"] = st.has_value();
        row["c_tilde_nonempty"] = ct.has_value();
        ok = !(st && ct);
      } else if (name == "prop2") {
        applicable = determinant(f.A) != 0;
        if (applicable) {
          Dichotomy d = nonsingular_dichotomy(f);
          row["st_nonempty"] = d.st.has_value();
          ok = d.st.has_value() != d.c.has_value();
          if (d.st && c_cone(f)) ok = false;
          if (d.c && stationary_cone(f)) ok = false;
        }
      } else if (name == "prop6") {
        applicable = rep.connected && psd && !c_cone(f).has_value();
        if (applicable) {
          row["gamma_path"] = gamma_is_path(p);
          ok = gamma_is_path(p);
        }
      } else if (name == "prop7") {
        applicable = rep.connected && psd && !c_cone(f).has_value();
        if (applicable) {
          Recognition rec = recognize(p);
          row["shape"] = shape_name(rec.shape);
          ok = rec.shape != Shape::Other;
        }
      } else if (name == "lemma8") {
        applicable = minimally_cyclic(p);
        if (applicable) {
          bool match = isomorphic(p, family_V());
          for (int k = 2; 2 * k <= p.n() && !match; ++k)
            match = isomorphic(p, crown(k));
          row["is_v_or_crown"] = match;
          ok = match;
        }
      } else if (name == "lemma12") {
        applicable = rep.connected && gamma_is_path(p);
        if (applicable) {
          Recognition rec = recognize(p);
          bool chain_or_wattle = rec.shape != Shape::Other;
          bool all_even = true;
          for (const auto& comp : rep.junction_components)
            if (comp.size() % 2 != 0) all_even = false;
          row["chain_or_wattle"] = chain_or_wattle;
          row["junction_components_even"] = all_even;
          ok = chain_or_wattle == all_even;
        }
      } else if (name == "identities") {
        ok = identities_hold(f, rng, 8);
        row["identities"] = ok;
      } else {  // hypothesis
        applicable = rep.connected && !rep.cyclic && !gamma_is_path(p);
        if (applicable) {
          auto w = c_cone(f);
          row["witness"] = w ? witness_json(*w) : Json(nullptr);
          ok = w.has_value();
        }
      }

      if (!applicable) continue;
      row["ok"] = ok;
      ++res.rows;
      if (jsonl) *jsonl << row.dump() << "\n";
      if (!ok) res.counterexamples.push_back(std::move(row));
    }
  }
  return res;
}

}  // namespace posetform
