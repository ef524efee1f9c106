#pragma once

#include <string>

#include <json.hpp>

#include "posetform/classify.hpp"

namespace posetform {

struct ParseError : std::runtime_error {
  int line = 1, column = 1;
  ParseError(const std::string& what, int l, int c)
      : std::runtime_error(what + " at line " + std::to_string(l) +
                           ", column " + std::to_string(c)),
        line(l), column(c) {}
};

// text format: optional '#' comments, a 'n <count>' line, then 'i < j'
// relation lines (1-based)
Poset parse_poset_text(const std::string& text);
std::string poset_to_text(const Poset& p);

// family expressions joined by '+' (disjoint union), e.g.
// "zeta(7/3) + chain(4)"; families: chain, antichain, primitive, zeta,
// crown, fence, wattle, star, dtilde, dn, v, example4
Poset parse_dsl(const std::string& expr);

// file path when it exists on disk, DSL expression otherwise
Poset parse_input(const std::string& arg);

using Json = nlohmann::ordered_json;

Json rat_json(const Rat& r);                 // "p/q" string
Json vec_json(const RatVec& v);
Json mat_json(const RatMat& m);
Json witness_json(const ConeWitness& w);
Json dynkin_json(const DynkinWitness& w);

Json structure_json(const StructureReport& rep);
Json minimum_json(const SimplexMinimum& m);
Json classification_json(const Classification& c);

// the full deterministic analysis report
Json analysis_report(const Poset& p, int cap = 16, int box = 6);

}  // namespace posetform
