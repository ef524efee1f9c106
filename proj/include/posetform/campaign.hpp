#pragma once

#include <functional>
#include <ostream>
#include <set>

#include "posetform/io.hpp"

namespace posetform {

struct UnknownCampaign : std::runtime_error {
  explicit UnknownCampaign(const std::string& w) : std::runtime_error(w) {}
};

struct CampaignResult {
  std::string name;
  int n_max = 0;
  int posets = 0;    // enumerated posets visited
  int rows = 0;      // rows emitted (skipped rows excluded)
  std::vector<Json> counterexamples;
  std::vector<int> census;  // class counts per n
};

// campaigns: theorem, prop1, prop2, prop6, prop7, lemma8, lemma12,
// identities, hypothesis. Asserts the census (1,2,5,16,63,318) before
// running. jsonl gets one row per poset; resume_keys skip matching rows.
CampaignResult run_campaign(const std::string& name, int n_max,
                            std::ostream* jsonl = nullptr,
                            const std::set<std::string>* resume_keys = nullptr);

std::vector<std::string> campaign_names();

}  // namespace posetform
