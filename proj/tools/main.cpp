#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "posetform/campaign.hpp"
#include "posetform/io.hpp"

namespace fs = std::filesystem;
using namespace posetform;

namespace {

constexpr int kExitCounterexample = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitAlarm = 4;

std::string slug(const std::string& dsl) {
  std::string s;
  for (char c : dsl) {
    if (std::isalnum(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(c));
    else if (c == '/' || c == ',') s += '_';
    else if (c == '+') s += "_plus_";
  }
  return s.empty() ? "poset" : s;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
  std::cout << path.string() << "\n";
}

std::set<std::string> load_resume_keys(const fs::path& path) {
  std::set<std::string> keys;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto row = Json::parse(line, nullptr, false);
    if (!row.is_discarded() && row.contains("key"))
      keys.insert(row["key"].get<std::string>());
  }
  return keys;
}

int run_verify(const std::string& campaign, int n_max, const fs::path& out_dir,
               bool resume, bool findings_fail) {
  fs::create_directories(out_dir);
  fs::path out = out_dir / ("campaign_" + campaign + ".jsonl");
  std::set<std::string> keys;
  if (resume && fs::exists(out)) keys = load_resume_keys(out);
  std::ofstream stream(out, resume ? std::ios::app : std::ios::trunc);
  CampaignResult res =
      run_campaign(campaign, n_max, &stream, resume ? &keys : nullptr);
  Json summary;
  summary["campaign"] = res.name;
  summary["n_max"] = res.n_max;
  summary["census"] = res.census;
  summary["posets"] = res.posets;
  summary["rows"] = res.rows;
  summary["counterexamples"] = res.counterexamples;
  std::cout << summary.dump(2) << "\n";
  if (!res.counterexamples.empty() && findings_fail) return kExitCounterexample;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact quadratic-form analysis of finite posets"};
  app.require_subcommand(1);

  int cap = 16, box = 6, n_max = 6;
  bool json_out = true, resume = false;
  std::string out_dir = ".";
  app.add_flag("--json,!--no-json", json_out, "machine-readable output (default)");
  app.add_option("--cap", cap, "simplex minimization size cap");
  app.add_option("--box", box, "Dynkin coefficient search box");
  app.add_option("--n", n_max, "enumeration bound for campaigns");
  app.add_flag("--resume", resume, "skip rows already present in the output file");
  app.add_option("--out", out_dir, "output directory");

  std::string input, campaign_name;
  auto* analyze = app.add_subcommand("analyze", "full report for a poset");
  analyze->add_option("input", input, "poset file or DSL expression")->required();
  auto* gen = app.add_subcommand("gen", "write a poset file for a DSL expression");
  gen->add_option("dsl", input, "DSL expression")->required();
  auto* lists = app.add_subcommand("lists", "write the critical list fixtures");
  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  verify->add_option("campaign", campaign_name, "campaign name")->required();
  auto* hypothesis = app.add_subcommand("hypothesis", "acyclic non-path witness search");
  auto* min_cmd = app.add_subcommand("min", "simplex minimum and P value");
  min_cmd->add_option("input", input, "poset file or DSL expression")->required();
  auto* cone_cmd = app.add_subcommand("cone", "cone witnesses");
  cone_cmd->add_option("input", input, "poset file or DSL expression")->required();
  auto* classify_cmd = app.add_subcommand("classify", "shape and representation type");
  classify_cmd->add_option("input", input, "poset file or DSL expression")->required();

  for (auto* sub : app.get_subcommands(
           [](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      Poset p = parse_input(input);
      std::cout << analysis_report(p, cap, box).dump(2) << "\n";
    } else if (gen->parsed()) {
      Poset p = parse_dsl(input);
      write_file(fs::path(out_dir) / (slug(input) + ".poset"), poset_to_text(p));
    } else if (lists->parsed()) {
      fs::create_directories(out_dir);
      auto one = critical_list_I();
      for (std::size_t i = 0; i < one.size(); ++i)
        write_file(fs::path(out_dir) / ("list1_" + std::to_string(i + 1) + ".poset"),
                   poset_to_text(one[i]));
      auto two = critical_list_II();
      for (std::size_t i = 0; i < two.size(); ++i)
        write_file(fs::path(out_dir) / ("list2_" + std::to_string(i + 1) + ".poset"),
                   poset_to_text(two[i]));
    } else if (verify->parsed()) {
      return run_verify(campaign_name, n_max, out_dir, resume, true);
    } else if (hypothesis->parsed()) {
      // findings are reported, not treated as failures
      return run_verify("hypothesis", n_max, out_dir, resume, false);
    } else if (min_cmd->parsed()) {
      Poset p = parse_input(input);
      std::cout << minimum_json(minimum_of_poset(p, cap)).dump(2) << "\n";
    } else if (cone_cmd->parsed()) {
      Poset p = parse_input(input);
      QuadraticForm f = form_of_poset(p);
      Json j;
      auto c = c_cone(f);
      j["C"] = c ? witness_json(*c) : Json(nullptr);
      auto hat = hat_cones(f);
      j["Chat"] = hat ? witness_json(*hat) : Json(nullptr);
      auto st = stationary_cone(f);
      j["St"] = st ? witness_json(*st) : Json(nullptr);
      Json dynkin = Json::array();
      for (int m = 0; m < f.n; ++m) {
        DynkinSearch ds = dynkin_vector(f, m, box);
        Json e;
        e["pivot"] = m + 1;
        e["witness"] = ds.witness ? dynkin_json(*ds.witness) : Json(nullptr);
        e["exhaustive"] = ds.exhaustive;
        dynkin.push_back(std::move(e));
      }
      j["dynkin"] = std::move(dynkin);
      std::cout << j.dump(2) << "\n";
    } else if (classify_cmd->parsed()) {
      Poset p = parse_input(input);
      std::cout << classification_json(classify(p, cap)).dump(2) << "\n";
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const ConsistencyAlarm& e) {
    std::cerr << "consistency alarm: " << e.what() << "\n";
    return kExitAlarm;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}
