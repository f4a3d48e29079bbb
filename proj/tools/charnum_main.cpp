#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "charnum/bundle_bh.hpp"
#include "charnum/chern.hpp"
#include "charnum/genus.hpp"
#include "charnum/json_io.hpp"
#include "charnum/lattice.hpp"
#include "charnum/qseries.hpp"
#include "charnum/ring_model.hpp"
#include "charnum/verify.hpp"

namespace {

using namespace charnum;

#ifndef CHARNUM_DATA_DIR
#define CHARNUM_DATA_DIR "data"
#endif

int default_cap() {
  if (const char* env = std::getenv("CHARNUM_CAP")) {
    try {
      int cap = std::stoi(env);
      if (cap >= 1) return cap;
    } catch (...) {
    }
    throw std::invalid_argument("CHARNUM_CAP must be a positive integer");
  }
  return 6;
}

std::string data_dir() {
  if (const char* env = std::getenv("CHARNUM_DATA")) return env;
  return CHARNUM_DATA_DIR;
}

bool file_exists(const std::string& path) {
  std::ifstream in(path);
  return static_cast<bool>(in);
}

// Built-in names resolve to the bundled manifests, falling back to the
// engine-computed classes when no data directory is present; anything else
// is treated as a manifest path.
PontryaginNumbers resolve_manifold(const std::string& name) {
  static const std::map<std::string, std::string> builtin = {
      {"M1", "m1"},     {"M2", "m2"},   {"M3", "m3"},  {"M4", "m4"},
      {"M0_8", "m0_8"}, {"OP2", "op2"}, {"N8", "n8"}};
  auto it = builtin.find(name);
  if (it == builtin.end()) return load_manifold_numbers(name);
  std::string path = data_dir() + "/" + it->second + ".json";
  if (file_exists(path)) return load_manifold_numbers(path);
  if (name == "M1") return KappaData::instance().basis_numbers[0];
  if (name == "M2") return KappaData::instance().basis_numbers[1];
  if (name == "M3")
    return product_model(kervaire_milnor_model(2), op2_model()).numbers();
  if (name == "M4") return m4_model().numbers();
  if (name == "M0_8") return kervaire_milnor_model(2).numbers();
  if (name == "OP2") return op2_model().numbers();
  return n8_model().numbers();
}

int run_verify(bool all, const std::vector<std::string>& suites) {
  std::vector<verify::SuiteResult> results;
  if (all || suites.empty()) {
    results = verify::run_all();
  } else {
    for (const auto& name : suites) results.push_back(verify::run_suite(name));
  }
  bool ok = true;
  for (const auto& r : results) {
    std::cout << r.str();
    ok = ok && r.pass();
  }
  std::cout << (ok ? "all suites passed" : "SOME SUITES FAILED") << "\n";
  return ok ? 0 : 1;
}

int run_eval(const std::string& manifold, const std::string& genus,
             const std::string& twist, int order) {
  PontryaginNumbers nums = resolve_manifold(manifold);
  if (nums.dim % 4 != 0)
    throw std::invalid_argument("manifold dimension must be divisible by 4");
  int cap = nums.dim / 4;
  if (genus == "witten") {
    Twist tw = parse_twist(twist);
    if (tw.t != 0 || tw.l != 0 || tw.s != 0)
      throw std::invalid_argument(
          "the witten genus takes no twist expression");
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : witten_modular(nums, order).coeffs)
      arr.push_back(c.str());
    std::cout << arr.dump() << "\n";
    return 0;
  }
  Twist tw = twist.empty() ? Twist{} : parse_twist(twist);
  ChernCharacter e = twist_character(tw, nums.dim, cap);
  Rational v;
  if (genus == "ahat") {
    v = twisted_ahat(nums, e);
  } else if (genus == "sig") {
    v = twisted_sig(nums, e);
  } else {
    throw std::invalid_argument("unknown genus: " + genus +
                                " (expected ahat, sig, or witten)");
  }
  std::cout << v.str() << "\n";
  return 0;
}

int run_bh(bool dump_fiber, bool dump_m4) {
  if (dump_fiber == dump_m4)
    throw std::invalid_argument(
        "choose exactly one of --dump-fiber-class and --dump-m4");
  if (dump_fiber) {
    std::cout << fiber_pontryagin(f4_spin9_roots(), default_cap()).str()
              << "\n";
  } else {
    std::cout << model_to_json(m4_model()).dump(1) << "\n";
  }
  return 0;
}

int run_divisibility(const std::string& theorem) {
  DivisibilityReport rep = theorem.empty() ? divisibility_theorems()
                                           : divisibility_theorem(theorem);
  std::cout << rep.str();
  return rep.all_pass() ? 0 : 1;
}

int run_sweep(int max_total, long modulus, const std::string& format) {
  SweepTable t = conjecture_sweep(max_total, modulus);
  if (format == "json") {
    std::cout << t.json() << "\n";
  } else if (format == "tsv") {
    std::cout << t.tsv();
  } else {
    throw std::invalid_argument("unknown format: " + format);
  }
  return t.all_pass ? 0 : 1;
}

int run_decompose(const std::string& manifold) {
  PontryaginNumbers nums = resolve_manifold(manifold);
  auto kv = kappa(nums);
  std::cout << "kappa = (" << kv[0].str() << ", " << kv[1].str() << ", "
            << kv[2].str() << ", " << kv[3].str() << ")\n";
  std::cout << "decomposition: " << decompose(nums).str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "charnum — exact characteristic numbers, twisted genera, and "
      "cobordism-lattice divisibility for 24-dimensional String manifolds"};
  app.require_subcommand(1);

  std::function<int()> action;

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  bool verify_all = false;
  std::vector<std::string> verify_suites;
  verify_cmd->add_flag("--all", verify_all, "run every suite");
  verify_cmd->add_option("--suite", verify_suites,
                         "suite name (repeatable); see --list");
  bool verify_list = false;
  verify_cmd->add_flag("--list", verify_list, "list suite names and exit");
  verify_cmd->callback([&] {
    if (verify_list) {
      action = [] {
        for (const auto& n : charnum::verify::suite_names())
          std::cout << n << "\n";
        return 0;
      };
      return;
    }
    action = [&] { return run_verify(verify_all, verify_suites); };
  });

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a genus on a manifold");
  std::string eval_manifold, eval_genus = "ahat", eval_twist;
  int eval_order = 5;
  eval_cmd->add_option("--manifold", eval_manifold,
                       "built-in name (M1, M2, M3, M4, M0_8, OP2, N8) or "
                       "manifest path")
      ->required();
  eval_cmd->add_option("--genus", eval_genus, "ahat | sig | witten");
  eval_cmd->add_option("--twist", eval_twist,
                       "twist expression, e.g. \"T^2*L\" or \"S^3\"");
  eval_cmd->add_option("--order", eval_order,
                       "q-expansion order for the witten genus");
  eval_cmd->callback([&] {
    action = [&] {
      return run_eval(eval_manifold, eval_genus, eval_twist, eval_order);
    };
  });

  auto* bh_cmd =
      app.add_subcommand("bh", "homogeneous-fibration (Borel-Hirzebruch) data");
  bool dump_fiber = false, dump_m4 = false;
  bh_cmd->add_flag("--dump-fiber-class", dump_fiber,
                   "print the fiber Pontryagin class through the weight cap");
  bh_cmd->add_flag("--dump-m4", dump_m4, "print the M4 ring-model manifest");
  bh_cmd->callback([&] { action = [&] { return run_bh(dump_fiber, dump_m4); }; });

  auto* div_cmd =
      app.add_subcommand("divisibility", "check the divisibility theorems");
  std::string div_theorem;
  div_cmd->add_option("--theorem", div_theorem,
                      "1.2 | 1.4 | 1.5 | compound (default: all)");
  div_cmd->callback([&] { action = [&] { return run_divisibility(div_theorem); }; });

  auto* sweep_cmd =
      app.add_subcommand("sweep", "twisted-genus integrality sweep over M1");
  int sweep_max = 5;
  long sweep_mod = 24;
  std::string sweep_format = "tsv";
  sweep_cmd->add_option("--max", sweep_max, "maximum i+j+k (default 5)");
  sweep_cmd->add_option("--mod", sweep_mod, "residue modulus (default 24)");
  sweep_cmd->add_option("--format", sweep_format, "tsv | json");
  sweep_cmd->callback([&] {
    action = [&] { return run_sweep(sweep_max, sweep_mod, sweep_format); };
  });

  auto* dec_cmd = app.add_subcommand(
      "decompose", "write a 24-dimensional class in the M1..M4 basis");
  std::string dec_manifold;
  dec_cmd->add_option("--manifold", dec_manifold, "built-in name or manifest path")
      ->required();
  dec_cmd->callback([&] { action = [&] { return run_decompose(dec_manifold); }; });

  CLI11_PARSE(app, argc, argv);

  try {
    return action ? action() : 0;
  } catch (const charnum::ManifestError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
