// Command-line front end: parse an instance file, dispatch to the solvers,
// and emit machine-readable JSON. Exit codes: 0 success, 1 malformed input
// (message carries the field path), 2 regime or capacity violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trapgame/bounds.hpp"
#include "trapgame/io.hpp"
#include "trapgame/lp_oracle.hpp"
#include "trapgame/monte_carlo.hpp"
#include "trapgame/solve.hpp"

namespace {

using namespace trapgame;
using ordered = nlohmann::ordered_json;

Method parse_method(const std::string& name) {
  if (name == "one-uniform") return Method::OneUniform;
  if (name == "equal") return Method::EqualRewards;
  if (name == "k1") return Method::SingleTrap;
  if (name == "n4k2") return Method::FourBox;
  if (name == "lp") return Method::ExactLP;
  throw ParseError("--method", "unknown method: " + name);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

ordered boxes_json(const BoxSet& s) {
  ordered arr = ordered::array();
  for (Box b : s) arr.push_back(b + 1);
  return arr;
}

int cmd_solve(const std::string& instance_path, const std::string& method,
              const std::string& out_path) {
  const GameInstance g = load_instance(instance_path);
  const Solution sol = method == "auto"
                           ? solve_any(g)
                           : solve_with(g, parse_method(method));
  const Certificates* certs_ptr = nullptr;
  Certificates certs;
  try {
    certs = certify(g, sol.searcher, sol.hider);
    certs_ptr = &certs;
  } catch (const CapacityError&) {
    // Instance too large to sweep; the result still carries the value.
  }
  emit(result_json(sol, certs_ptr), out_path);
  return 0;
}

int cmd_bounds(const std::string& instance_path, const std::string& out_path) {
  const GameInstance g = load_instance(instance_path);
  const Rat lower = value_lower_bound(g);
  const Rat upper = value_upper_bound(g);
  ordered doc;
  doc["lower"] = rat_string(lower);
  doc["lower_float"] = to_double(lower);
  doc["upper"] = rat_string(upper);
  doc["upper_float"] = to_double(upper);
  emit(doc.dump(2) + "\n", out_path);
  return 0;
}

int cmd_conjecture(const std::string& instance_path, int max_support,
                   const std::string& out_path) {
  const GameInstance g = load_instance(instance_path);
  const ConjectureReport rep = check_conjecture(g, max_support);
  ordered doc;
  doc["value"] = rat_string(rep.lp_value);
  doc["best"] = rat_string(rep.best);
  doc["gap"] = rat_string(rep.gap);
  doc["gap_float"] = to_double(rep.gap);
  doc["consistent"] = rep.consistent;
  doc["complete"] = rep.complete;
  doc["supports_examined"] = rep.supports_examined;
  ordered wit = ordered::array();
  for (const auto& e : rep.witness) wit.push_back(boxes_json(e));
  doc["witness"] = std::move(wit);
  emit(doc.dump(2) + "\n", out_path);
  return 0;
}

int cmd_simulate(const std::string& instance_path, std::uint64_t trials,
                 std::uint64_t seed, const std::string& out_path) {
  const GameInstance g = load_instance(instance_path);
  const Solution sol = solve_any(g);
  const SimulationReport rep = simulate(g, sol.searcher, sol.hider, trials, seed);
  ordered doc;
  doc["trials"] = rep.trials;
  doc["seed"] = rep.seed;
  doc["rng"] = rep.rng;
  doc["mean"] = rep.mean;
  doc["std_error"] = rep.std_error;
  doc["exact"] = rat_string(rep.exact);
  doc["exact_float"] = rep.exact_fp;
  doc["z_score"] = rep.z_score;
  doc["pass"] = rep.pass;
  emit(doc.dump(2) + "\n", out_path);
  return 0;
}

// Random instances with integer rewards in [1, 100], generated from one
// sequential RNG so a (family, seed, count) triple is reproducible.
GameInstance random_family_instance(const std::string& family,
                                    std::mt19937_64& rng) {
  std::uniform_int_distribution<int> reward(1, 100);
  auto rewards = [&](int n) {
    std::vector<Rat> r(n);
    for (auto& x : r) x = reward(rng);
    return r;
  };
  if (family == "one_uniform") {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    const int k = std::uniform_int_distribution<int>(1, n)(rng);
    return GameInstance(rewards(n), k, Hypergraph::one_uniform());
  }
  if (family == "equal") {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const int k = std::uniform_int_distribution<int>(1, n)(rng);
    return GameInstance(std::vector<Rat>(n, Rat(reward(rng))), k);
  }
  if (family == "k1") {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    return GameInstance(rewards(n), 1);
  }
  if (family == "n4k2") {
    return GameInstance(rewards(4), 2);
  }
  throw ParseError("--family", "unknown family: " + family);
}

Method family_method(const std::string& family) {
  if (family == "one_uniform") return Method::OneUniform;
  if (family == "equal") return Method::EqualRewards;
  if (family == "k1") return Method::SingleTrap;
  return Method::FourBox;
}

int cmd_verify(const std::string& family, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<GameInstance> instances;
  instances.reserve(count);
  for (int i = 0; i < count; ++i) {
    instances.push_back(random_family_instance(family, rng));
  }
  const Method method = family_method(family);
  int matches = 0;
  for (int i = 0; i < count; ++i) {
    const GameInstance& g = instances[i];
    const Solution closed = solve_with(g, method);
    const Solution oracle = solve_oracle(g);
    if (closed.value == oracle.value) {
      ++matches;
    } else {
      std::cerr << "instance " << i << ": closed form "
                << rat_string(closed.value) << " vs oracle "
                << rat_string(oracle.value) << "\n";
    }
  }
  std::cout << matches << "/" << count << " exact matches\n";
  return matches == count ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for the trap-avoidance search game"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string out_path;
  std::string method = "auto";
  std::string family;
  int max_support = 8;
  int count = 100;
  std::uint64_t trials = 1000000;
  std::uint64_t seed = 1;

  auto add_instance = [&](CLI::App* cmd) {
    cmd->add_option("--instance", instance_path, "Instance JSON file")
        ->required();
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "Output file (default: stdout)");
  };

  CLI::App* solve =
      app.add_subcommand("solve", "Compute the value and optimal mixtures");
  add_instance(solve);
  add_out(solve);
  solve->add_option("--method", method, "Solver to use")
      ->check(CLI::IsMember({"auto", "one-uniform", "equal", "k1", "n4k2", "lp"}));

  CLI::App* bounds =
      app.add_subcommand("bounds", "Evaluate the general value bounds");
  add_instance(bounds);
  add_out(bounds);

  CLI::App* conjecture = app.add_subcommand(
      "conjecture", "Search for a proportional family achieving the value");
  add_instance(conjecture);
  add_out(conjecture);
  conjecture->add_option("--max-support", max_support,
                         "Largest family size to enumerate");

  CLI::App* simulate_cmd = app.add_subcommand(
      "simulate", "Monte Carlo check of the solved strategies");
  add_instance(simulate_cmd);
  add_out(simulate_cmd);
  simulate_cmd->add_option("--trials", trials, "Number of plays");
  simulate_cmd->add_option("--seed", seed, "RNG seed");

  CLI::App* verify = app.add_subcommand(
      "verify", "Closed form vs oracle on random instances");
  verify
      ->add_option("--family", family,
                   "one_uniform | equal | k1 | n4k2")
      ->required()
      ->check(CLI::IsMember({"one_uniform", "equal", "k1", "n4k2"}));
  verify->add_option("--count", count, "Number of instances");
  verify->add_option("--seed", seed, "RNG seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(instance_path, method, out_path);
    if (bounds->parsed()) return cmd_bounds(instance_path, out_path);
    if (conjecture->parsed())
      return cmd_conjecture(instance_path, max_support, out_path);
    if (simulate_cmd->parsed())
      return cmd_simulate(instance_path, trials, seed, out_path);
    if (verify->parsed()) return cmd_verify(family, count, seed);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidInstanceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const RegimeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
