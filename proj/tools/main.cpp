#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "mindswap/cycle_products.hpp"
#include "mindswap/identity_words.hpp"
#include "mindswap/keeler.hpp"
#include "mindswap/optimal.hpp"
#include "mindswap/oracle.hpp"
#include "mindswap/perm.hpp"
#include "mindswap/swap_log.hpp"

namespace {

using namespace mindswap;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ostringstream text;
  if (path.empty() || path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    text << in.rdbuf();
  }
  return text.str();
}

struct LoadedLog {
  SwapSequence sequence;
  int universe = 0;
};

LoadedLog load_log(const std::string& path) {
  const SwapLog log = parse_log(read_input(path));
  return LoadedLog{to_sequence(log), std::max(universe_of(log), 1)};
}

int cmd_decompose(const std::string& path) {
  const LoadedLog log = load_log(path);
  const CycleDecomposition dec =
      cycle_decompose(compose(log.sequence, log.universe));
  std::cout << format_cycles(dec) << "\n";
  std::cout << "r = " << dec.cycle_count()
            << ", support = " << dec.support_size() << "\n";
  return 0;
}

int cmd_undo(const std::string& path, const std::string& method) {
  const LoadedLog log = load_log(path);
  const Permutation p = compose(log.sequence, log.universe);
  if (p.is_identity()) {
    std::cout << "already restored: the log composes to the identity\n";
    return 1;
  }
  UndoPlan plan;
  std::string used = method;
  if (method == "keeler") {
    plan = keeler_undo(p);
  } else if (method == "optimal") {
    plan = optimal_undo(p);
  } else {  // auto-special
    const int n = static_cast<int>(log.sequence.size()) + 1;
    if (log.sequence == build_p1(n)) {
      plan = undo_p1(n);
      used = "p1-special";
    } else if (log.sequence == build_p2(n)) {
      plan = undo_p2(n);
      used = "p2-special";
    } else {
      plan = optimal_undo(p);
      used = "optimal";
    }
  }
  const int universe = std::max(log.universe, max_label(plan.sequence));
  if (!undoes(plan.sequence, log.sequence, universe))
    throw std::logic_error("plan failed verification against the log");
  std::cout << format_plan(plan, used);
  return 0;
}

int cmd_undo_p(int which, int n) {
  const UndoPlan plan = which == 1 ? undo_p1(n) : undo_p2(n);
  std::cout << format_plan(plan, which == 1 ? "p1-special" : "p2-special");
  return 0;
}

int cmd_identity_word(int m, int n) {
  const IdentityWord word = identity_word(m, n);
  std::cout << "# identity word: m=" << word.m << " n=" << word.n << "\n";
  std::cout << "# swaps below are chronological: apply from the first line down\n";
  std::cout << format_chronological(word.word);
  return 0;
}

int cmd_verify(const std::string& scramble_path, const std::string& plan_path) {
  const SwapLog slog = parse_log(read_input(scramble_path));
  const SwapLog plog = parse_log(read_input(plan_path));
  const SwapSequence scramble = to_sequence(slog);
  const SwapSequence candidate = to_sequence(plog);
  const int universe =
      std::max({universe_of(slog), universe_of(plog), 1});
  if (undoes(candidate, scramble, universe)) {
    std::cout << "ok: the plan undoes the scramble\n";
    return 0;
  }
  if (!all_distinct(candidate)) {
    std::cout << "fail: the plan repeats a swap\n";
  } else {
    std::set<Transposition> banned(scramble.begin(), scramble.end());
    const bool reused = std::any_of(
        candidate.begin(), candidate.end(),
        [&](const Transposition& t) { return banned.count(t) > 0; });
    if (reused)
      std::cout << "fail: the plan reuses a swap from the scramble\n";
    else
      std::cout << "fail: the product does not restore everyone\n";
  }
  return 1;
}

int cmd_min_undo(const std::string& path, const std::string& outsiders,
                 int max_len, long long budget) {
  const LoadedLog log = load_log(path);
  if (outsiders == "auto") {
    const OutsiderSearch found =
        min_outsiders(log.sequence, log.universe, budget);
    std::cout << "# outsiders required: " << found.outsiders << "\n";
    std::cout << format_plan(found.plan, "oracle");
    return 0;
  }
  const int extra = std::stoi(outsiders);
  const Permutation p = compose(log.sequence, log.universe);
  const CycleDecomposition dec = cycle_decompose(p);
  const std::set<Transposition> banned(log.sequence.begin(),
                                       log.sequence.end());
  SearchSpec spec;
  spec.target = p;
  for (const Transposition& t : all_transpositions(log.universe + extra))
    if (!banned.count(t)) spec.allowed.push_back(t);
  spec.universe_size = log.universe + extra;
  spec.max_length =
      max_len >= 0 ? max_len : dec.support_size() + dec.cycle_count() + 2;
  spec.node_budget = budget;
  const SearchOutcome outcome = min_undo_search(spec);
  if (!outcome.plan) {
    std::cout << "none: no undo of length <= " << spec.max_length << " with "
              << extra << " outsider(s); raise --max-len to search further\n";
    return 1;
  }
  std::cout << "# minimal length: " << outcome.plan->factor_count() << "\n";
  std::cout << format_plan(*outcome.plan, "oracle");
  return 0;
}

int cmd_min_outsiders(const std::string& path, long long budget) {
  const LoadedLog log = load_log(path);
  const OutsiderSearch found =
      min_outsiders(log.sequence, log.universe, budget);
  std::cout << "outsiders required: " << found.outsiders << "\n";
  std::cout << format_plan(found.plan, "oracle");
  return 0;
}

int cmd_census(int n, long long budget) {
  std::cout << "permutation\tr\tsupport\tkeeler\toptimal\toracle_min\n";
  for (const Permutation& p : all_permutations(n)) {
    if (p.is_identity()) continue;
    const CycleDecomposition dec = cycle_decompose(p);
    const int keeler = keeler_undo(p).factor_count();
    const int optimal = optimal_undo(p).factor_count();
    SearchSpec spec;
    spec.target = p;
    const int x = n + 1;
    const int y = n + 2;
    for (int label : p.support()) {
      spec.allowed.emplace_back(label, x);
      spec.allowed.emplace_back(label, y);
    }
    spec.allowed.emplace_back(x, y);
    spec.universe_size = n + 2;
    spec.max_length = optimal;
    spec.node_budget = budget;
    const SearchOutcome outcome = min_undo_search(spec);
    if (!outcome.plan)
      throw std::logic_error("oracle found no undo at the optimal length");
    std::cout << format_cycles(dec) << "\t" << dec.cycle_count() << "\t"
              << dec.support_size() << "\t" << keeler << "\t" << optimal
              << "\t" << outcome.plan->factor_count() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planner, verifier and brute-force oracle for undoing "
               "no-repeat mind-swap scrambles"};
  app.require_subcommand(1);

  std::string log_path = "-";
  std::string method = "optimal";
  std::string outsiders = "2";
  std::string scramble_path;
  std::string plan_path;
  int n = 0;
  int m = 0;
  int max_len = -1;
  long long budget = 100'000'000;

  auto* decompose =
      app.add_subcommand("decompose", "print the cycle decomposition of a log");
  decompose->add_option("log", log_path, "swap log file, '-' for stdin");

  auto* undo = app.add_subcommand("undo", "plan an undo for a swap log");
  undo->add_option("log", log_path, "swap log file, '-' for stdin");
  undo->add_option("--method", method, "keeler, optimal or auto-special")
      ->check(CLI::IsMember({"keeler", "optimal", "auto-special"}));

  auto* up1 = app.add_subcommand("undo-p1", "undo plan for (12)(23)...(n-1,n)");
  up1->add_option("n", n, "cycle length")->required();

  auto* up2 = app.add_subcommand("undo-p2", "undo plan for (n-1,n)...(2n)(1n)");
  up2->add_option("n", n, "cycle length")->required();

  auto* idword = app.add_subcommand(
      "identity-word", "the identity as m distinct transpositions on n labels");
  idword->add_option("m", m, "factor count")->required();
  idword->add_option("n", n, "universe size")->required();

  auto* verify =
      app.add_subcommand("verify", "check that a plan undoes a scramble");
  verify->add_option("scramble", scramble_path, "scramble log file")
      ->required();
  verify->add_option("plan", plan_path, "plan log file")->required();

  auto* min_undo =
      app.add_subcommand("min-undo", "search for a shortest undo (oracle)");
  min_undo->add_option("log", log_path, "swap log file, '-' for stdin");
  min_undo->add_option("--outsiders", outsiders, "0, 1, 2 or auto")
      ->check(CLI::IsMember({"0", "1", "2", "auto"}));
  min_undo->add_option("--max-len", max_len, "length bound (default n+r+2)");
  min_undo->add_option("--budget", budget, "search node budget");

  auto* min_out = app.add_subcommand(
      "min-outsiders", "fewest outsiders that admit an undo (oracle)");
  min_out->add_option("log", log_path, "swap log file, '-' for stdin");
  min_out->add_option("--budget", budget, "search node budget");

  auto* census = app.add_subcommand(
      "census", "per-permutation switch counts for S_n as TSV");
  census->add_option("n", n, "universe size")->required();
  census->add_option("--budget", budget, "search node budget per row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(decompose)) return cmd_decompose(log_path);
    if (app.got_subcommand(undo)) return cmd_undo(log_path, method);
    if (app.got_subcommand(up1)) return cmd_undo_p(1, n);
    if (app.got_subcommand(up2)) return cmd_undo_p(2, n);
    if (app.got_subcommand(idword)) return cmd_identity_word(m, n);
    if (app.got_subcommand(verify)) return cmd_verify(scramble_path, plan_path);
    if (app.got_subcommand(min_undo))
      return cmd_min_undo(log_path, outsiders, max_len, budget);
    if (app.got_subcommand(min_out)) return cmd_min_outsiders(log_path, budget);
    if (app.got_subcommand(census)) return cmd_census(n, budget);
  } catch (const LogParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
