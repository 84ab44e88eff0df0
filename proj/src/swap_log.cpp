#include "mindswap/swap_log.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mindswap {

namespace {

std::string trimmed(std::string line) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  line.erase(line.begin(),
             std::find_if(line.begin(), line.end(), not_space));
  line.erase(std::find_if(line.rbegin(), line.rend(), not_space).base(),
             line.end());
  return line;
}

}  // namespace

LogParseError::LogParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

SwapLog parse_log(std::string_view text) {
  SwapLog log;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (const auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    const std::string line = trimmed(raw);
    if (line.empty()) continue;
    if (line.rfind("n=", 0) == 0) {
      if (!log.swaps.empty())
        throw LogParseError(lineno,
                            "universe declaration must precede the swaps");
      if (log.declared_universe)
        throw LogParseError(lineno, "duplicate universe declaration");
      int n = 0;
      std::istringstream ns(line.substr(2));
      std::string rest;
      if (!(ns >> n) || (ns >> rest) || n < 1)
        throw LogParseError(lineno, "bad universe declaration '" + line + "'");
      log.declared_universe = n;
      continue;
    }
    std::istringstream ls(line);
    int a = 0;
    int b = 0;
    std::string rest;
    if (!(ls >> a >> b) || (ls >> rest))
      throw LogParseError(lineno, "expected two labels, got '" + line + "'");
    if (a < 1 || b < 1) throw LogParseError(lineno, "labels must be positive");
    if (a == b)
      throw LogParseError(lineno, "a body cannot swap minds with itself");
    if (log.declared_universe &&
        std::max(a, b) > *log.declared_universe)
      throw LogParseError(lineno, "label " + std::to_string(std::max(a, b)) +
                                      " exceeds the declared universe " +
                                      std::to_string(*log.declared_universe));
    log.swaps.emplace_back(a, b);
  }
  return log;
}

SwapSequence to_sequence(const SwapLog& log) {
  SwapSequence seq;
  seq.reserve(log.swaps.size());
  for (auto it = log.swaps.rbegin(); it != log.swaps.rend(); ++it)
    seq.emplace_back(it->first, it->second);
  return seq;
}

int universe_of(const SwapLog& log) {
  int universe = log.declared_universe.value_or(0);
  for (const auto& [a, b] : log.swaps)
    universe = std::max({universe, a, b});
  return universe;
}

std::string format_cycles(const CycleDecomposition& dec) {
  if (dec.cycles.empty()) return "identity";
  std::string out;
  for (const auto& cycle : dec.cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

std::string format_chronological(const SwapSequence& seq) {
  std::string out;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it)
    out += std::to_string(it->lo) + " " + std::to_string(it->hi) + "\n";
  return out;
}

std::string format_plan(const UndoPlan& plan, std::string_view method) {
  std::string out = "# method: ";
  out += method;
  out += "\n# factors: " + std::to_string(plan.factor_count());
  out += "\n# outsiders:";
  if (plan.outsiders.empty()) {
    out += " none";
  } else {
    for (int label : plan.outsiders) out += " " + std::to_string(label);
  }
  out += "\n# swaps below are chronological: apply from the first line down\n";
  out += format_chronological(plan.sequence);
  return out;
}

}  // namespace mindswap
