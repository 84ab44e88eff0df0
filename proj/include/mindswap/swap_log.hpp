#ifndef MINDSWAP_SWAP_LOG_HPP
#define MINDSWAP_SWAP_LOG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mindswap/perm.hpp"

namespace mindswap {

// A swap log as written on disk: one swap per line in the order the swaps
// happened, with an optional "n=<int>" universe header. The corresponding
// product lists the factors in reverse.
struct SwapLog {
  std::vector<std::pair<int, int>> swaps;  // chronological
  std::optional<int> declared_universe;
};

class LogParseError : public std::runtime_error {
 public:
  LogParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

SwapLog parse_log(std::string_view text);

// Chronological log -> textual product (rightmost factor happened first).
SwapSequence to_sequence(const SwapLog& log);

// Largest of the declared size and every label; 0 for an empty log.
int universe_of(const SwapLog& log);

std::string format_cycles(const CycleDecomposition& dec);

// One swap per line in chronological application order.
std::string format_chronological(const SwapSequence& seq);

// Header comments (method, factor count, outsiders, order convention)
// followed by the chronological swap lines.
std::string format_plan(const UndoPlan& plan, std::string_view method);

}  // namespace mindswap

#endif  // MINDSWAP_SWAP_LOG_HPP
