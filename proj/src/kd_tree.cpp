#include "lbkd/kd_tree.hpp"

#include <string>

#include "lbkd/error.hpp"

namespace lbkd {

std::string_view to_string(SplitRule rule) {
  switch (rule) {
    case SplitRule::round_robin:
      return "round-robin";
    case SplitRule::widest:
      return "widest";
  }
  return "unknown";
}

SplitRule parse_split_rule(std::string_view text) {
  if (text == "round-robin") return SplitRule::round_robin;
  if (text == "widest") return SplitRule::widest;
  throw InvalidArgument("unknown split mode '" + std::string(text) +
                        "' (expected round-robin or widest)");
}

}  // namespace lbkd
