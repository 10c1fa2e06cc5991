#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mqmchat/taxonomy.hpp"

namespace mqmchat {

// One line of a model reply in the declared grammar
//   <severity>: <error type>: "<quote>" [(turn N)]
// or the bare sentinel `no-error`.
struct RawFinding {
  ChatErrorType label = ChatErrorType::Other;
  SeverityLevel severity = SeverityLevel::Neutral;
  std::string quote;
  std::optional<int> turn_hint;
};

struct ParseOutcome {
  std::vector<RawFinding> findings;
  std::vector<std::string> diagnostics;  // rejected lines, verbatim
  std::size_t no_error_lines = 0;        // sentinel occurrences
  std::size_t nonempty_lines = 0;

  bool no_error() const { return no_error_lines > 0; }
  bool unparseable() const { return findings.empty() && no_error_lines == 0 && !diagnostics.empty(); }
};

// Total over arbitrary text: every non-empty line becomes a finding, the
// sentinel, or a diagnostic. Never throws.
ParseOutcome parse_llm_response(std::string_view text);

}  // namespace mqmchat
