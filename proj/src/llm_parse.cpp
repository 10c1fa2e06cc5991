#include "mqmchat/llm_parse.hpp"

#include <algorithm>
#include <cctype>

namespace mqmchat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_no_error_sentinel(std::string_view line) {
  std::string l = lower(trim(line));
  while (!l.empty() && (l.back() == '.' || l.back() == '!')) l.pop_back();
  return l == "no-error" || l == "no error";
}

std::optional<SeverityLevel> parse_chat_severity(std::string_view name) {
  std::string n = lower(trim(name));
  if (n == "major") return SeverityLevel::Major;
  if (n == "minor") return SeverityLevel::Minor;
  if (n == "neutral") return SeverityLevel::Neutral;
  return std::nullopt;
}

// Optional "(turn N)" suffix after the closing quote.
bool parse_turn_suffix(std::string_view suffix, std::optional<int>& hint) {
  suffix = trim(suffix);
  if (suffix.empty()) return true;
  if (suffix.size() < 7 || suffix.front() != '(' || suffix.back() != ')') return false;
  std::string_view body = trim(suffix.substr(1, suffix.size() - 2));
  if (!body.starts_with("turn")) return false;
  body = trim(body.substr(4));
  if (body.empty()) return false;
  int value = 0;
  for (char c : body) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    value = value * 10 + (c - '0');
    if (value > 100000) return false;
  }
  hint = value;
  return true;
}

bool parse_finding_line(std::string_view line, RawFinding& out) {
  auto first = line.find(':');
  if (first == std::string_view::npos) return false;
  auto second = line.find(':', first + 1);
  if (second == std::string_view::npos) return false;

  auto severity = parse_chat_severity(line.substr(0, first));
  if (!severity) return false;
  auto label = chat_error_from_display_name(trim(line.substr(first + 1, second - first - 1)));
  if (!label) return false;

  std::string_view rest = line.substr(second + 1);
  auto open = rest.find('"');
  if (open == std::string_view::npos) return false;
  auto close = rest.rfind('"');
  if (close == open) return false;
  if (!trim(rest.substr(0, open)).empty()) return false;

  RawFinding f;
  f.severity = *severity;
  f.label = *label;
  f.quote = std::string(rest.substr(open + 1, close - open - 1));
  if (!parse_turn_suffix(rest.substr(close + 1), f.turn_hint)) return false;
  out = std::move(f);
  return true;
}

}  // namespace

ParseOutcome parse_llm_response(std::string_view text) {
  ParseOutcome outcome;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    std::string_view line = trim(raw);
    if (!line.empty()) {
      ++outcome.nonempty_lines;
      if (is_no_error_sentinel(line)) {
        ++outcome.no_error_lines;
      } else if (RawFinding f; parse_finding_line(line, f)) {
        outcome.findings.push_back(std::move(f));
      } else {
        outcome.diagnostics.emplace_back(line);
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return outcome;
}

}  // namespace mqmchat
