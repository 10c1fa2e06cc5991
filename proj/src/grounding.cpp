#include "mqmchat/grounding.hpp"

#include <vector>

#include "mqmchat/unicode.hpp"

namespace mqmchat {

std::string_view to_string(GroundingQuality q) {
  switch (q) {
    case GroundingQuality::Exact: return "exact";
    case GroundingQuality::Normalized: return "normalized";
    case GroundingQuality::Failed: return "failed";
  }
  return "failed";
}

namespace {

struct NormChar {
  char32_t c;
  std::size_t begin;  // original scalar offsets covered by this char
  std::size_t end;
};

char32_t fold(char32_t c) { return c >= U'A' && c <= U'Z' ? c + 32 : c; }

// Case-fold and collapse whitespace runs to a single space, keeping the
// original span every normalized character stands for.
std::vector<NormChar> normalize(const std::u32string& text) {
  std::vector<NormChar> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (uni::is_space(text[i])) {
      std::size_t begin = i;
      while (i < text.size() && uni::is_space(text[i])) ++i;
      out.push_back({U' ', begin, i});
    } else {
      out.push_back({fold(text[i]), i, i + 1});
      ++i;
    }
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> find_exact(const std::u32string& haystack,
                                                              const std::u32string& needle) {
  auto pos = haystack.find(needle);
  if (pos == std::u32string::npos) return std::nullopt;
  return std::pair{pos, pos + needle.size()};
}

std::optional<std::pair<std::size_t, std::size_t>> find_normalized(const std::u32string& haystack,
                                                                   const std::u32string& needle) {
  std::vector<NormChar> h = normalize(haystack);
  std::vector<NormChar> n = normalize(needle);
  if (n.empty() || h.size() < n.size()) return std::nullopt;
  for (std::size_t i = 0; i + n.size() <= h.size(); ++i) {
    bool hit = true;
    for (std::size_t k = 0; k < n.size(); ++k) {
      if (h[i + k].c != n[k].c) {
        hit = false;
        break;
      }
    }
    if (hit) return std::pair{h[i].begin, h[i + n.size() - 1].end};
  }
  return std::nullopt;
}

}  // namespace

GroundingResult ground_span(const RawFinding& finding, const TranslationRecord& rec) {
  GroundingResult result;
  if (finding.quote.empty()) return result;

  std::u32string needle = uni::decode_utf8(finding.quote);

  std::vector<int> turn_order;
  if (finding.turn_hint && *finding.turn_hint >= 0 &&
      static_cast<std::size_t>(*finding.turn_hint) < rec.turns.size())
    turn_order.push_back(*finding.turn_hint);
  for (int t = 0; t < static_cast<int>(rec.turns.size()); ++t)
    if (turn_order.empty() || t != turn_order.front()) turn_order.push_back(t);

  auto emit = [&](int turn, std::size_t start, std::size_t end, GroundingQuality quality) {
    Annotation a;
    a.doc_id = rec.doc_id;
    a.system_id = rec.system_id;
    a.turn = turn;
    a.start = start;
    a.end = end;
    a.label = finding.label;
    a.severity = make_severity(SeverityScale::Chat, finding.severity);
    result.quality = quality;
    result.annotation = std::move(a);
  };

  std::vector<std::u32string> decoded;
  decoded.reserve(rec.turns.size());
  for (const auto& t : rec.turns) decoded.push_back(uni::decode_utf8(t));

  for (int turn : turn_order) {
    if (auto span = find_exact(decoded[turn], needle)) {
      emit(turn, span->first, span->second, GroundingQuality::Exact);
      return result;
    }
  }
  for (int turn : turn_order) {
    if (auto span = find_normalized(decoded[turn], needle)) {
      emit(turn, span->first, span->second, GroundingQuality::Normalized);
      return result;
    }
  }
  return result;
}

}  // namespace mqmchat
