#pragma once

#include <optional>
#include <string_view>

#include "mqmchat/annotation.hpp"
#include "mqmchat/llm_parse.hpp"

namespace mqmchat {

enum class GroundingQuality { Exact, Normalized, Failed };

std::string_view to_string(GroundingQuality q);

struct GroundingResult {
  GroundingQuality quality = GroundingQuality::Failed;
  std::optional<Annotation> annotation;  // absent iff Failed
};

// Locates the quoted excerpt inside the translation: exact scalar-level
// substring search (hinted turn first, then all turns, first occurrence
// wins), falling back to a case-folded, whitespace-collapsed search. The
// returned span always satisfies annotation range invariants; the annotator
// field is left empty for the caller.
GroundingResult ground_span(const RawFinding& finding, const TranslationRecord& rec);

}  // namespace mqmchat
