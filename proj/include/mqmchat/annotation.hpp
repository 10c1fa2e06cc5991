#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mqmchat/corpus.hpp"
#include "mqmchat/taxonomy.hpp"

namespace mqmchat {

enum class SetKind { HumanChat, HumanStandard, AutoChat, AutoStandard };

std::string_view to_string(SetKind k);
SetKind set_kind_from_string(std::string_view name);
bool is_chat_kind(SetKind k);
SeverityScale scale_for(SetKind k);

// One span-level error: half-open [start, end) in Unicode scalar values
// within one translated turn. start == end only as a flagged omission anchor.
struct Annotation {
  std::string doc_id;
  std::string system_id;
  int turn = 0;
  std::size_t start = 0;
  std::size_t end = 0;
  Label label = ChatErrorType::Mistranslation;
  Severity severity;
  std::string annotator;
  bool omission_anchor = false;
};

struct AnnotationSet {
  std::string set_id;
  SetKind kind = SetKind::HumanChat;
  std::vector<Annotation> annotations;
  std::map<std::string, std::string> flags;  // doc_id -> report flag, e.g. "offensive"

  bool excluded(const std::string& doc_id) const { return flags.contains(doc_id); }
};

std::vector<AnnotationSet> load_annotation_sets(const std::filesystem::path& path);
// Convenience for commands that operate on a single set; throws unless the
// file holds exactly one.
AnnotationSet load_annotation_set(const std::filesystem::path& path);
std::vector<AnnotationSet> annotation_sets_from_jsonl(std::string_view text, const std::string& origin);
std::string serialize_annotation_set(const AnnotationSet& set);
void write_annotation_set(const AnnotationSet& set, const std::filesystem::path& path);

// Stable ordering used by serialization and matching.
bool annotation_less(const Annotation& a, const Annotation& b);

// ---------------------------------------------------------------------------
// Review-rule checks. Violations are data, not failures: Hard ones make a
// set unusable, Advisory ones flag spans a reviewer would trim.
// ---------------------------------------------------------------------------

struct Violation {
  enum class Level { Hard, Advisory };
  Level level = Level::Hard;
  std::string code;
  std::string message;
  std::string doc_id;
  std::string system_id;
  int turn = 0;
  std::size_t index = 0;  // position within set.annotations
};

std::string_view to_string(Violation::Level l);

std::vector<Violation> validate_annotations(const AnnotationSet& set, const Corpus& corpus);
bool has_hard_violation(const std::vector<Violation>& violations);

}  // namespace mqmchat
