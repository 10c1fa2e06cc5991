#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mqmchat/corpus.hpp"

namespace mqmchat {

constexpr std::string_view kPromptVersion = "mqm-chat-v1";

struct PromptBundle {
  std::string system_message;
  std::string user_message;
  std::vector<std::pair<std::string, std::string>> fewshot;  // (user, assistant) pairs
};

// Annotation prompt template. The built-in template carries the MQM-Chat
// error-type descriptions; a user-supplied one (e.g. a standard-MQM
// variant) swaps the instructions while reusing the whole pipeline. The
// user template sees {source_language}, {target_language},
// {source_segment} and {target_segment}.
struct PromptTemplate {
  std::string version;
  std::string system_message;
  std::string user_template;

  static const PromptTemplate& chat_default();
  // JSON file {"system": "...", "user": "...", "version": "..."}; version
  // defaults to a content-hash tag.
  static PromptTemplate load(const std::filesystem::path& path);
};

// "zh" -> "Chinese", "ja" -> "Japanese", "en" -> "English", ...
std::string language_display_name(std::string_view code);

struct FewShotExample {
  std::string source_language;  // English display name
  std::string target_language;
  std::vector<std::string> source_turns;
  std::vector<std::string> target_turns;
  std::string response;  // assistant reply in the findings grammar
};

std::vector<FewShotExample> load_fewshot(const std::filesystem::path& path);

// The full annotation user message for one source/translation pair; turns
// are presented one per line inside the fenced segments.
std::string annotation_user_message(std::string_view source_language, std::string_view target_language,
                                    std::string_view source_segment, std::string_view target_segment);

// Fixed system message plus the instantiated user message; few-shot pairs
// precede the real request in the given order. Deterministic: identical
// inputs produce identical bundles.
PromptBundle build_annotation_prompt(const ChatDocument& doc, const TranslationRecord& rec,
                                     std::span<const FewShotExample> fewshot);
PromptBundle build_annotation_prompt(const ChatDocument& doc, const TranslationRecord& rec,
                                     std::span<const FewShotExample> fewshot,
                                     const PromptTemplate& prompt);

// Single-message translation prompt; the chat follows the instruction block
// one turn per line.
PromptBundle build_translation_prompt(const ChatDocument& doc, std::string_view source_language,
                                      std::string_view target_language);

}  // namespace mqmchat
