#include "mqmchat/prompts.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "mqmchat/error.hpp"
#include "mqmchat/sha256.hpp"

namespace mqmchat {

namespace {

constexpr std::string_view kAnnotationSystemMessage =
    "You are an annotator for the quality of machine translation. Your task is to identify errors "
    "and assess the quality of the translation.";

constexpr std::string_view kAnnotationInstructions =
    "Based on the source segment and machine translation surrounded with triple backticks, identify "
    "error types in the translation and classify them. The categories of errors are:\n"
    "Mistranslation - fundamental inaccuracies in the translation process, including untranslated "
    "source segments, incorrect lexical choice or grammar that distorts the meaning, "
    "under-translation, and over-translation.\n"
    "Omission or Addition - missing source contents (omission) or additional content not present in "
    "the source (addition).\n"
    "Terminology or Proper Noun Issues - pertain to inaccuracies in translating specialized "
    "vocabulary, inherent terms, and proper nouns from the source text.\n"
    "Unnatural Style - grammatically correct but not natural in the target language.\n"
    "Ambiguity and Disambiguation - ambiguities or errors in the source text (i.e. typos, graphical "
    "errors, omissions, unclear abbreviations, erroneous punctuation) are not faithfully reflected "
    "in the translation.\n"
    "Buzzword or Loanword Issues - when buzzwords or loanwords (i.e. popular sayings, newly created "
    "words, internet slang, memes) are not translated accurately according to their usage in the "
    "source and target languages.\n"
    "Dialogue Inconsistency - fail to maintain consistency based on context, particularly when the "
    "speakers change within the chat.\n"
    "other, or no-error.\n"
    "Each error is classified as one of three categories: major, minor, and neutral. Major for "
    "errors that significantly impact the understandability of the content; 'minor for errors that "
    "do not impact the overall understandability but detract from the quality; neutral for errors "
    "requiring additional revision but do not pose significant risks.";

constexpr std::string_view kTranslationTemplate =
    "You are a professional {source_language} to {target_language} translator. This is a "
    "{source_language} to {target_language} chat translation task. Please translate each line of "
    "the chat from {source_language} to {target_language}. Each line of the chat is considered a "
    "message sent by a different speaker.";

std::string substitute(std::string_view text, std::string_view placeholder, std::string_view value) {
  std::string out;
  std::size_t pos = 0;
  while (true) {
    auto hit = text.find(placeholder, pos);
    if (hit == std::string_view::npos) {
      out += text.substr(pos);
      return out;
    }
    out += text.substr(pos, hit - pos);
    out += value;
    pos = hit + placeholder.size();
  }
}

std::string join_lines(std::span<const std::string> lines) {
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) out += '\n';
    out += lines[i];
  }
  return out;
}

}  // namespace

std::string language_display_name(std::string_view code) {
  if (code == "zh") return "Chinese";
  if (code == "ja") return "Japanese";
  if (code == "en") return "English";
  if (code == "ko") return "Korean";
  if (code == "de") return "German";
  if (code == "fr") return "French";
  if (code == "es") return "Spanish";
  // Already a display name.
  if (!code.empty() && code[0] >= 'A' && code[0] <= 'Z') return std::string(code);
  throw Error("no display name for language code: " + std::string(code));
}

std::vector<FewShotExample> load_fewshot(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open few-shot file: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed few-shot JSON in " + path.string() + ": " + e.what());
  }
  std::vector<FewShotExample> out;
  try {
    for (const auto& item : j) {
      FewShotExample ex;
      ex.source_language = item.at("source_language").get<std::string>();
      ex.target_language = item.at("target_language").get<std::string>();
      for (const auto& t : item.at("source")) ex.source_turns.push_back(t.get<std::string>());
      for (const auto& t : item.at("translation")) ex.target_turns.push_back(t.get<std::string>());
      ex.response = item.at("findings").get<std::string>();
      out.push_back(std::move(ex));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error("bad few-shot entry in " + path.string() + ": " + e.what());
  }
  return out;
}

const PromptTemplate& PromptTemplate::chat_default() {
  static const PromptTemplate prompt = [] {
    PromptTemplate t;
    t.version = std::string(kPromptVersion);
    t.system_message = std::string(kAnnotationSystemMessage);
    t.user_template = std::string("{source_language} source:\n```{source_segment}```\n") +
                      "{target_language} translation:\n```{target_segment}```\n\n" +
                      std::string(kAnnotationInstructions);
    return t;
  }();
  return prompt;
}

PromptTemplate PromptTemplate::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open prompt template: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed prompt template " + path.string() + ": " + e.what());
  }
  PromptTemplate t;
  try {
    t.system_message = j.value("system", "");
    t.user_template = j.at("user").get<std::string>();
    t.version = j.value("version", "");
  } catch (const nlohmann::json::exception& e) {
    throw Error("bad prompt template " + path.string() + ": " + e.what());
  }
  if (t.version.empty())
    t.version = "custom-" + sha256_hex(t.system_message + "\x1f" + t.user_template).substr(0, 12);
  return t;
}

namespace {

std::string render_user_message(const PromptTemplate& prompt, std::string_view source_language,
                                std::string_view target_language, std::string_view source_segment,
                                std::string_view target_segment) {
  std::string out = substitute(prompt.user_template, "{source_language}", source_language);
  out = substitute(out, "{target_language}", target_language);
  out = substitute(out, "{source_segment}", source_segment);
  out = substitute(out, "{target_segment}", target_segment);
  return out;
}

}  // namespace

std::string annotation_user_message(std::string_view source_language, std::string_view target_language,
                                    std::string_view source_segment, std::string_view target_segment) {
  return render_user_message(PromptTemplate::chat_default(), source_language, target_language,
                             source_segment, target_segment);
}

PromptBundle build_annotation_prompt(const ChatDocument& doc, const TranslationRecord& rec,
                                     std::span<const FewShotExample> fewshot,
                                     const PromptTemplate& prompt) {
  if (doc.turns.size() != rec.turns.size())
    throw Error("annotation prompt needs a turn-aligned translation for " + doc.doc_id);

  PromptBundle bundle;
  bundle.system_message = prompt.system_message;
  for (const auto& ex : fewshot) {
    bundle.fewshot.emplace_back(
        render_user_message(prompt, ex.source_language, ex.target_language,
                            join_lines(ex.source_turns), join_lines(ex.target_turns)),
        ex.response);
  }

  std::vector<std::string> source_lines;
  source_lines.reserve(doc.turns.size());
  for (const auto& t : doc.turns) source_lines.push_back(t.text);
  bundle.user_message = render_user_message(
      prompt, language_display_name(doc.source_lang()), language_display_name(doc.target_lang()),
      join_lines(source_lines), join_lines(rec.turns));
  return bundle;
}

PromptBundle build_annotation_prompt(const ChatDocument& doc, const TranslationRecord& rec,
                                     std::span<const FewShotExample> fewshot) {
  return build_annotation_prompt(doc, rec, fewshot, PromptTemplate::chat_default());
}

PromptBundle build_translation_prompt(const ChatDocument& doc, std::string_view source_language,
                                      std::string_view target_language) {
  std::string instruction = substitute(kTranslationTemplate, "{source_language}", source_language);
  instruction = substitute(instruction, "{target_language}", target_language);

  std::vector<std::string> lines;
  lines.reserve(doc.turns.size());
  for (const auto& t : doc.turns) lines.push_back(t.text);

  PromptBundle bundle;
  bundle.user_message = instruction + "\n\n" + join_lines(lines);
  return bundle;
}

}  // namespace mqmchat
