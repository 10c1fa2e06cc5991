#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mqmchat {

enum class LengthClass { Short, Long };

std::string_view to_string(LengthClass c);
LengthClass length_class_from_string(std::string_view name);

struct Turn {
  std::string speaker;
  std::string text;
};

struct ChatDocument {
  std::string doc_id;
  std::string lang_pair;  // "zh-en", "ja-en", ...
  LengthClass length_class = LengthClass::Short;
  std::vector<Turn> turns;

  std::string source_lang() const;
  std::string target_lang() const;
};

// Turn-aligned system translation of one document: one target line per
// source turn. `misaligned` marks records whose turn count did not match
// at generation time; loaders reject them, batch translation keeps them
// flagged.
struct TranslationRecord {
  std::string doc_id;
  std::string system_id;
  std::vector<std::string> turns;
  bool misaligned = false;
};

struct Corpus {
  std::vector<ChatDocument> documents;
  std::vector<TranslationRecord> translations;

  const ChatDocument* find_document(const std::string& doc_id) const;
  const TranslationRecord* find_translation(const std::string& doc_id,
                                            const std::string& system_id) const;
  std::vector<std::string> systems() const;  // sorted unique

 private:
  friend Corpus load_corpus(const std::filesystem::path&);
  friend Corpus corpus_from_jsonl(std::string_view, const std::string&);
  void rebuild_index();
  std::map<std::string, std::size_t> doc_index_;
  std::map<std::pair<std::string, std::string>, std::size_t> mt_index_;

 public:
  void finalize();  // validates and indexes a programmatically built corpus
};

// Canonical corpus JSONL. Loaders fail with a line number on malformed
// input, duplicate ids, dangling references or turn-count mismatches.
Corpus load_corpus(const std::filesystem::path& path);
Corpus corpus_from_jsonl(std::string_view text, const std::string& origin);
std::string serialize_corpus(const Corpus& corpus);
void write_corpus(const Corpus& corpus, const std::filesystem::path& path);

// Canonical "mt" records only (batch translation output).
std::string serialize_translations(const std::vector<TranslationRecord>& records);

}  // namespace mqmchat
