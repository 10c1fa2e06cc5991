#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mqmchat/taxonomy.hpp"

namespace mqmchat {

// Cross-taxonomy mapping: which MQM-Chat types a standard MQM label
// corresponds to. Labels in `suppressed` carry no mapping; they are only
// annotated at all when they block understanding, so a relabel against them
// is always counted.
struct TypeMapping {
  std::map<std::string, std::set<ChatErrorType>> entries;  // key: canonical standard label
  std::set<std::string> suppressed;

  static TypeMapping defaults();
  // Totality: every standard label has an entry or is suppressed. Throws.
  void validate() const;
};

// Deterministic for a fixed mapping; empty set for suppressed labels,
// throws on labels absent from both tables.
std::set<ChatErrorType> map_standard_to_chat(const StandardErrorType& label, const TypeMapping& mapping);

// Annotation-tool display names -> canonical labels, per set taxonomy.
struct LabelNameTable {
  std::map<std::string, std::string> chat;      // display name -> canonical chat label
  std::map<std::string, std::string> standard;  // display name -> canonical standard label

  static LabelNameTable defaults();
  std::string resolve(const std::string& display, bool chat_taxonomy) const;  // throws on unknown
};

// The mapping/weights config file (JSON), shipping defaults that can be
// edited without rebuilding.
struct EvalConfig {
  TypeMapping mapping;
  SeverityWeights chat_weights = SeverityWeights::chat_defaults();
  SeverityWeights standard_weights = SeverityWeights::standard_defaults();
  LabelNameTable label_names = LabelNameTable::defaults();
  std::vector<std::string> system_order;  // report order; unknown systems follow sorted

  static EvalConfig defaults();
  static EvalConfig load(const std::filesystem::path& path);
  std::string to_json_string() const;
};

}  // namespace mqmchat
