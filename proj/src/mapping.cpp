#include "mqmchat/mapping.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "mqmchat/error.hpp"

namespace mqmchat {

using ordered_json = nlohmann::ordered_json;

TypeMapping TypeMapping::defaults() {
  TypeMapping m;
  auto add = [&](const char* standard, std::initializer_list<ChatErrorType> chat) {
    m.entries[standard] = std::set<ChatErrorType>(chat);
  };
  add("Accuracy/Mistranslation", {ChatErrorType::Mistranslation});
  add("Accuracy/UntranslatedText", {ChatErrorType::Mistranslation});
  add("Accuracy/Addition", {ChatErrorType::OmissionOrAddition});
  add("Accuracy/Omission", {ChatErrorType::OmissionOrAddition});
  add("Fluency/Inconsistency", {ChatErrorType::DialogueInconsistency});
  add("Fluency/Register", {ChatErrorType::UnnaturalStyle});
  add("LocaleConvention/Currency", {ChatErrorType::TerminologyOrProperNoun});
  add("LocaleConvention/Date", {ChatErrorType::TerminologyOrProperNoun});
  add("LocaleConvention/Name", {ChatErrorType::TerminologyOrProperNoun});
  add("LocaleConvention/Telephone", {ChatErrorType::TerminologyOrProperNoun});
  add("LocaleConvention/TimeFormat", {ChatErrorType::TerminologyOrProperNoun});
  add("Style/Awkward", {ChatErrorType::UnnaturalStyle});
  add("Terminology/InappropriateForContext", {ChatErrorType::TerminologyOrProperNoun});
  add("Terminology/InconsistentUse", {ChatErrorType::TerminologyOrProperNoun});
  add("NonTranslation", {ChatErrorType::Mistranslation});
  add("Other", {ChatErrorType::Other});
  m.suppressed = {"Fluency/Grammar", "Fluency/Spelling", "Fluency/Punctuation",
                  "Fluency/CharacterEncoding"};
  return m;
}

void TypeMapping::validate() const {
  for (const auto& [key, chat] : entries) {
    standard_error_from_string(key);  // throws on unknown labels
    if (chat.empty()) throw Error("mapping entry for " + key + " is empty");
  }
  for (const auto& key : suppressed) standard_error_from_string(key);
  for (const auto& label : all_standard_labels()) {
    std::string key = to_string(label);
    if (!entries.contains(key) && !suppressed.contains(key))
      throw Error("standard label " + key + " is neither mapped nor suppressed");
  }
}

std::set<ChatErrorType> map_standard_to_chat(const StandardErrorType& label, const TypeMapping& mapping) {
  std::string key = to_string(label);
  if (auto it = mapping.entries.find(key); it != mapping.entries.end()) return it->second;
  if (mapping.suppressed.contains(key)) return {};
  throw Error("standard label not covered by the mapping: " + key);
}

LabelNameTable LabelNameTable::defaults() {
  LabelNameTable t;
  for (int i = 0; i <= static_cast<int>(ChatErrorType::NoError); ++i) {
    auto type = static_cast<ChatErrorType>(i);
    t.chat[std::string(to_string(type))] = std::string(to_string(type));
  }
  // display names used in annotation-tool label configs
  t.chat["Omission or Addition"] = "OmissionOrAddition";
  t.chat["Terminology or Proper Noun Issues"] = "TerminologyOrProperNoun";
  t.chat["Unnatural Style"] = "UnnaturalStyle";
  t.chat["Ambiguity and Disambiguation"] = "AmbiguityAndDisambiguation";
  t.chat["Buzzword or Loanword Issues"] = "BuzzwordOrLoanword";
  t.chat["Dialogue Inconsistency"] = "DialogueInconsistency";
  for (const auto& label : all_standard_labels()) {
    std::string key = to_string(label);
    t.standard[key] = key;
    if (!label.subtype.empty()) {
      std::string spaced = std::string(to_string(label.category)) + "/" + label.subtype;
      t.standard[spaced] = key;
    }
  }
  t.standard["Locale Convention/Time Format"] = "LocaleConvention/TimeFormat";
  t.standard["Locale Convention/Currency"] = "LocaleConvention/Currency";
  t.standard["Locale Convention/Date"] = "LocaleConvention/Date";
  t.standard["Locale Convention/Name"] = "LocaleConvention/Name";
  t.standard["Locale Convention/Telephone"] = "LocaleConvention/Telephone";
  t.standard["Accuracy/Untranslated Text"] = "Accuracy/UntranslatedText";
  t.standard["Fluency/Character Encoding"] = "Fluency/CharacterEncoding";
  t.standard["Terminology/Inappropriate for Context"] = "Terminology/InappropriateForContext";
  t.standard["Terminology/Inconsistent Use"] = "Terminology/InconsistentUse";
  t.standard["Non-translation"] = "NonTranslation";
  t.standard["Others"] = "Other";
  return t;
}

std::string LabelNameTable::resolve(const std::string& display, bool chat_taxonomy) const {
  const auto& table = chat_taxonomy ? chat : standard;
  if (auto it = table.find(display); it != table.end()) return it->second;
  throw Error("unknown label name: " + display);
}

EvalConfig EvalConfig::defaults() {
  EvalConfig cfg;
  cfg.mapping = TypeMapping::defaults();
  cfg.system_order = {"gpt-4", "llama3", "deepl", "nmt"};
  return cfg;
}

namespace {

SeverityWeights weights_from_json(const ordered_json& j, SeverityScale scale) {
  SeverityWeights w = scale == SeverityScale::Chat ? SeverityWeights::chat_defaults()
                                                   : SeverityWeights::standard_defaults();
  if (j.contains("critical")) w.critical = j.at("critical").get<double>();
  if (j.contains("major")) w.major = j.at("major").get<double>();
  if (j.contains("minor")) w.minor = j.at("minor").get<double>();
  if (j.contains("neutral")) w.neutral = j.at("neutral").get<double>();
  w.validate();
  return w;
}

ordered_json weights_to_json(const SeverityWeights& w) {
  ordered_json j;
  if (w.scale == SeverityScale::Standard) j["critical"] = w.critical;
  j["major"] = w.major;
  j["minor"] = w.minor;
  j["neutral"] = w.neutral;
  return j;
}

}  // namespace

EvalConfig EvalConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path.string());
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed config JSON in " + path.string() + ": " + e.what());
  }

  EvalConfig cfg = EvalConfig::defaults();
  if (j.contains("mapping")) {
    cfg.mapping.entries.clear();
    for (const auto& entry : j.at("mapping")) {
      std::string standard = entry.at("standard").get<std::string>();
      standard_error_from_string(standard);
      auto& chat_set = cfg.mapping.entries[standard];
      for (const auto& name : entry.at("chat"))
        chat_set.insert(chat_error_from_string(name.get<std::string>()));
    }
  }
  if (j.contains("suppressed")) {
    cfg.mapping.suppressed.clear();
    for (const auto& name : j.at("suppressed")) cfg.mapping.suppressed.insert(name.get<std::string>());
  }
  cfg.mapping.validate();

  if (j.contains("weights")) {
    const auto& w = j.at("weights");
    if (w.contains("chat")) cfg.chat_weights = weights_from_json(w.at("chat"), SeverityScale::Chat);
    if (w.contains("standard"))
      cfg.standard_weights = weights_from_json(w.at("standard"), SeverityScale::Standard);
  }

  if (j.contains("label_names")) {
    const auto& names = j.at("label_names");
    if (names.contains("chat"))
      for (const auto& [display, canon] : names.at("chat").items())
        cfg.label_names.chat[display] = canon.get<std::string>();
    if (names.contains("standard"))
      for (const auto& [display, canon] : names.at("standard").items())
        cfg.label_names.standard[display] = canon.get<std::string>();
  }

  if (j.contains("systems")) {
    cfg.system_order.clear();
    for (const auto& s : j.at("systems")) cfg.system_order.push_back(s.get<std::string>());
  }
  return cfg;
}

std::string EvalConfig::to_json_string() const {
  ordered_json j;
  auto& mapped = j["mapping"] = ordered_json::array();
  for (const auto& [standard, chat] : mapping.entries) {
    ordered_json entry;
    entry["standard"] = standard;
    auto& arr = entry["chat"] = ordered_json::array();
    for (auto t : chat) arr.push_back(std::string(to_string(t)));
    mapped.push_back(std::move(entry));
  }
  auto& sup = j["suppressed"] = ordered_json::array();
  for (const auto& s : mapping.suppressed) sup.push_back(s);
  j["weights"]["chat"] = weights_to_json(chat_weights);
  j["weights"]["standard"] = weights_to_json(standard_weights);
  j["systems"] = system_order;
  return j.dump(2);
}

}  // namespace mqmchat
