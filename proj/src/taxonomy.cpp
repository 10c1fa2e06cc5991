#include "mqmchat/taxonomy.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "mqmchat/error.hpp"

namespace mqmchat {

namespace {

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

bool is_chat_specific(ChatErrorType t) {
  return t == ChatErrorType::AmbiguityAndDisambiguation || t == ChatErrorType::BuzzwordOrLoanword ||
         t == ChatErrorType::DialogueInconsistency;
}

bool is_counted(ChatErrorType t) { return t != ChatErrorType::Other && t != ChatErrorType::NoError; }

std::string_view to_string(ChatErrorType t) {
  switch (t) {
    case ChatErrorType::Mistranslation: return "Mistranslation";
    case ChatErrorType::OmissionOrAddition: return "OmissionOrAddition";
    case ChatErrorType::TerminologyOrProperNoun: return "TerminologyOrProperNoun";
    case ChatErrorType::UnnaturalStyle: return "UnnaturalStyle";
    case ChatErrorType::AmbiguityAndDisambiguation: return "AmbiguityAndDisambiguation";
    case ChatErrorType::BuzzwordOrLoanword: return "BuzzwordOrLoanword";
    case ChatErrorType::DialogueInconsistency: return "DialogueInconsistency";
    case ChatErrorType::Other: return "Other";
    case ChatErrorType::NoError: return "NoError";
  }
  throw Error("invalid ChatErrorType");
}

ChatErrorType chat_error_from_string(std::string_view name) {
  static const std::map<std::string, ChatErrorType, std::less<>> table = {
      {"Mistranslation", ChatErrorType::Mistranslation},
      {"OmissionOrAddition", ChatErrorType::OmissionOrAddition},
      {"TerminologyOrProperNoun", ChatErrorType::TerminologyOrProperNoun},
      {"UnnaturalStyle", ChatErrorType::UnnaturalStyle},
      {"AmbiguityAndDisambiguation", ChatErrorType::AmbiguityAndDisambiguation},
      {"BuzzwordOrLoanword", ChatErrorType::BuzzwordOrLoanword},
      {"DialogueInconsistency", ChatErrorType::DialogueInconsistency},
      {"Other", ChatErrorType::Other},
      {"NoError", ChatErrorType::NoError},
  };
  auto it = table.find(name);
  if (it == table.end()) throw Error("unknown chat error type: " + std::string(name));
  return it->second;
}

std::string_view display_name(ChatErrorType t) {
  switch (t) {
    case ChatErrorType::Mistranslation: return "mistranslation";
    case ChatErrorType::OmissionOrAddition: return "omission or addition";
    case ChatErrorType::TerminologyOrProperNoun: return "terminology or proper noun issues";
    case ChatErrorType::UnnaturalStyle: return "unnatural style";
    case ChatErrorType::AmbiguityAndDisambiguation: return "ambiguity and disambiguation";
    case ChatErrorType::BuzzwordOrLoanword: return "buzzword or loanword issues";
    case ChatErrorType::DialogueInconsistency: return "dialogue inconsistency";
    case ChatErrorType::Other: return "other";
    case ChatErrorType::NoError: return "no-error";
  }
  throw Error("invalid ChatErrorType");
}

std::optional<ChatErrorType> chat_error_from_display_name(std::string_view name) {
  static const std::map<std::string, ChatErrorType, std::less<>> table = [] {
    std::map<std::string, ChatErrorType, std::less<>> t;
    for (int i = 0; i <= static_cast<int>(ChatErrorType::NoError); ++i) {
      auto type = static_cast<ChatErrorType>(i);
      t.emplace(std::string(display_name(type)), type);
      t.emplace(lower_ascii(to_string(type)), type);
    }
    // spellings that show up in model replies
    t.emplace("omission", ChatErrorType::OmissionOrAddition);
    t.emplace("addition", ChatErrorType::OmissionOrAddition);
    t.emplace("terminology or proper noun", ChatErrorType::TerminologyOrProperNoun);
    t.emplace("buzzword or loanword", ChatErrorType::BuzzwordOrLoanword);
    t.emplace("buzzword or loanword issue", ChatErrorType::BuzzwordOrLoanword);
    t.emplace("no error", ChatErrorType::NoError);
    return t;
  }();
  auto it = table.find(lower_ascii(name));
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::string_view to_string(StandardCategory c) {
  switch (c) {
    case StandardCategory::Accuracy: return "Accuracy";
    case StandardCategory::Fluency: return "Fluency";
    case StandardCategory::LocaleConvention: return "LocaleConvention";
    case StandardCategory::Style: return "Style";
    case StandardCategory::Terminology: return "Terminology";
    case StandardCategory::NonTranslation: return "NonTranslation";
    case StandardCategory::Other: return "Other";
  }
  throw Error("invalid StandardCategory");
}

StandardCategory standard_category_from_string(std::string_view name) {
  static const std::map<std::string, StandardCategory, std::less<>> table = {
      {"Accuracy", StandardCategory::Accuracy},
      {"Fluency", StandardCategory::Fluency},
      {"LocaleConvention", StandardCategory::LocaleConvention},
      {"Style", StandardCategory::Style},
      {"Terminology", StandardCategory::Terminology},
      {"NonTranslation", StandardCategory::NonTranslation},
      {"Other", StandardCategory::Other},
  };
  auto it = table.find(name);
  if (it == table.end()) throw Error("unknown standard category: " + std::string(name));
  return it->second;
}

const std::vector<std::string>& standard_subtypes(StandardCategory c) {
  static const std::vector<std::string> accuracy = {"Addition", "Mistranslation", "Omission",
                                                    "UntranslatedText"};
  static const std::vector<std::string> fluency = {"CharacterEncoding", "Grammar", "Inconsistency",
                                                   "Punctuation", "Register", "Spelling"};
  static const std::vector<std::string> locale = {"Currency", "Date", "Name", "Telephone",
                                                  "TimeFormat"};
  static const std::vector<std::string> style = {"Awkward"};
  static const std::vector<std::string> terminology = {"InappropriateForContext", "InconsistentUse"};
  static const std::vector<std::string> none = {};
  switch (c) {
    case StandardCategory::Accuracy: return accuracy;
    case StandardCategory::Fluency: return fluency;
    case StandardCategory::LocaleConvention: return locale;
    case StandardCategory::Style: return style;
    case StandardCategory::Terminology: return terminology;
    case StandardCategory::NonTranslation:
    case StandardCategory::Other: return none;
  }
  throw Error("invalid StandardCategory");
}

StandardErrorType standard_error_from_string(std::string_view name) {
  std::string_view category = name;
  std::string_view subtype;
  if (auto pos = name.find('/'); pos != std::string_view::npos) {
    category = name.substr(0, pos);
    subtype = name.substr(pos + 1);
  }
  StandardErrorType out;
  out.category = standard_category_from_string(category);
  const auto& allowed = standard_subtypes(out.category);
  if (allowed.empty()) {
    if (!subtype.empty())
      throw Error("standard label " + std::string(category) + " takes no subtype, got: " +
                  std::string(subtype));
    return out;
  }
  if (subtype.empty()) throw Error("standard label " + std::string(category) + " requires a subtype");
  if (std::find(allowed.begin(), allowed.end(), subtype) == allowed.end())
    throw Error("unknown standard label: " + std::string(name));
  out.subtype = std::string(subtype);
  return out;
}

std::string to_string(const StandardErrorType& t) {
  std::string out(to_string(t.category));
  if (!t.subtype.empty()) {
    out += '/';
    out += t.subtype;
  }
  return out;
}

const std::vector<StandardErrorType>& all_standard_labels() {
  static const std::vector<StandardErrorType> labels = [] {
    std::vector<StandardErrorType> out;
    for (auto c : {StandardCategory::Accuracy, StandardCategory::Fluency,
                   StandardCategory::LocaleConvention, StandardCategory::Style,
                   StandardCategory::Terminology, StandardCategory::NonTranslation,
                   StandardCategory::Other}) {
      const auto& subs = standard_subtypes(c);
      if (subs.empty()) {
        out.push_back({c, ""});
      } else {
        for (const auto& s : subs) out.push_back({c, s});
      }
    }
    return out;
  }();
  return labels;
}

std::string_view to_string(SeverityScale s) {
  return s == SeverityScale::Chat ? "chat" : "standard";
}

std::string_view to_string(SeverityLevel l) {
  switch (l) {
    case SeverityLevel::Neutral: return "neutral";
    case SeverityLevel::Minor: return "minor";
    case SeverityLevel::Major: return "major";
    case SeverityLevel::Critical: return "critical";
  }
  throw Error("invalid SeverityLevel");
}

SeverityLevel severity_level_from_string(std::string_view name) {
  std::string n = lower_ascii(name);
  if (n == "neutral") return SeverityLevel::Neutral;
  if (n == "minor") return SeverityLevel::Minor;
  if (n == "major") return SeverityLevel::Major;
  if (n == "critical") return SeverityLevel::Critical;
  throw Error("unknown severity level: " + std::string(name));
}

Severity make_severity(SeverityScale scale, SeverityLevel level) {
  if (scale == SeverityScale::Chat && level == SeverityLevel::Critical)
    throw Error("severity level critical is not valid on the chat scale");
  return Severity{scale, level};
}

Severity severity_from_string(SeverityScale scale, std::string_view name) {
  return make_severity(scale, severity_level_from_string(name));
}

SeverityWeights SeverityWeights::chat_defaults() {
  SeverityWeights w;
  w.scale = SeverityScale::Chat;
  return w;
}

SeverityWeights SeverityWeights::standard_defaults() {
  SeverityWeights w;
  w.scale = SeverityScale::Standard;
  return w;
}

void SeverityWeights::validate() const {
  if (neutral < 0) throw Error("severity weights must be nonnegative");
  if (minor < neutral || major < minor)
    throw Error("severity weights must be monotone: major >= minor >= neutral");
  if (scale == SeverityScale::Standard && critical < major)
    throw Error("severity weights must be monotone: critical >= major");
}

double severity_weight(const Severity& s, const SeverityWeights& w) {
  if (s.scale != w.scale)
    throw Error(std::string("severity scale mismatch: annotation is ") + std::string(to_string(s.scale)) +
                ", weights are " + std::string(to_string(w.scale)));
  switch (s.level) {
    case SeverityLevel::Neutral: return w.neutral;
    case SeverityLevel::Minor: return w.minor;
    case SeverityLevel::Major: return w.major;
    case SeverityLevel::Critical: return w.critical;
  }
  throw Error("invalid SeverityLevel");
}

bool is_chat_label(const Label& l) { return std::holds_alternative<ChatErrorType>(l); }

std::string label_to_string(const Label& l) {
  if (const auto* c = std::get_if<ChatErrorType>(&l)) return std::string(to_string(*c));
  return to_string(std::get<StandardErrorType>(l));
}

Label label_from_string(std::string_view name, bool chat_taxonomy) {
  if (chat_taxonomy) return chat_error_from_string(name);
  return standard_error_from_string(name);
}

}  // namespace mqmchat
