#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mqmchat {

// ---------------------------------------------------------------------------
// MQM-Chat error types
// ---------------------------------------------------------------------------

enum class ChatErrorType {
  Mistranslation,
  OmissionOrAddition,
  TerminologyOrProperNoun,
  UnnaturalStyle,
  AmbiguityAndDisambiguation,
  BuzzwordOrLoanword,
  DialogueInconsistency,
  Other,    // parse results only, never counted
  NoError,  // parse results only, never counted
};

// The seven real error types in canonical report order.
constexpr std::array<ChatErrorType, 7> kChatErrorColumns = {
    ChatErrorType::Mistranslation,          ChatErrorType::OmissionOrAddition,
    ChatErrorType::TerminologyOrProperNoun, ChatErrorType::UnnaturalStyle,
    ChatErrorType::AmbiguityAndDisambiguation, ChatErrorType::BuzzwordOrLoanword,
    ChatErrorType::DialogueInconsistency};

bool is_chat_specific(ChatErrorType t);
bool is_counted(ChatErrorType t);  // false for Other / NoError

std::string_view to_string(ChatErrorType t);
ChatErrorType chat_error_from_string(std::string_view name);
// Long-form names used in prompts and model replies ("omission or addition",
// "buzzword or loanword issues", ...). Case-insensitive, returns nullopt on
// anything unrecognized.
std::optional<ChatErrorType> chat_error_from_display_name(std::string_view name);
std::string_view display_name(ChatErrorType t);

// ---------------------------------------------------------------------------
// Standard MQM labels (the closed category/subtype vocabulary)
// ---------------------------------------------------------------------------

enum class StandardCategory {
  Accuracy,
  Fluency,
  LocaleConvention,
  Style,
  Terminology,
  NonTranslation,
  Other,
};

std::string_view to_string(StandardCategory c);
StandardCategory standard_category_from_string(std::string_view name);
const std::vector<std::string>& standard_subtypes(StandardCategory c);

struct StandardErrorType {
  StandardCategory category = StandardCategory::Other;
  std::string subtype;  // empty for NonTranslation / Other

  bool operator==(const StandardErrorType&) const = default;
  auto operator<=>(const StandardErrorType&) const = default;
};

// "Accuracy/Mistranslation", "NonTranslation". Throws on unknown labels.
StandardErrorType standard_error_from_string(std::string_view name);
std::string to_string(const StandardErrorType& t);
// Every valid standard label, canonical order.
const std::vector<StandardErrorType>& all_standard_labels();

// ---------------------------------------------------------------------------
// Severity
// ---------------------------------------------------------------------------

enum class SeverityScale { Chat, Standard };
enum class SeverityLevel { Neutral, Minor, Major, Critical };  // ascending impact

std::string_view to_string(SeverityScale s);
std::string_view to_string(SeverityLevel l);
SeverityLevel severity_level_from_string(std::string_view name);

struct Severity {
  SeverityScale scale = SeverityScale::Chat;
  SeverityLevel level = SeverityLevel::Neutral;

  bool operator==(const Severity&) const = default;
  auto operator<=>(const Severity&) const = default;
};

// Throws when the level does not exist on the scale (Critical is
// standard-scale only).
Severity make_severity(SeverityScale scale, SeverityLevel level);
Severity severity_from_string(SeverityScale scale, std::string_view name);

struct SeverityWeights {
  SeverityScale scale = SeverityScale::Chat;
  double critical = 10.0;  // ignored on the chat scale
  double major = 5.0;
  double minor = 1.0;
  double neutral = 0.1;

  static SeverityWeights chat_defaults();
  static SeverityWeights standard_defaults();
  // Enforces nonnegative, monotone weights. Throws on violation.
  void validate() const;
};

// Weight lookup; throws on scale mismatch.
double severity_weight(const Severity& s, const SeverityWeights& w);

// ---------------------------------------------------------------------------
// Labels usable by either taxonomy
// ---------------------------------------------------------------------------

using Label = std::variant<ChatErrorType, StandardErrorType>;

bool is_chat_label(const Label& l);
std::string label_to_string(const Label& l);
Label label_from_string(std::string_view name, bool chat_taxonomy);

}  // namespace mqmchat
