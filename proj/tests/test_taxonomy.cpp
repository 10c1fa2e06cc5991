#include <doctest.h>

#include <random>

#include "mqmchat/error.hpp"
#include "mqmchat/mapping.hpp"
#include "mqmchat/taxonomy.hpp"
#include "test_util.hpp"

using namespace mqmchat;

TEST_CASE("chat error vocabulary") {
  CHECK(kChatErrorColumns.size() == 7);
  int chat_specific = 0, general = 0;
  for (auto t : kChatErrorColumns) (is_chat_specific(t) ? chat_specific : general) += 1;
  CHECK(chat_specific == 3);
  CHECK(general == 4);

  CHECK(is_chat_specific(ChatErrorType::DialogueInconsistency));
  CHECK(is_chat_specific(ChatErrorType::AmbiguityAndDisambiguation));
  CHECK(is_chat_specific(ChatErrorType::BuzzwordOrLoanword));
  CHECK_FALSE(is_chat_specific(ChatErrorType::Mistranslation));
  CHECK_FALSE(is_chat_specific(ChatErrorType::UnnaturalStyle));

  CHECK_FALSE(is_counted(ChatErrorType::Other));
  CHECK_FALSE(is_counted(ChatErrorType::NoError));
  CHECK(is_counted(ChatErrorType::OmissionOrAddition));

  CHECK(chat_error_from_string("BuzzwordOrLoanword") == ChatErrorType::BuzzwordOrLoanword);
  CHECK_THROWS_AS(chat_error_from_string("Typo"), Error);

  CHECK(chat_error_from_display_name("mistranslation") == ChatErrorType::Mistranslation);
  CHECK(chat_error_from_display_name("Omission or Addition") == ChatErrorType::OmissionOrAddition);
  CHECK(chat_error_from_display_name("no-error") == ChatErrorType::NoError);
  CHECK(chat_error_from_display_name("complete nonsense") == std::nullopt);
}

TEST_CASE("standard label vocabulary is closed") {
  CHECK(all_standard_labels().size() == 20);  // 4+6+5+1+2 subtypes + 2 bare categories
  CHECK(standard_error_from_string("Accuracy/Mistranslation").subtype == "Mistranslation");
  CHECK(standard_error_from_string("NonTranslation").subtype.empty());
  CHECK_THROWS_AS(standard_error_from_string("Accuracy/Bogus"), Error);
  CHECK_THROWS_AS(standard_error_from_string("Accuracy"), Error);
  CHECK_THROWS_AS(standard_error_from_string("NonTranslation/X"), Error);
  CHECK_THROWS_AS(standard_error_from_string("Nope/Nothing"), Error);
  CHECK(to_string(standard_error_from_string("LocaleConvention/TimeFormat")) ==
        "LocaleConvention/TimeFormat");
}

TEST_CASE("severity scales") {
  CHECK_THROWS_AS(make_severity(SeverityScale::Chat, SeverityLevel::Critical), Error);
  CHECK(make_severity(SeverityScale::Standard, SeverityLevel::Critical).level ==
        SeverityLevel::Critical);
  CHECK(severity_from_string(SeverityScale::Chat, "MAJOR").level == SeverityLevel::Major);
  CHECK_THROWS_AS(severity_from_string(SeverityScale::Chat, "fatal"), Error);
}

TEST_CASE("severity weights") {
  auto chat = SeverityWeights::chat_defaults();
  CHECK(severity_weight(make_severity(SeverityScale::Chat, SeverityLevel::Major), chat) == 5.0);
  CHECK(severity_weight(make_severity(SeverityScale::Chat, SeverityLevel::Minor), chat) == 1.0);
  CHECK(severity_weight(make_severity(SeverityScale::Chat, SeverityLevel::Neutral), chat) ==
        doctest::Approx(0.1));

  auto standard = SeverityWeights::standard_defaults();
  CHECK(severity_weight(make_severity(SeverityScale::Standard, SeverityLevel::Critical), standard) ==
        10.0);

  SeverityWeights zero;
  zero.scale = SeverityScale::Chat;
  zero.critical = zero.major = zero.minor = zero.neutral = 0;
  CHECK(severity_weight(make_severity(SeverityScale::Chat, SeverityLevel::Neutral), zero) == 0.0);

  CHECK_THROWS_AS(severity_weight(make_severity(SeverityScale::Standard, SeverityLevel::Major), chat),
                  Error);

  SeverityWeights bad;
  bad.major = 1;
  bad.minor = 2;
  CHECK_THROWS_AS(bad.validate(), Error);
  SeverityWeights negative;
  negative.neutral = -0.5;
  CHECK_THROWS_AS(negative.validate(), Error);
}

TEST_CASE("severity_weight is monotone for any valid weights") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    std::array<double, 4> v = {a, b, c, d};
    std::sort(v.begin(), v.end());
    SeverityWeights w;
    w.scale = SeverityScale::Standard;
    w.neutral = v[0];
    w.minor = v[1];
    w.major = v[2];
    w.critical = v[3];
    w.validate();
    double prev = -1;
    for (auto level : {SeverityLevel::Neutral, SeverityLevel::Minor, SeverityLevel::Major,
                       SeverityLevel::Critical}) {
      double weight = severity_weight(make_severity(SeverityScale::Standard, level), w);
      CHECK(weight >= prev);
      prev = weight;
    }
  }
}

TEST_CASE("default mapping matches the taxonomy") {
  auto mapping = TypeMapping::defaults();
  mapping.validate();

  CHECK(map_standard_to_chat(standard_error_from_string("Accuracy/Mistranslation"), mapping) ==
        std::set<ChatErrorType>{ChatErrorType::Mistranslation});
  CHECK(map_standard_to_chat(standard_error_from_string("Accuracy/Omission"), mapping) ==
        std::set<ChatErrorType>{ChatErrorType::OmissionOrAddition});
  CHECK(map_standard_to_chat(standard_error_from_string("LocaleConvention/Name"), mapping) ==
        std::set<ChatErrorType>{ChatErrorType::TerminologyOrProperNoun});
  CHECK(map_standard_to_chat(standard_error_from_string("Fluency/Grammar"), mapping).empty());

  // totality over the closed vocabulary
  for (const auto& label : all_standard_labels()) {
    std::string key = to_string(label);
    if (mapping.suppressed.contains(key)) continue;
    CHECK_FALSE(map_standard_to_chat(label, mapping).empty());
  }
}

TEST_CASE("mapping rejects uncovered labels by name") {
  TypeMapping partial;
  partial.entries["Accuracy/Mistranslation"] = {ChatErrorType::Mistranslation};
  CHECK_THROWS_AS(partial.validate(), Error);
  try {
    map_standard_to_chat(standard_error_from_string("Style/Awkward"), partial);
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("Style/Awkward") != std::string::npos);
  }
}

TEST_CASE("shipped config file loads and validates") {
  auto config = EvalConfig::load(testutil::repo_path("configs/mqmchat.default.json"));
  config.mapping.validate();
  CHECK(config.chat_weights.major == 5.0);
  CHECK(config.standard_weights.critical == 10.0);
  CHECK(config.system_order == std::vector<std::string>{"gpt-4", "llama3", "deepl", "nmt"});
  CHECK(config.mapping.suppressed.contains("Fluency/Grammar"));
  // the shipped table equals the built-in defaults
  CHECK(config.mapping.entries == TypeMapping::defaults().entries);

  CHECK(config.label_names.resolve("Buzzword or Loanword Issues", true) == "BuzzwordOrLoanword");
  CHECK(config.label_names.resolve("Accuracy/Untranslated Text", false) ==
        "Accuracy/UntranslatedText");
  CHECK_THROWS_AS(config.label_names.resolve("Typo", true), Error);
}

TEST_CASE("labels carry their taxonomy") {
  Label chat = ChatErrorType::Mistranslation;
  Label standard = standard_error_from_string("Style/Awkward");
  CHECK(is_chat_label(chat));
  CHECK_FALSE(is_chat_label(standard));
  CHECK(label_to_string(chat) == "Mistranslation");
  CHECK(label_to_string(standard) == "Style/Awkward");
  CHECK(label_from_string("Mistranslation", true) == chat);
  CHECK(label_from_string("Style/Awkward", false) == standard);
  CHECK_THROWS_AS(label_from_string("Style/Awkward", true), Error);
}
