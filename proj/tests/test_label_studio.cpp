#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "mqmchat/error.hpp"
#include "mqmchat/label_studio.hpp"
#include "test_util.hpp"

using namespace mqmchat;
using testutil::fixture_path;
using testutil::read_file;

TEST_CASE("small export becomes canonical annotations") {
  LabelStudioOptions options;
  options.set_id = "labelstudio_small";
  auto set = import_label_studio(fixture_path("labelstudio_small.json"), SetKind::HumanChat, options);
  REQUIRE(set.annotations.size() == 2);
  const auto& a = set.annotations[0];
  CHECK(a.doc_id == "d01");
  CHECK(a.system_id == "nmt");
  CHECK(a.turn == 1);
  CHECK(a.start == 15);
  CHECK(a.end == 27);
  CHECK(std::get<ChatErrorType>(a.label) == ChatErrorType::AmbiguityAndDisambiguation);
  CHECK(a.severity.level == SeverityLevel::Major);
  CHECK(a.annotator == "a1@example.com");

  CHECK(serialize_annotation_set(set) ==
        read_file(fixture_path("golden/labelstudio_small.canonical.jsonl")));
}

TEST_CASE("utf16 offsets over astral CJK re-index to scalars") {
  LabelStudioOptions options;
  options.offsets = uni::OffsetEncoding::Utf16;
  auto set = import_label_studio(fixture_path("labelstudio_cjk.json"), SetKind::HumanChat, options);
  REQUIRE(set.annotations.size() == 2);
  CHECK(set.annotations[0].start == 1);
  CHECK(set.annotations[0].end == 3);
  CHECK(uni::slice_scalars("𠮷野家で食べた", set.annotations[0].start, set.annotations[0].end) ==
        "野家");
  CHECK(set.annotations[1].start == 4);
  CHECK(set.annotations[1].end == 7);
  CHECK(uni::slice_scalars("𠮷野家で食べた", set.annotations[1].start, set.annotations[1].end) ==
        "食べた");
}

namespace {

std::string one_region_export(const std::string& text, long start, long end,
                              const std::string& label, const std::string& severity) {
  nlohmann::json task = {
      {"id", 1},
      {"data", {{"doc_id", "d"}, {"system_id", "s"}, {"turn", 0}, {"text", text}}},
      {"annotations",
       {{{"id", 1},
         {"completed_by", "a1"},
         {"result",
          {{{"id", "r1"},
            {"type", "labels"},
            {"value", {{"start", start}, {"end", end}, {"labels", {label}}}}},
           {{"id", "r1"},
            {"type", "choices"},
            {"value", {{"start", start}, {"end", end}, {"choices", {severity}}}}}}}}}}};
  return nlohmann::json::array({task}).dump();
}

}  // namespace

TEST_CASE("direct field transcription") {
  auto set = import_label_studio_json(one_region_export("some text here", 3, 9, "Mistranslation",
                                                        "major"),
                                      SetKind::HumanChat, {}, "inline");
  REQUIRE(set.annotations.size() == 1);
  CHECK(set.annotations[0].start == 3);
  CHECK(set.annotations[0].end == 9);
  CHECK(std::get<ChatErrorType>(set.annotations[0].label) == ChatErrorType::Mistranslation);
}

TEST_CASE("unknown label names are rejected by name") {
  try {
    import_label_studio_json(one_region_export("text", 0, 2, "Typo", "major"), SetKind::HumanChat,
                             {}, "inline");
    FAIL("expected unknown-label error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("Typo") != std::string::npos);
  }
}

TEST_CASE("offsets past the turn end are rejected with the region id") {
  try {
    import_label_studio_json(one_region_export("text", 0, 99, "Mistranslation", "major"),
                             SetKind::HumanChat, {}, "inline");
    FAIL("expected offset error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("r1") != std::string::npos);
  }
}

TEST_CASE("offsets splitting a surrogate pair are rejected") {
  CHECK_THROWS_AS(import_label_studio_json(one_region_export("𠮷野家", 1, 3, "Mistranslation",
                                                             "major"),
                                           SetKind::HumanChat, {}, "inline"),
                  Error);
}

TEST_CASE("regions without a severity choice are rejected") {
  nlohmann::json task = {
      {"id", 1},
      {"data", {{"doc_id", "d"}, {"system_id", "s"}, {"turn", 0}, {"text", "text"}}},
      {"annotations",
       {{{"id", 1},
         {"result",
          {{{"id", "r9"},
            {"type", "labels"},
            {"value", {{"start", 0}, {"end", 2}, {"labels", {"Mistranslation"}}}}}}}}}}};
  CHECK_THROWS_AS(import_label_studio_json(nlohmann::json::array({task}).dump(), SetKind::HumanChat,
                                           {}, "inline"),
                  Error);
}

TEST_CASE("standard-kind imports resolve standard names") {
  auto set = import_label_studio_json(
      one_region_export("some text", 0, 4, "Accuracy/Untranslated Text", "critical"),
      SetKind::HumanStandard, {}, "inline");
  REQUIRE(set.annotations.size() == 1);
  CHECK(std::get<StandardErrorType>(set.annotations[0].label) ==
        standard_error_from_string("Accuracy/UntranslatedText"));
  CHECK(set.annotations[0].severity.scale == SeverityScale::Standard);
}

TEST_CASE("report flags become document exclusions") {
  nlohmann::json task = {
      {"id", 1},
      {"data",
       {{"doc_id", "d9"}, {"system_id", "s"}, {"turn", 0}, {"text", "x"}, {"report", "offensive"}}},
      {"annotations", nlohmann::json::array()}};
  auto set = import_label_studio_json(nlohmann::json::array({task}).dump(), SetKind::HumanChat, {},
                                      "inline");
  CHECK(set.flags.at("d9") == "offensive");
}

TEST_CASE("code-unit offsets always slice back to the displayed text") {
  std::mt19937 rng(99);
  const std::vector<std::string> alphabet = {"a", "b", " ", "你", "好", "😀", "𠮷", "ば", "。"};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(alphabet.size()) - 1);
  std::uniform_int_distribution<int> len_dist(2, 30);
  for (int iter = 0; iter < 150; ++iter) {
    std::string raw;
    int n = len_dist(rng);
    for (int i = 0; i < n; ++i) raw += alphabet[static_cast<std::size_t>(pick(rng))];
    std::u32string text = uni::decode_utf8(raw);
    std::uniform_int_distribution<std::size_t> pos(0, text.size() - 1);
    std::size_t i = pos(rng);
    std::uniform_int_distribution<std::size_t> pos2(i + 1, text.size());
    std::size_t j = pos2(rng);

    auto u16 = [&](std::size_t scalar) {
      return static_cast<long>(uni::from_scalar_offset(text, scalar, uni::OffsetEncoding::Utf16));
    };
    auto set = import_label_studio_json(one_region_export(raw, u16(i), u16(j), "Mistranslation",
                                                          "minor"),
                                        SetKind::HumanChat, {}, "prop");
    REQUIRE(set.annotations.size() == 1);
    CHECK(uni::slice_scalars(raw, set.annotations[0].start, set.annotations[0].end) ==
          uni::encode_utf8(text.substr(i, j - i)));
  }
}
