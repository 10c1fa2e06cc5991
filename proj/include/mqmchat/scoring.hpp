#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mqmchat/annotation.hpp"
#include "mqmchat/corpus.hpp"
#include "mqmchat/mapping.hpp"

namespace mqmchat {

enum class GroupDim { LangPair, LengthClass, System, ErrorType, Severity };

GroupDim group_dim_from_string(std::string_view name);
std::string_view to_string(GroupDim d);
std::vector<GroupDim> parse_group_dims(std::string_view csv);

// Flat count matrix over the canonical-ordered cartesian key universe.
// Error types and severities enumerate their closed vocabularies; language
// pairs, length classes and systems enumerate what the corpus contains, so
// zero rows stay present.
struct CountMatrix {
  std::vector<GroupDim> dims;
  std::vector<std::vector<std::string>> keys;
  std::vector<long long> counts;
  long long total = 0;
};

// Other/NoError labels and flagged documents are excluded from every count.
CountMatrix error_counts(const AnnotationSet& set, const Corpus& corpus,
                         const std::vector<GroupDim>& dims, const EvalConfig& config);

// CSV with the last dimension as column axis; stable ordering, byte-stable
// across reruns.
std::string heatmap_to_csv(const CountMatrix& matrix);
void heatmap_export(const CountMatrix& matrix, const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Overall quality score
// ---------------------------------------------------------------------------

enum class Normalization { PerWord, PerChat };
Normalization normalization_from_string(std::string_view name);
std::string_view to_string(Normalization n);

constexpr std::string_view kOqsFormulaVersion = "clamped-linear-v1";
constexpr double kDefaultPerWordScale = 1.0;
constexpr double kDefaultPerChatScale = 25.0;

struct ScoreOptions {
  Normalization norm = Normalization::PerChat;
  double norm_scale = 0;  // 0 = default for the normalization
  double effective_scale() const;
};

struct ScoreRow {
  std::string lang_pair;
  LengthClass length_class = LengthClass::Short;
  std::string system_id;
  long long ec = 0;
  double penalty = 0;
  double oqs = 100.0;
  double denom = 0;
};

// OQS = 100 * max(0, 1 - penalty / (norm_scale * denom)). One row per
// (lang pair, length class, system) with a translation in the corpus.
// Throws on a zero denominator.
std::vector<ScoreRow> oqs_report(const AnnotationSet& set, const Corpus& corpus,
                                 const SeverityWeights& weights, const ScoreOptions& options);

nlohmann::ordered_json score_report_json(const std::vector<ScoreRow>& rows,
                                         const ScoreOptions& options, const SeverityWeights& weights,
                                         const std::string& config_hash);
std::vector<ScoreRow> score_rows_from_json(const nlohmann::json& report);

}  // namespace mqmchat
