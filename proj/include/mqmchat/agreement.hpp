#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mqmchat/annotation.hpp"

namespace mqmchat {

enum class Granularity { Span, SpanLabel, SpanSeverity };

Granularity granularity_from_string(std::string_view name);
std::string_view to_string(Granularity g);

struct MatchConfig {
  double tau = 0.5;  // overlap ratio threshold, in (0, 1]
  Granularity granularity = Granularity::Span;

  void validate() const;
};

// |A ∩ B| / min(|A|, |B|); zero-width anchors act as a one-unit span.
// Throws when the spans live on different turns or translations.
double overlap_ratio(const Annotation& a, const Annotation& b);

struct MatchPair {
  std::size_t gold = 0;  // index into the gold annotation vector
  std::size_t pred = 0;  // index into the predicted annotation vector
  double ratio = 0;
};

struct MatchResult {
  std::vector<MatchPair> pairs;
  std::vector<std::size_t> unmatched_gold;
  std::vector<std::size_t> unmatched_pred;
  std::vector<std::string> warnings;
};

// Maximum-cardinality one-to-one matching over admissible pairs (same turn,
// ratio >= tau, label/severity equality per granularity); among maximum
// matchings the one with the largest total overlap ratio. Indices refer to
// the input order.
MatchResult match_spans(std::span<const Annotation> gold, std::span<const Annotation> pred,
                        const MatchConfig& config);

MatchResult match_annotations(const AnnotationSet& gold, const AnnotationSet& pred,
                              const MatchConfig& config);

// ---------------------------------------------------------------------------
// Precision / recall / F1
// ---------------------------------------------------------------------------

struct PrfTriple {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

struct DocumentPrf {
  std::string doc_id;
  std::string system_id;
  std::size_t gold_count = 0;
  std::size_t pred_count = 0;
  std::size_t matched = 0;
  PrfTriple triple;
};

struct PrfOptions {
  MatchConfig match;
  // When false, items empty on both sides are dropped instead of scored
  // (1, 1, 1).
  bool include_empty_documents = true;
  int threads = 1;  // 0 = library default; evaluation items are independent
};

struct PrfReport {
  std::vector<DocumentPrf> documents;
  PrfTriple macro;  // arithmetic mean of per-document values (incl. F1)
};

PrfTriple document_prf(std::size_t gold_count, std::size_t pred_count, std::size_t matched);

// Evaluation items are (doc_id, system_id) pairs; the default universe is
// everything either set annotates, an explicit universe (usually the corpus
// slice) overrides it. Documents flagged in either set are dropped.
PrfReport prf_report(const AnnotationSet& gold, const AnnotationSet& pred, const PrfOptions& options,
                     const std::vector<std::pair<std::string, std::string>>* universe = nullptr);

}  // namespace mqmchat
