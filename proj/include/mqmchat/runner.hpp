#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mqmchat/annotation.hpp"
#include "mqmchat/backend.hpp"
#include "mqmchat/cache.hpp"
#include "mqmchat/corpus.hpp"
#include "mqmchat/prompts.hpp"

namespace mqmchat {

struct RunCounts {
  long long items = 0;
  long long requested = 0;  // backend calls (cache misses)
  long long cached = 0;
  long long failed = 0;
  long long grounding_failed = 0;
  long long parse_diagnostics = 0;
  long long no_error_responses = 0;
  long long skipped_other = 0;       // findings labeled other / no-error
  long long skipped_misaligned = 0;  // records unusable for annotation
  long long misaligned = 0;          // translations kept but flagged
};

struct RunManifest {
  std::string prompt_version = std::string(kPromptVersion);
  std::string model;
  SamplingParams params;
  RunCounts counts;
  std::vector<std::string> failed_items;  // "doc_id/system_id"

  nlohmann::ordered_json to_json() const;
};

struct AnnotateOptions {
  std::string set_id = "auto-chat";
  std::vector<FewShotExample> fewshot;
  PromptTemplate prompt = PromptTemplate::chat_default();
};

struct AnnotateResult {
  AnnotationSet set;
  RunManifest manifest;
};

// One request per (doc, system), committed in canonical order regardless of
// completion order; cache hits never touch the backend; failures after the
// retry budget land in manifest.failed_items, never silently.
AnnotateResult annotate_batch(const Corpus& corpus, Backend& backend, const ResponseCache& cache,
                              const BackendConfig& config, const AnnotateOptions& options);

struct TranslateOptions {
  std::string system_id;  // defaults to the model name
};

struct TranslateResult {
  std::vector<TranslationRecord> records;
  RunManifest manifest;
};

// One request per document; replies split into turns by newline. A turn
// count mismatch keeps the record, flagged misaligned.
TranslateResult translate_batch(const Corpus& corpus, Backend& backend, const ResponseCache& cache,
                                const BackendConfig& config, const TranslateOptions& options);

}  // namespace mqmchat
