#include "mqmchat/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "mqmchat/error.hpp"
#include "mqmchat/grounding.hpp"
#include "mqmchat/llm_parse.hpp"

namespace mqmchat {

nlohmann::ordered_json RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["prompt_version"] = prompt_version;
  j["model"] = model;
  j["params"]["temperature"] = params.temperature;
  j["params"]["top_p"] = params.top_p;
  j["params"]["max_tokens"] = params.max_tokens;
  auto& c = j["counts"];
  c["items"] = counts.items;
  c["requested"] = counts.requested;
  c["cached"] = counts.cached;
  c["failed"] = counts.failed;
  c["grounding_failed"] = counts.grounding_failed;
  c["parse_diagnostics"] = counts.parse_diagnostics;
  c["no_error_responses"] = counts.no_error_responses;
  c["skipped_other"] = counts.skipped_other;
  c["skipped_misaligned"] = counts.skipped_misaligned;
  c["misaligned"] = counts.misaligned;
  j["failed_items"] = failed_items;
  return j;
}

namespace {

std::vector<ChatMessage> bundle_messages(const PromptBundle& bundle) {
  std::vector<ChatMessage> messages;
  if (!bundle.system_message.empty()) messages.push_back({"system", bundle.system_message});
  for (const auto& [user, assistant] : bundle.fewshot) {
    messages.push_back({"user", user});
    messages.push_back({"assistant", assistant});
  }
  messages.push_back({"user", bundle.user_message});
  return messages;
}

struct FetchResult {
  bool ok = false;
  bool from_cache = false;
  std::string response;
};

// Cache lookup, then the backend with exponential backoff.
FetchResult fetch(const std::vector<ChatMessage>& messages, Backend& backend,
                  const ResponseCache& cache, const BackendConfig& config,
                  const std::string& item_key) {
  FetchResult result;
  const std::string key = ResponseCache::request_key(messages, config.model, config.params);
  if (auto hit = cache.get(key)) {
    result.ok = true;
    result.from_cache = true;
    result.response = std::move(*hit);
    return result;
  }
  for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
    if (attempt > 0) {
      auto delay = std::chrono::milliseconds(config.retry_base_ms) * (1 << (attempt - 1));
      std::this_thread::sleep_for(delay);
    }
    try {
      result.response = backend.complete(messages, config.model, config.params, item_key);
      result.ok = true;
      cache.put(key, messages, config.model, config.params, result.response);
      return result;
    } catch (const std::exception&) {
      // retry; the final failure is reported through the manifest
    }
  }
  return result;
}

// Runs fetch over all items with at most max_concurrency in flight; results
// land by index so commit order stays canonical.
std::vector<FetchResult> fetch_all(const std::vector<std::vector<ChatMessage>>& requests,
                                   const std::vector<std::string>& item_keys, Backend& backend,
                                   const ResponseCache& cache, const BackendConfig& config) {
  std::vector<FetchResult> results(requests.size());
  const int workers = std::min<int>(config.max_concurrency, static_cast<int>(requests.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < requests.size(); ++i)
      results[i] = fetch(requests[i], backend, cache, config, item_keys[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= requests.size()) return;
        results[i] = fetch(requests[i], backend, cache, config, item_keys[i]);
      }
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace

AnnotateResult annotate_batch(const Corpus& corpus, Backend& backend, const ResponseCache& cache,
                              const BackendConfig& config, const AnnotateOptions& options) {
  config.validate();

  AnnotateResult result;
  result.set.set_id = options.set_id;
  result.set.kind = SetKind::AutoChat;
  result.manifest.prompt_version = options.prompt.version;
  result.manifest.model = config.model;
  result.manifest.params = config.params;

  std::vector<const TranslationRecord*> items;
  for (const auto& rec : corpus.translations) {
    if (rec.misaligned || rec.turns.size() != corpus.find_document(rec.doc_id)->turns.size()) {
      ++result.manifest.counts.skipped_misaligned;
      continue;
    }
    items.push_back(&rec);
  }
  std::sort(items.begin(), items.end(), [](const auto* a, const auto* b) {
    return std::tie(a->doc_id, a->system_id) < std::tie(b->doc_id, b->system_id);
  });
  result.manifest.counts.items = static_cast<long long>(items.size());

  std::vector<std::vector<ChatMessage>> requests;
  std::vector<std::string> item_keys;
  requests.reserve(items.size());
  item_keys.reserve(items.size());
  for (const auto* rec : items) {
    const ChatDocument* doc = corpus.find_document(rec->doc_id);
    requests.push_back(
        bundle_messages(build_annotation_prompt(*doc, *rec, options.fewshot, options.prompt)));
    item_keys.push_back(rec->doc_id + "/" + rec->system_id);
  }

  auto fetched = fetch_all(requests, item_keys, backend, cache, config);

  for (std::size_t i = 0; i < items.size(); ++i) {
    auto& counts = result.manifest.counts;
    if (!fetched[i].ok) {
      ++counts.failed;
      result.manifest.failed_items.push_back(item_keys[i]);
      continue;
    }
    fetched[i].from_cache ? ++counts.cached : ++counts.requested;

    ParseOutcome parsed = parse_llm_response(fetched[i].response);
    counts.parse_diagnostics += static_cast<long long>(parsed.diagnostics.size());
    if (parsed.no_error()) ++counts.no_error_responses;
    if (parsed.unparseable()) continue;  // already counted as diagnostics

    for (const auto& finding : parsed.findings) {
      if (!is_counted(finding.label)) {
        ++counts.skipped_other;
        continue;
      }
      GroundingResult grounded = ground_span(finding, *items[i]);
      if (grounded.quality == GroundingQuality::Failed) {
        ++counts.grounding_failed;
        continue;
      }
      grounded.annotation->annotator = config.model;
      result.set.annotations.push_back(std::move(*grounded.annotation));
    }
  }

  std::sort(result.set.annotations.begin(), result.set.annotations.end(), annotation_less);
  return result;
}

TranslateResult translate_batch(const Corpus& corpus, Backend& backend, const ResponseCache& cache,
                                const BackendConfig& config, const TranslateOptions& options) {
  config.validate();

  TranslateResult result;
  result.manifest.model = config.model;
  result.manifest.params = config.params;
  const std::string system_id = options.system_id.empty() ? config.model : options.system_id;

  std::vector<const ChatDocument*> docs;
  for (const auto& d : corpus.documents) docs.push_back(&d);
  std::sort(docs.begin(), docs.end(),
            [](const auto* a, const auto* b) { return a->doc_id < b->doc_id; });
  result.manifest.counts.items = static_cast<long long>(docs.size());

  std::vector<std::vector<ChatMessage>> requests;
  std::vector<std::string> item_keys;
  for (const auto* doc : docs) {
    requests.push_back(bundle_messages(
        build_translation_prompt(*doc, language_display_name(doc->source_lang()),
                                 language_display_name(doc->target_lang()))));
    item_keys.push_back(doc->doc_id + "/" + system_id);
  }

  auto fetched = fetch_all(requests, item_keys, backend, cache, config);

  for (std::size_t i = 0; i < docs.size(); ++i) {
    auto& counts = result.manifest.counts;
    if (!fetched[i].ok) {
      ++counts.failed;
      result.manifest.failed_items.push_back(item_keys[i]);
      continue;
    }
    fetched[i].from_cache ? ++counts.cached : ++counts.requested;

    TranslationRecord rec;
    rec.doc_id = docs[i]->doc_id;
    rec.system_id = system_id;
    const std::string& text = fetched[i].response;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto nl = text.find('\n', pos);
      rec.turns.push_back(text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos));
      if (nl == std::string::npos) break;
      pos = nl + 1;
    }
    if (!rec.turns.empty() && rec.turns.back().empty()) rec.turns.pop_back();
    if (rec.turns.size() != docs[i]->turns.size()) {
      rec.misaligned = true;
      ++counts.misaligned;
    }
    result.records.push_back(std::move(rec));
  }
  return result;
}

}  // namespace mqmchat
