#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

namespace mqmchat {

struct ChatMessage {
  std::string role;  // "system" | "user" | "assistant"
  std::string content;
};

struct SamplingParams {
  double temperature = 0.0;
  double top_p = 1.0;
  int max_tokens = 500;
};

struct BackendConfig {
  std::string endpoint;  // full URL of a chat-completion style endpoint
  std::string model = "gpt-4";
  SamplingParams params;
  int timeout_seconds = 60;
  int max_concurrency = 1;
  int max_retries = 3;
  int retry_base_ms = 250;  // exponential backoff base
  std::string auth_header = "Authorization";
  std::string api_key_env = "MQMCHAT_API_KEY";
  std::filesystem::path cache_dir;

  void validate() const;
};

class Backend {
 public:
  virtual ~Backend() = default;
  // item_key identifies the work item ("doc_id/system_id"); HTTP backends
  // ignore it, scripted ones may key canned replies on it.
  virtual std::string complete(const std::vector<ChatMessage>& messages, const std::string& model,
                               const SamplingParams& params, const std::string& item_key) = 0;
};

std::unique_ptr<Backend> make_http_backend(const BackendConfig& config);

// Deterministic stubs for tests and offline runs:
//   "no_error"        -> every reply is the no-error sentinel
//   "echo"            -> replies with the chat lines of the request
//   "echo_drop_last"  -> same, minus the final line
//   <path>.json       -> canned replies: {"doc/system": "...", "*": "..."}
std::unique_ptr<Backend> make_mock_backend(const std::string& spec);

}  // namespace mqmchat
