#include "mqmchat/backend.hpp"

#include <cstdlib>
#include <fstream>
#include <map>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "mqmchat/error.hpp"

namespace mqmchat {

void BackendConfig::validate() const {
  if (max_concurrency < 1) throw Error("backend concurrency must be at least 1");
  if (max_retries < 0) throw Error("backend retry limit must be nonnegative");
  if (timeout_seconds < 1) throw Error("backend timeout must be positive");
}

namespace {

class HttpBackend final : public Backend {
 public:
  explicit HttpBackend(BackendConfig config) : config_(std::move(config)) {
    if (config_.endpoint.empty()) throw Error("backend endpoint is not configured");
    auto scheme_end = config_.endpoint.find("://");
    if (scheme_end == std::string::npos)
      throw Error("backend endpoint must be a full URL: " + config_.endpoint);
    auto path_start = config_.endpoint.find('/', scheme_end + 3);
    if (path_start == std::string::npos) {
      base_ = config_.endpoint;
      path_ = "/";
    } else {
      base_ = config_.endpoint.substr(0, path_start);
      path_ = config_.endpoint.substr(path_start);
    }
  }

  std::string complete(const std::vector<ChatMessage>& messages, const std::string& model,
                       const SamplingParams& params, const std::string&) override {
    nlohmann::ordered_json body;
    body["model"] = model;
    auto& msgs = body["messages"] = nlohmann::ordered_json::array();
    for (const auto& m : messages) {
      nlohmann::ordered_json jm;
      jm["role"] = m.role;
      jm["content"] = m.content;
      msgs.push_back(std::move(jm));
    }
    body["temperature"] = params.temperature;
    body["top_p"] = params.top_p;
    body["max_tokens"] = params.max_tokens;

    httplib::Client client(base_);
    client.set_connection_timeout(config_.timeout_seconds);
    client.set_read_timeout(config_.timeout_seconds);

    httplib::Headers headers;
    if (const char* key = std::getenv(config_.api_key_env.c_str()); key && *key) {
      std::string value = config_.auth_header == "Authorization" ? std::string("Bearer ") + key : key;
      headers.emplace(config_.auth_header, value);
    }

    auto res = client.Post(path_, headers, body.dump(), "application/json");
    if (!res) throw Error("backend request failed: " + httplib::to_string(res.error()));
    if (res->status < 200 || res->status >= 300)
      throw Error("backend returned HTTP " + std::to_string(res->status) + ": " + res->body);

    try {
      auto j = nlohmann::json::parse(res->body);
      return j.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(std::string("unexpected backend response shape: ") + e.what());
    }
  }

 private:
  BackendConfig config_;
  std::string base_;
  std::string path_;
};

// Chat lines are the block after the instruction paragraph of the final
// user message.
std::vector<std::string> request_chat_lines(const std::vector<ChatMessage>& messages) {
  for (auto it = messages.rbegin(); it != messages.rend(); ++it) {
    if (it->role != "user") continue;
    auto block = it->content.rfind("\n\n");
    std::string tail = block == std::string::npos ? it->content : it->content.substr(block + 2);
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos <= tail.size()) {
      auto nl = tail.find('\n', pos);
      lines.push_back(tail.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos));
      if (nl == std::string::npos) break;
      pos = nl + 1;
    }
    return lines;
  }
  return {};
}

class MockBackend final : public Backend {
 public:
  enum class Mode { NoError, Echo, EchoDropLast, Canned };

  MockBackend(Mode mode, std::map<std::string, std::string> canned)
      : mode_(mode), canned_(std::move(canned)) {}

  std::string complete(const std::vector<ChatMessage>& messages, const std::string&,
                       const SamplingParams&, const std::string& item_key) override {
    switch (mode_) {
      case Mode::NoError:
        return "no-error";
      case Mode::Echo:
      case Mode::EchoDropLast: {
        auto lines = request_chat_lines(messages);
        if (mode_ == Mode::EchoDropLast && !lines.empty()) lines.pop_back();
        std::string out;
        for (std::size_t i = 0; i < lines.size(); ++i) {
          if (i) out += '\n';
          out += lines[i];
        }
        return out;
      }
      case Mode::Canned: {
        if (auto it = canned_.find(item_key); it != canned_.end()) return it->second;
        if (auto it = canned_.find("*"); it != canned_.end()) return it->second;
        throw Error("mock backend has no canned reply for " + item_key);
      }
    }
    throw Error("invalid mock mode");
  }

 private:
  Mode mode_;
  std::map<std::string, std::string> canned_;
};

}  // namespace

std::unique_ptr<Backend> make_http_backend(const BackendConfig& config) {
  config.validate();
  return std::make_unique<HttpBackend>(config);
}

std::unique_ptr<Backend> make_mock_backend(const std::string& spec) {
  if (spec == "no_error") return std::make_unique<MockBackend>(MockBackend::Mode::NoError,
                                                               std::map<std::string, std::string>{});
  if (spec == "echo")
    return std::make_unique<MockBackend>(MockBackend::Mode::Echo, std::map<std::string, std::string>{});
  if (spec == "echo_drop_last")
    return std::make_unique<MockBackend>(MockBackend::Mode::EchoDropLast,
                                         std::map<std::string, std::string>{});

  std::ifstream in(spec);
  if (!in) throw Error("unknown mock backend spec (not a builtin, not a readable file): " + spec);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed canned-reply file " + spec + ": " + e.what());
  }
  std::map<std::string, std::string> canned;
  for (const auto& [key, value] : j.items()) canned[key] = value.get<std::string>();
  return std::make_unique<MockBackend>(MockBackend::Mode::Canned, std::move(canned));
}

}  // namespace mqmchat
