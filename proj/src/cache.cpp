#include "mqmchat/cache.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mqmchat/error.hpp"
#include "mqmchat/sha256.hpp"

namespace mqmchat {

namespace {

nlohmann::ordered_json request_json(const std::vector<ChatMessage>& messages, const std::string& model,
                                    const SamplingParams& params) {
  nlohmann::ordered_json j;
  j["model"] = model;
  j["temperature"] = params.temperature;
  j["top_p"] = params.top_p;
  j["max_tokens"] = params.max_tokens;
  auto& msgs = j["messages"] = nlohmann::ordered_json::array();
  for (const auto& m : messages) {
    nlohmann::ordered_json jm;
    jm["role"] = m.role;
    jm["content"] = m.content;
    msgs.push_back(std::move(jm));
  }
  return j;
}

}  // namespace

ResponseCache::ResponseCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string ResponseCache::request_key(const std::vector<ChatMessage>& messages,
                                       const std::string& model, const SamplingParams& params) {
  return sha256_hex(request_json(messages, model, params).dump());
}

std::optional<std::string> ResponseCache::get(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(dir_ / (key + ".json"), std::ios::binary);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    return j.at("response").get<std::string>();
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // treat a damaged entry as a miss
  }
}

void ResponseCache::put(const std::string& key, const std::vector<ChatMessage>& messages,
                        const std::string& model, const SamplingParams& params,
                        const std::string& response) const {
  if (!enabled()) return;
  nlohmann::ordered_json j;
  j["key"] = key;
  j["request"] = request_json(messages, model, params);
  j["response"] = response;

  std::lock_guard<std::mutex> lock(write_mutex_);
  auto final_path = dir_ / (key + ".json");
  auto tmp_path = dir_ / (key + ".tmp");
  {
    std::ofstream out(tmp_path, std::ios::binary);
    if (!out) throw Error("cannot write cache entry: " + tmp_path.string());
    out << j.dump(2);
  }
  std::filesystem::rename(tmp_path, final_path);
}

}  // namespace mqmchat
