#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mqmchat/backend.hpp"

namespace mqmchat {

// One file per content-hash key holding the raw response plus request
// metadata. Reads are lock-free; writes are serialized and atomic (temp
// file + rename), so concurrent readers see old-or-new, never partial.
class ResponseCache {
 public:
  ResponseCache() = default;  // disabled
  explicit ResponseCache(std::filesystem::path dir);

  bool enabled() const { return !dir_.empty(); }
  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::vector<ChatMessage>& messages, const std::string& model,
           const SamplingParams& params, const std::string& response) const;

  static std::string request_key(const std::vector<ChatMessage>& messages, const std::string& model,
                                 const SamplingParams& params);

 private:
  std::filesystem::path dir_;
  mutable std::mutex write_mutex_;
};

}  // namespace mqmchat
