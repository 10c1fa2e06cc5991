#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "mqmchat/mapping.hpp"

namespace mqmchat {

// Per-command run context: collects the effective configuration, fail-fast
// checks every referenced input path before any computation, echoes the
// configuration into the output directory and fingerprints it so reports
// carry the hash they were produced under.
class RunContext {
 public:
  RunContext(std::string command, std::filesystem::path out_dir);

  // Records an input path and requires it to exist.
  void add_input(const std::string& name, const std::filesystem::path& path);
  void set_option(const std::string& name, nlohmann::ordered_json value);

  // Creates the output directory and writes effective_config.json.
  void finalize();

  const std::string& hash() const { return hash_; }
  std::filesystem::path out(const std::string& filename) const;
  void write_text(const std::string& filename, const std::string& content) const;

 private:
  std::string command_;
  std::filesystem::path out_dir_;
  nlohmann::ordered_json effective_;
  std::string hash_;
};

// Reads a run-config JSON file (flag defaults); missing file throws.
nlohmann::json load_run_config(const std::filesystem::path& path);

}  // namespace mqmchat
