#include "mqmchat/run_config.hpp"

#include <fstream>
#include <sstream>

#include "mqmchat/error.hpp"
#include "mqmchat/sha256.hpp"

namespace mqmchat {

RunContext::RunContext(std::string command, std::filesystem::path out_dir)
    : command_(std::move(command)), out_dir_(std::move(out_dir)) {
  effective_["command"] = command_;
  effective_["out"] = out_dir_.string();
  effective_["inputs"] = nlohmann::ordered_json::object();
  effective_["options"] = nlohmann::ordered_json::object();
}

void RunContext::add_input(const std::string& name, const std::filesystem::path& path) {
  if (!std::filesystem::exists(path))
    throw Error(command_ + ": input path does not exist: " + path.string());
  effective_["inputs"][name] = path.string();
  // Inputs enter the fingerprint by content, so renaming or relocating a
  // file does not defeat the cross-configuration comparison guard.
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  effective_["input_hashes"][name] = sha256_hex(buf.str());
}

void RunContext::set_option(const std::string& name, nlohmann::ordered_json value) {
  effective_["options"][name] = std::move(value);
}

void RunContext::finalize() {
  // The hash fingerprints the computation (command, input contents,
  // options), not where inputs live or results land, so identical runs
  // into different directories stay byte-comparable.
  nlohmann::ordered_json hashed;
  hashed["command"] = effective_["command"];
  hashed["input_hashes"] = effective_.value("input_hashes", nlohmann::ordered_json::object());
  hashed["options"] = effective_["options"];
  hash_ = sha256_hex(hashed.dump());
  effective_["config_hash"] = hash_;
  std::filesystem::create_directories(out_dir_);
  write_text("effective_config.json", effective_.dump(2) + "\n");
}

std::filesystem::path RunContext::out(const std::string& filename) const {
  return out_dir_ / filename;
}

void RunContext::write_text(const std::string& filename, const std::string& content) const {
  auto path = out_dir_ / filename;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write output file: " + path.string());
  out << content;
  if (!out) throw Error("failed writing output file: " + path.string());
}

nlohmann::json load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open run config: " + path.string());
  try {
    nlohmann::json j;
    in >> j;
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed run config " + path.string() + ": " + e.what());
  }
}

}  // namespace mqmchat
