#include "mqmchat/label_studio.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mqmchat/error.hpp"

namespace mqmchat {

using nlohmann::json;

namespace {

struct Region {
  std::string id;
  std::size_t start = 0, end = 0;
  bool has_span = false;
  std::vector<std::string> labels;
  std::vector<std::string> choices;
};

std::string annotator_of(const json& ann) {
  if (ann.contains("completed_by")) {
    const auto& cb = ann.at("completed_by");
    if (cb.is_string()) return cb.get<std::string>();
    if (cb.is_number_integer()) return std::to_string(cb.get<long long>());
    if (cb.is_object()) {
      if (cb.contains("email")) return cb.at("email").get<std::string>();
      if (cb.contains("id")) return std::to_string(cb.at("id").get<long long>());
    }
  }
  if (ann.contains("id") && ann.at("id").is_number_integer())
    return "annotation-" + std::to_string(ann.at("id").get<long long>());
  return "unknown";
}

}  // namespace

AnnotationSet import_label_studio_json(const std::string& text, SetKind kind,
                                       const LabelStudioOptions& options, const std::string& origin) {
  json tasks;
  try {
    tasks = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(origin + ": malformed Label Studio export: " + e.what());
  }
  if (!tasks.is_array()) throw Error(origin + ": Label Studio export must be a task array");

  AnnotationSet set;
  set.set_id = options.set_id.empty() ? "labelstudio" : options.set_id;
  set.kind = kind;
  const SeverityScale scale = scale_for(kind);

  for (const auto& task : tasks) {
    if (!task.contains("data")) throw Error(origin + ": task without data block");
    const auto& data = task.at("data");
    std::string task_name = "task " + (task.contains("id") ? task.at("id").dump() : "?");
    if (!data.contains("doc_id") || !data.contains("system_id") || !data.contains("turn") ||
        !data.contains("text"))
      throw Error(origin + ": " + task_name + " data must carry doc_id, system_id, turn, text");
    const std::string doc_id = data.at("doc_id").get<std::string>();
    const std::string system_id = data.at("system_id").get<std::string>();
    const int turn = data.at("turn").get<int>();
    const std::u32string turn_text = uni::decode_utf8(data.at("text").get<std::string>());

    if (data.contains("report") && !data.at("report").get<std::string>().empty())
      set.flags[doc_id] = data.at("report").get<std::string>();

    if (!task.contains("annotations")) continue;
    for (const auto& ann : task.at("annotations")) {
      const std::string annotator = annotator_of(ann);
      // Region attributes arrive as separate result items sharing an id:
      // the labels item carries the span, a choices item the severity.
      std::map<std::string, Region> regions;
      std::vector<std::string> region_order;
      for (const auto& item : ann.value("result", json::array())) {
        std::string type = item.value("type", "");
        if (type != "labels" && type != "choices") continue;
        std::string id = item.value("id", "");
        auto [it, inserted] = regions.try_emplace(id);
        if (inserted) {
          it->second.id = id;
          region_order.push_back(id);
        }
        Region& region = it->second;
        const auto& value = item.at("value");
        if (value.contains("start") && value.contains("end")) {
          region.start = value.at("start").get<std::size_t>();
          region.end = value.at("end").get<std::size_t>();
          region.has_span = true;
        }
        if (type == "labels")
          for (const auto& l : value.at("labels")) region.labels.push_back(l.get<std::string>());
        if (type == "choices")
          for (const auto& c : value.at("choices")) region.choices.push_back(c.get<std::string>());
      }

      for (const auto& id : region_order) {
        const Region& region = regions.at(id);
        if (region.labels.empty()) {
          if (region.choices.empty()) continue;
          throw Error(origin + ": region " + id + " has a severity choice but no label");
        }
        if (!region.has_span) throw Error(origin + ": region " + id + " has no offsets");
        if (region.choices.empty())
          throw Error(origin + ": region " + id + " has no severity choice");

        std::size_t start, end;
        try {
          start = uni::to_scalar_offset(turn_text, region.start, options.offsets);
          end = uni::to_scalar_offset(turn_text, region.end, options.offsets);
        } catch (const Error& e) {
          throw Error(origin + ": region " + id + ": " + e.what());
        }
        if (start >= end)
          throw Error(origin + ": region " + id + ": empty span [" + std::to_string(region.start) +
                      ", " + std::to_string(region.end) + ")");

        for (const auto& display : region.labels) {
          Annotation a;
          a.doc_id = doc_id;
          a.system_id = system_id;
          a.turn = turn;
          a.start = start;
          a.end = end;
          std::string canonical;
          try {
            canonical = options.names.resolve(display, is_chat_kind(kind));
          } catch (const Error&) {
            throw Error(origin + ": region " + id + ": unknown label name: " + display);
          }
          a.label = label_from_string(canonical, is_chat_kind(kind));
          a.severity = severity_from_string(scale, region.choices.front());
          a.annotator = annotator;
          set.annotations.push_back(std::move(a));
        }
      }
    }
  }
  return set;
}

AnnotationSet import_label_studio(const std::filesystem::path& path, SetKind kind,
                                  const LabelStudioOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open Label Studio export: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  LabelStudioOptions opts = options;
  if (opts.set_id.empty()) opts.set_id = path.stem().string();
  return import_label_studio_json(buf.str(), kind, opts, path.filename().string());
}

}  // namespace mqmchat
