#pragma once

#include <filesystem>
#include <string>

#include "mqmchat/annotation.hpp"
#include "mqmchat/mapping.hpp"
#include "mqmchat/unicode.hpp"

namespace mqmchat {

// Adapter for Label Studio task exports (JSON). Each task annotates one
// translated turn and must carry doc_id / system_id / turn in its data
// block alongside the displayed text. Region offsets are re-indexed from
// the declared code-unit encoding into Unicode scalar values.
struct LabelStudioOptions {
  uni::OffsetEncoding offsets = uni::OffsetEncoding::Utf16;
  std::string set_id;  // defaults to the export file's stem
  LabelNameTable names = LabelNameTable::defaults();
};

AnnotationSet import_label_studio(const std::filesystem::path& path, SetKind kind,
                                  const LabelStudioOptions& options);
AnnotationSet import_label_studio_json(const std::string& text, SetKind kind,
                                       const LabelStudioOptions& options,
                                       const std::string& origin);

}  // namespace mqmchat
