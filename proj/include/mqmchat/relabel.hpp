#pragma once

#include <string>
#include <vector>

#include "mqmchat/agreement.hpp"
#include "mqmchat/annotation.hpp"
#include "mqmchat/corpus.hpp"
#include "mqmchat/mapping.hpp"

namespace mqmchat {

struct RelabelCell {
  std::string lang_pair;
  LengthClass length_class = LengthClass::Short;
  std::string system_id;
  long long total = 0;          // standard-label errors considered
  long long relabeled = 0;      // matched and mapped to a different type
  long long chat_specific = 0;  // relabeled to a chat-specific type
  long long unmatched = 0;      // no overlapping chat annotation; never relabeled

  double relabeled_pct() const;
  double chat_specific_pct() const;
};

struct RelabelReport {
  double tau = 0.5;
  std::vector<RelabelCell> cells;  // per (lang pair, length class, system)
  RelabelCell overall;
};

// For every standard annotation, the best-overlapping chat annotation on the
// same turn decides its fate: relabeled when the chat label falls outside
// the mapping of the standard label, chat-specific when that label is one of
// the chat-only types. Flagged documents are dropped from the tally.
RelabelReport relabel_report(const AnnotationSet& standard, const AnnotationSet& chat,
                             const TypeMapping& mapping, const MatchConfig& config,
                             const Corpus& corpus);

}  // namespace mqmchat
