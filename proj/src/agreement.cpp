#include "mqmchat/agreement.hpp"

#include <algorithm>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mqmchat/bipartite.hpp"
#include "mqmchat/error.hpp"

namespace mqmchat {

Granularity granularity_from_string(std::string_view name) {
  if (name == "span") return Granularity::Span;
  if (name == "span_label" || name == "span+label") return Granularity::SpanLabel;
  if (name == "span_severity" || name == "span+severity") return Granularity::SpanSeverity;
  throw Error("unknown granularity: " + std::string(name));
}

std::string_view to_string(Granularity g) {
  switch (g) {
    case Granularity::Span: return "span";
    case Granularity::SpanLabel: return "span_label";
    case Granularity::SpanSeverity: return "span_severity";
  }
  throw Error("invalid Granularity");
}

void MatchConfig::validate() const {
  if (!(tau > 0.0) || tau > 1.0) throw Error("overlap threshold must be in (0, 1]");
}

namespace {

// Zero-width anchors compare as a one-unit extent.
std::pair<double, double> effective_span(const Annotation& a) {
  double start = static_cast<double>(a.start);
  double end = static_cast<double>(a.end);
  if (a.start == a.end) end += 1.0;
  return {start, end};
}

}  // namespace

double overlap_ratio(const Annotation& a, const Annotation& b) {
  if (a.doc_id != b.doc_id || a.system_id != b.system_id)
    throw Error("overlap ratio across different translations");
  if (a.turn != b.turn) throw Error("overlap ratio across different turns");
  auto [as, ae] = effective_span(a);
  auto [bs, be] = effective_span(b);
  double inter = std::min(ae, be) - std::max(as, bs);
  if (inter <= 0) return 0.0;
  return inter / std::min(ae - as, be - bs);
}

namespace {

bool admissible(const Annotation& g, const Annotation& p, Granularity granularity) {
  switch (granularity) {
    case Granularity::Span: return true;
    case Granularity::SpanLabel: return label_to_string(g.label) == label_to_string(p.label);
    case Granularity::SpanSeverity: return g.severity.level == p.severity.level;
  }
  return false;
}

}  // namespace

MatchResult match_spans(std::span<const Annotation> gold, std::span<const Annotation> pred,
                        const MatchConfig& config) {
  config.validate();

  // Canonical processing order makes ties deterministic regardless of the
  // callers' annotation order.
  std::vector<std::size_t> gold_order(gold.size()), pred_order(pred.size());
  for (std::size_t i = 0; i < gold.size(); ++i) gold_order[i] = i;
  for (std::size_t i = 0; i < pred.size(); ++i) pred_order[i] = i;
  std::sort(gold_order.begin(), gold_order.end(),
            [&](std::size_t a, std::size_t b) { return annotation_less(gold[a], gold[b]); });
  std::sort(pred_order.begin(), pred_order.end(),
            [&](std::size_t a, std::size_t b) { return annotation_less(pred[a], pred[b]); });

  std::vector<WeightedEdge> edges;
  for (std::size_t gi = 0; gi < gold_order.size(); ++gi) {
    const Annotation& g = gold[gold_order[gi]];
    for (std::size_t pi = 0; pi < pred_order.size(); ++pi) {
      const Annotation& p = pred[pred_order[pi]];
      if (g.doc_id != p.doc_id || g.system_id != p.system_id || g.turn != p.turn) continue;
      if (!admissible(g, p, config.granularity)) continue;
      double ratio = overlap_ratio(g, p);
      if (ratio >= config.tau)
        edges.push_back({static_cast<int>(gi), static_cast<int>(pi), ratio});
    }
  }

  auto matched = max_cardinality_max_weight_matching(static_cast<int>(gold.size()),
                                                     static_cast<int>(pred.size()), edges);

  MatchResult result;
  std::vector<bool> gold_used(gold.size(), false), pred_used(pred.size(), false);
  for (auto [gi, pi] : matched) {
    std::size_t g = gold_order[gi];
    std::size_t p = pred_order[pi];
    result.pairs.push_back({g, p, overlap_ratio(gold[g], pred[p])});
    gold_used[g] = true;
    pred_used[p] = true;
  }
  std::sort(result.pairs.begin(), result.pairs.end(),
            [](const MatchPair& a, const MatchPair& b) { return a.gold < b.gold; });
  for (std::size_t i = 0; i < gold.size(); ++i)
    if (!gold_used[i]) result.unmatched_gold.push_back(i);
  for (std::size_t i = 0; i < pred.size(); ++i)
    if (!pred_used[i]) result.unmatched_pred.push_back(i);
  return result;
}

MatchResult match_annotations(const AnnotationSet& gold, const AnnotationSet& pred,
                              const MatchConfig& config) {
  config.validate();

  // Edges never cross (doc, system) groups, so each group is matched on its
  // own and the indices are mapped back.
  std::map<std::pair<std::string, std::string>, std::pair<std::vector<std::size_t>,
                                                          std::vector<std::size_t>>>
      groups;
  for (std::size_t i = 0; i < gold.annotations.size(); ++i)
    groups[{gold.annotations[i].doc_id, gold.annotations[i].system_id}].first.push_back(i);
  for (std::size_t i = 0; i < pred.annotations.size(); ++i)
    groups[{pred.annotations[i].doc_id, pred.annotations[i].system_id}].second.push_back(i);

  MatchResult result;
  for (const auto& [key, indices] : groups) {
    const auto& [gold_idx, pred_idx] = indices;
    std::vector<Annotation> g, p;
    g.reserve(gold_idx.size());
    p.reserve(pred_idx.size());
    for (auto i : gold_idx) g.push_back(gold.annotations[i]);
    for (auto i : pred_idx) p.push_back(pred.annotations[i]);
    MatchResult local = match_spans(g, p, config);
    for (const auto& pair : local.pairs)
      result.pairs.push_back({gold_idx[pair.gold], pred_idx[pair.pred], pair.ratio});
    for (auto i : local.unmatched_gold) result.unmatched_gold.push_back(gold_idx[i]);
    for (auto i : local.unmatched_pred) result.unmatched_pred.push_back(pred_idx[i]);
  }
  std::sort(result.pairs.begin(), result.pairs.end(),
            [](const MatchPair& a, const MatchPair& b) { return a.gold < b.gold; });
  std::sort(result.unmatched_gold.begin(), result.unmatched_gold.end());
  std::sort(result.unmatched_pred.begin(), result.unmatched_pred.end());

  std::set<std::string> gold_docs, pred_docs;
  for (const auto& a : gold.annotations) gold_docs.insert(a.doc_id);
  for (const auto& a : pred.annotations) pred_docs.insert(a.doc_id);
  bool overlap = std::any_of(gold_docs.begin(), gold_docs.end(),
                             [&](const std::string& d) { return pred_docs.contains(d); });
  if (!overlap && !gold_docs.empty() && !pred_docs.empty())
    result.warnings.push_back("gold and predicted sets cover disjoint documents");
  return result;
}

PrfTriple document_prf(std::size_t gold_count, std::size_t pred_count, std::size_t matched) {
  PrfTriple t;
  if (gold_count == 0 && pred_count == 0) {
    t.precision = t.recall = t.f1 = 1.0;
    return t;
  }
  if (pred_count == 0) {
    t.precision = 1.0;
    t.recall = 0.0;
  } else if (gold_count == 0) {
    t.precision = 0.0;
    t.recall = 1.0;
  } else {
    t.precision = static_cast<double>(matched) / static_cast<double>(pred_count);
    t.recall = static_cast<double>(matched) / static_cast<double>(gold_count);
  }
  t.f1 = (t.precision + t.recall) > 0 ? 2.0 * t.precision * t.recall / (t.precision + t.recall) : 0.0;
  return t;
}

PrfReport prf_report(const AnnotationSet& gold, const AnnotationSet& pred, const PrfOptions& options,
                     const std::vector<std::pair<std::string, std::string>>* universe) {
  options.match.validate();

  std::set<std::string> excluded;
  for (const auto& [doc, flag] : gold.flags) excluded.insert(doc);
  for (const auto& [doc, flag] : pred.flags) excluded.insert(doc);

  // Evaluation items in canonical order.
  std::vector<std::pair<std::string, std::string>> items;
  if (universe) {
    items = *universe;
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
  } else {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& a : gold.annotations) seen.insert({a.doc_id, a.system_id});
    for (const auto& a : pred.annotations) seen.insert({a.doc_id, a.system_id});
    items.assign(seen.begin(), seen.end());
  }
  std::erase_if(items, [&](const auto& item) { return excluded.contains(item.first); });

  std::map<std::pair<std::string, std::string>, std::vector<Annotation>> gold_by, pred_by;
  for (const auto& a : gold.annotations)
    if (!excluded.contains(a.doc_id)) gold_by[{a.doc_id, a.system_id}].push_back(a);
  for (const auto& a : pred.annotations)
    if (!excluded.contains(a.doc_id)) pred_by[{a.doc_id, a.system_id}].push_back(a);

  static const std::vector<Annotation> kEmpty;
  std::vector<DocumentPrf> docs(items.size());

  auto evaluate_item = [&](std::size_t i) {
    const auto& item = items[i];
    auto git = gold_by.find(item);
    auto pit = pred_by.find(item);
    const std::vector<Annotation>& g = git == gold_by.end() ? kEmpty : git->second;
    const std::vector<Annotation>& p = pit == pred_by.end() ? kEmpty : pit->second;
    MatchResult m = match_spans(g, p, options.match);
    DocumentPrf d;
    d.doc_id = item.first;
    d.system_id = item.second;
    d.gold_count = g.size();
    d.pred_count = p.size();
    d.matched = m.pairs.size();
    d.triple = document_prf(d.gold_count, d.pred_count, d.matched);
    docs[i] = std::move(d);
  };

  const auto n = static_cast<long long>(items.size());
#ifdef _OPENMP
  if (options.threads != 1) {
    int requested = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(requested)
    for (long long i = 0; i < n; ++i) evaluate_item(static_cast<std::size_t>(i));
  } else {
    for (long long i = 0; i < n; ++i) evaluate_item(static_cast<std::size_t>(i));
  }
#else
  for (long long i = 0; i < n; ++i) evaluate_item(static_cast<std::size_t>(i));
#endif

  if (!options.include_empty_documents)
    std::erase_if(docs, [](const DocumentPrf& d) { return d.gold_count == 0 && d.pred_count == 0; });

  PrfReport report;
  report.documents = std::move(docs);
  if (!report.documents.empty()) {
    for (const auto& d : report.documents) {
      report.macro.precision += d.triple.precision;
      report.macro.recall += d.triple.recall;
      report.macro.f1 += d.triple.f1;
    }
    const auto count = static_cast<double>(report.documents.size());
    report.macro.precision /= count;
    report.macro.recall /= count;
    report.macro.f1 /= count;
  }
  return report;
}

}  // namespace mqmchat
