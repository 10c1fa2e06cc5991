// Benchmark of the per-document matching/PRF evaluation: serial reference
// vs the OpenMP-parallel driver, verifying both produce identical reports.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mqmchat/agreement.hpp"

using namespace mqmchat;

namespace {

AnnotationSet synth_set(const std::string& set_id, unsigned seed, int docs, int spans_per_doc) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> turn_dist(0, 3);
  std::uniform_int_distribution<int> start_dist(0, 100);
  std::uniform_int_distribution<int> len_dist(1, 18);
  std::uniform_int_distribution<int> label_dist(0, 6);
  std::uniform_int_distribution<int> sev_dist(0, 2);

  AnnotationSet set;
  set.set_id = set_id;
  set.kind = SetKind::HumanChat;
  for (int d = 0; d < docs; ++d) {
    char doc_id[16];
    std::snprintf(doc_id, sizeof doc_id, "doc%05d", d);
    for (int s = 0; s < spans_per_doc; ++s) {
      Annotation a;
      a.doc_id = doc_id;
      a.system_id = "sys";
      a.turn = turn_dist(rng);
      a.start = static_cast<std::size_t>(start_dist(rng));
      a.end = a.start + static_cast<std::size_t>(len_dist(rng));
      a.label = static_cast<ChatErrorType>(label_dist(rng));
      a.severity = make_severity(SeverityScale::Chat, static_cast<SeverityLevel>(sev_dist(rng)));
      a.annotator = set_id;
      set.annotations.push_back(std::move(a));
    }
  }
  return set;
}

double run(const AnnotationSet& gold, const AnnotationSet& pred, int threads, PrfReport& out) {
  PrfOptions options;
  options.match.tau = 0.5;
  options.threads = threads;
  auto t0 = std::chrono::steady_clock::now();
  out = prf_report(gold, pred, options);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

bool same(const PrfReport& a, const PrfReport& b) {
  if (a.documents.size() != b.documents.size()) return false;
  for (std::size_t i = 0; i < a.documents.size(); ++i) {
    const auto& x = a.documents[i];
    const auto& y = b.documents[i];
    if (x.doc_id != y.doc_id || x.matched != y.matched ||
        x.triple.precision != y.triple.precision || x.triple.recall != y.triple.recall ||
        x.triple.f1 != y.triple.f1)
      return false;
  }
  return a.macro.precision == b.macro.precision && a.macro.recall == b.macro.recall &&
         a.macro.f1 == b.macro.f1;
}

}  // namespace

int main(int argc, char** argv) {
  int docs = argc > 1 ? std::atoi(argv[1]) : 4000;
  int spans = argc > 2 ? std::atoi(argv[2]) : 12;

  AnnotationSet gold = synth_set("gold", 1, docs, spans);
  AnnotationSet pred = synth_set("pred", 2, docs, spans);

  PrfReport serial_report;
  double serial = run(gold, pred, 1, serial_report);
  std::printf("%-22s %8.3fs  (macro F1 %.6f over %zu items)\n", "serial reference", serial,
              serial_report.macro.f1, serial_report.documents.size());

#ifdef _OPENMP
  std::vector<int> thread_counts = {2, 4, omp_get_max_threads()};
  std::sort(thread_counts.begin(), thread_counts.end());
  thread_counts.erase(std::unique(thread_counts.begin(), thread_counts.end()), thread_counts.end());
  for (int threads : thread_counts) {
    if (threads <= 1) continue;
    PrfReport parallel_report;
    double parallel = run(gold, pred, threads, parallel_report);
    bool ok = same(serial_report, parallel_report);
    std::printf("openmp %2d threads      %8.3fs  speedup %5.2fx  results %s\n", threads, parallel,
                serial / parallel, ok ? "identical" : "DIFFER");
    if (!ok) return 1;
  }
#else
  std::printf("built without OpenMP; parallel driver unavailable\n");
#endif
  return 0;
}
