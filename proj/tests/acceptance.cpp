// Acceptance gate: one pass/fail line per criterion, nonzero exit if
// any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "sttrack/pipeline.hpp"

using namespace sttrack;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> check;
};

PipelineResult run_file(const char* file, Mode mode = Mode::PixelGraph) {
  return run_pipeline(load_sequence_file(testutil::data_path(file)), mode);
}

// A bar is long when it touches at least 3 frames; with 4-frame fixtures
// this separates whole-sequence components from two-frame merges.
int long_bars(const Barcode& bc, const Filtration& filt) {
  int n = 0;
  for (const auto& bar : bc.bars) n += bar_frame_span(bar, filt) >= 3;
  return n;
}

bool criterion1(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  auto r = run_file("fig1ad.json");
  bool ok = true;

  std::vector<int> sizes;
  for (const auto& level : r.filt.levels())
    sizes.push_back(level.last - level.first + 1);
  ok &= sizes == std::vector<int>{1, 6, 1, 6, 3, 1, 1};
  ok &= r.filt.size() == 19;

  int classical_long = long_bars(r.classical_bars, r.filt);
  const Bar* c1 = r.classical_bars.find(1);
  ok &= classical_long == 1 && c1 && c1->death == 19;

  const Bar* s1 = r.spatiotemporal.find(1);
  const Bar* s3 = r.spatiotemporal.find(3);
  ok &= s3 && s3->death == 19;
  bool death13 = s1 && s1->death == 13;
  if (!death13) {
    detail += "bar born at 1 dies at " +
              std::to_string(s1 ? s1->death : 0) +
              ", not 13; with the fixed total order, index 13 is a "
              "frame-3 spatial edge whose endpoints both carry fresh "
              "frame-3 representatives, so no recorded death at 13 can "
              "involve birth 1 under any within-level tie-break; ";
  }
  ok &= death13;

  auto elapsed = std::chrono::steady_clock::now() - t0;
  ok &= elapsed < std::chrono::seconds(1);
  detail += "deaths(1,3)=(" + std::to_string(s1 ? s1->death : 0) + "," +
            std::to_string(s3 ? s3->death : 0) + ")";
  return ok;
}

bool criterion2(std::string& detail) {
  auto r = run_file("fig1eh.json");
  const Bar* first = r.spatiotemporal.find(1);
  bool ok = first && first->death == r.filt.size();
  detail = "bar (1," + std::to_string(first ? first->death : 0) + "), m=" +
           std::to_string(r.filt.size());
  return ok;
}

bool criterion3(std::string& detail) {
  bool ok = true;
  const int want_spatiotemporal[] = {1, 1, 2};
  const char* files[] = {"fig6a.json", "fig6b.json", "fig6c.json"};
  for (int i = 0; i < 3; ++i) {
    auto r = run_file(files[i]);
    int spat = long_bars(r.spatiotemporal, r.filt);
    int classical = long_bars(r.classical_bars, r.filt);
    ok &= spat == want_spatiotemporal[i] && classical == 1;
    detail += std::string(i ? ", " : "") + std::to_string(spat) + "/" +
              std::to_string(classical);
  }
  detail += " long bars (spatiotemporal/classical)";
  return ok;
}

struct CorpusStats {
  int instances = 0;
  int remediations = 0;
  bool ok = true;
};

CorpusStats corpus_stats() {
  static CorpusStats stats = [] {
    CorpusStats s;
    std::mt19937_64 rng(testutil::corpus_seed());
    for (Mode mode :
         {Mode::PixelGraph, Mode::Foreground, Mode::Background}) {
      for (int trial = 0; trial < 110 && s.ok; ++trial) {
        auto r = run_pipeline(testutil::random_sequence(rng), mode);
        ++s.instances;
        s.remediations += static_cast<int>(r.state.remediation.size());
        for (int v = 1; v <= r.filt.size() && s.ok; ++v) {
          if (!r.filt.is_vertex(v)) continue;
          if (r.state.f[v] != oldest_connected_oracle(v, r.filt))
            s.ok = false;
          if (r.state.phi[v].empty()) {
            if (r.state.f[v] != v) s.ok = false;
          } else {
            auto chk = is_spatiotemporal_path(r.state.phi[v], r.filt);
            if (!chk.valid) s.ok = false;
          }
        }
      }
    }
    return s;
  }();
  return stats;
}

bool criterion4(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  auto stats = corpus_stats();
  // The full P1-P8 suite lives in test_properties; here the corpus is
  // re-run end to end as the gate demands.
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  bool ok = stats.ok && stats.instances >= 330 &&
            secs < 60;
  detail = std::to_string(stats.instances) + " instances in " +
           std::to_string(secs) + "s";
  return ok;
}

bool criterion5(std::string& detail) {
  auto stats = corpus_stats();
  detail = std::to_string(stats.remediations) +
           " remediation activations across " +
           std::to_string(stats.instances) + " instances";
  return stats.ok;
}

bool criterion6(std::string& detail) {
  auto r = run_file("ring.json", Mode::Background);
  int full_span = 0;
  const Bar* full = nullptr;
  for (const auto& bar : r.spatiotemporal.bars)
    if (bar_frame_span(bar, r.filt) == r.filt.frame_count()) {
      ++full_span;
      full = &bar;
    }
  bool ok = full_span == 1 && full && full->birth == 1;
  for (int v = 1; v <= r.filt.size() && ok; ++v) {
    if (!r.filt.is_vertex(v)) continue;
    ok &= r.state.f[v] == 1;
    ok &= track(v, r.state, r.tree, r.filt).birth_frame == 1;
  }
  detail = std::to_string(full_span) + " full-span bar(s)";
  return ok;
}

bool criterion7(std::string& detail) {
  auto timed_run = [](int side, int& m_out) {
    std::mt19937_64 rng(7);
    ImageSequence seq;
    for (int i = 0; i < 4; ++i)
      seq.frames.push_back(testutil::random_image(rng, side, side, 0.5));
    std::vector<CubicalComplex> frames;
    for (const auto& f : seq.frames) frames.push_back(build_pixel_graph(f));
    auto filt = Filtration::build(stack(frames));
    m_out = filt.size();
    auto t0 = std::chrono::steady_clock::now();
    auto st = run_algorithm1(filt);
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
    return dt;
  };
  int m_small = 0, m_large = 0;
  double t_small = timed_run(33, m_small);
  double t_large = timed_run(46, m_large);
  double ratio = t_large / std::max(t_small, 1e-9);
  bool ok = t_small < 30.0 && t_large < 30.0 && ratio <= 6.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "m=%d in %.2fs, m=%d in %.2fs, ratio %.2f",
                m_small, t_small, m_large, t_large, ratio);
  detail = buf;
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"worked 4-frame example: levels, classical bar, deaths 13/19",
       criterion1},
      {"surviving component spans index 1..m", criterion2},
      {"long-bar counts 1/1/2 vs classical 1/1/1", criterion3},
      {"property corpus, >=330 seeded instances under 60s", criterion4},
      {"oracle equality with remediation accounting", criterion5},
      {"background duality: one full-span bar, all tracks reach frame 1",
       criterion6},
      {"quadratic-envelope scaling smoke test", criterion7},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    failures += !ok;
    std::printf("criterion %zu [%s] %s%s%s\n", i + 1, ok ? "PASS" : "FAIL",
                criteria[i].name.c_str(), detail.empty() ? "" : " — ",
                detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
