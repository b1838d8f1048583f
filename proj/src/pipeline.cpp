#include "sttrack/pipeline.hpp"

#include <stdexcept>

#include <json.hpp>

namespace sttrack {

Mode parse_mode(const std::string& name) {
  if (name == "pg") return Mode::PixelGraph;
  if (name == "fg") return Mode::Foreground;
  if (name == "bg") return Mode::Background;
  throw std::runtime_error("unknown mode '" + name + "' (expected pg|fg|bg)");
}

PipelineResult run_pipeline(const ImageSequence& seq, Mode mode) {
  std::vector<CubicalComplex> per_frame;
  per_frame.reserve(seq.frames.size());
  for (const auto& frame : seq.frames) {
    switch (mode) {
      case Mode::PixelGraph:
        per_frame.push_back(build_pixel_graph(frame));
        break;
      case Mode::Foreground:
        per_frame.push_back(build_foreground_complex(frame));
        break;
      case Mode::Background:
        per_frame.push_back(build_background_complex(frame));
        break;
    }
  }
  PipelineResult out{Filtration::build(stack(per_frame)), {}, {}, {}, {}};
  out.state = run_algorithm1(out.filt);
  out.spatiotemporal = consolidate(out.state);
  out.classical_bars = classical_0barcode(out.filt);
  out.tree = build_tracking_tree(out.state, out.filt);
  return out;
}

int vertex_index_for(const Filtration& filt, Mode, int x, int y, int frame) {
  // In every mode the pixel (x, y) contributes the even lattice point
  // (2x, 2y); for the foreground complex that point is the pixel
  // square's top-left corner.
  return filt.index_of(Cube::stacked(2 * x, 2 * y, 2 * frame));
}

int bar_frame_span(const Bar& bar, const Filtration& filt) {
  int birth_frame = filt.frame_of_vertex(bar.birth);
  int death_frame = filt.frames_of(bar.death).second;
  return death_frame - birth_frame + 1;
}

std::string barcode_json(const Barcode& bc, const Filtration& filt) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& bar : bc.bars) {
    arr.push_back({{"birth", bar.birth},
                   {"death", bar.death},
                   {"rep_vertex", bar.rep},
                   {"birth_frame", filt.frame_of_vertex(bar.birth)},
                   {"death_frame", filt.frames_of(bar.death).second}});
  }
  return arr.dump(2) + "\n";
}

namespace {

// Doubled coordinates halve to integers on the pixel grid and to
// half-integers on the corner lattice.
nlohmann::ordered_json halved(int doubled) {
  if (doubled % 2 == 0) return doubled / 2;
  return doubled / 2.0;
}

}  // namespace

std::string lineage_json(const Lineage& ln) {
  nlohmann::ordered_json walk = nlohmann::ordered_json::array();
  for (const auto& [frame, x2, y2] : ln.walk)
    walk.push_back({frame, halved(x2), halved(y2)});
  nlohmann::ordered_json obj = {{"vertex", ln.vertex},
                                {"birth_vertex", ln.birth_vertex},
                                {"birth_frame", ln.birth_frame},
                                {"walk", walk},
                                {"ancestors", ln.ancestors}};
  return obj.dump(2) + "\n";
}

}  // namespace sttrack
