#pragma once

#include <string>
#include <vector>

#include "sttrack/image.hpp"
#include "sttrack/tracking.hpp"

namespace sttrack {

// How a frame becomes a cubical complex:
//  - PixelGraph: a vertex per foreground pixel, an edge per 4-adjacency.
//  - Foreground: a closed unit square per foreground pixel (with faces).
//  - Background: the complement's pixel complex on the corner lattice.
enum class Mode { PixelGraph, Foreground, Background };

Mode parse_mode(const std::string& name);  // "pg" | "fg" | "bg"

struct PipelineResult {
  Filtration filt;
  TrackState state;
  Barcode spatiotemporal;  // consolidated
  Barcode classical_bars;
  TrackingTree tree;
};

PipelineResult run_pipeline(const ImageSequence& seq, Mode mode);

// Filtration index of the vertex produced by pixel (x, y) of frame
// `frame` (1-based); 0 when that vertex does not exist. In foreground
// mode the vertex queried is the pixel's top-left corner point.
int vertex_index_for(const Filtration& filt, Mode mode, int x, int y,
                     int frame);

// Number of frames a bar touches: max(frames of death cell) - frame of
// birth vertex + 1.
int bar_frame_span(const Bar& bar, const Filtration& filt);

// Deterministic serializations (2-space indent, keys as documented in
// the README).
std::string barcode_json(const Barcode& bc, const Filtration& filt);
std::string lineage_json(const Lineage& ln);

// Barcode diagram: one horizontal bar per consolidated bar, ticks at the
// start of every filtration level.
std::string render_barcode_svg(const Barcode& bc, const Filtration& filt);

}  // namespace sttrack
