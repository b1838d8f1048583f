#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sttrack/pipeline.hpp"

namespace {

using namespace sttrack;

struct Options {
  std::string mode = "pixel-graph";
  std::string input;
  std::string out;
  std::string svg;
  std::string vertex;
  int long_threshold = 2;
};

Mode mode_of(const std::string& name) {
  if (name == "pixel-graph") return Mode::PixelGraph;
  if (name == "foreground") return Mode::Foreground;
  if (name == "background") return Mode::Background;
  return parse_mode(name);  // short aliases pg|fg|bg
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty())
    std::cout << text;
  else
    write_file(path, text);
}

std::string bar_text(const Bar& bar, const Filtration& filt) {
  std::ostringstream line;
  line << "(" << bar.birth << "," << bar.death << ") frames "
       << filt.frame_of_vertex(bar.birth) << ".."
       << filt.frames_of(bar.death).second;
  return line.str();
}

int cmd_run(const Options& opt) {
  auto result = run_pipeline(load_sequence_file(opt.input), mode_of(opt.mode));
  emit(opt.out, barcode_json(result.spatiotemporal, result.filt));
  if (!opt.svg.empty())
    write_file(opt.svg, render_barcode_svg(result.spatiotemporal, result.filt));
  return 0;
}

int cmd_compare(const Options& opt) {
  auto result = run_pipeline(load_sequence_file(opt.input), mode_of(opt.mode));
  std::ostringstream report;
  auto section = [&](const char* title, const Barcode& bc) {
    int long_bars = 0;
    report << title << " (" << bc.bars.size() << " bars)\n";
    for (const auto& bar : bc.bars) {
      bool is_long = bar_frame_span(bar, result.filt) >= opt.long_threshold;
      long_bars += is_long;
      report << "  " << bar_text(bar, result.filt) << (is_long ? "  long" : "")
             << "\n";
    }
    report << "  long bars: " << long_bars << "\n";
  };
  section("spatiotemporal", result.spatiotemporal);
  section("classical", result.classical_bars);
  report << "differing bars:\n";
  std::size_t differ = 0;
  for (const auto& bar : result.spatiotemporal.bars) {
    const Bar* other = result.classical_bars.find(bar.birth);
    if (other && other->death == bar.death) continue;
    ++differ;
    report << "  birth " << bar.birth << ": spatiotemporal death " << bar.death
           << " vs classical death " << (other ? other->death : 0) << "\n";
  }
  if (differ == 0) report << "  (none)\n";
  emit(opt.out, report.str());
  return 0;
}

int cmd_track(const Options& opt) {
  int x = 0, y = 0, t = 0;
  char c1 = 0, c2 = 0;
  std::istringstream parse(opt.vertex);
  if (!(parse >> x >> c1 >> y >> c2 >> t) || c1 != ',' || c2 != ',')
    throw std::runtime_error("--vertex expects x,y,frame");
  Mode mode = mode_of(opt.mode);
  auto result = run_pipeline(load_sequence_file(opt.input), mode);
  int v = vertex_index_for(result.filt, mode, x, y, t);
  if (v == 0)
    throw std::runtime_error("no vertex at (" + std::to_string(x) + "," +
                             std::to_string(y) + ") in frame " +
                             std::to_string(t));
  emit(opt.out, lineage_json(track(v, result.state, result.tree, result.filt)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Track connected components of a binary image sequence through a "
      "spatiotemporal filtration"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--mode", opt.mode,
                    "pixel-graph | foreground | background")
        ->capture_default_str();
    cmd->add_option("--input", opt.input, "sequence file (JSON or PBM dir)")
        ->required();
    cmd->add_option("--out", opt.out, "output file (default stdout)");
  };

  CLI::App* run = app.add_subcommand("run", "emit the spatiotemporal barcode");
  add_common(run);
  run->add_option("--svg", opt.svg, "also render the barcode as SVG");

  CLI::App* compare =
      app.add_subcommand("compare", "spatiotemporal vs classical barcode");
  add_common(compare);
  compare->add_option("--long-threshold", opt.long_threshold,
                      "minimum frame span flagged as long")
      ->capture_default_str();

  CLI::App* track_cmd =
      app.add_subcommand("track", "lineage of one component vertex");
  add_common(track_cmd);
  track_cmd->add_option("--vertex", opt.vertex, "pixel as x,y,frame")
      ->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (run->parsed()) return cmd_run(opt);
    if (compare->parsed()) return cmd_compare(opt);
    return cmd_track(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
