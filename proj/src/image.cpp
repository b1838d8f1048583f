#include "sttrack/image.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sttrack {

BinaryImage::BinaryImage(int width, int height)
    : width_(width), height_(height) {
  if (width <= 0 || height <= 0)
    throw std::runtime_error("image dimensions must be positive");
  bits_.assign(static_cast<std::size_t>(width) * height, 0);
}

void BinaryImage::set(int x, int y, bool fg) {
  if (!in_domain(x, y)) throw std::runtime_error("point outside domain");
  bits_[static_cast<std::size_t>(y) * width_ + x] = fg ? 1 : 0;
}

std::vector<std::pair<int, int>> BinaryImage::foreground_points() const {
  std::vector<std::pair<int, int>> pts;
  for (int y = 0; y < height_; ++y)
    for (int x = 0; x < width_; ++x)
      if (foreground(x, y)) pts.emplace_back(x, y);
  return pts;
}

std::size_t BinaryImage::foreground_count() const {
  std::size_t n = 0;
  for (auto b : bits_) n += b;
  return n;
}

BinaryImage complement(const BinaryImage& image) {
  BinaryImage out(image.width(), image.height());
  for (int y = 0; y < image.height(); ++y)
    for (int x = 0; x < image.width(); ++x)
      out.set(x, y, !image.foreground(x, y));
  return out;
}

namespace {

ImageSequence from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("width") || !doc.contains("height") ||
      !doc.contains("frames"))
    throw std::runtime_error("sequence JSON must carry width, height, frames");
  int width = doc.at("width").get<int>();
  int height = doc.at("height").get<int>();
  const auto& frames = doc.at("frames");
  if (!frames.is_array() || frames.empty())
    throw std::runtime_error("sequence must contain at least one frame");

  ImageSequence seq;
  for (const auto& frame : frames) {
    if (!frame.is_array() || static_cast<int>(frame.size()) != height)
      throw std::runtime_error("frame row count does not match height");
    BinaryImage img(width, height);
    for (int y = 0; y < height; ++y) {
      const auto row = frame.at(y).get<std::string>();
      if (static_cast<int>(row.size()) != width)
        throw std::runtime_error("frame row length does not match width");
      for (int x = 0; x < width; ++x) {
        char c = row[static_cast<std::size_t>(x)];
        if (c != '0' && c != '1')
          throw std::runtime_error("frame rows may contain only '0'/'1'");
        if (c == '1') img.set(x, y);
      }
    }
    seq.frames.push_back(std::move(img));
  }
  return seq;
}

int read_pbm_int(std::istream& in) {
  // Skips whitespace and '#' comments.
  for (;;) {
    int c = in.peek();
    if (c == '#') {
      std::string line;
      std::getline(in, line);
    } else if (std::isspace(c)) {
      in.get();
    } else {
      break;
    }
  }
  int value;
  if (!(in >> value)) throw std::runtime_error("malformed PBM header");
  return value;
}

bool read_pbm_frame(std::istream& in, std::vector<BinaryImage>& out) {
  in >> std::ws;
  if (in.peek() == EOF) return false;
  char p, kind;
  in.get(p);
  in.get(kind);
  if (p != 'P' || (kind != '1' && kind != '4'))
    throw std::runtime_error("expected P1 or P4 PBM data");
  int width = read_pbm_int(in);
  int height = read_pbm_int(in);
  BinaryImage img(width, height);
  if (kind == '1') {
    for (int y = 0; y < height; ++y)
      for (int x = 0; x < width; ++x) {
        char c;
        do {
          if (!in.get(c)) throw std::runtime_error("truncated P1 data");
        } while (std::isspace(static_cast<unsigned char>(c)));
        if (c != '0' && c != '1')
          throw std::runtime_error("P1 pixels must be '0'/'1'");
        if (c == '1') img.set(x, y);  // black = foreground
      }
  } else {
    char sep;
    if (!in.get(sep) || !std::isspace(static_cast<unsigned char>(sep)))
      throw std::runtime_error("malformed P4 header");
    int row_bytes = (width + 7) / 8;
    std::vector<char> row(static_cast<std::size_t>(row_bytes));
    for (int y = 0; y < height; ++y) {
      if (!in.read(row.data(), row_bytes))
        throw std::runtime_error("truncated P4 data");
      for (int x = 0; x < width; ++x) {
        unsigned byte = static_cast<unsigned char>(row[x / 8]);
        if (byte & (0x80u >> (x % 8))) img.set(x, y);
      }
    }
  }
  out.push_back(std::move(img));
  return true;
}

void check_uniform(const ImageSequence& seq) {
  if (seq.frames.empty())
    throw std::runtime_error("sequence must contain at least one frame");
  for (const auto& f : seq.frames)
    if (f.width() != seq.width() || f.height() != seq.height())
      throw std::runtime_error("all frames must share one domain");
}

}  // namespace

ImageSequence parse_json_sequence(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("invalid JSON: ") + e.what());
  }
  ImageSequence seq = from_json(doc);
  check_uniform(seq);
  return seq;
}

ImageSequence load_sequence(std::istream& in, SequenceFormat format) {
  if (format == SequenceFormat::Json) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_sequence(buf.str());
  }
  ImageSequence seq;
  while (read_pbm_frame(in, seq.frames)) {
  }
  check_uniform(seq);
  return seq;
}

ImageSequence load_sequence_file(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::is_directory(path)) {
    ImageSequence seq;
    for (int k = 1;; ++k) {
      fs::path frame = fs::path(path) / ("frame_" + std::to_string(k) + ".pbm");
      if (!fs::exists(frame)) break;
      std::ifstream in(frame, std::ios::binary);
      if (!in) throw std::runtime_error("cannot open " + frame.string());
      if (!read_pbm_frame(in, seq.frames))
        throw std::runtime_error("empty PBM file " + frame.string());
    }
    check_uniform(seq);
    return seq;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_sequence(in, SequenceFormat::Json);
}

}  // namespace sttrack
