#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace sttrack {

// A finite 2D binary image. The domain is the rectangle
// [0,width) x [0,height); x grows rightward, y grows downward, so (0,0)
// is the top-left character of the textual representation.
class BinaryImage {
 public:
  BinaryImage(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  bool in_domain(int x, int y) const {
    return x >= 0 && x < width_ && y >= 0 && y < height_;
  }
  bool foreground(int x, int y) const {
    return bits_[static_cast<std::size_t>(y) * width_ + x] != 0;
  }
  void set(int x, int y, bool fg = true);

  // Foreground points in row-major (y, then x) order.
  std::vector<std::pair<int, int>> foreground_points() const;
  std::size_t foreground_count() const;

  bool operator==(const BinaryImage&) const = default;

 private:
  int width_;
  int height_;
  std::vector<uint8_t> bits_;
};

// Background as a new image: foreground of the result is D \ B. The
// complement is taken inside the domain only, no exterior padding.
BinaryImage complement(const BinaryImage& image);

// A sequence of frames over one shared domain, length >= 1.
struct ImageSequence {
  std::vector<BinaryImage> frames;
  int width() const { return frames.front().width(); }
  int height() const { return frames.front().height(); }
};

enum class SequenceFormat { Json, PbmSet };

// Parses a sequence from a stream. Json expects
//   {"width":W,"height":H,"frames":[["10","01"],...]}
// with one string per row, characters '0'/'1', '1' = foreground.
// PbmSet expects concatenated P1/P4 PBM images, black = foreground.
// Throws std::runtime_error on malformed input, mismatched frame
// dimensions, or zero frames.
ImageSequence load_sequence(std::istream& in, SequenceFormat format);

ImageSequence parse_json_sequence(const std::string& text);

// Loads a directory of frame_<k>.pbm files (k = 1..l), or a single JSON
// file when the path is not a directory.
ImageSequence load_sequence_file(const std::string& path);

}  // namespace sttrack
