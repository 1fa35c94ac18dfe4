#include "ricciforge/io.hpp"

#include "ricciforge/error.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

namespace ricciforge::io {

namespace {

// Reads PGM header tokens, tracking the line for error messages.
class HeaderReader {
 public:
  explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

  std::string_view token() {
    skip_space_and_comments();
    const std::size_t start = pos_;
    while (pos_ < bytes_.size() && !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(line_, "unexpected end of header");
    return bytes_.substr(start, pos_ - start);
  }

  unsigned long number(const char* what) {
    const std::string_view t = token();
    unsigned long x = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
      throw ParseError(line_, std::string("bad ") + what + " '" + std::string(t) + "'");
    }
    return x;
  }

  // Consumes the single whitespace byte that ends a P5 header.
  std::size_t payload_start() {
    if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      throw ParseError(line_, "missing separator before binary payload");
    }
    return pos_ + 1;
  }

  std::size_t line() const { return line_; }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char ch = bytes_[pos_];
      if (ch == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
      } else if (ch == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view bytes_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

}  // namespace

ImageGrid image_grid(std::size_t width, std::size_t height, std::vector<unsigned> gray, unsigned maxval,
                     std::optional<double> height_scale) {
  if (width == 0 || height == 0) throw Error(ErrorCode::InvalidArgument, "image has zero dimension");
  if (gray.size() != width * height) throw Error(ErrorCode::InvalidArgument, "gray buffer size mismatch");
  if (maxval == 0 || maxval > 65535) throw Error(ErrorCode::InvalidArgument, "maxval must lie in [1, 65535]");
  const double s = height_scale ? *height_scale : 1.0 / static_cast<double>(maxval);
  if (!(s >= 0.0) || !std::isfinite(s)) throw Error(ErrorCode::InvalidArgument, "height scale must be non-negative");

  auto g = [&](std::size_t x, std::size_t y) { return static_cast<double>(gray[y * width + x]); };
  auto stick = [s](double a, double b) { return std::sqrt(1.0 + s * s * (a - b) * (a - b)); };

  ComplexBuilder b;
  auto vid = [width](std::size_t x, std::size_t y) { return y * (width + 1) + x; };
  for (std::size_t y = 0; y <= height; ++y) {
    for (std::size_t x = 0; x <= width; ++x) b.add_vertex({double(x), double(y), 0.0}, 0.0);
  }
  // Horizontal grid edges separate pixel rows y-1 and y; vertical ones columns x-1 and x.
  for (std::size_t y = 0; y <= height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const double w = (y == 0 || y == height) ? 1.0 : stick(g(x, y - 1), g(x, y));
      b.add_edge(vid(x, y), vid(x + 1, y), w);
    }
  }
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x <= width; ++x) {
      const double w = (x == 0 || x == width) ? 1.0 : stick(g(x - 1, y), g(x, y));
      b.add_edge(vid(x, y), vid(x, y + 1), w);
    }
  }
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const std::array<std::size_t, 4> cyc{vid(x, y), vid(x + 1, y), vid(x + 1, y + 1), vid(x, y + 1)};
      b.add_face_by_vertices(cyc, g(x, y) + 1.0);
    }
  }
  ImageGrid out;
  out.complex = b.build();
  out.width = width;
  out.height = height;
  out.maxval = maxval;
  out.height_scale = s;
  out.gray = std::move(gray);
  return out;
}

ImageGrid parse_pgm(std::string_view bytes, std::optional<double> height_scale) {
  HeaderReader r(bytes);
  const std::string_view magic = r.token();
  if (magic != "P2" && magic != "P5") {
    throw ParseError(r.line(), "unsupported magic '" + std::string(magic) + "'");
  }
  const unsigned long width = r.number("width");
  const unsigned long height = r.number("height");
  const unsigned long maxval = r.number("maxval");
  if (width == 0 || height == 0) throw ParseError(r.line(), "zero-dimension image");
  if (maxval == 0 || maxval > 65535) throw ParseError(r.line(), "maxval must lie in [1, 65535]");

  const std::size_t n = width * height;
  std::vector<unsigned> gray(n);
  if (magic == "P2") {
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned long v = r.number("pixel value");
      if (v > maxval) throw ParseError(r.line(), "pixel value above maxval");
      gray[i] = static_cast<unsigned>(v);
    }
  } else {
    const std::size_t start = r.payload_start();
    const std::size_t bpp = maxval < 256 ? 1 : 2;
    if (bytes.size() < start + n * bpp) {
      throw ParseError(0, "binary payload has " + std::to_string(bytes.size() - std::min(bytes.size(), start)) +
                              " bytes, expected " + std::to_string(n * bpp));
    }
    for (std::size_t i = 0; i < n; ++i) {
      unsigned v = static_cast<unsigned char>(bytes[start + i * bpp]);
      if (bpp == 2) v = (v << 8) | static_cast<unsigned char>(bytes[start + i * bpp + 1]);
      if (v > maxval) throw ParseError(0, "pixel value above maxval");
      gray[i] = v;
    }
  }
  return image_grid(width, height, std::move(gray), static_cast<unsigned>(maxval), height_scale);
}

ImageGrid load_image_grid(const std::filesystem::path& path, std::optional<double> height_scale) {
  return parse_pgm(read_text(path), height_scale);
}

}  // namespace ricciforge::io
