#include "bimonn/pnm_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "bimonn/real_grid.hpp"

namespace bimonn {

namespace {

void write_file(const std::string& path, const std::vector<unsigned char>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<unsigned char> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  return bytes;
}

}  // namespace

std::vector<unsigned char> encode_pbm(const BinarySet& image) {
  char header[64];
  const int n =
      std::snprintf(header, sizeof header, "P4\n%d %d\n", image.width(),
                    image.height());
  std::vector<unsigned char> bytes(header, header + n);
  const int row_bytes = (image.width() + 7) / 8;
  for (int y = 0; y < image.height(); ++y) {
    for (int b = 0; b < row_bytes; ++b) {
      unsigned char packed = 0;
      for (int i = 0; i < 8; ++i) {
        const int x = b * 8 + i;
        if (x < image.width() && image.get(x, y)) {
          packed |= static_cast<unsigned char>(0x80u >> i);  // MSB-first
        }
      }
      bytes.push_back(packed);
    }
  }
  return bytes;
}

BinarySet decode_pbm(const unsigned char* data, std::size_t size) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < size) {
      if (data[pos] == '#') {  // comment to end of line
        while (pos < size && data[pos] != '\n') ++pos;
      } else if (std::isspace(data[pos])) {
        ++pos;
      } else {
        break;
      }
    }
  };
  auto read_int = [&]() -> int {
    skip_space();
    int v = 0;
    bool any = false;
    while (pos < size && std::isdigit(data[pos])) {
      v = v * 10 + (data[pos] - '0');
      ++pos;
      any = true;
    }
    if (!any) throw std::runtime_error("PBM: malformed header");
    return v;
  };

  if (size < 2 || data[0] != 'P' || data[1] != '4') {
    throw std::runtime_error("PBM: not a P4 file");
  }
  pos = 2;
  const int width = read_int();
  const int height = read_int();
  if (width <= 0 || height <= 0) throw std::runtime_error("PBM: bad size");
  ++pos;  // single whitespace byte after height
  const std::size_t row_bytes = static_cast<std::size_t>((width + 7) / 8);
  if (pos + row_bytes * height > size) {
    throw std::runtime_error("PBM: truncated pixel data");
  }
  BinarySet out(width, height);
  for (int y = 0; y < height; ++y) {
    const unsigned char* r = data + pos + static_cast<std::size_t>(y) * row_bytes;
    for (int x = 0; x < width; ++x) {
      if (r[x >> 3] & (0x80u >> (x & 7))) out.set(x, y, true);
    }
  }
  return out;
}

void write_pbm(const BinarySet& image, const std::string& path) {
  write_file(path, encode_pbm(image));
}

BinarySet read_pbm(const std::string& path) {
  const auto bytes = read_file(path);
  return decode_pbm(bytes.data(), bytes.size());
}

void write_pgm(const RealGrid& image, const std::string& path) {
  char header[64];
  const int n = std::snprintf(header, sizeof header, "P5\n%d %d\n255\n",
                              image.width(), image.height());
  std::vector<unsigned char> bytes(header, header + n);
  bytes.reserve(bytes.size() + image.size());
  for (int y = 0; y < image.height(); ++y) {
    const double* r = image.row(y);
    for (int x = 0; x < image.width(); ++x) {
      const double v = std::clamp(r[x], 0.0, 1.0);
      bytes.push_back(static_cast<unsigned char>(v * 255.0 + 0.5));
    }
  }
  write_file(path, bytes);
}

}  // namespace bimonn
