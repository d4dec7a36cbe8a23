#pragma once

#include <string>
#include <vector>

#include "bimonn/binary_set.hpp"

namespace bimonn {

class RealGrid;

/// Binary PBM (P4). Set pixels are written black (1 bits).
void write_pbm(const BinarySet& image, const std::string& path);
BinarySet read_pbm(const std::string& path);

std::vector<unsigned char> encode_pbm(const BinarySet& image);
BinarySet decode_pbm(const unsigned char* data, std::size_t size);

/// 8-bit PGM (P5); values clamped to [0, 1] then scaled to 0..255.
void write_pgm(const RealGrid& image, const std::string& path);

}  // namespace bimonn
