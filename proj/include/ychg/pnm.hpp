#ifndef YCHG_PNM_HPP
#define YCHG_PNM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ychg/image.hpp"

namespace ychg {

/// Parse a PNM file (P1/P2/P4/P5; maxval must be 255 for the grayscale
/// formats). PBM 1-bits are foreground; grayscale samples strictly below
/// `threshold` are foreground (dark = region of interest).
///
/// Throws ParseError naming the byte offset on malformed input and
/// ValidationError for unsupported variants (P3/P6, maxval != 255).
BinaryImage load_pnm(std::span<const std::uint8_t> bytes, int threshold = 128);

/// Serialize as binary PBM (P4), 1 = foreground. load_pnm(save_pnm(img))
/// reproduces `img` bit-exactly.
std::vector<std::uint8_t> save_pnm(const BinaryImage& image);

} // namespace ychg

#endif
