#include "ychg/image.hpp"

#include <bit>

namespace ychg {

std::int64_t foreground_count(const BinaryImage& image) {
    // Padding bits are zero by invariant, so counting whole bytes is exact.
    std::int64_t total = 0;
    for (std::uint8_t byte : image.bytes()) total += std::popcount(byte);
    return total;
}

} // namespace ychg
