#ifndef YCHG_IMAGE_HPP
#define YCHG_IMAGE_HPP

#include <cassert>
#include <cstdint>
#include <vector>

namespace ychg {

/// Bit-per-pixel binary raster, row-major, 1 = foreground.
///
/// Rows are packed MSB-first and padded to a byte boundary, which is exactly
/// the payload layout of a binary PBM (P4) file. Padding bits are kept zero
/// so whole-buffer operations (popcount, equality) need no masking.
///
/// Immutable use after construction is thread-safe; nothing here locks.
class BinaryImage {
public:
    BinaryImage() = default;

    BinaryImage(int width, int height)
        : width_(width), height_(height), stride_((width + 7) / 8),
          bits_(static_cast<std::size_t>(stride_) * static_cast<std::size_t>(height), 0) {
        assert(width >= 0 && height >= 0);
    }

    int width() const { return width_; }
    int height() const { return height_; }

    /// Bytes per row (rows are byte-padded like P4).
    int row_stride() const { return stride_; }

    bool get(int x, int y) const {
        assert(x >= 0 && x < width_ && y >= 0 && y < height_);
        const std::uint8_t byte = bits_[row_index(y) + static_cast<std::size_t>(x >> 3)];
        return (byte >> (7 - (x & 7))) & 1u;
    }

    void set(int x, int y, bool value) {
        assert(x >= 0 && x < width_ && y >= 0 && y < height_);
        std::uint8_t& byte = bits_[row_index(y) + static_cast<std::size_t>(x >> 3)];
        const std::uint8_t mask = static_cast<std::uint8_t>(0x80u >> (x & 7));
        if (value)
            byte |= mask;
        else
            byte &= static_cast<std::uint8_t>(~mask);
    }

    const std::uint8_t* row(int y) const {
        assert(y >= 0 && y < height_);
        return bits_.data() + row_index(y);
    }

    std::uint8_t* row(int y) {
        assert(y >= 0 && y < height_);
        return bits_.data() + row_index(y);
    }

    const std::vector<std::uint8_t>& bytes() const { return bits_; }

    bool operator==(const BinaryImage& other) const = default;

private:
    std::size_t row_index(int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(stride_);
    }

    int width_ = 0;
    int height_ = 0;
    int stride_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// Exact number of foreground pixels.
std::int64_t foreground_count(const BinaryImage& image);

} // namespace ychg

#endif
