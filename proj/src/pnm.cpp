#include "ychg/pnm.hpp"

#include <cstring>
#include <limits>
#include <string>

#include "ychg/errors.hpp"

namespace ychg {

namespace {

// Cursor over the raw file bytes; every error it raises carries the offset.
class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::size_t offset() const { return pos_; }
    bool eof() const { return pos_ >= bytes_.size(); }

    std::uint8_t peek() const { return bytes_[pos_]; }

    std::uint8_t take() {
        if (eof()) throw ParseError("pnm: unexpected end of file", pos_);
        return bytes_[pos_++];
    }

    // Whitespace and '#' comments, in any amount. Legal between header tokens
    // and between ASCII raster samples.
    void skip_space_and_comments() {
        while (!eof()) {
            const std::uint8_t c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') ++pos_;
            } else if (is_space(c)) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    int read_uint(const char* what) {
        skip_space_and_comments();
        if (eof() || !is_digit(peek()))
            throw ParseError(std::string("pnm: expected ") + what, pos_);
        long long value = 0;
        while (!eof() && is_digit(peek())) {
            value = value * 10 + (take() - '0');
            if (value > std::numeric_limits<int>::max())
                throw ParseError(std::string("pnm: ") + what + " out of range", pos_);
        }
        return static_cast<int>(value);
    }

    // Binary rasters start after exactly one whitespace character.
    void expect_single_space() {
        if (eof() || !is_space(peek()))
            throw ParseError("pnm: expected single whitespace before raster", pos_);
        ++pos_;
    }

    std::span<const std::uint8_t> take_bytes(std::size_t n, const char* what) {
        if (bytes_.size() - pos_ < n)
            throw ParseError(std::string("pnm: truncated ") + what, pos_);
        auto out = bytes_.subspan(pos_, n);
        pos_ += n;
        return out;
    }

    static bool is_space(std::uint8_t c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
    }
    static bool is_digit(std::uint8_t c) { return c >= '0' && c <= '9'; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

void read_p1(Reader& r, BinaryImage& img) {
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x) {
            r.skip_space_and_comments();
            if (r.eof()) throw ParseError("pnm: truncated P1 raster", r.offset());
            const std::uint8_t c = r.take();
            if (c != '0' && c != '1')
                throw ParseError("pnm: P1 raster sample must be 0 or 1", r.offset() - 1);
            if (c == '1') img.set(x, y, true);
        }
}

void read_p2(Reader& r, BinaryImage& img, int threshold) {
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x) {
            const std::size_t at = r.offset();
            const int sample = r.read_uint("P2 raster sample");
            if (sample > 255) throw ParseError("pnm: P2 sample exceeds maxval", at);
            if (sample < threshold) img.set(x, y, true);
        }
}

void read_p4(Reader& r, BinaryImage& img) {
    const int stride = img.row_stride();
    if (stride <= 0) return;
    for (int y = 0; y < img.height(); ++y) {
        auto row = r.take_bytes(static_cast<std::size_t>(stride), "P4 raster");
        std::memcpy(img.row(y), row.data(), static_cast<std::size_t>(stride));
    }
    // P4 padding bits are unspecified; force them to background.
    const int tail_bits = img.width() % 8;
    if (tail_bits != 0 && img.row_stride() > 0) {
        const std::uint8_t mask = static_cast<std::uint8_t>(0xFFu << (8 - tail_bits));
        for (int y = 0; y < img.height(); ++y) img.row(y)[stride - 1] &= mask;
    }
}

void read_p5(Reader& r, BinaryImage& img, int threshold) {
    const std::size_t n = static_cast<std::size_t>(img.width()) * img.height();
    auto samples = r.take_bytes(n, "P5 raster");
    std::size_t i = 0;
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x, ++i)
            if (samples[i] < threshold) img.set(x, y, true);
}

} // namespace

BinaryImage load_pnm(std::span<const std::uint8_t> bytes, int threshold) {
    if (threshold < 0 || threshold > 255)
        throw ValidationError("pnm: threshold must lie in [0, 255], got " +
                              std::to_string(threshold));

    Reader r(bytes);
    if (r.eof() || r.take() != 'P') throw ParseError("pnm: missing magic number", 0);
    if (r.eof()) throw ParseError("pnm: missing magic number", 1);
    const char kind = static_cast<char>(r.take());
    if (kind == '3' || kind == '6' || kind == '7')
        throw ValidationError(std::string("pnm: unsupported format P") + kind +
                              " (only P1/P2/P4/P5)");
    if (kind != '1' && kind != '2' && kind != '4' && kind != '5')
        throw ParseError("pnm: malformed magic number", 1);

    const int width = r.read_uint("width");
    const int height = r.read_uint("height");

    if (kind == '2' || kind == '5') {
        const int maxval = r.read_uint("maxval");
        if (maxval != 255)
            throw ValidationError("pnm: unsupported maxval " + std::to_string(maxval) +
                                  " (must be 255)");
    }

    BinaryImage img(width, height);
    switch (kind) {
    case '1': read_p1(r, img); break;
    case '2': read_p2(r, img, threshold); break;
    case '4':
        r.expect_single_space();
        read_p4(r, img);
        break;
    case '5':
        r.expect_single_space();
        read_p5(r, img, threshold);
        break;
    }
    return img;
}

std::vector<std::uint8_t> save_pnm(const BinaryImage& image) {
    const std::string header =
        "P4\n" + std::to_string(image.width()) + " " + std::to_string(image.height()) + "\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    // Internal storage already has P4's layout: packed MSB-first, byte-padded
    // rows, padding bits zero.
    out.insert(out.end(), image.bytes().begin(), image.bytes().end());
    return out;
}

} // namespace ychg
