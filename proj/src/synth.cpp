#include "ychg/synth.hpp"

#include <cstring>
#include <string>

#include "ychg/errors.hpp"

namespace ychg {

void validate(const SynthSpec& spec) {
    if (spec.width < 0 || spec.height < 0)
        throw ValidationError("synth: negative dimensions " + std::to_string(spec.width) + "x" +
                              std::to_string(spec.height));
    switch (spec.pattern) {
    case Pattern::hbands:
        if (spec.bands < 1 || spec.bands > spec.height / 2)
            throw ValidationError("synth: hbands(" + std::to_string(spec.bands) +
                                  ") needs 1 <= k <= height/2 = " +
                                  std::to_string(spec.height / 2));
        break;
    case Pattern::checker:
        if (spec.cell < 1)
            throw ValidationError("synth: checker cell must be >= 1, got " +
                                  std::to_string(spec.cell));
        break;
    case Pattern::random:
        if (!(spec.density >= 0.0 && spec.density <= 1.0))
            throw ValidationError("synth: random density must lie in [0, 1], got " +
                                  std::to_string(spec.density));
        break;
    default:
        break;
    }
}

namespace {

BinaryImage make_full(int w, int h) {
    BinaryImage img(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) img.set(x, y, true);
    return img;
}

BinaryImage make_frame(int w, int h) {
    BinaryImage img(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (x == 0 || y == 0 || x == w - 1 || y == h - 1) img.set(x, y, true);
    return img;
}

// k bands of equal maximal height laid out from the top with 1-pixel gaps;
// leftover rows stay background at the bottom.
BinaryImage make_hbands(int w, int h, int k) {
    BinaryImage img(w, h);
    const int band_height = (h - (k - 1)) / k;
    for (int band = 0; band < k; ++band) {
        const int y0 = band * (band_height + 1);
        for (int y = y0; y < y0 + band_height; ++y)
            for (int x = 0; x < w; ++x) img.set(x, y, true);
    }
    return img;
}

BinaryImage make_checker(int w, int h, int cell) {
    BinaryImage img(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (((x / cell) + (y / cell)) % 2 == 0) img.set(x, y, true);
    return img;
}

BinaryImage make_random(int w, int h, double density, std::uint64_t seed) {
    BinaryImage img(w, h);
    if (density <= 0.0) return img;
    const double scaled = density * 0x1p64;
    const bool all = scaled >= 0x1p64;
    const std::uint64_t threshold = all ? 0 : static_cast<std::uint64_t>(scaled);
    Splitmix64 rng(seed);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const std::uint64_t draw = rng.next();
            if (all || draw < threshold) img.set(x, y, true);
        }
    return img;
}

} // namespace

BinaryImage synth(const SynthSpec& spec) {
    validate(spec);
    const int w = spec.width;
    const int h = spec.height;
    switch (spec.pattern) {
    case Pattern::full: return make_full(w, h);
    case Pattern::empty: return BinaryImage(w, h);
    case Pattern::frame: return make_frame(w, h);
    case Pattern::hbands: return make_hbands(w, h, spec.bands);
    case Pattern::checker: return make_checker(w, h, spec.cell);
    case Pattern::random: return make_random(w, h, spec.density, spec.seed);
    }
    throw ValidationError("synth: unknown pattern");
}

} // namespace ychg
