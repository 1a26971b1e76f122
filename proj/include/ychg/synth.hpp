#ifndef YCHG_SYNTH_HPP
#define YCHG_SYNTH_HPP

#include <cstdint>

#include "ychg/image.hpp"

namespace ychg {

/// SplitMix64 (Steele, Lea & Flajolet; public-domain reference by Vigna).
/// Used for every pseudo-random pixel this library generates, so that
/// identical seeds give bit-identical images on any platform. The algorithm
/// has published reference outputs; see the unit tests for the frozen vector.
struct Splitmix64 {
    std::uint64_t state;

    explicit Splitmix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

enum class Pattern {
    full,    // all foreground
    empty,   // all background
    frame,   // 1-pixel border
    hbands,  // k full-width horizontal bands
    checker, // cell x cell checkerboard, (0,0) cell foreground
    random,  // i.i.d. pixels, P(foreground) = density
};

/// Recipe for a deterministic synthetic image. Identical specs produce
/// bit-identical images.
struct SynthSpec {
    Pattern pattern = Pattern::empty;
    int width = 0;
    int height = 0;
    int bands = 0;           // hbands: 1 <= bands <= height/2
    int cell = 0;            // checker: cell >= 1
    double density = 0.0;    // random: 0.0 <= density <= 1.0
    std::uint64_t seed = 0;  // random only

    static SynthSpec full(int w, int h) { return {Pattern::full, w, h}; }
    static SynthSpec empty(int w, int h) { return {Pattern::empty, w, h}; }
    static SynthSpec frame(int w, int h) { return {Pattern::frame, w, h}; }
    static SynthSpec hbands(int w, int h, int k) { return {Pattern::hbands, w, h, k}; }
    static SynthSpec checker(int w, int h, int cell) { return {Pattern::checker, w, h, 0, cell}; }
    static SynthSpec random(int w, int h, double density, std::uint64_t seed) {
        return {Pattern::random, w, h, 0, 0, density, seed};
    }
};

/// Throws ValidationError if the spec violates its pattern's constraints.
void validate(const SynthSpec& spec);

/// Generate the image described by `spec`.
///
/// hbands(k) lays out k bands of equal maximal height from the top, with
/// 1-pixel gaps between them and any leftover rows left background at the
/// bottom. random(density) draws one SplitMix64 value per pixel in row-major
/// order; a pixel is foreground iff draw < density * 2^64.
BinaryImage synth(const SynthSpec& spec);

} // namespace ychg

#endif
