#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace auxpose {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct Vec2i {
    int x = 0;
    int y = 0;
};

// Row-major grayscale raster, intensities in [0,1].
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<double> values;

    GrayImage() = default;
    GrayImage(int w, int h, double fill = 0.0)
        : width(w), height(h), values(static_cast<size_t>(w) * h, fill) {}

    double& at(int x, int y) { return values[static_cast<size_t>(y) * width + x]; }
    double at(int x, int y) const { return values[static_cast<size_t>(y) * width + x]; }
    bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
    size_t size() const { return values.size(); }
};

// Row-major binary mask; dimensions always match the source image.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> bits;

    BinaryMask() = default;
    BinaryMask(int w, int h, bool fill = false)
        : width(w), height(h), bits(static_cast<size_t>(w) * h, fill ? 1 : 0) {}

    uint8_t& at(int x, int y) { return bits[static_cast<size_t>(y) * width + x]; }
    uint8_t at(int x, int y) const { return bits[static_cast<size_t>(y) * width + x]; }
    size_t count() const {
        size_t n = 0;
        for (uint8_t b : bits) n += b ? 1 : 0;
        return n;
    }
};

// Binary PGM (P5, 8- or 16-bit). Intensities are normalized to [0,1] on read
// regardless of source bit depth; writes quantize to 8 bits.
GrayImage read_pgm(const std::string& path);
void write_pgm(const GrayImage& img, const std::string& path);

// Binary PBM (P4): 1 = foreground. PBM stores 1 for black; we map foreground
// to black bits so the files preview sensibly.
BinaryMask read_pbm(const std::string& path);
void write_pbm(const BinaryMask& mask, const std::string& path);

}  // namespace auxpose
