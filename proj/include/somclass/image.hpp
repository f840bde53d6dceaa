#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace somclass {

/// 8-bit RGB raster, row-major interleaved channels (R,G,B per pixel).
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // size == 3 * width * height

    std::uint8_t red(int row, int col) const { return pixels[3 * (static_cast<std::size_t>(row) * width + col)]; }
    std::uint8_t green(int row, int col) const { return pixels[3 * (static_cast<std::size_t>(row) * width + col) + 1]; }
    std::uint8_t blue(int row, int col) const { return pixels[3 * (static_cast<std::size_t>(row) * width + col) + 2]; }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
};

/// 8-bit grayscale raster, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // size == width * height

    std::uint8_t at(int row, int col) const { return pixels[static_cast<std::size_t>(row) * width + col]; }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
};

/// Decodes a Netpbm raster from disk. Supported magics: P2/P5 (PGM) and
/// P3/P6 (PPM), maxval 255 only; '#' comments are allowed between header
/// tokens. PGM input is replicated into all three channels.
RgbImage load_image(const std::filesystem::path& path);

/// Eq-style grayscale reduction: each output pixel is floor((R+G+B)/3).
GrayImage rgb_to_gray(const RgbImage& img);

/// Replicates a gray raster into an RGB one (R=G=B). Inverse direction of
/// rgb_to_gray for already-gray content.
RgbImage replicate_gray(const GrayImage& img);

/// Writes a grayscale image as ASCII PGM (P2, maxval 255).
void write_pgm(const GrayImage& img, const std::filesystem::path& path);

}  // namespace somclass
