#include "somclass/image.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <string>

#include "somclass/errors.hpp"

namespace somclass {

namespace {

// 64M pixels; anything larger is rejected rather than risking an
// allocation the rest of the pipeline could never use.
constexpr long long kMaxPixels = 1LL << 26;

// Reads the next whitespace-separated header token, skipping '#' comments
// that run to end of line.
std::string next_token(std::istream& in) {
    std::string token;
    int ch = in.get();
    while (ch != EOF) {
        if (ch == '#') {
            while (ch != EOF && ch != '\n') ch = in.get();
        } else if (std::isspace(ch)) {
            ch = in.get();
        } else {
            break;
        }
    }
    while (ch != EOF && !std::isspace(ch) && ch != '#') {
        token.push_back(static_cast<char>(ch));
        ch = in.get();
    }
    if (ch == '#') in.unget();
    return token;
}

long long parse_header_int(std::istream& in, const std::filesystem::path& path,
                           const char* what) {
    const std::string token = next_token(in);
    if (token.empty()) {
        throw Error(Errc::malformed_image,
                    path.string() + ": missing " + what + " in header");
    }
    try {
        std::size_t used = 0;
        const long long value = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw Error(Errc::malformed_image,
                    path.string() + ": bad " + what + " '" + token + "'");
    }
}

std::uint8_t parse_ascii_sample(std::istream& in, const std::filesystem::path& path) {
    const long long value = parse_header_int(in, path, "sample");
    if (value < 0 || value > 255) {
        throw Error(Errc::malformed_image,
                    path.string() + ": sample " + std::to_string(value) +
                        " outside [0, 255]");
    }
    return static_cast<std::uint8_t>(value);
}

}  // namespace

RgbImage load_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::missing_file, "cannot open " + path.string());
    }

    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (in.gcount() != 2 || magic[0] != 'P') {
        throw Error(Errc::unsupported_format,
                    path.string() + ": not a Netpbm file");
    }
    const char kind = magic[1];
    if (kind != '2' && kind != '3' && kind != '5' && kind != '6') {
        throw Error(Errc::unsupported_format,
                    path.string() + ": unsupported magic P" + std::string(1, kind));
    }
    const bool color = (kind == '3' || kind == '6');
    const bool binary = (kind == '5' || kind == '6');

    const long long width = parse_header_int(in, path, "width");
    const long long height = parse_header_int(in, path, "height");
    if (width <= 0 || height <= 0 || width * height > kMaxPixels) {
        throw Error(Errc::malformed_image,
                    path.string() + ": bad dimensions " + std::to_string(width) +
                        "x" + std::to_string(height));
    }
    const long long maxval = parse_header_int(in, path, "maxval");
    if (maxval != 255) {
        throw Error(Errc::malformed_image,
                    path.string() + ": maxval " + std::to_string(maxval) +
                        " (only 255 supported)");
    }

    const std::size_t pixels = static_cast<std::size_t>(width * height);
    const std::size_t samples = pixels * (color ? 3 : 1);

    RgbImage img;
    img.width = static_cast<int>(width);
    img.height = static_cast<int>(height);
    img.pixels.resize(pixels * 3);

    if (binary) {
        // Exactly one whitespace byte separates maxval from the payload.
        std::vector<std::uint8_t> raw(samples);
        in.read(reinterpret_cast<char*>(raw.data()),
                static_cast<std::streamsize>(samples));
        if (static_cast<std::size_t>(in.gcount()) != samples) {
            throw Error(Errc::malformed_image,
                        path.string() + ": truncated pixel payload");
        }
        if (color) {
            img.pixels = std::move(raw);
        } else {
            for (std::size_t i = 0; i < pixels; ++i) {
                img.pixels[3 * i] = img.pixels[3 * i + 1] = img.pixels[3 * i + 2] = raw[i];
            }
        }
    } else {
        for (std::size_t i = 0; i < pixels; ++i) {
            if (color) {
                img.pixels[3 * i] = parse_ascii_sample(in, path);
                img.pixels[3 * i + 1] = parse_ascii_sample(in, path);
                img.pixels[3 * i + 2] = parse_ascii_sample(in, path);
            } else {
                const std::uint8_t v = parse_ascii_sample(in, path);
                img.pixels[3 * i] = img.pixels[3 * i + 1] = img.pixels[3 * i + 2] = v;
            }
        }
    }
    return img;
}

GrayImage rgb_to_gray(const RgbImage& img) {
    GrayImage gray;
    gray.width = img.width;
    gray.height = img.height;
    gray.pixels.resize(img.pixel_count());
    for (std::size_t i = 0; i < gray.pixels.size(); ++i) {
        const unsigned sum = static_cast<unsigned>(img.pixels[3 * i]) +
                             img.pixels[3 * i + 1] + img.pixels[3 * i + 2];
        gray.pixels[i] = static_cast<std::uint8_t>(sum / 3);
    }
    return gray;
}

RgbImage replicate_gray(const GrayImage& img) {
    RgbImage rgb;
    rgb.width = img.width;
    rgb.height = img.height;
    rgb.pixels.resize(img.pixel_count() * 3);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        rgb.pixels[3 * i] = rgb.pixels[3 * i + 1] = rgb.pixels[3 * i + 2] = img.pixels[i];
    }
    return rgb;
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(Errc::io_error, "cannot write " + path.string());
    }
    out << "P2\n" << img.width << " " << img.height << "\n255\n";
    for (int r = 0; r < img.height; ++r) {
        for (int c = 0; c < img.width; ++c) {
            out << static_cast<int>(img.at(r, c)) << (c + 1 == img.width ? "" : " ");
        }
        out << "\n";
    }
    if (!out) {
        throw Error(Errc::io_error, "write failed for " + path.string());
    }
}

}  // namespace somclass
