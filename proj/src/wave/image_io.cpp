#include "talbot/wave/image_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "talbot/core/numeric_format.hpp"

namespace talbot::wave {

std::string encode_pgm(const CarpetImage& image) {
    std::string out = "P5\n" + std::to_string(image.x_steps) + " " + std::to_string(image.z_steps) + "\n255\n";
    out.reserve(out.size() + image.intensity.size());
    for (const double v : image.intensity) {
        const double level = std::round(std::clamp(v, 0.0, 1.0) * 255.0);
        out.push_back(static_cast<char>(static_cast<unsigned char>(level)));
    }
    return out;
}

std::string encode_carpet_csv(const CarpetImage& image) {
    std::string out = "z,x,intensity,mask\n";
    for (std::size_t i = 0; i < image.z_steps; ++i) {
        const std::string z = format_double(image.z[i]);
        const char* mask = image.mask_row[i] ? ",1\n" : ",0\n";
        for (std::size_t j = 0; j < image.x_steps; ++j) {
            out += z;
            out += ',';
            out += format_double(image.x[j]);
            out += ',';
            out += format_double(image.at(i, j));
            out += mask;
        }
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

}  // namespace talbot::wave
