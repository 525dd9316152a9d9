#pragma once

#include <filesystem>
#include <string>

#include "talbot/wave/carpet.hpp"

namespace talbot::wave {

/// Grayscale in [0, 255] from the max-normalized intensity, x horizontal, z vertical.
std::string encode_pgm(const CarpetImage& image);

/// Header "z,x,intensity,mask"; mask is 1 on rows where a phase mask acts.
std::string encode_carpet_csv(const CarpetImage& image);

/// Writes bytes to path, throwing std::runtime_error if the file cannot be written.
void write_file(const std::filesystem::path& path, const std::string& bytes);

}  // namespace talbot::wave
