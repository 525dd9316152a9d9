#pragma once

#include <cstdint>
#include <vector>

#include "talbot/qudit/types.hpp"

namespace talbot::qudit {

/// Basis-state probabilities |amplitude_d|². Rejects states whose norm
/// deviates from 1 by more than 1e−9.
std::vector<double> measure_probabilities(const QuditVector& state);

/// Draws n detection events with a seeded 64-bit Mersenne Twister and returns
/// per-basis-state counts. The uniform deviate is the top 53 bits of each draw,
/// so the counts are reproducible across platforms for a fixed seed.
std::vector<std::uint64_t> sample(const QuditVector& state, std::uint64_t n, std::uint64_t seed);

}  // namespace talbot::qudit
