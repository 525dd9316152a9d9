#pragma once

#include <cstddef>
#include <span>

#include "talbot/core/types.hpp"

namespace talbot::wave {

/// 1-D complex DFT of fixed length. Planning is serialized internally; execute
/// is safe to call concurrently on distinct buffers. Transforms are unnormalized.
class FftPlan {
public:
    explicit FftPlan(std::size_t n);
    ~FftPlan();
    FftPlan(const FftPlan&) = delete;
    FftPlan& operator=(const FftPlan&) = delete;

    std::size_t size() const { return n_; }

    /// X_k = Σ_n x_n e^{−2πi kn/N}, in place.
    void forward(std::span<Complex> data) const;
    /// x_n = Σ_k X_k e^{+2πi kn/N}, in place (no 1/N).
    void inverse(std::span<Complex> data) const;

private:
    std::size_t n_;
    void* forward_plan_;
    void* inverse_plan_;
};

/// Signed frequency index of DFT bin k: k for k < N/2, k − N otherwise.
inline long long signed_frequency(std::size_t k, std::size_t n) {
    const auto kk = static_cast<long long>(k);
    return k < n / 2 ? kk : kk - static_cast<long long>(n);
}

}  // namespace talbot::wave
