#include "talbot/wave/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>
#include <vector>

namespace talbot::wave {

namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

FftPlan::FftPlan(std::size_t n) : n_(n), forward_plan_(nullptr), inverse_plan_(nullptr) {
    if (n == 0) {
        throw std::invalid_argument("FftPlan: length must be positive");
    }
    // ESTIMATE keeps the chosen algorithm independent of timing, so results are reproducible.
    std::vector<Complex> scratch(n);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    std::lock_guard lock(planner_mutex());
    const int len = static_cast<int>(n);
    forward_plan_ = fftw_plan_dft_1d(len, as_fftw(scratch.data()), as_fftw(scratch.data()), FFTW_FORWARD, flags);
    inverse_plan_ = fftw_plan_dft_1d(len, as_fftw(scratch.data()), as_fftw(scratch.data()), FFTW_BACKWARD, flags);
    if (forward_plan_ == nullptr || inverse_plan_ == nullptr) {
        throw std::runtime_error("FftPlan: FFTW planning failed");
    }
}

FftPlan::~FftPlan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
    fftw_destroy_plan(static_cast<fftw_plan>(inverse_plan_));
}

void FftPlan::forward(std::span<Complex> data) const {
    if (data.size() != n_) {
        throw std::invalid_argument("FftPlan::forward: length mismatch");
    }
    fftw_execute_dft(static_cast<fftw_plan>(forward_plan_), as_fftw(data.data()), as_fftw(data.data()));
}

void FftPlan::inverse(std::span<Complex> data) const {
    if (data.size() != n_) {
        throw std::invalid_argument("FftPlan::inverse: length mismatch");
    }
    fftw_execute_dft(static_cast<fftw_plan>(inverse_plan_), as_fftw(data.data()), as_fftw(data.data()));
}

}  // namespace talbot::wave
