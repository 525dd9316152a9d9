#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "talbot/wave/fidelity.hpp"

using namespace talbot;
using namespace talbot::wave;

namespace {

const std::vector<std::int64_t> kOrders{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};

}  // namespace

TEST(Fidelity, DefaultSpec) {
    const GratingSpec s = fidelity_default_spec(20.0);
    EXPECT_DOUBLE_EQ(s.slit_ratio, 0.5);
    EXPECT_DOUBLE_EQ(s.wavelength, 0.01);
    ASSERT_TRUE(s.envelope.has_value());
    EXPECT_DOUBLE_EQ(s.envelope->sigma, 20.0);
    EXPECT_EQ(s.max_order, 10);
}

TEST(Fidelity, SampleCountHonoursQuarterWavelength) {
    EXPECT_EQ(fidelity_sample_count(fidelity_default_spec(5.0)), 1u << 16);
    const std::size_t n = fidelity_sample_count(fidelity_default_spec(100.0));
    EXPECT_LE(1600.0 / static_cast<double>(n), 0.01 / 4.0);
    EXPECT_GT(1600.0 / static_cast<double>(n / 2), 0.01 / 4.0);
}

TEST(Fidelity, RejectsNarrowGridOrMissingEnvelope) {
    FidelityOptions narrow;
    narrow.extent_in_sigmas = 6.0;
    EXPECT_THROW(fidelity_sample_count(fidelity_default_spec(5.0), narrow), std::invalid_argument);
    GratingSpec bare = fidelity_default_spec(5.0);
    bare.envelope.reset();
    EXPECT_THROW(fidelity_sample_count(bare), std::invalid_argument);
}

TEST(Fidelity, DecaysMonotonicallyForSmallGrating) {
    const auto sweep = fidelity_sweep(fidelity_default_spec(5.0), kOrders);
    ASSERT_EQ(sweep.points.size(), kOrders.size());
    for (std::size_t i = 0; i < sweep.points.size(); ++i) {
        EXPECT_EQ(sweep.points[i].m, kOrders[i]);
        EXPECT_GE(sweep.points[i].fidelity, 0.0);
        EXPECT_LE(sweep.points[i].fidelity, 1.0 + 1e-12);
        if (i > 0) {
            EXPECT_LE(sweep.points[i].fidelity, sweep.points[i - 1].fidelity + 1e-9);
        }
    }
    EXPECT_LT(sweep.points.back().fidelity, sweep.points.front().fidelity);
    EXPECT_FALSE(sweep.aliasing_warning);
}

TEST(Fidelity, WiderIlluminationRevivesBetter) {
    const auto small = fidelity_sweep(fidelity_default_spec(5.0), {10});
    const auto large = fidelity_sweep(fidelity_default_spec(20.0), {10});
    EXPECT_GT(large.points[0].fidelity, small.points[0].fidelity);
}

TEST(Fidelity, PeriodicControlIsPerfect) {
    const auto sweep = periodic_fidelity(fidelity_default_spec(1.0), kOrders);
    for (const auto& p : sweep.points) {
        EXPECT_NEAR(p.fidelity, 1.0, 1e-12);
        EXPECT_TRUE(std::isinf(p.sigma));
    }
}

TEST(Fidelity, CsvLayout) {
    const auto a = fidelity_sweep(fidelity_default_spec(5.0), {1, 2});
    const auto b = periodic_fidelity(fidelity_default_spec(1.0), {1, 2});
    std::istringstream csv(encode_fidelity_csv({a, b}));
    std::string line;
    int data = 0;
    bool header = false;
    while (std::getline(csv, line)) {
        if (line.starts_with("#")) {
            continue;
        }
        if (!header) {
            EXPECT_EQ(line, "m,sigma_over_ell,n_slits,fidelity");
            header = true;
            continue;
        }
        ++data;
    }
    EXPECT_TRUE(header);
    EXPECT_EQ(data, 4);
}
