#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace talbot {

/// Reduced fraction num/den with den > 0. Construction always reduces by the gcd.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_negative() const { return num_ < 0; }

    Rational operator+(const Rational& other) const;
    Rational operator-(const Rational& other) const;
    Rational operator*(const Rational& other) const;
    bool operator==(const Rational& other) const = default;
    std::strong_ordering operator<=>(const Rational& other) const;

    std::string to_string() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Nonnegative representative of a mod m (m > 0).
std::int64_t positive_mod(std::int64_t a, std::int64_t m);

/// (a * b) mod m without overflow, result in [0, m).
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);

}  // namespace talbot
