#include "talbot/core/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace talbot {

namespace {
__extension__ using Wide = __int128;
}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::operator+(const Rational& other) const {
    const std::int64_t l = std::lcm(den_, other.den_);
    return Rational(num_ * (l / den_) + other.num_ * (l / other.den_), l);
}

Rational Rational::operator*(const Rational& other) const {
    const std::int64_t g1 = std::gcd(num_, other.den_);
    const std::int64_t g2 = std::gcd(other.num_, den_);
    return Rational((num_ / g1) * (other.num_ / g2), (den_ / g2) * (other.den_ / g1));
}

Rational Rational::operator-(const Rational& other) const { return *this + other * Rational(-1); }

std::strong_ordering Rational::operator<=>(const Rational& other) const {
    const Wide lhs = static_cast<Wide>(num_) * other.den_;
    const Wide rhs = static_cast<Wide>(other.num_) * den_;
    return lhs < rhs ? std::strong_ordering::less : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Rational::to_string() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t positive_mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    const Wide p = static_cast<Wide>(positive_mod(a, m)) * positive_mod(b, m);
    return static_cast<std::int64_t>(p % m);
}

}  // namespace talbot
