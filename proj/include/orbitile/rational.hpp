#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace orbitile {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Exact rational arithmetic. Throughout the library a Rational r attached to
// an angle means the angle r*pi; the flat classification needs exact equality
// with pi, so angles are never stored as doubles before geometry starts.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}
    constexpr Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    constexpr Rational operator+(Rational o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    constexpr Rational operator-(Rational o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    constexpr Rational operator*(Rational o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    constexpr Rational operator/(Rational o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    constexpr Rational operator-() const { return Rational(-num_, den_); }

    constexpr bool operator==(Rational o) const { return num_ == o.num_ && den_ == o.den_; }
    constexpr bool operator!=(Rational o) const { return !(*this == o); }
    constexpr bool operator<(Rational o) const { return num_ * o.den_ < o.num_ * den_; }
    constexpr bool operator<=(Rational o) const { return num_ * o.den_ <= o.num_ * den_; }
    constexpr bool operator>(Rational o) const { return o < *this; }
    constexpr bool operator>=(Rational o) const { return o <= *this; }

    constexpr double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "n/d", or just "n" when the denominator is 1.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;

    constexpr void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }
};

// Numeric value of the angle r*pi.
inline double angle_value(Rational r) { return r.value() * kPi; }

// Render r*pi as "pi", "pi/2", "2pi/3", ...
inline std::string angle_str(Rational r) {
    std::string s;
    if (r.num() == 1) s = "pi";
    else s = std::to_string(r.num()) + "pi";
    if (r.den() != 1) s += "/" + std::to_string(r.den());
    return s;
}

}  // namespace orbitile
