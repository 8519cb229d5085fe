#pragma once

#include <string>

#include "mis/numeric.hpp"

namespace mis {

/// Closed interval [lo, hi] with exact rational endpoints enclosing a real
/// value. Arithmetic is outward-exact: the result encloses every value the
/// operands can represent.
class RealInterval {
public:
    RealInterval() = default;
    /// Throws std::invalid_argument if lo > hi.
    RealInterval(Rational lo, Rational hi);

    static RealInterval point(const Rational& x) { return {x, x}; }

    const Rational& lo() const noexcept { return lo_; }
    const Rational& hi() const noexcept { return hi_; }
    Rational width() const { return hi_ - lo_; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool is_point() const { return lo_ == hi_; }

    RealInterval pow(unsigned exponent) const;

    friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator*(const RealInterval& a, const RealInterval& b);

    friend RealInterval operator+(const RealInterval& a, const Rational& b) { return a + point(b); }
    friend RealInterval operator+(const Rational& a, const RealInterval& b) { return point(a) + b; }
    friend RealInterval operator-(const RealInterval& a, const Rational& b) { return a - point(b); }
    friend RealInterval operator*(const Rational& a, const RealInterval& b) { return point(a) * b; }

    friend bool operator==(const RealInterval&, const RealInterval&) = default;

    /// "[lo, hi]" with lo rounded down and hi rounded up at `digits` places.
    std::string to_string(unsigned digits = 12) const;

private:
    Rational lo_{0};
    Rational hi_{0};
};

/// Every value of a is strictly below every value of b.
inline bool certainly_less(const RealInterval& a, const RealInterval& b)
{
    return a.hi() < b.lo();
}

} // namespace mis
