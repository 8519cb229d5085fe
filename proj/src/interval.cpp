#include "mis/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace mis {

RealInterval::RealInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (lo_ > hi_) throw std::invalid_argument("interval lower endpoint exceeds upper endpoint");
}

RealInterval RealInterval::pow(unsigned exponent) const
{
    if (lo_ >= 0) return {mis::pow(lo_, exponent), mis::pow(hi_, exponent)};
    if (hi_ <= 0) {
        Rational a = mis::pow(hi_, exponent), b = mis::pow(lo_, exponent);
        if (exponent % 2 == 0) return {std::move(a), std::move(b)};
        return {std::move(b), std::move(a)};
    }
    // straddles zero
    Rational a = mis::pow(lo_, exponent), b = mis::pow(hi_, exponent);
    if (exponent % 2 == 0) return {Rational(0), std::max(a, b)};
    return {std::move(a), std::move(b)};
}

RealInterval operator+(const RealInterval& a, const RealInterval& b)
{
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

RealInterval operator-(const RealInterval& a, const RealInterval& b)
{
    return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

RealInterval operator*(const RealInterval& a, const RealInterval& b)
{
    const Rational p[] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    const auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
    return {*mn, *mx};
}

std::string RealInterval::to_string(unsigned digits) const
{
    return "[" + to_decimal_floor(lo_, digits) + ", " + to_decimal_ceil(hi_, digits) + "]";
}

} // namespace mis
