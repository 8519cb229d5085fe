#include "mis/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace mis {

namespace {

BigCount pow10(unsigned k)
{
    return boost::multiprecision::pow(BigCount(10), k);
}

BigCount floor_div(const BigCount& num, const BigCount& den)
{
    // den > 0
    BigCount q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

std::string render(BigCount scaled, unsigned digits)
{
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string body = scaled.str();
    if (digits > 0) {
        if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
        body.insert(body.size() - digits, ".");
    }
    return negative ? "-" + body : body;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto fail = [&]() -> Rational { throw std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
    if (text.empty()) return fail();

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const Rational num = parse_rational(text.substr(0, slash));
        const Rational den = parse_rational(text.substr(slash + 1));
        if (den == 0) return fail();
        return num / den;
    }

    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';

    BigCount mantissa = 0;
    long scale = 0;
    bool any_digit = false;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i, any_digit = true)
        mantissa = mantissa * 10 + (text[i] - '0');
    if (i < text.size() && text[i] == '.') {
        for (++i; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i, any_digit = true) {
            mantissa = mantissa * 10 + (text[i] - '0');
            --scale;
        }
    }
    if (!any_digit) return fail();
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_negative = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) exp_negative = text[i++] == '-';
        long e = 0;
        bool exp_digit = false;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i, exp_digit = true) {
            e = e * 10 + (text[i] - '0');
            if (e > 100000) return fail();
        }
        if (!exp_digit) return fail();
        scale += exp_negative ? -e : e;
    }
    if (i != text.size()) return fail();

    Rational value(mantissa);
    if (scale > 0) value *= pow10(static_cast<unsigned>(scale));
    if (scale < 0) value /= pow10(static_cast<unsigned>(-scale));
    return negative ? Rational(-value) : value;
}

Rational decimal_unit(unsigned digits)
{
    return Rational(BigCount(1), pow10(digits));
}

std::string to_decimal_floor(const Rational& x, unsigned digits)
{
    const Rational scaled = x * pow10(digits);
    return render(floor_div(numerator(scaled), denominator(scaled)), digits);
}

std::string to_decimal_ceil(const Rational& x, unsigned digits)
{
    const Rational scaled = -x * pow10(digits);
    return render(-floor_div(numerator(scaled), denominator(scaled)), digits);
}

Rational pow(const Rational& base, unsigned exponent)
{
    return Rational(boost::multiprecision::pow(numerator(base), exponent),
                    boost::multiprecision::pow(denominator(base), exponent));
}

BigCount pow_int(unsigned base, unsigned exponent)
{
    return boost::multiprecision::pow(BigCount(base), exponent);
}

} // namespace mis
