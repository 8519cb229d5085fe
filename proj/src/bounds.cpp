#include "mis/bounds.hpp"

#include <stdexcept>
#include <string>

#include "mis/errors.hpp"

namespace mis {

namespace {

std::string str(const BigCount& x) { return x.str(); }

void require_nonnegative(int t, int n)
{
    if (t < 0 || n < 0)
        throw DomainError("bound needs t >= 0 and n >= 0, got t=" + std::to_string(t) + " n=" + std::to_string(n));
}

} // namespace

BigCount mis_max(int n)
{
    if (n < 3) throw DomainError("mis_max needs n >= 3, got " + std::to_string(n));
    const auto k = static_cast<unsigned>(n);
    switch (n % 3) {
    case 0: return pow_int(3, k / 3);
    case 1: return 4 * pow_int(3, (k - 4) / 3);
    default: return 2 * pow_int(3, (k - 2) / 3);
    }
}

BigCount mis_triangle_free_max(int n)
{
    if (n < 4) throw DomainError("mis_triangle_free_max needs n >= 4, got " + std::to_string(n));
    const auto k = static_cast<unsigned>(n);
    if (n % 2 == 0) return pow_int(2, k / 2);
    return 5 * pow_int(2, (k - 5) / 2);
}

BoundEvaluation<BigCount> g_bound_traced(int t, int n)
{
    require_nonnegative(t, n);
    BoundEvaluation<BigCount> out;
    out.t_used = t;
    if (n < 3 * t) {
        out.t_used = n / 3;
        out.clamped = true;
    }
    const auto tu = static_cast<unsigned>(out.t_used);
    const auto m = static_cast<unsigned>(n - 3 * out.t_used);
    if (m % 2 == 0)
        out.value = pow_int(3, tu) * pow_int(2, m / 2);
    else if (tu > 0)
        out.value = pow_int(3, tu - 1) * pow_int(2, (m + 3) / 2);
    else if (n >= 5)
        out.value = 5 * pow_int(2, static_cast<unsigned>(n - 5) / 2);
    else
        throw DomainError("g_0(" + std::to_string(n) + ") is undefined: odd n below 5 with t = 0");
    return out;
}

BigCount g_bound(int t, int n)
{
    return g_bound_traced(t, n).value;
}

Rational c_polynomial(const Rational& x)
{
    const Rational x2 = x * x;
    return x2 * x2 * x2 - 2 * x2 - 2 * x - 1;
}

RealInterval root_c(const Rational& width)
{
    if (width <= 0) throw std::invalid_argument("root_c needs a positive width");

    // p(1) < 0 and p'(x) = 6x^5 - 4x - 2 > 0 on [1, inf), so p has exactly one
    // root above 1 and it is the largest real root.
    Rational lo(7, 5), hi(3, 2);
    if (!(c_polynomial(Rational(1)) < 0 && c_polynomial(lo) < 0 && c_polynomial(hi) > 0))
        throw std::logic_error("root_c: initial bracket lost its sign change");

    while (hi - lo > width) {
        const Rational mid = (lo + hi) / 2;
        const Rational p = c_polynomial(mid);
        if (p < 0)
            lo = mid;
        else if (p > 0)
            hi = mid;
        else
            return RealInterval::point(mid);
    }
    return {lo, hi};
}

BoundEvaluation<RealInterval> h_bound_traced(int t, int n, const Rational& precision)
{
    require_nonnegative(t, n);
    if (precision <= 0) throw std::invalid_argument("h_bound needs a positive precision");

    BoundEvaluation<RealInterval> out;
    out.t_used = t;
    if (n < 2 * t) {
        out.t_used = n / 2;
        out.clamped = true;
    }
    const Rational scale(pow_int(2, static_cast<unsigned>(out.t_used)));
    const auto exponent = static_cast<unsigned>(n - 2 * out.t_used);
    if (exponent == 0) {
        out.value = RealInterval::point(scale);
        return out;
    }

    Rational width = precision;
    for (;;) {
        out.value = scale * root_c(width).pow(exponent);
        const Rational got = out.value.width();
        if (got <= precision) return out;
        // enclosure width is close to linear in the width of c
        width = width * precision / (2 * got);
    }
}

RealInterval h_bound(int t, int n, const Rational& precision)
{
    return h_bound_traced(t, n, precision).value;
}

Report check_fact1(int t_max, int span)
{
    if (t_max < 1 || span < 4)
        throw DomainError("check_fact1 needs t_max >= 1 and span >= 4");

    struct Relation {
        int drop;    // k in g_t(n - k)
        int lhs;     // lhs * g_t(n - k) <= rhs * g_t(n)
        int rhs;
        bool exact;  // equality expected when unclamped
        const char* label;
    };
    static constexpr Relation relations[] = {
        {3, 8, 3, false, "g_t(n-3)/g_t(n) <= 3/8"},
        {2, 2, 1, true, "g_t(n-2)/g_t(n) = 1/2"},
        {4, 4, 1, true, "g_t(n-4)/g_t(n) = 1/4"},
    };

    Report report;
    report.check = "fact1";
    for (const Relation& rel : relations) {
        long checked = 0, equalities = 0, clamped = 0, skipped = 0;
        for (int t = 1; t <= t_max; ++t) {
            for (int n = 3 * t; n <= 3 * t + span; ++n) {
                const std::string where = "t=" + std::to_string(t) + " n=" + std::to_string(n);
                const int reduced = n - rel.drop;
                if (reduced < 0) {
                    ++skipped;
                    report.notes.push_back(std::string(rel.label) + " " + where + ": skipped, n-" +
                                           std::to_string(rel.drop) + " < 0");
                    continue;
                }
                BoundEvaluation<BigCount> small;
                try {
                    small = g_bound_traced(t, reduced);
                } catch (const DomainError&) {
                    ++skipped;
                    report.notes.push_back(std::string(rel.label) + " " + where + ": skipped, g_" + std::to_string(t) +
                                           "(" + std::to_string(reduced) + ") clamps outside the formula's domain");
                    continue;
                }
                const BigCount full = g_bound(t, n);
                const BigCount left = rel.lhs * small.value;
                const BigCount right = rel.rhs * full;
                ++checked;
                const std::string values = std::to_string(rel.lhs) + "*g(" + std::to_string(reduced) + ")=" +
                                           str(left) + " vs " + std::to_string(rel.rhs) + "*g(" + std::to_string(n) +
                                           ")=" + str(right);
                if (left > right) {
                    report.counterexamples.push_back(std::string(rel.label) + " " + where + ": " + values +
                                                     (small.clamped ? " [clamped]" : ""));
                    continue;
                }
                if (small.clamped) {
                    ++clamped;
                    report.evidence.push_back(std::string(rel.label) + " " + where + " [clamped to t'=" +
                                              std::to_string(small.t_used) + "]: " + values);
                    continue;
                }
                if (left == right) ++equalities;
                if (rel.exact && left != right)
                    report.counterexamples.push_back(std::string(rel.label) + " " + where +
                                                     ": equality fails unclamped, " + values);
            }
        }
        report.evidence.push_back(std::string(rel.label) + ": " + std::to_string(checked) + " instances checked, " +
                                  std::to_string(checked - clamped) + " unclamped (" + std::to_string(equalities) +
                                  " with equality), " + std::to_string(clamped) + " clamped held to <=, " +
                                  std::to_string(skipped) + " skipped");
    }
    return report;
}

Report check_fact2(const Rational& precision)
{
    const RealInterval c = root_c(precision);
    const RealInterval one = RealInterval::point(1);

    Report report;
    report.check = "fact2";
    report.evidence.push_back("c in " + c.to_string(15) + ", width " + to_decimal_ceil(c.width(), 15));

    auto certify = [&](const std::string& label, const RealInterval& lhs, const RealInterval& rhs) {
        const std::string detail = label + ": " + lhs.to_string() + " vs " + rhs.to_string();
        if (certainly_less(lhs, rhs))
            report.evidence.push_back(detail + ": certified");
        else if (certainly_less(rhs, lhs))
            report.counterexamples.push_back(detail + ": violated");
        else
            report.inconclusive.push_back(detail + ": unresolved, tighten precision");
    };

    certify("(1) 2 + c < 2c^2", 2 + c, Rational(2) * c.pow(2));
    for (int d = 4; d <= 64; ++d)
        certify("(2) d=" + std::to_string(d) + ": d + 1 < c^(d+1)", RealInterval::point(d + 1),
                c.pow(static_cast<unsigned>(d + 1)));
    // For d >= 4, (d+2)/(d+1) <= 6/5, so c >= 6/5 carries d+1 <= c^{d+1} from
    // d to d+1; together with d = 4 this covers every d >= 4.
    certify("(2) tail: 6/5 < c", RealInterval::point(Rational(6, 5)), c);
    report.notes.push_back("(2) holds for all d >= 4: base case d=4 and c >= 6/5 >= (d+2)/(d+1) give the induction step");
    certify("(3) 3c + 1 < c^5", Rational(3) * c + one, c.pow(5));
    certify("(4) 2c + 1 < c^4", Rational(2) * c + one, c.pow(4));
    certify("c^2 < 2", c.pow(2), RealInterval::point(2));
    certify("cycle factors: 5 < c^5", RealInterval::point(5), c.pow(5));

    const RealInterval identity = c.pow(6) - Rational(2) * c.pow(2) - Rational(2) * c - one;
    const std::string detail = "c^6 - 2c^2 - 2c - 1 in " + identity.to_string(15) + ", width " +
                               to_decimal_ceil(identity.width(), 15);
    if (identity.contains(0))
        report.evidence.push_back(detail + ": contains 0");
    else
        report.counterexamples.push_back(detail + ": does not contain 0");
    return report;
}

} // namespace mis
