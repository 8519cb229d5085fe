#pragma once

#include "mis/interval.hpp"
#include "mis/numeric.hpp"
#include "mis/report.hpp"

namespace mis {

/// Maximum number of maximal independent sets over all n-vertex graphs:
/// 3^{n/3}, 4*3^{(n-4)/3} or 2*3^{(n-2)/3} by n mod 3. Needs n >= 3.
BigCount mis_max(int n);

/// Same maximum over triangle-free graphs: 2^{n/2} for even n,
/// 5*2^{(n-5)/2} for odd n. Needs n >= 4.
BigCount mis_triangle_free_max(int n);

/// A bound evaluation together with the parameter actually used. When the
/// vertex count is too small for the requested t, t is lowered to the
/// largest admissible value and `clamped` is set.
template <class Value>
struct BoundEvaluation {
    Value value;
    int t_used = 0;
    bool clamped = false;
};

/// Maximum number of maximal independent sets over n-vertex graphs without an
/// induced triangle matching of size t+1. With m = n - 3t:
/// 3^t * 2^{m/2} (m even), 3^{t-1} * 2^{(m+3)/2} (m odd, t > 0),
/// 5 * 2^{(n-5)/2} (m odd, t = 0). For n < 3t, t is clamped to floor(n/3).
/// Throws DomainError for t = 0 with n in {1, 3}.
BoundEvaluation<BigCount> g_bound_traced(int t, int n);
BigCount g_bound(int t, int n);

/// Largest real root c = 1.4075897... of x^6 - 2x^2 - 2x - 1, enclosed by
/// exact bisection in an interval of width <= `width` whose endpoints satisfy
/// p(lo) < 0 < p(hi).
RealInterval root_c(const Rational& width);

/// p(x) = x^6 - 2x^2 - 2x - 1 evaluated exactly.
Rational c_polynomial(const Rational& x);

/// Enclosure of 2^t * c^{n-2t} of width <= `precision`. For n < 2t, t is
/// clamped to floor(n/2).
BoundEvaluation<RealInterval> h_bound_traced(int t, int n, const Rational& precision);
RealInterval h_bound(int t, int n, const Rational& precision);

/// Exact check of g_t(n-3)/g_t(n) <= 3/8, g_t(n-2)/g_t(n) = 1/2 and
/// g_t(n-4)/g_t(n) = 1/4 for 1 <= t <= t_max, 3t <= n <= 3t + span.
/// Equalities are required only where neither side is clamped; clamped
/// instances are held to <=. Instances with n - k < 0 or outside the
/// formula's domain are skipped and listed in the notes.
Report check_fact1(int t_max, int span);

/// Interval-certified checks on c at the given bisection width:
/// 2 + c <= 2c^2, d + 1 <= c^{d+1} (d = 4..64 plus an inductive tail),
/// 3c + 1 <= c^5, 2c + 1 <= c^4, c^2 < 2, 5 <= c^5, and that the enclosure of
/// c^6 - 2c^2 - 2c - 1 contains 0. Unresolved comparisons are reported as
/// inconclusive.
Report check_fact2(const Rational& precision);

} // namespace mis
