#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mis/interval.hpp"
#include "mis/numeric.hpp"
#include "mis/report.hpp"

namespace mis {

/// Which extremal statement a sweep checks.
///   mm   all graphs against mis_max(n)
///   ht   triangle-free graphs against mis_triangle_free_max(n)
///   main all graphs, t = triangle matching number, against g_bound(t, n)
///   kp2  triangle-free graphs, t = induced matching number, against h_bound(t, n)
enum class Theorem { mm, ht, main, kp2 };

std::optional<Theorem> parse_theorem(std::string_view name);
std::string_view to_string(Theorem t);

/// Largest n for which sweep_labeled enumerates all labelled graphs.
inline constexpr int kLabeledSweepCap = 7;

using BoundValue = std::variant<BigCount, RealInterval>;

std::string to_string(const BoundValue& b);

/// Maximum of mis(G) over the scanned graphs whose parameter is at most `t`
/// (for mm and ht: over all qualifying graphs, and `t` is empty).
struct ParameterMax {
    std::optional<int> t;
    /// Empty when no scanned graph has parameter <= t.
    std::optional<BigCount> max_mis;
    BoundValue bound;
    std::string witness;
    /// max_mis equals an integer bound exactly; always false for interval bounds.
    bool attained = false;
    std::uint64_t graphs = 0;
};

struct Finding {
    std::string graph6;
    BigCount mis;
    std::string bound;
    std::optional<int> parameter;
};

struct SweepReport {
    Theorem theorem = Theorem::mm;
    int n = 0;
    std::string source;
    bool exhaustive = false;
    std::vector<ParameterMax> per_parameter;
    std::vector<Finding> violations;
    std::vector<Finding> inconclusive;
    std::uint64_t graphs_scanned = 0;
    /// Graphs the theorem applies to (all, or the triangle-free ones).
    std::uint64_t graphs_qualified = 0;
    std::chrono::duration<double> elapsed{};

    /// "fail", "inconclusive", "pass-vacuous" (nothing scanned) or "pass".
    std::string verdict() const;
    int exit_code() const;
};

struct SweepOptions {
    /// Worker threads; 0 uses the hardware concurrency.
    unsigned threads = 0;
    /// Initial width of h-bound enclosures. An unresolved comparison is
    /// retried with the precision squared, `tightenings` times.
    Rational h_precision{1, 100000000};
    int tightenings = 2;
};

/// Checks every labelled graph on n <= kLabeledSweepCap vertices.
/// Throws CapacityError above the cap and DomainError where the theorem's
/// closed form is undefined (mm: n < 3, ht: n < 4, main: n in {1, 3}).
SweepReport sweep_labeled(int n, Theorem theorem, const SweepOptions& options = {});

/// Same checks over one graph6 string per line; blank lines and lines
/// starting with '#' are ignored. Throws CorpusError on a parse failure or a
/// graph whose order is not n.
SweepReport sweep_corpus(const std::filesystem::path& path, Theorem theorem, int n,
                         const SweepOptions& options = {});

/// Every in-domain g_extremal(t, n), moon_moser(n) and hujter_tuza(n) with
/// n <= n_max attains its formula; witness admissibility is checked against
/// the structure parameters. Needs n_max >= 5.
Report verify_constructions(int n_max);

} // namespace mis
