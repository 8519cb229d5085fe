#include "mis/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <functional>
#include <thread>
#include <utility>

#include "mis/bounds.hpp"
#include "mis/constructions.hpp"
#include "mis/engine.hpp"
#include "mis/errors.hpp"
#include "mis/graph6.hpp"
#include "mis/structure.hpp"

namespace mis {

namespace {

constexpr std::array<std::pair<std::string_view, Theorem>, 4> kTheorems{{
    {"mm", Theorem::mm},
    {"ht", Theorem::ht},
    {"main", Theorem::main},
    {"kp2", Theorem::kp2},
}};

struct Bucket {
    BigCount max = 0;
    std::uint64_t witness_index = 0;
    std::string witness;
    std::uint64_t graphs = 0;

    template <class Encode>
    void offer(const BigCount& mis, std::uint64_t index, Encode&& encode)
    {
        const bool better = graphs == 0 || mis > max || (mis == max && index < witness_index);
        ++graphs;
        if (!better) return;
        max = mis;
        witness_index = index;
        witness = encode();
    }

    void merge(Bucket&& o)
    {
        if (o.graphs == 0) return;
        if (graphs == 0 || o.max > max || (o.max == max && o.witness_index < witness_index)) {
            max = std::move(o.max);
            witness_index = o.witness_index;
            witness = std::move(o.witness);
        }
        graphs += o.graphs;
    }
};

struct IndexedFinding {
    std::uint64_t index;
    Finding finding;
};

/// Per-worker partial result; merging is associative and commutative.
struct Accumulator {
    std::vector<Bucket> buckets;
    std::vector<IndexedFinding> violations;
    std::vector<IndexedFinding> inconclusive;
    std::uint64_t scanned = 0;
    std::uint64_t qualified = 0;

    explicit Accumulator(std::size_t parameters) : buckets(parameters) {}

    void merge(Accumulator&& o)
    {
        for (std::size_t i = 0; i < buckets.size(); ++i) buckets[i].merge(std::move(o.buckets[i]));
        std::move(o.violations.begin(), o.violations.end(), std::back_inserter(violations));
        std::move(o.inconclusive.begin(), o.inconclusive.end(), std::back_inserter(inconclusive));
        scanned += o.scanned;
        qualified += o.qualified;
    }
};

/// Precomputed bounds for one (theorem, n) and the per-graph check.
class TheoremCheck {
public:
    TheoremCheck(Theorem theorem, int n, const SweepOptions& options) : theorem_(theorem)
    {
        switch (theorem) {
        case Theorem::mm: exact_.push_back(mis_max(n)); break;
        case Theorem::ht: exact_.push_back(mis_triangle_free_max(n)); break;
        case Theorem::main:
            for (int t = 0; t <= n / 3; ++t) exact_.push_back(g_bound(t, n));
            break;
        case Theorem::kp2: {
            Rational precision = options.h_precision;
            for (int level = 0; level <= options.tightenings; ++level) {
                auto& row = intervals_.emplace_back();
                for (int t = 0; t <= n / 2; ++t) row.push_back(h_bound(t, n, precision));
                precision *= precision;
            }
            break;
        }
        }
    }

    std::size_t parameters() const { return theorem_ == Theorem::kp2 ? intervals_.front().size() : exact_.size(); }
    bool indexed() const { return theorem_ == Theorem::main || theorem_ == Theorem::kp2; }

    const BigCount& exact(int t) const { return exact_[static_cast<std::size_t>(t)]; }
    const RealInterval& interval(int t) const { return intervals_.front()[static_cast<std::size_t>(t)]; }

    void check(const Graph& g, std::uint64_t index, Accumulator& acc) const
    {
        ++acc.scanned;
        const bool needs_triangle_free = theorem_ == Theorem::ht || theorem_ == Theorem::kp2;
        if (needs_triangle_free && !is_triangle_free(g)) return;
        ++acc.qualified;

        int parameter = 0;
        if (theorem_ == Theorem::main) parameter = triangle_matching_number(g);
        if (theorem_ == Theorem::kp2) parameter = induced_matching_number(g);

        const BigCount mis = count_mis(g);
        auto encode = [&g] { return encode_graph6(g); };
        acc.buckets[static_cast<std::size_t>(parameter)].offer(mis, index, encode);

        const std::optional<int> reported = indexed() ? std::optional<int>(parameter) : std::nullopt;
        if (theorem_ != Theorem::kp2) {
            const BigCount& bound = exact(parameter);
            if (mis > bound) acc.violations.push_back({index, {encode(), mis, bound.str(), reported}});
            return;
        }

        // one-sided: pass below the lower endpoint, fail above the upper one
        const Rational value(mis);
        for (const auto& row : intervals_) {
            const RealInterval& h = row[static_cast<std::size_t>(parameter)];
            if (value <= h.lo()) return;
            if (value > h.hi()) {
                acc.violations.push_back({index, {encode(), mis, h.to_string(), reported}});
                return;
            }
        }
        acc.inconclusive.push_back(
            {index, {encode(), mis, intervals_.back()[static_cast<std::size_t>(parameter)].to_string(), reported}});
    }

private:
    Theorem theorem_;
    std::vector<BigCount> exact_;
    std::vector<std::vector<RealInterval>> intervals_;
};

/// Runs `work(begin, end, acc)` over [0, total) in chunks on a thread pool and
/// merges the per-worker accumulators.
Accumulator run_chunked(std::uint64_t total, std::size_t parameters, unsigned threads,
                        const std::function<void(std::uint64_t, std::uint64_t, Accumulator&)>& work)
{
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t chunk = std::max<std::uint64_t>(1, total / (64 * threads) + 1);
    std::atomic<std::uint64_t> next{0};

    std::vector<Accumulator> partial(threads, Accumulator(parameters));
    auto worker = [&](Accumulator& acc) {
        for (;;) {
            const std::uint64_t begin = next.fetch_add(chunk);
            if (begin >= total) return;
            work(begin, std::min(total, begin + chunk), acc);
        }
    };
    if (threads == 1) {
        worker(partial.front());
    } else {
        std::vector<std::jthread> pool;
        for (auto& acc : partial) pool.emplace_back(worker, std::ref(acc));
    }

    Accumulator merged(parameters);
    for (auto& acc : partial) merged.merge(std::move(acc));
    auto by_index = [](const IndexedFinding& a, const IndexedFinding& b) { return a.index < b.index; };
    std::sort(merged.violations.begin(), merged.violations.end(), by_index);
    std::sort(merged.inconclusive.begin(), merged.inconclusive.end(), by_index);
    return merged;
}

SweepReport finish(Theorem theorem, int n, const TheoremCheck& check, Accumulator&& acc)
{
    SweepReport report;
    report.theorem = theorem;
    report.n = n;
    report.graphs_scanned = acc.scanned;
    report.graphs_qualified = acc.qualified;
    for (auto& f : acc.violations) report.violations.push_back(std::move(f.finding));
    for (auto& f : acc.inconclusive) report.inconclusive.push_back(std::move(f.finding));

    if (!check.indexed()) {
        Bucket& b = acc.buckets.front();
        ParameterMax pm;
        pm.bound = check.exact(0);
        pm.graphs = b.graphs;
        if (b.graphs > 0) {
            pm.max_mis = b.max;
            pm.witness = b.witness;
            pm.attained = b.max == check.exact(0);
        }
        report.per_parameter.push_back(std::move(pm));
        return report;
    }

    // cumulative over parameter values <= t
    Bucket running;
    for (std::size_t t = 0; t < acc.buckets.size(); ++t) {
        running.merge(Bucket(acc.buckets[t]));
        ParameterMax pm;
        pm.t = static_cast<int>(t);
        pm.graphs = running.graphs;
        if (theorem == Theorem::main)
            pm.bound = check.exact(static_cast<int>(t));
        else
            pm.bound = check.interval(static_cast<int>(t));
        if (running.graphs > 0) {
            pm.max_mis = running.max;
            pm.witness = running.witness;
            if (const auto* exact = std::get_if<BigCount>(&pm.bound)) pm.attained = running.max == *exact;
        }
        report.per_parameter.push_back(std::move(pm));
    }
    return report;
}

Graph labeled_graph(int n, std::uint64_t index, const std::vector<std::pair<int, int>>& pairs)
{
    GraphBuilder b(n);
    for (std::size_t k = 0; index != 0; ++k, index >>= 1)
        if (index & 1) b.add_edge(pairs[k].first, pairs[k].second);
    return std::move(b).build();
}

} // namespace

std::optional<Theorem> parse_theorem(std::string_view name)
{
    for (auto [key, t] : kTheorems)
        if (key == name) return t;
    return std::nullopt;
}

std::string_view to_string(Theorem t)
{
    for (auto [key, u] : kTheorems)
        if (u == t) return key;
    return "?";
}

std::string to_string(const BoundValue& b)
{
    if (const auto* exact = std::get_if<BigCount>(&b)) return exact->str();
    return std::get<RealInterval>(b).to_string();
}

std::string SweepReport::verdict() const
{
    if (!violations.empty()) return "fail";
    if (!inconclusive.empty()) return "inconclusive";
    if (graphs_scanned == 0) return "pass-vacuous";
    return "pass";
}

int SweepReport::exit_code() const
{
    if (!violations.empty()) return 1;
    if (!inconclusive.empty()) return 2;
    return 0;
}

SweepReport sweep_labeled(int n, Theorem theorem, const SweepOptions& options)
{
    if (n < 0) throw DomainError("sweep needs n >= 0");
    if (n > kLabeledSweepCap)
        throw CapacityError("labelled sweep is capped at n = " + std::to_string(kLabeledSweepCap) +
                            "; supply a corpus (verify --corpus FILE) for larger n");

    const auto start = std::chrono::steady_clock::now();
    const TheoremCheck check(theorem, n, options);

    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();

    auto acc = run_chunked(total, check.parameters(), options.threads,
                           [&](std::uint64_t begin, std::uint64_t end, Accumulator& a) {
                               for (std::uint64_t index = begin; index < end; ++index)
                                   check.check(labeled_graph(n, index, pairs), index, a);
                           });

    SweepReport report = finish(theorem, n, check, std::move(acc));
    report.source = "labeled-exhaustive";
    report.exhaustive = true;
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

SweepReport sweep_corpus(const std::filesystem::path& path, Theorem theorem, int n, const SweepOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    std::ifstream in(path);
    if (!in) throw CorpusError(0, "cannot open " + path.string());

    std::vector<Graph> graphs;
    std::vector<std::uint64_t> lines;
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        Graph g;
        try {
            g = parse_graph6(std::string_view(line).substr(first));
        } catch (const std::exception& e) {
            throw CorpusError(number, e.what());
        }
        if (g.order() != n)
            throw CorpusError(number, "graph has " + std::to_string(g.order()) + " vertices, expected " +
                                          std::to_string(n));
        graphs.push_back(std::move(g));
        lines.push_back(number);
    }

    const TheoremCheck check(theorem, n, options);
    auto acc = run_chunked(graphs.size(), check.parameters(), options.threads,
                           [&](std::uint64_t begin, std::uint64_t end, Accumulator& a) {
                               for (std::uint64_t i = begin; i < end; ++i) check.check(graphs[i], lines[i], a);
                           });

    SweepReport report = finish(theorem, n, check, std::move(acc));
    report.source = "corpus:" + path.string();
    report.exhaustive = false;
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

Report verify_constructions(int n_max)
{
    if (n_max < 5) throw DomainError("verify_constructions needs n_max >= 5");
    if (n_max > kMaxVertices) throw CapacityError("verify_constructions: n_max above vertex cap");

    Report report;
    report.check = "constructions";
    auto record = [&](bool ok, const std::string& line) {
        (ok ? report.evidence : report.counterexamples).push_back(line);
    };

    for (int n = 0; n <= n_max; ++n) {
        for (int t = 0; 3 * t <= n; ++t) {
            const int m = n - 3 * t;
            if (t == 0 && m % 2 == 1 && n < 5) {
                report.notes.push_back("g_extremal(0, " + std::to_string(n) + ") outside the formula's domain");
                continue;
            }
            const Graph g = g_extremal(t, n);
            const BigCount bound = g_bound(t, n);
            const BigCount mis = count_mis(g);
            const std::size_t listed = enumerate_mis(g).size();
            const int tm = triangle_matching_number(g);
            const int expected_tm = m % 2 == 0 ? t : std::max(t - 1, 0);
            const bool ok = mis == bound && BigCount(listed) == mis && tm == expected_tm && tm <= t;
            record(ok, "g_extremal(" + std::to_string(t) + ", " + std::to_string(n) + ") = " + encode_graph6(g) +
                           ": mis " + mis.str() + " (enumerated " + std::to_string(listed) + "), g_bound " +
                           bound.str() + ", triangle matching number " + std::to_string(tm));
        }
    }

    for (int n = 3; n <= n_max; ++n) {
        for (bool two_edges : {false, true}) {
            if (two_edges && n % 3 != 1) continue;
            const Graph g = moon_moser(n, two_edges);
            const BigCount mis = count_mis(g);
            const BigCount bound = mis_max(n);
            record(mis == bound, std::string(two_edges ? "moon_moser alt(" : "moon_moser(") + std::to_string(n) +
                                     "): mis " + mis.str() + ", mis_max " + bound.str());
        }
    }

    for (int n = 4; n <= n_max; ++n) {
        const Graph g = hujter_tuza(n);
        const BigCount mis = count_mis(g);
        const BigCount bound = mis_triangle_free_max(n);
        const bool triangle_free = is_triangle_free(g);
        const int im = induced_matching_number(g);
        const int expected_im = n % 2 == 0 ? n / 2 : (n - 3) / 2;
        record(mis == bound && triangle_free && im == expected_im,
               "hujter_tuza(" + std::to_string(n) + "): mis " + mis.str() + ", bound " + bound.str() +
                   (triangle_free ? ", triangle-free" : ", HAS TRIANGLE") + ", induced matching number " +
                   std::to_string(im));
    }
    return report;
}

} // namespace mis
