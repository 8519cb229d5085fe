// mistool: command-line front end for the MIS toolkit.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mis/bounds.hpp"
#include "mis/constructions.hpp"
#include "mis/engine.hpp"
#include "mis/errors.hpp"
#include "mis/graph6.hpp"
#include "mis/report_io.hpp"
#include "mis/structure.hpp"
#include "mis/sweep.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

/// The graph6 argument if given, else every non-blank, non-comment stdin line.
std::vector<std::string> graph_inputs(const std::optional<std::string>& arg)
{
    if (arg) return {*arg};
    std::vector<std::string> out;
    std::string line;
    while (std::getline(std::cin, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        out.push_back(line);
    }
    return out;
}

void write_file(const std::string& path, const std::string& body)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << body;
}

mis::Theorem theorem_arg(const std::string& name)
{
    auto t = mis::parse_theorem(name);
    if (!t) throw CLI::ValidationError("--theorem", "unknown theorem " + name);
    return *t;
}

mis::Rational precision_arg(const std::string& text)
{
    mis::Rational p = mis::parse_rational(text);
    if (p <= 0) throw std::invalid_argument("precision must be positive");
    return p;
}

void print_report(const mis::Report& r, bool verbose)
{
    std::cout << r.check << ": " << mis::to_string(r.verdict()) << '\n';
    for (const auto& line : r.counterexamples) std::cout << "  counterexample: " << line << '\n';
    for (const auto& line : r.inconclusive) std::cout << "  inconclusive: " << line << '\n';
    if (verbose) {
        for (const auto& line : r.evidence) std::cout << "  " << line << '\n';
        for (const auto& line : r.notes) std::cout << "  note: " << line << '\n';
    } else {
        std::cout << "  " << r.evidence.size() << " evidence lines, " << r.notes.size()
                  << " notes (--verbose to list)\n";
    }
}

void print_sweep(const mis::SweepReport& r)
{
    std::cout << "theorem " << mis::to_string(r.theorem) << ", n=" << r.n << ", " << r.source
              << (r.exhaustive ? " (exhaustive)" : " (not exhaustive)") << '\n'
              << "graphs scanned " << r.graphs_scanned << ", qualifying " << r.graphs_qualified << ", "
              << r.elapsed.count() << " s\n";
    for (const auto& pm : r.per_parameter) {
        std::cout << "  ";
        if (pm.t) std::cout << "t<=" << *pm.t << ": ";
        std::cout << "max_mis " << (pm.max_mis ? pm.max_mis->str() : "-") << ", bound " << mis::to_string(pm.bound);
        if (std::holds_alternative<mis::BigCount>(pm.bound)) std::cout << (pm.attained ? ", attained" : ", not attained");
        if (!pm.witness.empty()) std::cout << ", witness " << pm.witness;
        std::cout << '\n';
    }
    for (const auto& v : r.violations)
        std::cout << "  VIOLATION " << v.graph6 << ": mis " << v.mis.str() << " > " << v.bound << '\n';
    for (const auto& v : r.inconclusive)
        std::cout << "  inconclusive " << v.graph6 << ": mis " << v.mis.str() << " vs " << v.bound << '\n';
    std::cout << "verdict: " << r.verdict() << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Maximal independent set counting and extremal bound verification"};
    app.require_subcommand(1);

    std::optional<std::string> graph_arg;
    std::optional<std::size_t> limit;
    std::string theorem_name, family_name;
    int n = 0, t = 0;
    std::optional<int> t_opt;
    std::string precision = "1e-8";
    std::optional<std::string> corpus, json_out, csv_out;
    unsigned threads = 0;
    int t_max = 40, span = 100;
    bool verbose = false;

    auto* count = app.add_subcommand("count", "number of maximal independent sets");
    count->add_option("graph6", graph_arg, "graph in graph6 (default: read lines from stdin)");

    auto* enumerate = app.add_subcommand("enumerate", "list maximal independent sets, one per line");
    enumerate->add_option("graph6", graph_arg, "graph in graph6 (default: read lines from stdin)");
    enumerate->add_option("--limit", limit, "fail instead of listing more than N sets");

    auto* metrics = app.add_subcommand("metrics", "triangle-freeness and induced matching parameters");
    metrics->add_option("graph6", graph_arg, "graph in graph6 (default: read lines from stdin)");

    auto* wood = app.add_subcommand("wood-bound", "recursive closed-neighbourhood upper bound");
    wood->add_option("graph6", graph_arg, "graph in graph6 (default: read lines from stdin)");

    auto* bound = app.add_subcommand("bound", "evaluate an extremal bound");
    bound->add_option("--theorem", theorem_name)->required()->check(CLI::IsMember({"mm", "ht", "main", "kp2"}));
    bound->add_option("-n", n)->required()->check(CLI::NonNegativeNumber);
    bound->add_option("-t", t_opt)->check(CLI::NonNegativeNumber);
    bound->add_option("--precision", precision, "enclosure width for kp2");

    auto* construct = app.add_subcommand("construct", "emit a witness graph as graph6");
    construct->add_option("--family", family_name)
        ->required()
        ->check(CLI::IsMember({"moon_moser", "hujter_tuza", "g_extremal", "cycle", "complete", "matching"}));
    construct->add_option("-n", n, "vertex count (edge count for matching)")->required()->check(CLI::NonNegativeNumber);
    construct->add_option("-t", t, "triangle parameter for g_extremal")->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify", "sweep graphs against a theorem");
    verify->add_option("--theorem", theorem_name)->required()->check(CLI::IsMember({"mm", "ht", "main", "kp2"}));
    verify->add_option("-n", n)->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--corpus", corpus, "graph6 file, one graph per line");
    verify->add_option("--json", json_out, "write the full report as JSON");
    verify->add_option("--csv", csv_out, "write per-parameter rows as CSV");
    verify->add_option("--threads", threads, "worker threads (0 = all cores)");
    verify->add_option("--precision", precision, "initial enclosure width for kp2");

    auto* facts = app.add_subcommand("check-facts", "certify the ratio and constant inequalities");
    facts->add_option("--precision", precision, "bisection width for c");
    facts->add_option("--t-max", t_max)->check(CLI::PositiveNumber);
    facts->add_option("--span", span)->check(CLI::Range(4, 100000));
    facts->add_option("--json", json_out, "write both reports as JSON");
    facts->add_flag("--verbose", verbose, "list every evidence line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (count->parsed()) {
            for (const auto& line : graph_inputs(graph_arg)) std::cout << mis::count_mis(mis::parse_graph6(line)).str() << '\n';
            return 0;
        }
        if (enumerate->parsed()) {
            for (const auto& line : graph_inputs(graph_arg)) {
                const auto sets = mis::enumerate_mis(mis::parse_graph6(line), limit);
                for (const auto& s : sets) std::cout << s.to_string() << '\n';
            }
            return 0;
        }
        if (metrics->parsed()) {
            for (const auto& line : graph_inputs(graph_arg)) {
                const auto p = mis::structure_profile(mis::parse_graph6(line));
                std::cout << "triangle_free=" << (p.triangle_free ? "true" : "false")
                          << " triangle_matching_number=" << p.triangle_matching_number
                          << " induced_matching_number=" << p.induced_matching_number << '\n';
            }
            return 0;
        }
        if (wood->parsed()) {
            for (const auto& line : graph_inputs(graph_arg)) std::cout << mis::wood_bound(mis::parse_graph6(line)).str() << '\n';
            return 0;
        }
        if (bound->parsed()) {
            switch (theorem_arg(theorem_name)) {
            case mis::Theorem::mm: std::cout << mis::mis_max(n).str() << '\n'; break;
            case mis::Theorem::ht: std::cout << mis::mis_triangle_free_max(n).str() << '\n'; break;
            case mis::Theorem::main: {
                const auto g = mis::g_bound_traced(t_opt.value_or(n / 3), n);
                std::cout << g.value.str() << '\n';
                if (g.clamped) std::cerr << "note: t clamped to " << g.t_used << '\n';
                break;
            }
            case mis::Theorem::kp2: {
                const auto h = mis::h_bound_traced(t_opt.value_or(n / 2), n, precision_arg(precision));
                std::cout << h.value.to_string(15) << '\n';
                if (h.clamped) std::cerr << "note: t clamped to " << h.t_used << '\n';
                break;
            }
            }
            return 0;
        }
        if (construct->parsed()) {
            std::cout << mis::encode_graph6(mis::construct(*mis::parse_family(family_name), n, t)) << '\n';
            return 0;
        }
        if (verify->parsed()) {
            mis::SweepOptions options;
            options.threads = threads;
            options.h_precision = precision_arg(precision);
            const mis::Theorem theorem = theorem_arg(theorem_name);
            const mis::SweepReport report =
                corpus ? mis::sweep_corpus(*corpus, theorem, n, options) : mis::sweep_labeled(n, theorem, options);
            print_sweep(report);
            if (json_out) write_file(*json_out, mis::to_json(report).dump(2) + "\n");
            if (csv_out) write_file(*csv_out, mis::to_csv(report));
            return report.exit_code();
        }
        if (facts->parsed()) {
            const mis::Report fact1 = mis::check_fact1(t_max, span);
            const mis::Report fact2 = mis::check_fact2(precision_arg(precision));
            print_report(fact1, verbose);
            print_report(fact2, verbose);
            if (json_out) write_file(*json_out, nlohmann::json::array({mis::to_json(fact1), mis::to_json(fact2)}).dump(2) + "\n");
            return std::max(mis::exit_code(fact1.verdict()), mis::exit_code(fact2.verdict()));
        }
    } catch (const mis::Graph6Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const mis::CorpusError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const mis::ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        // DomainError, CapacityError, invalid_argument: bad parameters
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitUsage;
}
