#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "mis/bounds.hpp"
#include "mis/constructions.hpp"
#include "mis/engine.hpp"
#include "mis/errors.hpp"
#include "mis/graph6.hpp"
#include "mis/report_io.hpp"
#include "mis/structure.hpp"
#include "mis/sweep.hpp"
#include "support.hpp"

namespace mis {
namespace {

namespace fs = std::filesystem;

fs::path write_corpus(const std::string& name, const std::vector<std::string>& lines)
{
    const fs::path p = fs::temp_directory_path() / ("mis_sweep_test_" + name);
    std::ofstream out(p);
    for (const auto& l : lines) out << l << '\n';
    return p;
}

std::vector<std::optional<BigCount>> maxima(const SweepReport& r)
{
    std::vector<std::optional<BigCount>> out;
    for (const auto& pm : r.per_parameter) out.push_back(pm.max_mis);
    return out;
}

TEST(SweepLabeled, MoonMoserAtFive)
{
    const SweepReport r = sweep_labeled(5, Theorem::mm);
    EXPECT_EQ(r.graphs_scanned, 1024u);
    ASSERT_EQ(r.per_parameter.size(), 1u);
    const ParameterMax& pm = r.per_parameter.front();
    EXPECT_EQ(pm.max_mis, BigCount(6));
    EXPECT_TRUE(pm.attained);
    EXPECT_EQ(count_mis(parse_graph6(pm.witness)), count_mis(moon_moser(5)));
    EXPECT_EQ(r.verdict(), "pass");
    EXPECT_TRUE(r.exhaustive);
}

TEST(SweepLabeled, HujterTuzaAtFive)
{
    const SweepReport r = sweep_labeled(5, Theorem::ht);
    const ParameterMax& pm = r.per_parameter.front();
    EXPECT_EQ(pm.max_mis, BigCount(5));
    EXPECT_TRUE(pm.attained);
    const Graph w = parse_graph6(pm.witness);
    EXPECT_TRUE(is_triangle_free(w));
    EXPECT_EQ(w.edge_count(), 5u); // C5 is the only 5-vertex triangle-free graph with 5 sets
    EXPECT_EQ(r.graphs_qualified, 388u);
}

TEST(SweepLabeled, MainAtSix)
{
    const SweepReport r = sweep_labeled(6, Theorem::main);
    EXPECT_EQ(maxima(r), (std::vector<std::optional<BigCount>>{BigCount(8), BigCount(8), BigCount(9)}));
    for (const auto& pm : r.per_parameter) {
        EXPECT_TRUE(pm.attained);
        EXPECT_LE(triangle_matching_number(parse_graph6(pm.witness)), *pm.t);
    }
    EXPECT_TRUE(r.violations.empty());
}

TEST(SweepLabeled, Kp2AtSix)
{
    const SweepReport r = sweep_labeled(6, Theorem::kp2);
    EXPECT_EQ(r.verdict(), "pass");
    ASSERT_EQ(r.per_parameter.size(), 4u);
    EXPECT_EQ(r.per_parameter[0].max_mis, BigCount(1)); // edgeless graph only
    EXPECT_EQ(r.per_parameter[3].max_mis, BigCount(8));
    for (const auto& pm : r.per_parameter) EXPECT_FALSE(pm.attained);
}

TEST(SweepLabeled, RefusesOutOfRange)
{
    EXPECT_THROW(sweep_labeled(8, Theorem::mm), CapacityError);
    EXPECT_THROW(sweep_labeled(2, Theorem::mm), DomainError);
    EXPECT_THROW(sweep_labeled(3, Theorem::ht), DomainError);
    EXPECT_THROW(sweep_labeled(3, Theorem::main), DomainError);
}

TEST(SweepLabeled, CoarsePrecisionStillDecides)
{
    // the starting bracket for c already separates every graph up to 7 vertices
    SweepOptions options;
    options.h_precision = 4;
    options.tightenings = 0;
    const SweepReport r = sweep_labeled(7, Theorem::kp2, options);
    EXPECT_TRUE(r.violations.empty());
    EXPECT_TRUE(r.inconclusive.empty());
    EXPECT_EQ(r.verdict(), "pass");
}

TEST(SweepReport, VerdictPrecedence)
{
    SweepReport r;
    r.graphs_scanned = 1;
    EXPECT_EQ(r.verdict(), "pass");
    r.inconclusive.push_back(Finding{"Dhc", 5, "[4, 6]", 1});
    EXPECT_EQ(r.verdict(), "inconclusive");
    EXPECT_EQ(r.exit_code(), 2);
    r.violations.push_back(Finding{"Dhc", 5, "4", std::nullopt});
    EXPECT_EQ(r.verdict(), "fail");
    EXPECT_EQ(r.exit_code(), 1);
    EXPECT_EQ(SweepReport{}.verdict(), "pass-vacuous");
}

TEST(SweepLabeled, DeterministicAcrossThreadCounts)
{
    SweepOptions one, four;
    one.threads = 1;
    four.threads = 4;
    for (Theorem th : {Theorem::mm, Theorem::main, Theorem::kp2}) {
        auto a = to_json(sweep_labeled(6, th, one));
        auto b = to_json(sweep_labeled(6, th, four));
        a.erase("elapsed_seconds");
        b.erase("elapsed_seconds");
        EXPECT_EQ(a, b);
    }
}

TEST(SweepCorpus, AgreesWithLabeledSweep)
{
    const std::size_t classes[] = {11, 34, 156};
    for (int n : {4, 5, 6}) {
        const auto corpus = testing::nonisomorphic_graphs(n);
        ASSERT_EQ(corpus.size(), classes[n - 4]);
        const fs::path p = write_corpus("iso" + std::to_string(n), corpus);
        for (Theorem th : {Theorem::mm, Theorem::ht, Theorem::main, Theorem::kp2}) {
            const SweepReport labeled = sweep_labeled(n, th);
            const SweepReport canonical = sweep_corpus(p, th, n);
            EXPECT_EQ(maxima(labeled), maxima(canonical)) << n << " " << to_string(th);
            EXPECT_EQ(canonical.graphs_scanned, corpus.size());
            EXPECT_FALSE(canonical.exhaustive);
            EXPECT_EQ(canonical.verdict(), "pass");
        }
        fs::remove(p);
    }
}

TEST(SweepCorpus, EmptyFileIsVacuous)
{
    const fs::path p = write_corpus("empty", {"# nothing here", ""});
    const SweepReport r = sweep_corpus(p, Theorem::main, 5);
    EXPECT_EQ(r.graphs_scanned, 0u);
    EXPECT_EQ(r.verdict(), "pass-vacuous");
    EXPECT_EQ(r.exit_code(), 0);
    EXPECT_FALSE(r.per_parameter.front().max_mis);
    fs::remove(p);
}

TEST(SweepCorpus, ReportsBadLines)
{
    const fs::path bad = write_corpus("bad", {"# header", "Dhc", "D!!", "Dhc"});
    try {
        sweep_corpus(bad, Theorem::mm, 5);
        FAIL() << "expected CorpusError";
    } catch (const CorpusError& e) {
        EXPECT_EQ(e.line(), 3u);
    }

    const fs::path mismatch = write_corpus("mismatch", {"Dhc", "Bw"});
    try {
        sweep_corpus(mismatch, Theorem::mm, 5);
        FAIL() << "expected CorpusError";
    } catch (const CorpusError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    EXPECT_THROW(sweep_corpus("/nonexistent/corpus.g6", Theorem::mm, 5), CorpusError);
    fs::remove(bad);
    fs::remove(mismatch);
}

TEST(VerifyConstructions, PassesAndItemizes)
{
    const Report r = verify_constructions(12);
    EXPECT_EQ(r.verdict(), Verdict::pass);
    EXPECT_GE(r.evidence.size(), 20u);
    auto has = [&](const std::string& prefix) {
        for (const auto& line : r.evidence)
            if (line.rfind(prefix, 0) == 0) return true;
        return false;
    };
    EXPECT_TRUE(has("g_extremal(1, 6) = " + encode_graph6(matching(3)) + ": mis 8"));
    EXPECT_TRUE(has("g_extremal(0, 7)"));
    EXPECT_THROW(verify_constructions(4), DomainError);
}

TEST(ReportIo, JsonAndCsvShapes)
{
    const SweepReport r = sweep_labeled(5, Theorem::kp2);
    const auto j = to_json(r);
    EXPECT_EQ(j["theorem"], "kp2");
    EXPECT_EQ(j["verdict"], "pass");
    EXPECT_EQ(j["per_parameter"].size(), 3u);
    EXPECT_EQ(j["per_parameter"][0]["bound"]["kind"], "interval");
    EXPECT_TRUE(j["per_parameter"][0]["attained"].is_null());

    const std::string csv = to_csv(sweep_labeled(5, Theorem::main));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "theorem,n,source,t,graphs,max_mis,bound_lo,bound_hi,attained,witness");
    EXPECT_NE(csv.find("main,5,labeled-exhaustive,1,1024,6,6,6,true,"), std::string::npos) << csv;
}

} // namespace
} // namespace mis
