#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace {

struct Outcome {
    int code;
    std::string out;
};

Outcome mistool(const std::string& args, const std::string& stdin_text = "")
{
    std::string cmd = std::string(MISTOOL_PATH) + " " + args + " 2>/dev/null";
    if (!stdin_text.empty()) cmd = "printf '" + stdin_text + "' | " + cmd;
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

TEST(Cli, Count)
{
    EXPECT_EQ(mistool("count Bw").out, "3\n");
    EXPECT_EQ(mistool("count", "Bw\\n# comment\\nA_\\n").out, "3\n2\n");
}

TEST(Cli, Enumerate)
{
    const Outcome r = mistool("enumerate Dhc");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0 2\n0 3\n1 3\n1 4\n2 4\n");
    EXPECT_EQ(mistool("enumerate Dhc --limit 4").code, 2);
}

TEST(Cli, Metrics)
{
    EXPECT_EQ(mistool("metrics Dhc").out, "triangle_free=true triangle_matching_number=0 induced_matching_number=1\n");
}

TEST(Cli, WoodBound)
{
    EXPECT_EQ(mistool("wood-bound Dhc").out, "6\n");
}

TEST(Cli, Bound)
{
    EXPECT_EQ(mistool("bound --theorem mm -n 7").out, "12\n");
    EXPECT_EQ(mistool("bound --theorem ht -n 7").out, "10\n");
    EXPECT_EQ(mistool("bound --theorem main -n 10 -t 2").out, "36\n");
    EXPECT_EQ(mistool("bound --theorem kp2 -n 4 -t 2").out, "[4.000000000000000, 4.000000000000000]\n");
    EXPECT_EQ(mistool("bound --theorem mm -n 2").code, 64);
    EXPECT_EQ(mistool("bound --theorem main -n 3 -t 0").code, 64);
    EXPECT_EQ(mistool("bound --theorem kp2 -n 4 --precision nope").code, 64);
}

TEST(Cli, Construct)
{
    EXPECT_EQ(mistool("construct --family complete -n 3").out, "Bw\n");
    EXPECT_EQ(mistool("construct --family cycle -n 5").out, "Dhc\n");
    EXPECT_EQ(mistool("construct --family g_extremal -n 9 -t 0").out, mistool("construct --family hujter_tuza -n 9").out);
    EXPECT_EQ(mistool("construct --family petersen -n 10").code, 64);
    EXPECT_EQ(mistool("construct --family g_extremal -n 6 -t 3").code, 64);
}

TEST(Cli, Verify)
{
    const auto dir = std::filesystem::temp_directory_path();
    const auto json = dir / "mis_cli_verify.json";
    const auto csv = dir / "mis_cli_verify.csv";
    const Outcome r = mistool("verify --theorem main -n 5 --json " + json.string() + " --csv " + csv.string());
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verdict: pass"), std::string::npos);

    std::ifstream in(json);
    const auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j["n"], 5);
    EXPECT_EQ(j["per_parameter"].size(), 2u);
    EXPECT_TRUE(std::filesystem::file_size(csv) > 0);

    EXPECT_EQ(mistool("verify --theorem mm -n 8").code, 64);
    EXPECT_EQ(mistool("verify --theorem kp2 -n 5 --precision 4").code, 0); // tightening resolves everything
}

TEST(Cli, VerifyCorpus)
{
    const auto path = std::filesystem::temp_directory_path() / "mis_cli_corpus.g6";
    {
        std::ofstream out(path);
        out << "# two graphs\nDhc\nD~{\n";
    }
    EXPECT_EQ(mistool("verify --theorem mm -n 5 --corpus " + path.string()).code, 0);
    EXPECT_EQ(mistool("verify --theorem mm -n 6 --corpus " + path.string()).code, 65);
    {
        std::ofstream out(path);
        out << "D!!\n";
    }
    EXPECT_EQ(mistool("verify --theorem mm -n 5 --corpus " + path.string()).code, 65);
}

TEST(Cli, ParseErrors)
{
    EXPECT_EQ(mistool("count Bwx").code, 65);
    EXPECT_EQ(mistool("nonsense").code, 64);
    EXPECT_EQ(mistool("").code, 64);
}

TEST(Cli, CheckFacts)
{
    const Outcome r = mistool("check-facts --t-max 5 --span 20");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("fact1: pass"), std::string::npos);
    EXPECT_NE(r.out.find("fact2: pass"), std::string::npos);
    EXPECT_EQ(mistool("check-facts --precision 0.1").code, 2);
}

} // namespace
