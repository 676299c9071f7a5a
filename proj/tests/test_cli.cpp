#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli_app.hpp"

using skewclass::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

// Splits a command line on spaces, honouring double quotes.
std::vector<std::string> split_words(const std::string& line)
{
    std::vector<std::string> words;
    std::string cur;
    bool quoted = false, have = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
            have = true;
        } else if (c == ' ' && !quoted) {
            if (have)
                words.push_back(cur);
            cur.clear();
            have = false;
        } else {
            cur.push_back(c);
            have = true;
        }
    }
    if (have)
        words.push_back(cur);
    return words;
}

struct Example {
    std::string command;
    std::string expected;
};

// Every ```console block: lines "$ skewclass …" followed by their output.
std::vector<Example> readme_examples()
{
    std::ifstream in(README_PATH);
    std::vector<Example> out;
    std::string line;
    bool in_block = false;
    while (std::getline(in, line)) {
        if (!in_block) {
            in_block = line == "```console";
            continue;
        }
        if (line == "```") {
            in_block = false;
            continue;
        }
        if (line.rfind("$ ", 0) == 0)
            out.push_back({line.substr(2), ""});
        else if (!out.empty())
            out.back().expected += line + '\n';
    }
    return out;
}

} // namespace

TEST(Readme, ExamplesReproduceExactly)
{
    const auto examples = readme_examples();
    ASSERT_GE(examples.size(), 8u);
    for (const auto& ex : examples) {
        auto words = split_words(ex.command);
        ASSERT_FALSE(words.empty());
        ASSERT_EQ(words.front(), "skewclass") << ex.command;
        words.erase(words.begin());
        const auto r = call(words);
        EXPECT_EQ(r.code, 0) << ex.command << "\n" << r.err;
        EXPECT_EQ(r.out, ex.expected) << ex.command;
    }
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"frobnicate"}).code, 2);
    EXPECT_EQ(call({"expand", "1|3", "--m", "2"}).code, 2);
    EXPECT_EQ(call({"expand", "3,,1", "--m", "2"}).code, 2);
    EXPECT_EQ(call({"expand", "3,1"}).code, 2);
    EXPECT_EQ(call({"expand", "3,1", "--m", "2", "--method", "kostka"}).code, 2);
    EXPECT_EQ(call({"sign-table", "3,1", "--m", "2"}).code, 2);
    EXPECT_EQ(call({"verify", "--n", "15", "--m", "2"}).code, 2);
    EXPECT_EQ(call({"kostka", "3,3|3,3", "--m", "2"}).code, 2);
    EXPECT_EQ(call({"compose", "1", "1", "1,3", "--m", "3"}).code, 2);
    EXPECT_EQ(call({"verify", "--n", "9", "--m", "2"}).code, 0);
    EXPECT_EQ(call({"--help"}).code, 0);
    EXPECT_EQ(call({"coeff", "3|3|3,1", "5,3,1,1", "--m", "2"}).out, "-2\n");
    EXPECT_EQ(call({"coeff", "3|3|3,1", "5,3", "--m", "2"}).code, 2);
}

TEST(Cli, MethodsAgree)
{
    for (const char* d : {"3|3|3,1", "1,2,2|3", "2,2|4,2|3"}) {
        const auto base = call({"expand", d, "--m", "2"}).out;
        EXPECT_EQ(call({"expand", d, "--m", "2", "--method", "poset"}).out, base);
        EXPECT_EQ(call({"expand", d, "--m", "2", "--method", "det"}).out, base);
    }
    for (const char* method : {"recursive", "poset", "det", "kostka"}) {
        EXPECT_EQ(call({"equiv", "1,2,2|3", "1,2|3,2", "--m", "2", "--method", method}).out,
                  "equivalent: true\n");
        EXPECT_EQ(call({"equiv", "1,2,2|3", "2,1,2|3", "--m", "2", "--method", method}).out,
                  "equivalent: false\n");
    }
}

TEST(Cli, JsonShapes)
{
    using nlohmann::json;
    const auto e = json::parse(call({"expand", "1,2,2|3", "--m", "2", "--json"}).out);
    EXPECT_EQ(e["degree"], 8);
    ASSERT_EQ(e["terms"].size(), 6u);
    EXPECT_EQ(e["terms"][0]["partition"], json({7, 1}));
    EXPECT_EQ(e["terms"][0]["coeff"], -1);

    const auto s = json::parse(call({"sign-table", "1,3,2|4,2,1,2,2", "--m", "2", "--json"}).out);
    ASSERT_EQ(s["rows"].size(), 15u);
    EXPECT_EQ(s["rows"][3], json({{"x", 4}, {"type", 2}, {"sign", "+"}}));

    const auto k = json::parse(call({"kostka", "2|2", "--m", "2", "--json"}).out);
    EXPECT_EQ(k["terms"].back()["kostka"], 2);

    const auto o = json::parse(call({"orbit", "3,1,4,1,2|3,1,2", "--m", "2", "--json"}).out);
    EXPECT_EQ(o["kappa"], 2);
    EXPECT_EQ(o["factorization"]["s"], json({2, 1}));

    const auto v = json::parse(call({"verify", "--n", "8", "--m", "2", "--json"}).out);
    EXPECT_EQ(v["confirmed"], true);
    EXPECT_EQ(v["size_histogram"]["other"], 0);

    const auto round = skewclass::expansion_from_json(e);
    EXPECT_EQ(round, skewclass::expand_recursive(skewclass::parse_diagram("1,2,2|3", 2)));
}

TEST(Cli, OutputIndependentOfThreads)
{
    const auto one = call({"verify", "--n", "11", "--m", "2", "--threads", "1", "--json"}).out;
    const auto four = call({"verify", "--n", "11", "--m", "2", "--threads", "4", "--json"}).out;
    EXPECT_EQ(one, four);
}
