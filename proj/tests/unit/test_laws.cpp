#include <gtest/gtest.h>

#include <cctype>
#include <stdexcept>

#include "bwcohom/laws.hpp"

using namespace bwc;

namespace {

LawConfig small(std::uint64_t seed)
{
    LawConfig c;
    c.seed = seed;
    c.cases = 8;
    c.max_morphisms = 5;
    c.max_degree = 3;
    return c;
}

std::string describe(const LawResult& r)
{
    std::string s = r.law;
    for (const auto& f : r.failures) s += "\n  seed " + std::to_string(f.seed) + " " + f.instance + ": " + f.message;
    return s;
}

} // namespace

class EachLaw : public testing::TestWithParam<std::string> {};

TEST_P(EachLaw, HoldsOnGeneratedCases)
{
    auto r = run_law(GetParam(), small(7));
    EXPECT_TRUE(r.ok()) << describe(r);
    EXPECT_EQ(r.passed + r.skipped + r.failures.size(), 8u);
    EXPECT_GT(r.passed, 0u) << r.law;
}

INSTANTIATE_TEST_SUITE_P(Laws, EachLaw, testing::ValuesIn(law_names()), [](const auto& info) {
    std::string s;
    for (char ch : info.param) s += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
    return s;
});

TEST(Laws, Names)
{
    EXPECT_EQ(law_names().size(), 11u);
    EXPECT_TRUE(is_law("dd"));
    EXPECT_TRUE(is_law("dr'-r'd"));
    EXPECT_FALSE(is_law("all"));
    EXPECT_THROW(run_law("no-such-law", small(1)), std::invalid_argument);
}

TEST(Laws, RunsAreDeterministic)
{
    for (const char* law : {"dd", "dh+hd", "localization"}) {
        auto a = run_law(law, small(11));
        auto b = run_law(law, small(11));
        EXPECT_EQ(a.passed, b.passed) << law;
        EXPECT_EQ(a.skipped, b.skipped) << law;
        EXPECT_EQ(a.failures.size(), b.failures.size()) << law;
    }
}

TEST(Laws, AllRunsEveryLaw)
{
    LawConfig c = small(3);
    c.cases = 1;
    auto all = run_laws("all", c);
    ASSERT_EQ(all.size(), law_names().size());
    for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i].law, law_names()[i]);
    EXPECT_EQ(run_laws("dd", c).size(), 1u);
}
