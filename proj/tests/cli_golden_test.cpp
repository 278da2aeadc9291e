// Pins stdout, stderr and the exit code of every case in golden/cases.tsv.
// Set PRELIE_UPDATE_GOLDEN=1 to rewrite the expected outputs.

#include <gtest/gtest.h>

#include <cstdlib>

#include "golden_runner.hpp"

namespace {

using namespace prelie::golden;

class CliGolden : public ::testing::TestWithParam<Case> {};

TEST_P(CliGolden, MatchesGoldenOutput) {
    const Case& c = GetParam();
    const RunResult first = run(c);
    const RunResult second = run(c);
    EXPECT_EQ(first.exit_code, c.exit_code);
    EXPECT_EQ(first.out, second.out) << "output differs between runs";
    EXPECT_EQ(first.exit_code, second.exit_code);

    const std::string path = golden_path(c);
    const char* update = std::getenv("PRELIE_UPDATE_GOLDEN");
    if (update && std::string(update) == "1") {
        std::ofstream(path, std::ios::binary) << first.out;
        return;
    }
    std::ifstream probe(path);
    ASSERT_TRUE(probe.good()) << "missing golden file " << path;
    EXPECT_EQ(first.out, read_file(path));
}

INSTANTIATE_TEST_SUITE_P(Cases, CliGolden, ::testing::ValuesIn(load_cases()),
                         [](const ::testing::TestParamInfo<Case>& info) { return info.param.name; });

} // namespace
