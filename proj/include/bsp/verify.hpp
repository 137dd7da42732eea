#ifndef BSP_VERIFY_HPP
#define BSP_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace bsp {

struct SuiteResult {
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;   // one diagnostic line per failure

    bool ok() const { return failed == 0; }
};

// Property suites shared by the CLI `verify` command and the test binaries.
// Known names: corollary1, lemma3, dag-equiv, kcycle-equiv, reductions.
// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count);

std::vector<std::string> suite_names();

}  // namespace bsp

#endif
