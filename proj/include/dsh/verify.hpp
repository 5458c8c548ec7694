#pragma once

#include "group.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dsh {

class Rng;

struct SuiteOptions {
    GroupSpec group;
    int cap = 4;
    std::uint64_t seed = 1;
    int trials = 20;
};

struct IdentityResult {
    std::string name;
    int trials = 0;
    int passed = 0;
    std::string counterexample; // dump of the first failing trial

    bool pass() const { return passed == trials; }
};

struct SuiteResult {
    std::string suite;
    SuiteOptions options;
    std::vector<IdentityResult> identities;

    bool pass() const;
};

// One randomized trial; returns a counterexample dump on failure.
using Trial = std::function<std::optional<std::string>(Rng& rng, const std::shared_ptr<const Group>& group, int cap)>;

struct Identity {
    std::string name;
    Trial trial;
    // Deterministic checks run once however many trials are requested.
    bool once = false;
};

struct SuiteInfo {
    std::string name;
    std::string summary;
    // Expected to fail; excluded from "all".
    bool negative_control = false;
    std::vector<Identity> identities;
};

const std::vector<SuiteInfo>& verify_suites();
const SuiteInfo& find_suite(const std::string& name); // UnsupportedError if unknown

// Each identity draws from its own generator seeded by (seed, suite, index),
// so results do not depend on which other suites run.
SuiteResult run_suite(const SuiteInfo& suite, const SuiteOptions& options);

// Machine-readable report:
//   suite <name> group <spec> cap <n> seed <s> trials <t>
//   identity <name> <passed>/<trials> PASS|FAIL
//     counterexample: ...
//   result PASS|FAIL
std::string format_suite_result(const SuiteResult& result);

} // namespace dsh
