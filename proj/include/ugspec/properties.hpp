#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ugspec {

struct PropertyResult {
    std::string name;
    long instances = 0;
    long failures = 0;
    std::vector<std::string> notes;  // first few failure details
    bool ok() const { return failures == 0; }
};

struct PropertySuiteReport {
    std::vector<PropertyResult> results;
    bool ok() const;
    std::string to_text() const;
    std::string to_json() const;
    const PropertyResult* find(const std::string& name) const;
};

// Runs the randomized and exhaustive invariant suites. scope is one of
// graph, spectra, transforms, theory, enumerate, or all. Deterministic for
// a fixed seed.
PropertySuiteReport run_property_suites(const std::string& scope, uint64_t seed);

}  // namespace ugspec
