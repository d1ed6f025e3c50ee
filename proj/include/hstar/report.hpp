#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hstar/numeric.hpp"

namespace hstar {

// Outcome of a single named check.  `witnesses` carries the values that were
// compared so a failure is diagnosable from the report alone; `branch` names
// which case of a multi-branch criterion applied.
struct CheckReport {
    std::string name;
    bool passed = true;
    std::string branch;
    std::vector<std::pair<std::string, std::string>> witnesses;

    void note(const std::string& label, const std::string& value) {
        witnesses.emplace_back(label, value);
    }
    void note(const std::string& label, const Int& value) {
        witnesses.emplace_back(label, value.str());
    }
    void note(const std::string& label, long long value) {
        witnesses.emplace_back(label, std::to_string(value));
    }
    void require(bool ok) { passed = passed && ok; }
};

} // namespace hstar
