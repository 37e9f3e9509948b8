#pragma once

#include "rtex/graph.hpp"

#include <functional>
#include <string>
#include <vector>

namespace rtex {

/// Graph generators used by the verification battery. Tests swap in
/// deliberately broken ones to confirm the battery notices.
struct VerifyHooks {
    std::function<Graph(int)> andrasfai;
    std::function<Graph(int)> vega_base;  ///< full Vega graph of parameter i
    static VerifyHooks standard();
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool ok = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    /// Observations that are reported but not asserted, such as points
    /// where the exact value departs from the conjectured minimum.
    std::vector<std::string> notes;

    bool ok() const;
    std::size_t failures() const;
};

/// Runs "facts", "families", "windows" or "all".
VerifyReport run_verify(const std::string& suite, const VerifyHooks& hooks = VerifyHooks::standard(),
                        unsigned threads = 1);

} // namespace rtex
