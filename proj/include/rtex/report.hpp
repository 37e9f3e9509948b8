#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace rtex {

struct Witness {
    std::string graph6;                 ///< the graph itself (empty above kCapacity)
    std::vector<std::int64_t> weights;  ///< class sizes, when it is a blow-up
    std::string base_graph6;            ///< base of the blow-up, when known
    std::string canonical;              ///< canonical form; witnesses sort by it
};

/// Outcome of an exact or structured search.
struct SearchReport {
    /// Empty when no graph satisfies the constraints.
    std::optional<std::int64_t> optimum;
    std::vector<Witness> witnesses;
    std::uint64_t nodes = 0;
    double seconds = 0;
    std::string mode;
    std::vector<std::string> flags;

    nlohmann::json to_json() const;
};

} // namespace rtex
