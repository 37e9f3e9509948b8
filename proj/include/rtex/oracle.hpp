#pragma once

#include "rtex/graph.hpp"
#include "rtex/report.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rtex {

/// Bumped whenever enumeration or search semantics change; stored results
/// from other versions are ignored.
inline constexpr const char* kOracleVersion = "rtex-oracle-1";

struct EnumerationOptions {
    /// Only graphs with independence number at most this are produced.
    /// Independence number never drops when a vertex is added, so the cap
    /// also prunes every intermediate graph.
    std::optional<int> alpha_cap;
    unsigned threads = 1;  ///< 0 = hardware concurrency
    int max_order = 14;
};

struct EnumerationStats {
    std::uint64_t nodes = 0;   ///< graphs accepted at all levels
    std::uint64_t output = 0;
};

/// Every maximal triangle-free graph on n vertices, one per isomorphism
/// class, by canonical augmentation over triangle-free graphs. The callback
/// is never invoked concurrently. Throws ResourceLimit for n > max_order.
EnumerationStats for_each_maximal_triangle_free(int n, const EnumerationOptions& options,
                                                const std::function<void(const Graph&)>& visit);

std::vector<Graph> enumerate_maximal_triangle_free(int n, const EnumerationOptions& options = {});

enum class OracleMode { Full, Structured };
std::string to_string(OracleMode mode);
OracleMode parse_oracle_mode(const std::string& text);

struct OracleOptions {
    unsigned threads = 1;
    int max_order = 14;
    /// Structured mode only.
    std::uint64_t node_budget = 1'000'000'000;
};

/// ex(n, s): the most edges of a triangle-free n-vertex graph with
/// independence number at most s, with all extremal graphs.
///
/// Full mode scans every maximal triangle-free graph (an extremal graph is
/// always maximal: adding an edge that keeps it triangle-free cannot raise
/// the independence number). Structured mode maximises over proper
/// blow-ups of Andrasfai and Vega graphs only and is flagged as
/// conditional.
SearchReport exact_ex(int n, int s, OracleMode mode = OracleMode::Full,
                      const OracleOptions& options = {});

/// Full-mode reports for s = 1..n from a single enumeration.
std::vector<SearchReport> ex_table(int n, const OracleOptions& options = {});

/// Append-only newline-delimited JSON store of oracle results.
class ResultStore {
  public:
    explicit ResultStore(std::filesystem::path path);

    /// Default location from the RTEX_DB environment variable, if set.
    static std::optional<std::filesystem::path> default_path();

    std::optional<SearchReport> lookup(int n, int s, OracleMode mode) const;
    void append(int n, int s, OracleMode mode, const SearchReport& report);

    const std::filesystem::path& path() const { return path_; }

  private:
    std::filesystem::path path_;
};

} // namespace rtex
