#include "rtex/report.hpp"

namespace rtex {

nlohmann::json SearchReport::to_json() const {
    nlohmann::json j;
    j["optimum"] = optimum ? nlohmann::json(*optimum) : nlohmann::json(nullptr);
    j["witness_graph6"] = nlohmann::json::array();
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : witnesses) {
        j["witness_graph6"].push_back(w.graph6);
        nlohmann::json entry{{"graph6", w.graph6}};
        if (!w.base_graph6.empty()) {
            entry["base_graph6"] = w.base_graph6;
            entry["weights"] = w.weights;
        }
        j["witnesses"].push_back(std::move(entry));
    }
    j["nodes"] = nodes;
    j["seconds"] = seconds;
    j["mode"] = mode;
    j["flags"] = flags;
    return j;
}

} // namespace rtex
