#include <sstream>

#include <json.hpp>

#include "riddle/cli.hpp"

namespace riddle::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json node_json(const StrategyNode& node) {
    ordered_json j;
    j["suspects"] = node.suspects;
    if (const auto* leaf = std::get_if<Leaf>(&node.action)) {
        j["found"] = leaf->identified;
        return j;
    }
    const auto& w = std::get<Weigh>(node.action);
    ordered_json weigh;
    weigh["left"] = w.left;
    weigh["right"] = w.right;
    weigh["left_heavy"] = node_json(*w.on_left_heavy);
    weigh["right_heavy"] = node_json(*w.on_right_heavy);
    weigh["balanced"] = w.on_balance ? node_json(*w.on_balance) : ordered_json(nullptr);
    j["weigh"] = std::move(weigh);
    return j;
}

}  // namespace

std::string render_text(const std::vector<SolveReport>& reports) {
    std::ostringstream out;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        out << (r.label ? *r.label : "#" + std::to_string(i + 1)) << " [" << to_string(r.kind) << "]: " << r.answer
            << '\n';
        if (r.oracle) {
            out << "  oracle: " << *r.oracle;
            if (r.agreement)
                out << (*r.agreement ? " (agrees)" : " (DISAGREES)");
            out << '\n';
        }
        for (const auto& line : r.explanation)
            out << "    " << line << '\n';
    }
    return out.str();
}

std::string render_json(const std::vector<SolveReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json j;
        j["label"] = r.label ? ordered_json(*r.label) : ordered_json(nullptr);
        j["kind"] = to_string(r.kind);
        j["answer"] = r.answer;
        if (r.oracle) {
            j["oracle"] = *r.oracle;
            j["agreement"] = r.agreement ? ordered_json(*r.agreement) : ordered_json(nullptr);
        }
        j["explanation"] = r.explanation;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string strategy_to_json(const StrategyNode& tree) {
    return node_json(tree).dump(2) + "\n";
}

}  // namespace riddle::cli
