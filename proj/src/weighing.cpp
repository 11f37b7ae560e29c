#include "riddle/weighing.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "riddle/errors.hpp"

namespace riddle {

namespace {

void require_objects(std::int64_t n) {
    if (n < 1)
        throw InvalidInstance("number of objects must be at least 1, got " + std::to_string(n));
}

/// Pan size for m suspects: argmin of max(a, m - 2a), smallest a on ties.
std::int64_t pan_size(std::int64_t m) {
    std::int64_t best = 1;
    std::int64_t best_worst = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t a = 1; a <= m / 2; ++a) {
        std::int64_t worst = std::max(a, m - 2 * a);
        if (worst < best_worst) {
            best_worst = worst;
            best = a;
        }
    }
    return best;
}

StrategyPtr build(std::vector<ObjectIndex> suspects) {
    auto node = std::make_shared<StrategyNode>();
    const auto m = static_cast<std::int64_t>(suspects.size());
    if (m == 1) {
        node->action = Leaf{suspects.front()};
        node->suspects = std::move(suspects);
        return node;
    }
    const std::int64_t a = pan_size(m);
    Weigh w;
    w.left.assign(suspects.begin(), suspects.begin() + a);
    w.right.assign(suspects.begin() + a, suspects.begin() + 2 * a);
    std::vector<ObjectIndex> aside(suspects.begin() + 2 * a, suspects.end());
    w.on_left_heavy = build(w.left);
    w.on_right_heavy = build(w.right);
    if (!aside.empty())
        w.on_balance = build(std::move(aside));
    node->suspects = std::move(suspects);
    node->action = std::move(w);
    return node;
}

std::string join(const std::vector<ObjectIndex>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(xs[i]);
    }
    return out + "}";
}

void check_node(const StrategyNode& node) {
    const auto& s = node.suspects;
    if (s.empty())
        throw MalformedTree("node has no suspects");
    if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
        throw MalformedTree("suspects " + join(s) + " are not sorted and distinct");

    if (const auto* leaf = std::get_if<Leaf>(&node.action)) {
        if (s.size() != 1 || s.front() != leaf->identified)
            throw MalformedTree("leaf for " + std::to_string(leaf->identified) + " has suspects " + join(s));
        return;
    }

    const auto& w = std::get<Weigh>(node.action);
    if (w.left.empty() || w.left.size() != w.right.size())
        throw MalformedTree("pans " + join(w.left) + " and " + join(w.right) + " must be nonempty and equal-sized");
    std::vector<ObjectIndex> left = w.left;
    std::vector<ObjectIndex> right = w.right;
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    std::vector<ObjectIndex> both;
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(both));
    if (!both.empty())
        throw MalformedTree("pans share objects " + join(both));
    if (!std::includes(s.begin(), s.end(), left.begin(), left.end()) ||
        !std::includes(s.begin(), s.end(), right.begin(), right.end()))
        throw MalformedTree("pans hold objects outside suspects " + join(s));

    std::vector<ObjectIndex> on_pans;
    std::merge(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(on_pans));
    std::vector<ObjectIndex> aside;
    std::set_difference(s.begin(), s.end(), on_pans.begin(), on_pans.end(), std::back_inserter(aside));

    if (!w.on_left_heavy || w.on_left_heavy->suspects != left)
        throw MalformedTree("left-heavy branch must keep exactly " + join(left));
    if (!w.on_right_heavy || w.on_right_heavy->suspects != right)
        throw MalformedTree("right-heavy branch must keep exactly " + join(right));
    if (aside.empty()) {
        if (w.on_balance)
            throw MalformedTree("balance branch present but nothing was set aside");
    } else if (!w.on_balance || w.on_balance->suspects != aside) {
        throw MalformedTree("balance branch must keep exactly " + join(aside));
    }
}

void write_text(const StrategyNode& node, int depth, std::ostringstream& out) {
    if (const auto* leaf = std::get_if<Leaf>(&node.action)) {
        out << "found " << leaf->identified << '\n';
        return;
    }
    const auto& w = std::get<Weigh>(node.action);
    out << "weigh " << join(w.left) << " against " << join(w.right) << '\n';
    const std::string indent(static_cast<std::size_t>(depth + 1) * 2, ' ');
    out << indent << "left heavy: ";
    write_text(*w.on_left_heavy, depth + 1, out);
    out << indent << "right heavy: ";
    write_text(*w.on_right_heavy, depth + 1, out);
    if (w.on_balance) {
        out << indent << "balanced: ";
        write_text(*w.on_balance, depth + 1, out);
    }
}

}  // namespace

WeighingInstance::WeighingInstance(std::int64_t n_objects) : n_(n_objects) {
    require_objects(n_);
}

WeighingAnswer min_weighings_formula(const WeighingInstance& inst) {
    const std::int64_t n = inst.n_objects();
    if (n == 1)
        return {0, 0};
    // Find i with 3^i < n <= 3^(i+1).
    std::int64_t exponent = 0;
    std::int64_t power = 1;
    while (n > 3 * power) {
        power *= 3;
        ++exponent;
    }
    return {exponent, exponent + 1};
}

WeighingOracle::WeighingOracle(std::int64_t max_objects) {
    require_objects(max_objects);
    table_.assign(static_cast<std::size_t>(max_objects) + 1, 0);
    // table_[0] stands for an impossible outcome branch and costs nothing.
    for (std::int64_t m = 2; m <= max_objects; ++m) {
        std::int32_t best = std::numeric_limits<std::int32_t>::max();
        for (std::int64_t a = 1; a <= m / 2; ++a) {
            const auto worst = std::max(table_[static_cast<std::size_t>(a)], table_[static_cast<std::size_t>(m - 2 * a)]);
            best = std::min(best, worst);
        }
        table_[static_cast<std::size_t>(m)] = best + 1;
    }
}

std::int64_t WeighingOracle::weighings(std::int64_t n_objects) const {
    require_objects(n_objects);
    if (n_objects > max_objects())
        throw std::out_of_range("oracle table holds up to " + std::to_string(max_objects()) + " objects");
    return table_[static_cast<std::size_t>(n_objects)];
}

std::int64_t min_weighings_oracle(const WeighingInstance& inst) {
    return WeighingOracle(inst.n_objects()).weighings(inst.n_objects());
}

StrategyPtr build_strategy(const WeighingInstance& inst) {
    std::vector<ObjectIndex> all(static_cast<std::size_t>(inst.n_objects()));
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = static_cast<ObjectIndex>(i);
    return build(std::move(all));
}

std::int64_t strategy_depth(const StrategyNode& tree) {
    const auto* w = std::get_if<Weigh>(&tree.action);
    if (!w)
        return 0;
    std::int64_t deepest = std::max(strategy_depth(*w->on_left_heavy), strategy_depth(*w->on_right_heavy));
    if (w->on_balance)
        deepest = std::max(deepest, strategy_depth(*w->on_balance));
    return deepest + 1;
}

void validate_strategy(const StrategyNode& tree) {
    check_node(tree);
    if (const auto* w = std::get_if<Weigh>(&tree.action)) {
        validate_strategy(*w->on_left_heavy);
        validate_strategy(*w->on_right_heavy);
        if (w->on_balance)
            validate_strategy(*w->on_balance);
    }
}

SimulationResult simulate_strategy(const StrategyNode& tree, ObjectIndex heavy_index) {
    validate_strategy(tree);
    if (!std::binary_search(tree.suspects.begin(), tree.suspects.end(), heavy_index))
        throw InvalidInstance("object " + std::to_string(heavy_index) + " is not among the suspects");

    const StrategyNode* node = &tree;
    std::int64_t used = 0;
    while (const auto* w = std::get_if<Weigh>(&node->action)) {
        ++used;
        if (std::find(w->left.begin(), w->left.end(), heavy_index) != w->left.end())
            node = w->on_left_heavy.get();
        else if (std::find(w->right.begin(), w->right.end(), heavy_index) != w->right.end())
            node = w->on_right_heavy.get();
        else
            node = w->on_balance.get();
    }
    return {std::get<Leaf>(node->action).identified, used};
}

std::string strategy_to_text(const StrategyNode& tree) {
    std::ostringstream out;
    write_text(tree, 0, out);
    return out.str();
}

}  // namespace riddle
