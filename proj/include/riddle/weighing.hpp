#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace riddle {

/// N objects, exactly one of which is heavier than the rest.
class WeighingInstance {
public:
    explicit WeighingInstance(std::int64_t n_objects);

    std::int64_t n_objects() const { return n_; }

    friend bool operator==(const WeighingInstance&, const WeighingInstance&) = default;

private:
    std::int64_t n_;
};

/// `weighings` = exponent + 1 where 3^exponent < N <= 3^(exponent+1).
/// For a single object both are zero.
struct WeighingAnswer {
    std::int64_t exponent = 0;
    std::int64_t weighings = 0;

    friend bool operator==(const WeighingAnswer&, const WeighingAnswer&) = default;
};

WeighingAnswer min_weighings_formula(const WeighingInstance& inst);

/// Worst-case optimal weighing counts by exhaustive minimax over pan sizes:
///   f(1) = 0,  f(m) = 1 + min_{1 <= a <= m/2} max(f(a), f(m - 2a)).
/// The position of the heavy object among m suspects does not matter, so
/// the state is the suspect count alone. The table is filled once at
/// construction; lookups are read-only and safe to share across threads.
class WeighingOracle {
public:
    explicit WeighingOracle(std::int64_t max_objects);

    std::int64_t max_objects() const { return static_cast<std::int64_t>(table_.size()) - 1; }

    /// Throws std::out_of_range above max_objects().
    std::int64_t weighings(std::int64_t n_objects) const;

private:
    std::vector<std::int32_t> table_;
};

std::int64_t min_weighings_oracle(const WeighingInstance& inst);

using ObjectIndex = std::int64_t;

struct StrategyNode;
using StrategyPtr = std::shared_ptr<const StrategyNode>;

struct Leaf {
    ObjectIndex identified = 0;
};

/// Put `left` and `right` on the pans. `on_balance` is null when nothing was
/// set aside, since the scale cannot balance then.
struct Weigh {
    std::vector<ObjectIndex> left;
    std::vector<ObjectIndex> right;
    StrategyPtr on_left_heavy;
    StrategyPtr on_right_heavy;
    StrategyPtr on_balance;
};

/// A balance-scale decision tree. `suspects` is sorted ascending.
struct StrategyNode {
    std::vector<ObjectIndex> suspects;
    std::variant<Leaf, Weigh> action;
};

/// Ternary split at every node: pans of size a, where a minimizes
/// max(a, m - 2a) over 1 <= a <= m/2 (smallest a on ties); the remainder is
/// set aside. Objects are numbered 0..N-1 and assigned to pans in order.
StrategyPtr build_strategy(const WeighingInstance& inst);

/// Longest root-to-leaf path, in weighings.
std::int64_t strategy_depth(const StrategyNode& tree);

/// Throws MalformedTree on the first node that breaks the tree rules.
void validate_strategy(const StrategyNode& tree);

struct SimulationResult {
    ObjectIndex identified = 0;
    std::int64_t weighings_used = 0;

    friend bool operator==(const SimulationResult&, const SimulationResult&) = default;
};

/// Plays the tree against a fixed heavy object. The tree is validated first.
SimulationResult simulate_strategy(const StrategyNode& tree, ObjectIndex heavy_index);

/// Indented, one node per line.
std::string strategy_to_text(const StrategyNode& tree);

}  // namespace riddle
