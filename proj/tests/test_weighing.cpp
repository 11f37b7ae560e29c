#include <doctest.h>

#include "riddle/errors.hpp"
#include "riddle/weighing.hpp"
#include "support/oracles.hpp"

using namespace riddle;

namespace {

std::int64_t formula(std::int64_t n) { return min_weighings_formula(WeighingInstance(n)).weighings; }
std::int64_t oracle(std::int64_t n) { return min_weighings_oracle(WeighingInstance(n)); }

std::vector<ObjectIndex> range(ObjectIndex lo, ObjectIndex hi) {
    std::vector<ObjectIndex> v;
    for (auto i = lo; i < hi; ++i)
        v.push_back(i);
    return v;
}

}  // namespace

TEST_CASE("formula on the classic counts") {
    CHECK(min_weighings_formula(WeighingInstance(13)) == WeighingAnswer{2, 3});
    CHECK(formula(5) == 2);
    CHECK(min_weighings_formula(WeighingInstance(9)) == WeighingAnswer{1, 2});
    CHECK(min_weighings_formula(WeighingInstance(4)) == WeighingAnswer{1, 2});
    CHECK(min_weighings_formula(WeighingInstance(1)) == WeighingAnswer{0, 0});
    CHECK(formula(243) == 5);
    CHECK(formula(2) == 1);
    CHECK(formula(3) == 1);
}

TEST_CASE("zero objects is invalid") {
    CHECK_THROWS_AS(WeighingInstance(0), InvalidInstance);
    CHECK_THROWS_AS(WeighingInstance(-3), InvalidInstance);
    CHECK_THROWS_AS(WeighingOracle(0), InvalidInstance);
}

TEST_CASE("minimax oracle") {
    CHECK(oracle(13) == 3);
    CHECK(oracle(2) == 1);
    CHECK(oracle(10) == 3);
    CHECK(oracle(1) == 0);
    CHECK(oracle(243) == 5);
    CHECK_THROWS_AS(WeighingOracle(10).weighings(11), std::out_of_range);
}

TEST_CASE("suspect-count memo agrees with brute force over explicit subsets") {
    for (int n = 1; n <= 9; ++n) {
        CAPTURE(n);
        CHECK(testing::subset_minimax(n) == oracle(n));
    }
}

TEST_CASE("formula equals oracle, boundaries, monotone") {
    const WeighingOracle table(3 * 3 * 3 * 3 * 3 * 3 * 3 * 3);
    for (std::int64_t n = 2; n <= table.max_objects(); ++n) {
        CAPTURE(n);
        REQUIRE(formula(n) == table.weighings(n));
        REQUIRE(table.weighings(n) >= table.weighings(n - 1));
    }
    std::int64_t p = 1;
    for (int k = 0; k <= 7; ++k, p *= 3) {
        CHECK(table.weighings(p) == k);
        CHECK(table.weighings(p + 1) == k + 1);
    }
}

TEST_CASE("strategy for nine objects") {
    const StrategyPtr tree = build_strategy(WeighingInstance(9));
    const auto& root = std::get<Weigh>(tree->action);
    CHECK(root.left == range(0, 3));
    CHECK(root.right == range(3, 6));
    REQUIRE(root.on_balance);
    CHECK(root.on_balance->suspects == range(6, 9));
    CHECK(root.on_left_heavy->suspects.size() == 3);
    CHECK(root.on_right_heavy->suspects.size() == 3);
    CHECK(strategy_depth(*tree) == 2);
    CHECK(simulate_strategy(*tree, 7) == SimulationResult{7, 2});
}

TEST_CASE("strategy for thirteen objects: pans of four, five aside") {
    const StrategyPtr tree = build_strategy(WeighingInstance(13));
    const auto& root = std::get<Weigh>(tree->action);
    CHECK(root.left.size() == 4);
    CHECK(root.right.size() == 4);
    CHECK(root.on_balance->suspects == range(8, 13));
    CHECK(strategy_depth(*tree) == 3);
    const auto r = simulate_strategy(*tree, 12);
    CHECK(r.identified == 12);
    CHECK(r.weighings_used <= 3);
}

TEST_CASE("single object is a leaf") {
    const StrategyPtr tree = build_strategy(WeighingInstance(1));
    CHECK(std::get<Leaf>(tree->action).identified == 0);
    CHECK(strategy_depth(*tree) == 0);
    CHECK(simulate_strategy(*tree, 0) == SimulationResult{0, 0});
    CHECK_THROWS_AS(simulate_strategy(*tree, 1), InvalidInstance);
}

TEST_CASE("two objects leave nothing aside") {
    const StrategyPtr tree = build_strategy(WeighingInstance(2));
    const auto& root = std::get<Weigh>(tree->action);
    CHECK_FALSE(root.on_balance);
    CHECK(simulate_strategy(*tree, 1) == SimulationResult{1, 1});
}

TEST_CASE("malformed trees are rejected") {
    auto leaf = [](ObjectIndex i) { return std::make_shared<StrategyNode>(StrategyNode{{i}, Leaf{i}}); };

    SUBCASE("unequal pans") {
        StrategyNode bad{{0, 1, 2}, Weigh{{0}, {1, 2}, leaf(0), leaf(1), nullptr}};
        CHECK_THROWS_AS(validate_strategy(bad), MalformedTree);
        CHECK_THROWS_AS(simulate_strategy(bad, 0), MalformedTree);
    }
    SUBCASE("overlapping pans") {
        StrategyNode bad{{0, 1}, Weigh{{0}, {0}, leaf(0), leaf(0), leaf(1)}};
        CHECK_THROWS_AS(validate_strategy(bad), MalformedTree);
    }
    SUBCASE("leaf with two suspects") {
        StrategyNode bad{{0, 1}, Leaf{0}};
        CHECK_THROWS_AS(validate_strategy(bad), MalformedTree);
    }
    SUBCASE("child keeps the wrong suspects") {
        StrategyNode bad{{0, 1, 2}, Weigh{{0}, {1}, leaf(1), leaf(0), leaf(2)}};
        CHECK_THROWS_AS(validate_strategy(bad), MalformedTree);
    }
    SUBCASE("missing balance branch") {
        StrategyNode bad{{0, 1, 2}, Weigh{{0}, {1}, leaf(0), leaf(1), nullptr}};
        CHECK_THROWS_AS(validate_strategy(bad), MalformedTree);
    }
    SUBCASE("pan outside suspects") {
        StrategyNode bad{{0, 1}, Weigh{{0}, {5}, leaf(0), leaf(5), leaf(1)}};
        CHECK_THROWS_AS(validate_strategy(bad), MalformedTree);
    }
}

TEST_CASE("strategy soundness up to 60 objects") {
    for (std::int64_t n = 1; n <= 60; ++n) {
        const StrategyPtr tree = build_strategy(WeighingInstance(n));
        CHECK(strategy_depth(*tree) == oracle(n));
        for (ObjectIndex h = 0; h < n; ++h) {
            const auto r = simulate_strategy(*tree, h);
            REQUIRE(r.identified == h);
            REQUIRE(r.weighings_used <= formula(n));
        }
    }
}

TEST_CASE("text form") {
    const std::string text = strategy_to_text(*build_strategy(WeighingInstance(3)));
    CHECK(text ==
          "weigh {0} against {1}\n"
          "  left heavy: found 0\n"
          "  right heavy: found 1\n"
          "  balanced: found 2\n");
}
