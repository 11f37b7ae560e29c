#include <doctest.h>

#include "riddle/errors.hpp"
#include "riddle/pigeonhole.hpp"
#include "support/oracles.hpp"

using namespace riddle;

namespace {

PigeonholeInstance socks() { return {{{"blue", 10}, {"red", 8}, {"black", 12}}, 2}; }
PigeonholeInstance buttons() { return {{{"blue", 84}, {"turquoise", 32}, {"red", 28}, {"green", 4}}, 4}; }

std::vector<std::int64_t> counts_of(const PigeonholeInstance& p) {
    std::vector<std::int64_t> v;
    for (const auto& c : p.colors())
        v.push_back(c.count);
    return v;
}

}  // namespace

TEST_CASE("closed formula") {
    CHECK(guarantee_draws_formula(3, 2) == 4);
    CHECK(guarantee_draws_formula(4, 4) == 13);
    CHECK(guarantee_draws_formula(1, 1) == 1);
    CHECK_THROWS_AS(guarantee_draws_formula(0, 2), InvalidInstance);
    CHECK_THROWS_AS(guarantee_draws_formula(2, 0), InvalidInstance);
}

TEST_CASE("oracle on the drawer problems") {
    CHECK(guarantee_draws_oracle(socks()) == 4);
    CHECK(guarantee_draws_oracle(buttons()) == 13);
    CHECK_THROWS_AS(guarantee_draws_oracle(PigeonholeInstance({{"a", 2}, {"b", 2}}, 3)), Infeasible);
}

TEST_CASE("short supply of one color") {
    const PigeonholeInstance p({{"a", 5}, {"b", 1}}, 3);
    // Exhaustive search over the draw orders of {a,a,a,a,a,b}.
    CHECK(testing::longest_avoiding_run(counts_of(p), 3) + 1 == 4);
    CHECK(guarantee_draws_oracle(p) == 4);
    CHECK_FALSE(p.formula_applicable());
    CHECK(guarantee_draws_formula(p.n_colors(), p.required()) == 5);
}

TEST_CASE("adversarial sequences") {
    CHECK(adversarial_sequence(socks()) == std::vector<std::string>{"blue", "red", "black"});
    const auto seq = adversarial_sequence(buttons());
    REQUIRE(seq.size() == 12);
    for (std::size_t i = 0; i < seq.size(); ++i)
        CHECK(seq[i] == std::vector<std::string>{"blue", "turquoise", "red", "green"}[i % 4]);
    CHECK(adversarial_sequence(PigeonholeInstance({{"a", 1}}, 1)).empty());
    CHECK_THROWS_AS(adversarial_sequence(PigeonholeInstance({{"a", 1}}, 2)), Infeasible);
}

TEST_CASE("instance invariants") {
    CHECK_THROWS_AS(PigeonholeInstance({}, 2), InvalidInstance);
    CHECK_THROWS_AS(PigeonholeInstance({{"a", 1}}, 0), InvalidInstance);
    CHECK_THROWS_AS(PigeonholeInstance({{"a", -1}}, 1), InvalidInstance);
    CHECK_THROWS_AS(PigeonholeInstance({{"a", 1}, {"a", 2}}, 1), InvalidInstance);
}

TEST_CASE("formula and oracle agree wherever the formula applies") {
    std::int64_t applicable = 0;
    for (int colors = 1; colors <= 4; ++colors) {
        std::vector<std::int64_t> counts(static_cast<std::size_t>(colors), 0);
        while (true) {
            std::vector<ColorCount> cc;
            for (std::size_t i = 0; i < counts.size(); ++i)
                cc.push_back({"c" + std::to_string(i), counts[i]});
            for (std::int64_t r = 1; r <= 4; ++r) {
                const PigeonholeInstance p(cc, r);
                if (!p.formula_applicable())
                    continue;
                ++applicable;
                REQUIRE(guarantee_draws_oracle(p) == guarantee_draws_formula(colors, r));
            }
            std::size_t i = 0;
            while (i < counts.size() && counts[i] == 6)
                counts[i++] = 0;
            if (i == counts.size())
                break;
            ++counts[i];
        }
    }
    CHECK(applicable > 0);
}

TEST_CASE("adversarial sequence is a maximal avoiding run") {
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b)
            for (int r = 1; r <= 4; ++r) {
                const PigeonholeInstance p({{"a", a}, {"b", b}}, r);
                if (!p.feasible())
                    continue;
                const auto seq = adversarial_sequence(p);
                CHECK(static_cast<std::int64_t>(seq.size()) == guarantee_draws_oracle(p) - 1);
                CHECK(std::count(seq.begin(), seq.end(), "a") < r);
                CHECK(std::count(seq.begin(), seq.end(), "b") < r);
                CHECK(static_cast<std::int64_t>(seq.size()) == testing::longest_avoiding_run({a, b}, r));
            }
}
