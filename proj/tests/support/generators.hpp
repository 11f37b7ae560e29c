#pragma once

// Seeded random generators for property tests.

#include <random>
#include <string>
#include <vector>

#include "riddle/puzzle.hpp"

namespace riddle::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    bool coin() { return between(0, 1) == 1; }

    Rational positive_rational() { return Rational::normalize(between(1, 1000), between(1, 60)); }

    std::string word() {
        static const std::vector<std::string> words = {"cats", "mice", "bakers", "sandwiches", "coins", "workers",
                                                       "loaves", "pages", "x1", "Widgets", "snake_case"};
        return words[static_cast<std::size_t>(between(0, static_cast<std::int64_t>(words.size()) - 1))];
    }

    std::string color() {
        static const std::vector<std::string> colors = {"blue", "red", "black", "green", "turquoise", "c1", "c_2"};
        return colors[static_cast<std::size_t>(between(0, static_cast<std::int64_t>(colors.size()) - 1))];
    }

    Quantity count_quantity() {
        return Quantity::count(positive_rational(), coin() ? word() : std::string{});
    }

    RateScenario scenario() { return {count_quantity(), count_quantity(), Quantity::minutes(positive_rational())}; }

    RateQuery rate_query() {
        const auto target = static_cast<RateField>(between(0, 2));
        std::vector<Quantity> given;
        for (auto f : {RateField::work, RateField::subjects, RateField::time})
            if (f != target)
                given.push_back(f == RateField::time ? Quantity::minutes(positive_rational()) : count_quantity());
        return {scenario(), target, given[0], given[1]};
    }

    std::vector<ColorCount> distinct_colors(std::int64_t min_count) {
        std::vector<ColorCount> out;
        const auto n = between(1, 4);
        for (std::int64_t i = 0; i < n; ++i) {
            std::string c = color();
            bool dup = false;
            for (const auto& x : out)
                dup = dup || x.color == c;
            if (!dup)
                out.push_back({c, between(min_count, 12)});
        }
        return out;
    }

    TransferInstance transfer() {
        ColorMap a;
        ColorMap b;
        for (const auto& c : distinct_colors(1))
            a[c.color] = c.count;
        if (coin())
            for (const auto& c : distinct_colors(0))
                b[c.color] = c.count;
        std::int64_t total = 0;
        for (const auto& [k, v] : a)
            total += v;
        TransferQuery q = coin() ? TransferQuery{DrawnIsMoved{}} : TransferQuery{DrawnHasColor{color()}};
        return {a, b, between(1, total), q};
    }

    StationInstance station() {
        const Rational early = positive_rational();
        const Rational saved = early * 2 * Rational::normalize(between(1, 100), 100);
        return {early, saved};
    }

    std::optional<std::string> label() {
        static const std::vector<std::string> labels = {"Problem 1", "odd \"quoted\" label", "back\\slash", "x",
                                                        "μ-label", ""};
        if (coin())
            return std::nullopt;
        return labels[static_cast<std::size_t>(between(0, static_cast<std::int64_t>(labels.size()) - 1))];
    }

    PuzzleSpec spec() {
        PuzzleSpec s{WeighingInstance(1), label()};
        switch (between(0, 4)) {
        case 0: s.payload = rate_query(); break;
        case 1: s.payload = WeighingInstance(between(1, 100000)); break;
        case 2: s.payload = PigeonholeInstance(distinct_colors(0), between(1, 9)); break;
        case 3: s.payload = transfer(); break;
        default: s.payload = station(); break;
        }
        return s;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace riddle::testing
