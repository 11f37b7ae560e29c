#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace riddle {

struct ColorCount {
    std::string color;
    std::int64_t count = 0;

    friend bool operator==(const ColorCount&, const ColorCount&) = default;
};

/// A drawer with per-color object counts; drawing blind until `required`
/// objects of one color are in hand. Colors keep their declared order.
class PigeonholeInstance {
public:
    PigeonholeInstance(std::vector<ColorCount> colors, std::int64_t required);

    const std::vector<ColorCount>& colors() const { return colors_; }
    std::int64_t required() const { return required_; }
    std::int64_t n_colors() const { return static_cast<std::int64_t>(colors_.size()); }

    /// Some color holds at least `required` objects.
    bool feasible() const;

    /// Every color holds at least required - 1 and the instance is feasible:
    /// the regime where the closed formula is exact.
    bool formula_applicable() const;

    friend bool operator==(const PigeonholeInstance&, const PigeonholeInstance&) = default;

private:
    std::vector<ColorCount> colors_;
    std::int64_t required_;
};

/// n_colors * (required - 1) + 1.
std::int64_t guarantee_draws_formula(std::int64_t n_colors, std::int64_t required);

/// 1 + sum_i min(count_i, required - 1). Throws Infeasible when no color
/// holds `required` objects.
std::int64_t guarantee_draws_oracle(const PigeonholeInstance& inst);

/// A longest draw sequence that never holds `required` of one color, built
/// round-robin over the colors in declared order.
std::vector<std::string> adversarial_sequence(const PigeonholeInstance& inst);

}  // namespace riddle
