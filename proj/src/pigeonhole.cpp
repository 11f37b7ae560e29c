#include "riddle/pigeonhole.hpp"

#include <algorithm>
#include <set>

#include "riddle/errors.hpp"

namespace riddle {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw InvalidInstance("draw count overflows 64 bits");
    return r;
}

void require_feasible(const PigeonholeInstance& inst) {
    if (!inst.feasible())
        throw Infeasible("no color holds " + std::to_string(inst.required()) + " objects");
}

}  // namespace

PigeonholeInstance::PigeonholeInstance(std::vector<ColorCount> colors, std::int64_t required)
    : colors_(std::move(colors)), required_(required) {
    if (colors_.empty())
        throw InvalidInstance("at least one color is needed");
    if (required_ < 1)
        throw InvalidInstance("required must be at least 1, got " + std::to_string(required_));
    std::set<std::string> seen;
    for (const auto& c : colors_) {
        if (c.count < 0)
            throw InvalidInstance("count for '" + c.color + "' is negative");
        if (!seen.insert(c.color).second)
            throw InvalidInstance("color '" + c.color + "' listed twice");
    }
}

bool PigeonholeInstance::feasible() const {
    return std::any_of(colors_.begin(), colors_.end(), [&](const ColorCount& c) { return c.count >= required_; });
}

bool PigeonholeInstance::formula_applicable() const {
    return feasible() &&
           std::all_of(colors_.begin(), colors_.end(), [&](const ColorCount& c) { return c.count >= required_ - 1; });
}

std::int64_t guarantee_draws_formula(std::int64_t n_colors, std::int64_t required) {
    if (n_colors < 1 || required < 1)
        throw InvalidInstance("colors and required must both be at least 1");
    return checked_mul(n_colors, required - 1) + 1;
}

std::int64_t guarantee_draws_oracle(const PigeonholeInstance& inst) {
    require_feasible(inst);
    std::int64_t avoid = 0;
    for (const auto& c : inst.colors())
        avoid += std::min(c.count, inst.required() - 1);
    return avoid + 1;
}

std::vector<std::string> adversarial_sequence(const PigeonholeInstance& inst) {
    require_feasible(inst);
    std::int64_t tallest = 0;
    for (const auto& c : inst.colors())
        tallest = std::max(tallest, c.count);
    const std::int64_t rounds = std::min(inst.required() - 1, tallest);
    std::vector<std::string> seq;
    for (std::int64_t round = 1; round <= rounds; ++round)
        for (const auto& c : inst.colors())
            if (c.count >= round)
                seq.push_back(c.color);
    return seq;
}

}  // namespace riddle
