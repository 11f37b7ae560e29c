#pragma once

#include <string>

#include "riddle/rational.hpp"

namespace riddle {

enum class Unit { count, minutes };

/// A non-negative magnitude with a unit. Time is always stored in minutes.
/// `label` is the free noun that followed a count in the source ("mice",
/// "cats"); it carries no meaning for the solvers.
struct Quantity {
    Rational magnitude;
    Unit unit = Unit::count;
    std::string label;

    static Quantity count(Rational magnitude, std::string label = {});
    static Quantity minutes(Rational magnitude);
    static Quantity hours(Rational magnitude);

    friend bool operator==(const Quantity&, const Quantity&) = default;
};

std::string to_string(Unit unit);

}  // namespace riddle
