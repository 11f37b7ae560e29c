#include "riddle/quantity.hpp"

#include "riddle/errors.hpp"

namespace riddle {

namespace {

void require_non_negative(const Rational& magnitude) {
    if (magnitude.is_negative())
        throw InvalidInstance("quantity must be non-negative, got " + magnitude.to_string());
}

}  // namespace

Quantity Quantity::count(Rational magnitude, std::string label) {
    require_non_negative(magnitude);
    return {std::move(magnitude), Unit::count, std::move(label)};
}

Quantity Quantity::minutes(Rational magnitude) {
    require_non_negative(magnitude);
    return {std::move(magnitude), Unit::minutes, {}};
}

Quantity Quantity::hours(Rational magnitude) {
    return minutes(magnitude * 60);
}

std::string to_string(Unit unit) {
    return unit == Unit::count ? "count" : "min";
}

}  // namespace riddle
