#pragma once

#include <optional>
#include <string>

#include "riddle/quantity.hpp"
#include "riddle/rational.hpp"

namespace riddle {

enum class RateField { work, subjects, time };

std::string to_string(RateField field);
std::optional<RateField> rate_field_from_string(std::string_view name);

/// One completed job: `work` units produced by `subjects` in `time` minutes.
/// All three magnitudes are strictly positive.
class RateScenario {
public:
    RateScenario(Quantity work, Quantity subjects, Quantity time);

    const Quantity& work() const { return work_; }
    const Quantity& subjects() const { return subjects_; }
    const Quantity& time() const { return time_; }
    const Quantity& field(RateField f) const;

    friend bool operator==(const RateScenario&, const RateScenario&) = default;

private:
    Quantity work_;
    Quantity subjects_;
    Quantity time_;
};

/// A second scenario of the same task with one field unknown.
class RateQuery {
public:
    /// `first` and `second` are the two non-target fields, in the order
    /// work, subjects, time.
    RateQuery(RateScenario known, RateField target, Quantity first, Quantity second);

    const RateScenario& known() const { return known_; }
    RateField target() const { return target_; }

    /// Throws std::invalid_argument when asked for the target field.
    const Quantity& given(RateField f) const;

    friend bool operator==(const RateQuery&, const RateQuery&) = default;

private:
    RateScenario known_;
    RateField target_;
    Quantity first_;
    Quantity second_;
};

/// k = W / (S t).
Rational rate_constant(const RateScenario& s);

/// The value of the unknown field that keeps W/(S t) equal to the known
/// scenario's constant. Exact; may be non-integral.
Rational solve_rate(const RateQuery& q);

/// Same unknown reached by chained proportions (scale the known scenario one
/// field at a time, the way the unitary method does) instead of through k.
Rational solve_rate_by_proportion(const RateQuery& q);

/// Smallest integer >= x, for "how many subjects" questions. x must be > 0.
BigInt ceil_subjects(const Rational& x);

/// The unknown scenario with `value` filled in for the target field.
RateScenario complete(const RateQuery& q, const Rational& value);

}  // namespace riddle
