#include "riddle/rate.hpp"

#include <stdexcept>

#include "riddle/errors.hpp"

namespace riddle {

namespace {

void require_positive(const Quantity& q, Unit unit, RateField field) {
    if (q.unit != unit)
        throw InvalidInstance(to_string(field) + " must be measured in " + to_string(unit));
    if (!q.magnitude.is_positive())
        throw InvalidInstance(to_string(field) + " must be positive, got " + q.magnitude.to_string());
}

Unit unit_of(RateField f) {
    return f == RateField::time ? Unit::minutes : Unit::count;
}

std::pair<RateField, RateField> others(RateField target) {
    switch (target) {
    case RateField::work: return {RateField::subjects, RateField::time};
    case RateField::subjects: return {RateField::work, RateField::time};
    case RateField::time: return {RateField::work, RateField::subjects};
    }
    throw std::logic_error("bad rate field");
}

}  // namespace

std::string to_string(RateField field) {
    switch (field) {
    case RateField::work: return "work";
    case RateField::subjects: return "subjects";
    case RateField::time: return "time";
    }
    return "?";
}

std::optional<RateField> rate_field_from_string(std::string_view name) {
    if (name == "work")
        return RateField::work;
    if (name == "subjects")
        return RateField::subjects;
    if (name == "time")
        return RateField::time;
    return std::nullopt;
}

RateScenario::RateScenario(Quantity work, Quantity subjects, Quantity time)
    : work_(std::move(work)), subjects_(std::move(subjects)), time_(std::move(time)) {
    require_positive(work_, Unit::count, RateField::work);
    require_positive(subjects_, Unit::count, RateField::subjects);
    require_positive(time_, Unit::minutes, RateField::time);
}

const Quantity& RateScenario::field(RateField f) const {
    switch (f) {
    case RateField::work: return work_;
    case RateField::subjects: return subjects_;
    case RateField::time: return time_;
    }
    throw std::logic_error("bad rate field");
}

RateQuery::RateQuery(RateScenario known, RateField target, Quantity first, Quantity second)
    : known_(std::move(known)), target_(target), first_(std::move(first)), second_(std::move(second)) {
    auto [a, b] = others(target_);
    require_positive(first_, unit_of(a), a);
    require_positive(second_, unit_of(b), b);
}

const Quantity& RateQuery::given(RateField f) const {
    auto [a, b] = others(target_);
    if (f == a)
        return first_;
    if (f == b)
        return second_;
    throw std::invalid_argument(to_string(f) + " is the unknown of this query");
}

Rational rate_constant(const RateScenario& s) {
    return s.work().magnitude / (s.subjects().magnitude * s.time().magnitude);
}

Rational solve_rate(const RateQuery& q) {
    const Rational k = rate_constant(q.known());
    switch (q.target()) {
    case RateField::work:
        return k * q.given(RateField::subjects).magnitude * q.given(RateField::time).magnitude;
    case RateField::subjects:
        return q.given(RateField::work).magnitude / (k * q.given(RateField::time).magnitude);
    case RateField::time:
        return q.given(RateField::work).magnitude / (k * q.given(RateField::subjects).magnitude);
    }
    throw std::logic_error("bad rate field");
}

Rational solve_rate_by_proportion(const RateQuery& q) {
    const RateScenario& k = q.known();
    // Work grows with subjects and with time; subjects and time trade off
    // inversely at fixed work.
    switch (q.target()) {
    case RateField::work: {
        Rational w = k.work().magnitude;
        w = w / k.subjects().magnitude * q.given(RateField::subjects).magnitude;
        w = w / k.time().magnitude * q.given(RateField::time).magnitude;
        return w;
    }
    case RateField::subjects: {
        Rational s = k.subjects().magnitude;
        s = s / k.work().magnitude * q.given(RateField::work).magnitude;
        s = s * k.time().magnitude / q.given(RateField::time).magnitude;
        return s;
    }
    case RateField::time: {
        Rational t = k.time().magnitude;
        t = t / k.work().magnitude * q.given(RateField::work).magnitude;
        t = t * k.subjects().magnitude / q.given(RateField::subjects).magnitude;
        return t;
    }
    }
    throw std::logic_error("bad rate field");
}

BigInt ceil_subjects(const Rational& x) {
    if (!x.is_positive())
        throw InvalidInstance("subject count must be positive, got " + x.to_string());
    return x.ceil();
}

RateScenario complete(const RateQuery& q, const Rational& value) {
    auto pick = [&](RateField f) {
        if (f == q.target())
            return f == RateField::time ? Quantity::minutes(value) : Quantity::count(value);
        return q.given(f);
    };
    return {pick(RateField::work), pick(RateField::subjects), pick(RateField::time)};
}

}  // namespace riddle
