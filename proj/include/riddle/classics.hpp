#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "riddle/rational.hpp"

namespace riddle {

// ---------------------------------------------------------------------------
// Container transfer: move objects from A to B at random, then draw from B.
// ---------------------------------------------------------------------------

using ColorMap = std::map<std::string, std::int64_t>;

struct DrawnIsMoved {
    friend bool operator==(const DrawnIsMoved&, const DrawnIsMoved&) = default;
};

struct DrawnHasColor {
    std::string color;
    friend bool operator==(const DrawnHasColor&, const DrawnHasColor&) = default;
};

using TransferQuery = std::variant<DrawnIsMoved, DrawnHasColor>;

/// `moved` objects are taken uniformly without replacement from container A
/// and dropped into container B; one object is then drawn uniformly from B.
class TransferInstance {
public:
    TransferInstance(ColorMap container_a, ColorMap container_b, std::int64_t moved, TransferQuery query);

    const ColorMap& container_a() const { return a_; }
    const ColorMap& container_b() const { return b_; }
    std::int64_t moved() const { return moved_; }
    const TransferQuery& query() const { return query_; }

    std::int64_t total_a() const;
    std::int64_t total_b() const;

    friend bool operator==(const TransferInstance&, const TransferInstance&) = default;

private:
    ColorMap a_;
    ColorMap b_;
    std::int64_t moved_;
    TransferQuery query_;
};

/// 2n / (n + d), as a plain exact value.
Rational transfer_probability_formula(std::int64_t n, std::int64_t d);

/// Probability of each elementary draw result: which color came out of B and
/// whether that object was one of the transferred ones.
struct TransferOutcome {
    std::string color;
    bool was_moved = false;
    Rational probability;
};

/// Sums over every transfer composition with its hypergeometric weight.
/// Outcomes are sorted by (color, was_moved); zero-probability ones are
/// dropped.
std::vector<TransferOutcome> transfer_outcome_distribution(const TransferInstance& inst);

/// Exact probability of the instance's query event.
Rational transfer_probability_enumerate(const TransferInstance& inst);

/// When A holds a single color, (n, d) = (|A|, |B|) is the reading the
/// closed form is evaluated at; otherwise there is no sensible reading.
std::optional<std::pair<std::int64_t, std::int64_t>> transfer_formula_parameters(const TransferInstance& inst);

struct SurveyRow {
    std::string key;
    TransferInstance instance;
    Rational enumerated;
    Rational formula;
    bool match = false;
};

/// Canonical family, for every 1 <= n <= max_n and 1 <= d <= max_d:
///   A = n objects of color "x";
///   B = j objects of "x" and d - j of "y", 0 <= j <= d;
///   moved in [1, n];
///   both queries (the drawn object was moved / the drawn object is "x").
/// Rows come out in (n, d, j, moved, query) order.
std::vector<SurveyRow> transfer_formula_survey(std::int64_t max_n, std::int64_t max_d);

/// `n,d,bx,moved,query,enumerated,formula,match` rows with a header line.
std::string survey_to_csv(const std::vector<SurveyRow>& rows);

std::string query_to_string(const TransferQuery& q);

// ---------------------------------------------------------------------------
// Station walk: the commuter arrives early, walks toward home, is picked up.
// ---------------------------------------------------------------------------

/// X = minutes early at the station, Y = minutes saved at home.
/// Requires 0 < Y <= 2X.
class StationInstance {
public:
    StationInstance(Rational early_minutes, Rational saved_minutes);

    const Rational& early_minutes() const { return early_; }
    const Rational& saved_minutes() const { return saved_; }

    friend bool operator==(const StationInstance&, const StationInstance&) = default;

private:
    Rational early_;
    Rational saved_;
};

/// X - Y/2 minutes of walking.
Rational station_walk_formula(const StationInstance& inst);

struct StationSimulation {
    double walked_minutes = 0;
    double saved_minutes = 0;
};

/// Continuous-time replay. The usual train arrives at time 0 and the driver
/// times the trip to reach the station exactly then. Today the commuter
/// arrives `early_minutes` sooner and walks home-ward; the meeting time is
/// found by bisection on the car/walker gap, then the car drives back from
/// the walker's position. Speeds are distance per minute.
/// Throws InvalidInstance on non-positive input or walk_speed >= car_speed,
/// NoMeeting when the walker would reach home before the car finds them.
StationSimulation station_walk_simulate(double distance, double car_speed, double walk_speed, double early_minutes);

}  // namespace riddle
