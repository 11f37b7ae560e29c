#include "riddle/classics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "riddle/errors.hpp"

namespace riddle {

namespace {

std::int64_t total(const ColorMap& m) {
    std::int64_t sum = 0;
    for (const auto& [color, count] : m)
        sum += count;
    return sum;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Calls `visit(take)` for every vector take[i] <= counts[i] summing to `moved`.
template <typename Visit>
void for_each_composition(const std::vector<std::int64_t>& counts, std::int64_t moved, Visit&& visit) {
    std::vector<std::int64_t> take(counts.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
        if (i == counts.size()) {
            if (left == 0)
                visit(take);
            return;
        }
        for (std::int64_t k = 0; k <= std::min(counts[i], left); ++k) {
            take[i] = k;
            self(self, i + 1, left - k);
        }
        take[i] = 0;
    };
    rec(rec, 0, moved);
}

}  // namespace

TransferInstance::TransferInstance(ColorMap container_a, ColorMap container_b, std::int64_t moved,
                                   TransferQuery query)
    : a_(std::move(container_a)), b_(std::move(container_b)), moved_(moved), query_(std::move(query)) {
    for (const auto* m : {&a_, &b_})
        for (const auto& [color, count] : *m)
            if (count < 0)
                throw InvalidInstance("count for '" + color + "' is negative");
    if (moved_ < 1)
        throw InvalidInstance("moved must be at least 1, got " + std::to_string(moved_));
    if (moved_ > total(a_))
        throw InvalidInstance("cannot move " + std::to_string(moved_) + " objects out of a container holding " +
                              std::to_string(total(a_)));
}

std::int64_t TransferInstance::total_a() const { return total(a_); }
std::int64_t TransferInstance::total_b() const { return total(b_); }

Rational transfer_probability_formula(std::int64_t n, std::int64_t d) {
    if (n < 1 || d < 1)
        throw InvalidInstance("n and d must both be at least 1");
    return {BigInt(2 * n), BigInt(n + d)};
}

std::vector<TransferOutcome> transfer_outcome_distribution(const TransferInstance& inst) {
    std::vector<std::string> a_colors;
    std::vector<std::int64_t> a_counts;
    for (const auto& [color, count] : inst.container_a()) {
        a_colors.push_back(color);
        a_counts.push_back(count);
    }

    std::set<std::string> colors(a_colors.begin(), a_colors.end());
    for (const auto& [color, count] : inst.container_b())
        colors.insert(color);

    // (color, was_moved) -> accumulated probability
    std::map<std::pair<std::string, bool>, Rational> acc;
    const BigInt ways = binomial(inst.total_a(), inst.moved());
    const std::int64_t b_after = inst.total_b() + inst.moved();

    for_each_composition(a_counts, inst.moved(), [&](const std::vector<std::int64_t>& take) {
        BigInt w = 1;
        for (std::size_t i = 0; i < take.size(); ++i)
            w *= binomial(a_counts[i], take[i]);
        const Rational weight(w, ways);
        for (std::size_t i = 0; i < take.size(); ++i)
            if (take[i] > 0)
                acc[{a_colors[i], true}] += weight * Rational::normalize(take[i], b_after);
        for (const auto& [color, count] : inst.container_b())
            if (count > 0)
                acc[{color, false}] += weight * Rational::normalize(count, b_after);
    });

    std::vector<TransferOutcome> out;
    for (auto& [key, p] : acc)
        if (!p.is_zero())
            out.push_back({key.first, key.second, std::move(p)});
    return out;
}

Rational transfer_probability_enumerate(const TransferInstance& inst) {
    Rational p;
    for (const auto& o : transfer_outcome_distribution(inst)) {
        const bool hit = std::visit(
            [&](const auto& q) {
                using Q = std::decay_t<decltype(q)>;
                if constexpr (std::is_same_v<Q, DrawnIsMoved>)
                    return o.was_moved;
                else
                    return o.color == q.color;
            },
            inst.query());
        if (hit)
            p += o.probability;
    }
    return p;
}

std::optional<std::pair<std::int64_t, std::int64_t>> transfer_formula_parameters(const TransferInstance& inst) {
    const auto nonempty = std::count_if(inst.container_a().begin(), inst.container_a().end(),
                                        [](const auto& kv) { return kv.second > 0; });
    if (nonempty != 1 || inst.total_b() < 1)
        return std::nullopt;
    return std::pair{inst.total_a(), inst.total_b()};
}

std::string query_to_string(const TransferQuery& q) {
    if (const auto* c = std::get_if<DrawnHasColor>(&q))
        return "color " + c->color;
    return "moved";
}

std::vector<SurveyRow> transfer_formula_survey(std::int64_t max_n, std::int64_t max_d) {
    if (max_n < 1 || max_d < 1)
        throw InvalidBounds("survey bounds must be at least 1");
    std::vector<SurveyRow> rows;
    for (std::int64_t n = 1; n <= max_n; ++n) {
        for (std::int64_t d = 1; d <= max_d; ++d) {
            const Rational formula = transfer_probability_formula(n, d);
            for (std::int64_t j = 0; j <= d; ++j) {
                ColorMap b;
                if (j > 0)
                    b["x"] = j;
                if (d - j > 0)
                    b["y"] = d - j;
                for (std::int64_t m = 1; m <= n; ++m) {
                    for (const TransferQuery& q : {TransferQuery{DrawnIsMoved{}}, TransferQuery{DrawnHasColor{"x"}}}) {
                        TransferInstance inst({{"x", n}}, b, m, q);
                        Rational p = transfer_probability_enumerate(inst);
                        std::ostringstream key;
                        key << "n=" << n << " d=" << d << " bx=" << j << " moved=" << m << " query="
                            << (std::holds_alternative<DrawnIsMoved>(q) ? "moved" : "color:x");
                        const bool match = p == formula;
                        rows.push_back({key.str(), std::move(inst), std::move(p), formula, match});
                    }
                }
            }
        }
    }
    return rows;
}

std::string survey_to_csv(const std::vector<SurveyRow>& rows) {
    std::ostringstream out;
    out << "instance,enumerated,formula,match\n";
    for (const auto& r : rows)
        out << r.key << ',' << r.enumerated << ',' << r.formula << ',' << (r.match ? "yes" : "no") << '\n';
    return out.str();
}

StationInstance::StationInstance(Rational early_minutes, Rational saved_minutes)
    : early_(std::move(early_minutes)), saved_(std::move(saved_minutes)) {
    if (!early_.is_positive() || !saved_.is_positive())
        throw InvalidInstance("early and saved minutes must both be positive");
    if (saved_ > early_ * 2)
        throw InvalidInstance("saved minutes " + saved_.to_string() + " exceed twice the early arrival " +
                              early_.to_string());
}

Rational station_walk_formula(const StationInstance& inst) {
    Rational walked = inst.early_minutes() - inst.saved_minutes() / 2;
    if (walked.is_negative())
        throw InvalidInstance("negative walking time " + walked.to_string());
    return walked;
}

StationSimulation station_walk_simulate(double distance, double car_speed, double walk_speed, double early_minutes) {
    for (double x : {distance, car_speed, walk_speed, early_minutes})
        if (!(x > 0) || !std::isfinite(x))
            throw InvalidInstance("simulation parameters must be positive and finite");
    if (walk_speed >= car_speed)
        throw InvalidInstance("walking must be slower than driving");

    // Distances are measured from the station; the car is at `distance` when
    // it leaves home and at 0 at time 0.
    const double car_leaves = -distance / car_speed;
    const double walker_leaves = -early_minutes;
    auto car_at = [&](double t) { return -car_speed * t; };
    auto walker_at = [&](double t) { return walk_speed * (t - walker_leaves); };

    double lo = std::max(car_leaves, walker_leaves);
    double hi = 0.0;
    if (walker_at(lo) >= distance)
        throw NoMeeting("the walker reaches home before the car sets out");
    // gap = car_at - walker_at is strictly decreasing; positive at lo, negative at hi.
    for (int i = 0; i < 200 && lo < hi; ++i) {
        const double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi)
            break;
        if (car_at(mid) - walker_at(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    const double meet = lo + (hi - lo) / 2;
    const double meet_at = walker_at(meet);
    if (!(meet_at < distance))
        throw NoMeeting("meeting point is not between the station and home");

    const double usual_home = distance / car_speed;
    const double today_home = meet + (distance - meet_at) / car_speed;
    return {meet - walker_leaves, usual_home - today_home};
}

}  // namespace riddle
