#include <doctest.h>

#include "riddle/errors.hpp"
#include "riddle/rate.hpp"
#include "support/generators.hpp"

using namespace riddle;

namespace {

RateScenario scenario(std::int64_t w, std::int64_t s, std::int64_t t) {
    return {Quantity::count(w), Quantity::count(s), Quantity::minutes(t)};
}

RateQuery find_subjects(RateScenario known, std::int64_t work, std::int64_t minutes) {
    return {std::move(known), RateField::subjects, Quantity::count(work), Quantity::minutes(minutes)};
}

}  // namespace

TEST_CASE("rate constant") {
    CHECK(rate_constant(scenario(6, 6, 6)) == Rational::normalize(1, 6));
    CHECK(rate_constant(scenario(150, 100, 60)) == Rational::normalize(1, 40));
    CHECK(rate_constant(scenario(1, 1, 1)) == Rational(1));
}

TEST_CASE("worked word problems") {
    CHECK(solve_rate(find_subjects(scenario(6, 6, 6), 100, 50)) == Rational(12));
    CHECK(solve_rate(find_subjects(scenario(150, 100, 60), 60, 30)) == Rational(80));
    CHECK(solve_rate(find_subjects(scenario(40, 3, 120), 100, 30)) == Rational(30));

    const RateQuery back(scenario(5, 2, 7), RateField::work, Quantity::count(2), Quantity::minutes(7));
    CHECK(solve_rate(back) == Rational(5));
}

TEST_CASE("one hour equals sixty minutes in a scenario") {
    const RateScenario hour(Quantity::count(150), Quantity::count(100), Quantity::hours(1));
    CHECK(hour == scenario(150, 100, 60));
}

TEST_CASE("non-integral answers stay exact, ceiling is separate") {
    // k = 1/9, so 100 sandwiches in 40 minutes needs 100 * 9 / 40 bakers.
    const Rational x = solve_rate(find_subjects(scenario(40, 3, 120), 100, 40));
    CHECK(x == Rational::normalize(45, 2));
    CHECK(ceil_subjects(x) == 23);
    CHECK(ceil_subjects(Rational(12)) == 12);
    CHECK(ceil_subjects(Rational::normalize(10, 3)) == 4);
    CHECK(ceil_subjects(Rational(80)) == 80);
    CHECK_THROWS_AS(ceil_subjects(Rational(0)), InvalidInstance);
    CHECK_THROWS_AS(ceil_subjects(Rational(-2)), InvalidInstance);
}

TEST_CASE("degenerate inputs are rejected at construction") {
    CHECK_THROWS_AS(scenario(0, 1, 1), InvalidInstance);
    CHECK_THROWS_AS(scenario(1, 0, 1), InvalidInstance);
    CHECK_THROWS_AS(scenario(1, 1, 0), InvalidInstance);
    CHECK_THROWS_AS(RateScenario(Quantity::count(1), Quantity::count(1), Quantity::count(1)), InvalidInstance);
    CHECK_THROWS_AS(find_subjects(scenario(1, 1, 1), 0, 5), InvalidInstance);
    CHECK_THROWS_AS(RateQuery(scenario(1, 1, 1), RateField::subjects, Quantity::minutes(3), Quantity::minutes(5)),
                    InvalidInstance);
}

TEST_CASE("given() refuses the unknown") {
    const RateQuery q = find_subjects(scenario(6, 6, 6), 100, 50);
    CHECK(q.given(RateField::work).magnitude == Rational(100));
    CHECK(q.given(RateField::time).magnitude == Rational(50));
    CHECK_THROWS_AS(q.given(RateField::subjects), std::invalid_argument);
}

TEST_CASE("property: substitution, k-invariance, proportion route, symmetry") {
    testing::Gen gen(7);
    for (int i = 0; i < 300; ++i) {
        const RateQuery q = gen.rate_query();
        const Rational x = solve_rate(q);
        CHECK(x.is_positive());
        CHECK(rate_constant(complete(q, x)) == rate_constant(q.known()));
        CHECK(solve_rate_by_proportion(q) == x);

        const Rational lambda = gen.positive_rational();
        const auto& k = q.known();
        auto scaled = [&](bool scale_subjects) {
            const RateScenario s(Quantity::count(k.work().magnitude * lambda),
                                 scale_subjects ? Quantity::count(k.subjects().magnitude * lambda) : k.subjects(),
                                 scale_subjects ? k.time() : Quantity::minutes(k.time().magnitude * lambda));
            auto [a, b] = std::pair{q.target() == RateField::work ? RateField::subjects : RateField::work,
                                    q.target() == RateField::time ? RateField::subjects : RateField::time};
            return RateQuery(s, q.target(), q.given(a), q.given(b));
        };
        CHECK(solve_rate(scaled(true)) == x);
        CHECK(solve_rate(scaled(false)) == x);

        if (q.target() == RateField::subjects) {
            const RateScenario done = complete(q, x);
            const RateQuery back(q.known(), RateField::time, done.work(), done.subjects());
            CHECK(solve_rate(back) == q.given(RateField::time).magnitude);
        }
    }
}
