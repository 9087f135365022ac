#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bautin/aksing.hpp"
#include "bautin/rng.hpp"

#include "frozen_data.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <vector>

using namespace bautin;

namespace {

Arc arc_from_sample(const frozen::AkSample& s, int trunc = kDefaultTruncation) {
    Arc arc(trunc);
    Jet x(trunc), y(trunc);
    for (const auto& [p, c] : s.x) x.set_coeff(p, testutil::pr(c));
    for (const auto& [p, c] : s.y) y.set_coeff(p, testutil::pr(c));
    arc.set("x", x);
    arc.set("y", y);
    return arc;
}

Arc random_origin_arc(Rng& rng, int trunc = kDefaultTruncation) {
    Arc arc(trunc);
    Jet x(trunc), y(trunc);
    bool nonzero = false;
    for (int k = 1; k <= trunc; ++k) {
        if (rng.below(3) == 0) {
            x.set_coeff(k, Rat(rng.integer(-9, 9)));
            nonzero = nonzero || !x.coeff(k).is_zero();
        }
        if (rng.below(3) == 0) {
            y.set_coeff(k, Rat(rng.integer(-9, 9)));
            nonzero = nonzero || !y.coeff(k).is_zero();
        }
    }
    if (!nonzero) x.set_coeff(1, Rat(1));
    arc.set("x", x);
    arc.set("y", y);
    return arc;
}

}  // namespace

TEST_CASE("the classifying ideal has the two expected generators") {
    Ideal i3 = ak_ideal(3);
    REQUIRE(i3.vars == std::vector<std::string>{"x", "y"});
    REQUIRE(i3.generators.size() == 2);
    CHECK(i3.generators[0] == Poly::variable("x"));
    CHECK(i3.generators[1] == Poly::parse("y^4"));
    CHECK_THROWS_AS(ak_ideal(0), std::invalid_argument);
}

TEST_CASE("frozen classification samples") {
    for (const auto& s : frozen::ak_samples()) {
        CAPTURE(s.k);
        Arc arc = arc_from_sample(s);
        if (s.undetermined) {
            CHECK_THROWS_AS(ak_classify(s.k, arc), UndeterminedError);
            continue;
        }
        AkResult r = ak_classify(s.k, arc);
        CHECK(r.component == s.component);
        CHECK(r.order == s.order);
        CHECK(r.point == testutil::point_of(s.point));
        CHECK(ak_center(s.k, arc) == r.point);
    }
}

TEST_CASE("arcs not centered at the origin are rejected") {
    Arc arc(6);
    arc.set("x", Jet::constant(Rat(1), 6));
    arc.set("y", Jet::monomial(Rat(1), 1, 6));
    CHECK_THROWS_AS(ak_classify(2, arc), std::invalid_argument);

    Arc missing(6);
    missing.set("x", Jet::monomial(Rat(1), 1, 6));
    CHECK_THROWS_AS(ak_classify(2, missing), std::invalid_argument);

    Arc ok(6);
    ok.set("x", Jet::monomial(Rat(1), 1, 6));
    ok.set("y", Jet::monomial(Rat(1), 1, 6));
    CHECK_THROWS_AS(ak_classify(0, ok), std::invalid_argument);
}

TEST_CASE("component and order agree with the raw valuations") {
    Rng rng(5001);
    const int ks[] = {1, 2, 3, 5};
    int checked = 0;
    while (checked < 1000) {
        int k = ks[rng.below(4)];
        Arc arc = random_origin_arc(rng);
        auto vx = arc.jet("x").valuation();
        auto vy = arc.jet("y").valuation();
        AkResult r;
        try {
            r = ak_classify(k, arc);
        } catch (const UndeterminedError&) {
            // only legitimate when x == 0 and (k+1)*val(y) exceeds truncation
            REQUIRE_FALSE(vx.has_value());
            REQUIRE((!vy.has_value() || (k + 1) * *vy > arc.truncation()));
            continue;
        }
        int expected_order = arc.truncation() + 1;
        if (vx) expected_order = std::min(expected_order, *vx);
        if (vy && (k + 1) * *vy <= arc.truncation())
            expected_order = std::min(expected_order, (k + 1) * *vy);
        REQUIRE(r.order == expected_order);
        int expected_comp = std::min(vx.value_or(k + 1), k + 1);
        REQUIRE(r.component == expected_comp);
        REQUIRE(r.component >= 1);
        REQUIRE(r.component <= k + 1);
        if (r.component <= k) REQUIRE(r.order == r.component);

        // the generic machinery computes the same data on the ideal (x, y^{k+1})
        OrderResult general = order_of_arc(ak_ideal(k), arc);
        REQUIRE(general.determined());
        REQUIRE(*general.order == r.order);
        REQUIRE(*general.point == r.point);
        ++checked;
    }
}

TEST_CASE("classification is stable under tail perturbations") {
    Rng rng(5002);
    const int ks[] = {1, 2, 3, 5};
    int checked = 0;
    while (checked < 1000) {
        int k = ks[rng.below(4)];
        Arc arc = random_origin_arc(rng);
        AkResult before;
        try {
            before = ak_classify(k, arc);
        } catch (const UndeterminedError&) {
            continue;
        }
        if (before.order + 1 > arc.truncation()) continue;
        Arc tweaked = arc;
        const char* var = rng.below(2) == 0 ? "x" : "y";
        // y enters through y^{k+1}: its own safe tail starts above order/(k+1)
        int lo = var[0] == 'x' ? before.order + 1 : before.order / (k + 1) + 1;
        if (lo > arc.truncation()) continue;
        int at = lo + static_cast<int>(
                          rng.below(static_cast<std::uint64_t>(arc.truncation() - lo + 1)));
        tweaked.set_coeff(var, at, tweaked.jet(var).coeff(at) + Rat(rng.nonzero_integer(-9, 9)));
        AkResult after = ak_classify(k, tweaked);
        REQUIRE(after.component == before.component);
        ++checked;
    }
}

TEST_CASE("top-component centers fill out the projective line") {
    for (int k : {1, 2, 3, 5}) {
        AkEssentialReport rep = ak_essential_set(k, 40, 99000 + k);
        CHECK(rep.k == k);
        CHECK(rep.essential_component == k + 1);
        CHECK(rep.trials == 40);
        CHECK(rep.sampled_rank == 2);
        CHECK(rep.pass());
    }
}

TEST_CASE("classification reports serialize") {
    Arc arc = arc_from_sample(frozen::ak_samples()[0]);
    AkResult r = ak_classify(1, arc);
    nlohmann::ordered_json j = ak_result_to_json(r);
    CHECK(j["component"] == 1);
    CHECK(j["order"] == 1);
    CHECK(j["point"] == "[1:0]");
    nlohmann::ordered_json ej = ak_essential_to_json(ak_essential_set(1, 10, 1));
    CHECK(ej["essential_component"] == 2);
}
