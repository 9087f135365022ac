#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bautin/blowup.hpp"
#include "bautin/kapteyn.hpp"
#include "bautin/rng.hpp"

#include "frozen_data.hpp"
#include "test_util.hpp"

#include <string>
#include <vector>

using namespace bautin;

namespace {

Arc random_lambda_arc(Rng& rng, int trunc = kDefaultTruncation) {
    Arc arc(trunc);
    for (const auto& n : kLambdaVars) {
        Jet j(trunc);
        for (int k = 0; k <= trunc; ++k)
            if (rng.below(3) == 0) j.set_coeff(k, Rat(rng.integer(-4, 4)));
        arc.set(n, j);
    }
    return arc;
}

FamilyId random_nonwitness(Rng& rng) {
    std::vector<FamilyId> nonwit;
    for (FamilyId id : all_families())
        if (!is_witness(id)) nonwit.push_back(id);
    return nonwit[rng.below(nonwit.size())];
}

}  // namespace

TEST_CASE("projective canonical form clears denominators, gcd, and sign") {
    ProjPoint p = ProjPoint::canonical({Rat(-2, 3), Rat(4, 9)});
    CHECK(p.coords == RatVec{Rat(3), Rat(-2)});
    CHECK(p.str() == "[3:-2]");
    CHECK(ProjPoint::canonical({Rat(0), Rat(-5)}).coords == RatVec{Rat(0), Rat(1)});
    CHECK(ProjPoint::canonical({Rat(6), Rat(-9), Rat(3)}).coords ==
          RatVec{Rat(2), Rat(-3), Rat(1)});
    CHECK(ProjPoint::canonical({Rat(1, 2)}).coords == RatVec{Rat(1)});
    CHECK_THROWS_AS(ProjPoint::canonical({Rat(0), Rat(0)}), std::invalid_argument);
    CHECK_THROWS_AS(ProjPoint::canonical({}), std::invalid_argument);
    // scaling never changes the canonical form
    Rng rng(3000);
    for (int i = 0; i < 200; ++i) {
        RatVec v;
        bool nonzero = false;
        for (int k = 0; k < 4; ++k) {
            v.push_back(Rat(rng.integer(-9, 9), rng.nonzero_integer(1, 9)));
            nonzero = nonzero || !v.back().is_zero();
        }
        if (!nonzero) continue;
        Rat c(rng.nonzero_integer(-9, 9), rng.nonzero_integer(1, 9));
        RatVec w;
        for (const auto& x : v) w.push_back(x * c);
        REQUIRE(ProjPoint::canonical(v) == ProjPoint::canonical(w));
    }
}

TEST_CASE("ideal JSON round-trips with factored generators") {
    Ideal ideal = bautin_ideal();
    Ideal back = ideal_from_json(ideal_to_json(ideal));
    REQUIRE(back.vars == ideal.vars);
    REQUIRE(back.generators.size() == ideal.generators.size());
    for (std::size_t i = 0; i < ideal.generators.size(); ++i)
        REQUIRE(back.generators[i] == ideal.generators[i]);
    REQUIRE(back.factored.size() == ideal.factored.size());

    Ideal plain = Ideal::make({"x", "y"}, {Poly::parse("x"), Poly::parse("y^2")});
    Ideal pback = ideal_from_json(ideal_to_json(plain));
    CHECK(pback.generators[1] == Poly::parse("y^2"));
    CHECK(pback.factored.empty());
}

TEST_CASE("order, leading vector, and point on a two-generator ideal") {
    Ideal ideal = Ideal::make({"x", "y"}, {Poly::parse("x"), Poly::parse("y^2")});
    Arc arc(8);
    arc.set("x", Jet::monomial(Rat(1), 3, 8));
    arc.set("y", Jet::monomial(Rat(2), 1, 8));
    OrderResult r = order_of_arc(ideal, arc);
    REQUIRE(r.determined());
    CHECK(*r.order == 2);
    CHECK(r.leading == RatVec{Rat(0), Rat(4)});
    CHECK(r.point->coords == RatVec{Rat(0), Rat(1)});
    CHECK(r.truncation == 8);
    CHECK(exceptional_point(ideal, arc) == *r.point);
    CHECK(filtration_level(ideal, arc) == 2);
}

TEST_CASE("arcs inside the zero set are reported undetermined, not thrown") {
    Ideal ideal = Ideal::make({"x", "y"}, {Poly::parse("x"), Poly::parse("y^2")});
    Arc arc(7);
    arc.set("x", Jet(7));
    arc.set("y", Jet(7));
    OrderResult r = order_of_arc(ideal, arc);
    CHECK_FALSE(r.determined());
    CHECK(r.truncation == 7);
    CHECK_FALSE(filtration_level(ideal, arc).has_value());
    try {
        exceptional_point(ideal, arc);
        FAIL("expected UndeterminedError");
    } catch (const UndeterminedError& e) {
        CHECK(e.truncation == 7);
    }
}

TEST_CASE("projective limits strip the common parameter power") {
    Poly d = Poly::variable("delta");
    CHECK(proj_limit_at_zero({(d * d).scaled(Rat(2)), (d * d).scaled(Rat(6))}, "delta")
              .coords == RatVec{Rat(1), Rat(3)});
    CHECK(proj_limit_at_zero({d, d * d}, "delta").coords == RatVec{Rat(1), Rat(0)});
    CHECK(proj_limit_at_zero({Poly(2), Poly(4)}, "delta").coords ==
          RatVec{Rat(1), Rat(2)});
    CHECK_THROWS_AS(proj_limit_at_zero({Poly(), Poly()}, "delta"),
                    std::invalid_argument);
    // a coordinate mixing the parameter with another symbol has no constant limit
    Poly mixed = d * Poly::variable("t");
    CHECK_THROWS_AS(proj_limit_at_zero({mixed, d}, "delta"), std::invalid_argument);
}

TEST_CASE("zero-set membership for the center-set generators") {
    Ideal ideal = bautin_ideal();
    CHECK(in_zero_set(ideal, testutil::parse_vec({"0", "1", "1", "1", "1", "1"})));
    CHECK(in_zero_set(ideal, testutil::parse_vec({"0", "0", "0", "0", "0", "0"})));
    CHECK_FALSE(in_zero_set(ideal, testutil::parse_vec({"1", "0", "0", "0", "0", "0"})));
    CHECK_FALSE(in_zero_set(ideal, testutil::parse_vec({"0", "1", "1", "1", "1", "2"})));
    CHECK_THROWS_AS(in_zero_set(ideal, RatVec{Rat(0)}), std::invalid_argument);
}

TEST_CASE("filtration is monotone and stable under truncation above the order") {
    Rng rng(3001);
    Ideal ideal = bautin_ideal();
    for (int i = 0; i < 200; ++i) {
        Arc arc = random_lambda_arc(rng);
        auto lvl = filtration_level(ideal, arc);
        if (!lvl) continue;
        REQUIRE(*lvl >= 0);
        // membership in step k is monotone in k by definition of the level
        auto member = [&](int k) { return *lvl <= k; };
        for (int k = 0; k < arc.truncation(); ++k)
            if (member(k)) REQUIRE(member(k + 1));
        // recomputing at any truncation >= the order reproduces the level
        for (int n = *lvl; n <= arc.truncation(); n += 3) {
            Arc cut(n);
            for (const auto& [name, j] : arc.components()) cut.set(name, j.truncated(n));
            auto lvl2 = filtration_level(ideal, cut);
            REQUIRE(lvl2.has_value());
            REQUIRE(*lvl2 == *lvl);
        }
    }
}

TEST_CASE("order and canonical point are reparameterization invariants") {
    Rng rng(3002);
    Ideal ideal = bautin_ideal();
    const Rat factors[] = {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(3), Rat(-3), Rat(1, 2)};
    for (int i = 0; i < 1000; ++i) {
        Arc arc = random_lambda_arc(rng, 10);
        Rat c = factors[rng.below(7)];
        OrderResult a = order_of_arc(ideal, arc);
        OrderResult b = order_of_arc(ideal, reparameterize(arc, c));
        REQUIRE(a.determined() == b.determined());
        if (!a.determined()) continue;
        REQUIRE(*a.order == *b.order);
        REQUIRE(*a.point == *b.point);
    }
}

TEST_CASE("coefficients above the order never affect order or point") {
    Rng rng(3003);
    Ideal ideal = bautin_ideal();
    int checked = 0;
    while (checked < 1000) {
        FamilyId fid = random_nonwitness(rng);
        Arc arc = essential_family(sample_family(fid, rng));
        OrderResult before = order_of_arc(ideal, arc);
        REQUIRE(before.determined());
        int k = *before.order;
        if (k + 1 > arc.truncation()) continue;
        Arc tweaked = arc;
        const std::string& var = kLambdaVars[rng.below(6)];
        int at = k + 1 + static_cast<int>(rng.below(
                             static_cast<std::uint64_t>(arc.truncation() - k)));
        tweaked.set_coeff(var, at,
                          tweaked.jet(var).coeff(at) + Rat(rng.nonzero_integer(-9, 9)));
        OrderResult after = order_of_arc(ideal, tweaked);
        REQUIRE(after.determined());
        REQUIRE(*after.order == k);
        REQUIRE(*after.point == *before.point);
        ++checked;
    }
}

TEST_CASE("perturbing the leading block can lower but never raise the order") {
    Rng rng(3004);
    Ideal ideal = bautin_ideal();
    int checked = 0;
    while (checked < 500) {
        FamilyId fid = random_nonwitness(rng);
        Arc arc = essential_family(sample_family(fid, rng));
        OrderResult before = order_of_arc(ideal, arc);
        REQUIRE(before.determined());
        int k = *before.order;
        if (k < 1) continue;
        Arc tweaked = arc;
        const std::string& var = kLambdaVars[rng.below(6)];
        int at = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
        tweaked.set_coeff(var, at,
                          tweaked.jet(var).coeff(at) + Rat(rng.nonzero_integer(-9, 9)));
        OrderResult after = order_of_arc(ideal, tweaked);
        REQUIRE(after.determined());
        REQUIRE(*after.order <= k);
        ++checked;
    }
}

TEST_CASE("leading vectors on the reference arc match frozen values in both bases") {
    Arc arc = testutil::arc_of(testutil::record("I13_A", "anchor"));
    OrderResult local = order_of_arc(localized_generators(Stratum::I13), arc);
    OrderResult global = order_of_arc(bautin_ideal(), arc);
    REQUIRE(local.determined());
    REQUIRE(global.determined());
    CHECK(*local.order == *global.order);
    CHECK(local.leading == testutil::parse_vec(frozen::kInvarianceLeadingLocalized));
    CHECK(global.leading == testutil::parse_vec(frozen::kInvarianceLeadingGlobal));
}

TEST_CASE("generating-set invariance holds on stratum arcs and detects mismatches") {
    Rng rng(3005);
    std::vector<Arc> arcs;
    const FamilyId fams[] = {FamilyId::I13_A, FamilyId::I13_B, FamilyId::I13_C};
    for (int i = 0; i < 102; ++i)
        arcs.push_back(essential_family(sample_family(fams[i % 3], rng)));
    InvarianceReport rep = generator_invariance_check(
        bautin_ideal(), localized_generators(Stratum::I13), arcs);
    CHECK(rep.pass());
    CHECK(rep.arcs_checked == 102);
    CHECK(rep.groups >= 1);

    // localized lists of a different stratum are not equivalent on these arcs
    InvarianceReport bad = generator_invariance_check(
        bautin_ideal(), localized_generators(Stratum::I12), arcs);
    CHECK_FALSE(bad.pass());
    CHECK_FALSE(bad.first_mismatch.empty());
}

TEST_CASE("sampled fiber rank stabilizes when the trial count doubles") {
    auto sampler_for = [](FamilyId fid) {
        return [fid](Rng& rng) { return essential_family(sample_family(fid, rng)); };
    };
    struct Case {
        Stratum stratum;
        std::vector<FamilyId> fams;
    };
    const std::vector<Case> cases = {
        {Stratum::I1, {FamilyId::SMOOTH_I1}},
        {Stratum::I13, {FamilyId::I13_A, FamilyId::I13_B, FamilyId::I13_C}},
        {Stratum::ORIGIN, {FamilyId::ORIGIN_39}},
    };
    for (const auto& c : cases) {
        std::vector<ArcSampler> samplers;
        for (FamilyId f : c.fams) samplers.push_back(sampler_for(f));
        Ideal ideal = localized_generators(c.stratum);
        FiberDimension half = fiber_dimension_sample(ideal, samplers, 16, 7777);
        FiberDimension full = fiber_dimension_sample(ideal, samplers, 32, 7777);
        REQUIRE(full.rank >= half.rank);
        REQUIRE(full.rank == half.rank);
        REQUIRE(full.dimension == full.rank - 1);
        REQUIRE(full.trials == 32);
    }
}

TEST_CASE("sampled fiber dimensions reproduce the frozen table") {
    struct Row {
        Stratum stratum;
        std::vector<FamilyId> fams;
    };
    const std::vector<Row> rows = {
        {Stratum::I1, {FamilyId::SMOOTH_I1}},
        {Stratum::I2, {FamilyId::SMOOTH_I2}},
        {Stratum::I3, {FamilyId::SMOOTH_I3}},
        {Stratum::I4, {FamilyId::SMOOTH_I4}},
        {Stratum::I13, {FamilyId::I13_A, FamilyId::I13_B, FamilyId::I13_C}},
        {Stratum::I12, {FamilyId::I12}},
        {Stratum::I23, {FamilyId::I23}},
        {Stratum::I24, {FamilyId::I24}},
        {Stratum::I123, {FamilyId::I123}},
        {Stratum::ORIGIN, {FamilyId::ORIGIN_39}},
    };
    REQUIRE(frozen::table_rows().size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& expect = frozen::table_rows()[i];
        REQUIRE(testutil::stratum_of_short(expect.stratum) == rows[i].stratum);
        std::vector<ArcSampler> samplers;
        for (FamilyId f : rows[i].fams)
            samplers.push_back(
                [f](Rng& rng) { return essential_family(sample_family(f, rng)); });
        FiberDimension fd = fiber_dimension_sample(
            localized_generators(rows[i].stratum), samplers, 48, 424242 + i);
        REQUIRE(fd.rank == expect.rank);
        REQUIRE(fd.dimension == expect.dim);
        REQUIRE(fd.undetermined == 0);
    }
}
