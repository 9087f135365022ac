#include "bautin/aksing.hpp"

#include "bautin/linalg.hpp"
#include "bautin/rng.hpp"

namespace bautin {

Ideal ak_ideal(int k) {
    if (k < 1) throw std::invalid_argument("ak_ideal needs k >= 1");
    Poly x = Poly::variable("x");
    Poly y = Poly::variable("y");
    return Ideal::make({"x", "y"}, {x, y.pow(static_cast<unsigned>(k + 1))});
}

AkResult ak_classify(int k, const Arc& arc) {
    if (k < 1) throw std::invalid_argument("ak_classify needs k >= 1");
    const Jet& xj = arc.jet("x");
    const Jet& yj = arc.jet("y");
    if (!xj.coeff(0).is_zero() || !yj.coeff(0).is_zero())
        throw std::invalid_argument("arc is not centered at the origin");
    int trunc = std::min(xj.truncation(), yj.truncation());

    std::optional<int> vx = xj.valuation();
    std::optional<int> vy = yj.valuation();
    std::optional<int> vy1;
    if (vy) vy1 = (k + 1) * *vy;
    if (!vx && (!vy1 || *vy1 > trunc))
        throw UndeterminedError(
            "component of the arc is not visible at this truncation", trunc);

    int order = std::min(vx.value_or(*vy1 + 1), vy1.value_or(*vx + 1));
    AkResult r;
    r.component = std::min(vx.value_or(k + 1), k + 1);
    r.order = order;
    Rat a = (vx && *vx == order) ? xj.coeff(order) : Rat(0);
    Rat b = (vy1 && *vy1 == order) ? yj.coeff(*vy).pow(static_cast<unsigned>(k + 1))
                                   : Rat(0);
    r.point = ProjPoint::canonical({a, b});
    return r;
}

ProjPoint ak_center(int k, const Arc& arc) {
    return exceptional_point(ak_ideal(k), arc);
}

AkEssentialReport ak_essential_set(int k, int trials, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("ak_essential_set needs k >= 1");
    if ((k + 1) > kDefaultTruncation)
        throw std::invalid_argument("k + 1 exceeds the arc truncation order");
    AkEssentialReport rep;
    rep.k = k;
    rep.essential_component = k + 1;
    rep.trials = trials;

    Rng rng(seed);
    RatMat centers;
    for (int t = 0; t < trials; ++t) {
        // a top-component arc: x starts at eps^{k+1} (or vanishes), y at eps
        Rat a = rng.rational_box(-9, 9);
        Rat b = rng.rational_box(-9, 9);
        while (a.is_zero() && b.is_zero()) {
            a = rng.rational_box(-9, 9);
            b = rng.rational_box(-9, 9);
        }
        Arc arc(kDefaultTruncation);
        Jet xj(kDefaultTruncation), yj(kDefaultTruncation);
        xj.set_coeff(k + 1, a);
        if (k + 2 <= kDefaultTruncation) xj.set_coeff(k + 2, rng.rational_box(-9, 9));
        yj.set_coeff(1, b);
        yj.set_coeff(2, rng.rational_box(-9, 9));
        arc.set("x", std::move(xj));
        arc.set("y", std::move(yj));
        AkResult res = ak_classify(k, arc);
        if (res.component != k + 1)
            throw std::logic_error("sampler left the top component");
        centers.push_back(res.point.coords);
    }
    rep.sampled_rank = rank(centers);
    return rep;
}

nlohmann::ordered_json ak_result_to_json(const AkResult& r) {
    nlohmann::ordered_json j;
    j["component"] = r.component;
    j["order"] = r.order;
    j["point"] = r.point.str();
    return j;
}

nlohmann::ordered_json ak_essential_to_json(const AkEssentialReport& r) {
    nlohmann::ordered_json j;
    j["k"] = r.k;
    j["essential_component"] = r.essential_component;
    j["trials"] = r.trials;
    j["sampled_rank"] = r.sampled_rank;
    j["pass"] = r.pass();
    return j;
}

}  // namespace bautin
