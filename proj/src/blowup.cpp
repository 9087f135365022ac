#include "bautin/blowup.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bautin {

namespace {

void validate(const Ideal& ideal) {
    if (ideal.generators.empty())
        throw std::invalid_argument("ideal needs at least one generator");
    for (const auto& g : ideal.generators) {
        if (g.is_zero()) throw std::invalid_argument("ideal generators must be nonzero");
        for (const auto& v : g.vars())
            if (std::find(ideal.vars.begin(), ideal.vars.end(), v) == ideal.vars.end())
                throw std::invalid_argument("generator uses undeclared variable '" + v + "'");
    }
    if (!ideal.factored.empty() && ideal.factored.size() != ideal.generators.size())
        throw std::invalid_argument("factored list size must match generator count");
}

}  // namespace

Ideal Ideal::make(std::vector<std::string> vars, std::vector<Poly> gens) {
    Ideal ideal{std::move(vars), std::move(gens), {}};
    validate(ideal);
    return ideal;
}

Ideal Ideal::make_factored(std::vector<std::string> vars,
                           std::vector<std::vector<Poly>> factor_lists) {
    Ideal ideal;
    ideal.vars = std::move(vars);
    ideal.factored = std::move(factor_lists);
    for (const auto& fl : ideal.factored) {
        Poly prod = Poly::constant(Rat(1));
        for (const auto& f : fl) prod *= f;
        ideal.generators.push_back(std::move(prod));
    }
    validate(ideal);
    return ideal;
}

Ideal ideal_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object()) throw ParseError("ideal JSON must be an object", 0);
    if (!j.contains("vars") || !j["vars"].is_array())
        throw ParseError("ideal JSON needs array field 'vars'", 0);
    std::vector<std::string> vars;
    for (const auto& v : j["vars"]) {
        if (!v.is_string()) throw ParseError("ideal variable names must be strings", 0);
        vars.push_back(v.get<std::string>());
    }
    auto parse_poly = [&](const nlohmann::ordered_json& node, const char* where) {
        if (!node.is_string())
            throw ParseError(std::string("ideal ") + where + " entries must be strings", 0);
        return Poly::parse(node.get<std::string>(), vars);
    };
    if (j.contains("factored_generators")) {
        if (!j["factored_generators"].is_array())
            throw ParseError("'factored_generators' must be an array of arrays", 0);
        std::vector<std::vector<Poly>> lists;
        for (const auto& fl : j["factored_generators"]) {
            if (!fl.is_array())
                throw ParseError("'factored_generators' must be an array of arrays", 0);
            std::vector<Poly> factors;
            for (const auto& f : fl) factors.push_back(parse_poly(f, "factor"));
            lists.push_back(std::move(factors));
        }
        Ideal ideal = Ideal::make_factored(vars, std::move(lists));
        if (j.contains("generators")) {
            if (!j["generators"].is_array() ||
                j["generators"].size() != ideal.generators.size())
                throw ParseError("'generators' does not match 'factored_generators'", 0);
            for (std::size_t i = 0; i < ideal.generators.size(); ++i)
                if (parse_poly(j["generators"][static_cast<int>(i)], "generator") !=
                    ideal.generators[i])
                    throw ParseError("generator " + std::to_string(i) +
                                         " disagrees with its factored form",
                                     0);
        }
        return ideal;
    }
    if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
        throw ParseError("ideal JSON needs a nonempty 'generators' array", 0);
    std::vector<Poly> gens;
    for (const auto& g : j["generators"]) gens.push_back(parse_poly(g, "generator"));
    return Ideal::make(std::move(vars), std::move(gens));
}

nlohmann::ordered_json ideal_to_json(const Ideal& ideal) {
    nlohmann::ordered_json j;
    j["vars"] = ideal.vars;
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (const auto& g : ideal.generators) gens.push_back(g.str());
    j["generators"] = std::move(gens);
    if (!ideal.factored.empty()) {
        nlohmann::ordered_json lists = nlohmann::ordered_json::array();
        for (const auto& fl : ideal.factored) {
            nlohmann::ordered_json factors = nlohmann::ordered_json::array();
            for (const auto& f : fl) factors.push_back(f.str());
            lists.push_back(std::move(factors));
        }
        j["factored_generators"] = std::move(lists);
    }
    return j;
}

ProjPoint ProjPoint::canonical(RatVec raw) {
    bool all_zero = std::all_of(raw.begin(), raw.end(),
                                [](const Rat& c) { return c.is_zero(); });
    if (raw.empty() || all_zero)
        throw std::invalid_argument("projective point needs a nonzero coordinate");
    BigInt den_lcm = 1;
    for (const auto& c : raw)
        den_lcm = boost::multiprecision::lcm(den_lcm, c.denominator());
    BigInt num_gcd = 0;
    std::vector<BigInt> ints;
    ints.reserve(raw.size());
    for (const auto& c : raw) {
        BigInt v = c.numerator() * (den_lcm / c.denominator());
        num_gcd = boost::multiprecision::gcd(num_gcd, v);
        ints.push_back(std::move(v));
    }
    int flip = 1;
    for (const auto& v : ints) {
        if (v != 0) {
            flip = v < 0 ? -1 : 1;
            break;
        }
    }
    ProjPoint p;
    p.coords.reserve(ints.size());
    for (auto& v : ints) p.coords.push_back(Rat(v * flip / num_gcd));
    return p;
}

std::string ProjPoint::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ":";
        os << coords[i].str();
    }
    os << "]";
    return os.str();
}

OrderResult order_of_arc(const Ideal& ideal, const Arc& arc) {
    OrderResult res;
    res.truncation = arc.truncation();
    std::vector<Jet> jets;
    jets.reserve(ideal.generators.size());
    std::optional<int> best;
    for (const auto& g : ideal.generators) {
        Jet j = eval_on_arc(g, arc);
        auto v = j.valuation();
        if (v && (!best || *v < *best)) best = *v;
        jets.push_back(std::move(j));
    }
    if (!best) return res;  // zero set to truncation: undetermined
    res.order = best;
    res.leading.reserve(jets.size());
    for (const auto& j : jets) res.leading.push_back(j.coeff(*best));
    res.point = ProjPoint::canonical(res.leading);
    return res;
}

SymOrderResult order_of_arc_sym(const Ideal& ideal, const ArcP& arc) {
    SymOrderResult res;
    res.truncation = arc.truncation();
    std::vector<JetT<Poly>> jets;
    jets.reserve(ideal.generators.size());
    std::optional<int> best;
    for (const auto& g : ideal.generators) {
        JetT<Poly> j = eval_on_arc(g, arc);
        auto v = j.valuation();
        if (v && (!best || *v < *best)) best = *v;
        jets.push_back(std::move(j));
    }
    if (!best) return res;
    res.order = best;
    res.leading.reserve(jets.size());
    for (const auto& j : jets) res.leading.push_back(j.coeff(*best));
    return res;
}

ProjPoint exceptional_point(const Ideal& ideal, const Arc& arc) {
    OrderResult r = order_of_arc(ideal, arc);
    if (!r.determined())
        throw UndeterminedError(
            "arc lies in the zero set up to truncation " + std::to_string(r.truncation) +
                "; raise the truncation or reject the arc",
            r.truncation);
    return *r.point;
}

ProjPoint proj_limit_at_zero(const std::vector<Poly>& coords, const std::string& param) {
    int min_ord = -1;
    for (const auto& p : coords) {
        if (p.is_zero()) continue;
        int ord = 0;
        while (p.coeff_of(param, static_cast<unsigned>(ord)).is_zero()) ++ord;
        if (min_ord < 0 || ord < min_ord) min_ord = ord;
    }
    if (min_ord < 0)
        throw std::invalid_argument("projective limit of the zero vector");
    RatVec at_zero;
    at_zero.reserve(coords.size());
    for (const auto& p : coords) {
        Poly c = p.coeff_of(param, static_cast<unsigned>(min_ord));
        if (c.total_degree() > 0)
            throw std::invalid_argument("projective limit coordinates must be constants");
        at_zero.push_back(c.is_zero() ? Rat(0) : c.terms().begin()->second);
    }
    return ProjPoint::canonical(std::move(at_zero));
}

bool in_zero_set(const Ideal& ideal, const RatVec& point) {
    if (point.size() != ideal.vars.size())
        throw std::invalid_argument("point dimension does not match ideal variables");
    std::vector<std::pair<std::string, Rat>> assign;
    assign.reserve(point.size());
    for (std::size_t i = 0; i < point.size(); ++i)
        assign.emplace_back(ideal.vars[i], point[i]);
    for (const auto& g : ideal.generators) {
        std::vector<std::pair<std::string, Rat>> sub;
        for (const auto& v : g.vars())
            for (const auto& [name, val] : assign)
                if (name == v) sub.emplace_back(name, val);
        if (!g.eval(sub).is_zero()) return false;
    }
    return true;
}

std::optional<int> filtration_level(const Ideal& ideal, const Arc& arc) {
    return order_of_arc(ideal, arc).order;
}

InvarianceReport generator_invariance_check(const Ideal& ideal_a, const Ideal& ideal_b,
                                            const std::vector<Arc>& arcs) {
    InvarianceReport rep;
    // group arcs by center, exact coordinates
    std::map<std::string, std::vector<const Arc*>> groups;
    for (const auto& arc : arcs) {
        std::string key;
        for (const auto& v : ideal_a.vars) key += arc.jet(v).coeff(0).str() + ";";
        groups[key].push_back(&arc);
    }
    rep.groups = static_cast<int>(groups.size());
    for (const auto& [key, members] : groups) {
        RatMat lead_a;
        RatMat lead_b;
        for (const Arc* arc : members) {
            OrderResult ra = order_of_arc(ideal_a, *arc);
            OrderResult rb = order_of_arc(ideal_b, *arc);
            ++rep.arcs_checked;
            if (ra.order != rb.order) {
                rep.orders_equal = false;
                if (rep.first_mismatch.empty()) {
                    std::ostringstream os;
                    os << "orders differ at center " << key << ": "
                       << (ra.determined() ? std::to_string(*ra.order) : "UNDETERMINED")
                       << " vs "
                       << (rb.determined() ? std::to_string(*rb.order) : "UNDETERMINED");
                    rep.first_mismatch = os.str();
                }
                continue;
            }
            if (!ra.determined()) continue;
            lead_a.push_back(ra.leading);
            lead_b.push_back(rb.leading);
        }
        if (lead_a.empty()) continue;
        // Fixed linear correspondence on this center: every coordinate of the
        // second leading vector must be a linear function of the first across
        // all samples, i.e. each column of B lies in the column space of A.
        int base_rank = rank(lead_a);
        for (std::size_t col = 0; col < lead_b[0].size(); ++col) {
            RatVec b;
            b.reserve(lead_b.size());
            for (const auto& row : lead_b) b.push_back(row[col]);
            if (rank_augmented(lead_a, b) != base_rank) {
                rep.map_consistent = false;
                if (rep.first_mismatch.empty())
                    rep.first_mismatch =
                        "no fixed linear map reproduces leading coordinate " +
                        std::to_string(col) + " at center " + key;
                break;
            }
        }
    }
    return rep;
}

FiberDimension fiber_dimension_sample(const Ideal& ideal,
                                      const std::vector<ArcSampler>& samplers,
                                      int trials, std::uint64_t seed) {
    if (samplers.empty()) throw std::invalid_argument("need at least one arc sampler");
    FiberDimension out;
    out.trials = trials;
    Rng rng(seed);
    RatMat leads;
    for (int t = 0; t < trials; ++t) {
        Arc arc = samplers[static_cast<std::size_t>(t) % samplers.size()](rng);
        OrderResult r = order_of_arc(ideal, arc);
        if (!r.determined()) {
            ++out.undetermined;
            continue;
        }
        leads.push_back(r.leading);
    }
    if (leads.empty())
        throw UndeterminedError("all sampled arcs were undetermined", kDefaultTruncation);
    out.rank = rank(leads);
    out.dimension = out.rank - 1;
    return out;
}

nlohmann::ordered_json order_result_to_json(const OrderResult& r) {
    nlohmann::ordered_json j;
    if (r.determined()) {
        j["order"] = *r.order;
        nlohmann::ordered_json lead = nlohmann::ordered_json::array();
        for (const auto& c : r.leading) lead.push_back(c.str());
        j["leading"] = std::move(lead);
        nlohmann::ordered_json pt = nlohmann::ordered_json::array();
        for (const auto& c : r.point->coords) pt.push_back(c.str());
        j["point"] = std::move(pt);
    } else {
        j["order"] = nullptr;
        j["leading"] = nlohmann::ordered_json::array();
        j["point"] = nlohmann::ordered_json::array();
    }
    j["truncation"] = r.truncation;
    return j;
}

}  // namespace bautin
