#include "bautin/kapteyn.hpp"

#include <algorithm>
#include <sstream>

namespace bautin {

const std::vector<std::string> kLambdaVars = {"l1", "l2", "l3", "l4", "l5", "l6"};

namespace {

Poly lvar(int i) { return Poly::variable(kLambdaVars[static_cast<std::size_t>(i - 1)]); }

Poly poly_s() { return lvar(4) + lvar(3).scaled(Rat(5)) - lvar(6).scaled(Rat(5)); }
Poly poly_q() {
    return lvar(3) * lvar(6) - (lvar(6) * lvar(6)).scaled(Rat(2)) - lvar(2) * lvar(2);
}
Poly poly_c() { return lvar(3) - lvar(6); }

struct StratumRow {
    Stratum s;
    const char* name;
};

constexpr StratumRow kStrata[] = {
    {Stratum::I1, "I1"},
    {Stratum::I2, "I2"},
    {Stratum::I3, "I3"},
    {Stratum::I4, "I4"},
    {Stratum::I12, "I1∩I2"},
    {Stratum::I13, "I1∩I3"},
    {Stratum::I23, "I2∩I3"},
    {Stratum::I24, "I2∩I4"},
    {Stratum::I123, "I1∩I2∩I3"},
    {Stratum::ORIGIN, "ORIGIN"},
    {Stratum::NOT_IN_CENTER_SET, "NOT_IN_CENTER_SET"},
};

}  // namespace

std::string stratum_name(Stratum s) {
    for (const auto& row : kStrata)
        if (row.s == s) return row.name;
    return "?";
}

std::optional<Stratum> stratum_from_name(const std::string& name) {
    for (const auto& row : kStrata)
        if (name == row.name) return row.s;
    return std::nullopt;
}

I24Branch i24_branch(const RatVec& lam) {
    if (classify_stratum(lam) != Stratum::I24)
        throw std::invalid_argument("point is not on the I2∩I4 stratum");
    return lam[5].is_zero() ? I24Branch::LAMBDA6_ZERO : I24Branch::LAMBDA3_TWICE_LAMBDA6;
}

Ideal bautin_ideal() {
    return Ideal::make_factored(
        kLambdaVars,
        {{lvar(1)},
         {lvar(5), poly_c()},
         {lvar(2), lvar(4), poly_c(), poly_s()},
         {lvar(2), lvar(4), poly_c(), poly_c(), poly_q()}});
}

Stratum classify_stratum(const RatVec& lam) {
    if (lam.size() != 6)
        throw std::invalid_argument("stratum classification needs 6 coordinates");
    const Rat& a1 = lam[0];
    const Rat& a2 = lam[1];
    const Rat& a3 = lam[2];
    const Rat& a4 = lam[3];
    const Rat& a5 = lam[4];
    const Rat& a6 = lam[5];
    Rat s = a4 + Rat(5) * a3 - Rat(5) * a6;
    Rat q = a3 * a6 - Rat(2) * a6 * a6 - a2 * a2;
    bool in1 = a1.is_zero() && a3 == a6;
    bool in2 = a1.is_zero() && a2.is_zero() && a5.is_zero();
    bool in3 = a1.is_zero() && a4.is_zero() && a5.is_zero();
    bool in4 = a1.is_zero() && a5.is_zero() && s.is_zero() && q.is_zero();
    bool all_zero = std::all_of(lam.begin(), lam.end(),
                                [](const Rat& v) { return v.is_zero(); });
    if (all_zero) return Stratum::ORIGIN;
    if (in1 && in2 && in3) return Stratum::I123;
    if (in2 && in4) return Stratum::I24;
    if (in2 && in3) return Stratum::I23;
    if (in1 && in3) return Stratum::I13;
    if (in1 && in2) return Stratum::I12;
    if (in4) return Stratum::I4;
    if (in3) return Stratum::I3;
    if (in2) return Stratum::I2;
    if (in1) return Stratum::I1;
    return Stratum::NOT_IN_CENTER_SET;
}

Ideal localized_generators(Stratum s) {
    switch (s) {
        case Stratum::I1:
            return Ideal::make(kLambdaVars, {lvar(1), poly_c()});
        case Stratum::I2:
            return Ideal::make(kLambdaVars, {lvar(1), lvar(2), lvar(5)});
        case Stratum::I3:
            return Ideal::make(kLambdaVars, {lvar(1), lvar(4), lvar(5)});
        case Stratum::I4:
            return Ideal::make(kLambdaVars, {lvar(1), lvar(5), poly_s(), poly_q()});
        case Stratum::I13:
            return Ideal::make_factored(kLambdaVars,
                                        {{lvar(1)},
                                         {lvar(5), poly_c()},
                                         {lvar(4), lvar(4), poly_c()},
                                         {lvar(4), poly_c(), poly_c()}});
        case Stratum::I12:
            return Ideal::make_factored(
                kLambdaVars, {{lvar(1)}, {lvar(5), poly_c()}, {lvar(2), poly_c()}});
        case Stratum::I23:
            return Ideal::make_factored(kLambdaVars,
                                        {{lvar(1)}, {lvar(5)}, {lvar(2), lvar(4)}});
        case Stratum::I24:
            return Ideal::make_factored(
                kLambdaVars,
                {{lvar(1)}, {lvar(5)}, {lvar(2), poly_s()}, {lvar(2), poly_q()}});
        case Stratum::I123:
            return Ideal::make_factored(kLambdaVars,
                                        {{lvar(1)},
                                         {lvar(5), poly_c()},
                                         {lvar(2), lvar(4), lvar(4), poly_c()},
                                         {lvar(2), lvar(4), poly_c(), poly_c()}});
        case Stratum::ORIGIN:
            return bautin_ideal();
        case Stratum::NOT_IN_CENTER_SET:
            break;
    }
    throw std::invalid_argument("no localized generators for label " + stratum_name(s));
}

// ---------------------------------------------------------------------------
// family tables

namespace {

struct SlotDef {
    int coord;        // 1..6
    int power;        // eps exponent
    const char* name; // symbol
    bool mandatory;   // must be nonzero
};

struct FamilyDef {
    FamilyId id;
    const char* name;
    Stratum stratum;
    std::array<long long, 6> def_base;
    std::vector<SlotDef> slots;
    bool witness;
};

const std::vector<FamilyDef>& family_table() {
    static const std::vector<FamilyDef> defs = {
        {FamilyId::SMOOTH_I1, "SMOOTH_I1", Stratum::I1, {0, 1, 1, 1, 1, 1},
         {{1, 1, "l1_1", true}, {6, 1, "l6_1", true}}, false},
        {FamilyId::SMOOTH_I2, "SMOOTH_I2", Stratum::I2, {0, 0, 1, 1, 0, -1},
         {{1, 1, "l1_1", true}, {2, 1, "l2_1", true}, {5, 1, "l5_1", true}}, false},
        {FamilyId::SMOOTH_I3, "SMOOTH_I3", Stratum::I3, {0, 1, 1, 0, 0, -1},
         {{1, 1, "l1_1", true}, {4, 1, "l4_1", true}, {5, 1, "l5_1", true}}, false},
        {FamilyId::SMOOTH_I4, "SMOOTH_I4", Stratum::I4, {0, 1, 3, -10, 0, 1},
         {{1, 1, "l1_1", true}, {2, 1, "l2_1", true}, {4, 1, "l4_1", true},
          {5, 1, "l5_1", true}}, false},
        {FamilyId::I13_A, "I13_A", Stratum::I13, {0, 1, 1, 0, 0, 1},
         {{1, 3, "l1_3", true}, {3, 1, "l3_1", false}, {4, 1, "l4_1", true},
          {5, 2, "l5_2", true}, {6, 1, "l6_1", false}}, false},
        {FamilyId::I13_B, "I13_B", Stratum::I13, {0, 1, 1, 0, 0, 1},
         {{1, 4, "l1_4", true}, {3, 1, "l3_1", false}, {4, 2, "l4_2", true},
          {5, 3, "l5_3", true}, {6, 1, "l6_1", false}}, false},
        {FamilyId::I13_C, "I13_C", Stratum::I13, {0, 1, 1, 0, 0, 1},
         {{1, 4, "l1_4", true}, {4, 1, "l4_1", true}, {5, 2, "l5_2", true},
          {6, 2, "l6_2", true}}, false},
        {FamilyId::I12, "I12", Stratum::I12, {0, 0, 1, 1, 0, 1},
         {{1, 2, "l1_2", true}, {2, 1, "l2_1", true}, {3, 1, "l3_1", false},
          {5, 1, "l5_1", true}, {6, 1, "l6_1", false}}, false},
        {FamilyId::I23, "I23", Stratum::I23, {0, 0, 1, 0, 0, -1},
         {{1, 2, "l1_2", true}, {2, 1, "l2_1", true}, {4, 1, "l4_1", true},
          {5, 2, "l5_2", true}}, false},
        {FamilyId::I24, "I24", Stratum::I24, {0, 0, 1, -5, 0, 0},
         {{1, 2, "l1_2", true}, {2, 1, "l2_1", true}, {3, 1, "l3_1", false},
          {4, 1, "l4_1", false}, {5, 2, "l5_2", true}, {6, 1, "l6_1", true}}, false},
        {FamilyId::I123, "I123", Stratum::I123, {0, 0, 1, 0, 0, 1},
         {{1, 4, "l1_4", true}, {2, 1, "l2_1", true}, {3, 1, "l3_1", false},
          {4, 1, "l4_1", true}, {5, 3, "l5_3", true}, {6, 1, "l6_1", false}}, false},
        {FamilyId::ORIGIN_39, "ORIGIN_39", Stratum::ORIGIN, {0, 0, 0, 0, 0, 0},
         {{1, 6, "l1_6", true}, {2, 1, "l2_1", true}, {3, 1, "l3_1", false},
          {3, 2, "l3_2", false}, {3, 3, "l3_3", false}, {4, 3, "l4_3", false},
          {5, 5, "l5_5", true}, {6, 1, "l6_1", false}, {6, 2, "l6_2", false},
          {6, 3, "l6_3", false}}, false},
        {FamilyId::DEF_I13, "DEF_I13", Stratum::I13, {0, 1, 1, 0, 0, 1},
         {{1, 3, "l1_3", true}, {3, 1, "l3_1", false}, {4, 1, "l4_1", true},
          {5, 2, "l5_2", true}, {6, 1, "l6_1", false}}, true},
        {FamilyId::DEF_I12, "DEF_I12", Stratum::I12, {0, 0, 1, 1, 0, 1},
         {{1, 2, "l1_2", true}, {2, 1, "l2_1", true}, {3, 1, "l3_1", false},
          {5, 1, "l5_1", true}, {6, 1, "l6_1", false}}, true},
        {FamilyId::DEF_I24, "DEF_I24", Stratum::I24, {0, 0, 1, -5, 0, 0},
         {{1, 2, "l1_2", true}, {2, 1, "l2_1", true}, {3, 1, "l3_1", false},
          {4, 1, "l4_1", false}, {5, 2, "l5_2", true}, {6, 1, "l6_1", true}}, true},
        {FamilyId::DEF_I24B, "DEF_I24B", Stratum::I24, {0, 0, 2, -5, 0, 1},
         {{1, 2, "l1_2", true}, {2, 1, "l2_1", true}, {3, 1, "l3_1", false},
          {4, 1, "l4_1", false}, {5, 2, "l5_2", true}, {6, 1, "l6_1", true}}, true},
        {FamilyId::DEF_I123, "DEF_I123", Stratum::I123, {0, 0, 1, 0, 0, 1},
         {{1, 4, "l1_4", true}, {2, 1, "l2_1", true}, {3, 1, "l3_1", false},
          {4, 1, "l4_1", true}, {5, 3, "l5_3", true}, {6, 1, "l6_1", false}}, true},
        {FamilyId::DEF_ORIGIN, "DEF_ORIGIN", Stratum::ORIGIN, {0, 0, 0, 0, 0, 0},
         {{1, 6, "l1_6", true}, {2, 1, "l2_1", true}, {3, 1, "l3_1", false},
          {3, 2, "l3_2", false}, {3, 3, "l3_3", false}, {4, 3, "l4_3", false},
          {5, 5, "l5_5", true}, {6, 1, "l6_1", false}, {6, 2, "l6_2", false},
          {6, 3, "l6_3", false}}, true},
    };
    return defs;
}

const FamilyDef& fam_def(FamilyId id) {
    for (const auto& d : family_table())
        if (d.id == id) return d;
    throw std::invalid_argument("unknown family id");
}

Rat sym_get(const std::map<std::string, Rat>& sym, const std::string& name) {
    auto it = sym.find(name);
    return it == sym.end() ? Rat(0) : it->second;
}

// genericity polynomials, by value
void check_genericity(FamilyId id, const RatVec& base,
                      const std::map<std::string, Rat>& sym) {
    auto g = [&](const char* n) { return sym_get(sym, n); };
    auto require = [&](bool ok, const std::string& what) {
        if (!ok)
            throw std::invalid_argument("genericity violation for " +
                                        family_name(id) + ": " + what +
                                        " must be nonzero");
    };
    switch (id) {
        case FamilyId::I13_A:
        case FamilyId::I13_B:
        case FamilyId::I12:
        case FamilyId::I123:
        case FamilyId::DEF_I13:
        case FamilyId::DEF_I12:
        case FamilyId::DEF_I123:
            require(g("l3_1") != g("l6_1"), "l3_1 - l6_1");
            break;
        case FamilyId::I24:
        case FamilyId::DEF_I24:
        case FamilyId::DEF_I24B: {
            Rat s1 = g("l4_1") + Rat(5) * g("l3_1") - Rat(5) * g("l6_1");
            require(!s1.is_zero(), "l4_1 + 5*l3_1 - 5*l6_1");
            if (!base[5].is_zero())
                require(g("l3_1") != Rat(2) * g("l6_1"), "l3_1 - 2*l6_1");
            break;
        }
        case FamilyId::ORIGIN_39:
        case FamilyId::DEF_ORIGIN: {
            require(g("l3_1") != g("l6_1"), "l3_1 - l6_1");
            Rat p1 = g("l4_3") + Rat(5) * g("l3_3") - Rat(5) * g("l6_3");
            require(!p1.is_zero(), "l4_3 + 5*l3_3 - 5*l6_3");
            Rat p2 = g("l3_1") * g("l6_1") - Rat(2) * g("l6_1") * g("l6_1") -
                     g("l2_1") * g("l2_1");
            require(!p2.is_zero(), "l3_1*l6_1 - 2*l6_1^2 - l2_1^2");
            break;
        }
        default:
            break;
    }
}

RatVec resolved_base(const FamilySpec& spec, const FamilyDef& def) {
    if (spec.base) {
        if (spec.base->size() != 6)
            throw std::invalid_argument("base point needs 6 coordinates");
        return *spec.base;
    }
    RatVec b;
    b.reserve(6);
    for (long long v : def.def_base) b.push_back(Rat(v));
    return b;
}

void validate_base(const FamilyDef& def, const RatVec& base) {
    Stratum got = classify_stratum(base);
    if (got != def.stratum)
        throw std::invalid_argument("base point of " + std::string(def.name) +
                                    " must lie on " + stratum_name(def.stratum) +
                                    ", got " + stratum_name(got));
    if (def.id == FamilyId::DEF_I24 && !base[5].is_zero())
        throw std::invalid_argument("DEF_I24 needs the branch with l6 = 0");
    if (def.id == FamilyId::DEF_I24B && base[5].is_zero())
        throw std::invalid_argument("DEF_I24B needs the branch with l6 != 0");
}

// Validates symbol names/values; returns extra tail terms (coord, power, value).
std::vector<std::tuple<int, int, Rat>> validate_symbols(
    const FamilyDef& def, const std::map<std::string, Rat>& sym) {
    // displayed block height per coordinate (0 when the coordinate is constant)
    std::array<int, 6> top{};
    if (def.id == FamilyId::ORIGIN_39 || def.id == FamilyId::DEF_ORIGIN) {
        top = {6, 1, 3, 3, 5, 3};
    } else {
        for (const auto& s : def.slots)
            top[static_cast<std::size_t>(s.coord - 1)] =
                std::max(top[static_cast<std::size_t>(s.coord - 1)], s.power);
    }
    std::vector<std::tuple<int, int, Rat>> tails;
    for (const auto& [name, value] : sym) {
        const SlotDef* slot = nullptr;
        for (const auto& s : def.slots)
            if (name == s.name) slot = &s;
        if (slot) {
            if (slot->mandatory && value.is_zero())
                throw std::invalid_argument("symbol '" + name + "' of " + def.name +
                                            " must be nonzero");
            continue;
        }
        // l<i>_<k> above the displayed block is an allowed tail coefficient
        if (name.size() >= 4 && name[0] == 'l' && name[1] >= '1' && name[1] <= '6' &&
            name[2] == '_') {
            int coord = name[1] - '0';
            int power = 0;
            bool digits = name.size() > 3;
            for (std::size_t i = 3; i < name.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
                    digits = false;
                    break;
                }
                power = power * 10 + (name[i] - '0');
            }
            if (digits) {
                if ((def.id == FamilyId::ORIGIN_39 || def.id == FamilyId::DEF_ORIGIN) &&
                    coord == 4 && (power == 1 || power == 2))
                    throw std::invalid_argument("symbol '" + name +
                                                "' is determined by the family");
                if (def.witness)
                    throw std::invalid_argument("witness " + std::string(def.name) +
                                                " does not take tail coefficients");
                if (power <= top[static_cast<std::size_t>(coord - 1)])
                    throw std::invalid_argument(
                        "symbol '" + name + "' lies inside the displayed block of " +
                        def.name);
                if (power > kDefaultTruncation)
                    throw std::invalid_argument("tail coefficient '" + name +
                                                "' exceeds the truncation order");
                tails.emplace_back(coord, power, value);
                continue;
            }
        }
        throw std::invalid_argument("unknown symbol '" + name + "' for family " +
                                    def.name);
    }
    return tails;
}

// Witness constructions, polynomial in the deformation value delta.
template <class R>
ArcT<R> build_witness_arc(const FamilyDef& def, const RatVec& base,
                          const std::map<std::string, Rat>& sym, const R& d) {
    const int N = kDefaultTruncation;
    auto g = [&](const char* n) { return sym_get(sym, n); };
    auto rc = [&](const Rat& c) { return RingFrom<R>::from(c); };
    auto eps_pow = [&](int k) { return JetT<R>::monomial(R(1), k, N); };

    ArcT<R> arc(N);
    auto const_jet = [&](const Rat& c) { return JetT<R>::constant(rc(c), N); };
    auto lin_jet = [&](const Rat& c0, const Rat& c1) {
        JetT<R> j(N);
        j.set_coeff(0, rc(c0));
        j.set_coeff(1, rc(c1));
        return j;
    };
    // eps^p * (eps + d) * coeff
    auto shifted = [&](int p, const Rat& coeff) {
        JetT<R> j(N);
        j.set_coeff(p, d * rc(coeff));
        j.set_coeff(p + 1, rc(coeff));
        return j;
    };

    switch (def.id) {
        case FamilyId::DEF_I13:
            arc.set("l1", shifted(3, g("l1_3")));
            arc.set("l2", const_jet(base[1]));
            arc.set("l3", lin_jet(base[2], g("l3_1")));
            arc.set("l4", shifted(1, g("l4_1")));
            arc.set("l5", shifted(2, g("l5_2")));
            arc.set("l6", lin_jet(base[5], g("l6_1")));
            return arc;
        case FamilyId::DEF_I12:
            arc.set("l1", shifted(1, g("l1_2")));
            arc.set("l2", shifted(0, g("l2_1")));
            arc.set("l3", lin_jet(base[2], g("l3_1")));
            arc.set("l4", const_jet(base[3]));
            arc.set("l5", shifted(0, g("l5_1")));
            arc.set("l6", lin_jet(base[5], g("l6_1")));
            return arc;
        case FamilyId::DEF_I24:
        case FamilyId::DEF_I24B: {
            // base stays on the singular branch while it moves with delta:
            // branch l6=0 shifts by beta = l2_1^2/l3*, branch l3=2*l6 by
            // gamma = l2_1^2/l6*; in both cases s and q vanish identically.
            bool branch_a = def.id == FamilyId::DEF_I24;
            Rat pivot = branch_a ? base[2] : base[5];
            Rat shift = g("l2_1") * g("l2_1") / pivot;
            R d2 = d * d;
            R b3 = rc(base[2]) + d2 * rc(branch_a ? Rat(2) * shift : shift);
            R b4 = rc(base[3]) - d2 * rc(Rat(5) * shift);
            R b6 = branch_a ? d2 * rc(shift) : rc(base[5]);
            JetT<R> j3(N), j4(N), j6(N);
            j3.set_coeff(0, b3);
            j3.set_coeff(1, rc(g("l3_1")));
            j4.set_coeff(0, b4);
            j4.set_coeff(1, rc(g("l4_1")));
            j6.set_coeff(0, b6);
            j6.set_coeff(1, rc(g("l6_1")));
            arc.set("l1", shifted(1, g("l1_2")));
            arc.set("l2", shifted(0, g("l2_1")));
            arc.set("l3", std::move(j3));
            arc.set("l4", std::move(j4));
            arc.set("l5", shifted(1, g("l5_2")));
            arc.set("l6", std::move(j6));
            return arc;
        }
        case FamilyId::DEF_I123:
            arc.set("l1", shifted(3, g("l1_4")));
            arc.set("l2", shifted(0, g("l2_1")));
            arc.set("l3", lin_jet(base[2], g("l3_1")));
            arc.set("l4", JetT<R>::monomial(rc(g("l4_1")), 1, N));
            arc.set("l5", shifted(2, g("l5_3")));
            arc.set("l6", lin_jet(base[5], g("l6_1")));
            return arc;
        case FamilyId::DEF_ORIGIN: {
            // rows are cleared by the unit q(lambda(eps)) so that every
            // coefficient stays polynomial in delta
            Rat p1 = g("l4_3") + Rat(5) * g("l3_3") - Rat(5) * g("l6_3");
            Rat p2 = g("l3_1") * g("l6_1") - Rat(2) * g("l6_1") * g("l6_1") -
                     g("l2_1") * g("l2_1");
            JetT<R> j3(N), j6(N);
            j3.set_coeff(0, d);
            j3.set_coeff(1, rc(g("l3_1")));
            j3.set_coeff(2, rc(g("l3_2")));
            j3.set_coeff(3, rc(g("l3_3")));
            j6.set_coeff(0, d);
            j6.set_coeff(1, rc(g("l6_1")));
            j6.set_coeff(2, rc(g("l6_2")));
            j6.set_coeff(3, rc(g("l6_3")));
            JetT<R> j2 = JetT<R>::monomial(rc(g("l2_1")), 1, N);
            JetT<R> qd = j3 * j6 - (j6 * j6).scaled(rc(Rat(2))) - j2 * j2;
            JetT<R> c = j3 - j6;
            JetT<R> j4 = c.scaled(rc(Rat(-5))) + (eps_pow(1) * qd).scaled(rc(p1 / p2));
            arc.set("l1", (eps_pow(4) * qd).scaled(rc(g("l1_6") / p2)));
            arc.set("l2", std::move(j2));
            arc.set("l3", std::move(j3));
            arc.set("l4", std::move(j4));
            arc.set("l5", (eps_pow(3) * qd).scaled(rc(g("l5_5") / p2)));
            arc.set("l6", std::move(j6));
            return arc;
        }
        default:
            throw std::invalid_argument(family_name(def.id) + " is not a witness");
    }
}

}  // namespace

std::string family_name(FamilyId id) { return fam_def(id).name; }

std::optional<FamilyId> family_from_name(const std::string& name) {
    for (const auto& d : family_table())
        if (name == d.name) return d.id;
    return std::nullopt;
}

bool is_witness(FamilyId id) { return fam_def(id).witness; }

std::vector<FamilyId> all_families() {
    std::vector<FamilyId> out;
    for (const auto& d : family_table())
        if (!d.witness) out.push_back(d.id);
    return out;
}

std::vector<FamilyId> all_witnesses() {
    std::vector<FamilyId> out;
    for (const auto& d : family_table())
        if (d.witness) out.push_back(d.id);
    return out;
}

Stratum family_stratum(FamilyId id) { return fam_def(id).stratum; }

int family_expected_order(FamilyId id) {
    switch (id) {
        case FamilyId::SMOOTH_I1:
        case FamilyId::SMOOTH_I2:
        case FamilyId::SMOOTH_I3:
        case FamilyId::SMOOTH_I4:
            return 1;
        case FamilyId::I13_A:
            return 3;
        case FamilyId::I13_B:
        case FamilyId::I13_C:
            return 4;
        case FamilyId::I12:
        case FamilyId::I23:
        case FamilyId::I24:
            return 2;
        case FamilyId::I123:
            return 4;
        case FamilyId::ORIGIN_39:
            return 6;
        default:
            throw std::invalid_argument("no frozen order for witness " + family_name(id));
    }
}

RatVec FamilySpec::base_point() const {
    return resolved_base(*this, fam_def(family));
}

Arc essential_family(const FamilySpec& spec) {
    const FamilyDef& def = fam_def(spec.family);
    if (def.witness)
        throw std::invalid_argument(family_name(spec.family) +
                                    " is a witness; use deformation_witness");
    if (spec.delta)
        throw std::invalid_argument(family_name(spec.family) +
                                    " takes no delta; deltas deform witnesses");
    RatVec base = resolved_base(spec, def);
    validate_base(def, base);
    auto tails = validate_symbols(def, spec.symbols);
    check_genericity(def.id, base, spec.symbols);

    const int N = kDefaultTruncation;
    Arc arc(N);
    for (int i = 1; i <= 6; ++i) {
        Jet j(N);
        j.set_coeff(0, base[static_cast<std::size_t>(i - 1)]);
        arc.set(kLambdaVars[static_cast<std::size_t>(i - 1)], std::move(j));
    }
    auto g = [&](const char* n) { return sym_get(spec.symbols, n); };
    for (const auto& s : def.slots)
        arc.set_coeff(kLambdaVars[static_cast<std::size_t>(s.coord - 1)], s.power,
                      g(s.name));
    if (def.id == FamilyId::ORIGIN_39) {
        // the two lowest l4 coefficients are forced by the trace-free block
        arc.set_coeff("l4", 1, Rat(5) * (g("l6_1") - g("l3_1")));
        arc.set_coeff("l4", 2, Rat(5) * (g("l6_2") - g("l3_2")));
    }
    for (const auto& [coord, power, value] : tails)
        arc.set_coeff(kLambdaVars[static_cast<std::size_t>(coord - 1)], power, value);
    return arc;
}

Arc deformation_witness(const FamilySpec& spec) {
    const FamilyDef& def = fam_def(spec.family);
    if (!def.witness)
        throw std::invalid_argument(family_name(spec.family) +
                                    " is not a witness; use essential_family");
    if (!spec.delta)
        throw std::invalid_argument("witness " + family_name(spec.family) +
                                    " needs a rational delta");
    RatVec base = resolved_base(spec, def);
    validate_base(def, base);
    validate_symbols(def, spec.symbols);
    check_genericity(def.id, base, spec.symbols);
    return build_witness_arc<Rat>(def, base, spec.symbols, *spec.delta);
}

ArcP witness_symbolic(const FamilySpec& spec) {
    const FamilyDef& def = fam_def(spec.family);
    if (!def.witness)
        throw std::invalid_argument(family_name(spec.family) + " is not a witness");
    RatVec base = resolved_base(spec, def);
    validate_base(def, base);
    validate_symbols(def, spec.symbols);
    check_genericity(def.id, base, spec.symbols);
    return build_witness_arc<Poly>(def, base, spec.symbols, Poly::variable("delta"));
}

// ---------------------------------------------------------------------------
// random sampling

FamilySpec sample_family(FamilyId id, Rng& rng) {
    const FamilyDef& def = fam_def(id);
    if (def.witness) throw std::invalid_argument("sampling draws families, not witnesses");
    auto nz = [&]() { return rng.nonzero_rational_box(-9, 9); };
    auto any = [&]() { return rng.rational_box(-9, 9); };
    for (;;) {
        std::map<std::string, Rat> sym;
        for (const auto& s : def.slots) sym[s.name] = s.mandatory ? nz() : any();
        RatVec base(6, Rat(0));
        switch (id) {
            case FamilyId::SMOOTH_I1:
                base = {Rat(0), nz(), any(), nz(), any(), Rat(0)};
                base[5] = base[2];
                break;
            case FamilyId::SMOOTH_I2:
                base = {Rat(0), Rat(0), any(), nz(), Rat(0), any()};
                break;
            case FamilyId::SMOOTH_I3:
                base = {Rat(0), nz(), any(), Rat(0), Rat(0), any()};
                break;
            case FamilyId::SMOOTH_I4: {
                Rat t = nz(), s = nz();
                base = {Rat(0), t * s, Rat(2) * t * t + s * s,
                        Rat(-5) * (t * t + s * s), Rat(0), t * t};
                break;
            }
            case FamilyId::I13_A:
            case FamilyId::I13_B:
            case FamilyId::I13_C:
                base = {Rat(0), nz(), any(), Rat(0), Rat(0), Rat(0)};
                base[5] = base[2];
                break;
            case FamilyId::I12:
                base = {Rat(0), Rat(0), any(), nz(), Rat(0), Rat(0)};
                base[5] = base[2];
                break;
            case FamilyId::I23:
                base = {Rat(0), Rat(0), any(), Rat(0), Rat(0), any()};
                break;
            case FamilyId::I24:
                if (rng.below(2) == 0) {
                    Rat l30 = nz();
                    base = {Rat(0), Rat(0), l30, Rat(-5) * l30, Rat(0), Rat(0)};
                } else {
                    Rat l60 = nz();
                    base = {Rat(0), Rat(0), Rat(2) * l60, Rat(-5) * l60, Rat(0), l60};
                }
                break;
            case FamilyId::I123:
                base = {Rat(0), Rat(0), nz(), Rat(0), Rat(0), Rat(0)};
                base[5] = base[2];
                break;
            case FamilyId::ORIGIN_39:
                // slot draw above suffices; mandatory l4_3 nonzero comes next
                sym["l4_3"] = nz();
                break;
            default:
                throw std::invalid_argument("unsampled family");
        }
        if (classify_stratum(base) != def.stratum) continue;
        FamilySpec spec;
        spec.family = id;
        spec.base = base;
        spec.symbols = std::move(sym);
        try {
            check_genericity(id, base, spec.symbols);
        } catch (const std::invalid_argument&) {
            continue;
        }
        return spec;
    }
}

// ---------------------------------------------------------------------------
// closure checks

namespace {

struct WitnessCfg {
    FamilyId wid;
    FamilyId lower;
    bool extrapolated;
    Stratum deformed_stratum;  // classification of the moving center, delta != 0
    std::map<std::string, std::string> rename;  // witness symbol -> lower symbol
    std::map<std::string, Rat> anchor;
};

WitnessCfg witness_cfg(FamilyId wid) {
    switch (wid) {
        case FamilyId::DEF_I13:
            return {wid, FamilyId::I13_B, false, Stratum::I13,
                    {{"l1_3", "l1_4"}, {"l5_2", "l5_3"}, {"l4_1", "l4_2"}},
                    {{"l1_3", Rat(1)}, {"l5_2", Rat(1)}, {"l4_1", Rat(1)},
                     {"l3_1", Rat(1)}, {"l6_1", Rat(0)}}};
        case FamilyId::DEF_I12:
            return {wid, FamilyId::I12, false, Stratum::I1, {},
                    {{"l1_2", Rat(1)}, {"l2_1", Rat(1)}, {"l5_1", Rat(1)},
                     {"l3_1", Rat(1)}, {"l6_1", Rat(0)}}};
        case FamilyId::DEF_I24:
            return {wid, FamilyId::I24, false, Stratum::I4, {},
                    {{"l1_2", Rat(1)}, {"l5_2", Rat(1)}, {"l2_1", Rat(1)},
                     {"l6_1", Rat(1)}, {"l3_1", Rat(1)}, {"l4_1", Rat(1)}}};
        case FamilyId::DEF_I24B:
            return {wid, FamilyId::I24, true, Stratum::I4, {},
                    {{"l1_2", Rat(1)}, {"l5_2", Rat(1)}, {"l2_1", Rat(1)},
                     {"l6_1", Rat(1)}, {"l3_1", Rat(1)}, {"l4_1", Rat(1)}}};
        case FamilyId::DEF_I123:
            return {wid, FamilyId::I123, false, Stratum::I13, {},
                    {{"l1_4", Rat(1)}, {"l5_3", Rat(1)}, {"l2_1", Rat(1)},
                     {"l4_1", Rat(1)}, {"l3_1", Rat(1)}, {"l6_1", Rat(0)}}};
        case FamilyId::DEF_ORIGIN:
            return {wid, FamilyId::ORIGIN_39, false, Stratum::I123, {},
                    {{"l1_6", Rat(1)}, {"l5_5", Rat(1)}, {"l2_1", Rat(1)},
                     {"l3_1", Rat(1)}, {"l6_1", Rat(0)}, {"l4_3", Rat(1)}}};
        default:
            throw std::invalid_argument("not a closure witness: " + family_name(wid));
    }
}

// coordinates where witness(0) must agree with the lower family even in the
// presence of free tails: everything up to the displayed block height
std::array<int, 6> displayed_top(FamilyId lower) {
    std::array<int, 6> top{};
    const FamilyDef& def = fam_def(lower);
    if (lower == FamilyId::ORIGIN_39) return {6, 1, 3, 3, 5, 3};
    for (const auto& s : def.slots)
        top[static_cast<std::size_t>(s.coord - 1)] =
            std::max(top[static_cast<std::size_t>(s.coord - 1)], s.power);
    return top;
}

ClosureReport run_closure(const WitnessCfg& cfg,
                          const std::map<std::string, Rat>& wit_sym,
                          const ArcP* tampered) {
    ClosureReport rep;
    rep.witness = cfg.wid;
    rep.lower = cfg.lower;
    rep.extrapolated = cfg.extrapolated;
    std::ostringstream diag;

    // the lower family at the renamed symbols, over the witness's base point
    std::map<std::string, Rat> low_sym;
    for (const auto& [k, v] : wit_sym) {
        auto it = cfg.rename.find(k);
        low_sym[it == cfg.rename.end() ? k : it->second] = v;
    }
    const FamilyDef& wdef = fam_def(cfg.wid);
    RatVec base;
    base.reserve(6);
    for (long long v : wdef.def_base) base.push_back(Rat(v));

    FamilySpec low_spec;
    low_spec.family = cfg.lower;
    low_spec.base = base;
    low_spec.symbols = low_sym;
    Arc lower_arc = essential_family(low_spec);

    Ideal ideal = localized_generators(family_stratum(cfg.lower));
    OrderResult low = order_of_arc(ideal, lower_arc);
    if (!low.determined())
        throw std::logic_error("lower family arc is undetermined");
    rep.lower_order = *low.order;
    rep.lower_point = *low.point;

    // (i) delta = 0 reproduces the lower family
    FamilySpec w0;
    w0.family = cfg.wid;
    w0.base = base;
    w0.symbols = wit_sym;
    w0.delta = Rat(0);
    Arc arc0 = deformation_witness(w0);
    OrderResult r0 = order_of_arc(ideal, arc0);
    bool same_jets = true;
    std::array<int, 6> top = displayed_top(cfg.lower);
    for (int i = 0; i < 6; ++i) {
        const Jet& a = arc0.jet(kLambdaVars[static_cast<std::size_t>(i)]);
        const Jet& b = lower_arc.jet(kLambdaVars[static_cast<std::size_t>(i)]);
        if (cfg.wid == FamilyId::DEF_ORIGIN) {
            // rows were multiplied by a unit: tails above the displayed block
            // are free, the block itself must match
            for (int k = 0; k <= top[static_cast<std::size_t>(i)]; ++k)
                if (a.coeff(k) != b.coeff(k)) same_jets = false;
        } else if (a != b) {
            same_jets = false;
        }
    }
    rep.delta0_matches = same_jets && r0.determined() && *r0.order == rep.lower_order &&
                         *r0.point == rep.lower_point;
    if (!rep.delta0_matches) diag << "witness(0) does not reproduce the lower family; ";

    // (ii)+(iii) symbolic delta: generic order and exact limit of the point
    FamilySpec ws;
    ws.family = cfg.wid;
    ws.base = base;
    ws.symbols = wit_sym;
    ArcP sym_arc = tampered ? *tampered : witness_symbolic(ws);
    SymOrderResult sym = order_of_arc_sym(ideal, sym_arc);
    if (!sym.determined())
        throw std::logic_error("symbolic witness order is undetermined");
    rep.generic_order = *sym.order;
    rep.limit_point = proj_limit_at_zero(sym.leading, "delta");
    rep.limit_matches = rep.limit_point == rep.lower_point;
    if (!rep.limit_matches)
        diag << "limit point " << rep.limit_point.str() << " != lower point "
             << rep.lower_point.str() << "; ";

    // (iv) rational sweep, cross-checked against the symbolic leading vector
    rep.sweep_consistent = true;
    for (const Rat& dv : {Rat(1), Rat(1, 2), Rat(1, 4)}) {
        ClosureSweepEntry entry;
        entry.delta = dv;
        Arc warc(kDefaultTruncation);
        if (tampered) {
            // evaluate the tampered symbolic arc at this delta
            for (const auto& [name, jet] : tampered->components()) {
                Jet cj(kDefaultTruncation);
                for (int k = 0; k <= jet.truncation(); ++k) {
                    Poly p = jet.coeff(k).eval_partial("delta", dv);
                    cj.set_coeff(k, p.is_zero() ? Rat(0) : p.terms().begin()->second);
                }
                warc.set(name, std::move(cj));
            }
        } else {
            FamilySpec wd = ws;
            wd.delta = dv;
            warc = deformation_witness(wd);
        }
        OrderResult r = order_of_arc(ideal, warc);
        if (!r.determined()) {
            rep.sweep_consistent = false;
            diag << "sweep delta=" << dv.str() << " undetermined; ";
            continue;
        }
        entry.order = *r.order;
        entry.point = *r.point;
        entry.base_stratum = classify_stratum(warc.base_point(kLambdaVars));
        // agreement with the symbolic computation at this delta
        RatVec from_sym;
        from_sym.reserve(sym.leading.size());
        for (const auto& p : sym.leading) {
            Poly v = p.eval_partial("delta", dv);
            from_sym.push_back(v.is_zero() ? Rat(0) : v.terms().begin()->second);
        }
        bool ok = entry.order == rep.generic_order &&
                  ProjPoint::canonical(from_sym) == entry.point &&
                  entry.base_stratum == cfg.deformed_stratum;
        if (!ok) {
            rep.sweep_consistent = false;
            diag << "sweep delta=" << dv.str() << " inconsistent; ";
        }
        rep.sweep.push_back(std::move(entry));
    }
    rep.detail = diag.str();
    return rep;
}

}  // namespace

ClosureReport closure_check(FamilyId witness_id,
                            const std::map<std::string, Rat>* symbols) {
    WitnessCfg cfg = witness_cfg(witness_id);
    return run_closure(cfg, symbols ? *symbols : cfg.anchor, nullptr);
}

ClosureReport closure_check_negative_control() {
    WitnessCfg cfg = witness_cfg(FamilyId::DEF_I12);
    FamilySpec ws;
    ws.family = FamilyId::DEF_I12;
    ws.symbols = cfg.anchor;
    ArcP sym_arc = witness_symbolic(ws);
    // corrupt the trace row: add 3*delta*eps, which survives the delta -> 0
    // projective limit and moves the point
    JetT<Poly> j1 = sym_arc.jet("l1");
    j1.set_coeff(1, j1.coeff(1) + Poly::variable("delta").scaled(Rat(3)));
    sym_arc.set("l1", std::move(j1));
    return run_closure(cfg, cfg.anchor, &sym_arc);
}

nlohmann::ordered_json closure_report_to_json(const ClosureReport& r) {
    nlohmann::ordered_json j;
    j["witness"] = family_name(r.witness);
    j["lower_family"] = family_name(r.lower);
    j["extrapolated"] = r.extrapolated;
    j["lower_order"] = r.lower_order;
    j["lower_point"] = r.lower_point.str();
    j["generic_order"] = r.generic_order;
    j["limit_point"] = r.limit_point.str();
    j["delta0_matches"] = r.delta0_matches;
    j["limit_matches"] = r.limit_matches;
    j["sweep_consistent"] = r.sweep_consistent;
    nlohmann::ordered_json sweep = nlohmann::ordered_json::array();
    for (const auto& e : r.sweep) {
        nlohmann::ordered_json row;
        row["delta"] = e.delta.str();
        row["order"] = e.order;
        row["point"] = e.point.str();
        row["base_stratum"] = stratum_name(e.base_stratum);
        sweep.push_back(std::move(row));
    }
    j["sweep"] = std::move(sweep);
    j["pass"] = r.pass();
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

// ---------------------------------------------------------------------------
// spec JSON

FamilySpec famspec_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object()) throw ParseError("family spec must be a JSON object", 0);
    if (!j.contains("family") || !j["family"].is_string())
        throw ParseError("family spec needs string field 'family'", 0);
    FamilySpec spec;
    auto id = family_from_name(j["family"].get<std::string>());
    if (!id) throw ParseError("unknown family '" + j["family"].get<std::string>() + "'", 0);
    spec.family = *id;
    if (j.contains("base")) {
        if (!j["base"].is_array() || j["base"].size() != 6)
            throw ParseError("'base' must be an array of 6 rationals", 0);
        RatVec base;
        for (const auto& v : j["base"]) {
            if (!v.is_string()) throw ParseError("'base' entries must be rational strings", 0);
            base.push_back(Rat::parse(v.get<std::string>()));
        }
        spec.base = std::move(base);
    }
    if (j.contains("symbols")) {
        if (!j["symbols"].is_object()) throw ParseError("'symbols' must be an object", 0);
        for (const auto& [k, v] : j["symbols"].items()) {
            if (!v.is_string())
                throw ParseError("symbol '" + k + "' must be a rational string", 0);
            spec.symbols[k] = Rat::parse(v.get<std::string>());
        }
    }
    if (j.contains("delta")) {
        if (!j["delta"].is_string()) throw ParseError("'delta' must be a rational string", 0);
        spec.delta = Rat::parse(j["delta"].get<std::string>());
    }
    return spec;
}

nlohmann::ordered_json famspec_to_json(const FamilySpec& spec) {
    nlohmann::ordered_json j;
    j["family"] = family_name(spec.family);
    nlohmann::ordered_json base = nlohmann::ordered_json::array();
    for (const auto& v : spec.base_point()) base.push_back(v.str());
    j["base"] = std::move(base);
    nlohmann::ordered_json sym = nlohmann::ordered_json::object();
    for (const auto& [k, v] : spec.symbols) sym[k] = v.str();
    j["symbols"] = std::move(sym);
    if (spec.delta) j["delta"] = spec.delta->str();
    return j;
}

// ---------------------------------------------------------------------------
// complex side

ComplexParams realcoeffs_to_complex(const RealCoeffs& rc) {
    Rat q4(1, 4), h(1, 2);
    ComplexParams cp;
    cp.A = {q4 * (rc.a - rc.c + rc.bp), q4 * (rc.ap - rc.cp - rc.b)};
    cp.B = {h * (rc.a + rc.c), h * (rc.ap + rc.cp)};
    cp.C = {q4 * (rc.a - rc.c - rc.bp), q4 * (rc.ap - rc.cp + rc.b)};
    return cp;
}

RealCoeffs complex_to_realcoeffs(const ComplexParams& cp) {
    // a + ia' = A + B + C; b + ib' = 2i(A - C); c + ic' = -A + B - C
    RatComplex a = cp.A + cp.B + cp.C;
    RatComplex i2{Rat(0), Rat(2)};
    RatComplex b = i2 * (cp.A - cp.C);
    RatComplex c = (cp.B - cp.A) - cp.C;
    return {a.re, b.re, c.re, a.im, b.im, c.im};
}

RealCoeffs kapteyn_to_realcoeffs(const RatVec& lam) {
    if (lam.size() != 6) throw std::invalid_argument("need 6 parameters");
    return {-lam[2], Rat(2) * lam[1] + lam[4], lam[5],
            lam[1], Rat(2) * lam[2] + lam[3], -lam[1]};
}

ComplexParams kapteyn_to_complex(const RatVec& lam) {
    return realcoeffs_to_complex(kapteyn_to_realcoeffs(lam));
}

ComplexMembership complex_strata_membership(const ComplexParams& cp) {
    ComplexMembership m;
    const RatComplex& A = cp.A;
    const RatComplex& B = cp.B;
    const RatComplex& C = cp.C;
    m.lv = B.is_zero();
    RatComplex two_a_bbar = A + A + B.conj();
    m.h = two_a_bbar.is_zero();
    RatComplex bbar = B.conj();
    RatComplex bbar3 = bbar * bbar * bbar;
    RatComplex a3 = A * A * A;
    m.r = (A * B).im.is_zero() && (bbar3 * C).im.is_zero() && (a3 * C).im.is_zero();
    RatComplex a_2bbar = A - (bbar + bbar);
    m.q4 = a_2bbar.is_zero() && B.norm2() == C.norm2();
    return m;
}

// ---------------------------------------------------------------------------
// the vector field

VectorField2 vector_field(const std::array<double, 6>& lam) {
    VectorField2 f{};
    f.cx_x = lam[0];
    f.cx_y = -1.0;
    f.cx_xx = -lam[2];
    f.cx_xy = 2.0 * lam[1] + lam[4];
    f.cx_yy = lam[5];
    f.cy_x = 1.0;
    f.cy_y = lam[0];
    f.cy_xx = lam[1];
    f.cy_xy = 2.0 * lam[2] + lam[3];
    f.cy_yy = -lam[1];
    return f;
}

VectorField2 vector_field(const RatVec& lam) {
    if (lam.size() != 6) throw std::invalid_argument("need 6 parameters");
    std::array<double, 6> d{};
    for (std::size_t i = 0; i < 6; ++i) d[i] = lam[i].to_double();
    return vector_field(d);
}

std::pair<Poly, Poly> vector_field_polys(const RatVec& lam) {
    if (lam.size() != 6) throw std::invalid_argument("need 6 parameters");
    Poly x = Poly::variable("x");
    Poly y = Poly::variable("y");
    Poly xdot = x.scaled(lam[0]) - y - (x * x).scaled(lam[2]) +
                (x * y).scaled(Rat(2) * lam[1] + lam[4]) + (y * y).scaled(lam[5]);
    Poly ydot = x + y.scaled(lam[0]) + (x * x).scaled(lam[1]) +
                (x * y).scaled(Rat(2) * lam[2] + lam[3]) - (y * y).scaled(lam[1]);
    return {xdot, ydot};
}

}  // namespace bautin
