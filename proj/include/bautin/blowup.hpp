#pragma once

#include "bautin/arc.hpp"
#include "bautin/linalg.hpp"
#include "bautin/rng.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace bautin {

// Finitely generated ideal (v_1, ..., v_N) over named variables. When a
// generator is naturally a product, the factors can be retained for display;
// `generators` always holds the expanded canonical forms.
struct Ideal {
    std::vector<std::string> vars;
    std::vector<Poly> generators;
    std::vector<std::vector<Poly>> factored;  // empty, or one factor list per generator

    static Ideal make(std::vector<std::string> vars, std::vector<Poly> gens);
    static Ideal make_factored(std::vector<std::string> vars,
                               std::vector<std::vector<Poly>> factor_lists);
};

Ideal ideal_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json ideal_to_json(const Ideal& ideal);

// Point of projective space in canonical form: denominators cleared, integer
// coordinates divided by their gcd, first nonzero coordinate positive.
struct ProjPoint {
    RatVec coords;

    static ProjPoint canonical(RatVec raw);
    std::string str() const;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.coords == b.coords;
    }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
};

struct UndeterminedError : std::runtime_error {
    UndeterminedError(const std::string& what, int truncation)
        : std::runtime_error(what), truncation(truncation) {}
    int truncation;
};

// Order of an arc against an ideal: the minimal eps-valuation over the
// generators, with the leading coefficient vector at that power. `order` is
// empty when every generator vanishes to the truncation order (the arc lies
// in the zero set as far as the jets can see).
struct OrderResult {
    std::optional<int> order;
    RatVec leading;            // per generator, coefficient of eps^order (when determined)
    std::optional<ProjPoint> point;
    int truncation = kDefaultTruncation;

    bool determined() const { return order.has_value(); }
};

// Same computation with coefficients polynomial in a deformation parameter:
// valuation looks for the first eps-power whose coefficient vector is not
// identically zero as polynomials.
struct SymOrderResult {
    std::optional<int> order;
    std::vector<Poly> leading;
    int truncation = kDefaultTruncation;

    bool determined() const { return order.has_value(); }
};

OrderResult order_of_arc(const Ideal& ideal, const Arc& arc);
SymOrderResult order_of_arc_sym(const Ideal& ideal, const ArcP& arc);

// Canonical projectivized leading vector; throws UndeterminedError when the
// order is undetermined at this truncation.
ProjPoint exceptional_point(const Ideal& ideal, const Arc& arc);

// Limit of the projective point [p_1(d) : ... : p_N(d)] as d -> 0: strip the
// common power of `param`, then evaluate at 0.
ProjPoint proj_limit_at_zero(const std::vector<Poly>& coords, const std::string& param);

bool in_zero_set(const Ideal& ideal, const RatVec& point);

// order_of_arc().order; membership in the filtration step k is order <= k.
std::optional<int> filtration_level(const Ideal& ideal, const Arc& arc);

// Compares orders and leading vectors of two generating sets over a batch of
// arcs. Arcs are grouped by their center; within each group the second
// ideal's leading coordinates must be fixed linear functions of the first
// ideal's leading vector (checked exactly by rank consistency, which is
// "estimate on a spanning subset, verify on the rest" in matrix form).
struct InvarianceReport {
    int arcs_checked = 0;
    int groups = 0;
    bool orders_equal = true;
    bool map_consistent = true;
    std::string first_mismatch;

    bool pass() const { return orders_equal && map_consistent; }
};

InvarianceReport generator_invariance_check(const Ideal& ideal_a, const Ideal& ideal_b,
                                            const std::vector<Arc>& arcs);

// Sampled projective dimension of an exceptional fiber: rank of the span of
// leading vectors over `trials` arcs drawn round-robin from the samplers,
// minus one.
struct FiberDimension {
    int dimension = -1;
    int rank = 0;
    int undetermined = 0;
    int trials = 0;
};

using ArcSampler = std::function<Arc(Rng&)>;

FiberDimension fiber_dimension_sample(const Ideal& ideal,
                                      const std::vector<ArcSampler>& samplers,
                                      int trials, std::uint64_t seed);

nlohmann::ordered_json order_result_to_json(const OrderResult& r);

}  // namespace bautin
