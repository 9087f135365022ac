#pragma once

#include "bautin/blowup.hpp"

#include "json.hpp"

namespace bautin {

// The ideal (x, y^{k+1}) over {x, y}; its zero set is the origin.
Ideal ak_ideal(int k);

// Which of the k+1 components an origin-centered arc belongs to, with its
// order and projectivized leading vector.
struct AkResult {
    int component = 0;  // 1..k+1
    int order = 0;
    ProjPoint point;
};

// Classifies by the valuation of x: component min(val(x), k+1). Throws
// std::invalid_argument when the arc is not centered at the origin, and
// UndeterminedError when x vanishes to truncation and (k+1)*val(y) exceeds
// the truncation order (including y vanishing too).
AkResult ak_classify(int k, const Arc& arc);

// Leading vector of (x, y^{k+1}) on the arc as a point of P^1; agrees with
// ak_classify(k, arc).point.
ProjPoint ak_center(int k, const Arc& arc);

struct AkEssentialReport {
    int k = 0;
    int essential_component = 0;  // k+1
    int trials = 0;
    int sampled_rank = 0;  // rank of sampled top-component centers; 2 = all of P^1
    bool pass() const { return sampled_rank == 2; }
};

// The essential component is the top one; the report carries a sampled
// certificate that its centers fill out P^1 (rank 2 over the sample).
AkEssentialReport ak_essential_set(int k, int trials, std::uint64_t seed);

nlohmann::ordered_json ak_result_to_json(const AkResult& r);
nlohmann::ordered_json ak_essential_to_json(const AkEssentialReport& r);

}  // namespace bautin
