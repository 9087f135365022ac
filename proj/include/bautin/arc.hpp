#pragma once

#include "bautin/jet.hpp"
#include "bautin/poly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace bautin {

inline constexpr int kDefaultTruncation = 12;

// Conversion of rational scalars into the jet coefficient ring.
template <class R>
struct RingFrom;
template <>
struct RingFrom<Rat> {
    static Rat from(const Rat& c) { return c; }
};
template <>
struct RingFrom<Poly> {
    static Poly from(const Rat& c) { return Poly::constant(c); }
};

// A one-parameter curve eps -> (x_1(eps), ..., x_n(eps)) given by jets, all
// sharing one truncation order. R = Rat for concrete arcs; R = Poly for arcs
// whose coefficients are polynomials in a deformation parameter.
template <class R>
class ArcT {
public:
    explicit ArcT(int truncation = kDefaultTruncation) : trunc_(truncation) {
        if (truncation < 0) throw std::invalid_argument("arc truncation must be >= 0");
    }

    int truncation() const { return trunc_; }

    void set(const std::string& name, JetT<R> jet) {
        if (jet.truncation() != trunc_)
            jet = jet.truncated(trunc_);
        comps_.insert_or_assign(name, std::move(jet));
    }

    void set_coeff(const std::string& name, int k, const R& value) {
        auto it = comps_.find(name);
        if (it == comps_.end()) {
            JetT<R> j(trunc_);
            j.set_coeff(k, value);
            comps_.emplace(name, std::move(j));
        } else {
            it->second.set_coeff(k, value);
        }
    }

    bool has(const std::string& name) const { return comps_.count(name) != 0; }

    const JetT<R>& jet(const std::string& name) const {
        auto it = comps_.find(name);
        if (it == comps_.end())
            throw std::invalid_argument("arc does not assign variable '" + name + "'");
        return it->second;
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        out.reserve(comps_.size());
        for (const auto& [n, j] : comps_) out.push_back(n);
        return out;
    }

    const std::map<std::string, JetT<R>>& components() const { return comps_; }

    // The curve's value at eps = 0, in the given coordinate order.
    std::vector<R> base_point(const std::vector<std::string>& order) const {
        std::vector<R> out;
        out.reserve(order.size());
        for (const auto& n : order) out.push_back(jet(n).coeff(0));
        return out;
    }

    friend bool operator==(const ArcT& a, const ArcT& b) {
        return a.trunc_ == b.trunc_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const ArcT& a, const ArcT& b) { return !(a == b); }

private:
    int trunc_;
    std::map<std::string, JetT<R>> comps_;
};

using Arc = ArcT<Rat>;
using ArcP = ArcT<Poly>;

// eps -> c*eps applied to every component.
template <class R>
ArcT<R> reparameterize(const ArcT<R>& arc, const Rat& c) {
    if (c.is_zero()) throw std::invalid_argument("reparameterization factor must be nonzero");
    ArcT<R> out(arc.truncation());
    for (const auto& [name, j] : arc.components())
        out.set(name, j.compose_scale(RingFrom<R>::from(c)));
    return out;
}

namespace detail {

template <class R>
JetT<R> eval_terms(const std::vector<std::pair<Mono, Rat>>& terms,
                   std::size_t lo, std::size_t hi, std::size_t vi,
                   const std::vector<const JetT<R>*>& jets, int trunc) {
    if (lo == hi) return JetT<R>(trunc);
    if (vi == jets.size()) {
        Rat c(0);
        for (std::size_t i = lo; i < hi; ++i) c += terms[i].second;
        return JetT<R>::constant(RingFrom<R>::from(c), trunc);
    }
    // terms[lo..hi) are sorted descending by exponent of variable vi
    // (sub-sorted recursively); Horner evaluation with exponent gaps.
    const JetT<R>& x = *jets[vi];
    auto pow_mul = [&](JetT<R> acc, unsigned e) {
        for (unsigned t = 0; t < e; ++t) acc = acc * x;
        return acc;
    };
    std::size_t i = lo;
    unsigned prev = terms[lo].first[vi];
    JetT<R> res(trunc);
    bool first = true;
    while (i < hi) {
        unsigned e = terms[i].first[vi];
        std::size_t j = i;
        while (j < hi && terms[j].first[vi] == e) ++j;
        JetT<R> block = eval_terms(terms, i, j, vi + 1, jets, trunc);
        if (first) {
            res = block;
            first = false;
        } else {
            res = pow_mul(res, prev - e) + block;
        }
        prev = e;
        i = j;
    }
    return pow_mul(res, prev);
}

}  // namespace detail

// Substitute the arc into p; result truncated at the arc's order. Horner-style
// in the canonical (sorted) variable order.
template <class R>
JetT<R> eval_on_arc(const Poly& p, const ArcT<R>& arc) {
    const auto& vars = p.vars();
    std::vector<const JetT<R>*> jets;
    jets.reserve(vars.size());
    for (const auto& v : vars) jets.push_back(&arc.jet(v));

    std::vector<std::pair<Mono, Rat>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    return detail::eval_terms(terms, 0, terms.size(), 0, jets, arc.truncation());
}

// JSON form: {"truncation": N, "vars": {"l1": ["c0", "c1", ...], ...}} with
// rational coefficients as strings; shorter lists are zero-padded.
Arc arc_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json arc_to_json(const Arc& arc);

}  // namespace bautin
