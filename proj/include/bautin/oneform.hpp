#pragma once
// Polynomial one-forms P dx + Q dy over the plane variables {x, y} plus
// optional symbolic parameters, with exactness and family-limit checks.

#include "bautin/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bautin {

struct OneForm {
    Poly P;  // coefficient of dx
    Poly Q;  // coefficient of dy

    friend bool operator==(const OneForm& a, const OneForm& b) {
        return a.P == b.P && a.Q == b.Q;
    }
    friend bool operator!=(const OneForm& a, const OneForm& b) { return !(a == b); }
};

// d q = (∂q/∂x) dx + (∂q/∂y) dy
OneForm exterior_derivative(const Poly& q);

// Closed (= exact on polynomial coefficients over the plane): ∂P/∂y = ∂Q/∂x.
// Returns the primitive (normalized with zero constant term) when exact.
struct ExactnessResult {
    bool exact = false;
    std::optional<Poly> primitive;
};
ExactnessResult is_exact(const OneForm& w);

// The quartic-stratum foliation form 3 f3 d f2 − 2 f2 d f3 with
// f2 = x^2 + 4y + 1 and f3 = al*x*(x^2+6y) + 6y + 1; `al` may stay symbolic.
OneForm q4_form(const Poly& alpha);
OneForm q4_form_symbolic();  // alpha = the symbol "al"

// General helper 3*g*df - 2*f*dg used by the quartic form.
OneForm weighted_log_form(const Poly& f, const Poly& g);

struct DegreeReport {
    int degree_xy = -1;                     // total degree in {x, y}
    std::vector<std::string> residual;      // terms of (x,y)-degree >= 3, if any
};
DegreeReport q4_degree_report(const OneForm& w);

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One-parameter family written as polynomials in `eps` representing
// eps^{-pole_order} * (P dx + Q dy). Errors when any term sits below the
// declared clearing power; otherwise true iff the ε→0 limit (the coefficient
// form at eps-degree == pole_order) equals `target` coefficientwise.
bool dulac_limit(const OneForm& family, const OneForm& target, int pole_order = 0);
// Same computation, returning the limit form itself.
OneForm dulac_limit_form(const OneForm& family, int pole_order = 0);

}  // namespace bautin
