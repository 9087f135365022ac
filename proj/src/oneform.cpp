#include "bautin/oneform.hpp"

namespace bautin {

OneForm exterior_derivative(const Poly& q) {
    return OneForm{q.diff("x"), q.diff("y")};
}

ExactnessResult is_exact(const OneForm& w) {
    if (w.P.diff("y") != w.Q.diff("x")) return {false, std::nullopt};
    // integrate P along x, then fix the remaining pure-y part from Q
    Poly qx = w.P.integrate("x");
    Poly rest = w.Q - qx.diff("y");
    Poly prim = qx + rest.integrate("y");
    return {true, prim};
}

OneForm weighted_log_form(const Poly& f, const Poly& g) {
    Poly three = Poly::constant(Rat(3));
    Poly two = Poly::constant(Rat(2));
    return OneForm{three * g * f.diff("x") - two * f * g.diff("x"),
                   three * g * f.diff("y") - two * f * g.diff("y")};
}

OneForm q4_form(const Poly& alpha) {
    Poly x = Poly::variable("x"), y = Poly::variable("y");
    Poly one = Poly::constant(Rat(1));
    Poly f2 = x * x + y.scaled(Rat(4)) + one;
    Poly f3 = alpha * x * (x * x + y.scaled(Rat(6))) + y.scaled(Rat(6)) + one;
    return weighted_log_form(f2, f3);
}

OneForm q4_form_symbolic() { return q4_form(Poly::variable("al")); }

DegreeReport q4_degree_report(const OneForm& w) {
    DegreeReport rep;
    const std::vector<std::string> plane{"x", "y"};
    rep.degree_xy = std::max(w.P.degree_in_subset(plane), w.Q.degree_in_subset(plane));
    for (const Poly* p : {&w.P, &w.Q}) {
        for (const auto& [m, c] : p->terms()) {
            int d = 0;
            for (std::size_t i = 0; i < p->vars().size(); ++i)
                if (p->vars()[i] == "x" || p->vars()[i] == "y")
                    d += static_cast<int>(m[i]);
            if (d >= 3) {
                Poly t = Poly::from_terms(p->vars(), {{m, c}});
                rep.residual.push_back((p == &w.P ? "dx: " : "dy: ") + t.str());
            }
        }
    }
    return rep;
}

OneForm dulac_limit_form(const OneForm& family, int pole_order) {
    for (const Poly* p : {&family.P, &family.Q}) {
        int lowest = -1;
        bool any = false;
        for (const auto& [m, c] : p->terms()) {
            int d = 0;
            for (std::size_t i = 0; i < p->vars().size(); ++i)
                if (p->vars()[i] == "eps") d = static_cast<int>(m[i]);
            if (!any || d < lowest) lowest = d, any = true;
        }
        if (any && lowest < pole_order)
            throw PoleError("family has a pole: term of eps-degree " +
                            std::to_string(lowest) + " below clearing power " +
                            std::to_string(pole_order));
    }
    return OneForm{family.P.coeff_of("eps", static_cast<unsigned>(pole_order)),
                   family.Q.coeff_of("eps", static_cast<unsigned>(pole_order))};
}

bool dulac_limit(const OneForm& family, const OneForm& target, int pole_order) {
    OneForm lim = dulac_limit_form(family, pole_order);
    return lim.P == target.P && lim.Q == target.Q;
}

}  // namespace bautin
