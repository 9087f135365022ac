#pragma once
// Sparse exact-rational multivariate polynomials with a canonical graded-lex
// term order. Variable lists are kept sorted by name; arithmetic between
// polynomials over different variable sets aligns them by merging the lists.

#include "bautin/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bautin {

using Mono = std::vector<unsigned>;

// Graded lexicographic, descending: higher total degree first, ties broken by
// the lexicographically larger exponent vector.
struct GrlexGreater {
    bool operator()(const Mono& a, const Mono& b) const {
        unsigned da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

class Poly {
public:
    using TermMap = std::map<Mono, Rat, GrlexGreater>;

    Poly() = default;  // zero polynomial over no variables
    explicit Poly(long long c) {
        if (c != 0) t_.emplace(Mono{}, Rat(c));
    }
    explicit Poly(std::vector<std::string> vars);

    static Poly constant(const Rat& c);
    static Poly variable(const std::string& name);
    static Poly from_terms(std::vector<std::string> vars,
                           std::vector<std::pair<Mono, Rat>> terms);

    // Parse per the text grammar: sum of terms `coef*mono`, `mono`, or `coef`;
    // no parentheses. If `allowed` is given, unknown identifiers are errors and
    // the result is expressed over exactly that variable list.
    static Poly parse(const std::string& text,
                      std::optional<std::vector<std::string>> allowed = std::nullopt);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    // -1 for the zero polynomial
    int total_degree() const;
    int degree_in(const std::string& var) const;
    // max total degree counting only the listed variables
    int degree_in_subset(const std::vector<std::string>& sub) const;

    Poly extended(const std::vector<std::string>& new_vars) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Rat& c) const;
    Poly pow(unsigned k) const;
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly diff(const std::string& var) const;
    // polynomial antiderivative in `var` (constant of integration 0)
    Poly integrate(const std::string& var) const;

    // full evaluation; every variable of the polynomial must be assigned
    Rat eval(const std::vector<std::pair<std::string, Rat>>& assign) const;
    // substitute one variable by a rational; the variable is dropped
    Poly eval_partial(const std::string& var, const Rat& value) const;
    // coefficient of var^k, as a polynomial with `var` dropped
    Poly coeff_of(const std::string& var, unsigned k) const;

    std::string str() const;

private:
    void add_term(const Mono& m, const Rat& c);
    static std::pair<Poly, Poly> aligned(const Poly& a, const Poly& b);
    int var_index(const std::string& name) const;

    std::vector<std::string> vars_;  // sorted, unique
    TermMap t_;
};

}  // namespace bautin
