#pragma once

#include "bautin/rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bautin {

// Truncated power series in eps: coefficients c0..cN, exact modulo eps^{N+1}.
// The coefficient ring R is Rat for concrete arcs and Poly for arcs whose
// coefficients carry a symbolic deformation parameter.
template <class R>
class JetT {
public:
    JetT() : coeffs_(1, R(0)) {}

    explicit JetT(int truncation) : coeffs_(check_trunc(truncation) + 1, R(0)) {}

    JetT(std::vector<R> coeffs, int truncation)
        : coeffs_(std::move(coeffs)) {
        check_trunc(truncation);
        coeffs_.resize(static_cast<size_t>(truncation) + 1, R(0));
    }

    static JetT constant(const R& value, int truncation) {
        JetT j(truncation);
        j.coeffs_[0] = value;
        return j;
    }

    static JetT monomial(const R& value, int power, int truncation) {
        JetT j(truncation);
        if (power < 0) throw std::invalid_argument("jet monomial power must be >= 0");
        if (power <= truncation) j.coeffs_[static_cast<size_t>(power)] = value;
        return j;
    }

    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<R>& coefficients() const { return coeffs_; }

    const R& coeff(int k) const {
        static const R zero(0);
        if (k < 0 || k > truncation()) return zero;
        return coeffs_[static_cast<size_t>(k)];
    }

    void set_coeff(int k, const R& value) {
        if (k < 0 || k > truncation())
            throw std::out_of_range("jet coefficient index out of range");
        coeffs_[static_cast<size_t>(k)] = value;
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const R& c) { return c.is_zero(); });
    }

    // Smallest k with c_k != 0; nullopt means zero through the truncation order.
    std::optional<int> valuation() const {
        for (size_t k = 0; k < coeffs_.size(); ++k)
            if (!coeffs_[k].is_zero()) return static_cast<int>(k);
        return std::nullopt;
    }

    JetT truncated(int new_truncation) const {
        check_trunc(new_truncation);
        std::vector<R> c(coeffs_.begin(),
                         coeffs_.begin() + std::min<size_t>(coeffs_.size(),
                                                            static_cast<size_t>(new_truncation) + 1));
        return JetT(std::move(c), new_truncation);
    }

    JetT operator-() const {
        JetT r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend JetT operator+(const JetT& a, const JetT& b) {
        int n = std::min(a.truncation(), b.truncation());
        JetT r(n);
        for (int k = 0; k <= n; ++k) r.coeffs_[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
        return r;
    }

    friend JetT operator-(const JetT& a, const JetT& b) {
        int n = std::min(a.truncation(), b.truncation());
        JetT r(n);
        for (int k = 0; k <= n; ++k) r.coeffs_[static_cast<size_t>(k)] = a.coeff(k) - b.coeff(k);
        return r;
    }

    friend JetT operator*(const JetT& a, const JetT& b) {
        int n = std::min(a.truncation(), b.truncation());
        JetT r(n);
        for (int i = 0; i <= n; ++i) {
            if (a.coeff(i).is_zero()) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (b.coeff(j).is_zero()) continue;
                r.coeffs_[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
            }
        }
        return r;
    }

    JetT& operator+=(const JetT& o) { return *this = *this + o; }
    JetT& operator-=(const JetT& o) { return *this = *this - o; }
    JetT& operator*=(const JetT& o) { return *this = *this * o; }

    JetT scaled(const R& c) const {
        JetT r = *this;
        for (auto& x : r.coeffs_) x = x * c;
        return r;
    }

    // Composition with eps -> c * eps: c_k becomes c^k * c_k.
    JetT compose_scale(const R& c) const {
        if (c.is_zero()) throw std::invalid_argument("reparameterization factor must be nonzero");
        JetT r = *this;
        R p(1);
        for (size_t k = 1; k < r.coeffs_.size(); ++k) {
            p = p * c;
            r.coeffs_[k] = r.coeffs_[k] * p;
        }
        return r;
    }

    friend bool operator==(const JetT& a, const JetT& b) {
        if (a.truncation() != b.truncation()) return false;
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const JetT& a, const JetT& b) { return !(a == b); }

private:
    static int check_trunc(int n) {
        if (n < 0) throw std::invalid_argument("jet truncation must be >= 0");
        return n;
    }

    std::vector<R> coeffs_;
};

using Jet = JetT<Rat>;

// Exact quotient a/b of rational jets; requires val(b) <= val(a) and the
// division to come out clean at the truncation order kept (N - val(b)).
Jet jet_div(const Jet& a, const Jet& b);

// Human-readable "c0 + c1*e + c2*e^2" form used in diagnostics.
std::string jet_str(const Jet& j, const std::string& var = "e");

}  // namespace bautin
