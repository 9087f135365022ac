#pragma once
// Exact rational arithmetic used throughout the library.
// Canonical form: reduced fraction with positive denominator (maintained by
// the boost backend); printing is "p" or "p/q".

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bautin {

using BigInt = boost::multiprecision::cpp_int;

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t at)
        : std::runtime_error(msg), pos(at) {}
};

class Rat {
public:
    Rat() : v_(0) {}
    Rat(long long n) : v_(n) {}  // NOLINT: implicit by design
    Rat(long long num, long long den) : v_(num) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_ /= den;
    }
    explicit Rat(const BigInt& num, const BigInt& den = 1) : v_(num) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_ /= den;
    }

    static Rat parse(const std::string& text, std::size_t base_pos = 0) {
        std::size_t i = 0;
        auto fail = [&](const std::string& m) -> void {
            throw ParseError(m, base_pos + i);
        };
        bool neg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
            neg = text[i] == '-';
            ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            fail("expected digit in rational literal");
        BigInt num = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            num = num * 10 + (text[i++] - '0');
        BigInt den = 1;
        if (i < text.size() && text[i] == '/') {
            ++i;
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                fail("expected digit after '/' in rational literal");
            den = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                den = den * 10 + (text[i++] - '0');
            if (den == 0) fail("zero denominator");
        }
        if (i != text.size()) fail("trailing characters in rational literal");
        Rat r;
        r.v_ = boost::multiprecision::cpp_rational(num, den);
        if (neg) r.v_ = -r.v_;
        return r;
    }

    std::string str() const {
        std::string s = numerator().str();
        if (denominator() != 1) s += "/" + denominator().str();
        return s;
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }
    Rat abs() const { return v_ < 0 ? Rat(-*this) : *this; }

    Rat operator-() const {
        Rat r;
        r.v_ = -v_;
        return r;
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.v_ == 0) throw std::domain_error("division by zero rational");
        v_ /= o.v_;
        return *this;
    }
    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat pow(unsigned k) const {
        Rat acc(1), base = *this;
        while (k) {
            if (k & 1u) acc *= base;
            base *= base;
            k >>= 1u;
        }
        return acc;
    }

    Rat inv() const {
        if (v_ == 0) throw std::domain_error("inverse of zero");
        Rat r(1);
        r.v_ /= v_;
        return r;
    }

    double to_double() const { return v_.convert_to<double>(); }
    long double to_long_double() const { return v_.convert_to<long double>(); }

private:
    boost::multiprecision::cpp_rational v_;
};

inline Rat gcd(const Rat& a, const Rat& b) {
    // gcd on integers embedded in Rat (used for projective normalization)
    return Rat(boost::multiprecision::gcd(a.numerator(), b.numerator()));
}

}  // namespace bautin
