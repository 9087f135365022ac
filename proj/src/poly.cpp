#include "bautin/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bautin {

Poly::Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

Poly Poly::constant(const Rat& c) {
    Poly p;
    if (!c.is_zero()) p.t_.emplace(Mono{}, c);
    return p;
}

Poly Poly::variable(const std::string& name) {
    Poly p(std::vector<std::string>{name});
    p.t_.emplace(Mono{1}, Rat(1));
    return p;
}

Poly Poly::from_terms(std::vector<std::string> vars,
                      std::vector<std::pair<Mono, Rat>> terms) {
    Poly p(std::move(vars));
    for (auto& [m, c] : terms) {
        if (m.size() != p.vars_.size())
            throw std::invalid_argument("exponent vector length mismatch");
        p.add_term(m, c);
    }
    return p;
}

void Poly::add_term(const Mono& m, const Rat& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

int Poly::var_index(const std::string& name) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name) return -1;
    return static_cast<int>(it - vars_.begin());
}

Poly Poly::extended(const std::vector<std::string>& new_vars) const {
    std::vector<std::string> merged = vars_;
    merged.insert(merged.end(), new_vars.begin(), new_vars.end());
    Poly out(std::move(merged));
    std::vector<int> remap(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
        remap[i] = out.var_index(vars_[i]);
    for (const auto& [m, c] : t_) {
        Mono nm(out.vars_.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) nm[remap[i]] = m[i];
        out.t_.emplace(std::move(nm), c);
    }
    return out;
}

std::pair<Poly, Poly> Poly::aligned(const Poly& a, const Poly& b) {
    if (a.vars_ == b.vars_) return {a, b};
    return {a.extended(b.vars_), b.extended(a.vars_)};
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& [m, c] : p.t_) c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (vars_ != o.vars_) {
        auto [a, b] = aligned(*this, o);
        a += b;
        return *this = std::move(a);
    }
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (vars_ != o.vars_) {
        auto [a, b] = aligned(*this, o);
        a -= b;
        return *this = std::move(a);
    }
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.vars_ != b.vars_) {
        auto [x, y] = Poly::aligned(a, b);
        return x * y;
    }
    Poly out;
    out.vars_ = a.vars_;
    for (const auto& [ma, ca] : a.t_) {
        for (const auto& [mb, cb] : b.t_) {
            Mono m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Poly Poly::scaled(const Rat& c) const {
    Poly p;
    p.vars_ = vars_;
    if (c.is_zero()) return p;
    for (const auto& [m, v] : t_) p.t_.emplace(m, v * c);
    return p;
}

Poly Poly::pow(unsigned k) const {
    Poly acc = Poly::constant(Rat(1)).extended(vars_);
    Poly base = *this;
    while (k) {
        if (k & 1u) acc = acc * base;
        base = base * base;
        k >>= 1u;
    }
    return acc;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.vars_ == b.vars_) return a.t_ == b.t_;
    auto [x, y] = Poly::aligned(a, b);
    return x.t_ == y.t_;
}

int Poly::total_degree() const {
    if (t_.empty()) return -1;
    unsigned d = 0;
    for (unsigned e : t_.begin()->first) d += e;  // max by grlex order
    return static_cast<int>(d);
}

int Poly::degree_in(const std::string& var) const {
    int idx = var_index(var);
    if (idx < 0) return t_.empty() ? -1 : 0;
    int best = -1;
    for (const auto& [m, c] : t_)
        best = std::max(best, static_cast<int>(m[idx]));
    return best;
}

int Poly::degree_in_subset(const std::vector<std::string>& sub) const {
    if (t_.empty()) return -1;
    std::vector<int> idx;
    for (const auto& v : sub)
        if (int i = var_index(v); i >= 0) idx.push_back(i);
    int best = 0;
    for (const auto& [m, c] : t_) {
        int d = 0;
        for (int i : idx) d += static_cast<int>(m[i]);
        best = std::max(best, d);
    }
    return best;
}

Poly Poly::diff(const std::string& var) const {
    int idx = var_index(var);
    Poly out;
    out.vars_ = vars_;
    if (idx < 0) return out;
    for (const auto& [m, c] : t_) {
        if (m[idx] == 0) continue;
        Mono nm = m;
        nm[idx] -= 1;
        out.add_term(nm, c * Rat(static_cast<long long>(m[idx])));
    }
    return out;
}

Poly Poly::integrate(const std::string& var) const {
    Poly self = var_index(var) >= 0 ? *this : extended({var});
    int idx = self.var_index(var);
    Poly out;
    out.vars_ = self.vars_;
    for (const auto& [m, c] : self.t_) {
        Mono nm = m;
        nm[idx] += 1;
        out.add_term(nm, c / Rat(static_cast<long long>(nm[idx])));
    }
    return out;
}

Rat Poly::eval(const std::vector<std::pair<std::string, Rat>>& assign) const {
    std::vector<const Rat*> val(vars_.size(), nullptr);
    for (const auto& [name, v] : assign) {
        int i = var_index(name);
        if (i >= 0) val[static_cast<std::size_t>(i)] = &v;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (!val[i])
            throw std::invalid_argument("eval: missing assignment for variable " + vars_[i]);
    Rat acc(0);
    for (const auto& [m, c] : t_) {
        Rat term = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) term *= val[i]->pow(m[i]);
        acc += term;
    }
    return acc;
}

Poly Poly::eval_partial(const std::string& var, const Rat& value) const {
    int idx = var_index(var);
    if (idx < 0) return *this;
    std::vector<std::string> nv;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (static_cast<int>(i) != idx) nv.push_back(vars_[i]);
    Poly out(nv);
    for (const auto& [m, c] : t_) {
        Mono nm;
        nm.reserve(m.size() - 1);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (static_cast<int>(i) != idx) nm.push_back(m[i]);
        out.add_term(nm, c * value.pow(m[static_cast<std::size_t>(idx)]));
    }
    return out;
}

Poly Poly::coeff_of(const std::string& var, unsigned k) const {
    int idx = var_index(var);
    if (idx < 0) {
        if (k == 0) return *this;
        Poly z;
        z.vars_ = vars_;
        return z;
    }
    std::vector<std::string> nv;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (static_cast<int>(i) != idx) nv.push_back(vars_[i]);
    Poly out(nv);
    for (const auto& [m, c] : t_) {
        if (m[static_cast<std::size_t>(idx)] != k) continue;
        Mono nm;
        nm.reserve(m.size() - 1);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (static_cast<int>(i) != idx) nm.push_back(m[i]);
        out.add_term(nm, c);
    }
    return out;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        bool neg = c.sign() < 0;
        Rat a = c.abs();
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        std::string body;
        if (mono.empty())
            body = a.str();
        else if (a == Rat(1))
            body = mono;
        else
            body = a.str() + "*" + mono;
        if (first) {
            os << (neg ? "-" : "") << body;
            first = false;
        } else {
            os << (neg ? " - " : " + ") << body;
        }
    }
    return os.str();
}

namespace {

struct Tok {
    enum Kind { NUM, IDENT, PLUS, MINUS, STAR, CARET, SLASH, END } kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}
    Tok next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::size_t at = i_;
        if (i_ >= s_.size()) return {Tok::END, "", at};
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            Tok t{Tok::NUM, s_.substr(i_, j - i_), at};
            i_ = j;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            Tok t{Tok::IDENT, s_.substr(i_, j - i_), at};
            i_ = j;
            return t;
        }
        ++i_;
        switch (c) {
            case '+': return {Tok::PLUS, "+", at};
            case '-': return {Tok::MINUS, "-", at};
            case '*': return {Tok::STAR, "*", at};
            case '^': return {Tok::CARET, "^", at};
            case '/': return {Tok::SLASH, "/", at};
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", at);
        }
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
};

}  // namespace

Poly Poly::parse(const std::string& text,
                 std::optional<std::vector<std::string>> allowed) {
    Lexer lex(text);
    Tok tok = lex.next();
    auto expect_not_end = [&](const char* what) {
        if (tok.kind == Tok::END)
            throw ParseError(std::string("unexpected end of input, expected ") + what,
                             text.size());
    };
    Poly result;
    if (allowed) result = Poly(*allowed);
    bool first_term = true;
    while (true) {
        if (tok.kind == Tok::END) {
            if (first_term)
                throw ParseError("empty polynomial text", 0);
            break;
        }
        int sign = 1;
        if (tok.kind == Tok::PLUS || tok.kind == Tok::MINUS) {
            if (first_term && tok.kind == Tok::PLUS)
                throw ParseError("unexpected leading '+'", tok.pos);
            sign = tok.kind == Tok::MINUS ? -1 : 1;
            tok = lex.next();
        } else if (!first_term) {
            throw ParseError("expected '+' or '-' between terms", tok.pos);
        }
        expect_not_end("a term");
        // one term: factors joined by '*'
        Rat coef(sign);
        std::vector<std::pair<std::string, unsigned>> factors;
        bool more = true;
        bool any_factor = false;
        while (more) {
            if (tok.kind == Tok::NUM) {
                BigInt num(tok.text);
                tok = lex.next();
                BigInt den = 1;
                if (tok.kind == Tok::SLASH) {
                    tok = lex.next();
                    if (tok.kind != Tok::NUM)
                        throw ParseError("expected digits after '/'", tok.pos);
                    den = BigInt(tok.text);
                    if (den == 0) throw ParseError("zero denominator", tok.pos);
                    tok = lex.next();
                }
                coef *= Rat(num, den);
                any_factor = true;
            } else if (tok.kind == Tok::IDENT) {
                std::string name = tok.text;
                std::size_t npos = tok.pos;
                if (allowed &&
                    std::find(allowed->begin(), allowed->end(), name) == allowed->end())
                    throw ParseError("unknown variable '" + name + "'", npos);
                tok = lex.next();
                unsigned exp = 1;
                if (tok.kind == Tok::CARET) {
                    tok = lex.next();
                    if (tok.kind != Tok::NUM)
                        throw ParseError("expected exponent digits after '^'", tok.pos);
                    exp = static_cast<unsigned>(std::stoul(tok.text));
                    tok = lex.next();
                }
                factors.emplace_back(name, exp);
                any_factor = true;
            } else {
                throw ParseError("expected a coefficient or variable", tok.pos);
            }
            if (tok.kind == Tok::STAR) {
                tok = lex.next();
                expect_not_end("a factor after '*'");
            } else {
                more = false;
            }
        }
        if (!any_factor) throw ParseError("empty term", tok.pos);
        Poly term = Poly::constant(coef);
        for (const auto& [name, exp] : factors)
            term = term * Poly::variable(name).pow(exp);
        result += term;
        first_term = false;
    }
    if (allowed) result = result.extended(*allowed);
    return result;
}

}  // namespace bautin
