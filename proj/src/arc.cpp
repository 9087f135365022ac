#include "bautin/arc.hpp"

#include <sstream>

namespace bautin {

Jet jet_div(const Jet& a, const Jet& b) {
    auto vb = b.valuation();
    if (!vb) throw std::domain_error("jet division by a jet that is zero to truncation");
    auto va = a.valuation();
    if (va && *va < *vb)
        throw std::domain_error("jet division would create a pole");
    // Shift both down by val(b), then do the standard power-series division.
    int n = a.truncation() - *vb;
    std::vector<Rat> num(static_cast<size_t>(n) + 1), den(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        num[static_cast<size_t>(k)] = a.coeff(k + *vb);
        den[static_cast<size_t>(k)] = b.coeff(k + *vb);
    }
    std::vector<Rat> q(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Rat acc = num[static_cast<size_t>(k)];
        for (int i = 0; i < k; ++i)
            acc -= q[static_cast<size_t>(i)] * den[static_cast<size_t>(k - i)];
        q[static_cast<size_t>(k)] = acc / den[0];
    }
    return Jet(std::move(q), n);
}

std::string jet_str(const Jet& j, const std::string& var) {
    std::ostringstream os;
    bool any = false;
    for (int k = 0; k <= j.truncation(); ++k) {
        const Rat& c = j.coeff(k);
        if (c.is_zero()) continue;
        if (any) {
            os << (c.sign() < 0 ? " - " : " + ");
        } else if (c.sign() < 0) {
            os << "-";
        }
        any = true;
        Rat a = c.abs();
        if (k == 0) {
            os << a.str();
        } else {
            if (a != Rat(1)) os << a.str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    if (!any) os << "0";
    return os.str();
}

Arc arc_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object()) throw ParseError("arc JSON must be an object", 0);
    if (!j.contains("truncation") || !j["truncation"].is_number_integer())
        throw ParseError("arc JSON needs integer field 'truncation'", 0);
    int n = j["truncation"].get<int>();
    if (n < 0) throw ParseError("arc truncation must be >= 0", 0);
    if (!j.contains("vars") || !j["vars"].is_object())
        throw ParseError("arc JSON needs object field 'vars'", 0);
    Arc arc(n);
    for (const auto& [name, list] : j["vars"].items()) {
        if (!list.is_array())
            throw ParseError("arc variable '" + name + "' must map to an array", 0);
        if (static_cast<int>(list.size()) > n + 1)
            throw ParseError("arc variable '" + name + "' has more than truncation+1 coefficients", 0);
        Jet jet(n);
        int k = 0;
        for (const auto& c : list) {
            if (!c.is_string())
                throw ParseError("coefficient " + std::to_string(k) + " of '" + name +
                                     "' must be a rational string",
                                 0);
            try {
                jet.set_coeff(k, Rat::parse(c.get<std::string>()));
            } catch (const ParseError& e) {
                throw ParseError("coefficient " + std::to_string(k) + " of '" + name +
                                     "': " + e.what(),
                                 e.pos);
            }
            ++k;
        }
        arc.set(name, std::move(jet));
    }
    if (arc.components().empty())
        throw ParseError("arc JSON assigns no variables", 0);
    return arc;
}

nlohmann::ordered_json arc_to_json(const Arc& arc) {
    nlohmann::ordered_json j;
    j["truncation"] = arc.truncation();
    nlohmann::ordered_json vars = nlohmann::ordered_json::object();
    for (const auto& [name, jet] : arc.components()) {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (int k = 0; k <= jet.truncation(); ++k) list.push_back(jet.coeff(k).str());
        vars[name] = std::move(list);
    }
    j["vars"] = std::move(vars);
    return j;
}

}  // namespace bautin
