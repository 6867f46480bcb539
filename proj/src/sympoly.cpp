#include "triherm/sympoly.hpp"

#include <sstream>

namespace triherm {

SymPoly::SymPoly(const Rat& c) { add_term({}, c); }

SymPoly SymPoly::symbol(const std::string& name) {
    SymPoly p;
    p.add_term({{name, 1}}, Rat(1));
    return p;
}

void SymPoly::add_term(const Monomial& m, const Rat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SymPoly SymPoly::operator-() const {
    SymPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    SymPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (const auto& [name, e] : mb) m[name] += e;
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

SymPoly operator*(const Rat& c, const SymPoly& p) {
    SymPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : p.terms_) r.terms_.emplace(m, c * k);
    return r;
}

SymPoly SymPoly::substituted(
    const std::map<std::string, SymPoly>& table) const {
    SymPoly out;
    for (const auto& [m, c] : terms_) {
        SymPoly term{c};
        for (const auto& [name, e] : m) {
            auto it = table.find(name);
            const SymPoly base =
                (it != table.end()) ? it->second : symbol(name);
            for (int k = 0; k < e; ++k) term = term * base;
        }
        out += term;
    }
    return out;
}

std::string SymPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < Rat(0);
        const Rat a = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const bool unit = a == Rat(1);
        if (!unit || m.empty()) os << a.str();
        bool lead = unit && !m.empty();
        for (const auto& [name, e] : m) {
            if (!lead) os << "*";
            lead = false;
            os << name;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace triherm
