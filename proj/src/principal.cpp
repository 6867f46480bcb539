#include "triherm/principal.hpp"

#include <set>
#include <utility>

namespace triherm {

namespace {

SymPoly S(const char* name) { return SymPoly::symbol(name); }

// exponent of an s-independent scaling law
int fixed_power(const ExponentFamily& fam) {
    require_internal(fam.j1 == 0, "scaling law depends on the series variable");
    return fam.j0;
}

}  // namespace

std::vector<LambdaTerm> scaled_zero_coefficient(const ExponentFamily& fam,
                                                const LaurentData& data) {
    const int j = fam.at(1);
    std::vector<LambdaTerm> out;
    out.push_back({-j, false, data.constant});
    out.push_back({-j, true, Rat(fam.j1) * data.residue});
    return out;
}

std::vector<LambdaTerm> boundary_lambda_expansion(const DeltaFlags& flags) {
    std::vector<LambdaTerm> out;
    if (flags.d_sharp) {
        out.push_back(
            {-fixed_power(kLawPhiHat0), false, S(sym::kVol) * S(sym::kPhiHat0)});
        out.push_back(
            {-fixed_power(kLawPhi0), false, -(S(sym::kVol) * S(sym::kPhi0))});
    }
    if (flags.d2) {
        out.push_back({-fixed_power(kLawSigma1Hat), false, S(sym::kSigma1Hat)});
        out.push_back({-fixed_power(kLawSigma1), false, -S(sym::kSigma1)});
    }
    if (flags.d1) {
        const LaurentData hat{S(sym::kSk1m1Hat), S(sym::kSk10Hat)};
        const LaurentData plain{S(sym::kSk1m1), S(sym::kSk10)};
        for (const auto& t : scaled_zero_coefficient(kLawSeriesHat, hat))
            out.push_back(t);
        for (const auto& t : scaled_zero_coefficient(kLawSeries, plain))
            out.push_back({t.neg_power, t.has_log, -t.coeff});
    }
    return out;
}

void PrincipalPart::add(int pole, int order, const SymPoly& coeff) {
    if (order != 1 && order != 2)
        throw MalformedLaurent("pole order must be 1 or 2");
    if (order == 2 && pole != 4)
        throw MalformedLaurent("only location 4 may carry a double pole");
    if (coeff.is_zero()) return;
    auto& orders = table_[pole];
    auto [it, fresh] = orders.emplace(order, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) orders.erase(it);
    }
    if (orders.empty()) table_.erase(pole);
}

SymPoly PrincipalPart::coefficient(int pole, int order) const {
    auto it = table_.find(pole);
    if (it == table_.end()) return {};
    auto jt = it->second.find(order);
    return jt == it->second.end() ? SymPoly{} : jt->second;
}

int PrincipalPart::order_at(int pole) const {
    auto it = table_.find(pole);
    return it == table_.end() ? 0 : it->second.rbegin()->first;
}

std::vector<int> PrincipalPart::poles() const {
    std::vector<int> out;
    out.reserve(table_.size());
    for (const auto& [pole, orders] : table_) out.push_back(pole);
    return out;
}

PrincipalPart PrincipalPart::substituted(
    const std::map<std::string, SymPoly>& table) const {
    PrincipalPart out;
    for (const auto& [pole, orders] : table_)
        for (const auto& [order, coeff] : orders)
            out.add(pole, order, coeff.substituted(table));
    return out;
}

PrincipalPart assemble_principal_part(
    const std::vector<LambdaTerm>& expansion) {
    // combine like powers first so cancellation precedes validation
    std::map<std::pair<int, bool>, SymPoly> combined;
    for (const auto& t : expansion)
        combined[{t.neg_power, t.has_log}] += t.coeff;

    PrincipalPart pp;
    for (const auto& [key, coeff] : combined) {
        if (coeff.is_zero()) continue;
        const auto& [power, has_log] = key;
        if (!has_log) {
            pp.add(power, 1, coeff);
        } else {
            if (power != 4)
                throw MalformedLaurent(
                    "logarithmic cutoff term away from power 4");
            pp.add(4, 2, -coeff);
        }
    }
    return pp;
}

PrincipalPart reference_pole_table(const DeltaFlags& flags) {
    PrincipalPart pp;
    if (flags.d_sharp) {
        pp.add(8, 1, S(sym::kVol) * S(sym::kPhiHat0));
        pp.add(0, 1, -(S(sym::kVol) * S(sym::kPhi0)));
    }
    if (flags.d2) {
        pp.add(6, 1, S(sym::kSigma1Hat));
        pp.add(2, 1, -S(sym::kSigma1));
    }
    if (flags.d1) {
        pp.add(4, 2, Rat(-3) * S(sym::kSk1m1Hat) - Rat(3) * S(sym::kSk1m1));
        pp.add(4, 1, S(sym::kSk10Hat) - S(sym::kSk10));
    }
    return pp;
}

std::map<std::string, SymPoly> residue_identity() {
    return {{sym::kSk1m1Hat, S(sym::kSk1m1)}};
}

std::map<std::string, SymPoly> vanishing_residues() {
    return {{sym::kSk1m1, SymPoly{}}, {sym::kSk1m1Hat, SymPoly{}}};
}

std::map<std::string, SymPoly> transform_swap() {
    return {{sym::kPhi0, S(sym::kPhiHat0)},
            {sym::kPhiHat0, S(sym::kPhi0)},
            {sym::kSigma1, S(sym::kSigma1Hat)},
            {sym::kSigma1Hat, S(sym::kSigma1)},
            {sym::kSk10, S(sym::kSk10Hat)},
            {sym::kSk10Hat, S(sym::kSk10)},
            {sym::kSk1m1, S(sym::kSk1m1Hat)},
            {sym::kSk1m1Hat, S(sym::kSk1m1)}};
}

bool fe_symmetry_check(const PrincipalPart& pp,
                       const std::map<std::string, SymPoly>& relabel) {
    std::set<int> locations;
    for (const auto& [pole, orders] : pp.table()) {
        locations.insert(pole);
        locations.insert(8 - pole);
    }
    for (int pole : locations) {
        if (pp.coefficient(8 - pole, 1) !=
            -(pp.coefficient(pole, 1).substituted(relabel)))
            return false;
    }
    // the double pole sits at the fixed point of s -> 8 - s
    const SymPoly c2 = pp.coefficient(4, 2);
    return c2.substituted(relabel) == c2;
}

bool fe_symmetry_check(const PrincipalPart& pp) {
    return fe_symmetry_check(pp, transform_swap());
}

}  // namespace triherm
