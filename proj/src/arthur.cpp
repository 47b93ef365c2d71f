#include "hdual/arthur.hpp"

#include <algorithm>
#include <tuple>

namespace hdual {

bool parity_same_type(const CuspLabel& rho, int a, Group group) {
    if (!rho.self_dual() || a <= 0) return false;
    bool odd = a % 2 == 1;
    bool orth = rho.duality == Duality::orthogonal;
    // (rho orthogonal, a odd) and (rho symplectic, a even) are orthogonal
    bool summand_orthogonal = orth == odd;
    return group == Group::C ? summand_orthogonal : !summand_orthogonal;
}

CuspLabel pair_label(const CuspLabel& rho) {
    if (rho.self_dual() || rho.name < rho.dual_name) return rho;
    return rho.dual();
}

namespace {

auto gp_key(const CuspLabel& rho, int a) { return std::tuple(rho.name, a); }

}  // namespace

int TemperedParam::multiplicity(const CuspLabel& rho, int a) const {
    if (a == 0) return parity_same_type(rho, 2, group_) ? 1 : 0;
    for (const auto& e : gp_)
        if (e.rho == rho && e.a == a) return e.count;
    return 0;
}

std::optional<Sign> TemperedParam::sign_of(const CuspLabel& rho, int a) const {
    if (a == 0) {
        if (parity_same_type(rho, 2, group_)) return Sign::plus;
        return std::nullopt;
    }
    for (const auto& e : gp_)
        if (e.rho == rho && e.a == a) return e.sign;
    return std::nullopt;
}

int TemperedParam::pairs(const CuspLabel& rho, int a) const {
    CuspLabel key = pair_label(rho);
    for (const auto& e : ngp_)
        if (e.rho == key && e.a == a) return e.count;
    return 0;
}

void TemperedParam::add(const CuspLabel& rho, int a, Sign sign, int count) {
    if (a == 0 || count <= 0) return;
    auto it = std::lower_bound(gp_.begin(), gp_.end(), gp_key(rho, a),
                               [](const GPEntry& e, const auto& key) { return gp_key(e.rho, e.a) < key; });
    if (it != gp_.end() && it->rho == rho && it->a == a) {
        it->count += count;
        return;
    }
    gp_.insert(it, GPEntry{rho, a, count, sign});
}

void TemperedParam::remove(const CuspLabel& rho, int a, int count) {
    if (a == 0 || count <= 0) return;
    for (auto it = gp_.begin(); it != gp_.end(); ++it) {
        if (it->rho == rho && it->a == a) {
            if (it->count < count) break;
            it->count -= count;
            if (it->count == 0) gp_.erase(it);
            return;
        }
    }
    throw Error(ErrorKind::internal, "TemperedParam::remove: not enough copies of " + rho.name + ":" +
                                         std::to_string(a));
}

void TemperedParam::set_sign(const CuspLabel& rho, int a, Sign sign) {
    for (auto& e : gp_)
        if (e.rho == rho && e.a == a) e.sign = sign;
}

void TemperedParam::add_pair(const CuspLabel& rho, int a, int count) {
    if (count <= 0) return;
    CuspLabel key = pair_label(rho);
    auto it = std::lower_bound(ngp_.begin(), ngp_.end(), gp_key(key, a),
                               [](const NGPEntry& e, const auto& k) { return gp_key(e.rho, e.a) < k; });
    if (it != ngp_.end() && it->rho == key && it->a == a) {
        it->count += count;
        return;
    }
    ngp_.insert(it, NGPEntry{key, a, count});
}

void TemperedParam::remove_pair(const CuspLabel& rho, int a, int count) {
    if (count <= 0) return;
    CuspLabel key = pair_label(rho);
    for (auto it = ngp_.begin(); it != ngp_.end(); ++it) {
        if (it->rho == key && it->a == a) {
            if (it->count < count) break;
            it->count -= count;
            if (it->count == 0) ngp_.erase(it);
            return;
        }
    }
    throw Error(ErrorKind::internal, "TemperedParam::remove_pair: not enough pairs at " + key.name + ":" +
                                         std::to_string(a));
}

long long TemperedParam::dimension() const {
    long long d = 0;
    for (const auto& e : gp_) d += static_cast<long long>(e.rho.dim) * e.a * e.count;
    for (const auto& e : ngp_) d += 2LL * e.rho.dim * e.a * e.count;
    return d;
}

long long TemperedParam::rank() const {
    long long d = dimension();
    return group_ == Group::C ? (d - 1) / 2 : d / 2;
}

int delta(const TemperedParam& phi, const CuspLabel& rho, int d) {
    if (phi.multiplicity(rho, d) == 0 || phi.multiplicity(rho, d - 2) == 0) return 0;
    return *phi.sign_of(rho, d) != *phi.sign_of(rho, d - 2) ? 1 : 0;
}

std::optional<std::string> validate(const TemperedParam& phi) {
    Sign product = Sign::plus;
    for (const auto& e : phi.gp()) {
        std::string tag = e.rho.name + ":" + std::to_string(e.a);
        if (e.a <= 0 || e.count <= 0) return "bad multiplicity data at " + tag;
        if (!parity_same_type(e.rho, e.a, phi.group()))
            return "summand " + tag + " is not of good parity for group " + group_char(phi.group());
        product = product * sign_power(e.sign, e.count);
    }
    for (const auto& e : phi.ngp()) {
        std::string tag = e.rho.name + ":" + std::to_string(e.a);
        if (e.a <= 0 || e.count <= 0) return "bad pair data at " + tag;
        if (parity_same_type(e.rho, e.a, phi.group())) return "pair " + tag + " is of good parity";
    }
    if (product != Sign::plus) return std::string("sign product is -");
    long long d = phi.dimension();
    if (phi.group() == Group::C && d % 2 == 0) return "dimension " + std::to_string(d) + " is even for group C";
    if (phi.group() == Group::B && d % 2 == 1) return "dimension " + std::to_string(d) + " is odd for group B";
    return std::nullopt;
}

int AParameter::multiplicity(const CuspLabel& rho, int a, int b) const {
    return static_cast<int>(std::count(summands.begin(), summands.end(), ASummand{rho, a, b}));
}

void AParameter::add(const CuspLabel& rho, int a, int b, int count) {
    for (int i = 0; i < count; ++i) summands.push_back(ASummand{rho, a, b});
}

}  // namespace hdual
