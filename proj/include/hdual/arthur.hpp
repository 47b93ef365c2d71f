#pragma once

#include "hdual/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hdual {

/// rho (x) S_a is self-dual of the same type as the dual group.
bool parity_same_type(const CuspLabel& rho, int a, Group group);

/// Good-parity isotype rho (x) S_a with multiplicity and its sign.
struct GPEntry {
    CuspLabel rho;
    int a = 1;
    int count = 1;
    Sign sign = Sign::plus;
    bool operator==(const GPEntry& o) const {
        return rho == o.rho && a == o.a && count == o.count && sign == o.sign;
    }
};

/// count copies of rho (x) S_a + rho^v (x) S_a; rho stored under the smaller of the two names.
struct NGPEntry {
    CuspLabel rho;
    int a = 1;
    int count = 1;
    bool operator==(const NGPEntry& o) const { return rho == o.rho && a == o.a && count == o.count; }
};

/// Tempered L-parameter phi with character eta, kept per isotype.
class TemperedParam {
public:
    TemperedParam() = default;
    explicit TemperedParam(Group g) : group_(g) {}

    Group group() const { return group_; }
    const std::vector<GPEntry>& gp() const { return gp_; }
    const std::vector<NGPEntry>& ngp() const { return ngp_; }
    bool empty() const { return gp_.empty() && ngp_.empty(); }

    /// m_phi(rho (x) S_a); for a = 0 this is 1 exactly when rho (x) S_2 is of good parity.
    int multiplicity(const CuspLabel& rho, int a) const;
    /// eta(rho (x) S_a), with eta(rho (x) S_0) = + under the same convention.
    std::optional<Sign> sign_of(const CuspLabel& rho, int a) const;
    /// Number of non-good-parity pairs at (rho, a); rho may be either member of a dual pair.
    int pairs(const CuspLabel& rho, int a) const;

    /// Adds copies of rho (x) S_a; an existing isotype keeps its sign. a = 0 is ignored.
    void add(const CuspLabel& rho, int a, Sign sign, int count = 1);
    /// Removes copies; a = 0 is ignored. Throws if fewer are present.
    void remove(const CuspLabel& rho, int a, int count = 1);
    void set_sign(const CuspLabel& rho, int a, Sign sign);
    void add_pair(const CuspLabel& rho, int a, int count = 1);
    void remove_pair(const CuspLabel& rho, int a, int count = 1);

    /// Dimension of phi.
    long long dimension() const;
    /// n with G = G_n; only meaningful for valid parameters.
    long long rank() const;

    bool operator==(const TemperedParam& o) const {
        return group_ == o.group_ && gp_ == o.gp_ && ngp_ == o.ngp_;
    }

private:
    Group group_ = Group::C;
    std::vector<GPEntry> gp_;
    std::vector<NGPEntry> ngp_;
};

/// The label under which a non-good-parity pair is stored.
CuspLabel pair_label(const CuspLabel& rho);

/// 1 iff m_d m_{d-2} != 0 and the two signs differ.
int delta(const TemperedParam& phi, const CuspLabel& rho, int d);

/// First violated invariant, or nullopt.
std::optional<std::string> validate(const TemperedParam& phi);

struct ASummand {
    CuspLabel rho;
    int a = 1;
    int b = 1;
    bool operator==(const ASummand& o) const { return rho == o.rho && a == o.a && b == o.b; }
};

struct AParameter {
    Group group = Group::C;
    std::vector<ASummand> summands;

    int multiplicity(const CuspLabel& rho, int a, int b) const;
    void add(const CuspLabel& rho, int a, int b, int count = 1);
};

}  // namespace hdual
