#include "hdual/rep.hpp"

#include "hdual/glrep.hpp"

#include <map>

namespace hdual {

long long ClassicalRep::rank() const {
    long long n = tempered.rank();
    for (const auto& s : gl) n += static_cast<long long>(s.rho.dim) * s.length();
    return n;
}

std::optional<std::string> validate(const ClassicalRep& rep) {
    for (const auto& s : rep.gl) {
        if (s.x < s.y || !same_line(s.x, s.y))
            return "segment [" + s.x.str() + "," + s.y.str() + "] is ill-formed";
        if (!(s.center2() < HalfInt(0)))
            return "segment " + s.rho.name + "[" + s.x.str() + "," + s.y.str() + "] has non-negative central exponent";
    }
    return validate(rep.tempered);
}

Segment dual_segment(const Segment& s) { return Segment{s.rho.dual(), -s.y, -s.x}; }

std::vector<SupportPoint> cuspidal_support(const ClassicalRep& rep) {
    std::vector<SupportPoint> out;
    for (const auto& s : rep.gl) {
        for (HalfInt z = s.x; z >= s.y; z -= 1) {
            out.push_back({s.rho, z});
            out.push_back({s.rho.dual(), -z});
        }
    }
    for (const auto& e : rep.tempered.gp()) {
        HalfInt top = HalfInt::from_twice(e.a - 1);
        for (int c = 0; c < e.count; ++c)
            for (HalfInt z = top; z >= -top; z -= 1) out.push_back({e.rho, z});
    }
    for (const auto& e : rep.tempered.ngp()) {
        HalfInt top = HalfInt::from_twice(e.a - 1);
        for (int c = 0; c < e.count; ++c) {
            for (HalfInt z = top; z >= -top; z -= 1) {
                out.push_back({e.rho, z});
                out.push_back({e.rho.dual(), z});
            }
        }
    }
    return out;
}

std::vector<CuspLabel> support_labels(const ClassicalRep& rep) {
    std::map<std::string, CuspLabel> seen;
    auto note = [&](const CuspLabel& r) {
        seen.emplace(r.name, r);
        if (!r.self_dual()) {
            CuspLabel d = r.dual();
            seen.emplace(d.name, d);
        }
    };
    for (const auto& s : rep.gl) note(s.rho);
    for (const auto& e : rep.tempered.gp()) note(e.rho);
    for (const auto& e : rep.tempered.ngp()) note(e.rho);
    std::vector<CuspLabel> out;
    for (auto& [name, r] : seen) out.push_back(r);
    return out;
}

LineKind line_kind(const CuspLabel& rho, HalfInt x, Group group) {
    if (!rho.self_dual()) return LineKind::non_selfdual;
    HalfInt ax = x < HalfInt(0) ? -x : x;
    int a = static_cast<int>(ax.twice()) + 1;
    return parity_same_type(rho, a, group) ? LineKind::good : LineKind::bad;
}

GLData nsd_model(const ClassicalRep& rep, const CuspLabel& rho) {
    CuspLabel c = pair_label(rho);
    CuspLabel cd = c.dual();
    std::vector<Segment> t;
    for (const auto& s : rep.gl) {
        if (s.rho == c)
            t.push_back(s);
        else if (s.rho == cd)
            t.push_back(dual_segment(s));
    }
    for (const auto& e : rep.tempered.ngp()) {
        if (!(e.rho == c)) continue;
        HalfInt z = HalfInt::from_twice(e.a - 1);
        for (int i = 0; i < e.count; ++i) t.push_back(Segment{c, z, -z});
    }
    return GLData(std::move(t));
}

ClassicalRep nsd_restore(const ClassicalRep& base, const GLData& t, const CuspLabel& rho) {
    CuspLabel c = pair_label(rho);
    CuspLabel cd = c.dual();
    std::vector<Segment> gl;
    for (const auto& s : base.gl)
        if (!(s.rho == c) && !(s.rho == cd)) gl.push_back(s);
    TemperedParam temp = base.tempered;
    for (const auto& e : base.tempered.ngp())
        if (e.rho == c) temp.remove_pair(e.rho, e.a, e.count);
    for (const auto& s : t) {
        if (!(s.rho == c)) throw Error(ErrorKind::internal, "nsd_restore: foreign label in model");
        HalfInt c2 = s.center2();
        if (c2 < HalfInt(0))
            gl.push_back(s);
        else if (c2 > HalfInt(0))
            gl.push_back(dual_segment(s));
        else
            temp.add_pair(c, s.length());
    }
    return ClassicalRep{GLData(std::move(gl)), std::move(temp)};
}

namespace {

bool on_pair_line(int a, HalfInt x) { return same_line(HalfInt::from_twice(a - 1), x); }

}  // namespace

GLData bad_line_model(const ClassicalRep& rep, const CuspLabel& rho, HalfInt x) {
    std::vector<Segment> t;
    for (const auto& s : rep.gl) {
        if (s.rho == rho && same_line(s.x, x)) {
            t.push_back(s);
            t.push_back(dual_segment(s));
        }
    }
    for (const auto& e : rep.tempered.ngp()) {
        if (!(e.rho == rho) || !on_pair_line(e.a, x)) continue;
        HalfInt z = HalfInt::from_twice(e.a - 1);
        for (int i = 0; i < 2 * e.count; ++i) t.push_back(Segment{rho, z, -z});
    }
    return GLData(std::move(t));
}

ClassicalRep bad_line_restore(const ClassicalRep& base, const GLData& t, const CuspLabel& rho, HalfInt x) {
    std::vector<Segment> gl;
    for (const auto& s : base.gl)
        if (!(s.rho == rho && same_line(s.x, x))) gl.push_back(s);
    TemperedParam temp = base.tempered;
    for (const auto& e : base.tempered.ngp())
        if (e.rho == rho && on_pair_line(e.a, x)) temp.remove_pair(e.rho, e.a, e.count);
    std::map<int, int> centred;
    for (const auto& s : t) {
        HalfInt c2 = s.center2();
        if (c2 < HalfInt(0)) {
            if (t.count(s) != t.count(dual_segment(s)))
                throw Error(ErrorKind::precondition_failed,
                            "bad_line_restore: result is not self-dual, outside the doubled model");
            gl.push_back(s);
        } else if (c2 == HalfInt(0)) {
            ++centred[s.length()];
        }
    }
    for (auto [a, n] : centred) {
        if (n % 2 != 0) throw Error(ErrorKind::precondition_failed,
                                        "bad_line_restore: odd number of centred segments, outside the doubled model");
        temp.add_pair(rho, a, n / 2);
    }
    return ClassicalRep{GLData(std::move(gl)), std::move(temp)};
}

DerivativeResult model_highest_derivative(const ClassicalRep& rep, const CuspLabel& rho, HalfInt x) {
    DerivativeResult out;
    if (!rho.self_dual()) {
        CuspLabel c = pair_label(rho);
        GLData t = nsd_model(rep, rho);
        auto r = (rho == c) ? gl_left_highest(t, c, x) : gl_right_highest(t, c, -x);
        out.order = r.order;
        out.rep = r.order ? nsd_restore(rep, r.result, rho) : rep;
        return out;
    }
    if (!(x > HalfInt(0)) || line_kind(rho, x, rep.group()) != LineKind::bad)
        throw Error(ErrorKind::precondition_failed, "model_highest_derivative: needs a bad line and x > 0");
    GLData t = bad_line_model(rep, rho, x);
    auto left = gl_left_highest(t, rho, x);
    out.order = left.order;
    if (left.order == 0) {
        out.rep = rep;
        return out;
    }
    auto right = gl_right_highest(left.result, rho, -x);
    if (right.order != left.order)
        throw Error(ErrorKind::precondition_failed, "model_highest_derivative: doubled model lost its symmetry");
    out.rep = bad_line_restore(rep, right.result, rho, x);
    for (const auto& s : rep.gl) {
        if (s.rho == rho && same_line(s.x, x)) {
            out.warnings.push_back("unverified-case");
            break;
        }
    }
    return out;
}

ClassicalRep model_socle(const ClassicalRep& rep, const CuspLabel& rho, HalfInt x, int k) {
    if (k <= 0) return rep;
    if (!rho.self_dual()) {
        CuspLabel c = pair_label(rho);
        GLData t = nsd_model(rep, rho);
        GLData up = (rho == c) ? gl_left_underivative(t, c, x, k) : gl_right_underivative(t, c, -x, k);
        return nsd_restore(rep, up, rho);
    }
    if (!(x > HalfInt(0)) || line_kind(rho, x, rep.group()) != LineKind::bad)
        throw Error(ErrorKind::precondition_failed, "model_socle: needs a bad line and x > 0");
    GLData t = bad_line_model(rep, rho, x);
    GLData up = gl_left_underivative(gl_right_underivative(t, rho, -x, k), rho, x, k);
    return bad_line_restore(rep, up, rho, x);
}

}  // namespace hdual
