#include "hdual/core.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace hdual {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ill_formed_segment: return "IllFormedSegment";
    case ErrorKind::not_a_ladder: return "NotALadder";
    case ErrorKind::invalid_family: return "InvalidFamily";
    case ErrorKind::out_of_range: return "OutOfRange";
    case ErrorKind::ml_precondition_failed: return "MLPreconditionFailed";
    case ErrorKind::ambiguous_at_zero: return "AmbiguousAtZero";
    case ErrorKind::not_normalizable: return "NotNormalizable";
    case ErrorKind::precondition_failed: return "PreconditionFailed";
    case ErrorKind::reconstruction_failed: return "ReconstructionFailed";
    case ErrorKind::non_termination: return "NonTermination";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::validation_error: return "ValidationError";
    case ErrorKind::internal: return "InternalError";
    }
    return "Error";
}

HalfInt HalfInt::parse(const std::string& s) {
    auto fail = [&]() -> HalfInt {
        throw Error(ErrorKind::parse_error, "HalfInt::parse: bad number '" + s + "'");
    };
    if (s.empty()) return fail();
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '-' || s[i] == '+') {
        neg = s[i] == '-';
        ++i;
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) return fail();
    std::int64_t n = std::stoll(s.substr(start, i - start));
    std::int64_t twice = 2 * n;
    if (i < s.size()) {
        if (s.substr(i) != "/2") return fail();
        twice = n;
    }
    return from_twice(neg ? -twice : twice);
}

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

CuspLabel CuspLabel::orthogonal(std::string name, int dim) {
    CuspLabel r{name, dim, Duality::orthogonal, name};
    return r;
}

CuspLabel CuspLabel::symplectic(std::string name, int dim) {
    CuspLabel r{name, dim, Duality::symplectic, name};
    return r;
}

CuspLabel CuspLabel::non_selfdual(std::string name, std::string dual, int dim) {
    if (name == dual)
        throw Error(ErrorKind::validation_error,
                    "CuspLabel::non_selfdual: label '" + name + "' cannot be its own dual");
    return CuspLabel{std::move(name), dim, Duality::non_selfdual, std::move(dual)};
}

CuspLabel CuspLabel::dual() const {
    if (self_dual()) return *this;
    return CuspLabel{dual_name, dim, Duality::non_selfdual, name};
}

const CuspLabel& trivial_label() {
    static const CuspLabel one = CuspLabel::orthogonal("one", 1);
    return one;
}

char group_char(Group g) { return g == Group::B ? 'B' : 'C'; }

Segment make_segment(const CuspLabel& rho, HalfInt x, HalfInt y) {
    if (x < y || !(x - y).is_integer())
        throw Error(ErrorKind::ill_formed_segment,
                    "make_segment: [" + x.str() + "," + y.str() + "] is not a segment");
    return Segment{rho, x, y};
}

bool canonical_less(const Segment& a, const Segment& b) {
    return std::tuple(a.rho.name, a.center2(), a.x) < std::tuple(b.rho.name, b.center2(), b.x);
}

std::vector<Segment> canonicalize(std::vector<Segment> segs) {
    std::stable_sort(segs.begin(), segs.end(), canonical_less);
    return segs;
}

GLData canonicalize(const GLData& data) { return GLData(data.segments()); }

GLData::GLData(std::vector<Segment> segs) : segs_(canonicalize(std::move(segs))) {}

void GLData::add(const Segment& s, int count) {
    for (int i = 0; i < count; ++i) {
        auto pos = std::upper_bound(segs_.begin(), segs_.end(), s, canonical_less);
        segs_.insert(pos, s);
    }
}

int GLData::remove(const Segment& s, int count) {
    int removed = 0;
    for (auto it = segs_.begin(); it != segs_.end() && removed < count;) {
        if (*it == s) {
            it = segs_.erase(it);
            ++removed;
        } else {
            ++it;
        }
    }
    return removed;
}

int GLData::count(const Segment& s) const {
    return static_cast<int>(std::count(segs_.begin(), segs_.end(), s));
}

}  // namespace hdual
