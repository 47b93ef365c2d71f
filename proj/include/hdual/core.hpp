#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hdual {

enum class ErrorKind {
    ill_formed_segment,
    not_a_ladder,
    invalid_family,
    out_of_range,
    ml_precondition_failed,
    ambiguous_at_zero,
    not_normalizable,
    precondition_failed,
    reconstruction_failed,
    non_termination,
    parse_error,
    validation_error,
    internal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// Element of (1/2)Z, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int v) : twice_(2 * static_cast<std::int64_t>(v)) {}

    static constexpr HalfInt from_twice(std::int64_t t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }
    /// Accepts "n", "-n", "n/2", "-n/2".
    static HalfInt parse(const std::string& s);

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    /// Value as an integer; only meaningful when is_integer().
    constexpr std::int64_t as_integer() const { return twice_ / 2; }

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
    HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
    HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

    constexpr auto operator<=>(const HalfInt&) const = default;

    std::string str() const;

private:
    std::int64_t twice_ = 0;
};

inline const HalfInt half = HalfInt::from_twice(1);

/// True when a and b differ by an integer.
inline bool same_line(HalfInt a, HalfInt b) { return (a - b).is_integer(); }

enum class Sign : std::int8_t { minus = -1, plus = 1 };

inline Sign operator*(Sign a, Sign b) {
    return static_cast<int>(a) * static_cast<int>(b) > 0 ? Sign::plus : Sign::minus;
}
inline Sign operator-(Sign a) { return a == Sign::plus ? Sign::minus : Sign::plus; }
inline Sign sign_power(Sign s, long long n) { return (n % 2 == 0) ? Sign::plus : s; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

enum class Duality { orthogonal, symplectic, non_selfdual };

/// Label for a unitary supercuspidal representation of GL_d.
struct CuspLabel {
    std::string name;
    int dim = 1;
    Duality duality = Duality::orthogonal;
    std::string dual_name;  // equals name for self-dual labels

    static CuspLabel orthogonal(std::string name, int dim = 1);
    static CuspLabel symplectic(std::string name, int dim = 2);
    static CuspLabel non_selfdual(std::string name, std::string dual, int dim = 1);

    bool self_dual() const { return duality != Duality::non_selfdual; }
    CuspLabel dual() const;

    bool operator==(const CuspLabel& o) const { return name == o.name; }
    bool operator<(const CuspLabel& o) const { return name < o.name; }
};

/// The trivial character of GL_1, the default label "one".
const CuspLabel& trivial_label();

enum class Group { B, C };

char group_char(Group g);

/// Delta_rho[x,y]: x - y is a non-negative integer.
struct Segment {
    CuspLabel rho;
    HalfInt x;
    HalfInt y;

    int length() const { return static_cast<int>((x - y).as_integer()) + 1; }
    /// x + y, twice the central exponent.
    HalfInt center2() const { return x + y; }

    bool operator==(const Segment& o) const { return rho == o.rho && x == o.x && y == o.y; }
};

Segment make_segment(const CuspLabel& rho, HalfInt x, HalfInt y);

/// Canonical sort key: rho name, then x+y, then x.
bool canonical_less(const Segment& a, const Segment& b);

/// Multisegment kept in canonical order.
class GLData {
public:
    GLData() = default;
    explicit GLData(std::vector<Segment> segs);

    const std::vector<Segment>& segments() const { return segs_; }
    bool empty() const { return segs_.empty(); }
    std::size_t size() const { return segs_.size(); }
    auto begin() const { return segs_.begin(); }
    auto end() const { return segs_.end(); }

    void add(const Segment& s, int count = 1);
    /// Removes up to count copies; returns how many were removed.
    int remove(const Segment& s, int count = 1);
    int count(const Segment& s) const;

    bool operator==(const GLData& o) const { return segs_ == o.segs_; }

private:
    std::vector<Segment> segs_;
};

GLData canonicalize(const GLData& data);
std::vector<Segment> canonicalize(std::vector<Segment> segs);

struct SupportPoint {
    CuspLabel rho;
    HalfInt z;
    bool operator==(const SupportPoint& o) const { return rho == o.rho && z == o.z; }
};

}  // namespace hdual
