#include "hdual/notation.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace hdual {

Context::Context() { declare(trivial_label()); }

const CuspLabel& Context::label(const std::string& name) const {
    auto it = labels.find(name);
    if (it == labels.end()) throw Error(ErrorKind::parse_error, "unknown label '" + name + "'");
    return it->second;
}

void Context::declare(const CuspLabel& rho) {
    labels[rho.name] = rho;
    if (!rho.self_dual()) labels[rho.dual_name] = rho.dual();
}

CuspLabel parse_label(const std::string& name, const Context& ctx) { return ctx.label(name); }

namespace {

class Parser {
public:
    Parser(const std::string& text, Context& ctx) : s_(text), ctx_(ctx) {}

    ClassicalRep document() {
        directives();
        ClassicalRep rep = representation();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return rep;
    }

private:
    const std::string& s_;
    Context& ctx_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::parse_error, "parse error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(const std::string& lit) {
        skip();
        return s_.compare(pos_, lit.size(), lit) == 0;
    }

    void expect(const std::string& lit) {
        if (!peek(lit)) fail("expected '" + lit + "'");
        pos_ += lit.size();
    }

    std::string word() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a word");
        return s_.substr(start, pos_ - start);
    }

    std::string identifier() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        if (start == pos_) fail("expected a label");
        return s_.substr(start, pos_ - start);
    }

    std::string number_text() {
        skip();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (s_.compare(pos_, 2, "/2") == 0) pos_ += 2;
        if (start == pos_) fail("expected a number");
        return s_.substr(start, pos_ - start);
    }

    HalfInt number() {
        std::size_t at = pos_;
        std::string t = number_text();
        try {
            return HalfInt::parse(t);
        } catch (const Error&) {
            pos_ = at;
            fail("bad number '" + t + "'");
        }
    }

    int integer() {
        HalfInt h = number();
        if (!h.is_integer()) fail("expected an integer");
        return static_cast<int>(h.as_integer());
    }

    const CuspLabel& label() {
        std::string name = identifier();
        auto it = ctx_.labels.find(name);
        if (it == ctx_.labels.end()) fail("unknown label '" + name + "'");
        return it->second;
    }

    void directives() {
        while (peek("#")) {
            std::string head = word();
            if (head == "#group") {
                std::string g = word();
                if (g == "B")
                    ctx_.group = Group::B;
                else if (g == "C")
                    ctx_.group = Group::C;
                else
                    fail("group must be B or C");
            } else if (head == "#rho") {
                std::string name = word();
                std::string dim_text = word();
                std::string kind = word();
                int dim = 0;
                try {
                    dim = std::stoi(dim_text);
                } catch (const std::exception&) {
                    fail("bad dimension '" + dim_text + "'");
                }
                if (dim <= 0) fail("dimension must be positive");
                if (kind == "orth")
                    ctx_.declare(CuspLabel::orthogonal(name, dim));
                else if (kind == "symp")
                    ctx_.declare(CuspLabel::symplectic(name, dim));
                else if (kind.rfind("nsd:", 0) == 0 && kind.size() > 4)
                    ctx_.declare(CuspLabel::non_selfdual(name, kind.substr(4), dim));
                else
                    fail("label kind must be orth, symp or nsd:<dual>");
            } else {
                fail("unknown directive '" + head + "'");
            }
        }
    }

    TemperedParam tempered() {
        expect("pi(");
        TemperedParam phi(ctx_.group);
        std::map<std::pair<std::string, int>, Sign> seen;
        if (peek(")")) {
            ++pos_;
            return phi;
        }
        while (true) {
            CuspLabel rho = label();
            expect(":");
            int a = integer();
            if (a <= 0) fail("dimension of S_a must be positive");
            expect(":");
            if (peek("pair")) {
                pos_ += 4;
                phi.add_pair(rho, a);
            } else if (peek("+") || peek("-")) {
                Sign sign = s_[pos_] == '+' ? Sign::plus : Sign::minus;
                ++pos_;
                auto key = std::make_pair(rho.name, a);
                auto it = seen.find(key);
                if (it != seen.end() && it->second != sign)
                    throw Error(ErrorKind::validation_error,
                                "summand " + rho.name + ":" + std::to_string(a) + " carries both signs");
                seen[key] = sign;
                phi.add(rho, a, sign);
            } else {
                fail("expected '+', '-' or 'pair'");
            }
            if (peek(",")) {
                ++pos_;
                continue;
            }
            expect(")");
            return phi;
        }
    }

    Segment segment() {
        expect("D(");
        CuspLabel rho = label();
        expect(",");
        HalfInt x = number();
        expect(",");
        HalfInt y = number();
        expect(")");
        if (x < y || !same_line(x, y)) fail("[" + x.str() + "," + y.str() + "] is not a segment");
        return Segment{rho, x, y};
    }

    ClassicalRep representation() {
        if (peek("L(")) {
            pos_ += 2;
            std::vector<Segment> segs{segment()};
            while (peek(",")) {
                ++pos_;
                segs.push_back(segment());
            }
            expect(";");
            TemperedParam phi = tempered();
            expect(")");
            return ClassicalRep{GLData(std::move(segs)), std::move(phi)};
        }
        if (peek("pi(")) return ClassicalRep{GLData(), tempered()};
        fail("expected 'L(' or 'pi('");
    }
};

}  // namespace

ClassicalRep parse_rep(const std::string& text, Context& ctx) {
    Parser p(text, ctx);
    ClassicalRep rep = p.document();
    if (auto bad = validate(rep)) throw Error(ErrorKind::validation_error, "parse_rep: " + *bad);
    return rep;
}

ClassicalRep parse_rep(const std::string& text) {
    Context ctx;
    return parse_rep(text, ctx);
}

std::string print_segment(const Segment& s) {
    return "D(" + s.rho.name + "," + s.x.str() + "," + s.y.str() + ")";
}

std::string print_tempered(const TemperedParam& phi) {
    std::string out = "pi(";
    bool first = true;
    auto sep = [&]() {
        if (!first) out += ",";
        first = false;
    };
    for (const auto& e : phi.gp()) {
        for (int i = 0; i < e.count; ++i) {
            sep();
            out += e.rho.name + ":" + std::to_string(e.a) + ":" + sign_char(e.sign);
        }
    }
    for (const auto& e : phi.ngp()) {
        for (int i = 0; i < e.count; ++i) {
            sep();
            out += e.rho.name + ":" + std::to_string(e.a) + ":pair";
        }
    }
    return out + ")";
}

std::string print_rep(const ClassicalRep& rep) {
    if (rep.gl.empty()) return print_tempered(rep.tempered);
    std::string out = "L(";
    bool first = true;
    for (const auto& s : rep.gl) {
        if (!first) out += ",";
        first = false;
        out += print_segment(s);
    }
    return out + "; " + print_tempered(rep.tempered) + ")";
}

std::string print_document(const ClassicalRep& rep) {
    std::ostringstream out;
    if (rep.group() == Group::B) out << "#group B ";
    std::map<std::string, CuspLabel> used;
    auto note = [&](const CuspLabel& r) {
        if (r.name == trivial_label().name && r.duality == trivial_label().duality && r.dim == 1) return;
        used.emplace(r.self_dual() ? r.name : pair_label(r).name, r.self_dual() ? r : pair_label(r));
    };
    for (const auto& s : rep.gl) note(s.rho);
    for (const auto& e : rep.tempered.gp()) note(e.rho);
    for (const auto& e : rep.tempered.ngp()) note(e.rho);
    for (const auto& [name, r] : used) {
        out << "#rho " << name << " " << r.dim << " ";
        if (r.duality == Duality::orthogonal)
            out << "orth";
        else if (r.duality == Duality::symplectic)
            out << "symp";
        else
            out << "nsd:" << r.dual_name;
        out << " ";
    }
    out << print_rep(rep);
    return out.str();
}

std::string print_rho_data(const RhoData& data) {
    if (data.entries.empty()) return "[" + print_rep(data.terminal) + "]";
    return "[" + format_entries(data.entries) + "; " + print_rep(data.terminal) + "]";
}

}  // namespace hdual
