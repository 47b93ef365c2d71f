#pragma once

#include "hdual/rep.hpp"
#include "hdual/rhodata.hpp"

#include <map>
#include <string>

namespace hdual {

/// Group and declared labels; "one" (orthogonal, dim 1) is always known.
struct Context {
    Group group = Group::C;
    std::map<std::string, CuspLabel> labels;

    Context();
    const CuspLabel& label(const std::string& name) const;
    void declare(const CuspLabel& rho);
};

/// Reads "#group" and "#rho" directives, then one representation.
///   rep  := "L(" gl ("," gl)* ";" temp ")" | temp
///   gl   := "D(" rho "," num "," num ")"
///   temp := "pi(" [item ("," item)*] ")"
///   item := rho ":" int ":" ("+" | "-" | "pair")
/// Throws ParseError, or ValidationError when the data break an invariant.
ClassicalRep parse_rep(const std::string& text, Context& ctx);
ClassicalRep parse_rep(const std::string& text);

/// Label for --rho style arguments, after the directives of text have been read.
CuspLabel parse_label(const std::string& name, const Context& ctx);

std::string print_segment(const Segment& s);
std::string print_tempered(const TemperedParam& phi);
std::string print_rep(const ClassicalRep& rep);
/// print_rep preceded by the directives needed to read it back.
std::string print_document(const ClassicalRep& rep);
std::string print_rho_data(const RhoData& data);

}  // namespace hdual
