// Command-line front end: derivatives, rho-data, Aubert duals and irreducibility tests.

#include "hdual/aubert.hpp"
#include "hdual/jantzen.hpp"
#include "hdual/notation.hpp"
#include "hdual/rhodata.hpp"
#include "hdual/tempered.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

using namespace hdual;

namespace {

enum Exit { ok = 0, bad_input = 1, ambiguous = 2, internal_failure = 3 };

struct Options {
    std::string rep;
    std::string rho = "one";
    std::string x;
    std::string sign = "+";
    std::string kind;
    int a = 0;
    std::string format = "text";
};

bool records(const Options& o) { return o.format == "records"; }

void warn_all(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

int run_derive(const Options& o) {
    Context ctx;
    ClassicalRep rep = parse_rep(o.rep, ctx);
    CuspLabel rho = parse_label(o.rho, ctx);
    HalfInt x = HalfInt::parse(o.x);
    DerivativeResult d = highest_derivative(rep, rho, x);
    warn_all(d.warnings);
    if (records(o))
        std::cout << "order=" << d.order << "\trep=" << print_rep(d.rep) << "\tmult=" << d.multiplicity << "\n";
    else
        std::cout << "order " << d.order << "\nresult " << print_rep(d.rep) << "\nmultiplicity " << d.multiplicity
                  << "\n";
    return ok;
}

int run_rho_data(const Options& o) {
    Context ctx;
    ClassicalRep rep = parse_rep(o.rep, ctx);
    CuspLabel rho = parse_label(o.rho, ctx);
    Sign eps = o.sign == "-" ? Sign::minus : Sign::plus;
    RhoData d = rho_data(rep, eps, rho);
    if (!records(o)) {
        std::cout << print_rho_data(d) << "\n";
        return ok;
    }
    for (const auto& e : d.entries) std::cout << "x=" << e.x.str() << "\torder=" << e.k << "\n";
    std::cout << "rep=" << print_rep(d.terminal) << "\n";
    return ok;
}

int run_aubert(const Options& o) {
    Context ctx;
    ClassicalRep rep = parse_rep(o.rep, ctx);
    DualResult r = aubert_dual(rep);
    warn_all(r.warnings);
    const char* resolved = r.resolved ? "true" : "false";
    if (records(o)) {
        for (const auto& c : r.candidates) std::cout << "rep=" << print_rep(c) << "\tresolved=" << resolved << "\n";
    } else {
        for (const auto& c : r.candidates) std::cout << print_rep(c) << "\n";
        std::cout << "candidates " << r.candidates.size() << ", resolved " << resolved << "\n";
    }
    return r.resolved ? ok : ambiguous;
}

int run_tempered(const Options& o) {
    Context ctx;
    ClassicalRep rep = parse_rep(o.rep, ctx);
    bool t = is_tempered_by_data(rep);
    if (records(o))
        std::cout << "rep=" << print_rep(rep) << "\ttempered=" << (t ? "true" : "false") << "\n";
    else
        std::cout << (t ? "tempered" : "not tempered") << "\n";
    return ok;
}

int run_irreducible(const Options& o) {
    Context ctx;
    ClassicalRep rep = parse_rep(o.rep, ctx);
    if (!rep.is_tempered()) throw Error(ErrorKind::precondition_failed, "irreducible: --rep must be tempered");
    CuspLabel rho = parse_label(o.rho, ctx);
    Irreducibility answer = Irreducibility::undetermined;
    auto from_bool = [](bool b) { return b ? Irreducibility::irreducible : Irreducibility::reducible; };
    if (o.kind == "rho") {
        answer = from_bool(irr_rho_induction(rep.tempered, rho, o.a));
    } else if (o.kind == "rho1") {
        answer = from_bool(irr1(rep.tempered, rho, o.a));
    } else {
        if (o.x.empty()) throw Error(ErrorKind::precondition_failed, "irreducible: --x is required for " + o.kind);
        auto v = o.kind == "delta" ? DeltaVariant::plain : DeltaVariant::with_delta01;
        answer = irr_delta_induction(rep.tempered, rho, HalfInt::parse(o.x), v);
    }
    const char* word = answer == Irreducibility::irreducible ? "irreducible"
                       : answer == Irreducibility::reducible ? "reducible"
                                                             : "undetermined";
    if (records(o))
        std::cout << "kind=" << o.kind << "\tresult=" << word << "\n";
    else
        std::cout << word << "\n";
    return ok;
}

int exit_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::parse_error:
        case ErrorKind::validation_error:
        case ErrorKind::precondition_failed:
        case ErrorKind::invalid_family:
        case ErrorKind::out_of_range:
        case ErrorKind::ambiguous_at_zero:
        case ErrorKind::ml_precondition_failed:
        case ErrorKind::ill_formed_segment:
        case ErrorKind::not_a_ladder:
            return bad_input;
        default:
            return internal_failure;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Highest derivatives and Aubert duals for p-adic SO(2n+1) and Sp(2n)"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "text or records")
        ->check(CLI::IsMember({"text", "records"}))
        ->capture_default_str();

    auto rep_opt = [&](CLI::App* sub) {
        sub->add_option("--rep", o.rep, "representation, with optional directives")->required();
    };

    auto* derive = app.add_subcommand("derive", "highest derivative at rho|.|^x");
    rep_opt(derive);
    derive->add_option("--rho", o.rho)->capture_default_str();
    derive->add_option("--x", o.x)->required();

    auto* rho_data_cmd = app.add_subcommand("rho-data", "iterated extremal derivatives");
    rep_opt(rho_data_cmd);
    rho_data_cmd->add_option("--rho", o.rho)->capture_default_str();
    rho_data_cmd->add_option("--sign", o.sign)->check(CLI::IsMember({"+", "-"}))->capture_default_str();

    auto* aubert = app.add_subcommand("aubert", "Langlands data of the Aubert dual");
    rep_opt(aubert);

    auto* tempered = app.add_subcommand("tempered", "temperedness read off from the rho-data");
    rep_opt(tempered);

    auto* irreducible = app.add_subcommand("irreducible", "irreducibility of small parabolic inductions");
    rep_opt(irreducible);
    irreducible->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"rho", "delta", "delta01", "rho1"}));
    irreducible->add_option("--rho", o.rho)->capture_default_str();
    irreducible->add_option("--a", o.a, "S_a for rho, a for rho1");
    irreducible->add_option("--x", o.x, "exponent for delta and delta01");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : bad_input;
    }

    try {
        if (*derive) return run_derive(o);
        if (*rho_data_cmd) return run_rho_data(o);
        if (*aubert) return run_aubert(o);
        if (*tempered) return run_tempered(o);
        if (*irreducible) return run_irreducible(o);
    } catch (const Error& e) {
        std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
        return exit_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return internal_failure;
    }
    return internal_failure;
}
