// rittkit: exact differential-algebra toolkit on the command line.
//
// Subcommands cover Ritt reduction with certificates, characteristic sets,
// saturation-ideal membership, coherence, homomorphism-extension witnesses
// with a consistency verifier, a Wronskian over Q(t1), and the difference
// ring (Q[x], sigma(x) = -x).

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rittkit/json_io.hpp"
#include "rittkit/textio.hpp"

using namespace rittkit;

namespace {

RingPtr parse_ring_spec(const std::string& text) {
    int n = 1;
    std::vector<std::string> vars = {"y"};
    std::vector<std::string> coeffs;
    CoeffField field = CoeffField::rationals();
    std::stringstream ss(text);
    std::string item;
    auto split_names = [](const std::string& s) {
        std::vector<std::string> out;
        std::stringstream names(s);
        std::string name;
        while (std::getline(names, name, ':'))
            if (!name.empty()) out.push_back(name);
        return out;
    };
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error("bad ring spec item '" + item + "'");
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        if (key == "N")
            n = std::stoi(val);
        else if (key == "vars")
            vars = split_names(val);
        else if (key == "coeffs")
            coeffs = split_names(val);
        else if (key == "field")
            field = field_from_string(val);
        else if (key == "params")
            field = CoeffField::rational_functions(std::stoi(val));
        else
            throw Error("unknown ring spec key '" + key + "'");
    }
    return RingConfig::make(n, std::move(vars), std::move(field), std::move(coeffs));
}

std::vector<DiffPoly> gather_set(const std::vector<std::string>& exprs, const std::string& file,
                                 const RingPtr& ring) {
    std::vector<DiffPoly> out;
    for (const std::string& e : exprs) out.push_back(parse_poly(e, ring));
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw Error("cannot open input file '" + file + "'");
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            out.push_back(parse_poly(line, ring));
        }
    }
    if (out.empty()) throw Error("no input polynomials (use --set or --file)");
    return out;
}

std::string theta_text(const std::vector<int>& theta) {
    std::string out;
    for (size_t i = 0; i < theta.size(); ++i) {
        if (theta[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "d" + std::to_string(i + 1);
        if (theta[i] > 1) out += "^" + std::to_string(theta[i]);
    }
    return out.empty() ? "1" : out;
}

void print_certificate(const ReductionCertificate& cert) {
    std::cout << "m: " << cert.h_exponent << "\n";
    std::cout << "multiplier: " << to_string(cert.multiplier) << "\n";
    for (const auto& [key, q] : cert.quotients)
        std::cout << "quotient[" << key.member << ", " << theta_text(key.theta)
                  << "]: " << to_string(q) << "\n";
}

void emit(const Json& j) {
    std::cout << j.dump(2) << "\n";
}

std::uint64_t effective_seed(std::uint64_t cli_seed) {
    // The environment variable overrides the flag.
    if (const char* env = std::getenv("RITTKIT_SEED")) return std::strtoull(env, nullptr, 10);
    return cli_seed;
}

Specialization parse_maps(const std::vector<std::string>& maps, int n_params) {
    Specialization phi;
    phi.n_params = n_params;
    CoeffField f = CoeffField::rational_functions(n_params);
    for (const std::string& m : maps) {
        auto eq = m.find('=');
        if (eq == std::string::npos) throw Error("bad --map '" + m + "' (expected symbol=expr)");
        phi.images[m.substr(0, eq)] = parse_ratfun(m.substr(eq + 1), f);
    }
    return phi;
}

struct Options {
    std::string ring_spec = "N=1,vars=y";
    std::vector<std::string> set_exprs;
    std::string set_file;
    std::string target;
    std::string presentation;
    std::string witness;
    std::string n_value;
    std::string poly;
    std::vector<std::string> maps;
    std::vector<std::string> fns;
    std::string format = "text";
    std::uint64_t seed = 42;
    int trials = 200;
    int exponent = 1;
    int params = -1;
};

int dispatch(const CLI::App& app, const Options& o) {
    const bool json = o.format == "json";

    if (app.got_subcommand("reduce")) {
        RingPtr ring = parse_ring_spec(o.ring_spec);
        AutoreducedSet A = AutoreducedSet::make(gather_set(o.set_exprs, o.set_file, ring));
        ReductionCertificate cert = full_reduce(parse_poly(o.target, ring), A);
        if (json) {
            emit(certificate_to_json(cert, A));
        } else {
            std::cout << "remainder: " << to_string(cert.remainder) << "\n";
            print_certificate(cert);
        }
        return 0;
    }
    if (app.got_subcommand("charset")) {
        RingPtr ring = parse_ring_spec(o.ring_spec);
        CharsetResult r = characteristic_set(gather_set(o.set_exprs, o.set_file, ring));
        if (json) {
            emit(charset_to_json(r));
        } else if (r.unit_ideal) {
            std::cout << "UnitIdeal\n";
        } else {
            std::cout << "characteristic set:\n";
            for (const DiffPoly& f : r.set->members()) std::cout << "  " << to_string(f) << "\n";
        }
        return r.unit_ideal ? 1 : 0;
    }
    if (app.got_subcommand("member")) {
        RingPtr ring = parse_ring_spec(o.ring_spec);
        AutoreducedSet A = AutoreducedSet::make(gather_set(o.set_exprs, o.set_file, ring));
        MembershipResult m = membership(parse_poly(o.target, ring), A);
        if (json) {
            emit(membership_to_json(m, A));
        } else if (m.certified) {
            std::cout << "CertifiedMember\n";
            print_certificate(m.certificate);
        } else {
            std::cout << "ReducedNonzero: " << to_string(m.certificate.remainder) << "\n";
        }
        return 0;
    }
    if (app.got_subcommand("coherent")) {
        RingPtr ring = parse_ring_spec(o.ring_spec);
        AutoreducedSet A = AutoreducedSet::make(gather_set(o.set_exprs, o.set_file, ring));
        CoherenceReport rep = coherence_check(A);
        if (json) {
            emit(coherence_to_json(rep, *ring));
        } else {
            std::cout << "coherent: " << (rep.coherent ? "true" : "false") << "\n";
            for (const DeltaPairTrace& t : rep.pairs)
                std::cout << "pair (" << t.i << ", " << t.j << ") at "
                          << to_string(t.common_derivative, *ring)
                          << ": delta = " << to_string(t.delta)
                          << ", remainder = " << to_string(t.remainder) << "\n";
        }
        return rep.coherent ? 0 : 1;
    }
    if (app.got_subcommand("witness")) {
        Presentation p = load_presentation(o.presentation);
        DiffPoly w = witness_chain(p);
        if (json) {
            Json j;
            j["schema"] = 1;
            j["witness"] = to_string(w);
            emit(j);
        } else {
            std::cout << "witness: " << to_string(w) << "\n";
        }
        return 0;
    }
    if (app.got_subcommand("check")) {
        Presentation p = load_presentation(o.presentation);
        if (p.levels() != 1 || p.transcendental(1))
            throw Error("check needs a 1-generator presentation with relations");
        int k = o.params > 0 ? o.params : std::max(p.base_ring()->n_derivations(), 1);
        Specialization phi = parse_maps(o.maps, k);
        ConsistencyVerdict v = specialize_and_check(p.relation_set(1), p.target(), phi);
        if (json)
            emit(verdict_to_json(v));
        else
            std::cout << verdict_name(v.verdict) << ": " << v.reason << "\n";
        return v.verdict == Verdict::Consistent ? 0 : 1;
    }
    if (app.got_subcommand("lift-test")) {
        Presentation p = load_presentation(o.presentation);
        if (p.levels() != 1 || p.transcendental(1))
            throw Error("lift-test needs a 1-generator presentation with relations");
        DiffPoly a = o.witness.empty() ? witness_chain(p) : parse_poly(o.witness, p.base_ring());
        LiftReport rep =
            prime_lift_check(p.relation_set(1), p.target(), a, o.trials, effective_seed(o.seed));
        if (json) {
            emit(lift_report_to_json(rep));
        } else {
            std::cout << "witness: " << to_string(a) << "\n";
            std::cout << "trials: " << rep.trials << "\n";
            std::cout << "consistent: " << rep.consistent << "\n";
            std::cout << "inconsistent: " << rep.inconsistent << "\n";
            std::cout << "unknown: " << rep.unknown << "\n";
            std::cout << "rejected_samples: " << rep.rejected_samples << "\n";
            for (const LiftTrial& t : rep.outcomes) {
                if (t.verdict == Verdict::Consistent) continue;
                std::cout << "trial " << t.index << ": " << verdict_name(t.verdict) << " ("
                          << t.reason << ")";
                for (const auto& [sym, img] : t.phi) std::cout << " " << sym << "=" << img;
                std::cout << "\n";
            }
        }
        return rep.inconsistent == 0 && rep.unknown == 0 ? 0 : 1;
    }
    if (app.got_subcommand("wronskian")) {
        CoeffField f = CoeffField::rational_functions(1);
        std::vector<RatFun> args;
        for (const std::string& s : o.fns) args.push_back(parse_ratfun(s, f));
        RatFun w = wronskian(args);
        if (json) {
            Json j;
            j["schema"] = 1;
            j["wronskian"] = to_string(w, f.params);
            emit(j);
        } else {
            std::cout << to_string(w, f.params) << "\n";
        }
        return 0;
    }
    if (app.got_subcommand("fiber")) {
        FiberReport rep = fiber_nonempty(parse_rat(o.n_value));
        if (json) {
            emit(fiber_to_json(rep));
            return 0;
        }
        SigmaPoly xn = SigmaPoly::x() - SigmaPoly::constant(rep.n);
        std::cout << "fiber over (" << xn.to_text()
                  << "): " << (rep.nonempty ? "nonempty" : "empty") << "\n";
        if (rep.nonempty) {
            std::cout << "witness: " << rep.witness->to_text() << "\n";
        } else {
            std::cout << "n = " << rat_to_string(rep.n) << " = (" << rat_to_string(rep.square_root)
                      << ")^2 is a nonzero rational square\n";
            for (const FiberRefutationStep& s : rep.refutation)
                std::cout << "divisor " << s.divisor.to_text() << ": sigma maps it to "
                          << s.sigma_image.to_text() << "; a sigma-stable ideal would contain ("
                          << s.divisor.to_text() << ") + (" << s.sigma_image.to_text()
                          << ") = " << rat_to_string(s.forced_constant) << ", a nonzero constant\n";
            std::cout << "no transformally prime ideal of (Q[x], sigma(x) = -x) lies over ("
                      << xn.to_text() << ")\n";
        }
        return 0;
    }
    if (app.got_subcommand("sigma")) {
        SigmaPoly f = SigmaPoly::parse(o.poly);
        if (json) {
            Json j;
            j["schema"] = 1;
            j["input"] = f.to_text();
            j["sigma"] = sigma_apply(f).to_text();
            emit(j);
        } else {
            std::cout << sigma_apply(f).to_text() << "\n";
        }
        return 0;
    }
    if (app.got_subcommand("demo-liftfail")) {
        LiftObstructionReport rep = lift_obstruction_demo(o.exponent);
        if (json) {
            emit(lift_obstruction_to_json(rep));
        } else {
            std::cout << "lifting x^2 -> "
                      << (rep.exponent == 1 ? "y" : "y^" + std::to_string(rep.exponent)) << ": "
                      << (rep.obstructed ? "obstructed" : "lift exists") << "\n";
            for (const std::string& fact : rep.facts) std::cout << "  " << fact << "\n";
        }
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rittkit: exact computer algebra for differential polynomial rings"};
    Options o;
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd, bool with_ring) {
        cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
        if (with_ring)
            cmd->add_option("--ring", o.ring_spec, "ring spec, e.g. N=2,vars=y1:y2,field=Q");
        return cmd;
    };
    auto add_set = [&](CLI::App* cmd) {
        cmd->add_option("--set", o.set_exprs, "member polynomial (repeatable)");
        cmd->add_option("--file", o.set_file, "file with one polynomial per line");
    };

    auto* c = add_common(app.add_subcommand("reduce", "Ritt-reduce a target against an autoreduced set"), true);
    add_set(c);
    c->add_option("--target", o.target)->required();

    c = add_common(app.add_subcommand("charset", "characteristic set of a finite generating set"), true);
    add_set(c);

    c = add_common(app.add_subcommand("member", "saturation-ideal membership test with certificate"), true);
    add_set(c);
    c->add_option("--target", o.target)->required();

    c = add_common(app.add_subcommand("coherent", "Rosenfeld coherence check with delta-pair traces"), true);
    add_set(c);

    c = add_common(app.add_subcommand("witness", "homomorphism-extension witness for a presentation"), false);
    c->add_option("--presentation", o.presentation)->required();

    c = add_common(app.add_subcommand("check", "specialize a presentation and run the consistency verifier"), false);
    c->add_option("--presentation", o.presentation)->required();
    c->add_option("--map", o.maps, "coefficient image, e.g. u=t1^2 (repeatable)");
    c->add_option("--params", o.params, "parameter count of Q(t1..tk)");

    c = add_common(app.add_subcommand("lift-test", "randomized prime-lifting property harness"), false);
    c->add_option("--presentation", o.presentation)->required();
    c->add_option("--witness", o.witness, "override the computed witness element");
    c->add_option("--trials", o.trials);
    c->add_option("--seed", o.seed, "PRNG seed (RITTKIT_SEED overrides)");

    c = add_common(app.add_subcommand("wronskian", "Wronskian determinant over Q(t1)"), false);
    c->add_option("--fn", o.fns, "rational function of t1 (repeatable)")->required();

    c = add_common(app.add_subcommand("fiber", "fiber of (x - n) under x -> x^2 in the difference ring"), false);
    c->add_option("--n", o.n_value)->required();

    c = add_common(app.add_subcommand("sigma", "apply sigma(x) = -x to a polynomial"), false);
    c->add_option("--poly", o.poly)->required();

    c = add_common(app.add_subcommand("demo-liftfail", "mechanical lifting obstruction over (Q(y), trivial sigma)"), false);
    c->add_option("--exponent", o.exponent, "exponent e of the target y^e");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors are exit 2
    }
    try {
        return dispatch(app, o);
    } catch (const SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
