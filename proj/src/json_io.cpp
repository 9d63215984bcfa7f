#include "rittkit/json_io.hpp"

#include <fstream>

#include "rittkit/textio.hpp"

namespace rittkit {

namespace {

Json theta_to_json(const std::vector<int>& theta) {
    return Json(theta);
}

}  // namespace

Json certificate_to_json(const ReductionCertificate& cert, const AutoreducedSet& A) {
    Json j;
    j["schema"] = 1;
    j["m"] = cert.h_exponent;
    j["multiplier"] = to_string(cert.multiplier);
    Json quots = Json::array();
    for (const auto& [key, q] : cert.quotients) {
        Json entry;
        entry["member_index"] = key.member;
        entry["member"] = to_string(A.member(key.member));
        entry["theta"] = theta_to_json(key.theta);
        entry["q"] = to_string(q);
        quots.push_back(std::move(entry));
    }
    j["quotients"] = std::move(quots);
    j["remainder"] = to_string(cert.remainder);
    return j;
}

Json membership_to_json(const MembershipResult& m, const AutoreducedSet& A) {
    Json j;
    j["schema"] = 1;
    j["result"] = m.certified ? "CertifiedMember" : "ReducedNonzero";
    j["certificate"] = certificate_to_json(m.certificate, A);
    j["certificate"].erase("schema");
    return j;
}

Json charset_to_json(const CharsetResult& r) {
    Json j;
    j["schema"] = 1;
    if (r.unit_ideal) {
        j["result"] = "UnitIdeal";
    } else {
        j["result"] = "CharacteristicSet";
        Json members = Json::array();
        for (const DiffPoly& f : r.set->members()) members.push_back(to_string(f));
        j["members"] = std::move(members);
    }
    return j;
}

Json coherence_to_json(const CoherenceReport& r, const RingConfig& ring) {
    Json j;
    j["schema"] = 1;
    j["coherent"] = r.coherent;
    Json pairs = Json::array();
    for (const DeltaPairTrace& t : r.pairs) {
        Json entry;
        entry["i"] = t.i;
        entry["j"] = t.j;
        entry["common_derivative"] = to_string(t.common_derivative, ring);
        entry["delta"] = to_string(t.delta);
        entry["remainder"] = to_string(t.remainder);
        pairs.push_back(std::move(entry));
    }
    j["pairs"] = std::move(pairs);
    return j;
}

Json autoreduced_check_to_json(const AutoreducedCheck& c) {
    Json j;
    j["schema"] = 1;
    j["autoreduced"] = c.ok;
    if (!c.ok) {
        j["reason"] = c.reason;
        j["i"] = c.i;
        if (c.j >= 0) j["j"] = c.j;
    }
    return j;
}

Json verdict_to_json(const ConsistencyVerdict& v) {
    Json j;
    j["schema"] = 1;
    j["verdict"] = verdict_name(v.verdict);
    j["reason"] = v.reason;
    return j;
}

Json lift_report_to_json(const LiftReport& r) {
    Json j;
    j["schema"] = 1;
    j["trials"] = r.trials;
    j["consistent"] = r.consistent;
    j["inconsistent"] = r.inconsistent;
    j["unknown"] = r.unknown;
    j["rejected_samples"] = r.rejected_samples;
    Json failures = Json::array();
    for (const LiftTrial& t : r.outcomes) {
        if (t.verdict == Verdict::Consistent) continue;
        Json entry;
        entry["trial"] = t.index;
        entry["verdict"] = verdict_name(t.verdict);
        entry["reason"] = t.reason;
        Json phi;
        for (const auto& [sym, img] : t.phi) phi[sym] = img;
        entry["phi"] = std::move(phi);
        failures.push_back(std::move(entry));
    }
    j["failures"] = std::move(failures);
    return j;
}

Json fiber_to_json(const FiberReport& r) {
    Json j;
    j["schema"] = 1;
    j["n"] = rat_to_string(r.n);
    j["fiber"] = r.nonempty ? "nonempty" : "empty";
    if (r.nonempty) {
        j["witness"] = r.witness->to_text();
    } else {
        j["square_root"] = rat_to_string(r.square_root);
        Json steps = Json::array();
        for (const FiberRefutationStep& s : r.refutation) {
            Json entry;
            entry["divisor"] = s.divisor.to_text();
            entry["sigma_image"] = s.sigma_image.to_text();
            entry["forced_constant"] = rat_to_string(s.forced_constant);
            steps.push_back(std::move(entry));
        }
        j["refutation"] = std::move(steps);
    }
    return j;
}

Json lift_obstruction_to_json(const LiftObstructionReport& r) {
    Json j;
    j["schema"] = 1;
    j["exponent"] = r.exponent;
    j["obstructed"] = r.obstructed;
    if (!r.obstructed) j["lift_image"] = r.lift_image;
    j["facts"] = r.facts;
    return j;
}

CoeffField field_from_string(const std::string& s) {
    if (s == "Q" || s.empty()) return CoeffField::rationals();
    if (s.size() >= 2 && s[0] == 'F') {
        long p = std::stol(s.substr(1));
        return CoeffField::prime_field(p);
    }
    // Q(t1..tk) or Q(t)
    if (s.rfind("Q(", 0) == 0 && s.back() == ')') {
        std::string inner = s.substr(2, s.size() - 3);
        if (inner == "t" || inner == "t1") return CoeffField::rational_functions(1);
        auto dots = inner.find("..");
        if (dots != std::string::npos && inner.rfind("t1", 0) == 0) {
            std::string last = inner.substr(dots + 2);
            if (last.size() > 1 && last[0] == 't') {
                int k = std::stoi(last.substr(1));
                return CoeffField::rational_functions(k);
            }
        }
    }
    throw Error("cannot parse field '" + s + "' (expected Q, F<p>, or Q(t1..tk))");
}

std::string field_to_string(const CoeffField& f) {
    switch (f.kind) {
        case FieldKind::Rationals:
            return "Q";
        case FieldKind::PrimeField:
            return "F" + std::to_string(f.prime);
        case FieldKind::RationalFunctions:
            if (f.params.size() == 1) return "Q(t1)";
            return "Q(t1..t" + std::to_string(f.params.size()) + ")";
    }
    return "?";
}

Presentation presentation_from_json(const Json& j) {
    if (!j.contains("schema") || j["schema"] != 1) throw Error("unsupported presentation schema");
    const Json& ring = j.at("ring");
    int n = ring.value("derivations", 1);
    CoeffField field = field_from_string(ring.value("field", "Q"));
    std::vector<std::string> symbols;
    if (ring.contains("coeff_symbols"))
        symbols = ring.at("coeff_symbols").get<std::vector<std::string>>();
    RingPtr base = RingConfig::make(n, symbols, field);

    std::vector<std::string> generators = j.at("generators").get<std::vector<std::string>>();
    const Json& levels = j.at("levels");
    if (levels.size() != generators.size())
        throw Error("presentation needs one level per generator");

    // Level rings mirror Presentation's construction.
    std::vector<std::vector<DiffPoly>> relations;
    std::vector<std::string> coeffs = symbols;
    for (size_t i = 0; i < generators.size(); ++i) {
        RingPtr level = RingConfig::make(n, {generators[i]}, field, coeffs);
        std::vector<DiffPoly> rel;
        if (levels[i].contains("relations"))
            for (const auto& src : levels[i].at("relations"))
                rel.push_back(parse_poly(src.get<std::string>(), level));
        relations.push_back(std::move(rel));
        coeffs.push_back(generators[i]);
        if (i + 1 == generators.size()) {
            DiffPoly target = parse_poly(j.at("target").get<std::string>(), level);
            return Presentation(base, generators, std::move(relations), std::move(target));
        }
    }
    throw Error("empty generator list");
}

Presentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open presentation file '" + path + "'");
    Json j = Json::parse(in);
    return presentation_from_json(j);
}

}  // namespace rittkit
