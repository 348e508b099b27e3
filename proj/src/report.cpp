#include "ternary/report.hpp"

#include <cstdint>
#include <sstream>

using nlohmann::json;

namespace ternary {
namespace {

// Integers are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that.
json json_int(const Int& x) {
    if (fits_int64(x))
        return x.convert_to<std::int64_t>();
    return x.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer())
        return Int(j.get<std::int64_t>());
    return Int(j.get<std::string>());
}

json json_triple(const Int& a, const Int& b, const Int& c) {
    return json::array({json_int(a), json_int(b), json_int(c)});
}

json to_json(const TernaryForm& f) { return json_triple(f.a, f.b, f.c); }

TernaryForm form_from_json(const json& j) {
    return TernaryForm(int_from_json(j.at(0)), int_from_json(j.at(1)),
                       int_from_json(j.at(2)));
}

json to_json(const ModulusCondition& m) {
    json primes = json::array();
    for (const auto& pc : m.primes)
        primes.push_back({{"prime", json_int(pc.prime)}, {"symbol", to_int(pc.symbol)}});
    json out{{"modulus", json_int(m.modulus)},
             {"target", json_int(m.target)},
             {"primes", primes},
             {"holds", m.holds}};
    out["witness"] = m.witness ? json_int(*m.witness) : json(nullptr);
    return out;
}

ModulusCondition modulus_from_json(const json& j) {
    ModulusCondition m;
    m.modulus = int_from_json(j.at("modulus"));
    m.target = int_from_json(j.at("target"));
    for (const auto& pc : j.at("primes"))
        m.primes.push_back(
            {int_from_json(pc.at("prime")), symbol_from_int(pc.at("symbol"))});
    if (!j.at("witness").is_null())
        m.witness = int_from_json(j.at("witness"));
    m.holds = j.at("holds").get<bool>();
    return m;
}

json to_json(const LocalVerdict& v) {
    json place = v.place.is_real() ? json("real") : json_int(v.place.prime());
    return {{"place", place},
            {"hasse", to_int(v.hasse)},
            {"reference", to_int(v.reference)},
            {"solvable", v.solvable}};
}

LocalVerdict verdict_from_json(const json& j) {
    Place place = j.at("place").is_string() && j.at("place") == "real"
                      ? Place::real()
                      : Place::finite(int_from_json(j.at("place")));
    return {place, symbol_from_int(j.at("hasse")), symbol_from_int(j.at("reference")),
            j.at("solvable").get<bool>()};
}

json to_json(const DecisionReport& r) {
    json j;
    j["input"] = to_json(r.input);
    j["normalized"] = to_json(r.normalized.form);
    j["transform"] = json_triple(r.normalized.transform.mx, r.normalized.transform.my,
                                 r.normalized.transform.mz);
    j["permutation"] = r.permutation;
    j["arranged"] = to_json(r.arranged);
    j["condition_a"] = r.condition_a;
    j["condition_b"] = {{"holds", r.condition_b.holds},
                        {"moduli", json::array({to_json(r.condition_b.mod_a),
                                                to_json(r.condition_b.mod_b),
                                                to_json(r.condition_b.mod_c)})}};
    json local = json::array();
    for (const auto& v : r.local)
        local.push_back(to_json(v));
    j["local"] = local;
    j["solvable"] = r.solvable;
    j["witness"] = r.witness ? json_triple(r.witness->x, r.witness->y, r.witness->z)
                             : json(nullptr);
    return j;
}

DecisionReport report_from_json(const json& j) {
    NormalizedForm norm{form_from_json(j.at("normalized")),
                        Transform{int_from_json(j.at("transform").at(0)),
                                  int_from_json(j.at("transform").at(1)),
                                  int_from_json(j.at("transform").at(2))}};
    std::array<int, 3> perm{j.at("permutation").at(0).get<int>(),
                            j.at("permutation").at(1).get<int>(),
                            j.at("permutation").at(2).get<int>()};
    ConditionBReport cond_b;
    cond_b.mod_a = modulus_from_json(j.at("condition_b").at("moduli").at(0));
    cond_b.mod_b = modulus_from_json(j.at("condition_b").at("moduli").at(1));
    cond_b.mod_c = modulus_from_json(j.at("condition_b").at("moduli").at(2));
    cond_b.holds = j.at("condition_b").at("holds").get<bool>();
    std::vector<LocalVerdict> local;
    for (const auto& v : j.at("local"))
        local.push_back(verdict_from_json(v));
    std::optional<Solution> witness;
    if (!j.at("witness").is_null())
        witness = Solution{int_from_json(j.at("witness").at(0)),
                           int_from_json(j.at("witness").at(1)),
                           int_from_json(j.at("witness").at(2))};
    return DecisionReport{form_from_json(j.at("input")),
                          std::move(norm),
                          perm,
                          form_from_json(j.at("arranged")),
                          j.at("condition_a").get<bool>(),
                          std::move(cond_b),
                          std::move(local),
                          j.at("solvable").get<bool>(),
                          std::move(witness)};
}

const char* variable_names[3] = {"x", "y", "z"};

void describe_modulus(std::ostream& os, const char* label, const ModulusCondition& m) {
    os << "  " << label << " = " << m.target << " mod |" << m.modulus << "|: ";
    if (m.primes.empty()) {
        os << "vacuous";
    } else {
        bool first = true;
        for (const auto& pc : m.primes) {
            if (!first)
                os << ", ";
            first = false;
            os << "(" << m.target << "|" << pc.prime << ") = "
               << (to_int(pc.symbol) > 0 ? "+1" : to_int(pc.symbol) < 0 ? "-1" : "0");
        }
        if (m.witness && *m.witness != 0)
            os << ", witness d = " << *m.witness;
    }
    os << (m.holds ? "" : "  [fails]") << "\n";
}

} // namespace

json to_json(const ReportEnvelope& env) {
    return {{"schema_version", env.schema_version},
            {"timing_ms", env.timing_ms},
            {"report", to_json(env.report)}};
}

ReportEnvelope envelope_from_json(const json& j) {
    return {j.at("schema_version").get<std::string>(),
            j.at("timing_ms").get<double>(), report_from_json(j.at("report"))};
}

std::string to_text(const DecisionReport& r, bool include_local) {
    std::ostringstream os;
    os << "input:      " << r.input.a << " " << r.input.b << " " << r.input.c << "\n";
    os << "normalized: " << r.normalized.form.a << " " << r.normalized.form.b << " "
       << r.normalized.form.c << "   (variable multipliers " << r.normalized.transform.mx
       << " " << r.normalized.transform.my << " " << r.normalized.transform.mz << ")\n";
    if (r.permutation != std::array<int, 3>{0, 1, 2}) {
        os << "arranged:   " << r.arranged.a << " " << r.arranged.b << " " << r.arranged.c
           << "   (roles " << variable_names[r.permutation[0]] << " "
           << variable_names[r.permutation[1]] << " " << variable_names[r.permutation[2]]
           << ")\n";
    }
    os << "condition A (mixed signs): " << (r.condition_a ? "satisfied" : "violated")
       << "\n";
    os << "condition B (quadratic residues): "
       << (r.condition_b.holds ? "satisfied" : "violated") << "\n";
    describe_modulus(os, "-bc", r.condition_b.mod_a);
    describe_modulus(os, "-ca", r.condition_b.mod_b);
    describe_modulus(os, "-ab", r.condition_b.mod_c);
    if (include_local) {
        os << "local verdicts:\n";
        for (const auto& v : r.local)
            os << "  " << v.place.str() << ": S = " << to_int(v.hasse)
               << ", (-1,-1) = " << to_int(v.reference) << " -> "
               << (v.solvable ? "solvable" : "unsolvable") << "\n";
    }
    os << "verdict: " << (r.solvable ? "solvable" : "unsolvable") << "\n";
    if (r.witness)
        os << "witness: (" << r.witness->x << ", " << r.witness->y << ", "
           << r.witness->z << ")\n";
    return os.str();
}

std::string one_line_summary(const DecisionReport& r) {
    std::ostringstream os;
    os << r.input.a << " " << r.input.b << " " << r.input.c << ": "
       << (r.solvable ? "solvable" : "unsolvable");
    if (r.witness)
        os << " witness=(" << r.witness->x << "," << r.witness->y << ","
           << r.witness->z << ")";
    return os.str();
}

} // namespace ternary
