#include "igusa/report.hpp"

#include <algorithm>
#include <sstream>

namespace igusa::report {

namespace {

json vec_json(const IntVector& v) { return json(v); }

json matrix_json(const IntMatrix& m) {
    json out = json::array();
    for (const auto& v : m) out.push_back(vec_json(v));
    return out;
}

std::string vec_text(const json& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i].get<std::int64_t>());
    return out + ")";
}

std::string str(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

// Left-aligned columns separated by two spaces.
std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    std::string out;
    auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (std::size_t c = 0; c < r.size(); ++c) {
            s += r[c];
            if (c + 1 < r.size()) s += std::string(width[c] - r[c].size() + 2, ' ');
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        out += s + "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
}

std::string weight_name(const std::string& mode) {
    if (mode == "ideal") return "m_I";
    if (mode == "mapping") return "m_ff";
    return "m_f";
}

json rays_json(const std::vector<RayRow>& rows) {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({{"k", vec_json(r.k)},
                       {"m_f", r.m_f},
                       {"m_g", r.m_g},
                       {"sigma", r.sigma},
                       {"pole", r.pole ? json(r.pole->get_str()) : json(nullptr)}});
    return out;
}

json poles_array(const std::vector<CandidatePole>& poles) {
    json out = json::array();
    for (const auto& p : poles) out.push_back({{"value", p.value.get_str()}, {"sources", p.sources}});
    return out;
}

std::string problem_text(const json& p) {
    std::ostringstream os;
    os << "mode: " << str(p["mode"]) << "   n: " << p["n"].get<std::size_t>()
       << "   p: " << p["p"].get<std::uint64_t>() << "\n";
    if (p.contains("generators")) os << "ideal generators: " << str(p["generators"]) << "\n";
    for (const auto& f : p.value("f", json::array())) os << "f: " << str(f) << "\n";
    os << "measure: " << (str(p["g"]) == "trivial" ? std::string("trivial |dx|") : "g = " + str(p["g"])) << "\n";
    return os.str();
}

std::string rays_text(const json& rays, const std::string& mode, bool with_pole) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : rays) {
        std::vector<std::string> row{vec_text(with_pole ? r["k"] : r["h"]), std::to_string(r["m_f"].get<std::int64_t>()),
                                     std::to_string(r["m_g"].get<std::int64_t>()),
                                     std::to_string(r["sigma"].get<std::int64_t>())};
        if (with_pole) row.push_back(r["pole"].is_null() ? "-" : str(r["pole"]));
        rows.push_back(std::move(row));
    }
    std::vector<std::string> header{with_pole ? "k" : "h", weight_name(mode), "m_g", "sigma"};
    if (with_pole) header.push_back("candidate pole");
    return table(header, rows);
}

std::string poles_text(const json& poles) {
    std::string out;
    for (const auto& p : poles) {
        std::string sources;
        for (const auto& s : p["sources"]) sources += (sources.empty() ? "" : "; ") + str(s);
        out += "  " + str(p["value"]) + "  [" + sources + "]\n";
    }
    return out;
}

std::string notes_text(const json& notes) {
    std::string out;
    for (const auto& n : notes) out += "note: " + str(n) + "\n";
    return out;
}

std::string witnesses_text(const json& ws) {
    std::string out;
    for (const auto& w : ws)
        out += "  " + str(w["where"]) + " at " + vec_text(w["point"]) + ": " + str(w["condition"]) + "\n";
    return out;
}

std::string render_compute(const json& j) {
    std::ostringstream os;
    const auto mode = str(j["problem"]["mode"]);
    os << problem_text(j["problem"]);
    if (!j["hypotheses_verified"].get<bool>()) os << "WARNING: unverified hypothesis\n" << witnesses_text(j["degeneracy"]);
    os << "\nRays\n" << rays_text(j["rays"], mode, true);
    if (!j["points"].empty()) os << "\n" << rays_text(j["points"], mode, false);

    os << "\nCones\n";
    const bool ideal = mode == "ideal";
    std::vector<std::string> header{"cone", "dim", "generators", "mult"};
    if (ideal)
        header.push_back("N");
    else
        header.insert(header.end(), {"N", "P", "Q"});
    header.insert(header.end(), {"L", "S"});
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : j["cones"]) {
        std::string gens;
        for (const auto& r : c["rays"]) gens += (gens.empty() ? "" : ",") + vec_text(r);
        std::string mult;
        for (const auto& m : c["mult"]) mult += (mult.empty() ? "" : ",") + std::to_string(m.get<std::int64_t>());
        std::vector<std::string> row{"d" + std::to_string(c["index"].get<std::size_t>()),
                                     std::to_string(c["dim"].get<std::int64_t>()), gens.empty() ? "-" : gens,
                                     mult.empty() ? "-" : mult};
        const auto& k = c["counts"];
        if (ideal)
            row.push_back(std::to_string(k["P"].get<std::uint64_t>()));
        else
            for (const char* key : {"N", "P", "Q"}) row.push_back(std::to_string(k[key].get<std::uint64_t>()));
        row.push_back(str(c["L"]["text"]));
        row.push_back(str(c["S"]["text"]));
        rows.push_back(std::move(row));
    }
    os << table(header, rows);

    os << "\nZ(s) in t = p^-s, p = " << j["problem"]["p"].get<std::uint64_t>() << "\n";
    os << "reduced:  " << str(j["zeta"]["text"]) << "\n";
    os << "factored: " << str(j["zeta"]["factored_text"]) << "\n";
    os << "\ncandidate poles (real parts)\n" << poles_text(j["poles"]);
    os << notes_text(j["notes"]);
    return os.str();
}

std::string render_poles(const json& j) {
    std::ostringstream os;
    os << problem_text(j["problem"]) << "\n" << rays_text(j["rays"], str(j["problem"]["mode"]), true);
    os << "\ncandidate poles (real parts)\n" << poles_text(j["poles"]) << notes_text(j["notes"]);
    return os.str();
}

std::string render_check(const json& j) {
    std::ostringstream os;
    os << problem_text(j["problem"]);
    for (const auto& r : j["results"]) {
        const auto count = r["witnesses"].size();
        os << "p = " << r["p"].get<std::uint64_t>() << ": "
           << (r["ok"].get<bool>() ? std::string("non-degenerate")
                                   : "DEGENERATE (" + std::to_string(count) + " witness" + (count == 1 ? "" : "es") + ")")
           << "\n"
           << witnesses_text(r["witnesses"]);
    }
    return os.str();
}

std::string render_oracle(const json& j) {
    std::ostringstream os;
    os << problem_text(j["problem"]);
    os << "s0 = " << j["s0"].get<unsigned>() << ", level M = " << j["level"].get<unsigned>() << ", t = " << str(j["t"])
       << "\n";
    if (j["corrupted"].get<bool>()) os << "formula value deliberately corrupted (test hook)\n";
    os << "formula value: " << str(j["formula_value"]) << "\n";
    os << "bracket:       [" << str(j["bracket"]["lo"]) << ", " << str(j["bracket"]["hi"]) << "]\n";
    os << "width:         " << str(j["bracket"]["width"]) << "\n";
    os << (j["contained"].get<bool>() ? "contained\n" : "bracket violation\n");
    return os.str();
}

} // namespace

json face_json(const Face& f) {
    json rec = json::array();
    for (auto i : f.recession) rec.push_back(i + 1);
    json touching = json::array();
    for (const auto& w : f.touching) touching.push_back(vec_json(w));
    return {{"touching", touching}, {"recession", rec}, {"dim", f.dim}};
}

json rational_json(const RationalFunction& f) {
    auto coeffs = [](const UPoly& p) {
        json out = json::array();
        for (const auto& c : p.coeffs()) out.push_back(c.get_str());
        return out;
    };
    return {{"num", coeffs(f.num())}, {"den", coeffs(f.den())}};
}

json factored_json(const FactoredForm& f) {
    json terms = json::array(), factors = json::array();
    for (const auto& [e, c] : f.numerator) terms.push_back({e, c.get_str()});
    for (const auto& x : f.factors) factors.push_back({x.a, x.b});
    return {{"terms", terms}, {"factors", factors}};
}

json problem_json(const ProblemSpec& spec) {
    json j{{"mode", to_string(spec.mode)}, {"n", spec.n}, {"p", spec.p}, {"g", spec.g_text}};
    if (spec.mode == Mode::ideal)
        j["generators"] = spec.generators_text;
    else
        j["f"] = spec.f_text;
    return j;
}

json degeneracy_json(const DegeneracyReport& r) {
    json out = json::array();
    for (const auto& w : r.witnesses)
        out.push_back({{"where", w.where}, {"point", vec_json(w.point)}, {"condition", w.condition}});
    return out;
}

json compute_json(const ProblemSpec& spec, const ZetaResult& z) {
    json j;
    j["command"] = "compute";
    j["problem"] = problem_json(spec);
    j["hypotheses_verified"] = z.hypotheses_verified;
    j["degeneracy"] = degeneracy_json(z.degeneracy);
    j["rays"] = rays_json(z.rays);
    json points = json::array();
    for (const auto& h : z.extra_points)
        points.push_back({{"h", vec_json(h.k)}, {"m_f", h.m_f}, {"m_g", h.m_g}, {"sigma", h.sigma}});
    j["points"] = points;
    json cones = json::array();
    for (std::size_t i = 0; i < z.cones.size(); ++i) {
        const auto& c = z.cones[i];
        json labels{{"tau", face_json(c.cone.labels.tau)}};
        if (c.cone.labels.tau_prime) labels["tau_prime"] = face_json(*c.cone.labels.tau_prime);
        json mult = json::array(), pieces = json::array();
        for (const auto& piece : c.S.pieces) {
            if (!piece.rays.empty()) mult.push_back(piece.mult);
            json num = json::array(), fac = json::array();
            for (const auto& [a, b] : piece.numerator) num.push_back({a, b});
            for (const auto& f : piece.factors) fac.push_back({f.a, f.b});
            pieces.push_back({{"rays", matrix_json(piece.rays)},
                              {"pp_points", matrix_json(piece.pp_points)},
                              {"numerator", num},
                              {"factors", fac}});
        }
        cones.push_back({{"index", i},
                         {"dim", c.cone.dim},
                         {"rays", matrix_json(c.cone.rays)},
                         {"mult", mult},
                         {"labels", labels},
                         {"counts", {{"N", c.counts.N}, {"P", c.counts.P}, {"Q", c.counts.Q}}},
                         {"L", {{"text", to_string(c.L.expand())}, {"factored", factored_json(c.L)}}},
                         {"S", {{"text", to_string(c.S)}, {"pieces", pieces}}}});
    }
    j["cones"] = cones;
    auto zeta = rational_json(z.reduced);
    zeta["factored"] = factored_json(z.factored);
    zeta["text"] = to_string(z.reduced);
    zeta["factored_text"] = to_string(z.factored);
    j["zeta"] = zeta;
    j["poles"] = poles_array(z.poles);
    j["notes"] = z.notes;
    return j;
}

json poles_json(const ProblemSpec& spec, const std::vector<RayRow>& rays,
                const std::vector<CandidatePole>& poles, const std::vector<std::string>& notes) {
    return {{"command", "poles"},
            {"problem", problem_json(spec)},
            {"rays", rays_json(rays)},
            {"poles", poles_array(poles)},
            {"notes", notes}};
}

json check_json(const ProblemSpec& spec, const std::vector<CheckRow>& rows) {
    json results = json::array();
    for (const auto& r : rows)
        results.push_back({{"p", r.p}, {"ok", r.report.ok()}, {"witnesses", degeneracy_json(r.report)}});
    return {{"command", "check"}, {"problem", problem_json(spec)}, {"results", results}};
}

json oracle_json(const ProblemSpec& spec, const OracleOutcome& o) {
    mpq_class t = power(spec.p, -static_cast<std::int64_t>(o.s0));
    return {{"command", "oracle"},
            {"problem", problem_json(spec)},
            {"s0", o.s0},
            {"level", o.level},
            {"t", t.get_str()},
            {"corrupted", o.corrupted},
            {"formula_value", o.formula_value.get_str()},
            {"bracket",
             {{"lo", o.bracket.lo.get_str()}, {"hi", o.bracket.hi.get_str()}, {"width", o.bracket.width().get_str()}}},
            {"contained", o.bracket.contains(o.formula_value)}};
}

std::string render(const json& j) {
    const auto cmd = str(j.at("command"));
    if (cmd == "compute") return render_compute(j);
    if (cmd == "poles") return render_poles(j);
    if (cmd == "check") return render_check(j);
    if (cmd == "oracle") return render_oracle(j);
    throw std::invalid_argument("unknown report command '" + cmd + "'");
}

} // namespace igusa::report
