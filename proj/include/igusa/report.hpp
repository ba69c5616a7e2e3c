#pragma once

// Command results are built as JSON first; the text output is rendered from
// that JSON, so re-reading a saved result reproduces the same text.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "igusa/oracle.hpp"
#include "igusa/problem.hpp"
#include "igusa/zeta.hpp"

namespace igusa::report {

using nlohmann::json;

json face_json(const Face& f);
json rational_json(const RationalFunction& f);
json factored_json(const FactoredForm& f);
json problem_json(const ProblemSpec& spec);
json degeneracy_json(const DegeneracyReport& r);

json compute_json(const ProblemSpec& spec, const ZetaResult& z);
json poles_json(const ProblemSpec& spec, const std::vector<RayRow>& rays,
                const std::vector<CandidatePole>& poles, const std::vector<std::string>& notes);

struct CheckRow {
    std::uint64_t p;
    DegeneracyReport report;
};
json check_json(const ProblemSpec& spec, const std::vector<CheckRow>& rows);

struct OracleOutcome {
    unsigned s0;
    unsigned level;
    mpq_class formula_value;
    Bracket bracket;
    bool corrupted = false;
};
json oracle_json(const ProblemSpec& spec, const OracleOutcome& o);

// Dispatches on the "command" field.
std::string render(const json& j);

} // namespace igusa::report
