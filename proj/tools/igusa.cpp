// igusa compute|check|oracle|poles <problem-file> [options]
//
// Exit codes: 0 ok, 1 parse or invalid input, 2 degenerate input,
// 3 size guard, 4 oracle bracket violation, 5 internal consistency failure.

#include <iostream>

#include <CLI11.hpp>

#include "igusa/errors.hpp"
#include "igusa/modular.hpp"
#include "igusa/report.hpp"

using namespace igusa;

namespace {

enum Exit { kOk = 0, kParse = 1, kDegenerate = 2, kSizeGuard = 3, kOracle = 4, kInternal = 5 };

struct Options {
    std::string file;
    bool json = false;
    bool override_degenerate = false;
    std::optional<unsigned> level;
    std::optional<unsigned> s0;
    std::vector<std::uint64_t> sweep;
    bool corrupt = false;
};

void emit(const report::json& j, const Options& o) {
    if (o.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << report::render(j);
}

int cmd_compute(const ProblemSpec& spec, const Options& o) {
    auto z = assemble(spec.fside(), spec.measure(), spec.p, {o.override_degenerate});
    emit(report::compute_json(spec, z), o);
    return kOk;
}

int cmd_poles(const ProblemSpec& spec, const Options& o) {
    const auto fside = spec.fside();
    const auto g = spec.measure();
    auto partition = formula_partition(fside, g);
    Weights w(fside.polyhedron(), g ? std::optional(NewtonPolyhedron::of(*g)) : std::nullopt);
    std::vector<RayRow> rays;
    for (const auto& k : partition.rays) {
        RayRow row{k, w.m_f(k), w.m_g(k), Weights::sigma(k), std::nullopt};
        if (row.m_f != 0) {
            row.pole = mpq_class(-(row.m_g + row.sigma), row.m_f);
            row.pole->canonicalize();
        }
        rays.push_back(std::move(row));
    }
    emit(report::poles_json(spec, rays, candidate_poles(partition, w, fside.mode(), fside.t_count()),
                            pole_notes(fside.mode(), fside.t_count())),
         o);
    return kOk;
}

int cmd_check(const ProblemSpec& spec, const Options& o) {
    auto primes = o.sweep.empty() ? std::vector<std::uint64_t>{spec.p} : o.sweep;
    const auto fside = spec.fside();
    const auto g = spec.measure();
    std::vector<report::CheckRow> rows;
    bool ok = true;
    for (auto p : primes) {
        if (!is_prime(p)) throw ParseError("--sweep: " + std::to_string(p) + " is not prime");
        rows.push_back({p, check_hypotheses(fside, g, p)});
        ok = ok && rows.back().report.ok();
    }
    emit(report::check_json(spec, rows), o);
    return ok ? kOk : kDegenerate;
}

unsigned default_level(std::uint64_t p, std::size_t n) {
    unsigned level = 0;
    while (level < 10 && checked_pow(p, (level + 1) * n, 100'000'000) != 0) ++level;
    if (level == 0) throw SizeGuardError("p^n exceeds the enumeration budget");
    return level;
}

int cmd_oracle(const ProblemSpec& spec, const Options& o) {
    const auto fside = spec.fside();
    const auto g = spec.measure();
    report::OracleOutcome out;
    out.s0 = o.s0.value_or(spec.s0.value_or(1));
    out.level = o.level.value_or(spec.level.value_or(default_level(spec.p, spec.n)));
    auto z = assemble(fside, g, spec.p, {o.override_degenerate});
    out.formula_value = evaluate_at(z.reduced, power(spec.p, -static_cast<std::int64_t>(out.s0)));
    out.bracket = truncated_integral(fside, g, spec.p, out.s0, out.level);
    if (o.corrupt) {
        out.formula_value *= mpq_class(101, 100);
        out.corrupted = true;
    }
    const bool contained = out.bracket.contains(out.formula_value);
    emit(report::oracle_json(spec, out), o);
    return contained ? kOk : kOracle;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Igusa local zeta functions from Newton polyhedra"};
    app.require_subcommand(1);
    Options o;
    std::string command;
    for (const char* name : {"compute", "check", "oracle", "poles"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("problem-file", o.file, "problem file")->required();
        sub->add_flag("--json", o.json, "print the JSON report");
        sub->add_flag("--override-degenerate", o.override_degenerate, "apply the formula even if degenerate");
        sub->add_option("--level", o.level, "oracle truncation level M");
        sub->add_option("--s0", o.s0, "oracle exponent s0 >= 1");
        sub->add_option("--sweep", o.sweep, "primes to check")->delimiter(',');
        sub->add_flag("--corrupt-for-testing", o.corrupt)->group("");
        sub->callback([&command, name] { command = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        auto spec = load_problem(o.file);
        if (command == "compute") return cmd_compute(spec, o);
        if (command == "check") return cmd_check(spec, o);
        if (command == "oracle") return cmd_oracle(spec, o);
        return cmd_poles(spec, o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const DegenerateInputError& e) {
        std::cerr << "error: " << e.what() << " (use --override-degenerate to force)\n";
        for (const auto& w : e.report().witnesses) {
            std::cerr << "  " << w.where << " at (";
            for (std::size_t i = 0; i < w.point.size(); ++i) std::cerr << (i ? "," : "") << w.point[i];
            std::cerr << "): " << w.condition << "\n";
        }
        return kDegenerate;
    } catch (const SizeGuardError& e) {
        std::cerr << "error: size guard: " << e.what() << "\n";
        return kSizeGuard;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const HypothesisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    }
}
