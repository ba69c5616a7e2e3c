#include "igusa/problem.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

#include "igusa/errors.hpp"
#include "igusa/modular.hpp"

namespace igusa {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct Entry {
    std::string value;
    std::size_t line;
};

ParseError at_line(std::size_t line, const std::string& what) {
    return ParseError("line " + std::to_string(line) + ": " + what);
}

template <class T>
T parse_number(const Entry& e, const char* key) {
    T v{};
    const auto* first = e.value.data();
    const auto* last = first + e.value.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || e.value.empty())
        throw at_line(e.line, std::string("bad value for ") + key + ": '" + e.value + "'");
    return v;
}

// Re-raises polynomial parse errors with the line number attached.
template <class F>
auto on_line(std::size_t line, F&& f) {
    try {
        return f();
    } catch (const ParseError& err) {
        throw at_line(line, err.what());
    } catch (const std::invalid_argument& err) {
        throw at_line(line, err.what());
    }
}

} // namespace

MonomialIdealSpec parse_generators(std::string_view text, std::size_t n) {
    MonomialIdealSpec spec;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        auto item = trim(text.substr(start, comma - start));
        if (item.empty()) throw ParseError("empty generator in '" + std::string(text) + "'");
        auto m = parse_polynomial(item, n);
        if (m.terms().size() != 1 || m.terms().begin()->second != 1)
            throw ParseError("generator '" + std::string(item) + "' is not a monic monomial");
        spec.generators.push_back(m.terms().begin()->first);
        start = comma + 1;
    }
    validate(spec);
    return spec;
}

FSide ProblemSpec::fside() const {
    switch (mode) {
    case Mode::ideal: return FSide::ideal(parse_generators(generators_text, n));
    case Mode::single: return FSide::single(parse_polynomial(f_text.front(), n));
    case Mode::mapping: {
        PolynomialMapping ff;
        for (const auto& t : f_text) ff.components.push_back(parse_polynomial(t, n));
        return FSide::mapping(std::move(ff));
    }
    }
    throw std::logic_error("unknown mode");
}

Measure ProblemSpec::measure() const {
    if (g_text == "trivial") return std::nullopt;
    auto g = parse_polynomial(g_text, n);
    validate_vanishing_at_origin(g, "g");
    return g;
}

ProblemSpec parse_problem(std::string_view text) {
    std::multimap<std::string, Entry> entries;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        auto line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos) throw at_line(line_no, "expected key=value");
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        static const char* known[] = {"mode", "n", "p", "f", "g", "generators", "level", "s0"};
        if (std::find(std::begin(known), std::end(known), key) == std::end(known))
            throw at_line(line_no, "unknown key '" + key + "'");
        if (key != "f" && entries.count(key)) throw at_line(line_no, "duplicate key '" + key + "'");
        entries.emplace(key, Entry{value, line_no});
    }

    auto require = [&](const char* key) -> const Entry& {
        auto it = entries.find(key);
        if (it == entries.end()) throw ParseError(std::string("missing key '") + key + "'");
        return it->second;
    };

    ProblemSpec spec;
    const auto& mode = require("mode");
    spec.mode = on_line(mode.line, [&] { return mode_from_string(mode.value); });
    spec.n = parse_number<std::size_t>(require("n"), "n");
    if (spec.n == 0) throw at_line(require("n").line, "n must be >= 1");
    spec.p = parse_number<std::uint64_t>(require("p"), "p");
    if (!is_prime(spec.p)) throw at_line(require("p").line, std::to_string(spec.p) + " is not prime");
    if (auto it = entries.find("level"); it != entries.end())
        spec.level = parse_number<unsigned>(it->second, "level");
    if (auto it = entries.find("s0"); it != entries.end()) spec.s0 = parse_number<unsigned>(it->second, "s0");

    auto [fb, fe] = entries.equal_range("f");
    const auto f_count = static_cast<std::size_t>(std::distance(fb, fe));
    const bool has_generators = entries.count("generators") > 0;
    switch (spec.mode) {
    case Mode::ideal:
        if (f_count) throw at_line(fb->second.line, "mode=ideal takes generators=, not f=");
        {
            const auto& gen = require("generators");
            spec.generators_text = gen.value;
            on_line(gen.line, [&] { return parse_generators(gen.value, spec.n); });
        }
        break;
    case Mode::single:
    case Mode::mapping:
        if (has_generators)
            throw at_line(entries.find("generators")->second.line, "generators= needs mode=ideal");
        if (f_count == 0) throw ParseError("missing key 'f'");
        if (spec.mode == Mode::single && f_count > 1)
            throw at_line(std::next(fb)->second.line, "mode=single takes exactly one f=");
        // Keep file order for mapping components.
        std::vector<const Entry*> fs;
        for (auto it = fb; it != fe; ++it) fs.push_back(&it->second);
        std::sort(fs.begin(), fs.end(), [](auto a, auto b) { return a->line < b->line; });
        for (const auto* e : fs) {
            on_line(e->line, [&] {
                auto f = parse_polynomial(e->value, spec.n);
                validate_vanishing_at_origin(f, "f");
                return f;
            });
            spec.f_text.push_back(e->value);
        }
        if (spec.mode == Mode::mapping)
            on_line(fs.front()->line, [&] { return spec.fside().t_count(); });
        break;
    }
    if (auto it = entries.find("g"); it != entries.end()) {
        spec.g_text = it->second.value;
        on_line(it->second.line, [&] { return spec.measure().has_value(); });
    }
    return spec;
}

ProblemSpec load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read problem file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

} // namespace igusa
