// wkit: command-line front end for the Weitzenböck defect toolkit.
//
//   wkit defect --sides 3 4 5
//   wkit defect --u 1 0 --v 0 1
//   wkit sweep --count 100000 --seed 0 --tol 1e-9
//   wkit sweep --exact --count 1000
//   wkit shape --sides 3 4 5
//   wkit shape --figure 2 > figure.csv
//   wkit curve --builtin circle:2 --t 0:6.28:0.01
//   wkit curve --input samples.csv
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 input error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wkit/curve.hpp"
#include "wkit/error.hpp"
#include "wkit/shape_space.hpp"
#include "wkit/sweep.hpp"
#include "wkit/weitzenboeck.hpp"

namespace {

using namespace wkit;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

enum class Format { text, csv, json };

using Value = std::variant<double, bool, std::string, std::size_t>;
using Record = std::vector<std::pair<std::string, Value>>;

std::string render(const Value& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) return format_shortest(x);
            else if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
            else if constexpr (std::is_same_v<T, std::string>) return x;
            else return std::to_string(x);
        },
        v);
}

json to_json(const Record& r) {
    json j = json::object();
    for (const auto& [k, v] : r) std::visit([&j, &k](const auto& x) { j[k] = x; }, v);
    return j;
}

void print_record(const Record& r, Format fmt) {
    switch (fmt) {
    case Format::json:
        std::cout << to_json(r).dump(2) << '\n';
        break;
    case Format::csv: {
        std::string head, row;
        for (std::size_t i = 0; i < r.size(); ++i) {
            head += (i ? "," : "") + r[i].first;
            row += (i ? "," : "") + render(r[i].second);
        }
        std::cout << head << '\n' << row << '\n';
        break;
    }
    case Format::text: {
        std::size_t width = 0;
        for (const auto& [k, v] : r) width = std::max(width, k.size());
        for (const auto& [k, v] : r) std::cout << k << std::string(width + 2 - k.size(), ' ') << render(v) << '\n';
        break;
    }
    }
}

void print_table(const std::vector<Record>& rows, const Record& summary, Format fmt) {
    if (fmt == Format::json) {
        json out;
        out["samples"] = json::array();
        for (const auto& r : rows) out["samples"].push_back(to_json(r));
        out["summary"] = to_json(summary);
        std::cout << out.dump(2) << '\n';
        return;
    }
    if (!rows.empty()) {
        const char sep = fmt == Format::csv ? ',' : ' ';
        for (std::size_t i = 0; i < rows.front().size(); ++i) std::cout << (i ? std::string(1, sep) : "") << rows.front()[i].first;
        std::cout << '\n';
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? std::string(1, sep) : "") << render(r[i].second);
            std::cout << '\n';
        }
    }
    if (fmt == Format::text) {
        std::cout << "summary:";
        for (const auto& [k, v] : summary) std::cout << ' ' << k << '=' << render(v);
        std::cout << '\n';
    } else {
        std::cerr << "summary:";
        for (const auto& [k, v] : summary) std::cerr << ' ' << k << '=' << render(v);
        std::cerr << '\n';
    }
}

double default_tolerance() {
    const char* env = std::getenv("WKIT_TOL");
    if (env == nullptr || *env == '\0') return 1e-9;
    std::size_t used = 0;
    double tol = 0.0;
    try {
        tol = std::stod(env, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || env[used] != '\0' || !(tol > 0.0) || !std::isfinite(tol))
        throw InputError(std::string("WKIT_TOL must be a positive number, got '") + env + "'");
    return tol;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, sep)) out.push_back(part);
    if (!text.empty() && text.back() == sep) out.emplace_back();
    return out;
}

double parse_number(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) throw InputError("bad number '" + s + "' in " + what);
    return v;
}

CurveKind parse_builtin(const std::string& spec) {
    const auto parts = split(spec, ':');
    const std::string& kind = parts.front();
    std::vector<double> args;
    for (std::size_t i = 1; i < parts.size(); ++i) args.push_back(parse_number(parts[i], "--builtin"));
    CurveKind out;
    if (kind == "circle" && args.size() == 1) out = Circle{args[0]};
    else if (kind == "helix" && args.size() == 2) out = Helix{args[0], args[1]};
    else if (kind == "line" && args.empty()) out = Line{};
    else if (kind == "line" && args.size() == 3) out = Line{Vector{args[0], args[1], args[2]}};
    else throw InputError("unknown builtin curve '" + spec + "' (circle:R, helix:A:B, line[:DX:DY:DZ])");
    validate(out);
    return out;
}

std::vector<double> parse_range(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw InputError("--t expects START:END:STEP");
    const double start = parse_number(parts[0], "--t");
    const double end = parse_number(parts[1], "--t");
    const double step = parse_number(parts[2], "--t");
    if (!(step > 0.0) || end < start) throw InputError("--t needs STEP > 0 and END >= START");
    const auto n = static_cast<std::size_t>(std::floor((end - start) / step + 1e-9)) + 1;
    if (n > 10'000'000) throw InputError("--t range has too many points");
    std::vector<double> ts(n);
    for (std::size_t k = 0; k < n; ++k) ts[k] = start + step * static_cast<double>(k);
    return ts;
}

struct Options {
    Format format = Format::text;
    std::optional<double> tol;

    std::vector<double> sides;
    std::vector<double> u, v;

    std::size_t count = 1000;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    bool exact = false;

    std::optional<double> figure;
    std::size_t samples = 100;
    std::size_t circles = 4;

    std::string builtin;
    std::string input;
    std::string t_range = "0:6.28:0.01";
    std::optional<double> speed_tol;
};

int cmd_defect(const Options& o, double tol) {
    Record r;
    IdentityReport rep;
    if (!o.sides.empty()) {
        const Triangle t(o.sides[0], o.sides[1], o.sides[2]);
        const auto [u, v] = triangle_to_vectors(t);
        rep = verify_identity(u, v, tol);
        r.emplace_back("a", t.a());
        r.emplace_back("b", t.b());
        r.emplace_back("c", t.c());
        r.emplace_back("area", area_heron(t));
        r.emplace_back("triangle_defect", triangle_defect(t));
    } else {
        if (o.u.empty() || o.v.empty()) throw InputError("defect needs --sides A B C or both --u and --v");
        rep = verify_identity(Vector(o.u), Vector(o.v), tol);
    }
    r.emplace_back("lhs", rep.lhs);
    r.emplace_back("wedge_term", rep.wedge_term);
    r.emplace_back("defect_intrinsic", rep.defect_intrinsic);
    r.emplace_back("defect_explicit", rep.defect_explicit);
    r.emplace_back("residual", rep.residual);
    r.emplace_back("equality", rep.equality_case);
    print_record(r, o.format);
    return std::abs(rep.residual) <= tol * std::max(1.0, rep.lhs) ? kExitOk : kExitFailed;
}

int cmd_sweep(const Options& o, double tol) {
    if (o.count < 1) throw InputError("--count must be at least 1");
    SweepConfig cfg{o.seed, o.count, tol, std::max(1u, o.jobs)};
    Record r;
    bool pass = false;
    if (o.exact) {
        const ExactSweepSummary s = run_exact_sweep(cfg);
        r = {{"mode", std::string("exact")}, {"seed", static_cast<std::size_t>(o.seed)}, {"count", s.count},
             {"nonzero_residuals", s.nonzero}, {"pass", s.pass}};
        pass = s.pass;
    } else {
        const SweepSummary s = run_sweep(cfg);
        r = {{"mode", std::string("float")},
             {"seed", static_cast<std::size_t>(o.seed)},
             {"count", s.count},
             {"stress_pairs", s.stress_pairs},
             {"tol", tol},
             {"max_residual", s.max_residual},
             {"max_oracle_gap", s.max_oracle_gap},
             {"max_negative_defect", s.max_negative_defect},
             {"failures", s.failures},
             {"pass", s.pass}};
        pass = s.pass;
    }
    print_record(r, o.format);
    return pass ? kExitOk : kExitFailed;
}

int cmd_shape(const Options& o, double tol) {
    if (o.figure) {
        const auto rows = emit_figure(*o.figure, {o.samples, o.circles});
        if (o.format == Format::json) {
            json out = json::array();
            for (const auto& row : rows) out.push_back({{"series", row.series}, {"x", row.x}, {"y", row.y}});
            std::cout << out.dump(2) << '\n';
        } else {
            std::cout << figure_to_csv(rows);
        }
        return kExitOk;
    }
    if (o.sides.empty()) throw InputError("shape needs --sides A B C or --figure S");
    const Triangle t(o.sides[0], o.sides[1], o.sides[2]);
    const ShapePoint p = shape_point(t);
    const ShapeCircle c = circle_of(t);
    const HalfDisk d = halfdisk_of(t);
    const Record r{
        {"x", p.x},
        {"y", p.y},
        {"circle_center", c.center_x},
        {"circle_radius", c.radius},
        {"circle_residual", circle_residual(p, c)},
        {"halfdisk_center", d.center_x()},
        {"halfdisk_radius", d.radius()},
        {"in_halfdisk", halfdisk_contains(p, d, tol * d.radius() * d.radius())},
        {"slope", p.y / p.x},
        {"tangent_slope", tangent_line_slope()},
        {"class", std::string(to_string(classify(t, tol)))},
    };
    print_record(r, o.format);
    return kExitOk;
}

int cmd_curve(const Options& o, double tol) {
    std::vector<CurveJet> jets;
    double speed_tol = 0.0;
    long row_offset = 0;
    if (!o.input.empty()) {
        std::ifstream in(o.input);
        if (!in) throw InputError("cannot open '" + o.input + "'");
        const auto samples = read_curve_csv(in);
        for (std::size_t i = 1; i + 1 < samples.size(); ++i) jets.push_back(jet_from_samples(samples, i));
        speed_tol = o.speed_tol.value_or(kSampledSpeedTol);
        row_offset = 2; // jet k sits on data row k + 2
    } else if (!o.builtin.empty()) {
        const CurveKind kind = parse_builtin(o.builtin);
        for (double t : parse_range(o.t_range)) jets.push_back(builtin_curve(kind, t));
        speed_tol = o.speed_tol.value_or(kAnalyticSpeedTol);
        row_offset = 1;
    } else {
        throw InputError("curve needs --builtin SPEC or --input FILE");
    }

    // residual carries 1 − ‖ṙ‖², about twice the unit-speed residual
    const double residual_tol = tol + 3.0 * speed_tol;
    std::vector<Record> rows;
    double max_residual = 0.0;
    std::size_t violations = 0, residual_failures = 0;
    for (std::size_t k = 0; k < jets.size(); ++k) {
        const CurveJet& j = jets[k];
        if (j.unit_speed_residual > speed_tol)
            throw UnitSpeedError("unit-speed violated at row " + std::to_string(static_cast<long>(k) + row_offset),
                                 static_cast<long>(k) + row_offset);
        const CurveReport r = curve_report(j, speed_tol);
        max_residual = std::max(max_residual, std::abs(r.residual));
        if (!r.bound_holds) ++violations;
        if (std::abs(r.residual) > residual_tol) ++residual_failures;
        rows.push_back({{"t", j.t},
                        {"curvature", r.curvature},
                        {"rhs_bound", r.rhs_bound},
                        {"defect", r.defect},
                        {"defect_explicit", r.defect_explicit},
                        {"residual", r.residual}});
    }
    const bool clean = violations == 0 && residual_failures == 0;
    const Record summary{{"samples", rows.size()},
                         {"max_abs_residual", max_residual},
                         {"residual_tol", residual_tol},
                         {"inequality_violations", violations},
                         {"residual_failures", residual_failures},
                         {"pass", clean}};
    print_table(rows, summary, o.format);
    return clean ? kExitOk : kExitFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ionescu-Weitzenböck defect toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;

    const std::map<std::string, Format> formats{{"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
    app.add_option("--format", o.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--tol", o.tol, "Tolerance (default 1e-9, or $WKIT_TOL)")->check(CLI::PositiveNumber);

    auto* defect = app.add_subcommand("defect", "Inequality defect for a triangle or a vector pair");
    auto* sides = defect->add_option("--sides", o.sides, "Side lengths A B C")->expected(3);
    auto* uopt = defect->add_option("--u", o.u, "First vector")->expected(2, 64);
    auto* vopt = defect->add_option("--v", o.v, "Second vector")->expected(2, 64);
    sides->excludes(uopt)->excludes(vopt);
    uopt->needs(vopt);
    vopt->needs(uopt);

    auto* sweep = app.add_subcommand("sweep", "Randomized identity verification");
    sweep->add_option("--count", o.count, "Number of random pairs")->check(CLI::PositiveNumber);
    sweep->add_option("--seed", o.seed, "RNG seed");
    sweep->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sweep->add_flag("--exact", o.exact, "Exact Q[sqrt 3] check on planar rational pairs");

    auto* shape = app.add_subcommand("shape", "Half-disk shape plane");
    auto* shape_sides = shape->add_option("--sides", o.sides, "Side lengths A B C (C is the base)")->expected(3);
    auto* figure = shape->add_option("--figure", o.figure, "Emit the figure dataset for s = a^2 + b^2");
    shape_sides->excludes(figure);
    shape->add_option("--samples", o.samples, "Points per sampled curve")->check(CLI::Range(2, 1'000'000));
    shape->add_option("--circles", o.circles, "Number of per-(a,b) circles")->check(CLI::Range(0, 1000));

    auto* curve = app.add_subcommand("curve", "Curvature identity for unit-speed curves");
    auto* builtin = curve->add_option("--builtin", o.builtin, "circle:R | helix:A:B | line[:DX:DY:DZ]");
    auto* input = curve->add_option("--input", o.input, "CSV file with header t,x,y,z");
    builtin->excludes(input);
    curve->add_option("--t", o.t_range, "START:END:STEP for builtin curves");
    curve->add_option("--speed-tol", o.speed_tol, "Unit-speed tolerance")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        const double tol = o.tol ? *o.tol : default_tolerance();
        if (*defect) return cmd_defect(o, tol);
        if (*sweep) return cmd_sweep(o, tol);
        if (*shape) return cmd_shape(o, tol);
        if (*curve) return cmd_curve(o, tol);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
