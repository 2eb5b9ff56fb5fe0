#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "magtop/causal.hpp"
#include "magtop/document.hpp"
#include "magtop/errors.hpp"
#include "magtop/frames.hpp"
#include "magtop/glue_mv.hpp"
#include "magtop/homology.hpp"
#include "magtop/projecting.hpp"
#include "magtop/random_space.hpp"
#include "magtop/series.hpp"
#include "magtop/verify.hpp"

using namespace magtop;
using json = nlohmann::json;

namespace {

enum Exit { pass = 0, mismatch = 1, parse = 2, metric = 3, label = 4, hypothesis = 5 };

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse: return Exit::parse;
        case ErrorKind::metric: return Exit::metric;
        case ErrorKind::label: return Exit::label;
        case ErrorKind::hypothesis: return Exit::hypothesis;
        case ErrorKind::internal: return Exit::mismatch;
    }
    return Exit::mismatch;
}

struct Options {
    std::vector<std::string> inputs;
    std::string l = "0";
    std::string lmax = "3";
    std::string from;
    std::string to;
    std::string format = "table";
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    std::string check;
};

bool as_json(const Options& o) { return o.format == "json"; }

Document input(const Options& o, std::size_t i = 0) {
    if (i >= o.inputs.size()) throw ParseError("missing input document");
    return load_document(o.inputs[i]);
}

// A single space: the first input, or a seeded random 5-point space.
MetricSpace space_or_random(const Options& o) {
    if (!o.inputs.empty()) return input(o).metric();
    std::mt19937_64 rng(o.seed);
    return random_rational_space(5, rng);
}

std::optional<Point> endpoint(const MetricSpace& X, const std::string& label) {
    if (label.empty()) return std::nullopt;
    return X.index_of(label);
}

std::string torsion_text(const std::vector<Integer>& torsion) {
    if (torsion.empty()) return "-";
    std::string s;
    for (const auto& t : torsion) s += (s.empty() ? "" : ",") + t.get_str();
    return s;
}

json torsion_json(const std::vector<Integer>& torsion) {
    json out = json::array();
    for (const auto& t : torsion) out.push_back(t.get_str());
    return out;
}

int cmd_magnitude(const Options& o) {
    const MetricSpace X = space_or_random(o);
    const Rational lmax = Rational::parse(o.lmax);
    const HahnPolynomial mag = magnitude(X, lmax);
    const auto w = weighting(X, lmax);
    if (as_json(o)) {
        json weights = json::object();
        for (Point x = 0; x < static_cast<Point>(X.size()); ++x) weights[X.label(x)] = w[x].str();
        std::cout << json{{"lmax", lmax.str()}, {"magnitude", mag.str()}, {"weighting", weights}}.dump(2) << "\n";
        return Exit::pass;
    }
    std::cout << "Mag\t" << mag.str() << "\n";
    for (Point x = 0; x < static_cast<Point>(X.size()); ++x) std::cout << "w(" << X.label(x) << ")\t" << w[x].str() << "\n";
    return Exit::pass;
}

int cmd_homology(const Options& o) {
    const MetricSpace X = input(o).metric();
    const Rational l = Rational::parse(o.l);
    const auto from = endpoint(X, o.from);
    const auto to = endpoint(X, o.to);
    const auto lengths = achievable_lengths(X, l);
    const bool achievable = std::find(lengths.begin(), lengths.end(), l) != lengths.end();
    if (!achievable) std::cerr << "note: l = " << l.str() << " is not an achievable length\n";

    struct Row {
        Point a, b;
        HomologySummary h;
    };
    std::vector<Row> rows;
    HomologySummary total;
    for (Point a = 0; a < static_cast<Point>(X.size()) && achievable; ++a) {
        if (from && *from != a) continue;
        for (Point b = 0; b < static_cast<Point>(X.size()); ++b) {
            if ((to && *to != b) || X(a, b) > l) continue;
            HomologySummary h = magnitude_homology(X, a, b, l);
            total += h;
            if (!h.is_zero()) rows.push_back({a, b, std::move(h)});
        }
    }
    if (as_json(o)) {
        json out = json::array();
        for (const auto& r : rows) {
            for (const auto& [k, g] : r.h.groups()) {
                out.push_back({{"l", l.str()}, {"a", X.label(r.a)}, {"b", X.label(r.b)}, {"k", k},
                               {"betti", g.betti}, {"torsion", torsion_json(g.torsion)}});
            }
        }
        json tot = json::array();
        for (const auto& [k, g] : total.groups()) {
            tot.push_back({{"l", l.str()}, {"k", k}, {"betti", g.betti}, {"torsion", torsion_json(g.torsion)}});
        }
        std::cout << json{{"rows", out}, {"total", tot}}.dump(2) << "\n";
        return Exit::pass;
    }
    std::cout << "l\ta\tb\tk\tbetti\ttorsion\n";
    for (const auto& r : rows) {
        for (const auto& [k, g] : r.h.groups()) {
            std::cout << l.str() << "\t" << X.label(r.a) << "\t" << X.label(r.b) << "\t" << k << "\t" << g.betti << "\t"
                      << torsion_text(g.torsion) << "\n";
        }
    }
    for (const auto& [k, g] : total.groups()) {
        std::cout << l.str() << "\ttotal\ttotal\t" << k << "\t" << g.betti << "\t" << torsion_text(g.torsion) << "\n";
    }
    return Exit::pass;
}

int cmd_lengths(const Options& o) {
    const MetricSpace X = input(o).metric();
    const auto lengths = achievable_lengths(X, Rational::parse(o.lmax));
    if (as_json(o)) {
        json out = json::array();
        for (const auto& l : lengths) out.push_back(l.str());
        std::cout << out.dump() << "\n";
        return Exit::pass;
    }
    for (const auto& l : lengths) std::cout << l.str() << "\n";
    return Exit::pass;
}

int cmd_critical_cells(const Options& o) {
    const GluingSpec g = input(o).gluing();
    const Rational l = Rational::parse(o.l);
    const auto counts = critical_cells(g, l);
    if (as_json(o)) {
        json out = json::array();
        for (const auto& [dim, n] : counts) out.push_back({{"l", l.str()}, {"dim", dim}, {"critical", n}});
        std::cout << out.dump(2) << "\n";
        return Exit::pass;
    }
    std::cout << "l\tdim\tcritical\n";
    for (const auto& [dim, n] : counts) std::cout << l.str() << "\t" << dim << "\t" << n << "\n";
    return Exit::pass;
}

std::string tuple(const MetricSpace& X, const PointSequence& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + X.label(s[i]);
    return out + ")";
}

int cmd_frames(const Options& o) {
    const MetricSpace X = input(o).metric();
    const Rational l = Rational::parse(o.l);
    if (o.from.empty() != o.to.empty()) throw ParseError("--from and --to go together");
    if (o.from.empty()) {
        const auto frames = thin_frames(X, l);
        if (as_json(o)) {
            json out = json::array();
            for (const auto& f : frames) out.push_back({{"frame", tuple(X, f.points)}, {"length", f.length.str()}});
            std::cout << out.dump(2) << "\n";
            return Exit::pass;
        }
        for (const auto& f : frames) std::cout << tuple(X, f.points) << "\t" << f.length.str() << "\tthin\n";
        return Exit::pass;
    }
    const Point a = X.index_of(o.from);
    const Point b = X.index_of(o.to);
    const auto frames = singular_sequences(X, a, b, l);
    const auto predicted = framed_betti_prediction(X, a, b, l);
    if (as_json(o)) {
        json fs = json::array();
        for (const auto& f : frames) fs.push_back({{"frame", tuple(X, f.points)}, {"length", f.length.str()}});
        json rows = json::array();
        for (const auto& [k, n] : predicted) {
            rows.push_back({{"l", l.str()}, {"a", o.from}, {"b", o.to}, {"k", k}, {"betti", n}});
        }
        std::cout << json{{"frames", fs}, {"prediction", rows}}.dump(2) << "\n";
        return Exit::pass;
    }
    for (const auto& f : frames) std::cout << tuple(X, f.points) << "\t" << f.length.str() << "\n";
    std::cout << "l\ta\tb\tk\tbetti\n";
    for (const auto& [k, n] : predicted) {
        std::cout << l.str() << "\t" << o.from << "\t" << o.to << "\t" << k << "\t" << n << "\n";
    }
    return Exit::pass;
}

int cmd_hasse(const Options& o) {
    const Document doc = input(o);
    if (doc.type != "facets") throw ParseError("hasse expects a facets document");
    std::cout << hasse_document(hasse_graph(doc.facets)) << "\n";
    return Exit::pass;
}

// Runs a per-pair check over every achievable l <= lmax and every admissible pair.
template <typename F>
CheckReport per_pair(const std::string& name, const MetricSpace& X, const Options& o, F check) {
    CheckReport report(name);
    const auto from = endpoint(X, o.from);
    const auto to = endpoint(X, o.to);
    for (const auto& l : achievable_lengths(X, Rational::parse(o.lmax))) {
        for (Point a = 0; a < static_cast<Point>(X.size()); ++a) {
            if (from && *from != a) continue;
            for (Point b = 0; b < static_cast<Point>(X.size()); ++b) {
                if ((to && *to != b) || X(a, b) > l) continue;
                report.absorb(check(X, a, b, l));
            }
        }
    }
    return report;
}

int cmd_verify(const Options& o) {
    const Rational lmax = Rational::parse(o.lmax);
    CheckReport report;
    if (o.check == "mainisom") {
        report = per_pair("mainisom", space_or_random(o), o, verify_mainisom);
    } else if (o.check == "double") {
        report = per_pair("double", space_or_random(o), o, [](const MetricSpace& X, Point a, Point b, const Rational& l) {
            if (l.is_zero()) return CheckReport("double");
            return verify_double_suspension(X, a, b, l);
        });
    } else if (o.check == "kunneth") {
        if (o.inputs.size() != 2) throw ParseError("kunneth expects two space documents");
        report = verify_kunneth(input(o, 0).metric(), input(o, 1).metric(), lmax, o.jobs);
    } else if (o.check == "euler") {
        report = euler_check(space_or_random(o), lmax, o.jobs);
    } else if (o.check == "union") {
        report = verify_union(require_gated(input(o).gluing()), lmax, o.jobs);
    } else if (o.check == "mv") {
        report = verify_mv(require_gated(input(o).gluing()), lmax, o.jobs);
    } else if (o.check == "sycamore") {
        report = verify_sycamore(input(o).twist(), lmax);
    } else if (o.check == "frames") {
        const MetricSpace X = space_or_random(o);
        const FourCutScan scan = four_cuts(X);
        if (!scan.below(lmax)) {
            throw FourCutObstruction("lmax = " + lmax.str() + " is not below m_X = " + scan.m_x->str());
        }
        report = verify_frames(X, lmax);
    } else {
        throw ParseError("unknown check '" + o.check + "'");
    }
    if (as_json(o)) {
        std::cout << json{{"check", report.name}, {"passed", report.passed}, {"lines", report.lines},
                          {"witness", report.witness}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& line : report.lines) std::cout << line << "\n";
        std::cout << report.name << ": " << (report.passed ? "PASS" : "FAIL") << "\n";
    }
    return report.passed ? Exit::pass : Exit::mismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Magnitude homology of finite metric spaces"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    };

    auto* magnitude_cmd = app.add_subcommand("magnitude", "magnitude and weighting as truncated series");
    magnitude_cmd->add_option("input", o.inputs, "space document (random when omitted)");
    magnitude_cmd->add_option("--lmax", o.lmax, "truncation");
    magnitude_cmd->add_option("--seed", o.seed, "seed for the random space");
    common(magnitude_cmd);

    auto* homology_cmd = app.add_subcommand("homology", "magnitude homology table at one length");
    homology_cmd->add_option("input", o.inputs)->required();
    homology_cmd->add_option("--l", o.l, "length")->required();
    homology_cmd->add_option("--from", o.from, "start label");
    homology_cmd->add_option("--to", o.to, "end label");
    common(homology_cmd);

    auto* lengths_cmd = app.add_subcommand("lengths", "achievable lengths up to lmax");
    lengths_cmd->add_option("input", o.inputs)->required();
    lengths_cmd->add_option("--lmax", o.lmax);
    common(lengths_cmd);

    auto* critical_cmd = app.add_subcommand("critical-cells", "critical cells of the projecting matching");
    critical_cmd->add_option("input", o.inputs, "gluing document")->required();
    critical_cmd->add_option("--l", o.l)->required();
    common(critical_cmd);

    auto* frames_cmd = app.add_subcommand("frames", "thin frames, or singular sequences and the framed prediction");
    frames_cmd->add_option("input", o.inputs)->required();
    frames_cmd->add_option("--l", o.l)->required();
    frames_cmd->add_option("--from", o.from);
    frames_cmd->add_option("--to", o.to);
    common(frames_cmd);

    auto* hasse_cmd = app.add_subcommand("hasse", "weighted Hasse graph of a simplicial complex");
    hasse_cmd->add_option("input", o.inputs, "facets document")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a verification check");
    verify_cmd->add_option("check", o.check)
        ->required()
        ->check(CLI::IsMember({"mainisom", "double", "kunneth", "euler", "union", "mv", "sycamore", "frames"}));
    verify_cmd->add_option("input", o.inputs, "documents (a random space when omitted)");
    verify_cmd->add_option("--lmax", o.lmax);
    verify_cmd->add_option("--from", o.from);
    verify_cmd->add_option("--to", o.to);
    verify_cmd->add_option("--seed", o.seed);
    common(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Exit::pass : Exit::parse;
    }

    try {
        if (*magnitude_cmd) return cmd_magnitude(o);
        if (*homology_cmd) return cmd_homology(o);
        if (*lengths_cmd) return cmd_lengths(o);
        if (*critical_cmd) return cmd_critical_cells(o);
        if (*frames_cmd) return cmd_frames(o);
        if (*hasse_cmd) return cmd_hasse(o);
        return cmd_verify(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    }
}
