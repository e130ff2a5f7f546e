// Command-line front end: analyze / resolve / certify.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "mixedtoric/j10.hpp"
#include "mixedtoric/parser.hpp"
#include "mixedtoric/report.hpp"
#include "mixedtoric/svg.hpp"

namespace fs = std::filesystem;
using namespace mixedtoric;

namespace {

struct MathDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOpts {
    std::string poly;
    std::vector<std::string> params;
    std::string fan_spec = "auto";
    std::string out_dir;
    std::string format = "json";
    unsigned long seed = 20240901;
    int starts = 10000;
    double tol = 1e-8;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_poly = true) {
    auto* p = cmd->add_option("--poly", o.poly, "polynomial: file path or literal string");
    if (needs_poly) p->required();
    cmd->add_option("--param", o.params, "parameter binding, e.g. k=3 or k=7/2");
    cmd->add_option("--fan", o.fan_spec, "auto, or ray list like \"1,0;1,1;0,1\"");
    cmd->add_option("--seed", o.seed, "search RNG seed");
    cmd->add_option("--starts", o.starts, "multistart count");
    cmd->add_option("--tol", o.tol, "candidate residual threshold");
    cmd->add_option("--out", o.out_dir, "output directory for report files");
    cmd->add_option("--format", o.format, "json | text | svg")
        ->check(CLI::IsMember({"json", "text", "svg"}));
}

MixedPolynomial load_poly(const CommonOpts& o) {
    std::string text = o.poly;
    if (fs::exists(o.poly) && fs::is_regular_file(o.poly)) {
        std::ifstream in(o.poly);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    std::map<std::string, ExactComplex> bindings;
    for (const auto& kv : o.params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--param", "expected name=value, got " + kv);
        bindings[kv.substr(0, eq)] = ExactComplex(parse_rational(kv.substr(eq + 1)));
    }
    MixedPolynomial f = parse(text, bindings);
    if (f.is_zero()) throw MathDomainError("zero polynomial");
    return f;
}

std::vector<Ray> fan_rays_from_spec(const std::string& spec, const NewtonPolyhedron& np) {
    if (spec == "auto") {
        std::vector<Ray> rays;
        for (const auto& w : dual_diagram(np))
            rays.emplace_back(w.entries[0], w.entries[1]);
        return rays;
    }
    std::vector<Ray> rays;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ';')) {
        auto comma = token.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("--fan", "ray must be x,y: " + token);
        rays.emplace_back(std::stol(token.substr(0, comma)),
                          std::stol(token.substr(comma + 1)));
    }
    if (rays.empty()) throw CLI::ValidationError("--fan", "empty ray list");
    return rays;
}

Ray named_ray(const std::string& name) {
    if (name == "E1") return Ray(1, 0);
    if (name == "E2") return Ray(0, 1);
    if (name == "S") return Ray(1, 1);
    if (name == "P") return Ray(1, 2);
    if (name == "T") return Ray(1, 3);
    auto colon = name.find(':');
    if (colon != std::string::npos)
        return Ray(std::stol(name.substr(0, colon)), std::stol(name.substr(colon + 1)));
    throw CLI::ValidationError("--chart",
                               "unknown ray " + name + " (use E1,E2,S,P,T or x:y)");
}

ChartMap parse_chart(const std::string& spec) {
    auto comma = spec.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--chart", "expected two rays: " + spec);
    return ChartMap(named_ray(spec.substr(0, comma)), named_ray(spec.substr(comma + 1)));
}

SearchConfig search_config(const CommonOpts& o) {
    SearchConfig cfg;
    cfg.seed = o.seed;
    cfg.starts = o.starts;
    cfg.tolerance = o.tol;
    return cfg;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    std::cout << "wrote " << path.string() << "\n";
}

void emit_json(const Json& j, const CommonOpts& o, const std::string& stem) {
    std::string text = j.dump(2) + "\n";
    if (o.out_dir.empty()) {
        std::cout << text;
    } else {
        fs::create_directories(o.out_dir);
        write_file(fs::path(o.out_dir) / (stem + ".json"), text);
    }
}

std::string yn(bool b) { return b ? "true" : "false"; }

int cmd_analyze(const CommonOpts& o) {
    MixedPolynomial f = load_poly(o);
    NewtonPolyhedron np = newton_polyhedron(f);
    Fan2 fan = subdivide(fan_rays_from_spec(o.fan_spec, np));

    if (o.format == "svg") {
        fs::path dir = o.out_dir.empty() ? "." : o.out_dir;
        fs::create_directories(dir);
        write_file(dir / "newton.svg", newton_svg(np));
        write_file(dir / "fan.svg", fan_svg(fan));
        return 0;
    }
    Json j = analyze_report(f, fan);
    if (o.format == "json") {
        emit_json(j, o, "analyze");
        return 0;
    }
    std::cout << "polynomial: " << j["polynomial"].get<std::string>() << "\n";
    std::cout << "support:";
    for (const auto& s : j["newton"]["support"])
        std::cout << " (" << s["point"][0] << "," << s["point"][1] << ")";
    std::cout << "\ndual diagram:";
    for (const auto& w : j["dual_diagram"])
        std::cout << " (" << w[0] << "," << w[1] << ")";
    std::cout << "\nfan:";
    for (const auto& r : j["fan"]) std::cout << " (" << r[0] << "," << r[1] << ")";
    std::cout << "\n  regular simplicial: " << yn(j["fan_regular_simplicial"])
              << ", admissible: " << yn(j["fan_admissible"])
              << ", convenient: " << yn(j["fan_convenient"]) << "\n";
    std::cout << "convenient germ: " << yn(j["convenience"]["convenient"]) << "\n";
    if (!j["radial_weight"].is_null()) {
        std::cout << "radial weight: (" << j["radial_weight"][0] << ","
                  << j["radial_weight"][1] << ")\n";
        const auto& c = j["certificate"];
        if (!c["radial"].is_null())
            std::cout << "  radial degree: " << c["radial"]["degree"] << "\n";
        if (!c["polar"].is_null())
            std::cout << "  polar degree: " << c["polar"]["degree"] << "\n";
        std::cout << "  strongly mixed: " << yn(c["strongly_mixed"])
                  << ", polar positive: " << yn(c["polar_positive"]) << "\n";
    }
    for (const auto& fc : j["faces"])
        std::cout << "face (" << fc["normal"][0] << "," << fc["normal"][1]
                  << "), d = " << fc["d"] << ", dim " << fc["dim"] << ": "
                  << fc["face_function"].get<std::string>() << "\n";
    return 0;
}

int cmd_resolve(const CommonOpts& o, const std::string& chart_spec) {
    MixedPolynomial f = load_poly(o);

    if (!chart_spec.empty()) {
        ChartMap chart = parse_chart(chart_spec);
        StrictTransform st = strict_transform(f, chart);
        if (o.format == "json") {
            Json j;
            j["chart"] = Json::array({Json::array({chart.col1.x, chart.col1.y}),
                                      Json::array({chart.col2.x, chart.col2.y})});
            j["pullback"] = to_string(pullback(f, chart), "u");
            j["exceptional"] = {{"nu", st.exceptional_nu}, {"mu", st.exceptional_mu}};
            j["reduced"] = to_string(st.reduced, "u");
            emit_json(j, o, "chart");
        } else {
            std::cout << "pullback: " << to_string(pullback(f, chart), "u") << "\n";
            std::cout << "exceptional: u1^" << st.exceptional_nu[0] << "*~u1^"
                      << st.exceptional_mu[0] << " * u2^" << st.exceptional_nu[1]
                      << "*~u2^" << st.exceptional_mu[1] << "\n";
            std::cout << "reduced: " << to_string(st.reduced, "u") << "\n";
        }
        return 0;
    }

    NewtonPolyhedron np = newton_polyhedron(f);
    Fan2 fan = subdivide(fan_rays_from_spec(o.fan_spec, np));
    ResolutionReport rep = resolve(f, fan);
    if (o.format == "json") {
        emit_json(resolution_to_json(rep), o, "resolve");
        return 0;
    }
    std::cout << "polynomial: " << to_string(f) << "\n";
    for (const auto& cr : rep.charts) {
        std::cout << "chart (" << cr.chart.col1.x << "," << cr.chart.col1.y << ");("
                  << cr.chart.col2.x << "," << cr.chart.col2.y << ")\n";
        std::cout << "  reduced: " << to_string(cr.transform.reduced, "u") << "\n";
        for (const auto& xi : cr.intersections) {
            std::cout << "  divisor of (" << xi.ray.x << "," << xi.ray.y
                      << "): restriction " << to_string(xi.restriction, "u") << ", "
                      << xi.zeros.size() << " torus zero(s)";
            for (const auto& z : xi.zeros)
                std::cout << " (" << z.u.real() << (z.u.imag() < 0 ? "" : "+")
                          << z.u.imag() << "i)";
            std::cout << "\n";
        }
    }
    for (const auto& lv : rep.lambda_values) {
        std::cout << "Lambda(";
        for (std::size_t i = 0; i < lv.cone_rays.size(); ++i)
            std::cout << (i ? ";" : "") << "(" << lv.cone_rays[i].x << ","
                      << lv.cone_rays[i].y << ")";
        std::cout << ") = ";
        if (lv.value) std::cout << *lv.value;
        else std::cout << "absent";
        std::cout << " [" << lv.offenders.size() << " offender(s)]\n";
    }
    std::cout << "L(Sigma*) empty: " << yn(rep.l_sigma_empty) << "\n";
    for (const auto& n : rep.notes) std::cout << "note: " << n << "\n";
    return 0;
}

std::vector<double> parse_kgrid(const std::string& spec) {
    std::vector<double> grid;
    if (spec.find(':') != std::string::npos) {
        std::istringstream in(spec);
        std::string a, b, c;
        std::getline(in, a, ':');
        std::getline(in, b, ':');
        std::getline(in, c, ':');
        double lo = std::stod(a), hi = std::stod(b), step = c.empty() ? 1.0 : std::stod(c);
        if (step <= 0) throw CLI::ValidationError("--sweep", "kgrid step must be > 0");
        for (double k = lo; k <= hi + 1e-12; k += step) grid.push_back(k);
    } else {
        std::istringstream in(spec);
        std::string tok;
        while (std::getline(in, tok, ','))
            if (!tok.empty()) grid.push_back(std::stod(tok));
    }
    return grid;
}

int parse_case_id(const std::string& s) {
    if (s == "I" || s == "1") return 1;
    if (s == "II" || s == "2") return 2;
    if (s == "III" || s == "3") return 3;
    if (s == "IV" || s == "4") return 4;
    if (s == "V" || s == "5") return 5;
    throw CLI::ValidationError("--sweep", "unknown case " + s);
}

int cmd_certify(const CommonOpts& o, const std::vector<std::string>& sweep_args) {
    if (!sweep_args.empty()) {
        int case_id = 4;
        std::vector<double> grid;
        for (const auto& arg : sweep_args) {
            auto eq = arg.find('=');
            if (eq == std::string::npos)
                throw CLI::ValidationError("--sweep", "expected key=value: " + arg);
            std::string key = arg.substr(0, eq), val = arg.substr(eq + 1);
            if (key == "case") case_id = parse_case_id(val);
            else if (key == "kgrid") grid = parse_kgrid(val);
            else throw CLI::ValidationError("--sweep", "unknown key " + key);
        }
        SweepReport rep = j10_sweep(case_id, grid, search_config(o));
        Json j = sweep_to_json(rep);
        if (o.format == "json") {
            emit_json(j, o, "sweep");
        } else {
            std::cout << "case " << case_id << " sweep (" << rep.note << ")\n";
            for (const auto& e : rep.entries)
                std::cout << "  k = " << e.k << ": best residual " << e.best_residual
                          << ", candidates " << e.candidates << "\n";
        }
        return 0;
    }

    MixedPolynomial f = load_poly(o);
    Json j = certify_report(f, search_config(o));
    if (o.format == "json") {
        emit_json(j, o, "certify");
        return 0;
    }
    std::cout << "polynomial: " << j["polynomial"].get<std::string>() << "\n";
    for (const auto& fc : j["faces"])
        std::cout << "face (" << fc["normal"][0] << "," << fc["normal"][1] << ") "
                  << fc["face_function"].get<std::string>() << ": "
                  << fc["status"].get<std::string>()
                  << (fc["symbolic"].get<bool>() ? " [symbolic]" : " [search]") << " — "
                  << fc["evidence"].get<std::string>() << "\n";
    std::cout << "Newton non-degenerate: " << yn(j["newton_nondegenerate"]) << "\n";
    std::cout << "strongly Newton non-degenerate: "
              << yn(j["strongly_newton_nondegenerate"]) << "\n";
    std::cout << "search: " << j["search"]["starts"] << " starts, best residual "
              << j["search"]["best_residual"] << ", candidates "
              << j["search"]["candidates"].size() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mixed polynomial toric resolution toolkit"};
    app.require_subcommand(1);

    CommonOpts a_opts, r_opts, c_opts;
    std::string chart_spec;
    std::vector<std::string> sweep_args;

    auto* analyze = app.add_subcommand(
        "analyze", "Newton polygon, dual diagram, subdivision, homogeneity, faces");
    add_common(analyze, a_opts);

    auto* resolve_cmd = app.add_subcommand(
        "resolve", "toric charts, strict transforms, Lambda table, L(Sigma*) verdict");
    add_common(resolve_cmd, r_opts);
    resolve_cmd->add_option("--chart", chart_spec,
                            "print one chart's pullback, e.g. S,E1 or 1:1,1:0");

    auto* certify = app.add_subcommand(
        "certify", "face certificates and mixed-critical-point search");
    add_common(certify, c_opts, /*needs_poly=*/false);
    certify->add_option("--sweep", sweep_args,
                        "residual sweep, e.g. case=IV kgrid=2.5:5:0.5")
        ->expected(-1);

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) return cmd_analyze(a_opts);
        if (resolve_cmd->parsed()) return cmd_resolve(r_opts, chart_spec);
        if (certify->parsed()) {
            if (sweep_args.empty() && c_opts.poly.empty())
                throw CLI::RequiredError("--poly (or --sweep)");
            return cmd_certify(c_opts, sweep_args);
        }
        return 1;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const MathDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
