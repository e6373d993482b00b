#include "tropaz/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tropaz/checks.hpp"
#include "tropaz/finite_beta.hpp"
#include "tropaz/gibbs0.hpp"
#include "tropaz/json_io.hpp"
#include "tropaz/manifest.hpp"
#include "tropaz/svg.hpp"

namespace tropaz {

namespace {

struct Options {
    std::string config_path;
    std::string out_path;
    std::string svg_path;
    unsigned precision_bits = 256;
    unsigned nodes = 256;
    std::uint64_t seed = 1;
    std::string mu_text;
    std::string edges_text;
    std::string betas_text;
    std::string beta_text = "1";
    std::string x_text, y_text;
    std::string grid_text = "32x32";
    std::string what;
    int aztec_N = 1;
};

Vec2I parse_mu_text(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ValidationError("ConfigError", "--mu expects 'm1,m2'");
    try {
        return {std::stol(text.substr(0, comma)), std::stol(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ValidationError("ConfigError", "--mu expects 'm1,m2'");
    }
}

// "i,j,Type[@m,n]" items separated by ';'.
std::vector<LiftedEdge> parse_edges_text(const std::string& text) {
    std::vector<LiftedEdge> edges;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ';')) {
        if (item.empty()) continue;
        LiftedEdge e;
        std::string head = item;
        auto at = item.find('@');
        if (at != std::string::npos) {
            head = item.substr(0, at);
            std::string copy = item.substr(at + 1);
            auto comma = copy.find(',');
            if (comma == std::string::npos)
                throw ValidationError("ConfigError", "edge copy must be '@m,n'");
            e.m = std::stol(copy.substr(0, comma));
            e.n = std::stol(copy.substr(comma + 1));
        }
        std::istringstream hs(head);
        std::string a, b, c;
        if (!std::getline(hs, a, ',') || !std::getline(hs, b, ',') || !std::getline(hs, c))
            throw ValidationError("ConfigError", "edge must be 'i,j,Type[@m,n]'");
        e.ref.i = std::stoi(a);
        e.ref.j = std::stoi(b);
        e.ref.type = parse_edge_type(c);
        edges.push_back(e);
    }
    if (edges.empty()) throw ValidationError("ConfigError", "no edges given");
    return edges;
}

std::pair<int, int> parse_grid_text(const std::string& text) {
    auto x = text.find('x');
    if (x == std::string::npos) throw ValidationError("ConfigError", "--grid expects 'RxC'");
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError("ConfigError", "cannot write '" + path + "'");
    f << text;
}

std::string real_str(const Real& v) { return v.str(30); }

struct Runner {
    Options opt;
    RunManifest manifest;
    std::ostream& out;
    std::ostream& err;

    Json new_doc(const std::string& schema) const {
        Json doc;
        doc["schema"] = "tropaz/" + schema + "/v1";
        doc["tool"] = kToolVersion;
        doc["manifest_hash"] = manifest.hash_hex();
        return doc;
    }

    void emit(Json doc) const { write_text(opt.out_path, doc.dump(2) + "\n", out); }

    void emit_svg(const std::string& path, const std::string& svg) const {
        std::string text = "<!-- " + std::string(kToolVersion) +
                           " manifest:" + manifest.hash_hex() + " -->\n" + svg;
        write_text(path, text, out);
    }

    ConfigLoad load() const {
        if (opt.config_path.empty())
            throw ValidationError("ConfigError", "--config is required");
        ConfigLoad cfg = load_config_file(opt.config_path);
        for (const std::string& w : cfg.warnings) err << "warning: " << w << "\n";
        return cfg;
    }

    Pipeline pipeline() const { return build_pipeline(load().domain); }

    Pipeline smooth_pipeline() const {
        Pipeline p = pipeline();
        if (!p.smooth())
            throw ValidationError("NotSmooth",
                                  "this subcommand needs a smooth tropical curve; run "
                                  "'subdivision' to see the violations");
        return p;
    }

    void cmd_tension() {
        Pipeline p = pipeline();
        if (!p.smooth()) err << "warning: subdivision is not smooth; curve-based subcommands "
                                "will be refused for this weight file\n";
        Json doc = new_doc("tension");
        doc.update(emit_tension(p.table, p.generic));
        emit(doc);
    }

    void cmd_subdivision() {
        Pipeline p = pipeline();
        Json doc = new_doc("subdivision");
        doc.update(emit_subdivision(p.sub, p.generic));
        emit(doc);
        if (!opt.svg_path.empty()) emit_svg(opt.svg_path, render_subdivision_svg(p.sub));
    }

    void cmd_curve() {
        Pipeline p = smooth_pipeline();
        Json doc = new_doc("curve");
        doc.update(emit_curve(*p.curve));
        emit(doc);
        if (!opt.svg_path.empty()) emit_svg(opt.svg_path, render_curve_svg(*p.curve));
    }

    void cmd_kirchhoff() {
        Pipeline p = smooth_pipeline();
        Json doc = new_doc("kirchhoff");
        doc.update(emit_kirchhoff(p.sub, *p.curve, *p.fstar, *p.primal));
        emit(doc);
    }

    void cmd_arctic() {
        Pipeline p = smooth_pipeline();
        ActionContext ctx = p.action();
        ArcticCurveGeometry geom = arctic_curve(ctx);
        Json doc = new_doc("arctic");
        doc.update(emit_arctic(ctx, geom));
        emit(doc);
        if (!opt.svg_path.empty()) emit_svg(opt.svg_path, render_arctic_svg(ctx, geom));
    }

    void cmd_limitshape() {
        Pipeline p = smooth_pipeline();
        ActionContext ctx = p.action();
        auto [rows, cols] = parse_grid_text(opt.grid_text);
        Json doc = new_doc("limitshape");
        doc.update(emit_limitshape_grid(ctx, rows, cols));
        emit(doc);
        if (!opt.svg_path.empty())
            emit_svg(opt.svg_path, render_limitshape_svg(ctx, rows, cols));
    }

    void cmd_gibbs() {
        Pipeline p = pipeline();
        Vec2I mu = parse_mu_text(opt.mu_text);
        std::vector<LiftedEdge> edges = parse_edges_text(opt.edges_text);
        GibbsZeroMeasure measure = gibbs_zero_measure(p.table, p.graph, mu);
        Json doc = new_doc("gibbs");
        doc["mu"] = vec2i_json(mu);
        doc["tau"] = measure.tau;
        doc["Z1mu"] = measure.z1mu.str();
        Json marginals = Json::array();
        for (const LiftedEdge& e : edges) {
            Json j;
            j["edge"] = edge_ref_string(e.ref) + "@" + std::to_string(e.m) + "," +
                        std::to_string(e.n);
            j["p"] = rational_string(edge_probabilities(measure, p.graph, {e}));
            marginals.push_back(j);
        }
        doc["marginals"] = marginals;
        doc["joint"] = rational_string(edge_probabilities(measure, p.graph, edges));
        emit(doc);
    }

    void cmd_ronkin() {
        Pipeline p = pipeline();
        SignedCoverSum sum = char_poly_beta(p.graph);
        Rational beta = parse_number(opt.beta_text);
        Rational x = parse_number(opt.x_text), y = parse_number(opt.y_text);
        QuadratureSpec spec{opt.nodes};
        RonkinResult r = ronkin(sum, beta, x, y, spec);
        Json doc = new_doc("ronkin");
        doc["beta"] = rational_string(beta);
        doc["x"] = rational_string(x);
        doc["y"] = rational_string(y);
        doc["nodes"] = spec.nodes;
        doc["value"] = real_str(r.value);
        doc["error_estimate"] = real_str(r.error_estimate);
        emit(doc);
    }

    void cmd_tension_beta() {
        Pipeline p = smooth_pipeline();
        SignedCoverSum sum = char_poly_beta(p.graph);
        Vec2I mu = parse_mu_text(opt.mu_text);
        Vec2Q anchor = anchor_point(p.table, *p.curve, mu);
        QuadratureSpec spec{opt.nodes};
        Json doc = new_doc("tension-beta");
        doc["mu"] = vec2i_json(mu);
        doc["anchor"] = vec2q_json(anchor);
        doc["estar"] = rational_string(p.table.at(mu).estar);
        Json runs = Json::array();
        std::istringstream is(opt.betas_text);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            Rational beta = parse_number(tok);
            Real sigma = surface_tension_beta(sum, mu, beta, spec, anchor);
            Json j;
            j["beta"] = rational_string(beta);
            j["sigma_beta"] = real_str(sigma);
            j["sigma_over_beta"] = real_str(sigma / to_real(beta));
            runs.push_back(j);
        }
        doc["runs"] = runs;
        emit(doc);
    }

    void cmd_gibbs_beta() {
        Pipeline p = pipeline();
        std::vector<LiftedEdge> edges = parse_edges_text(opt.edges_text);
        Rational beta = parse_number(opt.beta_text);
        Vec2Q xy;
        if (!opt.x_text.empty() && !opt.y_text.empty()) {
            xy = Vec2Q(parse_number(opt.x_text), parse_number(opt.y_text));
        } else {
            if (opt.mu_text.empty())
                throw ValidationError("ConfigError", "gibbs-beta needs --x/--y or --mu");
            Pipeline sp = smooth_pipeline();
            xy = anchor_point(sp.table, *sp.curve, parse_mu_text(opt.mu_text));
        }
        QuadratureSpec spec{opt.nodes};
        Real value = gibbs_beta_marginal(p.graph, edges, xy, beta, spec);
        Json doc = new_doc("gibbs-beta");
        doc["beta"] = rational_string(beta);
        doc["x"] = rational_string(xy.x);
        doc["y"] = rational_string(xy.y);
        doc["nodes"] = spec.nodes;
        doc["p"] = real_str(value);
        emit(doc);
    }

    void cmd_aztec_marginals() {
        Pipeline p = pipeline();
        AztecGraph az = build_aztec(p.domain, opt.aztec_N);
        Rational beta = parse_number(opt.beta_text);
        std::vector<Real> marginals = aztec_edge_marginals(az, beta);
        Json doc = new_doc("aztec-marginals");
        doc["n"] = az.n;
        doc["beta"] = rational_string(beta);
        Json edges = Json::array();
        for (std::size_t e = 0; e < az.edges.size(); ++e) {
            Json j;
            j["white"] = Json::array({az.edges[e].x, az.edges[e].y});
            j["type"] = edge_type_name(az.edges[e].type);
            j["p"] = real_str(marginals[e]);
            edges.push_back(j);
        }
        doc["edges"] = edges;
        emit(doc);
    }

    void cmd_aztec_height() {
        Pipeline p = pipeline();
        AztecGraph az = build_aztec(p.domain, opt.aztec_N);
        Rational beta = parse_number(opt.beta_text);
        std::vector<Real> marginals = aztec_edge_marginals(az, beta);
        HeightFieldReal field = expected_height_field(az, marginals);
        Json doc = new_doc("aztec-height");
        doc["n"] = az.n;
        doc["beta"] = rational_string(beta);
        doc["max_closure_residual"] = real_str(field.max_closure_residual);
        Json values = Json::array();
        for (const auto& [face, value] : field.values) {
            Json j;
            j["face"] = Json::array({face.first, face.second});
            j["Eh"] = real_str(value);
            values.push_back(j);
        }
        doc["heights"] = values;
        emit(doc);
    }

    void cmd_sample() {
        Pipeline p = pipeline();
        AztecGraph az = build_aztec(p.domain, opt.aztec_N);
        Rational beta = parse_number(opt.beta_text);
        std::vector<int> cover = sample_cover(az, beta, opt.seed);
        Json doc = new_doc("sample");
        doc["n"] = az.n;
        doc["beta"] = rational_string(beta);
        doc["seed"] = opt.seed;
        Json edges = Json::array();
        for (int e : cover) {
            Json j;
            j["white"] = Json::array({az.edges[e].x, az.edges[e].y});
            j["type"] = edge_type_name(az.edges[e].type);
            edges.push_back(j);
        }
        doc["cover"] = edges;
        emit(doc);
        if (!opt.svg_path.empty()) {
            if (p.smooth()) {
                ActionContext ctx = p.action();
                emit_svg(opt.svg_path, render_sample_svg(az, cover, &ctx));
            } else {
                emit_svg(opt.svg_path, render_sample_svg(az, cover, nullptr));
            }
        }
    }

    void cmd_check() {
        Pipeline p = pipeline();
        std::vector<CheckResult> checks = run_invariant_checks(p);
        bool all = true;
        for (const CheckResult& c : checks) {
            out << (c.pass ? "[ok]   " : "[FAIL] ") << c.name;
            if (!c.detail.empty()) out << " (" << c.detail << ")";
            out << "\n";
            all = all && c.pass;
        }
        out << (all ? "all invariants hold\n" : "invariant violations found\n");
        if (!all) throw ValidationError("CheckFailed", "invariant violations found");
    }

    void cmd_render() {
        if (opt.out_path.empty() && opt.svg_path.empty())
            throw ValidationError("ConfigError", "render needs --out");
        std::string path = opt.svg_path.empty() ? opt.out_path : opt.svg_path;
        Pipeline p = pipeline();
        if (opt.what == "subdivision") {
            emit_svg(path, render_subdivision_svg(p.sub));
        } else if (opt.what == "curve") {
            emit_svg(path, render_curve_svg(*smooth_pipeline().curve));
        } else if (opt.what == "arctic") {
            Pipeline sp = smooth_pipeline();
            ActionContext ctx = sp.action();
            emit_svg(path, render_arctic_svg(ctx, arctic_curve(ctx)));
        } else if (opt.what == "limitshape") {
            Pipeline sp = smooth_pipeline();
            ActionContext ctx = sp.action();
            auto [rows, cols] = parse_grid_text(opt.grid_text);
            emit_svg(path, render_limitshape_svg(ctx, rows, cols));
        } else if (opt.what == "sample") {
            AztecGraph az = build_aztec(p.domain, opt.aztec_N);
            std::vector<int> cover = sample_cover(az, parse_number(opt.beta_text), opt.seed);
            if (p.smooth()) {
                ActionContext ctx = p.action();
                emit_svg(path, render_sample_svg(az, cover, &ctx));
            } else {
                emit_svg(path, render_sample_svg(az, cover, nullptr));
            }
        } else {
            throw ValidationError("ConfigError", "unknown render object '" + opt.what + "'");
        }
    }
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    if (const char* env = std::getenv("TROPAZ_PRECISION_BITS")) {
        try {
            opt.precision_bits = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            err << "warning: ignoring malformed TROPAZ_PRECISION_BITS\n";
        }
    }

    CLI::App app{"tropical Aztec diamond toolkit"};
    app.require_subcommand(1);
    app.add_option("--config", opt.config_path, "weight file (JSON)");
    app.add_option("--out", opt.out_path, "output path (default stdout)");
    app.add_option("--precision-bits", opt.precision_bits, "working precision in bits");
    app.add_option("--quadrature-nodes", opt.nodes, "quadrature nodes per circle");

    CLI::App* c_tension = app.add_subcommand("tension", "tropical surface tension table");
    CLI::App* c_sub = app.add_subcommand("subdivision", "regular subdivision of the Newton polygon");
    c_sub->add_option("--svg", opt.svg_path);
    CLI::App* c_curve = app.add_subcommand("curve", "tropical curve");
    c_curve->add_option("--svg", opt.svg_path);
    CLI::App* c_kirch = app.add_subcommand("kirchhoff", "dual action function f*");
    CLI::App* c_arctic = app.add_subcommand("arctic", "tropical arctic curve");
    c_arctic->add_option("--svg", opt.svg_path);
    CLI::App* c_limit = app.add_subcommand("limitshape", "tropical limit shape grid");
    c_limit->add_option("--grid", opt.grid_text);
    c_limit->add_option("--svg", opt.svg_path);
    CLI::App* c_gibbs = app.add_subcommand("gibbs", "zero-temperature Gibbs marginals");
    c_gibbs->add_option("--mu", opt.mu_text)->required();
    c_gibbs->add_option("--edges", opt.edges_text)->required();
    CLI::App* c_ronkin = app.add_subcommand("ronkin", "Ronkin function of P_beta");
    c_ronkin->add_option("--beta", opt.beta_text)->required();
    c_ronkin->add_option("--x", opt.x_text)->required();
    c_ronkin->add_option("--y", opt.y_text)->required();
    CLI::App* c_tb = app.add_subcommand("tension-beta", "finite-beta surface tension");
    c_tb->add_option("--mu", opt.mu_text)->required();
    c_tb->add_option("--betas", opt.betas_text)->required();
    CLI::App* c_gb = app.add_subcommand("gibbs-beta", "finite-beta Gibbs marginal");
    c_gb->add_option("--edge", opt.edges_text)->required();
    c_gb->add_option("--beta", opt.beta_text)->required();
    c_gb->add_option("--mu", opt.mu_text);
    c_gb->add_option("--x", opt.x_text);
    c_gb->add_option("--y", opt.y_text);
    CLI::App* c_am = app.add_subcommand("aztec-marginals", "Aztec diamond edge marginals");
    c_am->add_option("--N", opt.aztec_N)->required();
    c_am->add_option("--beta", opt.beta_text)->required();
    CLI::App* c_ah = app.add_subcommand("aztec-height", "Aztec expected height field");
    c_ah->add_option("--N", opt.aztec_N)->required();
    c_ah->add_option("--beta", opt.beta_text)->required();
    CLI::App* c_sample = app.add_subcommand("sample", "exact Aztec sample");
    c_sample->add_option("--N", opt.aztec_N)->required();
    c_sample->add_option("--beta", opt.beta_text)->required();
    c_sample->add_option("--seed", opt.seed);
    c_sample->add_option("--svg", opt.svg_path);
    CLI::App* c_check = app.add_subcommand("check", "run the invariant battery");
    CLI::App* c_render = app.add_subcommand("render", "render an object to SVG");
    c_render->add_option("--what", opt.what)->required();
    c_render->add_option("--grid", opt.grid_text);
    c_render->add_option("--N", opt.aztec_N);
    c_render->add_option("--beta", opt.beta_text);
    c_render->add_option("--seed", opt.seed);

    std::vector<const char*> argv;
    argv.push_back("tropaz");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    set_precision_bits(opt.precision_bits);
    try {
        Runner runner{opt, RunManifest{}, out, err};
        runner.manifest.subcommand = app.get_subcommands().front()->get_name();
        runner.manifest.args = args;
        runner.manifest.seed = opt.seed;
        runner.manifest.precision_bits = opt.precision_bits;
        runner.manifest.quadrature_nodes = opt.nodes;
        if (!opt.config_path.empty()) {
            std::ifstream in(opt.config_path, std::ios::binary);
            if (in) {
                std::ostringstream buf;
                buf << in.rdbuf();
                runner.manifest.config_bytes = buf.str();
            }
            runner.manifest.config_path = opt.config_path;
        }

        if (c_tension->parsed()) runner.cmd_tension();
        else if (c_sub->parsed()) runner.cmd_subdivision();
        else if (c_curve->parsed()) runner.cmd_curve();
        else if (c_kirch->parsed()) runner.cmd_kirchhoff();
        else if (c_arctic->parsed()) runner.cmd_arctic();
        else if (c_limit->parsed()) runner.cmd_limitshape();
        else if (c_gibbs->parsed()) runner.cmd_gibbs();
        else if (c_ronkin->parsed()) runner.cmd_ronkin();
        else if (c_tb->parsed()) runner.cmd_tension_beta();
        else if (c_gb->parsed()) runner.cmd_gibbs_beta();
        else if (c_am->parsed()) runner.cmd_aztec_marginals();
        else if (c_ah->parsed()) runner.cmd_aztec_height();
        else if (c_sample->parsed()) runner.cmd_sample();
        else if (c_check->parsed()) runner.cmd_check();
        else if (c_render->parsed()) runner.cmd_render();
        else {
            err << "error: UnknownSubcommand\n";
            return 2;
        }
    } catch (const GuardError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace tropaz
