#include "potframe/cli.hpp"

#include "potframe/darboux.hpp"
#include "potframe/errors.hpp"
#include "potframe/kdv_example.hpp"
#include "potframe/numerics.hpp"
#include "potframe/parse.hpp"
#include "potframe/potential.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace potframe {

namespace {

using json = nlohmann::ordered_json;

struct Report
{
    json inputs = json::object();
    json result = json::object();
    json verdicts = json::object();
    std::string text; // replaces the generic text rendering when set
};

std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

json strings(const std::vector<RatFun>& v)
{
    json a = json::array();
    for (const auto& f : v)
        a.push_back(f.str());
    return a;
}

void render_value(std::ostream& os, const std::string& key, const json& v, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_string()) {
        os << pad << key << ": " << v.get<std::string>() << "\n";
    } else if (v.is_boolean()) {
        os << pad << key << ": " << (v.get<bool>() ? "true" : "false") << "\n";
    } else if (v.is_number_integer()) {
        os << pad << key << ": " << v.get<long long>() << "\n";
    } else if (v.is_number()) {
        os << pad << key << ": " << num(v.get<double>()) << "\n";
    } else if (v.is_null()) {
        os << pad << key << ": none\n";
    } else if (v.is_array()) {
        os << pad << key << ":\n";
        for (std::size_t i = 0; i < v.size(); ++i)
            render_value(os, "[" + std::to_string(i) + "]", v[i], indent + 2);
    } else {
        os << pad << key << ":\n";
        for (const auto& [k, x] : v.items())
            render_value(os, k, x, indent + 2);
    }
}

std::string render(const std::string& command, const Report& r, bool as_json)
{
    if (as_json) {
        json j;
        j["command"] = command;
        j["inputs"] = r.inputs;
        j["result"] = r.result;
        j["verdicts"] = r.verdicts;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "command: " << command << "\n";
    for (const auto& [k, v] : r.inputs.items())
        render_value(os, k, v, 0);
    if (!r.text.empty())
        os << r.text;
    else
        for (const auto& [k, v] : r.result.items())
            render_value(os, k, v, 0);
    for (const auto& [k, v] : r.verdicts.items())
        os << "verdict " << k << ": " << (v.get<bool>() ? "true" : "false") << "\n";
    return os.str();
}

class Context
{
public:
    std::map<std::string, std::string> flags;
    std::vector<std::string> densities;
    ParseOptions opts;
    Report report;

    const std::string& flag(const std::string& name) const { return flags.at(name); }
    bool has(const std::string& name) const { return !flags.at(name).empty(); }

    EvolutionEq eq(const std::string& name = "eq")
    {
        const EvolutionEq e = parse_equation(flag(name), opts);
        report.inputs[name] = e.str();
        return e;
    }
    RatFun fn(const std::string& name)
    {
        const RatFun f = parse_ratfun(flag(name));
        report.inputs[name] = f.str();
        return f;
    }
    XDiffOp op(const std::string& name)
    {
        const XDiffOp l = parse_operator(flag(name), opts);
        report.inputs[name] = l.str();
        return l;
    }
    int integer(const std::string& name)
    {
        const std::string& s = flag(name);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size())
            throw ParseError("expected an integer for --" + name, used);
        report.inputs[name] = v;
        return v;
    }
    double real(const std::string& name)
    {
        const std::string& s = flag(name);
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size() || !std::isfinite(v))
            throw ParseError("expected a number for --" + name, used);
        report.inputs[name] = v;
        return v;
    }
    void verdict(const std::string& name, bool v) { report.verdicts[name] = v; }
    json& result() { return report.result; }
};

struct Command
{
    std::string name;
    std::string help;
    std::vector<std::string> required;
    std::vector<std::string> optional;
    std::function<void(Context&)> run;
};

std::string named(const std::string& dep, const std::string& suffix, const JetPoly& rhs)
{
    return dep + "_" + suffix + " = " + rhs.str();
}

void cmd_adjoint(Context& c)
{
    const EvolutionEq e = c.eq();
    const EvolutionEq a = adjoint_equation(e, fresh_name("a", {e.dependent()}));
    c.result()["adjoint"] = a.str();
    c.result()["self_adjoint_operator"] = is_self_adjoint(e.op());
}

void cmd_cosym_check(Context& c)
{
    const EvolutionEq e = c.eq();
    const RatFun alpha = c.fn("alpha");
    const RatFun r = adjoint_residual(e, alpha);
    c.result()["adjoint_residual"] = r.str();
    c.verdict("cosymmetry", r.is_zero());
}

void cmd_conslaw(Context& c)
{
    const EvolutionEq e = c.eq();
    const RatFun alpha = c.fn("alpha");
    const ConservedVector cv = canonical_cv(e, alpha);
    c.result()["sigma"] = strings(sigma(e, alpha));
    c.result()["density"] = cv.density().str();
    c.result()["flux"] = cv.flux().str();
    const DivergenceIdentity id = divergence_identity(e, alpha);
    c.result()["divergence"] = id.divergence.str();
    c.verdict("onshell_divergence_zero", onshell_divergence(cv.density(), cv.flux(), e).is_zero());
    c.verdict("characteristic_identity", id.holds);
}

void cmd_potsys(Context& c)
{
    const EvolutionEq e = c.eq();
    const PotentialSystem s = potential_system(e, c.fn("alpha"));
    c.result()["potential"] = s.potential;
    c.result()["vx"] = named(s.potential, "x", s.vx);
    c.result()["vt"] = named(s.potential, "t", s.vt);
    c.result()["sigma"] = strings(s.sigma);
    c.verdict("compatible", compatibility_residual(s).is_zero());
}

void cmd_potential_eq(Context& c)
{
    const EvolutionEq e = c.eq();
    const EvolutionEq p = potential_equation(e, c.fn("alpha"));
    c.result()["potential_equation"] = p.str();
    c.verdict("constant_solves", is_solution(p, RatFun(1)));
}

void cmd_mod_poteq(Context& c)
{
    const EvolutionEq e = c.eq();
    const ModifiedPotentialFrame f = modified_potential_frame(e, c.fn("alpha"));
    c.result()["psi"] = f.psi.str();
    c.result()["wx"] = named(f.potential, "x", f.wx);
    c.result()["wt"] = named(f.potential, "t", f.wt);
    c.result()["sigma"] = strings(f.sigma);
    c.result()["b"] = strings(f.b());
    c.result()["modified_potential_equation"] = f.modified.str();
    const FrameIdentities id = check_frame_identities(f);
    c.verdict("leading", id.leading);
    c.verdict("subleading", id.subleading);
    c.verdict("psi_solves", id.psi_solves);
}

void cmd_darboux(Context& c)
{
    const EvolutionEq e = c.eq();
    const RatFun phi = c.fn("phi");
    const EvolutionEq img = dt_transform_equation(e, phi, fresh_name("u", {e.dependent()}));
    c.result()["c"] = DarbouxTransform(phi).c().str();
    c.result()["splitting_operator"] = DarbouxTransform(phi).op().str();
    c.result()["image"] = img.str();
    c.verdict("splitting", splitting_check(img, e, phi));
}

void cmd_dual_check(Context& c)
{
    const EvolutionEq e = c.eq();
    const DualDiagram d = dual_darboux_diagram(e, c.fn("w0"));
    c.result()["eq_a"] = d.eq_a.str();
    c.result()["adjoint_a"] = d.adjoint_a.str();
    c.result()["adjoint_b"] = d.adjoint_b.str();
    c.result()["alpha0"] = d.alpha0.str();
    c.result()["dual_image"] = d.dual_image ? json(d.dual_image->str()) : json();
    c.result()["twice_dual"] = d.twice_dual ? json(d.twice_dual->str()) : json();
    c.verdict("alpha0_solves", d.alpha0_solves);
    c.verdict("dual_commutes", d.dual_commutes);
    c.verdict("twice_dual", d.twice_dual_ok);
}

void cmd_splitting_check(Context& c)
{
    const EvolutionEq b = c.eq();
    const RatFun phi = c.fn("phi");
    const EvolutionEq a = c.has("eq-a") ? c.eq("eq-a") : dt_transform_equation(b, phi, fresh_name("u", {b.dependent()}));
    c.result()["eq_a"] = a.str();
    c.verdict("splitting", splitting_check(a, b, phi));
}

void cmd_char_map(Context& c)
{
    const EvolutionEq b = c.eq();
    const RatFun w0 = c.fn("w0");
    const RatFun at = c.fn("alpha-tilde");
    const EvolutionEq a = dt_transform_equation(b, w0, fresh_name("u", {b.dependent()}));
    const RatFun beta = characteristic_space_map(a, b, w0, at);
    c.result()["eq_a"] = a.str();
    c.result()["beta"] = beta.str();
    c.verdict("beta_is_cosymmetry", is_cosymmetry(b, beta));
}

void cmd_induced(Context& c)
{
    const EvolutionEq e = c.eq();
    const RatFun alpha = c.fn("alpha");
    const XDiffOp g = c.op("gamma");
    const bool induced = is_induced_quadratic(e, alpha, g);
    c.result()["psi"] = (RatFun(1) / alpha).str();
    c.result()["gamma_psi"] = apply(g, RatFun(1) / alpha).str();
    c.verdict("induced", induced);
}

void cmd_reduced_char(Context& c)
{
    const EvolutionEq e = c.eq();
    const RatFun alpha = c.fn("alpha");
    if (c.has("beta") == c.has("gamma"))
        throw PreconditionError("reduced-char needs exactly one of --beta and --gamma");
    if (c.has("beta")) {
        const auto [first, second] = reduced_characteristic_linear(e, alpha, c.fn("beta"));
        c.result()["kind"] = "linear";
        c.result()["characteristic"] = json::array({first.str(), second.str()});
        return;
    }
    const QuadraticReduction q = reduced_characteristic_quadratic(e, alpha, c.op("gamma"));
    c.result()["kind"] = "quadratic";
    c.result()["potential"] = q.potential;
    c.result()["raw"] = json::array({q.raw.first.str(), q.raw.second.str()});
    c.result()["reduced"] = json::array({q.reduced.first.str(), q.reduced.second.str()});
    c.result()["depends_on_potential"] = q.depends_on_v;
}

void cmd_quad_char_check(Context& c)
{
    const EvolutionEq e = c.eq();
    const XDiffOp g = c.op("gamma");
    c.result()["residual"] = quadratic_characteristic_residual(e, g).str();
    c.result()["self_adjoint"] = is_self_adjoint(g);
    c.verdict("operator_test", is_quadratic_characteristic(e, g));
    c.verdict("euler_test", is_quadratic_characteristic_euler(e, g));
}

void cmd_quad_conslaw(Context& c)
{
    const EvolutionEq e = c.eq();
    const ConservedVector cv = quadratic_cv(e, c.op("gamma"));
    c.result()["density"] = cv.density().str();
    c.result()["flux"] = cv.flux().str();
    c.verdict("onshell_divergence_zero", onshell_divergence(cv.density(), cv.flux(), e).is_zero());
}

void cmd_gamma_ml(Context& c)
{
    const int m = c.integer("m");
    const int l = c.integer("l");
    if (m < 0 || l < 0)
        throw PreconditionError("m and l must be non-negative");
    const long order = 2L * m + 2L * l;
    if (c.opts.max_order > 0 && order > c.opts.max_order)
        throw OrderLimitExceeded(static_cast<int>(order), c.opts.max_order);
    const XDiffOp g = gamma_ml(m, l);
    c.result()["operator"] = g.str();
    c.result()["order"] = g.order();
    c.result()["gamma_psi"] = apply(g, RatFun::x()).str();
    c.verdict("self_adjoint", is_self_adjoint(g));
}

void cmd_kdv_demo(Context& c)
{
    const int grid_max = c.has("grid-max") ? c.integer("grid-max") : 4;
    if (grid_max < 0 || grid_max > 6)
        throw PreconditionError("--grid-max must be in 0..6");
    const KdvReport r = reproduce_kdv_example(grid_max);
    c.report.text = render_text(r);
    json& j = c.result();
    j["modified"] = r.modified.str();
    j["seed"] = r.seed.str();
    j["image"] = r.image.str();
    j["alpha"] = r.alpha.str();
    j["vx"] = named("v", "x", r.vx);
    j["vt"] = named("v", "t", r.vt);
    j["recovered"] = r.recovered.str();
    json grid = json::array();
    for (const auto& g : r.grid)
        grid.push_back({{"m", g.m},
                        {"l", g.l},
                        {"gamma_psi", g.gamma_psi.str()},
                        {"induced", g.induced},
                        {"claimed_induced", g.claimed_induced},
                        {"operator_test", g.operator_test},
                        {"euler_test", g.euler_test},
                        {"depends_on_v", g.depends_on_v},
                        {"discrepancy", g.discrepancy()}});
    j["grid"] = grid;
    json disc = json::array();
    for (const auto* g : r.discrepancies())
        disc.push_back(json::array({g->m, g->l}));
    j["discrepancies"] = disc;
    c.verdict("image_matches", r.image_matches);
    c.verdict("self_adjoint", r.modified_self_adjoint && r.image_self_adjoint);
    c.verdict("alpha_is_cosymmetry", r.alpha_is_cosymmetry);
    c.verdict("potential_system_matches", r.potential_system_matches && r.potential_system_compatible);
    c.verdict("recovered_matches", r.recovered_matches);
    c.verdict("diagram_commutes", r.diagram_commutes);
    c.verdict("all_verified", r.all_verified());
}

void cmd_density_check(Context& c)
{
    const EvolutionEq e = c.eq();
    const DensityEquivalence d = verify_density_equivalence(e, c.fn("alpha"), c.fn("alpha-tilde"));
    c.result()["beta"] = d.beta.str();
    c.result()["density"] = d.lhs.str();
    c.result()["divergence"] = d.rhs.str();
    c.verdict("holds", d.holds);
}

void cmd_simulate(Context& c)
{
    const EvolutionEq e = c.eq();
    GridSpec g;
    if (c.has("length"))
        g.length = c.real("length");
    if (c.has("points"))
        g.points = c.integer("points");
    if (c.has("dt"))
        g.dt = c.real("dt");
    if (c.has("final-time"))
        g.final_time = c.real("final-time");
    if (c.has("save-every"))
        g.save_every = c.integer("save-every");
    g.validate();

    const std::string init = c.has("init") ? c.flag("init") : "sin";
    Trajectory tr;
    const auto wave = [&](const std::string& kind) -> std::optional<int> {
        if (init == kind)
            return 1;
        if (init.rfind(kind + ":", 0) != 0)
            return std::nullopt;
        const std::string k = init.substr(kind.size() + 1);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(k, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != k.size() || v < 0)
            throw ParseError("expected a wave number after '" + kind + ":'", kind.size() + 1);
        return v;
    };
    const double L = g.length;
    if (const auto k = wave("sin")) {
        c.report.inputs["init"] = "sin:" + std::to_string(*k);
        tr = solve_mol(e, [&](double s) { return std::sin(2 * M_PI * *k * s / L); }, g);
    } else if (const auto k2 = wave("cos")) {
        c.report.inputs["init"] = "cos:" + std::to_string(*k2);
        tr = solve_mol(e, [&](double s) { return std::cos(2 * M_PI * *k2 * s / L); }, g);
    } else {
        const RatFun f = parse_ratfun(init);
        c.report.inputs["init"] = f.str();
        tr = solve_mol(e, f, g);
    }

    std::vector<JetPoly> fs;
    if (c.densities.empty()) {
        const JetPoly u = JetPoly::var(e.dependent());
        const RatFun half(Rational(1, 2));
        fs = {u, u.pow(2) * half, JetPoly::var(e.dependent(), 0, 1).pow(2) * half};
    } else {
        for (const auto& d : c.densities)
            fs.push_back(parse_jetpoly(d));
    }
    json dens = json::array();
    for (const auto& f : fs)
        dens.push_back(f.str());
    c.report.inputs["density"] = dens;

    json& j = c.result();
    j["steps"] = static_cast<long long>(std::llround(g.final_time / g.dt));
    j["stability_number"] = tr.stability_number;
    j["stability_limit"] = rk4_stability_limit;
    json fj = json::array();
    std::vector<std::vector<double>> series;
    for (const auto& f : fs) {
        series.push_back(functional_series(tr, f, e.dependent()));
        fj.push_back({{"density", f.str()},
                      {"initial", series.back().front()},
                      {"final", series.back().back()},
                      {"drift", functional_drift(tr, f, e.dependent())}});
    }
    j["functionals"] = fj;
    c.verdict("within_stability_bound", tr.stability_number <= rk4_stability_limit);

    if (c.has("csv")) {
        std::ofstream os(c.flag("csv"));
        if (!os)
            throw PreconditionError("cannot write " + c.flag("csv"));
        os << "t";
        for (const auto& f : fs)
            os << "," << f.str();
        os << "\n";
        char buf[64];
        for (std::size_t i = 0; i < tr.times.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", tr.times[i]);
            os << buf;
            for (const auto& s : series) {
                std::snprintf(buf, sizeof buf, "%.17g", s[i]);
                os << "," << buf;
            }
            os << "\n";
        }
        c.report.inputs["csv"] = c.flag("csv");
    }
}

const std::vector<Command>& commands()
{
    static const std::vector<Command> table = {
        {"adjoint", "adjoint equation", {"eq"}, {}, cmd_adjoint},
        {"cosym-check", "is alpha a cosymmetry", {"eq", "alpha"}, {}, cmd_cosym_check},
        {"conslaw", "canonical conserved vector of a cosymmetry", {"eq", "alpha"}, {}, cmd_conslaw},
        {"potsys", "potential system", {"eq", "alpha"}, {}, cmd_potsys},
        {"potential-eq", "potential equation", {"eq", "alpha"}, {}, cmd_potential_eq},
        {"mod-poteq", "modified potential equation and frame identities", {"eq", "alpha"}, {}, cmd_mod_poteq},
        {"darboux", "Darboux transform of an equation by a seed solution", {"eq", "phi"}, {}, cmd_darboux},
        {"dual-check", "dual Darboux diagram", {"eq", "w0"}, {}, cmd_dual_check},
        {"splitting-check", "intertwining relation of DT[phi]", {"eq", "phi"}, {"eq-a"}, cmd_splitting_check},
        {"char-map", "map a cosymmetry of the DT image back", {"eq", "w0", "alpha-tilde"}, {}, cmd_char_map},
        {"induced", "Gamma psi = 0 test", {"eq", "alpha", "gamma"}, {}, cmd_induced},
        {"reduced-char", "reduced characteristic (linear --beta or quadratic --gamma)", {"eq", "alpha"},
         {"beta", "gamma"}, cmd_reduced_char},
        {"quad-char-check", "quadratic characteristic tests", {"eq", "gamma"}, {}, cmd_quad_char_check},
        {"quad-conslaw", "conserved vector of a quadratic characteristic", {"eq", "gamma"}, {}, cmd_quad_conslaw},
        {"gamma-ml", "the operator D_x^m (3t D_x^2 + x)^l D_x^m", {"m", "l"}, {}, cmd_gamma_ml},
        {"kdv-demo", "linear KdV worked example", {}, {"grid-max"}, cmd_kdv_demo},
        {"density-check", "density equivalence for two cosymmetries", {"eq", "alpha", "alpha-tilde"}, {},
         cmd_density_check},
        {"simulate", "method-of-lines check of conserved functionals", {"eq"},
         {"init", "length", "points", "dt", "final-time", "save-every", "csv"}, cmd_simulate},
    };
    return table;
}

int max_order_from_env()
{
    const char* s = std::getenv("POTFRAME_MAX_ORDER");
    if (!s || !*s)
        return 12;
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (*end != '\0' || v < 1 || v > 1000)
        throw PreconditionError(std::string("POTFRAME_MAX_ORDER must be an integer in 1..1000, got '") + s + "'");
    return static_cast<int>(v);
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args)
{
    CliResult res;
    CLI::App app{"Conservation laws, potential frames and Darboux transformations of linear evolution equations",
                 "potframe"};
    app.require_subcommand(1);

    struct Slot
    {
        Context ctx;
        bool json = false;
        std::string out;
    };
    std::map<std::string, Slot> slots;
    for (const auto& cmd : commands()) {
        Slot& s = slots[cmd.name];
        CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
        for (const auto& f : cmd.required)
            sub->add_option("--" + f, s.ctx.flags[f])->required();
        for (const auto& f : cmd.optional)
            sub->add_option("--" + f, s.ctx.flags[f]);
        if (cmd.name == "simulate")
            sub->add_option("--density", s.ctx.densities, "conserved density to track (repeatable)");
        sub->add_flag("--json", s.json, "structured output");
        sub->add_option("--out", s.out, "write the output to a file");
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        const int code = app.exit(e, out, err);
        res.out = out.str();
        res.err = err.str();
        res.exit = code == 0 ? 0 : 2;
        return res;
    }

    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    Slot& s = slots.at(name);
    const Command& cmd = *std::find_if(commands().begin(), commands().end(),
                                       [&](const Command& c) { return c.name == name; });
    try {
        s.ctx.opts.max_order = max_order_from_env();
        cmd.run(s.ctx);
    } catch (const Error& e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.exit = 2;
        return res;
    } catch (const std::exception& e) {
        res.err = std::string("internal error: ") + e.what() + "\n";
        res.exit = 2;
        return res;
    }

    const std::string text = render(name, s.ctx.report, s.json);
    bool all = true;
    for (const auto& [k, v] : s.ctx.report.verdicts.items())
        all = all && v.get<bool>();
    res.exit = all ? 0 : 1;
    if (!s.out.empty()) {
        std::ofstream os(s.out, std::ios::binary);
        if (!os) {
            res.err = "error: cannot write " + s.out + "\n";
            res.exit = 2;
            return res;
        }
        os << text;
    } else {
        res.out = text;
    }
    return res;
}

} // namespace potframe
