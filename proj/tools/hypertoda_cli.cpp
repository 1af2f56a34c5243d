#include "hypertoda/acceptance.hpp"
#include "hypertoda/error.hpp"
#include "hypertoda/io.hpp"
#include "hypertoda/sampling.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace hypertoda;

namespace
{

struct Options {
    std::string curve_path;
    std::string conic_path;
    double tol = 0;
    int samples = 5;
    std::uint64_t seed = 20240607;
    std::string out;
    std::string format = "json";
    int n = 3;
    int N = 3;
    int steps = 50;
    double dt = 0.02;
    std::vector<double> u;
    std::vector<double> x;
    int sheet = 1;
    std::vector<double> t_values;
};

struct Result {
    Json doc;
    std::optional<Table> table;
    bool ok = true;
};

HyperellipticCurve need_curve(const Options &o)
{
    if (o.curve_path.empty()) {
        throw Error(ErrorCode::InvalidArgument, "--curve is required");
    }
    return load_curve(o.curve_path);
}

Complex complex_arg(const std::vector<double> &v)
{
    if (v.size() == 1) {
        return {v[0], 0.0};
    }
    if (v.size() == 2) {
        return {v[0], v[1]};
    }
    throw Error(ErrorCode::InvalidArgument, "expected RE [IM]");
}

// Point from --x/--sheet, or a seeded random point.
CurvePoint chosen_point(const HyperellipticCurve &c, const Options &o, PointSampler &sampler)
{
    if (o.x.empty()) {
        return sampler.point(c);
    }
    return c.lift(complex_arg(o.x), o.sheet);
}

Result cmd_periods(const Options &o)
{
    const auto c = need_curve(o);
    const auto pd = compute_periods(c);
    Result r;
    r.doc = Json{{"curve", curve_to_json(c)},
                 {"omega_prime", to_json(pd.omega1)},
                 {"omega_double_prime", to_json(pd.omega2)},
                 {"eta_prime", to_json(pd.eta1)},
                 {"eta_double_prime", to_json(pd.eta2)},
                 {"riemann_matrix", to_json(pd.riemann)},
                 {"legendre_residual", pd.legendre_residual},
                 {"quadrature_error_estimate", pd.error_estimate}};
    return r;
}

Result cmd_sigma(const Options &o)
{
    const auto c = need_curve(o);
    const auto ctx = make_sigma_context(c);
    const int g = c.genus();
    std::vector<Eigen::VectorXcd> us;
    if (!o.u.empty()) {
        if (static_cast<int>(o.u.size()) != 2 * g) {
            throw Error(ErrorCode::InvalidArgument, "--u needs 2g numbers (re im per coordinate)");
        }
        Eigen::VectorXcd u(g);
        for (int i = 0; i < g; ++i) {
            u[i] = Complex(o.u[2 * i], o.u[2 * i + 1]);
        }
        us.push_back(u);
    } else {
        PointSampler sampler(o.seed);
        for (int s = 0; s < o.samples; ++s) {
            us.push_back(abel_sum(c, sampler.points(c, g)));
        }
    }
    Result r;
    r.doc["curve"] = curve_to_json(c);
    r.doc["gamma0"] = to_json(ctx.gamma0);
    Json vals = Json::array();
    Table t;
    t.header = {"sample", "re_sigma", "im_sigma"};
    for (std::size_t k = 0; k < us.size(); ++k) {
        const Complex s = sigma(ctx, us[k]);
        Json e{{"u", to_json(us[k])}, {"sigma", to_json(s)}};
        try {
            e["zeta"] = to_json(zeta_vector(ctx, us[k]));
            e["wp"] = to_json(wp_matrix(ctx, us[k]));
        } catch (const Error &err) {
            e["kleinian_error"] = err.what();
        }
        vals.push_back(std::move(e));
        t.rows.push_back({static_cast<double>(k), s.real(), s.imag()});
    }
    r.doc["values"] = std::move(vals);
    r.table = std::move(t);
    return r;
}

Result cmd_abel(const Options &o)
{
    const auto c = need_curve(o);
    PointSampler sampler(o.seed);
    std::vector<CurvePoint> pts;
    if (!o.x.empty()) {
        pts.push_back(c.lift(complex_arg(o.x), o.sheet));
    } else {
        for (int s = 0; s < o.samples; ++s) {
            pts.push_back(sampler.point(c));
        }
    }
    Result r;
    r.doc["curve"] = curve_to_json(c);
    Json vals = Json::array();
    for (const auto &p : pts) {
        vals.push_back(Json{{"point", to_json(p)}, {"u", to_json(abel_point(c, p))}});
    }
    r.doc["abel"] = std::move(vals);
    return r;
}

AcceptanceConfig acceptance_config(const Options &o)
{
    AcceptanceConfig cfg;
    cfg.seed = o.seed;
    if (o.tol > 0) {
        cfg.tol_scale = o.tol;
    }
    if (!o.curve_path.empty()) {
        cfg.curves.push_back(load_curve(o.curve_path));
    }
    return cfg;
}

Result report_result(const std::vector<CriterionReport> &reports)
{
    Result r;
    Json arr = Json::array();
    for (const auto &rep : reports) {
        std::cerr << summary_line(rep) << "\n";
        arr.push_back(to_json(rep));
        r.ok = r.ok && rep.passed();
    }
    r.doc["criteria"] = std::move(arr);
    r.doc["passed"] = r.ok;
    return r;
}

Result cmd_verify_addition(const Options &o)
{
    auto cfg = acceptance_config(o);
    if (o.samples > 0) {
        cfg.addition_samples = o.samples;
    }
    return report_result({criterion_addition(cfg)});
}

Result cmd_division(const Options &o)
{
    const auto c = need_curve(o);
    const auto dp = cantor_alpha(c, o.n);
    const auto pc = kiepert_vs_cantor(c, o.n, std::max(o.samples, 2), o.seed);
    Result r;
    r.doc = Json{{"curve", curve_to_json(c)},
                 {"n", o.n},
                 {"y_exponent", dp.y_exponent},
                 {"alpha", to_json(dp.alpha)},
                 {"degree", dp.alpha.degree()},
                 {"expected_degree", division_alpha_degree(c.genus(), o.n)},
                 {"kiepert_cantor_ratio", to_json(pc.ratio)},
                 {"kiepert_cantor_spread", pc.spread}};
    Table t;
    t.header = {"power", "re", "im"};
    for (int k = 0; k <= dp.alpha.degree(); ++k) {
        t.rows.push_back({static_cast<double>(k), dp.alpha.coeff(k).real(), dp.alpha.coeff(k).imag()});
    }
    r.table = std::move(t);
    return r;
}

Result cmd_torsion(const Options &o)
{
    const auto c = need_curve(o);
    const auto ctx = make_sigma_context(c);
    const auto cands = xi_set(c, o.N, o.tol > 0 ? o.tol : 1e-6);
    Result r;
    r.doc["curve"] = curve_to_json(c);
    r.doc["N"] = o.N;
    Json arr = Json::array();
    Table t;
    t.header = {"re_x", "im_x", "lattice_residual"};
    for (const auto &cand : cands) {
        const Eigen::VectorXcd nc = 2.0 * static_cast<double>(o.N) * abel_point(c, cand.point);
        const double lat = reduce_to_fundamental(ctx.periods, nc).residual;
        arr.push_back(Json{{"point", to_json(cand.point)},
                           {"order_target", cand.order_target},
                           {"alpha_residuals", cand.residuals},
                           {"lattice_residual", lat},
                           {"certified", lat < 1e-6}});
        t.rows.push_back({cand.point.x.real(), cand.point.x.imag(), lat});
    }
    r.doc["candidates"] = std::move(arr);
    r.table = std::move(t);
    return r;
}

TodaFrame cli_frame(const HyperellipticCurve &c, const Options &o, std::shared_ptr<const SigmaContext> ctx)
{
    PointSampler sampler(o.seed);
    const auto p = chosen_point(c, o, sampler);
    const auto base = abel_sum(c, sampler.points(c, c.genus()));
    return make_frame(std::move(ctx), p, base);
}

Result cmd_toda_run(const Options &o)
{
    const auto c = need_curve(o);
    const auto ctx = std::make_shared<const SigmaContext>(make_sigma_context(c));
    const auto frame = cli_frame(c, o, ctx);
    Result r;
    r.doc["curve"] = curve_to_json(c);
    r.doc["v1"] = to_json(frame.v1);
    r.doc["N"] = o.N;
    Table t;
    t.header = {"t"};
    for (int k = 1; k <= o.N; ++k) {
        for (const char *f : {"re_a", "im_a", "re_b", "im_b"}) {
            t.header.push_back(std::string(f) + std::to_string(k));
        }
    }
    Json series = Json::array();
    for (int s = 0; s <= o.steps; ++s) {
        const double tt = s * o.dt;
        const auto st = state_from_frame(frame, o.N, tt);
        std::vector<double> row{tt};
        for (int k = 0; k < o.N; ++k) {
            row.insert(row.end(), {st.a[k].real(), st.a[k].imag(), st.b[k].real(), st.b[k].imag()});
        }
        series.push_back(Json{{"t", tt}, {"a", to_json(st.a)}, {"b", to_json(st.b)}});
        t.rows.push_back(std::move(row));
    }
    r.doc["toda_residual_n0"] = toda_residual_1d(frame, 0, 0.0).residual;
    r.doc["flaschka_ode_residual"] = flaschka_ode_residual(frame, o.N, 0.0);
    r.doc["series"] = std::move(series);
    r.table = std::move(t);
    return r;
}

Result cmd_spectral(const Options &o)
{
    const auto c = need_curve(o);
    const auto ctx = std::make_shared<const SigmaContext>(make_sigma_context(c));
    const auto frame = cli_frame(c, o, ctx);
    const auto st = state_from_frame(frame, o.N, 0.0);
    const auto sd = char_poly(st);
    const auto mc = spectral_morphism(st, o.seed, std::max(o.samples, 1));
    Result r;
    r.doc = Json{{"curve", curve_to_json(c)},
                 {"v1", to_json(frame.v1)},
                 {"N", o.N},
                 {"a", to_json(st.a)},
                 {"b", to_json(st.b)},
                 {"P", to_json(sd.P)},
                 {"invariants", to_json(sd.invariants)},
                 {"weierstrass_z", to_json(sd.weierstrass_z)},
                 {"spectral_genus", mc.genus},
                 {"morphism_residual", mc.identity_residual},
                 {"lax_determinant_residual", mc.det_residual}};
    try {
        r.doc["periodicity_residual"] = periodicity_residual(frame, o.N, 0.0);
    } catch (const Error &e) {
        r.doc["periodicity_error"] = e.what();
    }
    return r;
}

Result cmd_poncelet(const Options &o)
{
    ConicPair pair;
    CurvePoint p;
    HyperellipticCurve curve = HyperellipticCurve(1, {0.0, -1.0, 0.0});
    if (!o.conic_path.empty()) {
        pair = load_conic(o.conic_path);
        curve = reduce_to_elliptic(pair).curve;
        const auto cands = cayley_closure_check(pair, o.N);
        if (cands.empty()) {
            Result r;
            r.doc = Json{{"N", o.N}, {"closed", false}, {"reason", "no zero of psi_N off the branch points"}};
            return r;
        }
        p = cands.front().point;
    } else {
        if (!o.curve_path.empty()) {
            curve = load_curve(o.curve_path);
        }
        if (curve.genus() != 1 || curve.lambda(2) != Complex{}) {
            throw Error(ErrorCode::InvalidArgument, "constructed pairs need y^2 = x^3 + a x + b");
        }
        const auto cands = torsion_candidates(curve, o.N);
        if (o.x.empty() && cands.empty()) {
            throw Error(ErrorCode::NotTorsion, "no zero of psi_N off the branch points");
        }
        p = o.x.empty() ? cands.front().point : curve.lift(complex_arg(o.x), o.sheet);
        pair = constructed_pair(curve.lambda(1), curve.lambda(0), p.x);
    }
    const auto ctx = make_sigma_context(curve);
    std::vector<double> ts = o.t_values;
    if (ts.empty()) {
        ts = {0.11, 0.26, 0.41, 0.56, 0.71};
    }
    Result r;
    r.doc["curve"] = curve_to_json(curve);
    r.doc["N"] = o.N;
    r.doc["step_point"] = to_json(p);
    Table t;
    t.header = {"t", "vertex", "re_x", "im_x"};
    double closure = 0, tangency = 0;
    Json polys = Json::array();
    for (const double tv : ts) {
        const Complex tt(tv, 0.05);
        const auto verts = poncelet_vertices(ctx, p, o.N + 1, tt);
        closure = std::max(closure, closure_residual(ctx, p, o.N, tt));
        tangency = std::max(tangency, tangency_residual(pair, verts));
        Json vs = Json::array();
        for (int k = 0; k < o.N; ++k) {
            vs.push_back(to_json(verts[k][0]));
            t.rows.push_back({tv, static_cast<double>(k + 1), verts[k][0].real(), verts[k][0].imag()});
        }
        polys.push_back(Json{{"t", tv}, {"vertices_x", std::move(vs)}});
    }
    r.doc["polygons"] = std::move(polys);
    r.doc["closure_residual"] = closure;
    r.doc["tangency_residual"] = tangency;
    r.doc["closed"] = closure < 1e-6;
    r.ok = closure < 1e-6;
    r.table = std::move(t);
    return r;
}

Result cmd_verify_all(const Options &o)
{
    return report_result(run_acceptance(acceptance_config(o)));
}

bool is_input_error(ErrorCode c)
{
    switch (c) {
        case ErrorCode::ParseError:
        case ErrorCode::BadArity:
        case ErrorCode::DegenerateCurve:
        case ErrorCode::InvalidArgument:
        case ErrorCode::DegenerateConicPair: return true;
        default: return false;
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Hyperelliptic sigma functions, Toda lattices and division polynomials"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--curve", o.curve_path, "curve file (JSON: genus, lambda)");
    app.add_option("--tol", o.tol, "tolerance override");
    app.add_option("--samples", o.samples, "sample count");
    app.add_option("--seed", o.seed, "random seed");
    app.add_option("--out", o.out, "output path (default stdout)");
    app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "json-like", "csv"}));

    struct Sub {
        const char *name;
        const char *help;
        Result (*fn)(const Options &);
    };
    const Sub subs[] = {
        {"periods", "period matrices and the Legendre residual", cmd_periods},
        {"sigma", "sigma, zeta and wp at points of C^g", cmd_sigma},
        {"abel", "Abel map of curve points", cmd_abel},
        {"verify-addition", "addition formula residuals", cmd_verify_addition},
        {"division", "division polynomial alpha_n", cmd_division},
        {"torsion", "torsion candidates of order 2N", cmd_torsion},
        {"toda-run", "Flaschka variables along the Toda flow", cmd_toda_run},
        {"spectral", "Lax spectral data", cmd_spectral},
        {"poncelet", "Poncelet polygons from torsion data", cmd_poncelet},
        {"verify-all", "run every acceptance criterion", cmd_verify_all},
    };
    Result (*chosen)(const Options &) = nullptr;
    std::string chosen_name;
    for (const auto &s : subs) {
        auto *sc = app.add_subcommand(s.name, s.help);
        sc->callback([&chosen, &chosen_name, s] {
            chosen = s.fn;
            chosen_name = s.name;
        });
        const std::string name = s.name;
        if (name == "sigma") {
            sc->add_option("--u", o.u, "point of C^g as re im pairs")->expected(2, 64);
        }
        if (name == "abel" || name == "toda-run" || name == "spectral" || name == "poncelet") {
            sc->add_option("--x", o.x, "x coordinate: RE [IM]")->expected(1, 2);
            sc->add_option("--sheet", o.sheet, "+1 or -1");
        }
        if (name == "division") {
            sc->add_option("--n", o.n, "division index")->check(CLI::Range(1, 40));
        }
        if (name == "torsion" || name == "toda-run" || name == "spectral" || name == "poncelet") {
            sc->add_option("--N", o.N, "period")->check(CLI::Range(2, 40));
        }
        if (name == "toda-run") {
            sc->add_option("--steps", o.steps, "time steps")->check(CLI::NonNegativeNumber);
            sc->add_option("--dt", o.dt, "time step");
        }
        if (name == "poncelet") {
            sc->add_option("--conic", o.conic_path, "conic file (JSON: A)");
            sc->add_option("--t", o.t_values, "time values");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const auto fmt = parse_format(o.format);
        const Result r = chosen(o);
        write_output(render(r.doc, r.table, fmt), o.out);
        return r.ok ? 0 : 1;
    } catch (const Error &e) {
        std::cerr << "hypertoda " << chosen_name << ": " << e.what() << "\n";
        return is_input_error(e.code()) ? 2 : 1;
    } catch (const std::exception &e) {
        std::cerr << "hypertoda " << chosen_name << ": " << e.what() << "\n";
        return 1;
    }
}
