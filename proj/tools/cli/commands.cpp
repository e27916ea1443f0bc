#include "commands.hpp"

#include "config.hpp"
#include "output.hpp"

#include "fmcalc/asymptotics.hpp"
#include "fmcalc/charges.hpp"
#include "fmcalc/curves.hpp"
#include "fmcalc/errors.hpp"
#include "fmcalc/fmt.hpp"
#include "fmcalc/slopes.hpp"
#include "fmcalc/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace fmcalc::app {

namespace {

// Raw option values; rationals and vectors are parsed after the command is known.
struct Options {
    std::string config_path;
    std::string format = "table";
    long precision_bits = 0; // 0: take from the config defaults
    int order = 0;
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    bool seed_set = false;

    std::string object, left, right, curve, kind, suite, direction = "phi";
    std::string u, v, vmin, vmax, y, z;
    std::string omega_theta, omega_base, B_theta, B_base, D, Dbar;
    bool half_anticanonical = false;
};

struct Context {
    const Options& opt;
    std::ostream& out;
    std::optional<Config> cfg;
    Format format = Format::Table;

    const Config& config() const {
        if (!cfg) throw CLI::RequiredError("--config");
        return *cfg;
    }
    const BaseGeometry& geometry() const { return config().geometry(); }
    int order() const { return opt.order ? opt.order : cfg ? cfg->defaults().order : 8; }
    long precision_bits() const { return opt.precision_bits ? opt.precision_bits : cfg ? cfg->defaults().precision_bits : 64; }
    Rational precision() const { return pow2(-precision_bits()); }
};

Rational rational_option(const std::string& text, const char* flag) {
    if (text.empty()) throw CLI::RequiredError(flag);
    return parse_rational(text);
}

DivisorB divisor_option(const Context& ctx, const std::string& text) {
    if (text.empty()) return DivisorB::zero(ctx.geometry().rank());
    DivisorB d(parse_rational_list(text));
    if (d.rank() != ctx.geometry().rank()) throw DimensionError("divisor has the wrong number of coordinates");
    return d;
}

std::optional<DivisorB> optional_divisor(const Context& ctx, const std::string& text) {
    if (text.empty()) return std::nullopt;
    return divisor_option(ctx, text);
}

DivisorX field_option(const Context& ctx, const std::string& theta, const std::string& base) {
    return DivisorX{theta.empty() ? Rational(0) : parse_rational(theta), divisor_option(ctx, base)};
}

DivisorX B_option(const Context& ctx) {
    if (ctx.opt.half_anticanonical) return half_anticanonical_field(ctx.geometry());
    return field_option(ctx, ctx.opt.B_theta, ctx.opt.B_base);
}

DivisorX omega_option(const Context& ctx) {
    if (!ctx.opt.u.empty() || !ctx.opt.v.empty())
        return polarization(ctx.geometry(), rational_option(ctx.opt.u, "--u"), rational_option(ctx.opt.v, "--v"));
    if (ctx.opt.omega_theta.empty() && ctx.opt.omega_base.empty())
        throw CLI::RequiredError("--omega-theta/--omega-base or --u/--v");
    return field_option(ctx, ctx.opt.omega_theta, ctx.opt.omega_base);
}

const ChernVector& object_vector(const Context& ctx, const std::string& name, const char* flag) {
    if (name.empty()) throw CLI::RequiredError(flag);
    return ctx.config().object(name).vector;
}

const CurveConstraint& curve_option(const Context& ctx) {
    if (ctx.opt.curve.empty()) throw CLI::RequiredError("--curve");
    return ctx.config().curve(ctx.opt.curve);
}

ChargeKind kind_option(const Context& ctx, const CurveConstraint& c) {
    if (ctx.opt.kind.empty()) return c.is_tilt() ? ChargeKind::Reduced : ChargeKind::Full;
    if (ctx.opt.kind == "reduced") return ChargeKind::Reduced;
    if (ctx.opt.kind == "full") return ChargeKind::Full;
    throw CLI::ValidationError("--kind", "must be reduced or full");
}

std::string u_text(const Interval& iv) { return iv.exact() ? to_string(iv.lo) : to_string(iv); }

void print_series(const Context& ctx, const std::string& part, const LaurentSeries& s, Table& t) {
    if (s.is_exact_zero()) t.add({part, "term", "", "0"});
    for (const auto& [e, c] : s.terms()) t.add({part, "term", std::to_string(e), to_string(c)});
    t.add({part, "trunc", s.is_exact() ? "exact" : std::to_string(s.trunc()), ""});
    (void)ctx;
}

// ---------------------------------------------------------------------------

int cmd_transform(Context& ctx) {
    const std::string& name = ctx.opt.object;
    const ChernVector& v = object_vector(ctx, name, "--object");
    ChernVector image;
    if (ctx.opt.direction == "phi") image = phi(ctx.geometry(), v);
    else if (ctx.opt.direction == "phi-hat") image = phi_hat(ctx.geometry(), v);
    else if (ctx.opt.direction == "swap") image = fiber_swap_rule(ctx.geometry(), v);
    else throw CLI::ValidationError("--direction", "must be phi, phi-hat or swap");
    Table t({"name", "n", "x", "S", "eta", "a", "s"});
    std::vector<std::string> row{ctx.opt.direction + "(" + name + ")"};
    for (auto& c : vector_cells(image)) row.push_back(c);
    t.add(row);
    t.print(ctx.out, ctx.format);
    return kExitOk;
}

int cmd_twist(Context& ctx) {
    const std::string& name = ctx.opt.object;
    const ChernVector& v = object_vector(ctx, name, "--object");
    ChernVector tw = twist(ctx.geometry(), v, B_option(ctx));
    Table t({"name", "n", "x", "S", "eta", "a", "s"});
    std::vector<std::string> row{"twist(" + name + ")"};
    for (auto& c : vector_cells(tw)) row.push_back(c);
    t.add(row);
    t.print(ctx.out, ctx.format);
    return kExitOk;
}

SlopeKind slope_kind_option(const Context& ctx) {
    const std::string& k = ctx.opt.kind;
    if (k == "MU_OMEGA_B") return slope_kind::MuOmegaB{omega_option(ctx), B_option(ctx)};
    if (k == "NU_OMEGA_B") return slope_kind::NuOmegaB{omega_option(ctx), B_option(ctx)};
    if (k == "MU_F") return slope_kind::MuF{};
    if (k == "MU_THETA_M") return slope_kind::MuThetaM{};
    if (k == "MU_STAR") return slope_kind::MuStar{};
    if (k == "MU_STAR_B") return slope_kind::MuStarB{};
    if (k == "MU_BAR") return slope_kind::MuBar{omega_option(ctx), divisor_option(ctx, ctx.opt.Dbar)};
    if (k == "MU_PHB_PD") return slope_kind::MuPHBPD{divisor_option(ctx, ctx.opt.D)};
    if (k == "MU_THETA_MPHB_PD") return slope_kind::MuThetaMPHBPD{divisor_option(ctx, ctx.opt.D)};
    if (k == "MU_OMEGA_PD") return slope_kind::MuOmegaPD{omega_option(ctx), divisor_option(ctx, ctx.opt.D)};
    throw CLI::ValidationError("--kind", "unknown slope kind '" + k + "'");
}

int cmd_slope(Context& ctx) {
    const ChernVector& v = object_vector(ctx, ctx.opt.object, "--object");
    if (ctx.opt.kind.empty()) throw CLI::RequiredError("--kind");
    SlopeKind kind = slope_kind_option(ctx);
    Table t({"object", "kind", "value"});
    t.add({ctx.opt.object, kind_name(kind), to_string(slope(ctx.geometry(), kind, v))});
    t.print(ctx.out, ctx.format);
    return kExitOk;
}

int cmd_charge(Context& ctx) {
    const ChernVector& v = object_vector(ctx, ctx.opt.object, "--object");
    const BaseGeometry& g = ctx.geometry();
    const std::string kind = ctx.opt.kind.empty() ? "reduced" : ctx.opt.kind;
    ChargeValue z;
    if (kind == "reduced") {
        z = reduced_charge(g, v, rational_option(ctx.opt.u, "--u"), rational_option(ctx.opt.v, "--v"));
    } else if (kind == "full") {
        z = full_charge(g, v, omega_option(ctx), B_option(ctx));
    } else if (kind == "onedim-transform") {
        Rational y, zz;
        if (!ctx.opt.curve.empty()) {
            const CurveConstraint& c = curve_option(ctx);
            if (c.is_tilt()) throw DomainError("onedim-transform charge needs a onedim curve");
            y = c.p1();
            zz = c.p2();
        } else {
            y = rational_option(ctx.opt.y, "--y");
            zz = rational_option(ctx.opt.z, "--z");
        }
        z = onedim_transform_charge(g, v, y, zz, rational_option(ctx.opt.u, "--u"), rational_option(ctx.opt.v, "--v"),
                                    divisor_option(ctx, ctx.opt.Dbar));
    } else {
        throw CLI::ValidationError("--kind", "must be reduced, full or onedim-transform");
    }
    Table t({"object", "kind", "re", "im"});
    t.add({ctx.opt.object, kind, to_string(z.re), to_string(z.im)});
    t.print(ctx.out, ctx.format);
    return kExitOk;
}

int cmd_curve_solve(Context& ctx) {
    const CurveConstraint& c = curve_option(ctx);
    Rational v = rational_option(ctx.opt.v, "--v");
    Interval u = solve_u(c, v, ctx.precision());
    Table t({"curve", "v", "u"});
    t.add({ctx.opt.curve, to_string(v), u_text(u)});
    t.print(ctx.out, ctx.format);
    return kExitOk;
}

int cmd_curve_expand(Context& ctx) {
    const CurveConstraint& c = curve_option(ctx);
    LaurentSeries s = expand_u(c, ctx.order());
    if (ctx.format == Format::Table) ctx.out << ctx.opt.curve << ": u = " << s.str() << "\n\n";
    Table t({"series", "entry", "exponent", "coefficient"});
    print_series(ctx, "u", s, t);
    t.print(ctx.out, ctx.format);
    return kExitOk;
}

int cmd_curve_check(Context& ctx) {
    const CurveConstraint& c = curve_option(ctx);
    Rational v = rational_option(ctx.opt.v, "--v");
    const Poly2 P = constraint_poly(c);
    Table t({"curve", "u", "v", "P", "on_curve", "chow_identity"});
    if (!ctx.opt.u.empty()) {
        Rational u = parse_rational(ctx.opt.u);
        Rational p = P.eval(u, v);
        std::string chow = c.is_tilt() ? (chow_identity_check(ctx.geometry(), c, u, v) ? "true" : "false") : "n/a";
        t.add({ctx.opt.curve, to_string(u), to_string(v), to_string(p), p == 0 ? "true" : "false", chow});
    } else {
        Interval u = solve_u(c, v, ctx.precision());
        std::string chow = c.is_tilt() ? (chow_identity_check(ctx.geometry(), c, u, v) ? "true" : "false") : "n/a";
        std::string p = u.exact() ? to_string(P.eval(u.lo, v)) : "bracketed";
        t.add({ctx.opt.curve, u_text(u), to_string(v), p, "true", chow});
    }
    t.print(ctx.out, ctx.format);
    return kExitOk;
}

std::string limit_text(const PhaseLimit& pl) {
    if (pl.limit) return to_string(*pl.limit);
    if (std::isnan(pl.approx)) return "?";
    return "atan(" + to_string(*pl.tangent) + ")/pi";
}

std::string approx_text(double x) {
    if (std::isnan(x)) return "?";
    std::ostringstream s;
    s << std::setprecision(12) << x;
    return s.str();
}

int cmd_phase(Context& ctx) {
    const ChernVector& v = object_vector(ctx, ctx.opt.object, "--object");
    const CurveConstraint& c = curve_option(ctx);
    const ChargeKind kind = kind_option(ctx, c);
    const std::optional<DivisorB> D = optional_divisor(ctx, ctx.opt.D);
    int K = ctx.order();
    AsymptoticCharge ac = charge_series(ctx.geometry(), v, c, kind, K, D);
    PhaseLimit pl = phase_limit(ac);
    if (pl.side == Side::Unresolved) {
        K *= 2;
        ac = charge_series(ctx.geometry(), v, c, kind, K, D);
        pl = phase_limit(ac);
    }
    Table t({"object", "curve", "kind", "order", "limit", "approx", "side"});
    t.add({ctx.opt.object, ctx.opt.curve, to_string(kind), std::to_string(K), limit_text(pl), approx_text(pl.approx),
           to_string(pl.side)});
    t.print(ctx.out, ctx.format);
    ctx.out << '\n';
    Table s({"series", "entry", "exponent", "coefficient"});
    print_series(ctx, "re", ac.re, s);
    print_series(ctx, "im", ac.im, s);
    s.print(ctx.out, ctx.format);
    return kExitOk;
}

int cmd_compare(Context& ctx) {
    const ChernVector& M = object_vector(ctx, ctx.opt.left, "--left");
    const ChernVector& N = object_vector(ctx, ctx.opt.right, "--right");
    const CurveConstraint& c = curve_option(ctx);
    const ChargeKind kind = kind_option(ctx, c);
    PhaseOrder order = compare_phases(ctx.geometry(), M, N, c, kind, ctx.order(), optional_divisor(ctx, ctx.opt.D));
    Table t({"left", "right", "curve", "kind", "order"});
    t.add({ctx.opt.left, ctx.opt.right, ctx.opt.curve, to_string(kind), order.str()});
    t.print(ctx.out, ctx.format);
    return kExitOk;
}

int cmd_wall_scan(Context& ctx) {
    const ChernVector& M = object_vector(ctx, ctx.opt.left, "--left");
    const ChernVector& N = object_vector(ctx, ctx.opt.right, "--right");
    const CurveConstraint& c = curve_option(ctx);
    const ChargeKind kind = kind_option(ctx, c);
    Rational lo = rational_option(ctx.opt.vmin, "--vmin"), hi = rational_option(ctx.opt.vmax, "--vmax");
    WallScan ws = wall_scan(ctx.geometry(), M, N, c, kind, lo, hi, ctx.precision(), optional_divisor(ctx, ctx.opt.D));
    Table t({"left", "right", "curve", "degenerate", "walls"});
    t.add({ctx.opt.left, ctx.opt.right, ctx.opt.curve, ws.degenerate ? "true" : "false",
           std::to_string(ws.walls.size())});
    t.print(ctx.out, ctx.format);
    ctx.out << '\n';
    Table w({"lo", "hi"});
    for (const auto& iv : ws.walls) w.add({to_string(iv.lo), to_string(iv.hi)});
    w.print(ctx.out, ctx.format);
    return kExitOk;
}

int cmd_verify(Context& ctx) {
    if (ctx.opt.suite.empty()) throw CLI::RequiredError("--suite");
    SuiteOptions so;
    so.cases = ctx.opt.cases ? ctx.opt.cases : ctx.cfg ? ctx.cfg->defaults().cases : so.cases;
    so.seed = ctx.opt.seed_set ? ctx.opt.seed : ctx.cfg ? ctx.cfg->defaults().seed : so.seed;
    so.order = ctx.order();
    std::vector<SuiteReport> reports = run_suites(ctx.opt.suite, so);
    Table t({"suite", "cases", "passed", "comparisons", "flips", "status"});
    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && r.ok();
        t.add({r.name, std::to_string(r.cases), std::to_string(r.passed), std::to_string(r.comparisons),
               std::to_string(r.flips), r.ok() ? "pass" : "fail"});
    }
    t.print(ctx.out, ctx.format);
    for (const auto& r : reports) {
        for (const auto& n : r.notes) ctx.out << (ctx.format == Format::Records ? "note\t" : "note: ") << r.name
                                              << (ctx.format == Format::Records ? "\t" : ": ") << n << '\n';
        if (r.counterexample)
            ctx.out << (ctx.format == Format::Records ? "counterexample\t" : "counterexample: ") << r.name
                    << (ctx.format == Format::Records ? "\t" : ": ") << *r.counterexample << '\n';
    }
    return ok ? kExitOk : kExitDomain;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Exact Chern-character, central-charge and phase calculator for elliptic threefolds", "fmcalc"};
    app.require_subcommand(1);

    app.add_option("--config", opt.config_path, "Configuration file");
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "records"}));
    app.add_option("--precision", opt.precision_bits, "Root brackets have width <= 2^-BITS")
        ->check(CLI::PositiveNumber);
    app.add_option("--order", opt.order, "Series order K")->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "Suite seed")->each([&opt](const std::string&) { opt.seed_set = true; });
    app.add_option("--cases", opt.cases, "Suite size")->check(CLI::PositiveNumber);

    auto fall = [](CLI::App* sub) { return sub->fallthrough(); };

    auto* transform = fall(app.add_subcommand("transform", "Cohomological Fourier-Mukai transform of an object"));
    transform->add_option("--object", opt.object)->required();
    transform->add_option("--direction", opt.direction, "phi, phi-hat or swap");

    auto* tw = fall(app.add_subcommand("twist", "B-field twist e^{-B} ch"));
    tw->add_option("--object", opt.object)->required();
    tw->add_option("--B-theta", opt.B_theta);
    tw->add_option("--B-base", opt.B_base);
    tw->add_flag("--half-anticanonical", opt.half_anticanonical, "Use B = -1/2 p^*K_B");

    auto* sl = fall(app.add_subcommand("slope", "Slope function of an object"));
    sl->add_option("--object", opt.object)->required();
    sl->add_option("--kind", opt.kind)->required();
    for (CLI::App* sub : {sl}) {
        sub->add_option("--omega-theta", opt.omega_theta);
        sub->add_option("--omega-base", opt.omega_base);
        sub->add_option("--u", opt.u);
        sub->add_option("--v", opt.v);
        sub->add_option("--B-theta", opt.B_theta);
        sub->add_option("--B-base", opt.B_base);
        sub->add_flag("--half-anticanonical", opt.half_anticanonical);
        sub->add_option("--D", opt.D);
        sub->add_option("--Dbar", opt.Dbar);
    }

    auto* ch = fall(app.add_subcommand("charge", "Central charge of an object at a polarization"));
    ch->add_option("--object", opt.object)->required();
    ch->add_option("--kind", opt.kind, "reduced, full or onedim-transform");
    ch->add_option("--u", opt.u);
    ch->add_option("--v", opt.v);
    ch->add_option("--omega-theta", opt.omega_theta);
    ch->add_option("--omega-base", opt.omega_base);
    ch->add_option("--B-theta", opt.B_theta);
    ch->add_option("--B-base", opt.B_base);
    ch->add_flag("--half-anticanonical", opt.half_anticanonical);
    ch->add_option("--Dbar", opt.Dbar);
    ch->add_option("--curve", opt.curve);
    ch->add_option("--y", opt.y);
    ch->add_option("--z", opt.z);

    auto* cv = fall(app.add_subcommand("curve", "Polarization-limit curves"));
    cv->require_subcommand(1);
    auto* solve = fall(cv->add_subcommand("solve", "Positive root u at a given v"));
    solve->add_option("--curve", opt.curve)->required();
    solve->add_option("--v", opt.v)->required();
    auto* expand = fall(cv->add_subcommand("expand", "Laurent expansion of u(v)"));
    expand->add_option("--curve", opt.curve)->required();
    auto* check = fall(cv->add_subcommand("check", "Curve equation and the numerical-equivalence identity"));
    check->add_option("--curve", opt.curve)->required();
    check->add_option("--v", opt.v)->required();
    check->add_option("--u", opt.u, "Point to test; defaults to the root from solve");

    auto* ph = fall(app.add_subcommand("phase", "Limit of the phase along a curve"));
    ph->add_option("--object", opt.object)->required();
    ph->add_option("--curve", opt.curve)->required();
    ph->add_option("--kind", opt.kind, "reduced or full");
    ph->add_option("--D", opt.D);

    auto* cmp = fall(app.add_subcommand("compare", "Asymptotic phase order of two objects"));
    cmp->add_option("--left", opt.left)->required();
    cmp->add_option("--right", opt.right)->required();
    cmp->add_option("--curve", opt.curve)->required();
    cmp->add_option("--kind", opt.kind, "reduced or full");
    cmp->add_option("--D", opt.D);

    auto* ws = fall(app.add_subcommand("wall-scan", "Finite-v crossings of two phases along a curve"));
    ws->add_option("--left", opt.left)->required();
    ws->add_option("--right", opt.right)->required();
    ws->add_option("--curve", opt.curve)->required();
    ws->add_option("--kind", opt.kind, "reduced or full");
    ws->add_option("--vmin", opt.vmin)->required();
    ws->add_option("--vmax", opt.vmax)->required();
    ws->add_option("--D", opt.D);

    auto* vf = fall(app.add_subcommand("verify", "Randomized identity and correspondence suites"));
    vf->add_option("--suite", opt.suite)->required()->check(CLI::IsMember([] {
        std::vector<std::string> names = suite_names();
        names.push_back("all");
        return names;
    }()));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    std::vector<std::pair<CLI::App*, std::function<int(Context&)>>> handlers{
        {transform, cmd_transform}, {tw, cmd_twist},       {sl, cmd_slope},         {ch, cmd_charge},
        {solve, cmd_curve_solve},   {expand, cmd_curve_expand}, {check, cmd_curve_check}, {ph, cmd_phase},
        {cmp, cmd_compare},         {ws, cmd_wall_scan},   {vf, cmd_verify},
    };

    try {
        Context ctx{opt, out, std::nullopt, opt.format == "records" ? Format::Records : Format::Table};
        if (!opt.config_path.empty()) ctx.cfg = load_config(opt.config_path);
        for (auto& [sub, fn] : handlers)
            if (sub->parsed()) return fn(ctx);
        err << app.help();
        return kExitUsage;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "invalid configuration: " << e.what() << '\n';
        return kExitDomain;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}

} // namespace fmcalc::app
