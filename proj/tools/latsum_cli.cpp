#include "latsum/energy.hpp"
#include "latsum/errors.hpp"
#include "latsum/io.hpp"
#include "latsum/lattice.hpp"
#include "latsum/ljopt.hpp"
#include "latsum/potentials.hpp"
#include "latsum/scan.hpp"
#include "latsum/specfun.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace latsum;

namespace {

// Stable code -> exit status mapping; new codes must be appended.
const std::vector<std::string> kErrorCodes = {
    "SingularBasis", "UnknownLattice", "OutOfDomain", "EnumerationTooLarge",
    "DomainError", "NoConvergence", "DivergentExponent", "NoDensity",
    "NonSummableTail", "QuadratureFailure", "NoMinimumInRange",
    "IndeterminateAtTriangular", "NoCrossoverFound", "IntegralDivergence",
    "UnknownFigure", "ConfigParse"};

int exit_status_for(const std::string& code) {
    for (size_t i = 0; i < kErrorCodes.size(); ++i)
        if (kErrorCodes[i] == code) return 10 + static_cast<int>(i);
    return 99;
}

json num(double v) { return json::parse(format_sig12(v)); }

Lattice parse_lattice(const std::string& sel) {
    if (sel.find(';') != std::string::npos) {
        std::vector<std::vector<double>> rows;
        std::stringstream ss(sel);
        std::string row;
        while (std::getline(ss, row, ';')) {
            rows.emplace_back();
            std::stringstream rs(row);
            std::string cell;
            while (std::getline(rs, cell, ','))
                rows.back().push_back(std::stod(cell));
        }
        size_t n = rows.size();
        for (const auto& r : rows)
            if (r.size() != n) throw ConfigParse("basis matrix must be square");
        Eigen::MatrixXd B(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) B(i, j) = rows[i][j];
        return make_lattice(B);
    }
    if (sel.find(',') != std::string::npos) {
        double x, y;
        char comma;
        std::stringstream ss(sel);
        if (!(ss >> x >> comma >> y) || comma != ',')
            throw ConfigParse("domain point must be 'x,y'");
        return from_domain_point({x, y});
    }
    return special_lattice(sel);
}

struct PotentialOpts {
    std::string kind = "lj";
    double a1 = 1.0, a2 = 1.0, x1 = 6.0, x2 = 12.0;
    double p = 50.0, eps = 0.5;
    std::string terms;

    void attach(CLI::App* cmd) {
        cmd->add_option("--potential", kind,
                        "lj|poly|yukawa|onewell|hardcore|feps|v");
        cmd->add_option("--a1", a1, "first coefficient");
        cmd->add_option("--a2", a2, "second coefficient");
        cmd->add_option("--x1", x1, "first exponent");
        cmd->add_option("--x2", x2, "second exponent");
        cmd->add_option("--p", p, "well steepness exponent");
        cmd->add_option("--eps", eps, "perturbation parameter");
        cmd->add_option("--terms", terms,
                        "poly terms as 'coeff:power,coeff:power,...'");
    }

    RadialPotential build() const {
        if (kind == "lj") return RadialPotential::lennard_jones(a1, a2, x1, x2);
        if (kind == "yukawa") return RadialPotential::yukawa_diff(a1, a2, x1, x2);
        if (kind == "onewell") return RadialPotential::piecewise_one_well(p);
        if (kind == "hardcore") return RadialPotential::hard_core_one_well(p);
        if (kind == "feps") return RadialPotential::f_epsilon(eps);
        if (kind == "v") return RadialPotential::counterexample_v();
        if (kind == "poly") {
            std::vector<PowerTerm> ts;
            std::stringstream ss(terms);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                auto colon = tok.find(':');
                if (colon == std::string::npos)
                    throw ConfigParse("poly term must be 'coeff:power'");
                ts.push_back({std::stod(tok.substr(0, colon)),
                              std::stod(tok.substr(colon + 1))});
            }
            return RadialPotential::inverse_power_poly(std::move(ts));
        }
        throw ConfigParse("unknown potential kind '" + kind + "'");
    }
};

void attach_grid(CLI::App* cmd, GridSpec& g) {
    cmd->add_option("--x-lo", g.x_lo);
    cmd->add_option("--x-hi", g.x_hi);
    cmd->add_option("--y-lo", g.y_lo);
    cmd->add_option("--y-hi", g.y_hi);
    cmd->add_option("--step", g.step, "grid step in x and y");
    cmd->add_option("--arc-step", g.arc_step, "boundary arc step in t");
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigParse("cannot open output file '" + path + "'");
    return os;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// Flags override config file values: config-derived tokens are inserted right
// after the subcommand so later command-line tokens win (TakeLast policy).
std::vector<std::string> apply_config(std::vector<std::string> args) {
    std::string cfg_path;
    for (size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i] == "--config") {
            cfg_path = args[i + 1];
            args.erase(args.begin() + static_cast<long>(i),
                       args.begin() + static_cast<long>(i) + 2);
            break;
        }
    if (cfg_path.empty()) return args;
    std::ifstream in(cfg_path);
    if (!in) throw ConfigParse("cannot read config file '" + cfg_path + "'");
    json cfg;
    try {
        in >> cfg;
    } catch (const std::exception& e) {
        throw ConfigParse(std::string("config file is not valid JSON: ") +
                          e.what());
    }
    if (!cfg.is_object()) throw ConfigParse("config file must hold an object");
    if (args.empty()) throw ConfigParse("missing subcommand");
    std::vector<std::string> extra;
    for (auto& [key, value] : cfg.items()) {
        if (value.is_boolean()) {
            if (value.get<bool>()) extra.push_back("--" + key);
            continue;
        }
        extra.push_back("--" + key);
        extra.push_back(value.is_string() ? value.get<std::string>()
                                          : value.dump());
    }
    args.insert(args.begin() + 1, extra.begin(), extra.end());
    return args;
}

json onewell_lattice_json(const OneWellLatticeReport& r) {
    json branches = json::array();
    for (const auto& b : r.branches)
        branches.push_back({{"lambda_lo", num(b.lo)},
                            {"lambda_hi", num(b.hi)},
                            {"c1", num(b.c1)},
                            {"c2", num(b.c2)},
                            {"c3", num(b.c3)},
                            {"lambda_c", num(b.lambda_c)},
                            {"energy_lo", num(b.e_lo)},
                            {"energy_hi", num(b.e_hi)}});
    return {{"branches", branches},
            {"lambda_star", num(r.lambda_star)},
            {"energy_min", num(r.e_min)},
            {"small_lambda_excluded", r.small_lambda_excluded},
            {"s1_bound", num(r.s1_bound)},
            {"s2_bound", num(r.s2_bound)},
            {"s3_bound", num(r.s3_bound)},
            {"worst_small_lambda", num(r.worst_small_lambda)}};
}

int run(std::vector<std::string> args) {
    CLI::App app{"lattice energy and scan toolkit"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);

    std::string lattice_sel = "Z2", ref_sel = "Lambda1", out_path, arc_out_path;
    double s = 4.0, alpha = 1.0, tol = 1e-10, lambda = 1.0;
    std::string method = "ewald";

    auto* zeta = app.add_subcommand("zeta", "Epstein zeta value");
    zeta->add_option("--lattice", lattice_sel);
    zeta->add_option("--s", s);
    zeta->add_option("--tol", tol);
    zeta->add_option("--method", method, "ewald|direct");

    auto* zderiv = app.add_subcommand("zeta-deriv", "Epstein zeta s-derivative");
    zderiv->add_option("--lattice", lattice_sel);
    zderiv->add_option("--s", s);
    double dtol = 1e-8;
    zderiv->add_option("--tol", dtol);

    auto* theta = app.add_subcommand("theta", "lattice theta function");
    theta->add_option("--lattice", lattice_sel);
    theta->add_option("--alpha", alpha);
    theta->add_option("--tol", tol);
    bool minus_one = false;
    theta->add_flag("--minus-one", minus_one, "subtract the origin term");

    auto* energy = app.add_subcommand("energy", "lattice energy of a potential");
    PotentialOpts epot;
    epot.attach(energy);
    energy->add_option("--lattice", lattice_sel);
    energy->add_option("--lambda", lambda);
    std::string emethod = "direct";
    energy->add_option("--method", emethod, "direct|integral");
    double etol = 1e-10;
    energy->add_option("--tol", etol);

    auto* minscale = app.add_subcommand("minimize-scale", "scale minimization");
    PotentialOpts mpot;
    mpot.attach(minscale);
    minscale->add_option("--lattice", lattice_sel);
    double lo = 0.3, hi = 3.0, mtol = 1e-8;
    int grid_points = 200;
    minscale->add_option("--lo", lo);
    minscale->add_option("--hi", hi);
    minscale->add_option("--tol", mtol);
    minscale->add_option("--grid-points", grid_points);

    auto* lj = app.add_subcommand("lj", "Lennard-Jones type closed forms");
    std::string ljop = "min";
    lj->add_option("--op", ljop, "tilde|scale|min|ratio|H|h");
    double la1 = 1, la2 = 1, lx1 = 6, lx2 = 12, lx = 6;
    lj->add_option("--a1", la1);
    lj->add_option("--a2", la2);
    lj->add_option("--x1", lx1);
    lj->add_option("--x2", lx2);
    lj->add_option("--x", lx, "exponent for H and h");
    lj->add_option("--lattice", lattice_sel);
    lj->add_option("--ref", ref_sel, "reference lattice for ratio and H");

    auto* scanc = app.add_subcommand("scan-c", "c-value scan of the domain");
    GridSpec cgrid;
    attach_grid(scanc, cgrid);
    bool refine = false;
    scanc->add_flag("--refine", refine, "nested refinement of the minimum");
    double final_step = 1e-5;
    scanc->add_option("--final-step", final_step);
    scanc->add_option("--out", out_path, "CSV field output path");
    scanc->add_option("--arc-out", arc_out_path, "boundary arc CSV path");

    auto* eps0 = app.add_subcommand("epsilon0", "threshold from a c minimum");
    double c_min = 0.769;
    eps0->add_option("--c-min", c_min);

    auto* allsc = app.add_subcommand("verify-allscales",
                                     "all-scales optimality on a grid");
    GridSpec agrid;
    attach_grid(allsc, agrid);
    double eps = 1.148;
    allsc->add_option("--eps", eps);

    auto* window = app.add_subcommand("window", "nonminimality scale window");
    PotentialOpts wpot;
    wpot.kind = "v";
    wpot.attach(window);
    GridSpec wgrid;
    wgrid.step = 5e-3;
    wgrid.y_hi = 1.5;
    attach_grid(window, wgrid);
    double wlo = 1.0, whi = 2.5;
    int wsteps = 1501;
    window->add_option("--lambda-lo", wlo);
    window->add_option("--lambda-hi", whi);
    window->add_option("--steps", wsteps);

    auto* crossover = app.add_subcommand("crossover", "crossover scale ladder");
    PotentialOpts cpot;
    cpot.attach(crossover);
    crossover->add_option("--lattice", lattice_sel);
    std::string side = "high";
    crossover->add_option("--side", side, "high|low");
    double start = 1.0;
    int rungs = 17;
    crossover->add_option("--start", start);
    crossover->add_option("--rungs", rungs);

    auto* onewell = app.add_subcommand("onewell-appendix",
                                       "square vs triangular one-well report");
    double owp = 50.0;
    bool hard_core = false;
    onewell->add_option("--p", owp);
    onewell->add_flag("--hard-core", hard_core);

    auto* theil = app.add_subcommand("theil-check",
                                     "well-potential condition report");
    PotentialOpts tpot;
    tpot.kind = "builtin";
    tpot.attach(theil);
    double alpha0 = 0.6, alpha1 = 0.68, c0 = 0.05;
    theil->add_option("--alpha0", alpha0);
    theil->add_option("--alpha1", alpha1);
    theil->add_option("--c0", c0);

    auto* figure = app.add_subcommand("figure", "figure data as CSV");
    std::string figure_id = "H_square";
    figure->add_option("--id", figure_id,
                       "H_square|ratio_grid|H_Z3_fcc|H_Z3_bcc|H_bcc_fcc|"
                       "f_eps_family|laplace_family");
    figure->add_option("--out", out_path, "CSV output path");

    std::vector<const char*> argv;
    argv.push_back("latsum");
    for (auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()),
              const_cast<char**>(argv.data()));

    if (zeta->parsed()) {
        Lattice L = parse_lattice(lattice_sel);
        EvalResult r = method == "direct" ? epstein_zeta_direct(L, s, tol)
                                          : epstein_zeta(L, s, tol);
        emit({{"lattice", lattice_sel},
              {"s", num(s)},
              {"value", num(r.value)},
              {"tail_bound", num(r.tail_bound)},
              {"r_max_used", num(r.r_max_used)},
              {"method", method}});
    } else if (zderiv->parsed()) {
        Lattice L = parse_lattice(lattice_sel);
        EvalResult r = epstein_zeta_deriv(L, s, dtol);
        emit({{"lattice", lattice_sel},
              {"s", num(s)},
              {"value", num(r.value)},
              {"tail_bound", num(r.tail_bound)},
              {"r_max_used", num(r.r_max_used)}});
    } else if (theta->parsed()) {
        Lattice L = parse_lattice(lattice_sel);
        EvalResult r = minus_one ? lattice_theta_minus_one(L, alpha, tol)
                                 : lattice_theta(L, alpha, tol);
        emit({{"lattice", lattice_sel},
              {"alpha", num(alpha)},
              {"value", num(r.value)},
              {"tail_bound", num(r.tail_bound)},
              {"minus_one", minus_one}});
    } else if (energy->parsed()) {
        Lattice L = parse_lattice(lattice_sel);
        RadialPotential f = epot.build();
        EnergyResult r = emethod == "integral"
                             ? energy_theta_integral(f, L, lambda, etol)
                             : energy_direct(f, L, lambda, etol);
        emit({{"lattice", lattice_sel},
              {"potential", f.name()},
              {"lambda", num(lambda)},
              {"value", num(r.value)},
              {"tail_bound", num(r.tail_bound)},
              {"method", r.method}});
    } else if (minscale->parsed()) {
        Lattice L = parse_lattice(lattice_sel);
        RadialPotential f = mpot.build();
        ScaleMinimum m = minimize_scale(f, L, lo, hi, mtol, grid_points);
        emit({{"lattice", lattice_sel},
              {"potential", f.name()},
              {"lambda_star", num(m.lambda_star)},
              {"value", num(m.value)},
              {"bracket_lo", num(m.bracket_lo)},
              {"bracket_hi", num(m.bracket_hi)},
              {"grid_points_used", m.grid_points_used}});
    } else if (lj->parsed()) {
        Lattice L = parse_lattice(lattice_sel);
        LJParams p{la1, la2, lx1, lx2};
        json out = {{"op", ljop}, {"lattice", lattice_sel}};
        if (ljop == "tilde")
            out["value"] = num(tilde_energy(L, lx1, lx2));
        else if (ljop == "scale")
            out["value"] = num(optimal_scale(L, p));
        else if (ljop == "min")
            out["value"] = num(min_energy_closed_form(L, p));
        else if (ljop == "ratio") {
            out["ref"] = ref_sel;
            out["value"] = num(min_energy_ratio(parse_lattice(ref_sel), L, lx1, lx2));
        } else if (ljop == "H") {
            out["ref"] = ref_sel;
            out["value"] = num(H_function(L, parse_lattice(ref_sel), lx));
        } else if (ljop == "h")
            out["value"] = num(h_function(L, lx));
        else
            throw ConfigParse("unknown lj op '" + ljop + "'");
        emit(out);
    } else if (scanc->parsed()) {
        Metric m{Metric::Kind::CValue};
        DomainField field = scan_domain(m, cgrid);
        if (!out_path.empty()) {
            auto os = open_out(out_path);
            write_field_csv(os, field);
        }
        if (!arc_out_path.empty()) {
            auto os = open_out(arc_out_path);
            write_arc_csv(os, field);
        }
        json out = {{"metric", field.metric},
                    {"cells", field.xs.size() * field.ys.size()},
                    {"arc_samples", field.arc_t.size()}};
        if (refine) {
            CMinResult r = find_c_minimum(cgrid.step, final_step);
            out["min"] = num(r.c);
            out["min_x"] = num(r.x);
            out["min_y"] = num(r.y);
        }
        emit(out);
    } else if (eps0->parsed()) {
        emit({{"c_min", num(c_min)}, {"epsilon_zero", num(epsilon_zero(c_min))}});
    } else if (allsc->parsed()) {
        AllScalesResult r = verify_all_scales_optimality(eps, agrid);
        json w = json::array();
        for (size_t i = 0; i < r.witnesses.size() && i < 10; ++i)
            w.push_back({num(r.witnesses[i].x), num(r.witnesses[i].y)});
        emit({{"eps", num(eps)},
              {"optimal", r.optimal},
              {"witness_count", r.witnesses.size()},
              {"witnesses", w}});
    } else if (window->parsed()) {
        RadialPotential f = wpot.build();
        auto ivs = nonminimality_window(f, wgrid, wlo, whi, wsteps);
        json arr = json::array();
        for (const auto& iv : ivs)
            arr.push_back({{"lo", num(iv.lo)}, {"hi", num(iv.hi)}});
        emit({{"potential", f.name()},
              {"lambda_lo", num(wlo)},
              {"lambda_hi", num(whi)},
              {"steps", wsteps},
              {"intervals", arr}});
    } else if (crossover->parsed()) {
        Lattice L = parse_lattice(lattice_sel);
        RadialPotential f = cpot.build();
        CrossoverSide cs = side == "low" ? CrossoverSide::LowDensity
                                         : CrossoverSide::HighDensity;
        double lam = crossover_scale(f, L, cs, start, rungs);
        emit({{"lattice", lattice_sel},
              {"potential", f.name()},
              {"side", side},
              {"lambda", num(lam)}});
    } else if (onewell->parsed()) {
        OneWellReport r = onewell_verify_appendix(owp, hard_core);
        emit({{"p", num(r.p)},
              {"hard_core", r.hard_core},
              {"lambda1", num(r.lambda1)},
              {"lambda2", num(r.lambda2)},
              {"lambda3", num(r.lambda3)},
              {"u_p", num(r.u_p)},
              {"square", onewell_lattice_json(r.z2)},
              {"triangular", onewell_lattice_json(r.a2)},
              {"verdict_square_beats_triangular", r.verdict}});
    } else if (theil->parsed()) {
        std::function<double(double)> g;
        double te, tc;
        if (tpot.kind == "builtin") {
            // Reference well satisfying all five conditions at the default
            // (alpha0, alpha1, C0) = (0.6, 0.68, 0.05).
            g = [](double r) {
                if (r <= 0.68) return 3.0 * (0.68 * 0.68 / (r * r) - 1.0);
                if (r <= 0.707) return -(r - 0.68) * (0.7 / 0.027);
                if (r <= 1.0) return -0.7 - (r - 0.707) * (0.3 / 0.293);
                if (r <= 1.035) return -1.0 + (r - 1.0) * (0.98 / 0.035);
                return -0.02 * std::pow(1.035 / r, 4.0);
            };
            te = 4.0;
            tc = std::pow(1.035, 4.0);
        } else {
            RadialPotential f = tpot.build();
            if (f.r_tail() > 1.0)
                throw DomainError("potential envelope must cover rho >= 1");
            g = [f](double rho) { return f.eval(rho * rho); };
            te = f.tail_exponent();
            tc = f.tail_constant();
        }
        TheilReport r = theil_conditions_check(g, alpha0, alpha1, c0, te, tc);
        emit({{"alpha0", num(alpha0)},
              {"alpha1", num(alpha1)},
              {"c0", num(c0)},
              {"pos", r.pos},
              {"incr", r.incr},
              {"normalize", r.normalize},
              {"hardwall", r.hardwall},
              {"zbettera", r.zbettera},
              {"all", r.all()},
              {"worst_pos", num(r.worst_pos)},
              {"worst_incr", num(r.worst_incr)},
              {"worst_normalize", num(r.worst_normalize)},
              {"worst_hardwall", num(r.worst_hardwall)},
              {"zbettera_lhs", num(r.zbettera_lhs)},
              {"zbettera_rhs", num(r.zbettera_rhs)},
              {"integral_i1", num(r.integral_i1)},
              {"integral_i2", num(r.integral_i2)}});
    } else if (figure->parsed()) {
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!out_path.empty()) {
            file = open_out(out_path);
            os = &file;
        }
        if (figure_id == "H_square" || figure_id == "H_Z3_fcc" ||
            figure_id == "H_Z3_bcc" || figure_id == "H_bcc_fcc") {
            Lattice L, Lam;
            double a, b;
            if (figure_id == "H_square") {
                L = special_lattice("Z2");
                Lam = special_lattice("Lambda1");
                a = 2.1;
                b = 50.0;
            } else {
                L = special_lattice(figure_id == "H_bcc_fcc" ? "D3star" : "Z3");
                Lam = special_lattice(figure_id == "H_Z3_bcc" ? "D3star" : "D3");
                a = 4.0;
                b = 50.0;
            }
            std::vector<double> xs, ys;
            for (int i = 0; i < 500; ++i) {
                double x = a + (b - a) * i / 499.0;
                xs.push_back(x);
                ys.push_back(H_function(L, Lam, x));
            }
            write_curve_csv(*os, "x", "H", xs, ys);
        } else if (figure_id == "ratio_grid") {
            *os << "x1,x2,ratio\n";
            Lattice A2 = special_lattice("A2"), Z2 = special_lattice("Z2");
            for (int x1i = 3; x1i <= 49; ++x1i)
                for (int x2i = x1i + 1; x2i <= 50; ++x2i)
                    *os << x1i << "," << x2i << ","
                        << format_sig12(min_energy_ratio(A2, Z2, x1i, x2i))
                        << "\n";
        } else if (figure_id == "f_eps_family") {
            *os << "eps,r,value\n";
            for (double e : {0.0, 0.5, 1.0, 1.5}) {
                RadialPotential f = RadialPotential::f_epsilon(e);
                for (int i = 0; i <= 400; ++i) {
                    double r = 0.6 + (4.0 - 0.6) * i / 400.0;
                    *os << format_sig12(e) << "," << format_sig12(r) << ","
                        << format_sig12(f.eval(r)) << "\n";
                }
            }
        } else if (figure_id == "laplace_family") {
            *os << "eps,t,density\n";
            for (double e : {0.0, 0.5, 1.0, 1.5}) {
                RadialPotential f = RadialPotential::f_epsilon(e);
                for (int i = 0; i <= 400; ++i) {
                    double t = 4.0 * i / 400.0;
                    *os << format_sig12(e) << "," << format_sig12(t) << ","
                        << format_sig12(f.inverse_laplace_density(t)) << "\n";
                }
            }
        } else {
            throw UnknownFigure("no figure named '" + figure_id + "'");
        }
        if (os == &std::cout) std::cout.flush();
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string context = args.empty() ? "" : args.front();
    try {
        args = apply_config(std::move(args));
        return run(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0; // --help
        json diag = {{"code", "ConfigParse"},
                     {"message", e.what()},
                     {"context", context}};
        std::cerr << diag.dump() << "\n";
        return exit_status_for("ConfigParse");
    } catch (const Error& e) {
        json diag = {{"code", e.code()},
                     {"message", e.what()},
                     {"context", context}};
        std::cerr << diag.dump() << "\n";
        return exit_status_for(e.code());
    } catch (const std::exception& e) {
        json diag = {{"code", "Internal"},
                     {"message", e.what()},
                     {"context", context}};
        std::cerr << diag.dump() << "\n";
        return 99;
    }
}
