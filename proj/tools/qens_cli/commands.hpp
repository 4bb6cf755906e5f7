#ifndef QENS_CLI_COMMANDS_HPP
#define QENS_CLI_COMMANDS_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "qens/io/csv.hpp"
#include "qens/io/svg.hpp"
#include "qens/qens.hpp"
#include "qens_cli/run.hpp"

namespace qens::cli {

namespace detail {

inline std::string num(double v, const char* format = "%.6g") {
    char buf[48];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

inline void csv(const RunContext& c, const std::string& name, const std::vector<io::Column>& cols) {
    io::write_csv(c.file(name).string(), cols);
}

inline void svg(const RunContext& c, const std::string& name, const std::string& title, const std::string& xl,
                const std::string& yl, const std::vector<io::Series>& s) {
    if (c.svg) io::write_svg_plot(c.file(name).string(), title, xl, yl, s);
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

using P = ParamSpec;
using T = ParamType;

// ------------------------------------------------------------------ constants
inline void run_constants(const RunContext& c) {
    const auto pc = derived_constants(c.params.num("r"));
    const double alpha = norm_integral_coefficient(pc.m_electron, pc.hbar);
    csv(c, "constants.csv",
        {{"r_hydrogen", "m", {pc.r_hydrogen}},
         {"v_electron", "m^3", {pc.v_electron}},
         {"beta_el", "kg/(m s)", {pc.beta_el}},
         {"hbar", "J s", {pc.hbar}},
         {"m_electron", "kg", {pc.m_electron}},
         {"norm_coefficient", "", {alpha}}});
    c.log << "constants: beta_el=" << num(pc.beta_el, "%.3g") << " v_electron=" << num(pc.v_electron, "%.3g")
          << " norm_coefficient=" << num(alpha, "%.3g") << '\n';
}

// ------------------------------------------------------------------ ensemble-density
inline void run_ensemble_density(const RunContext& c) {
    const auto breaks = c.params.list("breaks");
    const auto values = c.params.list("values");
    const auto V = PotentialField1D::piecewise_constant(breaks, values);
    const auto grid = linspace(V.x_lo(), V.x_hi(), static_cast<std::size_t>(c.params.integer("n")));
    const auto d = ensemble_density(V, c.params.num("e_t"), grid, static_cast<std::size_t>(c.params.integer("order")));
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) v[i] = V(grid[i]);
    csv(c, "ensemble_density.csv", {{"x", "m", grid}, {"w", "1/m", d.w}, {"V", "J", v}});
    svg(c, "ensemble_density.svg", "Ensemble density", "x (m)", "w (1/m)", {{"w(x)", grid, d.w}});
    c.log << "ensemble-density: rho_bar=" << num(d.rho_bar) << " w_max=" << num(*std::max_element(d.w.begin(), d.w.end()))
          << '\n';
}

// ------------------------------------------------------------------ square-well
inline void run_square_well(const RunContext& c) {
    WellGeometry g;
    g.x0 = c.params.num("x0");
    g.V0 = c.params.num("v0");
    g.m = c.params.num("m");
    g.hbar = c.params.num("hbar");
    WellDensityOptions opt;
    opt.paired = c.params.flag("paired");
    const double E_T = c.params.num("e_t");
    const double xmax = c.params.num("xmax");
    const auto grid = linspace(-xmax, xmax, static_cast<std::size_t>(c.params.integer("n")));
    const auto d = well_ensemble_density(g, E_T, grid, opt);
    csv(c, "square_well.csv", {{"x", "m", grid}, {"w", "1/m", d.w}});

    const auto members = sample_members(g, E_T, static_cast<std::size_t>(c.params.integer("members")));
    io::Column k1{"k1", "1/m", {}}, k2{"k2", "1/m", {}}, phi0{"phi0", "", {}}, dev{"amplitude_deviation", "", {}};
    for (const auto& m : members) {
        k1.values.push_back(m.k1);
        k2.values.push_back(m.k2);
        phi0.values.push_back(m.phi0);
        dev.values.push_back(m.k2 > 0.0 ? amplitude_deviation(m.k1, g) : std::numeric_limits<double>::quiet_NaN());
    }
    csv(c, "square_well_members.csv", {k1, k2, phi0, dev});
    svg(c, "square_well.svg", "Square-well ensemble density", "x (m)", "w (1/m)", {{"w(x)", grid, d.w}});
    const auto probe = well_ensemble_density(g, E_T, {0.0, 2.0 * g.x0}, opt);
    c.log << "square-well: rho_bar=" << num(d.rho_bar) << " w0_over_w2x0=" << num(probe.w[0] / probe.w[1], "%.10g")
          << " members=" << members.size() << '\n';
}

// ------------------------------------------------------------------ spread
inline void run_spread(const RunContext& c) {
    const GaussianPacketParams p{c.params.num("b"), c.params.num("k0"), c.params.num("m")};
    const double hbar = c.params.num("hbar");
    const double reach = c.params.num("k_span");
    const auto kg = linspace(p.k0 - reach, p.k0 + reach, static_cast<std::size_t>(c.params.integer("nk")));
    const auto xg = linspace(c.params.num("xmin"), c.params.num("xmax"), static_cast<std::size_t>(c.params.integer("nx")));
    const auto sp = gaussian_spectrum(p, kg, hbar);
    const double peak = gaussian_peak_density(p);
    const auto times = c.params.list("times");

    double dev_printed = 0.0, dev_exact = 0.0;
    std::vector<io::Series> series;
    for (std::size_t j = 0; j < times.size(); ++j) {
        const double t = times[j];
        const auto f = evolve(sp, t, xg);
        std::vector<double> dens(xg.size()), re(xg.size()), im(xg.size()), printed(xg.size()), exact(xg.size());
        for (std::size_t i = 0; i < xg.size(); ++i) {
            dens[i] = std::norm(f.values[i]) / peak;
            re[i] = f.values[i].real();
            im[i] = f.values[i].imag();
            printed[i] = gaussian_norm_analytic(p, xg[i], t, hbar);
            exact[i] = gaussian_density_schrodinger(p, xg[i], t, hbar);
        }
        dev_printed = std::max(dev_printed, max_abs_diff(dens, printed));
        dev_exact = std::max(dev_exact, max_abs_diff(dens, exact));
        csv(c, "spread_t" + std::to_string(j) + ".csv",
            {{"x", "m", xg}, {"density", "peak-normalized", dens}, {"re_psi", "", re}, {"im_psi", "", im},
             {"closed_form_printed", "peak-normalized", printed}, {"closed_form_schrodinger", "peak-normalized", exact}});
        series.push_back({"t=" + num(t), xg, dens});
    }

    // Constant (single-mode) spectrum.
    const auto plane = delta_spectrum(p.k0, kg, free_dispersion(p.m, hbar));
    const double t_last = times.back();
    const auto fp = evolve(plane, t_last, xg);
    const auto dp = fp.density();
    double plane_dev = 0.0;
    for (double v : dp) plane_dev = std::max(plane_dev, std::abs(v - 1.0));
    csv(c, "spread_plane.csv", {{"x", "m", xg}, {"density", "", dp}});
    svg(c, "spread.svg", "Wave-packet spreading", "x (m)", "|psi|^2 / peak", series);
    c.log << "spread: max_dev_printed=" << num(dev_printed, "%.3e") << " max_dev_schrodinger=" << num(dev_exact, "%.3e")
          << " plane_wave_dev=" << num(plane_dev, "%.3e") << '\n';
}

// ------------------------------------------------------------------ nlse
inline void run_nlse(const RunContext& c) {
    const double u = c.params.num("u"), phi = c.params.num("phi"), beta = c.params.num("beta");
    const double L = c.params.num("length");
    const auto n = static_cast<std::size_t>(c.params.integer("n"));
    std::vector<LocalPlaneWave> waves{on_shell_wave(complex(c.params.num("amp"), 0.0), u, phi, beta)};
    if (c.params.num("amp2") != 0.0) waves.push_back(on_shell_wave(complex(c.params.num("amp2"), 0.0), u, phi, beta));
    const auto f0 = sample_waves(waves, L, n);
    const double eps = c.params.num("epsilon") > 0.0 ? c.params.num("epsilon") : default_density_floor(f0);
    const auto ev = evolve_local(f0, c.params.num("dt"), static_cast<std::size_t>(c.params.integer("steps")), eps);

    io::Column t{"t", "s", {}}, mx{"max_abs", "", {}}, tot{"total_density", "", {}}, it{"iterations", "", {}};
    for (const auto& s : ev.trace) {
        t.values.push_back(s.t);
        mx.values.push_back(s.max_abs);
        tot.values.push_back(s.total_density);
        it.values.push_back(s.iterations);
    }
    csv(c, "nlse.csv", {t, mx, tot, it});
    std::vector<double> re(n), im(n), ab(n);
    double drift = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re[i] = ev.field.psi[i].real();
        im[i] = ev.field.psi[i].imag();
        ab[i] = std::abs(ev.field.psi[i]);
        drift = std::max(drift, std::abs(ab[i] - std::abs(f0.psi[i])));
    }
    csv(c, "nlse_field.csv", {{"x", "m", ev.field.x}, {"re_psi", "", re}, {"im_psi", "", im}, {"abs_psi", "", ab}});
    svg(c, "nlse.svg", "Local evolution", "t (s)", "max |psi|", {{"max|psi|", t.values, mx.values}});
    const double resid = stationary_residual(f0, best_fit_frequency(f0));
    c.log << "nlse: amplitude_drift=" << num(drift, "%.3e") << " stationary_residual=" << num(resid, "%.3e")
          << " regularized_fraction=" << num(ev.regularized_fraction) << '\n';
}

// ------------------------------------------------------------------ gamma
inline void run_gamma(const RunContext& c) {
    const double beta = c.params.num("beta") > 0.0 ? c.params.num("beta") : derived_constants().beta_el;
    const auto n = static_cast<std::size_t>(c.params.integer("n"));
    io::Column x{"delta_phi", "rad", {}}, g{"gamma_over_beta", "", {}};
    std::size_t skipped = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n - 1);
        try {
            const double v = interference_gamma(p, beta) / beta;
            if (std::abs(v) > c.params.num("clip")) { ++skipped; continue; }
            x.values.push_back(p);
            g.values.push_back(v);
        } catch (const qens::domain_error&) {
            ++skipped;
        }
    }
    csv(c, "gamma.csv", {x, g});
    svg(c, "gamma.svg", "Interference factor", "delta phi (rad)", "Gamma / beta", {{"Gamma", x.values, g.values}});
    c.log << "gamma: gamma0_over_beta=" << num(interference_gamma(0.0, beta) / beta, "%.10g")
          << " gamma_pi_over_beta=" << num(interference_gamma(std::numbers::pi, beta) / beta, "%.10g")
          << " skipped=" << skipped << '\n';
}

// ------------------------------------------------------------------ diffract / sample
inline SlitAperture aperture_from(const Params& p) {
    const double w = p.num("w"), d = p.num("d"), D = p.num("screen"), R = p.num("source");
    const auto slits = p.integer("slits");
    if (slits == 2) return SlitAperture::double_slit(w, d, D, R);
    if (slits == 1) return SlitAperture::single(w, D, R);
    throw ParameterError("parameter 'slits' must be 1 or 2");
}

inline void run_diffract(const RunContext& c) {
    const auto a = aperture_from(c.params);
    if (auto w = far_field_warning(a)) c.warn << "warning: " << *w << '\n';
    const double k = 2.0 * std::numbers::pi / c.params.num("lambda");
    const double xmax = c.params.num("xmax");
    const auto x = linspace(-xmax, xmax, static_cast<std::size_t>(c.params.integer("n")));
    const auto I = intensity_pattern(a, k, x);
    std::vector<double> fr(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) fr[i] = fraunhofer_intensity(a, k, x[i]);
    const double h = x[1] - x[0];
    const double fs = trapezoid(fr, h);
    for (auto& v : fr) v /= fs;
    csv(c, "diffract.csv", {{"x", "m", x}, {"I", "1/m", I}, {"I_fraunhofer", "1/m", fr}});
    svg(c, "diffract.svg", "Screen intensity", "x (m)", "I (1/m)", {{"Kirchhoff", x, I}, {"Fraunhofer", x, fr}});
    c.log << "diffract: contrast=" << num(fringe_contrast(x, I, xmax)) << " max_dev_fraunhofer="
          << num(max_abs_diff(I, fr) / *std::max_element(I.begin(), I.end()), "%.3e") << '\n';
}

inline void run_sample(const RunContext& c) {
    const auto a = aperture_from(c.params);
    const double k = 2.0 * std::numbers::pi / c.params.num("lambda");
    const double xmax = c.params.num("xmax");
    const auto x = linspace(-xmax, xmax, static_cast<std::size_t>(c.params.integer("cells")));
    const auto I = intensity_pattern(a, k, x);
    const auto hits = sample_hits(x, I, static_cast<std::size_t>(c.params.integer("hits")), c.seed);
    std::vector<double> idx(hits.positions.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<double>(i);
    csv(c, "hits.csv", {{"index", "", idx}, {"x_hit", "m", hits.positions}});
    const auto hist = hit_histogram(hits, x);
    const auto p = qens::detail::cell_probabilities(x, I);
    csv(c, "sample_histogram.csv", {{"x", "m", x}, {"p_cell", "", p}, {"hit_fraction", "", hist}});
    svg(c, "sample.svg", "Detection histogram", "x (m)", "fraction", {{"expected", x, p}, {"hits", x, hist}});
    c.log << "sample: hits=" << hits.positions.size() << " seed=" << c.seed
          << " l1=" << num(histogram_l1(hits, x, I), "%.4e") << '\n';
}

// ------------------------------------------------------------------ magnetic
inline void run_magnetic(const RunContext& c) {
    const auto f = make_em_field(c.params.num("b0"), c.params.num("k0"), c.params.num("u0"));
    const double bext = c.params.num("bext"), x = c.params.num("x"), t = c.params.num("t");
    const auto n = static_cast<std::size_t>(c.params.integer("n"));
    io::Column th{"theta", "rad", {}}, ph{"phi_em", "T^2", {}};
    for (std::size_t i = 0; i < n; ++i) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
        th.values.push_back(theta);
        ph.values.push_back(em_potential(apply_uniform_field(f, bext, theta, x, t), f.u0));
    }
    csv(c, "magnetic_theta.csv", {th, ph});
    const auto [lo, hi] = std::minmax_element(ph.values.begin(), ph.values.end());

    const double l = c.params.num("l"), lambda = c.params.num("lambda"), rho = c.params.num("rho");
    const double bmax = c.params.num("bmax");
    io::Column b{"B_ext", "T", {}}, turns{"phase_unwrapped", "rad", {}}, alpha{"alpha", "rad", {}};
    for (std::size_t i = 0; i < n; ++i) {
        const double B = bmax * static_cast<double>(i) / static_cast<double>(n - 1);
        const auto r = magnetic_phase_shift(l, lambda, B, rho, f.u0);
        b.values.push_back(B);
        turns.values.push_back(2.0 * std::numbers::pi * r.turns);
        alpha.values.push_back(r.alpha);
    }
    csv(c, "magnetic_phase.csv", {b, turns, alpha});
    svg(c, "magnetic_phase.svg", "Magnetic phase shift", "B_ext (T)", "phase (rad)",
        {{"unwrapped", b.values, turns.values}, {"alpha", b.values, alpha.values}});
    const auto end = magnetic_phase_shift(l, lambda, bmax, rho, f.u0);
    c.log << "magnetic: theta_spread=" << num(*hi - *lo, "%.3e") << " phi_em=" << num(*lo, "%.10g")
          << " alpha_at_bmax=" << num(end.alpha, "%.10g") << " winding=" << end.winding << '\n';
}

// ------------------------------------------------------------------ eraser
inline void run_eraser(const RunContext& c) {
    const double base = c.params.num("base");
    const auto n = static_cast<std::size_t>(c.params.integer("n"));
    io::Column ph{"phi", "rad", {}}, s0{"baseline", "", {}}, s1{"rotator", "", {}}, s2{"rotator_diagonal", "", {}};
    for (std::size_t i = 0; i < n; ++i) {
        const double p = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n - 1);
        ph.values.push_back(p);
        s0.values.push_back(eraser_intensity({EraserStage::baseline, p, base}));
        s1.values.push_back(eraser_intensity({EraserStage::rotator_in_path1, p, base}));
        s2.values.push_back(eraser_intensity({EraserStage::rotator_plus_diagonal, p, base}));
    }
    csv(c, "eraser.csv", {ph, s0, s1, s2});
    svg(c, "eraser.svg", "Quantum eraser", "phi (rad)", "phi_em",
        {{"baseline", ph.values, s0.values}, {"rotator", ph.values, s1.values}, {"rotator+diagonal", ph.values, s2.values}});
    auto contrast = [&](EraserStage s) { return phase_contrast([&](double p) { return eraser_intensity({s, p, base}); }); };
    c.log << "eraser: contrast_baseline=" << num(contrast(EraserStage::baseline))
          << " contrast_rotator=" << num(contrast(EraserStage::rotator_in_path1))
          << " contrast_rotator_diagonal=" << num(contrast(EraserStage::rotator_plus_diagonal)) << '\n';
}

// ------------------------------------------------------------------ zeno
inline void run_zeno(const RunContext& c) {
    const double dh2 = c.params.num("dh2"), t = c.params.num("t");
    const long n = static_cast<long>(c.params.integer("n"));
    const auto repeated = zeno_repeated_measurement(dh2, t, n);
    const auto second = zeno_second_order_survival(dh2, t);
    if (!repeated.valid) c.warn << "warning: dh2 (t/n)^2 >= 1, outside the short-time expansion\n";
    io::Column nn{"n", "", {}}, p{"survival", "", {}};
    for (long k = 1; k <= std::max(n, 1L); ++k) {
        nn.values.push_back(static_cast<double>(k));
        p.values.push_back(zeno_repeated_measurement(dh2, t, k).probability);
    }
    // Rabi reference with the same variance: H = [[0, v], [v, 0]], v^2 = dh2.
    ZenoSystem z;
    z.H = Eigen::MatrixXcd::Zero(2, 2);
    z.H(0, 1) = z.H(1, 0) = std::sqrt(dh2);
    z.initial = Eigen::VectorXcd::Zero(2);
    z.initial(0) = 1.0;
    const double exact = zeno_exact_evolution(z, t).survival;
    csv(c, "zeno.csv", {nn, p});
    svg(c, "zeno.svg", "Repeated measurement", "n", "survival", {{"survival", nn.values, p.values}});
    c.log << "zeno: survival=" << num(repeated.probability, "%.6f") << " second_order=" << num(second.probability, "%.6f")
          << " exact_two_level=" << num(exact, "%.6f") << '\n';
}

// ------------------------------------------------------------------ chain
inline void run_chain(const RunContext& c) {
    const long n = static_cast<long>(c.params.integer("n"));
    const double loss = c.params.num("transmittance");
    io::Column nn{"n", "", {}}, tr{"transmission", "", {}};
    for (long k = 1; k <= n; ++k) {
        nn.values.push_back(static_cast<double>(k));
        tr.values.push_back(polarizer_chain_transmission(k, loss));
    }
    csv(c, "chain.csv", {nn, tr});
    svg(c, "chain.svg", "Polarizer chain", "n", "transmission", {{"T(n)", nn.values, tr.values}});
    c.log << "chain: n=" << n << " transmission=" << num(polarizer_chain_transmission(n, loss), "%.6f") << '\n';
}

// ------------------------------------------------------------------ ifm
inline void run_ifm(const RunContext& c) {
    const auto r = ifm_figure_of_merit(c.params.num("r"));
    const auto n = static_cast<std::size_t>(c.params.integer("n"));
    io::Column R{"R", "", {}}, pd{"p_detect", "", {}}, pt{"p_trigger", "", {}}, m{"merit", "", {}};
    for (std::size_t i = 0; i <= n; ++i) {
        const auto s = ifm_figure_of_merit(static_cast<double>(i) / static_cast<double>(n));
        R.values.push_back(static_cast<double>(i) / static_cast<double>(n));
        pd.values.push_back(s.p_detect);
        pt.values.push_back(s.p_trigger);
        m.values.push_back(s.merit);
    }
    csv(c, "ifm.csv", {R, pd, pt, m});
    svg(c, "ifm.svg", "Interaction-free measurement", "R", "probability",
        {{"merit", R.values, m.values}, {"p_detect", R.values, pd.values}, {"p_trigger", R.values, pt.values}});
    c.log << "ifm: merit=" << num(r.merit, "%.6f") << " p_detect=" << num(r.p_detect, "%.6f")
          << " p_trigger=" << num(r.p_trigger, "%.6f") << (r.degenerate ? " degenerate=1" : "") << '\n';
}

}  // namespace detail

inline const std::vector<Command>& commands() {
    using detail::P;
    using detail::T;
    static const std::vector<Command> list{
        {"constants", "Physical constants and the norm-integral coefficient",
         {P{"r", T::decimal, "3.3e-10", "hydrogen radius (m)"}}, detail::run_constants},
        {"ensemble-density", "Ensemble density in a piecewise-constant potential",
         {P{"breaks", T::decimal_list, "0,1,2,3", "segment boundaries (m), comma separated"},
          P{"values", T::decimal_list, "0,-0.5,0", "segment potentials (J), one per segment"},
          P{"e_t", T::decimal, "1", "total energy (J)"},
          P{"n", T::integer, "301", "grid points"},
          P{"order", T::integer, "64", "Gauss-Legendre order per segment"}},
         detail::run_ensemble_density},
        {"square-well", "Square-well ensemble density and member table",
         {P{"x0", T::decimal, "1", "half-width (m)"}, P{"v0", T::decimal, "10", "barrier height (J)"},
          P{"m", T::decimal, "1", "mass (kg)"}, P{"hbar", T::decimal, "1", "reduced Planck constant (J s)"},
          P{"e_t", T::decimal, "5", "total energy (J)"}, P{"xmax", T::decimal, "3", "grid half-width (m)"},
          P{"n", T::integer, "121", "grid points"}, P{"members", T::integer, "41", "members in the table"},
          P{"paired", T::boolean, "false", "pair interior and exterior wave numbers"}},
         detail::run_square_well},
        {"spread", "Gaussian and plane-wave packet evolution",
         {P{"b", T::decimal, "1", "width (m)"}, P{"k0", T::decimal, "5", "carrier wave number (1/m)"},
          P{"m", T::decimal, "1", "mass (kg)"}, P{"hbar", T::decimal, "1", "reduced Planck constant (J s)"},
          P{"times", T::decimal_list, "0,0.5,1,2", "times (s), comma separated"},
          P{"xmin", T::decimal, "-10", "grid start (m)"}, P{"xmax", T::decimal, "25", "grid end (m)"},
          P{"nx", T::integer, "701", "grid points"}, P{"nk", T::integer, "2049", "wave-number samples"},
          P{"k_span", T::decimal, "12", "half-width of the wave-number grid (1/m)"}},
         detail::run_spread},
        {"nlse", "Local nonlinear evolution of one or two plane waves",
         {P{"u", T::decimal, "4", "velocity (m/s)"}, P{"amp", T::decimal, "1", "first amplitude"},
          P{"amp2", T::decimal, "0", "second amplitude (0: single wave)"}, P{"phi", T::decimal, "0", "external potential"},
          P{"beta", T::decimal, "1", "local constant"}, P{"length", T::decimal, "6.283185307179586", "period (m)"},
          P{"n", T::integer, "32", "grid points"}, P{"dt", T::decimal, "5e-5", "time step (s)"},
          P{"steps", T::integer, "200", "steps"}, P{"epsilon", T::decimal, "0", "density floor (0: default)"}},
         detail::run_nlse},
        {"gamma", "Interference factor over the relative phase",
         {P{"beta", T::decimal, "0", "local constant (0: electron value)"}, P{"n", T::integer, "721", "samples"},
          P{"clip", T::decimal, "50", "drop samples with |Gamma/beta| above this"}},
         detail::run_gamma},
        {"diffract", "Kirchhoff screen intensity of one or two slits",
         {P{"lambda", T::decimal, "5e-7", "wavelength (m)"}, P{"w", T::decimal, "2e-6", "slit width (m)"},
          P{"d", T::decimal, "1e-4", "slit separation (m)"}, P{"slits", T::integer, "2", "1 or 2"},
          P{"screen", T::decimal, "1", "screen distance (m)"}, P{"source", T::decimal, "1", "source distance (m)"},
          P{"xmax", T::decimal, "0.015", "screen half-width (m)"}, P{"n", T::integer, "601", "screen points"}},
         detail::run_diffract},
        {"sample", "Single-particle detection events drawn from the screen intensity",
         {P{"lambda", T::decimal, "5e-7", "wavelength (m)"}, P{"w", T::decimal, "2e-6", "slit width (m)"},
          P{"d", T::decimal, "1e-4", "slit separation (m)"}, P{"slits", T::integer, "2", "1 or 2"},
          P{"screen", T::decimal, "1", "screen distance (m)"}, P{"source", T::decimal, "1", "source distance (m)"},
          P{"xmax", T::decimal, "0.015", "screen half-width (m)"}, P{"cells", T::integer, "41", "screen cells"},
          P{"hits", T::integer, "100000", "number of events"}},
         detail::run_sample},
        {"magnetic", "Orientation sweep and phase shift in an external field",
         {P{"b0", T::decimal, "1", "intrinsic field amplitude (T)"}, P{"k0", T::decimal, "1", "wave number (1/m)"},
          P{"u0", T::decimal, "1", "velocity (m/s)"}, P{"bext", T::decimal, "0.5", "external field (T)"},
          P{"x", T::decimal, "0.3", "position (m)"}, P{"t", T::decimal, "0.1", "time (s)"},
          P{"l", T::decimal, "1", "path length in the field (m)"}, P{"lambda", T::decimal, "1e-6", "wavelength (m)"},
          P{"rho", T::decimal, "1", "beam density"}, P{"bmax", T::decimal, "2.5e-6", "largest B_ext in the sweep (T)"},
          P{"n", T::integer, "101", "samples per sweep"}},
         detail::run_magnetic},
        {"eraser", "Eraser intensities for the three stages",
         {P{"base", T::decimal, "1", "base intensity"}, P{"n", T::integer, "73", "phase samples"}}, detail::run_eraser},
        {"zeno", "Survival under repeated measurement",
         {P{"dh2", T::decimal, "", "energy variance (hbar = 1)"}, P{"t", T::decimal, "", "total time"},
          P{"n", T::integer, "", "number of measurements"}},
         detail::run_zeno},
        {"chain", "Polarizer chain transmission",
         {P{"n", T::integer, "200", "largest number of rotators"},
          P{"transmittance", T::decimal, "1", "transmittance per element"}},
         detail::run_chain},
        {"ifm", "Interaction-free measurement figure of merit",
         {P{"r", T::decimal, "", "beam-splitter reflectivity"}, P{"n", T::integer, "100", "points in the R sweep"}},
         detail::run_ifm},
    };
    return list;
}

}  // namespace qens::cli

#endif
