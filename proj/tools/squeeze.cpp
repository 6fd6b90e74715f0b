// squeeze: CLI front end for the squeezing library.
//
// Subcommands map one-to-one onto the library modules; every run is
// deterministic (no timestamps, fixed row order) so identical configs give
// byte-identical files. SQUEEZE_THREADS caps internal parallelism.
//
// Exit codes: 0 success, 1 --check violation, 2 invalid input, 3 truncation.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sqz/analytic.hpp"
#include "sqz/dicke.hpp"
#include "sqz/phasespace.hpp"
#include "sqz/qstates.hpp"
#include "sqz/squeezing.hpp"

namespace {

using sqz::CatParity;
using sqz::Complex;
using sqz::StateVector;

constexpr double kPi = std::numbers::pi;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

double parse_double(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw sqz::Error("cannot parse '" + s + "' as a number for " + what);
    }
}

long parse_long(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw sqz::Error("cannot parse '" + s + "' as an integer for " + what);
    }
}

CatParity parse_parity(const std::string& s, const std::string& what) {
    if (s == "+") return CatParity::Even;
    if (s == "-") return CatParity::Odd;
    throw sqz::Error(what + " must be '+' or '-', got '" + s + "'");
}

// "start:stop:steps" with steps = interval count, so steps+1 points.
std::vector<double> parse_range(const std::string& s, const std::string& what) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw sqz::Error(what + " must look like start:stop:steps");
    const double start = parse_double(parts[0], what);
    const double stop = parse_double(parts[1], what);
    const long steps = parse_long(parts[2], what);
    if (steps < 1) throw sqz::Error(what + ": steps must be >= 1");
    if (!(stop > start)) throw sqz::Error(what + ": stop must exceed start");
    std::vector<double> out(steps + 1);
    for (long i = 0; i <= steps; ++i) out[i] = start + (stop - start) * i / steps;
    out.back() = stop;
    return out;
}

std::vector<double> parse_tau_list(const std::string& s) {
    if (s.find(':') != std::string::npos) return parse_range(s, "--tau");
    std::vector<double> out;
    for (const auto& tok : split(s, ',')) out.push_back(parse_double(tok, "--tau"));
    if (out.empty()) throw sqz::Error("--tau list is empty");
    for (std::size_t i = 1; i < out.size(); ++i)
        if (!(out[i] > out[i - 1])) throw sqz::Error("--tau list must be strictly ascending");
    return out;
}

void write_output(const std::string& path, const std::string& data) {
    if (path == "-") {
        std::fwrite(data.data(), 1, data.size(), stdout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw sqz::Error("cannot open output file " + path);
    f << data;
}

struct Checker {
    long total = 0;
    long failed = 0;

    void expect(bool ok, const std::string& what) {
        ++total;
        if (!ok) {
            ++failed;
            std::fprintf(stderr, "[check FAIL] %s\n", what.c_str());
        }
    }
    int finish(const char* sub) const {
        std::fprintf(stderr, "[check] %s: %ld checks, %ld failed\n", sub, total, failed);
        return failed == 0 ? 0 : 1;
    }
};

double uniform(std::mt19937_64& gen) { return (gen() >> 11) * 0x1p-53; }

StateVector pad_fock(const StateVector& st, int extra) {
    const int n_max = st.basis().n_max() + extra;
    sqz::Vector v = sqz::Vector::Zero(n_max + 1);
    v.head(st.dim()) = st.amps();
    return StateVector(sqz::BasisDescriptor::fock(n_max), v);
}

// ---------------------------------------------------------------- squeeze-eval

StateVector parse_state_spec(const std::string& spec, int n_max_flag, int& n_max_used) {
    const auto p = split(spec, ':');
    const std::string& kind = p.empty() ? spec : p[0];
    auto arity = [&](std::size_t n) {
        if (p.size() != n)
            throw sqz::Error("state spec '" + spec + "' needs " + std::to_string(n - 1) +
                             " argument(s) after '" + kind + "'");
    };
    if (kind == "fock") {
        arity(2);
        const long n = parse_long(p[1], "fock excitation");
        if (n < 0) throw sqz::Error("fock excitation must be >= 0");
        const int n_max = n_max_flag > 0 ? n_max_flag : static_cast<int>(std::max<long>(16, n));
        if (n > n_max) throw sqz::Error("fock excitation exceeds --n-max");
        sqz::Vector v = sqz::Vector::Zero(n_max + 1);
        v[n] = 1.0;
        n_max_used = n_max;
        return StateVector(sqz::BasisDescriptor::fock(n_max), v);
    }
    if (kind == "coherent" || kind == "cat") {
        const bool is_cat = kind == "cat";
        arity(is_cat ? 3 : 2);
        const double alpha = parse_double(p[1], "alpha");
        const int n_max = n_max_flag > 0 ? n_max_flag : sqz::fock_cutoff_for(std::abs(alpha));
        n_max_used = n_max;
        if (is_cat) return sqz::cat_state(alpha, parse_parity(p[2], "cat parity"), n_max);
        return sqz::coherent_state(alpha, n_max);
    }
    if (kind == "dicke") {
        arity(3);
        const double j = parse_double(p[1], "j");
        const long n = parse_long(p[2], "dicke excitation");
        const auto basis = sqz::BasisDescriptor::dicke(j);
        if (n < 0 || n >= basis.dim()) throw sqz::Error("dicke excitation must be in [0, 2j]");
        sqz::Vector v = sqz::Vector::Zero(basis.dim());
        v[n] = 1.0;
        return StateVector(basis, v);
    }
    if (kind == "scs") {
        arity(3);
        return sqz::spin_coherent_state({parse_double(p[1], "j"), parse_double(p[2], "eta")});
    }
    if (kind == "spincat") {
        arity(4);
        return sqz::spin_cat_state({parse_double(p[1], "j"), parse_double(p[2], "eta")},
                                   parse_parity(p[3], "spincat parity"));
    }
    throw sqz::Error("unknown state kind '" + kind +
                     "'; expected fock, coherent, cat, dicke, scs, or spincat");
}

int run_eval(const std::string& spec, int n_max_flag, const std::string& output, bool check,
             unsigned long long seed) {
    int n_max_used = -1;
    const StateVector st = parse_state_spec(spec, n_max_flag, n_max_used);
    sqz::SqueezingReport rep;
    const bool bosonic = st.basis().kind() == sqz::BasisDescriptor::Kind::Fock;
    if (bosonic) {
        const auto ps = sqz::principal_squeezing(st);
        rep.zeta = ps.zeta;
        rep.theta_star = ps.theta_star;
        rep.zeta_tilde = ps.zeta_tilde;
    } else {
        try {
            const auto eo = sqz::spin_squeezing_evenodd(st);
            rep.xi = eo.xi;
            rep.xi_tilde = eo.xi_tilde;
        } catch (const sqz::MeanSpinNotAxial&) {
        }
        try {
            const auto kr = sqz::spin_squeezing_kitagawa(st);
            if (!rep.xi) rep.xi = kr.xi;
            rep.mean_spin = kr.mean_spin;
            rep.n_perp_star = kr.n_perp_star;
            const double rel = kr.mean_spin.norm() / st.basis().j();
            rep.xi_prime = kr.xi / (rel * rel);
        } catch (const sqz::DegenerateMeanSpin&) {
        }
    }

    nlohmann::ordered_json out;
    out["command"] = "squeeze-eval";
    out["state"] = spec;
    if (n_max_used >= 0)
        out["n_max"] = n_max_used;
    else
        out["n_max"] = nullptr;
    auto put = [&out](const char* key, const std::optional<double>& v) {
        if (v)
            out[key] = *v;
        else
            out[key] = nullptr;
    };
    put("zeta", rep.zeta);
    put("theta_star", rep.theta_star);
    put("zeta_tilde", rep.zeta_tilde);
    put("xi", rep.xi);
    put("xi_tilde", rep.xi_tilde);
    put("xi_prime", rep.xi_prime);
    auto put_vec = [&out](const char* key, const std::optional<Eigen::Vector3d>& v) {
        if (v)
            out[key] = {(*v)[0], (*v)[1], (*v)[2]};
        else
            out[key] = nullptr;
    };
    put_vec("mean_spin", rep.mean_spin);
    put_vec("n_perp_star", rep.n_perp_star);
    write_output(output, out.dump(2) + "\n");

    if (!check) return 0;
    Checker ck;
    std::mt19937_64 gen(seed);
    if (bosonic) {
        const double scan = sqz::min_variance_theta_scan(st);
        ck.expect(std::abs(*rep.zeta - scan) <= 1e-10, "zeta matches theta-grid minimum");
        ck.expect(std::abs(sqz::variance_xtheta(st, *rep.theta_star) - *rep.zeta) <= 1e-10,
                  "variance at theta_star equals zeta");
        const StateVector padded = pad_fock(st, 16);
        for (int k = 0; k < 3; ++k) {
            const Complex alpha(0.3 * (2.0 * uniform(gen) - 1.0),
                                0.3 * (2.0 * uniform(gen) - 1.0));
            const auto moved = sqz::apply(sqz::displacement(alpha, padded.basis().n_max()), padded);
            ck.expect(std::abs(sqz::principal_squeezing(moved).zeta - *rep.zeta) <= 1e-9,
                      "zeta invariant under displacement " + fmt12(alpha.real()) + "+" +
                          fmt12(alpha.imag()) + "i");
        }
    } else {
        if (rep.xi && rep.xi_tilde)
            ck.expect(std::abs(*rep.xi - (1.0 + *rep.xi_tilde / st.basis().j())) <= 1e-12,
                      "xi = 1 + xi_tilde / j");
        if (rep.mean_spin) {
            const auto kr = sqz::spin_squeezing_kitagawa(st);
            for (int k = 0; k < 3; ++k) {
                const double theta = uniform(gen) * kPi;
                const double phi = uniform(gen) * 2.0 * kPi;
                const auto turned =
                    sqz::apply(sqz::rotation(theta, phi, st.basis().j()), st);
                ck.expect(std::abs(sqz::spin_squeezing_kitagawa(turned).xi - kr.xi) <= 1e-9,
                          "xi invariant under rotation theta=" + fmt12(theta) +
                              " phi=" + fmt12(phi));
            }
        }
    }
    return ck.finish("squeeze-eval");
}

// ---------------------------------------------------------------------- prop1

long grid_count(double lo, double hi, double step, const std::string& what) {
    if (!(step > 0.0)) throw sqz::Error(what + " step must be > 0");
    if (hi < lo - 1e-12) throw sqz::Error(what + " max must be >= min");
    return static_cast<long>(std::floor((hi - lo) / step + 1e-9));
}

int run_prop1(double j_min, double j_max, double j_step, double eta_min, double eta_max,
              double eta_step, const std::string& output, bool check) {
    const long nj = grid_count(j_min, j_max, j_step, "--j");
    const long ne = grid_count(eta_min, eta_max, eta_step, "--eta");
    std::string csv = "# squeeze prop1 j-min=" + fmt12(j_min) + " j-max=" + fmt12(j_max) +
                      " j-step=" + fmt12(j_step) + " eta-min=" + fmt12(eta_min) +
                      " eta-max=" + fmt12(eta_max) + " eta-step=" + fmt12(eta_step) + "\n";
    csv += "j,eta,parity,xi,xi_tilde,F1,F2\n";
    Checker ck;
    for (long a = 0; a <= nj; ++a) {
        const double j = j_min + a * j_step;
        for (long b = 0; b <= ne; ++b) {
            const double eta = eta_min + b * eta_step;
            for (const auto parity : {CatParity::Even, CatParity::Odd}) {
                const sqz::SpinCoherentParam param{j, Complex(eta, 0.0)};
                const double xi_tilde = sqz::xi_tilde_linear(param, parity);
                const double xi = 1.0 + xi_tilde / j;
                const auto fm = sqz::factorial_moments_cat(param, parity);
                const char* tag = parity == CatParity::Even ? "+" : "-";
                csv += fmt12(j) + "," + fmt12(eta) + "," + tag + "," + fmt12(xi) + "," +
                       fmt12(xi_tilde) + "," + fmt12(fm.f1) + "," + fmt12(fm.f2) + "\n";
                if (!check) continue;
                const std::string at = "j=" + fmt12(j) + " eta=" + fmt12(eta) + " " + tag;
                // xi - 1 = xi_tilde / j, so the strict inequalities are tested on
                // xi_tilde: near the spin-coherent limit |xi - 1| drops below the
                // resolution of 1.0 + x while the sign of xi_tilde stays exact.
                if (j >= 1.0) {
                    if (parity == CatParity::Even)
                        ck.expect(xi_tilde < 0.0, "even xi_tilde < 0 at " + at);
                    else
                        ck.expect(xi_tilde > 0.0, "odd xi_tilde > 0 at " + at);
                }
                const auto st = sqz::spin_cat_state(param, parity);
                const auto eo = sqz::spin_squeezing_evenodd(st);
                ck.expect(std::abs(xi_tilde - eo.xi_tilde) <= 1e-9,
                          "closed xi_tilde matches state sums at " + at);
                double f1 = 0.0, f2 = 0.0;
                const sqz::Vector& c = st.amps();
                for (long n = 0; n < c.size(); ++n) {
                    const double p = std::norm(c[n]);
                    f1 += p * n;
                    f2 += p * n * (n - 1.0);
                }
                ck.expect(std::abs(fm.f1 - f1) <= 1e-10, "closed F1 matches sum at " + at);
                ck.expect(std::abs(fm.f2 - f2) <= 1e-10, "closed F2 matches sum at " + at);
            }
        }
    }
    write_output(output, csv);
    return check ? ck.finish("prop1") : 0;
}

// ---------------------------------------------------------------------- limit

int run_limit(double alpha2, const std::string& j_csv, const std::string& parity_str,
              const std::string& output, bool check) {
    std::vector<double> j_list;
    for (const auto& tok : split(j_csv, ',')) j_list.push_back(parse_double(tok, "--j"));
    const CatParity parity = parse_parity(parity_str, "--parity");
    const auto points = sqz::contraction_limit_scan(alpha2, j_list, parity);
    std::string csv = "# squeeze limit alpha2=" + fmt12(alpha2) + " j=" + j_csv +
                      " parity=" + parity_str + "\n";
    csv += "j,eta,xi,zeta_target,gap,mean_excitation_fraction\n";
    for (const auto& pt : points)
        csv += fmt12(pt.j) + "," + fmt12(pt.eta_abs) + "," + fmt12(pt.xi) + "," +
               fmt12(pt.zeta_target) + "," + fmt12(pt.gap) + "," +
               fmt12(pt.mean_excitation_fraction) + "\n";
    write_output(output, csv);
    if (!check) return 0;
    Checker ck;
    for (std::size_t i = 1; i < points.size(); ++i) {
        const std::string at = "j " + fmt12(points[i - 1].j) + " -> " + fmt12(points[i].j);
        if (points[i].j > points[i - 1].j) {
            ck.expect(points[i].gap < points[i - 1].gap, "gap decreases, " + at);
            ck.expect(points[i].mean_excitation_fraction < points[i - 1].mean_excitation_fraction,
                      "excitation fraction decreases, " + at);
        }
    }
    return ck.finish("limit");
}

// ---------------------------------------------------------------------- dicke

int run_dicke(int atoms, double alpha0, double lambda, const std::string& tau_str, int n_max,
              bool full_matrix, const std::string& output, bool check) {
    sqz::DickeConfig config;
    config.n_atoms = atoms;
    config.alpha0 = alpha0;
    config.lambda = lambda;
    config.tau_grid = parse_range(tau_str, "--tau");
    config.n_max = n_max;
    config.use_blocks = !full_matrix;
    const auto run = sqz::evolve(config);

    std::string csv = "# squeeze dicke atoms=" + std::to_string(atoms) +
                      " alpha0=" + fmt12(alpha0) + " lambda=" + fmt12(lambda) + " tau=" + tau_str +
                      " n-max=" + std::to_string(run.config.n_max) +
                      " blocks=" + (config.use_blocks ? "1" : "0") + "\n";
    csv += "tau,zeta_field,xi_atoms,xi_prime_atoms,parity,total_excitation,norm\n";
    for (const auto& r : run.rows)
        csv += fmt12(r.tau) + "," + fmt12(r.zeta_field) + "," + fmt12(r.xi_atoms) + "," +
               fmt12(r.xi_prime_atoms) + "," + fmt12(r.parity) + "," +
               fmt12(r.total_excitation) + "," + fmt12(r.norm) + "\n";
    write_output(output, csv);

    if (!check) return 0;
    Checker ck;
    const double total0 = run.rows.front().total_excitation;
    for (const auto& r : run.rows) {
        const std::string at = "tau=" + fmt12(r.tau);
        ck.expect(std::abs(r.norm - 1.0) <= 1e-9, "norm conserved at " + at);
        ck.expect(std::abs(r.parity - 1.0) <= 1e-9, "parity +1 at " + at);
        ck.expect(std::abs(r.total_excitation - total0) <= 1e-9, "excitation conserved at " + at);
        ck.expect(r.abs_a <= 1e-10, "<a> vanishes at " + at);
        ck.expect(r.abs_s_minus <= 1e-10, "<S_-> vanishes at " + at);
        if (atoms == 1) ck.expect(std::abs(r.xi_atoms - 1.0) <= 1e-9, "single atom xi=1 at " + at);
    }
    if (run.rows.front().tau == 0.0) {
        const double zeta0 = sqz::zeta_cat_closed(std::norm(config.alpha0), CatParity::Even);
        ck.expect(std::abs(run.rows.front().zeta_field - zeta0) <= 1e-9,
                  "zeta(0) equals the closed-form cat value");
        ck.expect(std::abs(run.rows.front().xi_atoms - 1.0) <= 1e-12, "xi(0) = 1");
    }
    return ck.finish("dicke");
}

// ---------------------------------------------------------------------- qfunc

sqz::GridSpec parse_grid(const std::string& s) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw sqz::Error("--grid must look like lo:hi:points");
    const double lo = parse_double(parts[0], "--grid");
    const double hi = parse_double(parts[1], "--grid");
    const long points = parse_long(parts[2], "--grid");
    if (points < 2 || points > 4096) throw sqz::Error("--grid points must be in [2, 4096]");
    if (!(hi > lo)) throw sqz::Error("--grid hi must exceed lo");
    return sqz::GridSpec::square(lo, hi, static_cast<int>(points));
}

int run_qfunc(int atoms, double alpha0, const std::string& tau_str, const std::string& plane,
              std::string grid_str, int n_max, const std::string& output, bool check) {
    if (plane != "field" && plane != "atoms")
        throw sqz::Error("--plane must be 'field' or 'atoms'");
    const bool field_plane = plane == "field";
    if (grid_str.empty()) grid_str = field_plane ? "-3:3:121" : "-1:1:101";
    const sqz::GridSpec spec = parse_grid(grid_str);
    const std::vector<double> taus = parse_tau_list(tau_str);

    sqz::DickeConfig config;
    config.n_atoms = atoms;
    config.alpha0 = alpha0;
    config.tau_grid = taus;
    config.n_max = n_max;
    const sqz::DickeEvolver ev(config);

    std::string csv = "# squeeze qfunc atoms=" + std::to_string(atoms) +
                      " alpha0=" + fmt12(alpha0) + " tau=" + tau_str + " plane=" + plane +
                      " grid=" + grid_str + " n-max=" + std::to_string(ev.config().n_max) + "\n";
    csv += "# plane=" + plane + "\n";
    csv += "tau,re,im,value\n";
    Checker ck;
    for (const double tau : taus) {
        const auto state = ev.state_at(tau);
        const auto grid = field_plane ? sqz::field_q(state, spec, tau)
                                      : sqz::atom_husimi(state, spec, tau);
        const int rows = static_cast<int>(grid.im_axis.size());
        const int cols = static_cast<int>(grid.re_axis.size());
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                csv += fmt12(tau) + "," + fmt12(grid.re_axis[c]) + "," + fmt12(grid.im_axis[r]) +
                       "," + fmt12(grid.values(r, c)) + "\n";
        if (!check) continue;
        const std::string at = "tau=" + fmt12(tau);
        ck.expect(grid.values.minCoeff() >= -1e-12, "positivity at " + at);
        if (std::abs(spec.re_min + spec.re_max) <= 1e-12 &&
            std::abs(spec.im_min + spec.im_max) <= 1e-12) {
            double asym = 0.0;
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < cols; ++c)
                    asym = std::max(asym, std::abs(grid.values(r, c) -
                                                   grid.values(rows - 1 - r, cols - 1 - c)));
            ck.expect(asym <= 1e-9, "parity symmetry at " + at);
        }
        if (field_plane && spec.re_max - spec.re_min >= 6.0 && spec.im_max - spec.im_min >= 6.0) {
            const double da = (grid.re_axis[1] - grid.re_axis[0]) *
                              (grid.im_axis[1] - grid.im_axis[0]);
            const double integral = grid.values.sum() * da / kPi;
            ck.expect(std::abs(integral - 1.0) <= 0.02, "normalization at " + at);
        }
    }
    write_output(output, csv);
    return check ? ck.finish("qfunc") : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Quadrature and spin squeezing calculations on exact state vectors.\n"
        "Set SQUEEZE_THREADS to cap internal parallelism."};
    app.require_subcommand(1);
    app.set_config("--config");

    std::string state_spec, output = "-";
    int n_max = -1;
    bool check = false;
    unsigned long long seed = 12345;

    auto* eval = app.add_subcommand("squeeze-eval", "Squeezing report for one state (JSON)");
    eval->add_option("--state", state_spec,
                     "fock:n | coherent:a | cat:a:+ | cat:a:- | dicke:j:n | scs:j:eta | "
                     "spincat:j:eta:+ | spincat:j:eta:-")
        ->required();
    eval->add_option("--n-max", n_max, "Fock cutoff override for bosonic states");
    eval->add_option("--output", output, "Output path, '-' for stdout");
    eval->add_flag("--check", check, "Run the invariant suite and exit nonzero on violation");
    eval->add_option("--seed", seed, "Seed for the randomized invariance checks");

    double j_min = 1.0, j_max = 25.0, j_step = 0.5;
    double eta_min = 0.05, eta_max = 0.95, eta_step = 0.05;
    auto* prop1 = app.add_subcommand(
        "prop1", "Spin-cat squeezing scan over (j, eta) for both parities (CSV)");
    prop1->add_option("--j-min", j_min);
    prop1->add_option("--j-max", j_max);
    prop1->add_option("--j-step", j_step);
    prop1->add_option("--eta-min", eta_min);
    prop1->add_option("--eta-max", eta_max);
    prop1->add_option("--eta-step", eta_step);
    prop1->add_option("--output", output, "Output path, '-' for stdout");
    prop1->add_flag("--check", check, "Verify signs and closed forms on every row");

    double alpha2 = 0.6392;
    std::string j_csv = "5,10,20,50,100,200", parity_str = "+";
    auto* limit = app.add_subcommand(
        "limit", "Spin-cat sequence at fixed 2j|eta|^2 = |alpha|^2 against the cat value (CSV)");
    limit->add_option("--alpha2", alpha2, "|alpha|^2 held fixed along the sequence");
    limit->add_option("--j", j_csv, "Comma-separated j list");
    limit->add_option("--parity", parity_str, "+ or -");
    limit->add_option("--output", output, "Output path, '-' for stdout");
    limit->add_flag("--check", check, "Verify the gap shrinks along the sequence");

    int atoms = 10;
    double alpha0 = 0.7995, lambda = 1.0;
    std::string tau_str = "0:3.141592653589793:200";
    bool full_matrix = false;
    auto* dicke = app.add_subcommand(
        "dicke", "Evolve the even cat through the resonant Dicke interaction (CSV)");
    dicke->add_option("--atoms", atoms, "Number of two-level atoms N (j = N/2)");
    dicke->add_option("--alpha0", alpha0, "Initial cat amplitude");
    dicke->add_option("--lambda", lambda, "Coupling; rows are reported in tau = lambda t");
    dicke->add_option("--tau", tau_str, "start:stop:steps (steps = interval count)");
    dicke->add_option("--n-max", n_max, "Photon cutoff; negative selects the rule value + N");
    dicke->add_flag("--full-matrix", full_matrix,
                    "Diagonalize the full Hamiltonian instead of excitation blocks");
    dicke->add_option("--output", output, "Output path, '-' for stdout");
    dicke->add_flag("--check", check, "Verify conservation laws on every row");

    std::string tau_list = "0", plane = "field", grid_str;
    auto* qfunc = app.add_subcommand(
        "qfunc", "Q-function grids of the evolved field or atoms (CSV)");
    qfunc->add_option("--atoms", atoms, "Number of two-level atoms N");
    qfunc->add_option("--alpha0", alpha0, "Initial cat amplitude");
    qfunc->add_option("--tau", tau_list, "Comma list or start:stop:steps");
    qfunc->add_option("--plane", plane, "field (Q(alpha)) or atoms (Husimi Q(eta))");
    qfunc->add_option("--grid", grid_str,
                      "lo:hi:points square grid; defaults -3:3:121 (field), -1:1:101 (atoms)");
    qfunc->add_option("--n-max", n_max, "Photon cutoff; negative selects the rule value + N");
    qfunc->add_option("--output", output, "Output path, '-' for stdout");
    qfunc->add_flag("--check", check, "Verify positivity, symmetry, and normalization");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return run_eval(state_spec, n_max, output, check, seed);
        if (prop1->parsed())
            return run_prop1(j_min, j_max, j_step, eta_min, eta_max, eta_step, output, check);
        if (limit->parsed()) return run_limit(alpha2, j_csv, parity_str, output, check);
        if (dicke->parsed())
            return run_dicke(atoms, alpha0, lambda, tau_str, n_max, full_matrix, output, check);
        if (qfunc->parsed())
            return run_qfunc(atoms, alpha0, tau_list, plane, grid_str, n_max, output, check);
    } catch (const sqz::TruncationTooSmall& e) {
        std::fprintf(stderr, "truncation error: %s (leak %.3e)\n", e.what(), e.leak);
        return 3;
    } catch (const sqz::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
