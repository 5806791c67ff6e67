#include "glz/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "json.hpp"

namespace glz {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

double tier_weight(double s, double a, double b, double c, double d) {
    const auto l = ell_chain(s);
    double v = std::pow(s, a);
    if (b != 0.0) v *= std::pow(l[0], b);
    if (c != 0.0) v *= std::pow(l[1], c);
    if (d != 0.0) v *= std::pow(l[2], d);
    return v;
}

// Convergence of int_0 s^A l^B ll^C lll^D ds, decided on exact exponents.
bool zero_convergent(const Rational& A, const Rational& B, const Rational& C,
                     const Rational& D) {
    const Rational m1{-1};
    if (A > m1) return true;
    if (A < m1) return false;
    if (B < m1) return true;
    if (B > m1) return false;
    if (C < m1) return true;
    if (C > m1) return false;
    return D < m1;
}

// int_{x0}^inf e^{-c x} (1+x)^{p1} (1+log(1+x))^{p2} (1+log(1+log(1+x)))^{p3} g(x) dx
// with c > 0, integrated window by window until the geometric decay makes the
// remainder negligible.
double exp_tail_integral(double x0, double c, double p1, double p2, double p3,
                         const std::function<double(double)>& g, double rel_tol,
                         int max_depth, double& err_out) {
    auto integrand = [&](double x) {
        double lg = -c * x + p1 * std::log1p(x);
        if (p2 != 0.0) lg += p2 * std::log1p(std::log1p(x));
        if (p3 != 0.0) lg += p3 * std::log1p(std::log1p(std::log1p(x)));
        double v = std::exp(lg);
        return g ? v * g(x) : v;
    };
    const double window = std::max(4.0, 8.0 / c);
    double acc = 0.0, err = 0.0;
    double xa = x0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 400; ++k) {
        double xb = xa + window;
        double e = 0.0;
        double piece = GK::integrate(integrand, xa, xb, max_depth, rel_tol, &e);
        acc += piece;
        err += e;
        if (k >= 1 && std::abs(piece) <= 0.25 * rel_tol * std::abs(acc)) {
            double ratio = prev > 0.0 ? std::min(0.9, std::abs(piece) / prev) : 0.5;
            err += std::abs(piece) * ratio / (1.0 - ratio);
            break;
        }
        prev = std::abs(piece) > 0.0 ? std::abs(piece) : prev;
        xa = xb;
    }
    err_out = err;
    return acc;
}

// int_0^{x1} s^A l^B ll^C lll^D g(log(1/s)) ds after t = log(1/s), recursing
// through y = log(1+t) each time the leading exponent is exactly critical.
double zero_panel_integral(double x1, const Rational& A, const Rational& B,
                           const Rational& C, const Rational& D,
                           const std::function<double(double)>& g_t, double rel_tol,
                           int max_depth, double& err_out) {
    const Rational m1{-1};
    const double t0 = -std::log(x1);
    if (A > m1) {
        double c = (A - m1).to_double();
        return exp_tail_integral(t0, c, B.to_double(), C.to_double(), D.to_double(), g_t,
                                 rel_tol, max_depth, err_out);
    }
    // A == -1; tier down once: t = e^y - 1.
    auto g_y = [&](double y) { return g_t ? g_t(std::expm1(y)) : 1.0; };
    const double y0 = std::log1p(t0);
    if (B < m1) {
        double c = (m1 - B).to_double();
        return exp_tail_integral(y0, c, C.to_double(), D.to_double(), 0.0, g_y, rel_tol,
                                 max_depth, err_out);
    }
    // B == -1; second tier: y = e^z - 1.
    auto g_z = [&](double z) { return g_y(std::expm1(z)); };
    const double z0 = std::log1p(y0);
    if (C < m1) {
        double c = (m1 - C).to_double();
        return exp_tail_integral(z0, c, D.to_double(), 0.0, 0.0, g_z, rel_tol, max_depth,
                                 err_out);
    }
    // C == -1; third tier.
    auto g_w = [&](double w) { return g_z(std::expm1(w)); };
    const double w0 = std::log1p(z0);
    double c = (m1 - D).to_double();
    return exp_tail_integral(w0, c, 0.0, 0.0, 0.0, g_w, rel_tol, max_depth, err_out);
}

double eval_panel(const Panel& p, double s) {
    double v = p.weight.eval(s);
    if (p.factor) v *= p.factor(s);
    return v;
}

double interior_integral(const Panel& p, double x0, double x1, double rho,
                         double rel_tol, int max_depth, double& err) {
    auto f = [&](double t) {
        double s = std::exp(t);
        return std::pow(eval_panel(p, s), rho) * s;
    };
    return GK::integrate(f, std::log(x0), std::log(x1), max_depth, rel_tol, &err);
}

struct Accum {
    double total = 0.0;
    double err = 0.0;
    std::array<double, 3> clipped{0.0, 0.0, 0.0};
    bool divergent = false;
};

void accumulate_integral(const Panel& p, const ExtendedRational& rho,
                         const QuadratureConfig& cfg, Accum& acc) {
    const double rho_d = rho.to_double();
    // Split at the reporting cutoffs so no segment straddles one.
    std::vector<double> cuts;
    cuts.push_back(p.lo);
    for (double c : cfg.inner_cutoffs)
        if (c > p.lo && c < p.hi) cuts.push_back(c);
    cuts.push_back(p.hi);
    std::sort(cuts.begin(), cuts.end());

    auto credit = [&](double x0, double piece) {
        acc.total += piece;
        for (std::size_t k = 0; k < cfg.inner_cutoffs.size(); ++k)
            if (x0 >= cfg.inner_cutoffs[k] - 1e-30) acc.clipped[k] += piece;
    };

    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double x0 = cuts[i], x1 = cuts[i + 1];
        if (x0 > 0.0) {
            double e = 0.0;
            double piece = interior_integral(p, x0, x1, rho_d, cfg.rel_tol, cfg.max_depth, e);
            acc.err += e;
            credit(x0, piece);
            continue;
        }
        // Panel piece touching 0: exact verdict first.
        Rational A = p.weight.a * rho, B = p.weight.b * rho, C = p.weight.c * rho,
                 D = p.weight.d * rho;
        if (!zero_convergent(A, B, C, D)) {
            acc.divergent = true;
            continue;
        }
        auto g_t = [&](double t) {
            if (!p.factor) return 1.0;
            double base = (t > 700.0) ? p.factor_limit0 : p.factor(std::exp(-t));
            return std::pow(base, rho_d);
        };
        double e = 0.0;
        double piece = zero_panel_integral(x1, A, B, C, D, g_t, cfg.rel_tol,
                                           cfg.max_depth, e);
        acc.err += e;
        acc.total += piece;  // below every cutoff: contributes to total only
    }
}

void accumulate_sup(const Panel& p, const QuadratureConfig& cfg, Accum& acc) {
    double lo_eff = p.lo;
    if (p.lo == 0.0) {
        LogPowerForm germ = LogPowerForm::make(p.weight.a, p.weight.b, p.weight.c, p.weight.d);
        if (lpf_limit_zero(germ) == ZeroLimit::TendsToInfinity && p.factor_limit0 > 0.0)
            acc.divergent = true;
        lo_eff = 1e-16;
    }
    if (lo_eff >= p.hi) return;

    std::vector<double> pts;
    double decades = std::log10(p.hi / lo_eff);
    int count = std::max(8, static_cast<int>(std::ceil(decades * cfg.sup_grid_points_per_decade)));
    for (int i = 0; i <= count; ++i)
        pts.push_back(lo_eff * std::pow(p.hi / lo_eff, static_cast<double>(i) / count));
    for (double c : cfg.inner_cutoffs)
        if (c > lo_eff && c < p.hi) pts.push_back(c);
    std::sort(pts.begin(), pts.end());

    std::vector<double> vals(pts.size());
    std::size_t best = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        vals[i] = eval_panel(p, pts[i]);
        if (vals[i] > vals[best]) best = i;
    }
    // Golden-section polish around the best bracket, in log coordinates.
    double la = std::log(pts[best > 0 ? best - 1 : best]);
    double lb = std::log(pts[best + 1 < pts.size() ? best + 1 : best]);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double refined = vals[best];
    if (lb > la) {
        double x1 = lb - phi * (lb - la), x2 = la + phi * (lb - la);
        double f1 = eval_panel(p, std::exp(x1)), f2 = eval_panel(p, std::exp(x2));
        for (int it = 0; it < 120 && lb - la > 1e-12; ++it) {
            if (f1 < f2) {
                la = x1; x1 = x2; f1 = f2;
                x2 = la + phi * (lb - la); f2 = eval_panel(p, std::exp(x2));
            } else {
                lb = x2; x2 = x1; f2 = f1;
                x1 = lb - phi * (lb - la); f1 = eval_panel(p, std::exp(x1));
            }
        }
        refined = std::max({refined, f1, f2});
    }
    acc.total = std::max(acc.total, refined);
    for (std::size_t k = 0; k < cfg.inner_cutoffs.size(); ++k) {
        double cut = cfg.inner_cutoffs[k];
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (pts[i] >= cut) acc.clipped[k] = std::max(acc.clipped[k], vals[i]);
        if (pts[best] >= cut) acc.clipped[k] = std::max(acc.clipped[k], refined);
    }
}

}  // namespace

double PowerLogWeight::eval(double s) const {
    return tier_weight(s, a.to_double(), b.to_double(), c.to_double(), d.to_double());
}

std::string NormResult::to_json() const {
    nlohmann::ordered_json j;
    j["status"] = status == NormStatus::Finite ? "finite" : "divergent";
    j["value"] = value;
    j["rel_tol_achieved"] = rel_tol_achieved;
    j["cutoff_values"] = cutoff_values;
    return j.dump();
}

NormResult panel_lq_norm(const std::vector<Panel>& panels, const ExtendedRational& rho,
                         const QuadratureConfig& cfg) {
    NormResult out;
    Accum acc;
    if (rho.is_inf()) {
        for (const auto& p : panels) accumulate_sup(p, cfg, acc);
        out.value = acc.total;
        out.cutoff_values = acc.clipped;
        out.rel_tol_achieved = 1e-9;
    } else {
        for (const auto& p : panels) accumulate_integral(p, rho, cfg, acc);
        double inv = 1.0 / rho.to_double();
        out.value = std::pow(acc.total, inv);
        for (std::size_t k = 0; k < acc.clipped.size(); ++k)
            out.cutoff_values[k] = std::pow(acc.clipped[k], inv);
        out.rel_tol_achieved =
            acc.total > 0.0 ? std::min(1.0, acc.err / acc.total) : 0.0;
    }
    if (acc.divergent) {
        out.status = NormStatus::DivergenceDetected;
        out.value = std::numeric_limits<double>::infinity();
    }
    return out;
}

NormResult weighted_lq_norm(const StepFunction& f, const PowerLogWeight& w,
                            const ExtendedRational& q, double lo, double hi,
                            const QuadratureConfig& cfg) {
    f.validate();
    if (!(lo >= 0.0 && lo < hi && hi <= 1.0))
        throw std::invalid_argument("weighted norm interval must satisfy 0 <= lo < hi <= 1");
    std::vector<Panel> panels;
    double prev = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        double a = std::max(prev, lo), b = std::min(f.breakpoints[i], hi);
        prev = f.breakpoints[i];
        if (a >= b || f.values[i] == 0.0) continue;
        Panel p;
        p.lo = a;
        p.hi = b;
        p.weight = w;
        double v = f.values[i];
        p.factor = [v](double) { return v; };
        p.factor_limit0 = v;
        panels.push_back(std::move(p));
    }
    if (panels.empty()) {
        NormResult zero;
        zero.rel_tol_achieved = 0.0;
        return zero;
    }
    return panel_lq_norm(panels, q, cfg);
}

NormResult psi_norm_numeric(const PsiParams& p, double lo, double hi,
                            const QuadratureConfig& cfg) {
    const ExtendedRational qp = p.q.conjugate();
    Panel panel;
    panel.lo = lo;
    panel.hi = hi;
    panel.weight.a = p.lambda - qp.reciprocal();
    panel.weight.b = -p.alpha;
    panel.weight.c = -p.beta;
    panel.weight.d = -p.gamma;
    return panel_lq_norm({panel}, qp, cfg);
}

}  // namespace glz
