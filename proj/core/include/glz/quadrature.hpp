// Semi-analytic norm evaluation for weighted L^q functionals on (0,1).
// Integrands are split into panels carrying an exact log-power weight
// s^a l^b ll^c lll^d (rational exponents) times a bounded smooth factor.
// Panels touching 0 are decided analytically (exact exponent cascade) and
// integrated after the substitution t = log(1/s), recursing one log tier per
// exactly-critical exponent; interior panels use adaptive Gauss-Kronrod in
// log coordinates; essential suprema are sampled on log-uniform grids and
// polished.
#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "glz/logpower.hpp"
#include "glz/rational.hpp"
#include "glz/step_function.hpp"

namespace glz {

struct QuadratureConfig {
    double rel_tol = 1e-8;
    int max_depth = 60;
    double divergence_threshold = 1e6;
    std::array<double, 3> inner_cutoffs{1e-4, 1e-8, 1e-12};
    int sup_grid_points_per_decade = 64;
};

enum class NormStatus { Finite, DivergenceDetected };

struct NormResult {
    NormStatus status = NormStatus::Finite;
    double value = 0.0;
    double rel_tol_achieved = 0.0;
    // Norm readings with the inner boundary clipped at the configured
    // cutoffs (reporting protocol; the divergence verdict itself is exact).
    std::array<double, 3> cutoff_values{0.0, 0.0, 0.0};

    std::string to_json() const;
};

// Exact weight s^a l^b ll^c lll^d.
struct PowerLogWeight {
    Rational a{0}, b{0}, c{0}, d{0};
    double eval(double s) const;
};

struct Panel {
    double lo = 0.0;
    double hi = 1.0;
    PowerLogWeight weight;
    // Optional bounded positive factor; must tend to factor_limit0 at 0+ when
    // the panel touches 0.
    std::function<double(double)> factor;
    double factor_limit0 = 1.0;
};

// || F ||_{L^rho(panels)} where F = weight * factor on each panel. rho is the
// integration exponent (q' of the kernel lemmas); rho = inf takes the sup.
NormResult panel_lq_norm(const std::vector<Panel>& panels, const ExtendedRational& rho,
                         const QuadratureConfig& cfg);

// || w * f ||_{L^q(lo,hi)} for a step function f.
NormResult weighted_lq_norm(const StepFunction& f, const PowerLogWeight& w,
                            const ExtendedRational& q, double lo, double hi,
                            const QuadratureConfig& cfg);

// || Psi_{lambda; q, alpha, beta} lll^{-gamma} ||_{L^{q'}(lo,hi)}.
NormResult psi_norm_numeric(const PsiParams& p, double lo, double hi,
                            const QuadratureConfig& cfg);

}  // namespace glz
