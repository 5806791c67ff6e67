// Symbolic algebra of log-power asymptotic forms r^lambda l^e1 ll^e2 lll^e3,
// where l, ll, lll are the tiered logarithms l(s) = 1 + |log s|,
// ll(s) = 1 + log l(s), lll(s) = 1 + log ll(s). These forms are the germs at
// r -> 0+ of every gauge produced by the embedding tables, and the exact
// rational exponents make equivalence and domination decidable.
#pragma once

#include <array>
#include <string>

#include "glz/rational.hpp"

namespace glz {

// Tiered logarithm chain evaluated at s in (0,1]: returns {l, ll, lll}.
std::array<double, 3> ell_chain(double s);

struct LogPowerForm {
    bool divergent = false;
    Rational lambda{0};
    Rational e1{0};
    Rational e2{0};
    Rational e3{0};

    static LogPowerForm make(Rational lam, Rational a = Rational(0),
                             Rational b = Rational(0), Rational c = Rational(0)) {
        return LogPowerForm{false, lam, a, b, c};
    }
    static LogPowerForm divergent_form() { return LogPowerForm{true}; }
    static LogPowerForm one() { return make(Rational(0)); }

    bool operator==(const LogPowerForm&) const = default;

    // Pointwise product of forms; divergence is absorbing.
    friend LogPowerForm operator*(const LogPowerForm& a, const LogPowerForm& b) {
        if (a.divergent || b.divergent) return divergent_form();
        return make(a.lambda + b.lambda, a.e1 + b.e1, a.e2 + b.e2, a.e3 + b.e3);
    }

    std::string str() const;
    std::string to_json() const;
    static LogPowerForm from_json(const std::string& text);
};

enum class FormOrder { StrictlySmaller, Equivalent, StrictlyLarger };
enum class ZeroLimit { TendsToZero, BoundedNonzero, TendsToInfinity };

// Value of the form at r in (0,1). Throws on divergent forms.
double lpf_eval(const LogPowerForm& form, double r);

// Total order by decay as r -> 0+: lambda descending dominates, then the log
// exponents ascending. StrictlySmaller means a/b -> 0.
FormOrder lpf_compare(const LogPowerForm& a, const LogPowerForm& b);

ZeroLimit lpf_limit_zero(const LogPowerForm& form);

// Germ of the sum a + b (equivalently max); divergence is absorbing.
LogPowerForm lpf_dominant(const LogPowerForm& a, const LogPowerForm& b);

// Germ of form(r^k) as a germ in r: lambda scales by k, the log exponents
// survive unchanged because l(r^k) ~ k l(r) up to bounded factors.
LogPowerForm power_substitute(const LogPowerForm& form, int k);

// Kernel parameters for Psi_{lambda; q, alpha, beta}(s) =
// s^{lambda - 1/q'} l^{-alpha}(s) ll^{-beta}(s) [lll^{-gamma}(s)], whose
// L^{q'} norms over head (0,r) and tail (r,1-r) intervals have tabulated
// asymptotic classes.
struct PsiParams {
    Rational lambda{0};
    ExtendedRational q{2};
    Rational alpha{0};
    Rational beta{0};
    Rational gamma{0};
};

double psi_eval(const PsiParams& p, double s);

// Asymptotic class of || Psi ||_{L^{q'}(0,r)} as r -> 0+. Divergent lines are
// returned as divergent forms; each log tier integrates through an exact
// threshold cascade at 1/q', with the supremum rule taking over for q = 1.
LogPowerForm symbolic_head_norm(const PsiParams& p);

// Asymptotic class of || Psi ||_{L^{q'}(r,1-r)} as r -> 0+. Throws
// std::domain_error when the exactly critical third tier would need a
// fourth log to express.
LogPowerForm symbolic_tail_norm(const PsiParams& p);

// Dini integrability of s^{-1} * form(s) near 0: lambda > 0, or lambda = 0
// with the exponent cascade e1 < -1 | e1 = -1, e2 < -1 | e1 = e2 = -1,
// e3 < -1.
bool dini_integrable(const LogPowerForm& form);

// sigma_phi(r) = || s^{-1} phi(s) ||_{L^1(0,r)}: the modulus germ induced by
// a Campanato gauge. Divergent when the Dini condition fails.
LogPowerForm spanne_transform(const LogPowerForm& form);

// phi_psi(r) = || s^{-1} psi(s) ||_{L^1(r,1)}: the Campanato-to-Morrey gauge
// transform.
LogPowerForm campanato_to_morrey_transform(const LogPowerForm& form);

}  // namespace glz
