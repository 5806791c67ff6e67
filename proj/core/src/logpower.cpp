#include "glz/logpower.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace glz {

std::array<double, 3> ell_chain(double s) {
    if (!(s > 0.0)) throw std::domain_error("ell_chain needs s > 0");
    const double l1 = 1.0 + std::fabs(std::log(s));
    const double l2 = 1.0 + std::log(l1);
    const double l3 = 1.0 + std::log(l2);
    return {l1, l2, l3};
}

double lpf_eval(const LogPowerForm& form, double r) {
    if (form.divergent) throw std::domain_error("evaluating a divergent form");
    const auto l = ell_chain(r);
    return std::pow(r, form.lambda.to_double()) * std::pow(l[0], form.e1.to_double()) *
           std::pow(l[1], form.e2.to_double()) * std::pow(l[2], form.e3.to_double());
}

FormOrder lpf_compare(const LogPowerForm& a, const LogPowerForm& b) {
    if (a.divergent || b.divergent)
        throw std::domain_error("comparing a divergent form");
    // r^lambda decays faster for larger lambda; log powers grow, so larger
    // exponents mean a larger germ.
    if (a.lambda != b.lambda)
        return a.lambda > b.lambda ? FormOrder::StrictlySmaller : FormOrder::StrictlyLarger;
    for (const auto& [ea, eb] : {std::pair{a.e1, b.e1}, {a.e2, b.e2}, {a.e3, b.e3}}) {
        if (ea != eb)
            return ea < eb ? FormOrder::StrictlySmaller : FormOrder::StrictlyLarger;
    }
    return FormOrder::Equivalent;
}

ZeroLimit lpf_limit_zero(const LogPowerForm& form) {
    if (form.divergent) throw std::domain_error("limit of a divergent form");
    if (!form.lambda.is_zero())
        return form.lambda.is_positive() ? ZeroLimit::TendsToZero : ZeroLimit::TendsToInfinity;
    for (const auto& e : {form.e1, form.e2, form.e3}) {
        if (!e.is_zero())
            return e.is_positive() ? ZeroLimit::TendsToInfinity : ZeroLimit::TendsToZero;
    }
    return ZeroLimit::BoundedNonzero;
}

LogPowerForm lpf_dominant(const LogPowerForm& a, const LogPowerForm& b) {
    if (a.divergent || b.divergent) return LogPowerForm::divergent_form();
    return lpf_compare(a, b) == FormOrder::StrictlySmaller ? b : a;
}

LogPowerForm power_substitute(const LogPowerForm& form, int k) {
    if (k < 1) throw std::invalid_argument("power_substitute expects a positive power");
    if (form.divergent) return LogPowerForm::divergent_form();
    return LogPowerForm::make(Rational(k) * form.lambda, form.e1, form.e2, form.e3);
}

double psi_eval(const PsiParams& p, double s) {
    const auto l = ell_chain(s);
    const Rational inv_qp = p.q.conjugate().reciprocal();
    return std::pow(s, (p.lambda - inv_qp).to_double()) *
           std::pow(l[0], -p.alpha.to_double()) * std::pow(l[1], -p.beta.to_double()) *
           std::pow(l[2], -p.gamma.to_double());
}

namespace {

void check_exponent(const ExtendedRational& q) {
    if (!q.is_inf() && (q < Rational(1)))
        throw std::invalid_argument("norm exponent q must lie in [1, inf]");
}

// Germ of the q'-th root of the integral over (0,r) of
// s^{-1} l^{-a q'} ll^{-b q'} lll^{-g q'} ds, with c = 1/q' in (0,1]. Each
// tier that sits strictly above the critical line integrates to the next log
// power; at or below it the head integral diverges.
LogPowerForm head_cascade(const Rational& c, const Rational& a, const Rational& b,
                          const Rational& g) {
    const Rational zero(0);
    if (a > c) return LogPowerForm::make(zero, c - a, -b, -g);
    if (a == c) {
        if (b > c) return LogPowerForm::make(zero, zero, c - b, -g);
        if (b == c && g > c) return LogPowerForm::make(zero, zero, zero, c - g);
    }
    return LogPowerForm::divergent_form();
}

// Tail counterpart over (r,1): strictly subcritical tiers grow like the next
// log power as r -> 0, supercritical ones stay bounded. The exactly critical
// third tier would need a fourth log to express.
LogPowerForm tail_cascade(const Rational& c, const Rational& a, const Rational& b,
                          const Rational& g) {
    const Rational zero(0);
    if (a < c) return LogPowerForm::make(zero, c - a, -b, -g);
    if (a == c) {
        if (b < c) return LogPowerForm::make(zero, zero, c - b, -g);
        if (b == c) {
            if (g < c) return LogPowerForm::make(zero, zero, zero, c - g);
            if (g == c) throw std::domain_error("tail integral leaves the three-log basis");
        }
    }
    return LogPowerForm::one();
}

}  // namespace

LogPowerForm symbolic_head_norm(const PsiParams& p) {
    check_exponent(p.q);
    const Rational zero(0);
    if (p.lambda > zero) {
        // The power wins over every log factor; the norm concentrates at r.
        return LogPowerForm::make(p.lambda, -p.alpha, -p.beta, -p.gamma);
    }
    if (p.lambda < zero) return LogPowerForm::divergent_form();
    if (p.q == Rational(1)) {
        // q' = inf: a supremum over (0,r) of the pure log weight.
        LogPowerForm f = LogPowerForm::make(zero, -p.alpha, -p.beta, -p.gamma);
        switch (lpf_limit_zero(f)) {
            case ZeroLimit::TendsToInfinity: return LogPowerForm::divergent_form();
            case ZeroLimit::TendsToZero: return f;
            case ZeroLimit::BoundedNonzero: break;
        }
        return LogPowerForm::one();
    }
    return head_cascade(p.q.conjugate().reciprocal(), p.alpha, p.beta, p.gamma);
}

LogPowerForm symbolic_tail_norm(const PsiParams& p) {
    check_exponent(p.q);
    const Rational zero(0);
    if (p.lambda > zero) {
        // Integrand bounded near 1 and power-integrable near 0.
        return LogPowerForm::one();
    }
    if (p.lambda < zero) return LogPowerForm::make(p.lambda, -p.alpha, -p.beta, -p.gamma);
    if (p.q == Rational(1)) {
        // q' = inf: a supremum over (r,1), attained at r when the weight grows.
        LogPowerForm f = LogPowerForm::make(zero, -p.alpha, -p.beta, -p.gamma);
        if (lpf_limit_zero(f) == ZeroLimit::TendsToInfinity) return f;
        return LogPowerForm::one();
    }
    return tail_cascade(p.q.conjugate().reciprocal(), p.alpha, p.beta, p.gamma);
}

bool dini_integrable(const LogPowerForm& form) {
    if (form.divergent) return false;
    const Rational zero(0), minus_one(-1);
    if (form.lambda > zero) return true;
    if (form.lambda < zero) return false;
    if (form.e1 < minus_one) return true;
    if (form.e1 == minus_one) {
        if (form.e2 < minus_one) return true;
        if (form.e2 == minus_one && form.e3 < minus_one) return true;
    }
    return false;
}

LogPowerForm spanne_transform(const LogPowerForm& form) {
    if (form.divergent) throw std::domain_error("spanne transform of a divergent form");
    if (!dini_integrable(form)) return LogPowerForm::divergent_form();
    return symbolic_head_norm(PsiParams{form.lambda, ExtendedRational::infinity(),
                                        -form.e1, -form.e2, -form.e3});
}

LogPowerForm campanato_to_morrey_transform(const LogPowerForm& form) {
    if (form.divergent)
        throw std::domain_error("campanato-to-morrey transform of a divergent form");
    return symbolic_tail_norm(PsiParams{form.lambda, ExtendedRational::infinity(),
                                        -form.e1, -form.e2, -form.e3});
}

std::string LogPowerForm::str() const {
    if (divergent) return "divergent";
    std::string out;
    const auto append = [&out](const char* base, const Rational& e) {
        if (e.is_zero()) return;
        if (!out.empty()) out += " ";
        out += base;
        out += "^{" + e.str() + "}";
    };
    append("r", lambda);
    append("l", e1);
    append("ll", e2);
    append("lll", e3);
    return out.empty() ? "1" : out;
}

std::string LogPowerForm::to_json() const {
    nlohmann::ordered_json j;
    j["divergent"] = divergent;
    j["lambda"] = lambda.str();
    j["e1"] = e1.str();
    j["e2"] = e2.str();
    j["e3"] = e3.str();
    return j.dump();
}

LogPowerForm LogPowerForm::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    LogPowerForm f;
    f.divergent = j.at("divergent").get<bool>();
    f.lambda = Rational::parse(j.at("lambda").get<std::string>());
    f.e1 = Rational::parse(j.at("e1").get<std::string>());
    f.e2 = Rational::parse(j.at("e2").get<std::string>());
    f.e3 = Rational::parse(j.at("e3").get<std::string>());
    return f;
}

}  // namespace glz
