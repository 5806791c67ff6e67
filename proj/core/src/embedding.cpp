#include "glz/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace glz {

namespace {

const Rational k0(0);
const Rational k1(1);

// 1/q' with the endpoint conventions 1' = inf and inf' = 1.
Rational one_over_conj(const ExtendedRational& q) { return q.conjugate().reciprocal(); }

Rational inv(const ExtendedRational& x) { return x.reciprocal(); }

struct Ctx {
    int m;
    int n;
    SpaceDescriptor X;  // canonical: Star or DoubleStar(p=1)
};

Ctx make_ctx(const EmbeddingQuery& q) {
    if (q.n < 2) throw std::invalid_argument("dimension n must be at least 2");
    if (q.m < 1) throw std::invalid_argument("order m must be at least 1");
    SpaceDescriptor canon = canonical_space(q.space);
    if (canon.kind == SpaceKind::FiveParam)
        throw std::domain_error(
            "embedding tables cover two-log source spaces only; three-log spaces arise "
            "as targets");
    return Ctx{q.m, q.n, canon};
}

// || s^{s_pow} l^{e1} ll^{e2} lll^{e3} ||_{L^rho(0,r)} as a germ in r.
LogPowerForm head_norm(const Rational& s_pow, const Rational& e1, const Rational& e2,
                       const Rational& e3, const ExtendedRational& rho) {
    PsiParams p;
    p.lambda = s_pow + inv(rho);
    p.q = rho.conjugate();
    p.alpha = -e1;
    p.beta = -e2;
    p.gamma = -e3;
    return symbolic_head_norm(p);
}

// || s^{s_pow} l^{e1} ll^{e2} lll^{e3} ||_{L^rho(r,1)} as a germ in r.
LogPowerForm tail_norm(const Rational& s_pow, const Rational& e1, const Rational& e2,
                       const Rational& e3, const ExtendedRational& rho) {
    PsiParams p;
    p.lambda = s_pow + inv(rho);
    p.q = rho.conjugate();
    p.alpha = -e1;
    p.beta = -e2;
    p.gamma = -e3;
    return symbolic_tail_norm(p);
}

// Parameters of the X'-norm functional: star-like norms weigh the function
// itself, the double-star norm weighs its level average f**.
struct AssocParams {
    bool dbl = false;
    ExtendedRational P{1};
    ExtendedRational Q{1};
    Rational A{0}, B{0}, G{0};
};

AssocParams assoc_params(const SpaceDescriptor& Xp) {
    switch (Xp.kind) {
        case SpaceKind::Star:
            return {false, Xp.p, Xp.q, Xp.alpha, Xp.beta, k0};
        case SpaceKind::FiveParam:
            return {false, Xp.p, Xp.q, Xp.alpha, Xp.beta, Xp.gamma};
        case SpaceKind::DoubleStar:
            return {true, Xp.p, Xp.q, Xp.alpha, Xp.beta, k0};
        case SpaceKind::LInf:
            return {false, ExtendedRational::infinity(), ExtendedRational::infinity(), k0,
                    k0, k0};
    }
    throw std::logic_error("unreachable space kind");
}

TargetReport space_report(SpaceDescriptor s, bool optimal, std::string line) {
    return TargetReport{std::move(s), optimal, false, std::move(line)};
}

TargetReport form_report(LogPowerForm f, bool optimal, std::string line) {
    return TargetReport{std::move(f), optimal, false, std::move(line)};
}

TargetReport none_report(std::string line) {
    return TargetReport{NoEmbedding{}, false, false, std::move(line)};
}

TargetReport bool_report(bool v, std::string line) {
    return TargetReport{v, false, false, std::move(line)};
}

// ---- rearrangement-invariant targets -------------------------------------

TargetReport ri_star(const Ctx& c) {
    const auto& X = c.X;
    const Rational qp = one_over_conj(X.q);
    const Rational pcrit(c.n, c.m);
    if (X.p < pcrit) {
        // p* = np/(n-mp), the supercritical Sobolev lift of the first index
        const Rational pstar =
            (Rational(c.n) * X.p) / (Rational(c.n) - Rational(c.m) * X.p);
        return space_report(SpaceDescriptor::star(pstar, X.q, X.alpha, X.beta), true,
                            "ri.star[1] p<n/m: L^{p*,q;alpha,beta} with p*=np/(n-mp)");
    }
    if (X.p == pcrit) {
        if (X.alpha < qp)
            return space_report(
                SpaceDescriptor::star(ExtendedRational::infinity(), X.q, X.alpha - k1,
                                      X.beta),
                true, "ri.star[2] p=n/m, alpha<1/q': L^{inf,q;alpha-1,beta}");
        if (X.alpha == qp && X.beta < qp)
            return space_report(
                SpaceDescriptor::star(ExtendedRational::infinity(), X.q,
                                      -X.q.reciprocal(), X.beta - k1),
                true, "ri.star[3] p=n/m, alpha=1/q', beta<1/q': L^{inf,q;-1/q,beta-1}");
        if (X.alpha == qp && X.beta == qp && X.q > ExtendedRational(1))
            return space_report(
                SpaceDescriptor::five(ExtendedRational::infinity(), X.q,
                                      -X.q.reciprocal(), -X.q.reciprocal(), -k1),
                true,
                "ri.star[4] p=n/m, q in (1,inf], alpha=beta=1/q': "
                "L^{inf,q;-1/q,-1/q,-1}");
        return space_report(SpaceDescriptor::linf(), true,
                            "ri.star[5] p=n/m supercritical logs: L^inf");
    }
    return space_report(SpaceDescriptor::linf(), true, "ri.star[6] p>n/m: L^inf");
}

TargetReport ri_dbl(const Ctx& c) {
    const auto& X = c.X;
    const Rational mq = -X.q.reciprocal();
    const Rational onestar(c.n, c.n - c.m);
    Rational lo_a, lo_b, lo_g;  // exponents of the proof-side lower space
    Rational up_a, up_b, up_g;  // exponents of the theorem-side target
    std::string row;
    if (X.alpha > mq) {
        lo_a = X.alpha + k1;
        lo_b = up_b = X.beta;
        up_a = X.alpha + X.q.reciprocal();
        lo_g = up_g = k0;
        row = "ri.dbl[1] alpha>-1/q";
    } else if (X.alpha == mq && X.beta > mq) {
        lo_a = up_a = k0;
        lo_b = X.beta + k1;
        up_b = X.beta + X.q.reciprocal();
        lo_g = up_g = k0;
        row = "ri.dbl[2] alpha=-1/q, beta>-1/q";
    } else {
        // q < inf, alpha = beta = -1/q
        lo_a = up_a = k0;
        lo_b = up_b = k0;
        lo_g = k1;
        up_g = X.q.reciprocal();
        row = "ri.dbl[3] q<inf, alpha=beta=-1/q";
    }
    auto build = [&](const Rational& a, const Rational& b, const Rational& g) {
        return g == k0 ? SpaceDescriptor::star(onestar, X.q, a, b)
                       : SpaceDescriptor::five(onestar, X.q, a, b, g);
    };
    if (X.q == ExtendedRational(1))
        return space_report(build(lo_a, lo_b, lo_g), true,
                            row + ", q=1: L^{1*,1;...} (1*=n/(n-m))");
    TargetReport r;
    r.payload = Bracket{build(lo_a, lo_b, lo_g), build(up_a, up_b, up_g)};
    r.optimal = false;
    r.not_glz = true;
    r.case_line = row + ", q>1: bracket around the optimal target, which leaves the scale";
    return r;
}

// ---- Hoelder moduli --------------------------------------------------------

// Rows shared by every table at its upper critical index: the moduli
// r l^{1/q'-alpha} ll^{-beta}, r ll^{1/q'-beta}, r lll^{1/q'}, then r.
TargetReport holder_upper_ladder(const SpaceDescriptor& X, const Rational& qp,
                                 const std::string& tag) {
    if (X.alpha < qp)
        return form_report(LogPowerForm::make(k1, qp - X.alpha, -X.beta), true,
                           tag + "[4] p at upper critical index, alpha<1/q': "
                                 "r l^{1/q'-alpha} ll^{-beta}");
    if (X.alpha == qp && X.beta < qp)
        return form_report(LogPowerForm::make(k1, k0, qp - X.beta), true,
                           tag + "[5] alpha=1/q', beta<1/q': r ll^{1/q'-beta}");
    if (X.q > ExtendedRational(1) && X.alpha == qp && X.beta == qp)
        return form_report(LogPowerForm::make(k1, k0, k0, qp), true,
                           tag + "[6] q>1, alpha=beta=1/q': r lll^{1/q'}");
    return form_report(LogPowerForm::make(k1), true,
                       tag + "[7] supercritical logs at upper critical index: r");
}

TargetReport holder_star(const Ctx& c) {
    const auto& X = c.X;
    const Rational qp = one_over_conj(X.q);
    if (c.m == 1) {
        const Rational pcrit(c.n, 1);
        if (X.p < pcrit)
            return none_report("holder.star.m1.none p<n: not even continuous");
        if (X.p == pcrit) {
            if (X.alpha == qp && X.beta > qp)
                return form_report(
                    LogPowerForm::make(k0, k0, qp - X.beta), true,
                    "holder.star.m1[1] p=n, alpha=1/q', beta>1/q': ll^{1/q'-beta}");
            if (X.alpha > qp)
                return form_report(
                    LogPowerForm::make(k0, qp - X.alpha, -X.beta), true,
                    "holder.star.m1[2] p=n, alpha>1/q': l^{1/q'-alpha} ll^{-beta}");
            return none_report(
                "holder.star.m1.none p=n without supercritical logs (continuity may "
                "hold, uniform continuity does not)");
        }
        if (!X.p.is_inf())
            return form_report(
                LogPowerForm::make(k1 - Rational(c.n) / X.p, -X.alpha, -X.beta), true,
                "holder.star.m1[3] n<p<inf: r^{1-n/p} l^{-alpha} ll^{-beta}");
        const Rational mq = -X.q.reciprocal();
        if (X.alpha < mq)
            return form_report(
                LogPowerForm::make(k1, mq - X.alpha, -X.beta), true,
                "holder.star.m1[4] p=inf, alpha<-1/q: r l^{-1/q-alpha} ll^{-beta}");
        if (X.alpha == mq && X.beta < mq)
            return form_report(
                LogPowerForm::make(k1, k0, mq - X.beta), true,
                "holder.star.m1[5] p=inf, alpha=-1/q, beta<-1/q: r ll^{-1/q-beta}");
        return form_report(LogPowerForm::make(k1), true,
                           "holder.star.m1[6] p=q=inf, alpha=beta=0: r");
    }
    if (c.m < c.n) {
        const Rational pc_low(c.n, c.m);
        const Rational pc_high(c.n, c.m - 1);
        if (X.p < pc_low)
            return none_report("holder.star.mid.none p<n/m: not even continuous");
        if (X.p == pc_low) {
            if (X.alpha == qp && X.beta > qp)
                return form_report(
                    LogPowerForm::make(k0, k0, qp - X.beta), true,
                    "holder.star.mid[1] p=n/m, alpha=1/q', beta>1/q': ll^{1/q'-beta}");
            if (X.alpha > qp)
                return form_report(
                    LogPowerForm::make(k0, qp - X.alpha, -X.beta), true,
                    "holder.star.mid[2] p=n/m, alpha>1/q': l^{1/q'-alpha} ll^{-beta}");
            return none_report(
                "holder.star.mid.none p=n/m without supercritical logs");
        }
        if (X.p < pc_high)
            return form_report(
                LogPowerForm::make(Rational(c.m) - Rational(c.n) / X.p, -X.alpha,
                                   -X.beta),
                true, "holder.star.mid[3] n/m<p<n/(m-1): r^{m-n/p} l^{-alpha} ll^{-beta}");
        if (X.p == pc_high) return holder_upper_ladder(X, qp, "holder.star.mid");
        return form_report(LogPowerForm::make(k1), true,
                           "holder.star.mid[8] p>n/(m-1): r");
    }
    // m = n: every valid space is continuous; the single failure is the
    // mean-oscillation endpoint p=q=1, alpha=beta=0.
    const Rational pc(c.n, c.n - 1);
    if (X.p < pc) {
        if (X.p == k1 && X.alpha == k0 && X.beta == k0)
            return none_report(
                "holder.star.mn.none p=q=1, alpha=beta=0: oscillation stays bounded "
                "away from zero");
        return form_report(
            LogPowerForm::make(Rational(c.n) - Rational(c.n) / X.p, -X.alpha, -X.beta),
            true, "holder.star.mn[1] p<n/(n-1): r^{n-n/p} l^{-alpha} ll^{-beta}");
    }
    if (X.p == pc) return holder_upper_ladder(X, qp, "holder.star.mn");
    return form_report(LogPowerForm::make(k1), true, "holder.star.mn[8] p>n/(n-1): r");
}

TargetReport holder_dbl(const Ctx& c) {
    const auto& X = c.X;
    if (c.m < c.n)
        return none_report("holder.dbl.none m<n: these spaces never reach continuity");
    const Rational mq = -X.q.reciprocal();
    if (X.alpha > mq)
        return form_report(LogPowerForm::make(k0, mq - X.alpha, -X.beta), true,
                           "holder.dbl[1] m=n, alpha>-1/q: l^{-1/q-alpha} ll^{-beta}");
    if (X.alpha == mq && X.beta > mq)
        return form_report(LogPowerForm::make(k0, k0, mq - X.beta), true,
                           "holder.dbl[2] m=n, alpha=-1/q, beta>-1/q: ll^{-1/q-beta}");
    return form_report(LogPowerForm::make(k0, k0, k0, mq), true,
                       "holder.dbl[3] m=n, q<inf, alpha=beta=-1/q: lll^{-1/q}");
}

// ---- Morrey gauges ---------------------------------------------------------

TargetReport morrey_star(const Ctx& c) {
    const auto& X = c.X;
    const Rational qp = one_over_conj(X.q);
    const Rational pcrit(c.n, c.m);
    if (X.p < pcrit)
        return form_report(
            LogPowerForm::make(Rational(c.m) - Rational(c.n) / X.p, -X.alpha, -X.beta),
            true, "morrey.star[1] p<n/m: r^{m-n/p} l^{-alpha} ll^{-beta}");
    if (X.p == pcrit) {
        if (X.alpha < qp)
            return form_report(LogPowerForm::make(k0, qp - X.alpha, -X.beta), true,
                               "morrey.star[2] p=n/m, alpha<1/q': l^{1/q'-alpha} ll^{-beta}");
        if (X.alpha == qp && X.beta < qp)
            return form_report(LogPowerForm::make(k0, k0, qp - X.beta), true,
                               "morrey.star[3] p=n/m, alpha=1/q', beta<1/q': ll^{1/q'-beta}");
        if (X.q > ExtendedRational(1) && X.alpha == qp && X.beta == qp)
            return form_report(LogPowerForm::make(k0, k0, k0, qp), true,
                               "morrey.star[4] p=n/m, q>1, alpha=beta=1/q': lll^{1/q'}");
        return form_report(LogPowerForm::one(), true,
                           "morrey.star[5] p=n/m supercritical logs: 1");
    }
    return form_report(LogPowerForm::one(), true, "morrey.star[6] p>n/m: 1");
}

TargetReport morrey_dbl(const Ctx& c) {
    const auto& X = c.X;
    const Rational mq = -X.q.reciprocal();
    const Rational mn(c.m - c.n, 1);
    if (X.alpha > mq)
        return form_report(LogPowerForm::make(mn, mq - X.alpha, -X.beta), true,
                           "morrey.dbl[1] alpha>-1/q: r^{m-n} l^{-1/q-alpha} ll^{-beta}");
    if (X.alpha == mq && X.beta > mq)
        return form_report(LogPowerForm::make(mn, k0, mq - X.beta), true,
                           "morrey.dbl[2] alpha=-1/q, beta>-1/q: r^{m-n} ll^{-1/q-beta}");
    return form_report(LogPowerForm::make(mn, k0, k0, mq), true,
                       "morrey.dbl[3] q<inf, alpha=beta=-1/q: r^{m-n} lll^{-1/q}");
}

// ---- Campanato gauges ------------------------------------------------------

TargetReport campanato_star(const Ctx& c, const TargetReport& modulus) {
    const auto& X = c.X;
    if (c.m < c.n) {
        const Rational pcrit(c.n, c.m);
        if (X.p <= pcrit)
            return form_report(
                LogPowerForm::make(Rational(c.m) - Rational(c.n) / X.p, -X.alpha,
                                   -X.beta),
                true, "campanato.star.sub[1] p<=n/m: r^{m-n/p} l^{-alpha} ll^{-beta}");
        // p > n/m: the table reuses sigma-hat, which always exists here
        return form_report(modulus.form(), true,
                           "campanato.star.sub[2] p>n/m: sigma-hat reused (" +
                               modulus.case_line + ")");
    }
    if (X.p == k1 && X.alpha == k0 && X.beta == k0)
        return form_report(LogPowerForm::one(), true,
                           "campanato.star.mn[1] p=q=1, alpha=beta=0: 1 (bounded mean "
                           "oscillation)");
    return form_report(modulus.form(), true,
                       "campanato.star.mn[2] otherwise: sigma-hat reused (" +
                           modulus.case_line + ")");
}

TargetReport campanato_dbl(const Ctx& c) {
    const auto& X = c.X;
    const Rational mq = -X.q.reciprocal();
    const Rational mn(c.m - c.n, 1);
    const std::string tag = c.m == 1 ? "campanato.dbl.m1" : "campanato.dbl.m2n";
    if (X.alpha > mq)
        return form_report(LogPowerForm::make(mn, mq - X.alpha, -X.beta), true,
                           tag + "[1] alpha>-1/q: r^{m-n} l^{-1/q-alpha} ll^{-beta}");
    if (X.alpha == mq && X.beta > mq)
        return form_report(LogPowerForm::make(mn, k0, mq - X.beta), true,
                           tag + "[2] alpha=-1/q, beta>-1/q: r^{m-n} ll^{-1/q-beta}");
    return form_report(LogPowerForm::make(mn, k0, k0, mq), true,
                       tag + "[3] q<inf, alpha=beta=-1/q: r^{m-n} lll^{-1/q}");
}

}  // namespace

// ---- public table lookups --------------------------------------------------

TargetReport ri_optimal_target(const EmbeddingQuery& query) {
    const Ctx c = make_ctx(query);
    if (c.m >= c.n)
        return space_report(SpaceDescriptor::linf(), true,
                            "ri.collapse m>=n: L^inf (the smallest "
                            "rearrangement-invariant space)");
    return c.X.kind == SpaceKind::Star ? ri_star(c) : ri_dbl(c);
}

TargetReport c0_embeds(const EmbeddingQuery& query) {
    const Ctx c = make_ctx(query);
    if (c.m >= c.n) return bool_report(true, "c0.collapse m>=n: true");
    if (c.X.kind == SpaceKind::DoubleStar)
        return bool_report(false, "c0.dbl never bounded-continuous: false");
    const auto& X = c.X;
    const Rational qp = one_over_conj(X.q);
    const Rational pcrit(c.n, c.m);
    if (X.p == pcrit && X.q == ExtendedRational(1) && X.alpha == k0 && X.beta == k0)
        return bool_report(true, "c0.star[1] p=n/m, q=1, alpha=beta=0: true");
    if (X.p == pcrit && X.alpha == qp && X.beta > qp)
        return bool_report(true, "c0.star[2] p=n/m, alpha=1/q', beta>1/q': true");
    if (X.p == pcrit && X.alpha > qp)
        return bool_report(true, "c0.star[3] p=n/m, alpha>1/q': true");
    if (X.p > pcrit) return bool_report(true, "c0.star[4] p>n/m: true");
    return bool_report(false, "c0.star.none outside the four alternatives: false");
}

TargetReport optimal_modulus(const EmbeddingQuery& query) {
    const Ctx c = make_ctx(query);
    if (c.m > c.n)
        return form_report(LogPowerForm::make(k1), true,
                           "holder.lipschitz m>n: r");
    return c.X.kind == SpaceKind::Star ? holder_star(c) : holder_dbl(c);
}

TargetReport optimal_morrey(const EmbeddingQuery& query) {
    const Ctx c = make_ctx(query);
    if (c.m >= c.n)
        return form_report(LogPowerForm::one(), true, "morrey.collapse m>=n: 1");
    return c.X.kind == SpaceKind::Star ? morrey_star(c) : morrey_dbl(c);
}

TargetReport optimal_campanato(const EmbeddingQuery& query) {
    const Ctx c = make_ctx(query);
    if (c.m > c.n)
        return form_report(LogPowerForm::make(k1), true, "campanato.collapse m>n: r");
    if (c.X.kind == SpaceKind::DoubleStar) return campanato_dbl(c);
    return campanato_star(c, optimal_modulus(query));
}

// ---- proof pipeline ----------------------------------------------------------

LogPowerForm theta_symbolic(const EmbeddingQuery& query) {
    const Ctx c = make_ctx(query);
    const AssocParams ap = assoc_params(associate_space(c.X));
    const Rational mn(c.m, c.n);
    if (!ap.dbl) {
        // the integrand s^{-1+m/n} chi_(0,u) is decreasing, so the star-type
        // norm is a plain head norm at u
        const LogPowerForm head =
            head_norm(mn - k1 + inv(ap.P) - inv(ap.Q), ap.A, ap.B, ap.G, ap.Q);
        return power_substitute(head, c.n);
    }
    // double-star norm: the level average of the integrand is
    // (n/m) s^{-1+m/n} below u and (n/m) u^{m/n} / s above it
    const LogPowerForm below = head_norm(mn - inv(ap.Q), ap.A, ap.B, k0, ap.Q);
    const LogPowerForm above =
        LogPowerForm::make(mn) * tail_norm(-inv(ap.Q), ap.A, ap.B, k0, ap.Q);
    return power_substitute(lpf_dominant(below, above), c.n);
}

LogPowerForm rho_symbolic(const EmbeddingQuery& query) {
    const Ctx c = make_ctx(query);
    const AssocParams ap = assoc_params(associate_space(c.X));
    const Rational cc = Rational(c.m - 1, c.n) - k1;
    if (!ap.dbl) {
        // the rearrangement of s^{c} chi_(u,1) is (s+u)^{c} chi_(0,1-u):
        // frozen near zero, power-like away from it
        const LogPowerForm nearzero =
            LogPowerForm::make(cc) * head_norm(inv(ap.P) - inv(ap.Q), ap.A, ap.B, ap.G,
                                               ap.Q);
        const LogPowerForm away =
            tail_norm(cc + inv(ap.P) - inv(ap.Q), ap.A, ap.B, ap.G, ap.Q);
        return LogPowerForm::make(k1) * power_substitute(lpf_dominant(nearzero, away), c.n);
    }
    if (c.m == 1)
        throw std::domain_error(
            "rho gauge of order 1 over a double-star associate leaves the log-power "
            "class; the order-1 pipeline uses theta alone");
    // double-star norm of the level average: near zero the average freezes at
    // u^{(m-1)/n} (up to logs), away from zero it carries lambda=(m-1)/n>0
    const LogPowerForm nearzero =
        LogPowerForm::make(Rational(c.m - 1, c.n)) * LogPowerForm::make(k0, ap.A, ap.B);
    const LogPowerForm away = tail_norm(cc + k1 - inv(ap.Q), ap.A, ap.B, k0, ap.Q);
    return LogPowerForm::make(k1) * power_substitute(lpf_dominant(nearzero, away), c.n);
}

ModulusDerivation derive_modulus_via_proof(const EmbeddingQuery& query) {
    const Ctx c = make_ctx(query);
    if (c.m > c.n) return {DeriveStatus::Form, LogPowerForm::make(k1)};
    LogPowerForm gauge;
    if (c.m == 1)
        gauge = theta_symbolic(query);
    else if (c.m < c.n)
        gauge = lpf_dominant(theta_symbolic(query), rho_symbolic(query));
    else
        gauge = rho_symbolic(query);
    if (gauge.divergent) return {DeriveStatus::DivergentOrNoLimit, {}};
    if (lpf_limit_zero(gauge) != ZeroLimit::TendsToZero)
        return {DeriveStatus::DivergentOrNoLimit, {}};
    return {DeriveStatus::Form, gauge};
}

LogPowerForm derive_morrey_via_proof(const EmbeddingQuery& query) {
    const Ctx c = make_ctx(query);
    if (c.m >= c.n)
        throw std::invalid_argument("the Morrey pipeline requires order m < dimension n");
    const AssocParams ap = assoc_params(associate_space(c.X));
    const Rational ct = Rational(c.m, c.n) - k1;
    if (!ap.dbl) {
        const LogPowerForm nearzero =
            LogPowerForm::make(ct) * head_norm(inv(ap.P) - inv(ap.Q), ap.A, ap.B, ap.G,
                                               ap.Q);
        const LogPowerForm away =
            tail_norm(ct + inv(ap.P) - inv(ap.Q), ap.A, ap.B, ap.G, ap.Q);
        return power_substitute(lpf_dominant(nearzero, away), c.n);
    }
    const LogPowerForm nearzero =
        LogPowerForm::make(Rational(c.m, c.n)) * LogPowerForm::make(k0, ap.A, ap.B);
    const LogPowerForm away = tail_norm(ct + k1 - inv(ap.Q), ap.A, ap.B, k0, ap.Q);
    return power_substitute(lpf_dominant(nearzero, away), c.n);
}

LogPowerForm derive_campanato_via_proof(const EmbeddingQuery& query) {
    const Ctx c = make_ctx(query);
    if (c.m > c.n) return LogPowerForm::make(k1);
    if (c.m == 1) {
        const LogPowerForm phi = fundamental_function_symbolic(associate_space(c.X));
        return LogPowerForm::make(Rational(1 - c.n)) * power_substitute(phi, c.n);
    }
    return rho_symbolic(query);
}

LogPowerForm optimal_target_fundamental(const EmbeddingQuery& query) {
    const Ctx c = make_ctx(query);
    if (c.m >= c.n)
        throw std::invalid_argument(
            "the optimal-target fundamental function requires order m < dimension n");
    const AssocParams ap = assoc_params(associate_space(c.X));
    const Rational mn(c.m, c.n);
    // head+tail split of || s^{m/n} chi_(0,r)** ||_{X'}: the weight acts on
    // the pieces s^{m/n} chi_(0,r) and r s^{m/n-1} chi_(r,1) directly
    const LogPowerForm head =
        head_norm(mn + inv(ap.P) - inv(ap.Q), ap.A, ap.B, ap.G, ap.Q);
    const LogPowerForm tail =
        LogPowerForm::make(k1) *
        tail_norm(mn - k1 + inv(ap.P) - inv(ap.Q), ap.A, ap.B, ap.G, ap.Q);
    return lpf_dominant(head, tail);
}

// ---- numeric gauges ----------------------------------------------------------

double theta_numeric(const EmbeddingQuery& query, double r, const QuadratureConfig& cfg) {
    const Ctx c = make_ctx(query);
    const AssocParams ap = assoc_params(associate_space(c.X));
    r = std::min(r, 0.25);
    const double u = std::pow(r, static_cast<double>(c.n));
    const Rational mn(c.m, c.n);
    std::vector<Panel> panels;
    if (!ap.dbl) {
        Panel pan;
        pan.lo = 0.0;
        pan.hi = u;
        pan.weight = PowerLogWeight{mn - k1 + inv(ap.P) - inv(ap.Q), ap.A, ap.B, ap.G};
        pan.factor_limit0 = 1.0;
        panels.push_back(std::move(pan));
    } else {
        const double scale = static_cast<double>(c.n) / c.m;
        Panel below;
        below.lo = 0.0;
        below.hi = u;
        below.weight = PowerLogWeight{mn - inv(ap.Q), ap.A, ap.B, k0};
        below.factor = [scale](double) { return scale; };
        below.factor_limit0 = scale;
        panels.push_back(std::move(below));
        Panel above;
        above.lo = u;
        above.hi = 1.0;
        above.weight = PowerLogWeight{-inv(ap.Q), ap.A, ap.B, k0};
        const double mass = scale * std::pow(u, mn.to_double());
        above.factor = [mass](double) { return mass; };
        above.factor_limit0 = mass;
        panels.push_back(std::move(above));
    }
    return panel_lq_norm(panels, ap.Q, cfg).value;
}

double rho_numeric(const EmbeddingQuery& query, double r, const QuadratureConfig& cfg) {
    const Ctx c = make_ctx(query);
    const AssocParams ap = assoc_params(associate_space(c.X));
    r = std::min(r, 0.25);
    const double u = std::pow(r, static_cast<double>(c.n));
    const double cexp = -1.0 + static_cast<double>(c.m - 1) / c.n;
    std::vector<Panel> panels;
    if (!ap.dbl) {
        Panel pan;
        pan.lo = 0.0;
        pan.hi = 1.0 - u;
        pan.weight = PowerLogWeight{inv(ap.P) - inv(ap.Q), ap.A, ap.B, ap.G};
        pan.factor = [u, cexp](double s) { return std::pow(s + u, cexp); };
        pan.factor_limit0 = std::pow(u, cexp);
        panels.push_back(std::move(pan));
    } else {
        // level average of (s+u)^{c} chi_(0,1-u); c+1 = (m-1)/n
        const double c1 = cexp + 1.0;
        auto average = [u, c1](double t) {
            if (c1 == 0.0) return std::log1p(t / u) / t;
            return std::pow(u, c1) * std::expm1(c1 * std::log1p(t / u)) / (c1 * t);
        };
        const double total =
            c1 == 0.0 ? std::log(1.0 / u) : (1.0 - std::pow(u, c1)) / c1;
        Panel inside;
        inside.lo = 0.0;
        inside.hi = 1.0 - u;
        inside.weight = PowerLogWeight{k1 - inv(ap.Q), ap.A, ap.B, k0};
        inside.factor = average;
        inside.factor_limit0 = std::pow(u, cexp);
        panels.push_back(std::move(inside));
        Panel beyond;
        beyond.lo = 1.0 - u;
        beyond.hi = 1.0;
        beyond.weight = PowerLogWeight{k1 - inv(ap.Q) - k1, ap.A, ap.B, k0};
        beyond.factor = [total](double) { return total; };
        beyond.factor_limit0 = total;
        panels.push_back(std::move(beyond));
    }
    return r * panel_lq_norm(panels, ap.Q, cfg).value;
}

// ---- comparisons ---------------------------------------------------------------

std::string comparison_str(Comparison c) {
    return c == Comparison::Equal ? "Equal" : "Differs";
}

Comparison holder_campanato_compare(const EmbeddingQuery& query) {
    const Ctx c = make_ctx(query);
    if (c.X.kind != SpaceKind::Star)
        throw std::invalid_argument(
            "the Hoelder-Campanato comparison is tabulated for star spaces only");
    if (c.m > c.n)
        throw std::invalid_argument(
            "the Hoelder-Campanato comparison requires order m <= dimension n");
    if (optimal_modulus(query).is_no_embedding()) return Comparison::Differs;
    if (c.m < c.n && c.X.p == Rational(c.n, c.m)) {
        const Rational qp = one_over_conj(c.X.q);
        if ((c.X.alpha == qp && c.X.beta > qp) || c.X.alpha > qp)
            return Comparison::Differs;
    }
    return Comparison::Equal;
}

Comparison morrey_campanato_compare(const EmbeddingQuery& query) {
    const Ctx c = make_ctx(query);
    if (c.m >= c.n)
        throw std::invalid_argument(
            "the Morrey-Campanato comparison requires order m < dimension n");
    if (c.X.kind == SpaceKind::DoubleStar) return Comparison::Equal;
    const auto& X = c.X;
    const Rational pcrit(c.n, c.m);
    const bool coincide =
        (X.p == k1 && X.q == ExtendedRational(1) && X.alpha == k0 && X.beta > k0) ||
        (X.p == k1 && X.q == ExtendedRational(1) && X.alpha > k0) ||
        (X.p > k1 && X.p < pcrit && X.alpha == k0 && X.beta < k0) ||
        (X.p == pcrit && X.q == ExtendedRational(1) && X.alpha < k0) ||
        (X.p.is_inf() && X.alpha == k0 && X.beta <= k0);
    return coincide ? Comparison::Equal : Comparison::Differs;
}

// ---- reports -------------------------------------------------------------------

std::string TargetReport::to_json() const {
    nlohmann::ordered_json j;
    if (is_space()) {
        j["kind"] = "space";
        j["space"] = nlohmann::ordered_json::parse(space().to_json());
        j["display"] = space().str();
    } else if (is_form()) {
        j["kind"] = "form";
        j["form"] = nlohmann::ordered_json::parse(form().to_json());
        j["display"] = form().str();
    } else if (is_bracket()) {
        j["kind"] = "bracket";
        j["lower"] = nlohmann::ordered_json::parse(bracket().lower.to_json());
        j["upper"] = nlohmann::ordered_json::parse(bracket().upper.to_json());
        j["display"] = "between " + bracket().lower.str() + " and " + bracket().upper.str();
    } else if (is_no_embedding()) {
        j["kind"] = "no_embedding";
    } else {
        j["kind"] = "bool";
        j["value"] = value();
    }
    j["optimal"] = optimal;
    j["not_glz"] = not_glz;
    j["case_line"] = case_line;
    return j.dump();
}

std::string classify(const EmbeddingQuery& query) {
    const Ctx c = make_ctx(query);
    nlohmann::ordered_json j;
    j["query"] = {{"m", c.m},
                  {"n", c.n},
                  {"space", nlohmann::ordered_json::parse(c.X.to_json())}};
    j["ri"] = nlohmann::ordered_json::parse(ri_optimal_target(query).to_json());
    j["c0"] = c0_embeds(query).value();
    j["holder"] = nlohmann::ordered_json::parse(optimal_modulus(query).to_json());
    j["morrey"] = nlohmann::ordered_json::parse(optimal_morrey(query).to_json());
    j["campanato"] = nlohmann::ordered_json::parse(optimal_campanato(query).to_json());
    nlohmann::ordered_json comp;
    comp["holder_campanato"] =
        (c.X.kind == SpaceKind::Star && c.m <= c.n)
            ? comparison_str(holder_campanato_compare(query))
            : "n/a";
    comp["morrey_campanato"] = c.m < c.n
                                   ? comparison_str(morrey_campanato_compare(query))
                                   : "n/a";
    j["comparisons"] = comp;
    return j.dump(2);
}

}  // namespace glz
