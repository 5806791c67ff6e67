#include "glz/space.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace glz {

namespace {

const Rational kZero{0};
const Rational kOne{1};

// -1/q, which is 0 when q = inf.
Rational neg_inv(const ExtendedRational& q) { return -q.reciprocal(); }

ValidationResult no_match() {
    return {Validity::Invalid, std::nullopt, "no matching validity row"};
}

ValidationResult valid_as(const SpaceDescriptor& canon, std::string row) {
    return {Validity::ValidNorm, canon, std::move(row)};
}

ValidationResult validate_star_params(const ExtendedRational& p, const ExtendedRational& q,
                                      const Rational& a, const Rational& b) {
    if (p <= kZero || q < kOne) return no_match();
    const SpaceDescriptor self = SpaceDescriptor::star(p, q, a, b);
    if (p == kOne && q == kOne) {
        if (a == kZero && b >= kZero) return valid_as(self, "star: p=q=1, alpha=0, beta>=0");
        if (a > kZero) return valid_as(self, "star: p=q=1, alpha>0");
        return no_match();
    }
    if (p < kOne || p == kOne) return no_match();
    if (!p.is_inf()) return valid_as(self, "star: 1<p<inf");
    const Rational mi = neg_inv(q);
    if (a < mi) return valid_as(self, "star: p=inf, alpha<-1/q");
    if (a == mi && b < mi) return valid_as(self, "star: p=inf, alpha=-1/q, beta<-1/q");
    if (q.is_inf() && a == kZero && b == kZero)
        return valid_as(self, "star: p=q=inf, alpha=beta=0");
    return no_match();
}

ValidationResult validate_dbl_params(const ExtendedRational& p, const ExtendedRational& q,
                                     const Rational& a, const Rational& b) {
    if (p <= kZero || q < kOne) return no_match();
    const SpaceDescriptor l1 = SpaceDescriptor::star(kOne, kOne, kZero, kZero);
    if (p < kOne)
        return {Validity::CollapsesToL1, l1, "double-star: 0<p<1 collapses to L^1"};
    if (p > kOne) {
        auto star = validate_star_params(p, q, a, b);
        if (star.verdict != Validity::ValidNorm) return no_match();
        return {Validity::RewritesToStar, star.canonical,
                "double-star: p>1 rewrites to the star norm"};
    }
    const Rational mi = neg_inv(q);
    const SpaceDescriptor self = SpaceDescriptor::doublestar(p, q, a, b);
    if (a < mi) return {Validity::CollapsesToL1, l1, "double-star: p=1, alpha<-1/q"};
    if (a == mi && b < mi)
        return {Validity::CollapsesToL1, l1, "double-star: p=1, alpha=-1/q, beta<-1/q"};
    if (q.is_inf() && a == kZero && b == kZero)
        return {Validity::CollapsesToL1, l1, "double-star: p=1, q=inf, alpha=beta=0"};
    if (a > mi) return valid_as(self, "double-star: p=1, alpha>-1/q");
    if (b > mi) return valid_as(self, "double-star: p=1, alpha=-1/q, beta>-1/q");
    return valid_as(self, "double-star: p=1, q<inf, alpha=beta=-1/q");
}

ValidationResult validate_five_params(const ExtendedRational& p, const ExtendedRational& q,
                                      const Rational& a, const Rational& b,
                                      const Rational& g) {
    if (g == kZero) {
        auto star = validate_star_params(p, q, a, b);
        if (star.verdict != Validity::ValidNorm) return no_match();
        return {Validity::RewritesToStar, star.canonical,
                "five-parameter: gamma=0 is the star norm"};
    }
    if (p <= kZero || q < kOne) return no_match();
    if (p < kOne || p == kOne) return no_match();
    const SpaceDescriptor self = SpaceDescriptor::five(p, q, a, b, g);
    if (!p.is_inf()) return valid_as(self, "five-parameter: 1<p<inf");
    if (q.is_inf()) {
        if (a < kZero) return valid_as(self, "five-parameter: p=q=inf, alpha<0");
        if (a == kZero && b < kZero)
            return valid_as(self, "five-parameter: p=q=inf, alpha=0, beta<0");
        if (a == kZero && b == kZero && g < kZero)
            return valid_as(self, "five-parameter: p=q=inf, alpha=beta=0, gamma<0");
        return no_match();
    }
    const Rational mi = neg_inv(q);
    if (a < mi) return valid_as(self, "five-parameter: p=inf, alpha<-1/q");
    if (a == mi && b < mi)
        return valid_as(self, "five-parameter: p=inf, alpha=-1/q, beta<-1/q");
    if (a == mi && b == mi && g < mi)
        return valid_as(self, "five-parameter: p=inf, alpha=beta=-1/q, gamma<-1/q");
    return no_match();
}

const char* kind_word(SpaceKind k) {
    switch (k) {
        case SpaceKind::Star: return "star";
        case SpaceKind::DoubleStar: return "double-star";
        case SpaceKind::FiveParam: return "five-parameter";
        case SpaceKind::LInf: return "L^inf";
    }
    return "unknown";
}

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_string()) return ExtendedRational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw std::invalid_argument("space parameters must be exact rationals like \"-1/2\"");
}

[[noreturn]] void bad_shorthand() {
    throw std::invalid_argument(
        "space shorthand must be L(p,q;a,b), L*(p,q;a,b), L(p,q;a,b,g), or Linf");
}

}  // namespace

SpaceDescriptor SpaceDescriptor::star(ExtendedRational p, ExtendedRational q,
                                      Rational alpha, Rational beta) {
    return {SpaceKind::Star, p, q, alpha, beta, Rational{0}};
}

SpaceDescriptor SpaceDescriptor::doublestar(ExtendedRational p, ExtendedRational q,
                                            Rational alpha, Rational beta) {
    return {SpaceKind::DoubleStar, p, q, alpha, beta, Rational{0}};
}

SpaceDescriptor SpaceDescriptor::five(ExtendedRational p, ExtendedRational q,
                                      Rational alpha, Rational beta, Rational gamma) {
    return {SpaceKind::FiveParam, p, q, alpha, beta, gamma};
}

SpaceDescriptor SpaceDescriptor::linf() {
    return {SpaceKind::LInf, ExtendedRational::infinity(), ExtendedRational::infinity(),
            Rational{0}, Rational{0}, Rational{0}};
}

std::string SpaceDescriptor::str() const {
    switch (kind) {
        case SpaceKind::LInf: return "Linf";
        case SpaceKind::Star:
            return "L(" + p.str() + "," + q.str() + ";" + alpha.str() + "," + beta.str() + ")";
        case SpaceKind::DoubleStar:
            return "L*(" + p.str() + "," + q.str() + ";" + alpha.str() + "," + beta.str() +
                   ")";
        case SpaceKind::FiveParam:
            return "L(" + p.str() + "," + q.str() + ";" + alpha.str() + "," + beta.str() +
                   "," + gamma.str() + ")";
    }
    return {};
}

std::string SpaceDescriptor::to_json() const {
    nlohmann::ordered_json j;
    switch (kind) {
        case SpaceKind::Star: j["kind"] = "star"; break;
        case SpaceKind::DoubleStar: j["kind"] = "doublestar"; break;
        case SpaceKind::FiveParam: j["kind"] = "glz5"; break;
        case SpaceKind::LInf: j["kind"] = "linf"; break;
    }
    if (kind != SpaceKind::LInf) {
        j["p"] = p.str();
        j["q"] = q.str();
        j["alpha"] = alpha.str();
        j["beta"] = beta.str();
        if (kind == SpaceKind::FiveParam) j["gamma"] = gamma.str();
    }
    return j.dump();
}

SpaceDescriptor SpaceDescriptor::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
        throw std::invalid_argument("space descriptor is not valid JSON");
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw std::invalid_argument("space descriptor needs a \"kind\" field");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "linf") return SpaceDescriptor::linf();
    if (!j.contains("p") || !j.contains("q"))
        throw std::invalid_argument("space descriptor needs \"p\" and \"q\" fields");
    ExtendedRational p = rational_from_json(j["p"]);
    ExtendedRational q = rational_from_json(j["q"]);
    Rational a = j.contains("alpha") ? rational_from_json(j["alpha"]) : kZero;
    Rational b = j.contains("beta") ? rational_from_json(j["beta"]) : kZero;
    Rational g = j.contains("gamma") ? rational_from_json(j["gamma"]) : kZero;
    if (kind == "star") {
        if (g != kZero) throw std::invalid_argument("star spaces carry no gamma exponent");
        return SpaceDescriptor::star(p, q, a, b);
    }
    if (kind == "doublestar") {
        if (g != kZero)
            throw std::invalid_argument("double-star spaces carry no gamma exponent");
        return SpaceDescriptor::doublestar(p, q, a, b);
    }
    if (kind == "glz5") return SpaceDescriptor::five(p, q, a, b, g);
    throw std::invalid_argument("unknown space kind \"" + kind + "\"");
}

SpaceDescriptor SpaceDescriptor::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) bad_shorthand();
    if (s[0] == '{') return from_json(text);

    std::string lower = s;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "linf") return SpaceDescriptor::linf();

    if (s[0] != 'L') bad_shorthand();
    std::size_t i = 1;
    bool dbl = false;
    if (i < s.size() && s[i] == '*') {
        dbl = true;
        ++i;
    }
    if (i >= s.size() || s[i] != '(' || s.back() != ')') bad_shorthand();
    const std::string body = s.substr(i + 1, s.size() - i - 2);
    const std::size_t semi = body.find(';');
    if (semi == std::string::npos) bad_shorthand();

    auto split = [](const std::string& part) {
        std::vector<std::string> out;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = part.find(',', start);
            if (comma == std::string::npos) {
                out.push_back(part.substr(start));
                return out;
            }
            out.push_back(part.substr(start, comma - start));
            start = comma + 1;
        }
    };
    const auto pq = split(body.substr(0, semi));
    const auto exps = split(body.substr(semi + 1));
    if (pq.size() != 2 || exps.size() < 2 || exps.size() > 3) bad_shorthand();
    if (dbl && exps.size() != 2) bad_shorthand();

    try {
        ExtendedRational p = ExtendedRational::parse(pq[0]);
        ExtendedRational q = ExtendedRational::parse(pq[1]);
        Rational a = ExtendedRational::parse(exps[0]);
        Rational b = ExtendedRational::parse(exps[1]);
        if (exps.size() == 3)
            return SpaceDescriptor::five(p, q, a, b, ExtendedRational::parse(exps[2]));
        return dbl ? SpaceDescriptor::doublestar(p, q, a, b)
                   : SpaceDescriptor::star(p, q, a, b);
    } catch (const std::invalid_argument&) {
        bad_shorthand();
    }
}

ValidationResult validate_space(const SpaceDescriptor& x) {
    switch (x.kind) {
        case SpaceKind::Star: return validate_star_params(x.p, x.q, x.alpha, x.beta);
        case SpaceKind::DoubleStar: return validate_dbl_params(x.p, x.q, x.alpha, x.beta);
        case SpaceKind::FiveParam:
            return validate_five_params(x.p, x.q, x.alpha, x.beta, x.gamma);
        case SpaceKind::LInf:
            return valid_as(SpaceDescriptor::star(ExtendedRational::infinity(),
                                                  ExtendedRational::infinity(), kZero, kZero),
                            "L^inf");
    }
    return no_match();
}

SpaceDescriptor canonical_space(const SpaceDescriptor& x) {
    auto v = validate_space(x);
    if (v.verdict == Validity::Invalid || !v.canonical)
        throw std::invalid_argument(std::string("invalid ") + kind_word(x.kind) +
                                    "-space parameters");
    return *v.canonical;
}

SpaceDescriptor associate_space(const SpaceDescriptor& x) {
    const SpaceDescriptor c = canonical_space(x);
    if (c.kind == SpaceKind::FiveParam)
        throw std::domain_error("associate space not tabulated for three-log spaces");

    const Rational a = c.alpha, b = c.beta;
    if (c.kind == SpaceKind::Star || c.kind == SpaceKind::LInf) {
        if (c.p == kOne) return SpaceDescriptor::star(ExtendedRational::infinity(),
                                                      ExtendedRational::infinity(), -a, -b);
        if (!c.p.is_inf())
            return SpaceDescriptor::star(c.p.conjugate(), c.q.conjugate(), -a, -b);
        if (c.q.is_inf())
            return SpaceDescriptor::star(kOne, kOne, -a, -b);
        const Rational mi = neg_inv(c.q);
        if (a < mi) return SpaceDescriptor::doublestar(kOne, c.q.conjugate(), -a - kOne, -b);
        return SpaceDescriptor::doublestar(kOne, c.q.conjugate(), c.q.reciprocal() - kOne,
                                           -b - kOne);
    }
    // Canonical double-star spaces all have p = 1.
    const Rational mi = neg_inv(c.q);
    if (a > mi)
        return SpaceDescriptor::star(ExtendedRational::infinity(), c.q.conjugate(), -a - kOne,
                                     -b);
    if (a == mi && b > mi)
        return SpaceDescriptor::star(ExtendedRational::infinity(), c.q.conjugate(),
                                     c.q.reciprocal() - kOne, -b - kOne);
    return SpaceDescriptor::five(ExtendedRational::infinity(), c.q.conjugate(),
                                 c.q.reciprocal() - kOne, c.q.reciprocal() - kOne,
                                 Rational{-1});
}

LogPowerForm fundamental_function_symbolic(const SpaceDescriptor& x) {
    const SpaceDescriptor c = canonical_space(x);
    const ExtendedRational qpsi = c.q.conjugate();
    if (c.kind == SpaceKind::DoubleStar) {
        // chi** is 1 on (0,r) and r/s beyond, so the norm splits into a head
        // piece and r times a tail piece; the larger germ wins.
        LogPowerForm head =
            symbolic_head_norm({kOne, qpsi, -c.alpha, -c.beta, kZero});
        LogPowerForm tail =
            symbolic_tail_norm({kZero, qpsi, -c.alpha, -c.beta, kZero});
        return lpf_dominant(head, LogPowerForm::make(kOne) * tail);
    }
    return symbolic_head_norm({c.p.reciprocal(), qpsi, -c.alpha, -c.beta, -c.gamma});
}

NormResult glz_norm_numeric(const SpaceDescriptor& x, const StepFunction& f,
                            const QuadratureConfig& cfg) {
    const SpaceDescriptor c = canonical_space(x);
    PowerLogWeight w;
    w.a = c.p.reciprocal() - c.q.reciprocal();
    w.b = c.alpha;
    w.c = c.beta;
    w.d = c.gamma;
    if (c.kind != SpaceKind::DoubleStar)
        return weighted_lq_norm(decreasing_rearrangement(f), w, c.q, 0.0, 1.0, cfg);

    const MaximalFunction mf = maximal_rearrangement(f);
    std::vector<Panel> panels;
    double prev = 0.0;
    for (std::size_t i = 0; i < mf.breakpoints.size(); ++i) {
        const double v = mf.slope[i], k = mf.mass[i];
        Panel panel;
        panel.lo = prev;
        panel.hi = mf.breakpoints[i];
        prev = mf.breakpoints[i];
        if ((v == 0.0 && k == 0.0) || panel.lo >= panel.hi) continue;
        panel.weight = w;
        panel.factor = [v, k](double s) { return v + k / s; };
        panel.factor_limit0 = v;
        panels.push_back(std::move(panel));
    }
    if (panels.empty()) return NormResult{};
    return panel_lq_norm(panels, c.q, cfg);
}

NormResult fundamental_function_numeric(const SpaceDescriptor& x, double r,
                                        const QuadratureConfig& cfg) {
    if (!(r > 0.0 && r < 1.0))
        throw std::invalid_argument("fundamental function argument must lie in (0,1)");
    StepFunction chi;
    chi.breakpoints = {r, 1.0};
    chi.values = {1.0, 0.0};
    return glz_norm_numeric(x, chi, cfg);
}

}  // namespace glz
