#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "glz/embedding.hpp"
#include "glz/logpower.hpp"
#include "glz/space.hpp"

using namespace glz;

namespace {

EmbeddingQuery Q(int m, int n, const char* space) {
    return EmbeddingQuery{m, n, SpaceDescriptor::parse(space)};
}

LogPowerForm F(const char* lam, const char* a = "0", const char* b = "0",
               const char* c = "0") {
    return LogPowerForm::make(Rational::parse(lam), Rational::parse(a),
                              Rational::parse(b), Rational::parse(c));
}

bool equiv(const LogPowerForm& a, const LogPowerForm& b) {
    return lpf_compare(a, b) == FormOrder::Equivalent;
}

}  // namespace

TEST_CASE("optimal r.i. target: subcritical Lorentz improvement") {
    const TargetReport r = ri_optimal_target(Q(1, 3, "L(2,2;0,0)"));
    REQUIRE(r.is_space());
    CHECK(r.space() == SpaceDescriptor::parse("L(6,2;0,0)"));
    CHECK(r.optimal);
    CHECK_FALSE(r.not_glz);
}

TEST_CASE("optimal r.i. target: critical case lands outside Lebesgue") {
    const TargetReport r = ri_optimal_target(Q(1, 2, "L(2,2;0,0)"));
    REQUIRE(r.is_space());
    CHECK(r.space() == SpaceDescriptor::parse("L(inf,2;-1,0)"));
    CHECK(r.optimal);
}

TEST_CASE("optimal r.i. target: critical boundary gives the three-log space") {
    const TargetReport r = ri_optimal_target(Q(1, 2, "L(2,2;1/2,1/2)"));
    REQUIRE(r.is_space());
    CHECK(r.space() == SpaceDescriptor::parse("L(inf,2;-1/2,-1/2,-1)"));
    CHECK(r.optimal);
}

TEST_CASE("optimal r.i. target: double-star source with q = 1 stays optimal") {
    const TargetReport r = ri_optimal_target(Q(1, 2, "L*(1,1;0,0)"));
    REQUIRE(r.is_space());
    CHECK(r.space() == SpaceDescriptor::parse("L(2,1;1,0)"));
    CHECK(r.optimal);
}

TEST_CASE("optimal r.i. target: double-star source with q > 1 is bracketed") {
    const TargetReport r = ri_optimal_target(Q(1, 2, "L*(1,2;0,0)"));
    REQUIRE(r.is_bracket());
    CHECK(r.bracket().lower == SpaceDescriptor::parse("L(2,2;1,0)"));
    CHECK(r.bracket().upper == SpaceDescriptor::parse("L(2,2;1/2,0)"));
    CHECK(r.not_glz);
    CHECK_FALSE(r.optimal);

    // The sandwich is consistent: the lower space embeds into the upper one.
    const LogPowerForm lo = fundamental_function_symbolic(r.bracket().lower);
    const LogPowerForm hi = fundamental_function_symbolic(r.bracket().upper);
    CHECK(lpf_compare(lo, hi) != FormOrder::StrictlySmaller);
}

TEST_CASE("optimal r.i. target: high order collapses to L^inf") {
    const TargetReport r = ri_optimal_target(Q(2, 2, "L(2,2;0,0)"));
    REQUIRE(r.is_space());
    CHECK(r.space() == SpaceDescriptor::linf());
    CHECK(r.optimal);
}

TEST_CASE("continuity: the critical q = 1 line reaches it, q = 2 does not") {
    CHECK(c0_embeds(Q(1, 2, "L(2,1;0,0)")).value());
    CHECK_FALSE(c0_embeds(Q(1, 2, "L(2,2;0,0)")).value());
    CHECK_FALSE(c0_embeds(Q(1, 2, "L*(1,2;0,0)")).value());
    CHECK(c0_embeds(Q(1, 2, "L(4,1;0,0)")).value());
    CHECK(c0_embeds(Q(2, 2, "L(1,1;0,0)")).value());
    CHECK(c0_embeds(Q(3, 2, "L(2,2;0,0)")).value());
}

TEST_CASE("optimal modulus: classical Morrey exponent") {
    const TargetReport r = optimal_modulus(Q(1, 2, "L(4,1;0,0)"));
    REQUIRE(r.is_form());
    CHECK(r.form() == F("1/2"));
}

TEST_CASE("optimal modulus: boundary tuples pick up log factors") {
    const TargetReport a = optimal_modulus(Q(1, 2, "L(2,2;1/2,1)"));
    REQUIRE(a.is_form());
    CHECK(a.form() == F("0", "0", "-1/2"));

    const TargetReport b = optimal_modulus(Q(1, 2, "L(2,2;1,0)"));
    REQUIRE(b.is_form());
    CHECK(b.form() == F("0", "-1/2"));
}

TEST_CASE("optimal modulus: continuity without any admissible modulus") {
    CHECK(optimal_modulus(Q(1, 2, "L(2,1;0,0)")).is_no_embedding());
    CHECK(optimal_modulus(Q(1, 2, "L(2,2;0,0)")).is_no_embedding());
    CHECK(optimal_modulus(Q(1, 2, "L*(1,2;0,0)")).is_no_embedding());
}

TEST_CASE("optimal modulus: double-star order n line and the Lipschitz cap") {
    const TargetReport a = optimal_modulus(Q(2, 2, "L*(1,2;0,0)"));
    REQUIRE(a.is_form());
    CHECK(a.form() == F("0", "-1/2"));

    const TargetReport b = optimal_modulus(Q(3, 2, "L(2,2;0,0)"));
    REQUIRE(b.is_form());
    CHECK(b.form() == F("1"));
}

TEST_CASE("optimal Morrey gauge: power, log, and collapsed lines") {
    CHECK(optimal_morrey(Q(1, 3, "L(2,2;0,0)")).form() == F("-1/2"));
    CHECK(optimal_morrey(Q(1, 2, "L(2,2;0,0)")).form() == F("0", "1/2"));
    CHECK(optimal_morrey(Q(1, 2, "L*(1,1;0,0)")).form() == F("-1", "-1"));
    CHECK(optimal_morrey(Q(2, 2, "L(2,2;0,0)")).form() == LogPowerForm::one());
    CHECK(optimal_morrey(Q(1, 2, "Linf")).form() == LogPowerForm::one());
}

TEST_CASE("optimal Campanato gauge: power, BMO, and double-star lines") {
    CHECK(optimal_campanato(Q(1, 2, "L(1,1;0,0)")).form() == F("-1"));
    CHECK(optimal_campanato(Q(2, 2, "L(1,1;0,0)")).form() == LogPowerForm::one());
    CHECK(optimal_campanato(Q(3, 3, "L(1,1;0,0)")).form() == LogPowerForm::one());
    CHECK(optimal_campanato(Q(1, 2, "L*(1,2;0,0)")).form() == F("-1", "-1/2"));
    CHECK(optimal_campanato(Q(3, 2, "L(2,2;0,0)")).form() == F("1"));
}

TEST_CASE("derivation pipeline: modulus matches the table dispatch") {
    const ModulusDerivation a = derive_modulus_via_proof(Q(1, 2, "L(4,1;0,0)"));
    REQUIRE(a.status == DeriveStatus::Form);
    CHECK(equiv(a.form, F("1/2")));

    const ModulusDerivation b = derive_modulus_via_proof(Q(1, 2, "L(2,2;0,0)"));
    CHECK(b.status == DeriveStatus::DivergentOrNoLimit);

    const ModulusDerivation c = derive_modulus_via_proof(Q(2, 2, "L*(1,1;0,0)"));
    REQUIRE(c.status == DeriveStatus::Form);
    CHECK(equiv(c.form, F("0", "-1")));

    const ModulusDerivation d = derive_modulus_via_proof(Q(2, 3, "L(3,1;1/2,0)"));
    const TargetReport table = optimal_modulus(Q(2, 3, "L(3,1;1/2,0)"));
    REQUIRE(d.status == DeriveStatus::Form);
    REQUIRE(table.is_form());
    CHECK(equiv(d.form, table.form()));
}

TEST_CASE("derivation pipeline: Morrey gauge") {
    CHECK(equiv(derive_morrey_via_proof(Q(1, 3, "L(2,2;0,0)")), F("-1/2")));
    CHECK(equiv(derive_morrey_via_proof(Q(1, 2, "L*(1,1;0,0)")), F("-1", "-1")));
    CHECK(equiv(derive_morrey_via_proof(Q(1, 2, "Linf")), LogPowerForm::one()));
    CHECK_THROWS_AS((void)derive_morrey_via_proof(Q(2, 2, "L(2,2;0,0)")),
                    std::invalid_argument);
}

TEST_CASE("derivation pipeline: Campanato gauge") {
    CHECK(equiv(derive_campanato_via_proof(Q(1, 2, "L(1,1;0,0)")), F("-1")));
    CHECK(equiv(derive_campanato_via_proof(Q(1, 2, "L*(1,1;0,0)")), F("-1", "-1")));
    CHECK(equiv(derive_campanato_via_proof(Q(2, 2, "L(2,2;0,0)")),
                optimal_campanato(Q(2, 2, "L(2,2;0,0)")).form()));
}

TEST_CASE("theta gauge: symbolic and numeric agree on a midrange point") {
    const EmbeddingQuery q = Q(1, 2, "L(4,1;0,0)");
    const LogPowerForm sym = theta_symbolic(q);
    CHECK_FALSE(sym.divergent);
    const double r = 1.0 / 1024.0;
    const double num = theta_numeric(q, r);
    const double ratio = num / lpf_eval(sym, r);
    CHECK(ratio > 0.1);
    CHECK(ratio < 10.0);
}

TEST_CASE("theta gauge: the critical Lebesgue tuple diverges") {
    CHECK(theta_symbolic(Q(1, 2, "L(2,2;0,0)")).divergent);
}

TEST_CASE("rho gauge: star associates everywhere, double-star ones need m >= 2") {
    CHECK_FALSE(rho_symbolic(Q(2, 2, "L(2,2;0,0)")).divergent);
    CHECK_FALSE(rho_symbolic(Q(2, 2, "L(inf,2;-1,0)")).divergent);
    CHECK_THROWS_AS((void)rho_symbolic(Q(1, 2, "L(inf,2;-1,0)")), std::domain_error);
}

TEST_CASE("optimal-target fundamental function") {
    CHECK(equiv(optimal_target_fundamental(Q(1, 2, "L*(1,2;0,0)")), F("1/2", "-1")));
    CHECK(equiv(optimal_target_fundamental(Q(1, 2, "L*(1,1;-1,0)")),
                F("1/2", "0", "-1")));

    const EmbeddingQuery q = Q(1, 3, "L(2,2;0,0)");
    const SpaceDescriptor target = ri_optimal_target(q).space();
    CHECK(equiv(optimal_target_fundamental(q),
                fundamental_function_symbolic(associate_space(target))));

    CHECK_THROWS_AS((void)optimal_target_fundamental(Q(2, 2, "L(2,2;0,0)")),
                    std::invalid_argument);
}

TEST_CASE("Hoelder-Campanato comparison: agreement and the exception list") {
    CHECK(holder_campanato_compare(Q(1, 2, "L(3,2;0,0)")) == Comparison::Equal);
    CHECK(holder_campanato_compare(Q(1, 3, "L(3,2;1,0)")) == Comparison::Differs);
    CHECK(holder_campanato_compare(Q(1, 2, "L(2,2;1/2,1)")) == Comparison::Differs);
    CHECK(holder_campanato_compare(Q(2, 2, "L(1,1;0,0)")) == Comparison::Differs);
    CHECK(holder_campanato_compare(Q(2, 2, "L(2,2;0,0)")) == Comparison::Equal);
    CHECK_THROWS_AS((void)holder_campanato_compare(Q(1, 2, "L*(1,2;0,0)")),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)holder_campanato_compare(Q(3, 2, "L(2,2;0,0)")),
                    std::invalid_argument);
}

TEST_CASE("Morrey-Campanato comparison: the five coincidence lines") {
    CHECK(morrey_campanato_compare(Q(1, 2, "L(1,1;0,1)")) == Comparison::Equal);
    CHECK(morrey_campanato_compare(Q(1, 2, "L(1,1;1,0)")) == Comparison::Equal);
    CHECK(morrey_campanato_compare(Q(1, 3, "L(2,2;0,-1)")) == Comparison::Equal);
    CHECK(morrey_campanato_compare(Q(1, 2, "L(2,1;-1,0)")) == Comparison::Equal);
    CHECK(morrey_campanato_compare(Q(1, 2, "Linf")) == Comparison::Equal);
    CHECK(morrey_campanato_compare(Q(1, 2, "L(inf,inf;0,-2)")) == Comparison::Equal);

    CHECK(morrey_campanato_compare(Q(1, 3, "L(2,2;0,0)")) == Comparison::Differs);
    CHECK(morrey_campanato_compare(Q(1, 2, "L(1,1;0,0)")) == Comparison::Differs);

    CHECK(morrey_campanato_compare(Q(1, 2, "L*(1,2;0,0)")) == Comparison::Equal);
    CHECK(morrey_campanato_compare(Q(1, 3, "L*(1,1;-1,2)")) == Comparison::Equal);

    CHECK_THROWS_AS((void)morrey_campanato_compare(Q(2, 2, "L(2,2;0,0)")),
                    std::invalid_argument);
}

TEST_CASE("query validation: dimension, order, and source-kind guards") {
    CHECK_THROWS_AS((void)ri_optimal_target(Q(1, 1, "L(2,2;0,0)")),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)ri_optimal_target(Q(0, 2, "L(2,2;0,0)")),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)ri_optimal_target(Q(1, 2, "L(1,1;-1,0)")),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)ri_optimal_target(Q(1, 2, "L(2,2;0,0,1)")),
                    std::domain_error);
}

TEST_CASE("classical Lebesgue reductions") {
    CHECK(ri_optimal_target(Q(1, 3, "L(2,2;0,0)")).space() ==
          SpaceDescriptor::parse("L(6,2;0,0)"));
    CHECK(ri_optimal_target(Q(1, 2, "L(2,2;0,0)")).space() ==
          SpaceDescriptor::parse("L(inf,2;-1,0)"));
    CHECK(optimal_modulus(Q(1, 2, "L(4,4;0,0)")).form() == F("1/2"));
    CHECK(optimal_modulus(Q(1, 3, "L(4,4;0,0)")).form() == F("1/4"));
}

TEST_CASE("a modulus always implies continuity") {
    const std::vector<EmbeddingQuery> grid{
        Q(1, 2, "L(4,1;0,0)"),  Q(1, 2, "L(2,2;1/2,1)"), Q(1, 2, "L(2,2;1,0)"),
        Q(2, 3, "L(3,1;1/2,0)"), Q(2, 2, "L*(1,2;0,0)"),  Q(2, 2, "L(2,2;0,0)"),
        Q(3, 2, "L(2,2;0,0)"),  Q(1, 3, "L(6,2;-1,4)"),
    };
    for (const auto& q : grid) {
        if (optimal_modulus(q).is_form()) CHECK(c0_embeds(q).value());
    }
}

TEST_CASE("higher order shrinks the modulus") {
    const char* space = "L(4,2;1,0)";
    for (int n : {3, 4}) {
        LogPowerForm prev;
        bool have_prev = false;
        for (int m = 1; m <= n; ++m) {
            const TargetReport r = optimal_modulus(Q(m, n, space));
            if (!r.is_form()) continue;
            if (have_prev) CHECK(lpf_compare(r.form(), prev) != FormOrder::StrictlyLarger);
            prev = r.form();
            have_prev = true;
        }
        CHECK(have_prev);
    }
}

TEST_CASE("classify report: shape and cross-field consistency") {
    const EmbeddingQuery q = Q(1, 2, "L(2,2;0,0)");
    const auto j = nlohmann::json::parse(classify(q));

    REQUIRE(j.contains("query"));
    REQUIRE(j.contains("ri"));
    REQUIRE(j.contains("c0"));
    REQUIRE(j.contains("holder"));
    REQUIRE(j.contains("morrey"));
    REQUIRE(j.contains("campanato"));
    REQUIRE(j.contains("comparisons"));

    CHECK(j["query"]["m"] == 1);
    CHECK(j["query"]["n"] == 2);
    CHECK(j["ri"]["kind"] == "space");
    CHECK(j["ri"]["display"] == "L(inf,2;-1,0)");
    CHECK(j["ri"]["optimal"] == true);
    CHECK(j["c0"] == false);
    CHECK(j["holder"]["kind"] == "no_embedding");
    CHECK(j["comparisons"]["holder_campanato"] == "Differs");
    CHECK(j["comparisons"]["morrey_campanato"] == "Differs");
    CHECK(j["morrey"]["display"] == optimal_morrey(q).form().str());

    for (const char* key : {"ri", "holder", "morrey", "campanato"}) {
        CHECK(j[key].contains("case_line"));
    }
}
