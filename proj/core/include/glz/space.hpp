// Descriptors for the generalized Lorentz-Zygmund scale: the star norm on
// f*, the double-star norm on f**, the five-parameter three-log extension,
// and plain L^inf. Provides the validity classification, canonical
// representatives, tabulated associate spaces, and fundamental functions in
// symbolic and numeric form.
#pragma once

#include <optional>
#include <string>

#include "glz/logpower.hpp"
#include "glz/quadrature.hpp"
#include "glz/rational.hpp"
#include "glz/step_function.hpp"

namespace glz {

enum class SpaceKind { Star, DoubleStar, FiveParam, LInf };

struct SpaceDescriptor {
    SpaceKind kind = SpaceKind::Star;
    ExtendedRational p{1};
    ExtendedRational q{1};
    Rational alpha{0};
    Rational beta{0};
    Rational gamma{0};

    static SpaceDescriptor star(ExtendedRational p, ExtendedRational q, Rational alpha,
                                Rational beta);
    static SpaceDescriptor doublestar(ExtendedRational p, ExtendedRational q,
                                      Rational alpha, Rational beta);
    static SpaceDescriptor five(ExtendedRational p, ExtendedRational q, Rational alpha,
                                Rational beta, Rational gamma);
    static SpaceDescriptor linf();

    // Shorthand: L(p,q;a,b) for the star norm, L*(p,q;a,b) for the
    // double-star norm, L(p,q;a,b,g) for the five-parameter norm, Linf.
    std::string str() const;
    std::string to_json() const;
    static SpaceDescriptor from_json(const std::string& text);
    // Accepts the shorthand or a JSON object.
    static SpaceDescriptor parse(const std::string& text);

    bool operator==(const SpaceDescriptor&) const = default;
};

enum class Validity { ValidNorm, CollapsesToL1, RewritesToStar, Invalid };

struct ValidationResult {
    Validity verdict = Validity::Invalid;
    std::optional<SpaceDescriptor> canonical;
    std::string matched_case;
};

ValidationResult validate_space(const SpaceDescriptor& x);

// Canonical representative of a valid descriptor; throws on Invalid.
SpaceDescriptor canonical_space(const SpaceDescriptor& x);

// Tabulated associate space X'. Throws for three-log spaces, whose associates
// are not tabulated.
SpaceDescriptor associate_space(const SpaceDescriptor& x);

// Germ of phi_X(r) = ||chi_(0,r)||_X as r -> 0.
LogPowerForm fundamental_function_symbolic(const SpaceDescriptor& x);

// ||f||_X for a step function, computed by quadrature on the canonical form.
NormResult glz_norm_numeric(const SpaceDescriptor& x, const StepFunction& f,
                            const QuadratureConfig& cfg = {});

// phi_X(r) by quadrature.
NormResult fundamental_function_numeric(const SpaceDescriptor& x, double r,
                                        const QuadratureConfig& cfg = {});

}  // namespace glz
