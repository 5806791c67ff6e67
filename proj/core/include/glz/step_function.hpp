// Nonnegative step functions on (0,1) with exact rearrangement calculus:
// decreasing rearrangement, level averages f**, supremal and fractional
// operators, dilations. Breakpoints are the upper edges of the pieces; the
// left edge 0 is implicit and the last breakpoint is 1.
#pragma once

#include <string>
#include <vector>

namespace glz {

struct StepFunction {
    std::vector<double> breakpoints;
    std::vector<double> values;

    void validate() const;
    double eval(double s) const;
    double integral() const;
    double sup() const;

    std::string to_json() const;
    static StepFunction from_json(const std::string& text);
};

// Values sorted decreasingly, plateaus of equal value merged. Exactly
// equimeasurable with the input.
StepFunction decreasing_rearrangement(const StepFunction& f);

// f**(t) = (1/t) * integral of f* over (0,t): piecewise v_i + K_i / t with
// K_1 = 0; continuous and nonincreasing.
struct MaximalFunction {
    std::vector<double> breakpoints;
    std::vector<double> slope;  // v_i
    std::vector<double> mass;   // K_i

    double eval(double t) const;
};
MaximalFunction maximal_rearrangement(const StepFunction& f);

// Exact integral of f * g over (0,1).
double inner_product(const StepFunction& f, const StepFunction& g);

// Exact L^q norm (q >= 1 or infinity via q <= 0 sentinel is not used; pass
// std::numeric_limits<double>::infinity() for the sup norm).
double lq_norm(const StepFunction& f, double q);

// S f(s) = sup over t in [s,1) of t^{m/n} f**(t). On each piece the envelope
// is max(v t^theta + K t^{theta-1}, C) with the running constant C collected
// from the right; the sup is attained at piece endpoints.
struct SupremalFunction {
    double theta = 0.0;  // m/n
    std::vector<double> breakpoints;
    std::vector<double> slope;
    std::vector<double> mass;
    std::vector<double> cap;  // C_i

    double eval(double s) const;
};
SupremalFunction supremal_Sm(const StepFunction& f, int m, int n);

// T f(s) = s^{-m/n} * sup over t in [s,1] of t^{m/n} f*(t); the sup is a
// right-to-left running max of v_i b_i^{theta}, so T is D_i s^{-theta} on
// piece i.
struct FractionalFunction {
    double theta = 0.0;
    std::vector<double> breakpoints;
    std::vector<double> coeff;  // D_i

    double eval(double s) const;
};
FractionalFunction fractional_T(const StepFunction& f, int m, int n);

// D_lambda f(s) = f(s / lambda) on (0, min(lambda, 1)), zero beyond.
StepFunction dilation(const StepFunction& f, double lambda);

}  // namespace glz
