#include "glz/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace glz {

namespace {

std::size_t piece_index(const std::vector<double>& breakpoints, double s) {
    // First piece whose upper edge is >= s; s = 0 maps to the first piece.
    const auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), s);
    return it == breakpoints.end() ? breakpoints.size() - 1
                                   : static_cast<std::size_t>(it - breakpoints.begin());
}

}  // namespace

void StepFunction::validate() const {
    if (breakpoints.empty() || breakpoints.size() != values.size())
        throw std::invalid_argument("step function needs matching nonempty arrays");
    double prev = 0.0;
    for (double b : breakpoints) {
        if (!(b > prev)) throw std::invalid_argument("breakpoints must increase from 0");
        prev = b;
    }
    if (breakpoints.back() != 1.0)
        throw std::invalid_argument("last breakpoint must be 1");
    for (double v : values)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("values must be finite and nonnegative");
}

double StepFunction::eval(double s) const {
    if (!(s > 0.0) || s > 1.0) return 0.0;
    return values[piece_index(breakpoints, s)];
}

double StepFunction::integral() const {
    double acc = 0.0, prev = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        acc += values[i] * (breakpoints[i] - prev);
        prev = breakpoints[i];
    }
    return acc;
}

double StepFunction::sup() const {
    return *std::max_element(values.begin(), values.end());
}

std::string StepFunction::to_json() const {
    nlohmann::ordered_json j;
    j["breakpoints"] = breakpoints;
    j["values"] = values;
    return j.dump();
}

StepFunction StepFunction::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    StepFunction f;
    f.breakpoints = j.at("breakpoints").get<std::vector<double>>();
    f.values = j.at("values").get<std::vector<double>>();
    f.validate();
    return f;
}

StepFunction decreasing_rearrangement(const StepFunction& f) {
    f.validate();
    std::vector<std::pair<double, double>> pieces;  // (value, width)
    double prev = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        pieces.emplace_back(f.values[i], f.breakpoints[i] - prev);
        prev = f.breakpoints[i];
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    StepFunction out;
    double edge = 0.0;
    for (const auto& [v, w] : pieces) {
        edge += w;
        if (!out.values.empty() && out.values.back() == v)
            out.breakpoints.back() = edge;  // merge equal-value plateaus
        else {
            out.values.push_back(v);
            out.breakpoints.push_back(edge);
        }
    }
    out.breakpoints.back() = 1.0;  // guard the accumulated width against roundoff
    return out;
}

MaximalFunction maximal_rearrangement(const StepFunction& f) {
    const StepFunction fs = decreasing_rearrangement(f);
    MaximalFunction m;
    m.breakpoints = fs.breakpoints;
    m.slope.resize(fs.values.size());
    m.mass.resize(fs.values.size());
    double area = 0.0, prev = 0.0;
    for (std::size_t i = 0; i < fs.values.size(); ++i) {
        m.slope[i] = fs.values[i];
        m.mass[i] = area - fs.values[i] * prev;  // f**(t) = v + (A - v*t0)/t
        area += fs.values[i] * (fs.breakpoints[i] - prev);
        prev = fs.breakpoints[i];
    }
    return m;
}

double MaximalFunction::eval(double t) const {
    if (!(t > 0.0)) throw std::domain_error("maximal function needs t > 0");
    if (t > 1.0) t = 1.0;
    const std::size_t i = piece_index(breakpoints, t);
    return slope[i] + mass[i] / t;
}

double inner_product(const StepFunction& f, const StepFunction& g) {
    double acc = 0.0, prev = 0.0;
    std::size_t i = 0, j = 0;
    while (i < f.breakpoints.size() && j < g.breakpoints.size()) {
        const double edge = std::min(f.breakpoints[i], g.breakpoints[j]);
        acc += f.values[i] * g.values[j] * (edge - prev);
        prev = edge;
        if (f.breakpoints[i] == edge) ++i;
        if (g.breakpoints[j] == edge) ++j;
    }
    return acc;
}

double lq_norm(const StepFunction& f, double q) {
    if (std::isinf(q)) return f.sup();
    if (!(q >= 1.0)) throw std::domain_error("lq_norm needs q >= 1");
    double acc = 0.0, prev = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        acc += std::pow(f.values[i], q) * (f.breakpoints[i] - prev);
        prev = f.breakpoints[i];
    }
    return std::pow(acc, 1.0 / q);
}

SupremalFunction supremal_Sm(const StepFunction& f, int m, int n) {
    if (m < 1 || n < 2 || m >= n) throw std::domain_error("supremal operator needs 1 <= m < n");
    const MaximalFunction mx = maximal_rearrangement(f);
    SupremalFunction s;
    s.theta = static_cast<double>(m) / n;
    s.breakpoints = mx.breakpoints;
    s.slope = mx.slope;
    s.mass = mx.mass;
    s.cap.assign(mx.breakpoints.size(), 0.0);

    // t^theta * f**(t) = v t^theta + K t^{theta-1} has no interior maximum
    // (the K-term falls, the v-term rises), so the running sup over [s,1)
    // only needs the piece-edge values collected from the right.
    const auto edge_value = [&](std::size_t i, double t) {
        return mx.slope[i] * std::pow(t, s.theta) + mx.mass[i] * std::pow(t, s.theta - 1.0);
    };
    double run = 0.0;
    for (std::size_t i = mx.breakpoints.size(); i-- > 0;) {
        run = std::max(run, edge_value(i, mx.breakpoints[i]));
        s.cap[i] = run;
    }
    return s;
}

double SupremalFunction::eval(double s) const {
    if (!(s > 0.0) || s >= 1.0) throw std::domain_error("supremal function needs s in (0,1)");
    const std::size_t i = piece_index(breakpoints, s);
    const double here = slope[i] * std::pow(s, theta) + mass[i] * std::pow(s, theta - 1.0);
    return std::max(here, cap[i]);
}

FractionalFunction fractional_T(const StepFunction& f, int m, int n) {
    if (m < 1 || n < 2 || m >= n) throw std::domain_error("fractional operator needs 1 <= m < n");
    const StepFunction fs = decreasing_rearrangement(f);
    FractionalFunction t;
    t.theta = static_cast<double>(m) / n;
    t.breakpoints = fs.breakpoints;
    t.coeff.assign(fs.values.size(), 0.0);
    double run = 0.0;
    for (std::size_t i = fs.values.size(); i-- > 0;) {
        run = std::max(run, fs.values[i] * std::pow(fs.breakpoints[i], t.theta));
        t.coeff[i] = run;
    }
    return t;
}

double FractionalFunction::eval(double s) const {
    if (!(s > 0.0) || s > 1.0) throw std::domain_error("fractional function needs s in (0,1]");
    const std::size_t i = piece_index(breakpoints, s);
    return coeff[i] * std::pow(s, -theta);
}

StepFunction dilation(const StepFunction& f, double lambda) {
    if (!(lambda > 0.0)) throw std::domain_error("dilation needs lambda > 0");
    f.validate();
    StepFunction out;
    for (std::size_t i = 0; i < f.breakpoints.size(); ++i) {
        const double edge = f.breakpoints[i] * lambda;
        if (edge >= 1.0) {
            out.breakpoints.push_back(1.0);
            out.values.push_back(f.values[i]);
            return out;
        }
        out.breakpoints.push_back(edge);
        out.values.push_back(f.values[i]);
    }
    // lambda < 1: the squeezed support ends at lambda; extend by zero.
    out.breakpoints.push_back(1.0);
    out.values.push_back(0.0);
    return out;
}

}  // namespace glz
