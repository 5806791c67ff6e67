// The theorem engine. Encodes the optimal-target case tables for m-th order
// Sobolev embeddings over the generalized Lorentz-Zygmund scale
// (rearrangement-invariant targets, continuity, Hoelder, Morrey, Campanato
// spaces) as exact dispatch on rational parameters, and independently
// re-derives every answer through the reduction pipeline (theta and rho
// gauges built from symbolic head/tail norms of the associate space).
#pragma once

#include <string>
#include <variant>

#include "glz/logpower.hpp"
#include "glz/quadrature.hpp"
#include "glz/space.hpp"

namespace glz {

struct EmbeddingQuery {
    int m = 1;              // Sobolev order, m >= 1
    int n = 2;              // ambient dimension, n >= 2
    SpaceDescriptor space;  // must validate; canonicalized internally
};

// A two-sided localization of an optimal target that is itself outside the
// scale: lower embeds into the optimal space, which embeds into upper.
struct Bracket {
    SpaceDescriptor lower;
    SpaceDescriptor upper;
    bool operator==(const Bracket&) const = default;
};

struct NoEmbedding {
    bool operator==(const NoEmbedding&) const = default;
};

using TargetPayload =
    std::variant<SpaceDescriptor, LogPowerForm, Bracket, NoEmbedding, bool>;

struct TargetReport {
    TargetPayload payload;
    bool optimal = false;
    bool not_glz = false;
    std::string case_line;  // stable id of the matched table row

    bool is_space() const { return std::holds_alternative<SpaceDescriptor>(payload); }
    bool is_form() const { return std::holds_alternative<LogPowerForm>(payload); }
    bool is_bracket() const { return std::holds_alternative<Bracket>(payload); }
    bool is_no_embedding() const { return std::holds_alternative<NoEmbedding>(payload); }
    bool is_bool() const { return std::holds_alternative<bool>(payload); }
    const SpaceDescriptor& space() const { return std::get<SpaceDescriptor>(payload); }
    const LogPowerForm& form() const { return std::get<LogPowerForm>(payload); }
    const Bracket& bracket() const { return std::get<Bracket>(payload); }
    bool value() const { return std::get<bool>(payload); }

    std::string to_json() const;
};

// Optimal rearrangement-invariant target of W^m X. Star spaces and the q=1
// double-star row give a Space with optimal=true; double-star rows with q>1
// give a Bracket with not_glz=true (the optimal target leaves the scale).
TargetReport ri_optimal_target(const EmbeddingQuery& q);

// Embedding into bounded continuous functions; payload is a bool.
TargetReport c0_embeds(const EmbeddingQuery& q);

// Optimal modulus of continuity (Form) or NoEmbedding.
TargetReport optimal_modulus(const EmbeddingQuery& q);

// Optimal admissible gauge of the Morrey target (always a Form).
TargetReport optimal_morrey(const EmbeddingQuery& q);

// Optimal admissible gauge of the Campanato target (always a Form).
TargetReport optimal_campanato(const EmbeddingQuery& q);

// Reduction-pipeline gauges with u = r^n and X' the associate space:
//   theta_m(r) = || s^{-1+m/n} chi_(0,u)(s) ||_{X'(0,1)}
//   rho_m(r)   = r || s^{-1+(m-1)/n} chi_(u,1)(s) ||_{X'(0,1)}
// Symbolic values are germs in r; numeric values clamp r to (0, 1/4].
LogPowerForm theta_symbolic(const EmbeddingQuery& q);
LogPowerForm rho_symbolic(const EmbeddingQuery& q);
double theta_numeric(const EmbeddingQuery& q, double r, const QuadratureConfig& cfg = {});
double rho_numeric(const EmbeddingQuery& q, double r, const QuadratureConfig& cfg = {});

enum class DeriveStatus { Form, DivergentOrNoLimit };

struct ModulusDerivation {
    DeriveStatus status = DeriveStatus::DivergentOrNoLimit;
    LogPowerForm form;  // meaningful only when status == Form
};

// sigma-hat via the proof pipeline: theta for m=1, theta+rho for 1<m<n, rho
// for m=n. DivergentOrNoLimit when a gauge diverges or fails to vanish.
ModulusDerivation derive_modulus_via_proof(const EmbeddingQuery& q);

// phi-tilde via the proof pipeline (1 <= m < n).
LogPowerForm derive_morrey_via_proof(const EmbeddingQuery& q);

// phi-hat via the proof pipeline: r^{1-n} phi_{X'}(r^n) for m=1, rho_m for
// 2 <= m <= n.
LogPowerForm derive_campanato_via_proof(const EmbeddingQuery& q);

// Fundamental function of the optimal rearrangement-invariant target's
// associate, from the head+tail split of || s^{m/n} chi_(0,r)** ||_{X'}.
LogPowerForm optimal_target_fundamental(const EmbeddingQuery& q);

enum class Comparison { Equal, Differs };

std::string comparison_str(Comparison c);

// Does the optimal Hoelder space coincide with the optimal Campanato space?
// Star spaces with 1 <= m <= n.
Comparison holder_campanato_compare(const EmbeddingQuery& q);

// Does the optimal Morrey space coincide with the optimal Campanato space?
// Requires 1 <= m < n.
Comparison morrey_campanato_compare(const EmbeddingQuery& q);

// Full report over all tables as a JSON object string.
std::string classify(const EmbeddingQuery& q);

}  // namespace glz
