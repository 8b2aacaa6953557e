#pragma once

#include "qqwalk/graph.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace qqwalk
{

/**
 * A quaternion attached to every arc of D(G), indexed like Graph::arcs().
 *
 * Serves both as the coin map q of the walk and as the general weight w of
 * the weighted zeta matrices.
 */
class ArcWeights
{
public:
    explicit ArcWeights(std::vector<Quaternion> per_arc) : values_(std::move(per_arc)) {}

    /// q(e) := value[o(e)].
    static ArcWeights per_vertex(const Graph& g, std::span<const Quaternion> value);
    /// q(e) := α / d_{o(e)}.
    static ArcWeights alpha_coin(const Graph& g, const Quaternion& alpha);
    /// q(e) := 2 / d_{o(e)}.
    static ArcWeights grover(const Graph& g) { return alpha_coin(g, 2.0); }
    static ArcWeights constant(const Graph& g, const Quaternion& value);

    const Quaternion& operator[](int arc) const { return values_.at(static_cast<std::size_t>(arc)); }
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const Quaternion> values() const noexcept { return values_; }

    /// Every weight has vanishing j and k parts.
    bool is_complex(double tol = 0.0) const noexcept;

private:
    std::vector<Quaternion> values_;
};

using CoinMap = ArcWeights;
using WeightMap = ArcWeights;

/**
 * Coin/weight text: lines `v <vertex> <quaternion>` or `a <arc> <quaternion>`,
 * one kind per file, '#' comments. Unlisted arcs get 0. Throws ParseError.
 */
ArcWeights parse_coin(std::string_view text, const Graph& g);

/// 2m×2m Grover matrix: 2/d_{o(e)} if t(f) = o(e), f ≠ e⁻¹; 2/d_{o(e)} − 1 if f = e⁻¹.
QuatMatrix grover_matrix(const Graph& g);

/// U_ef = q(e) if t(f) = o(e) and f ≠ e⁻¹; q(e) − 1 if f = e⁻¹; 0 otherwise.
QuatMatrix build_U(const Graph& g, const CoinMap& q);

struct UnitarityCheck
{
    bool holds = false;
    bool quadratic_ok = false;       // q0² + q1² + q2² + q3² − 2q0/d_{o(e)} = 0 on every arc
    bool origin_constant = false;    // q(e) = q(f) whenever o(e) = o(f)
    double quadratic_residual = 0.0;
    double origin_spread = 0.0;

    explicit operator bool() const noexcept { return holds; }
};

/// Closed-form unitarity test for build_U(g, q).
UnitarityCheck unitarity_condition(const Graph& g, const CoinMap& q, double tol = 1e-9);

/// B_ef = [t(e) = o(f)], J0_ef = [f = e⁻¹].
std::pair<QuatMatrix, QuatMatrix> build_B_and_J0(const Graph& g);

/// (B_w)_ef = w(f) if t(e) = o(f).
QuatMatrix build_Bw(const Graph& g, const WeightMap& w);

/// 2m×n factors with K_ev = w(e)[o(e) = v] and L_ev = [t(e) = v], so that
/// ᵀB_w = K·ᵀL and ᵀW = ᵀL·K.
std::pair<QuatMatrix, QuatMatrix> build_K_L(const Graph& g, const WeightMap& w);

/// W_uv = w((u, v)) on arcs, D_w = diag(Σ_{o(e)=u} w(e)).
std::pair<QuatMatrix, QuatMatrix> build_W_Dw(const Graph& g, const WeightMap& w);

struct QuatCondResult
{
    bool holds = false;                  // Σ_{o(e)=u} q(e) independent of u
    std::optional<Quaternion> alpha;     // the common sum when holds
    double spread = 0.0;                 // max distance of a vertex sum from vertex 0's
    bool commutes = false;               // ᵀW·D_w = D_w·ᵀW within tol
    double commutator = 0.0;
};

QuatCondResult quat_cond_check(const Graph& g, const CoinMap& q, double tol = 1e-9);

} // namespace qqwalk
