#pragma once

#include <optional>
#include <vector>

#include "gconv/method.hpp"
#include "gconv/rset.hpp"

namespace gconv {

// Brute-force achievability oracle for hull claims. Deliberately independent
// of the hull formulas: it builds A-valued witness sequences from the set
// alone and evaluates partial G-values term by term. A suite compares the
// two routes; this module never consults hull().

/// A witness sequence with exact rational terms, valued in the target set.
class OracleSeq {
public:
    /// x_n = c.
    static OracleSeq constant(Rat c);
    /// x_n = target + offset * 2^-min(n, 40): one-sided approach.
    static OracleSeq approach(Rat target, Rat offset);
    /// Two-value mix: beta_count betas spread evenly among the first n_total
    /// terms (Bresenham), alpha elsewhere.
    static OracleSeq mix2(Rat alpha, Rat beta, std::int64_t beta_count, std::int64_t n_total);
    /// Three-value mix: gamma_count gammas at the end, beta_count betas
    /// spread among the rest, alpha elsewhere.
    static OracleSeq mix3(Rat alpha, Rat beta, Rat gamma, std::int64_t beta_count,
                          std::int64_t gamma_count, std::int64_t n_total);

    Rat term(std::int64_t n) const;
    /// Exact mean of the first n_total terms (mix kinds only).
    std::optional<Rat> designed_mean() const;

private:
    enum class Kind { Constant, Approach, Mix2, Mix3 };
    Kind kind_ = Kind::Constant;
    Rat a_, b_, c_;
    std::int64_t beta_count_ = 0, gamma_count_ = 0, n_total_ = 0;
};

/// Partial G-evaluation of the first n terms: last term for lim, compensated
/// mean for cesaro, median for stat (density-robust).
double partial_eval(MethodSpec::Kind method, const OracleSeq& s, std::int64_t n);

/// Targeted witness constructions for achieving `target` with A-valued
/// sequences under the given method. Empty when the catalog has no
/// construction (the expected outcome for unachievable points).
std::vector<OracleSeq> build_constructions(MethodSpec::Kind method, const RSet& a,
                                           const Rat& target, std::int64_t n_terms);

/// True when every term of the construction lies in A (spot-checked exactly
/// on a deterministic index sample).
bool construction_valued_in(const OracleSeq& s, const RSet& a, std::int64_t n_terms);

}  // namespace gconv
