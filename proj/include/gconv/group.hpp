#pragma once

#include <vector>

#include "gconv/method.hpp"
#include "gconv/report.hpp"
#include "gconv/rset.hpp"
#include "gconv/topology.hpp"

namespace gconv {

// The group here is always (R, +), so everything multiplicative about group
// topology reads additively: xU becomes x + U, V^{-1} becomes -V, gx becomes
// g + x, and the neutral element is 0.

/// Fundamental system of G-open neighborhoods of 0. The standard base is
/// U_k = (-1/k, 1/k) for k = 1..count.
class NeighborhoodBase {
public:
    static NeighborhoodBase standard(std::int64_t count);
    static NeighborhoodBase explicit_list(std::vector<RSet> sets);

    std::int64_t count() const { return count_; }
    RSet at(std::int64_t k) const;  // 1-based
    bool standard_form() const { return explicit_.empty(); }

    /// Every U_k must be a G-open neighborhood of 0 and the family must be
    /// decreasing; a failing k is named in the error.
    void validate(const MethodSpec& m) const;

private:
    std::int64_t count_ = 0;
    std::vector<RSet> explicit_;
};

struct GroupAxiomReport {
    bool addition_continuous = false;
    bool negation_continuous = false;
    long pairs_checked = 0;
    long pairs_skipped = 0;  // sums not representable in the catalog
    std::string detail;
};

/// G(x + y) = G(x) + G(y) and G(-x) = -G(x), exactly, on in-domain pairs.
GroupAxiomReport check_group_axioms(const MethodSpec& m,
                                    const std::vector<std::pair<SeqSpec, SeqSpec>>& pairs);

/// U intersect -U: the symmetric core of a neighborhood of 0.
RSet symmetrize(const RSet& u);

/// -U is G-open and V = U intersect -U satisfies -V inside U.
Report check_inverse_open(const MethodSpec& m, const RSet& u);

/// G(x + a) = G(x) + a per corpus element and shift; divergent sequences
/// must stay divergent. Left and right translations coincide on (R, +).
Report check_translations(const MethodSpec& m, const std::vector<SeqSpec>& corpus,
                          const std::vector<Rat>& shifts);

/// x + U is a G-open neighborhood of x.
Report check_translated_base(const MethodSpec& m, const RSet& u, const Rat& x);

/// Pairwise (and three-way) intersections of G-open sets are G-open. For
/// methods that fail the standing assumption this produces the documented
/// counterexample instead of a pass.
struct GTopologyReport {
    std::string method;
    long opens_tested = 0;
    bool intersections_open = false;
    std::optional<RSet> counter_u, counter_v, counter_uv, counter_kernel;
};
GTopologyReport check_topology(const MethodSpec& m, const std::vector<RSet>& opens);

/// A + U is G-open when U is.
Report check_AU_open(const MethodSpec& m, const RSet& a, const RSet& u);

/// G-closure of A is contained in A + U for a G-open neighborhood U of 0.
Report check_closure_bound(const MethodSpec& m, const RSet& a, const RSet& u);

/// Truncated base intersection I_K = intersect_{k<=K} (A + U_k): the
/// G-closure is contained in every I_k, and for the standard base the
/// Hausdorff gap between I_K and the closure is at most 1/K. Equality holds
/// only in the limit and is never asserted at finite K.
Report closure_via_base(const MethodSpec& m, const RSet& a, const NeighborhoodBase& base);

/// Symmetric sets have symmetric G-closures.
Report check_symmetric_closure(const MethodSpec& m, const RSet& a);

/// Membership in the G-closure iff every translated base neighborhood of x
/// meets A; the reverse direction at finite K is the gap bound dist <= 1/k.
Report check_neighborhood_criterion(const MethodSpec& m, const RSet& a, const Rat& x,
                                    const NeighborhoodBase& base);

/// Kernel membership vs eventual containment; subgroup open/closed laws on
/// the representable subgroups {0} and R; homomorphism continuity. For
/// methods failing the standing assumption this bundles the counterexamples
/// and names the claims that fall outside the hypothesis.
Report hypothesis_necessity_suite(const MethodSpec& m);

}  // namespace gconv
