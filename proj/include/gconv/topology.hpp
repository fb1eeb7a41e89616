#pragma once

#include <optional>

#include "gconv/method.hpp"
#include "gconv/report.hpp"
#include "gconv/rset.hpp"

namespace gconv {

/// G-hull of a representable set, by the verified closed forms:
///   lim, stat -> ordinary closure
///   cesaro    -> smallest closed interval containing A (unbounded ends open)
/// Matrix methods have no closed-form hull and are rejected; the
/// achievability oracle (oracle.hpp) is the tool for those.
RSet hull(const MethodSpec& m, const RSet& a);

/// G-kernel: complement of the hull of the complement.
RSet kernel(const MethodSpec& m, const RSet& a);

bool is_g_closed(const MethodSpec& m, const RSet& a);
bool is_g_open(const MethodSpec& m, const RSet& a);

/// Smallest G-closed superset, as the fixed point of hull iteration
/// (guarded at 8 rounds; the shipped methods converge in one).
RSet g_closure(const MethodSpec& m, const RSet& a);
/// Largest G-open subset, as the fixed point of kernel iteration.
RSet g_interior(const MethodSpec& m, const RSet& a);
bool is_g_dense(const MethodSpec& m, const RSet& a);

/// F is G-closed in A: some G-closed K has F = K intersect A. Decided via
/// the smallest G-closed superset of F, which is exact for methods whose
/// hull is a closure operator on the representable class.
bool is_relatively_g_closed(const MethodSpec& m, const RSet& f, const RSet& a);

struct ConnectednessReport {
    bool connected = false;
    std::optional<RSet> separation_f;
    std::optional<RSet> separation_k;
    long splits_examined = 0;
};

/// Searches for a partition of A into two nonempty disjoint relatively
/// G-closed pieces, at ordinary-component granularity. Requires (and
/// asserts at runtime) that the method's hull outputs are topologically
/// closed, which pins any separation to whole components.
ConnectednessReport is_g_connected(const MethodSpec& m, const RSet& a);

/// Union of G-connected sets with a common point is G-connected.
Report connectedness_union_law(const MethodSpec& m, const std::vector<RSet>& family);
/// G-continuous affine image of a G-connected set is G-connected.
Report connectedness_image_law(const MethodSpec& m, const Rat& scale, const Rat& offset,
                               const RSet& a);

}  // namespace gconv
