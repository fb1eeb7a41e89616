#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gconv/rat.hpp"

namespace gconv {

/// One interval of the extended real line. Endpoints at +-inf are always
/// open; a degenerate interval (lo == hi) is a singleton and has both
/// endpoints closed.
struct Interval {
    ExtRat lo;
    ExtRat hi;
    bool lo_closed = false;
    bool hi_closed = false;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// A finite union of pairwise-disjoint, non-adjacent intervals with exact
/// rational endpoints, kept sorted and normalized. This is the representable
/// class of subsets of the real line: every operation below is exact.
class RSet {
public:
    RSet() = default;

    /// Normalizing constructor: drops empty pieces, sorts, merges overlaps
    /// and adjacencies ([0,1] u (1,2) becomes [0,2)).
    explicit RSet(std::vector<Interval> parts);

    static RSet empty() { return RSet(); }
    static RSet line();
    static RSet point(const Rat& p);
    static RSet interval(const ExtRat& lo, bool lo_closed, const ExtRat& hi, bool hi_closed);
    /// Bounded interval shorthand.
    static RSet interval(const Rat& lo, bool lo_closed, const Rat& hi, bool hi_closed);
    static RSet closed(const Rat& lo, const Rat& hi) { return interval(lo, true, hi, true); }
    static RSet open(const Rat& lo, const Rat& hi) { return interval(lo, false, hi, false); }

    const std::vector<Interval>& parts() const { return parts_; }
    bool is_empty() const { return parts_.empty(); }
    bool is_line() const;

    bool contains(const Rat& p) const;
    bool subset_of(const RSet& other) const;

    std::size_t component_count() const { return parts_.size(); }
    /// Ordinary connected components, left to right, each as an RSet.
    std::vector<RSet> components() const;

    /// inf/sup; std::nullopt for the empty set (a distinguished "empty"
    /// outcome, never a number).
    std::optional<ExtRat> inf() const;
    std::optional<ExtRat> sup() const;
    bool bounded() const;

    friend bool operator==(const RSet& a, const RSet& b) { return a.parts_ == b.parts_; }

    std::string str() const;

private:
    std::vector<Interval> parts_;  // normalized
};

// -- set algebra (exact, results normalized) --------------------------------

RSet set_union(const RSet& a, const RSet& b);
RSet set_intersect(const RSet& a, const RSet& b);
RSet set_complement(const RSet& a);
RSet set_difference(const RSet& a, const RSet& b);

// -- group structure of (R, +) ----------------------------------------------

/// Minkowski sum { a + b : a in A, b in B }. A sum endpoint is closed iff
/// both contributing endpoints are closed and finite.
RSet minkowski_sum(const RSet& a, const RSet& b);
RSet set_negate(const RSet& a);
RSet set_translate(const RSet& a, const Rat& g);
/// Image under x -> a*x + b (a == 0 collapses nonempty sets to {b}).
RSet affine_image(const RSet& s, const Rat& a, const Rat& b);

// -- ordinary (Euclidean) topology -------------------------------------------

RSet ordinary_closure(const RSet& a);
RSet ordinary_interior(const RSet& a);
bool is_closed_ordinary(const RSet& a);
bool is_open_ordinary(const RSet& a);
/// Empty and single-component sets count as connected.
bool is_connected_ordinary(const RSet& a);

// -- metric helpers -----------------------------------------------------------

/// Exact distance from a point to a nonempty set; nullopt when empty.
std::optional<Rat> distance(const Rat& p, const RSet& a);

/// Directed Hausdorff gap sup_{x in B} dist(x, C) as an extended rational.
/// Zero when B is empty; +inf when B is nonempty and C is empty or fails to
/// track an unbounded side of B.
ExtRat hausdorff_gap(const RSet& b, const RSet& c);

}  // namespace gconv
