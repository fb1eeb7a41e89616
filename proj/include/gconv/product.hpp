#pragma once

#include <memory>
#include <vector>

#include "gconv/method.hpp"
#include "gconv/report.hpp"
#include "gconv/rset.hpp"
#include "gconv/topology.hpp"

namespace gconv {

/// Factor rule of a countable product set: gives an RSet for every index
/// i >= 1. ShiftedInterval is the moving window (i - r, i + r) with
/// configurable endpoint flags; Explicit lists the first factors and defers
/// to another rule beyond them.
class SetFamily {
public:
    enum class Rule { Constant, ShiftedInterval, Explicit };

    static SetFamily constant(RSet a);
    static SetFamily shifted_interval(Rat radius, bool lo_closed, bool hi_closed);
    static SetFamily explicit_list(std::vector<RSet> front, SetFamily beyond);

    Rule rule() const { return rule_; }
    const RSet& constant_set() const { return constant_; }
    const Rat& radius() const { return radius_; }
    bool lo_closed() const { return lo_closed_; }
    bool hi_closed() const { return hi_closed_; }
    const std::vector<RSet>& front() const { return front_; }
    const SetFamily& beyond() const { return *beyond_; }

    RSet factor(std::int64_t i) const;

    friend bool operator==(const SetFamily& a, const SetFamily& b);

    std::string str() const;

private:
    SetFamily() = default;
    Rule rule_ = Rule::Constant;
    RSet constant_;
    Rat radius_;
    bool lo_closed_ = false, hi_closed_ = false;
    std::vector<RSet> front_;
    std::shared_ptr<SetFamily> beyond_;
};

/// A product set over R^N: explicit factors up to `depth`, rule beyond.
struct DepthBox {
    std::int64_t depth = 1;
    SetFamily factors = SetFamily::constant(RSet::line());

    RSet factor(std::int64_t i) const { return factors.factor(i); }
    friend bool operator==(const DepthBox&, const DepthBox&);
    std::string str() const;
};

/// A single point of R^N given by a per-index rule.
class PointSeq {
public:
    enum class Rule { Linear, Reciprocal, Explicit };

    /// i -> a*i + b (covers constants and the identity).
    static PointSeq linear(Rat a, Rat b);
    static PointSeq constant(Rat c) { return linear(Rat(0), c); }
    static PointSeq identity() { return linear(Rat(1), Rat(0)); }
    /// i -> c / i.
    static PointSeq reciprocal(Rat c);
    static PointSeq explicit_list(std::vector<Rat> front, Rat beyond);

    Rat at(std::int64_t i) const;
    Rule rule() const { return rule_; }

    friend bool operator==(const PointSeq&, const PointSeq&) = default;

    std::string str() const;

private:
    Rule rule_ = Rule::Linear;
    Rat a_, b_, c_;
    std::vector<Rat> front_;
    Rat beyond_;
};

/// A sequence of points of R^N, described by the closed-form coordinate
/// traces n -> (x^n)_i. Catalog:
///   PerCoordinate  independent trace per coordinate, one rule beyond
///   Example33      (x^n)_i = i except (x^n)_n = 0
///   Sigma          (y^n)_i = x_i for i <= n, a_i beyond (finite completion)
class ProdSeq {
public:
    enum class Kind { PerCoordinate, Example33, Sigma };

    static ProdSeq per_coordinate(std::vector<SeqSpec> front, SeqSpec beyond);
    static ProdSeq example33();
    static ProdSeq sigma(PointSeq a, PointSeq x);

    Kind kind() const { return kind_; }
    const PointSeq& sigma_a() const { return a_; }
    const PointSeq& sigma_x() const { return x_; }

    /// The coordinate trace n -> (x^n)_i as a catalog sequence.
    SeqSpec coordinate_trace(std::int64_t i) const;
    /// Term access: coordinate i of the n-th point.
    Rat at(std::int64_t n, std::int64_t i) const { return coordinate_trace(i).eval(n); }

    std::string str() const;

private:
    ProdSeq() : a_(PointSeq::constant(Rat(0))), x_(PointSeq::constant(Rat(0))) {}
    Kind kind_ = Kind::Example33;
    std::vector<SeqSpec> front_;
    std::shared_ptr<SeqSpec> beyond_;
    PointSeq a_, x_;
};

// -- product method operators -------------------------------------------------

/// Coordinatewise G-limits at indices 1..depth. In the product domain iff
/// every coordinate trace is in the factor domain.
std::vector<LimitResult> product_limit(const MethodSpec& m, const ProdSeq& s, std::int64_t depth);
bool product_in_domain(const MethodSpec& m, const ProdSeq& s, std::int64_t depth);

/// Componentwise hull, including the symbolic transform of the tail rule.
DepthBox box_hull(const MethodSpec& m, const DepthBox& b);
/// Every factor (explicit and rule tail) G-closed.
bool box_closed(const MethodSpec& m, const DepthBox& b);
/// Componentwise kernel at explicit depth, full-line tail required. Only
/// sound under the preserves-subsequences hypothesis, and refused otherwise;
/// the componentwise formula is demonstrably false for genuinely infinite
/// products (see example33_scenario).
DepthBox box_kernel(const MethodSpec& m, const DepthBox& b);

// -- named scenarios and law suites -------------------------------------------

/// The kernel-product inequality witnessed at explicit depth D >= 2:
/// factors A_i = (i - 1/4, i + 1/4), target point y_i = i, and the deviating
/// family whose n-th point leaves A at exactly index n.
Report example33_scenario(std::int64_t depth);

/// Finite-completion approximation: (y^n)_i = x_i for i <= n, a_i beyond.
/// Verifies traces settle at x, the product limit is x, and each y^n differs
/// from a in only finitely many coordinates.
Report sigma_density_scenario(std::int64_t depth, const PointSeq& a, const PointSeq& x);

/// Projection laws: limit interchange, G-closed image, G-closed preimage.
Report projection_suite(const MethodSpec& m, std::int64_t depth,
                        const std::vector<ProdSeq>& corpus, const std::vector<DepthBox>& boxes);

/// Factorwise criterion: the product is G-connected iff every factor is.
Report product_connectedness(const MethodSpec& m, const std::vector<RSet>& factors);

}  // namespace gconv
