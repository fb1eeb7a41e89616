#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gconv/rat.hpp"
#include "gconv/rset.hpp"

namespace gconv {

/// Raised when an operation would leave the closed-form sequence catalog
/// (e.g. extracting a subsequence whose spike pattern is no longer
/// expressible). Callers that probe many combinations catch and count these.
struct Unrepresentable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An index set of positive integers with exactly computable natural density.
class IndexFamily {
public:
    enum class Kind { Squares, PowersOfTwo, AP, Finite };

    static IndexFamily squares() { return IndexFamily(Kind::Squares); }
    static IndexFamily powers_of_two() { return IndexFamily(Kind::PowersOfTwo); }
    static IndexFamily ap(std::int64_t first, std::int64_t step);
    static IndexFamily finite(std::vector<std::int64_t> elems);

    Kind kind() const { return kind_; }
    std::int64_t first() const { return first_; }
    std::int64_t step() const { return step_; }
    const std::vector<std::int64_t>& elems() const { return elems_; }

    bool contains(std::int64_t n) const;
    bool infinite() const { return kind_ != Kind::Finite; }
    /// k-th element (1-based) of an infinite family.
    std::int64_t nth(std::int64_t k) const;

    Rat natural_density() const;

    friend bool operator==(const IndexFamily&, const IndexFamily&) = default;

    std::string str() const;

private:
    explicit IndexFamily(Kind k) : kind_(k) {}
    Kind kind_;
    std::int64_t first_ = 1, step_ = 1;     // AP
    std::vector<std::int64_t> elems_;       // Finite, sorted ascending
};

bool is_perfect_square(std::int64_t n);
bool is_power_of_two(std::int64_t n);

/// A symbolic real-valued sequence (x_n), n >= 1, from the closed-form
/// catalog. Constructors accept the four surface variants; values are stored
/// in one of three canonical shapes so that structural equality of canonical
/// forms implies extensional equality:
///
///   Periodic       prefix + primitive cycle, prefix maximally trimmed
///                  (eventually constant == cycle length 1; finite and
///                  arithmetic-progression spike patterns fold in here)
///   Spike          base/spike over squares or powers of two, base != spike
///   TabulatedSpike finitely many explicit front values over a Spike, with
///                  redundant trailing values trimmed
class SeqSpec {
public:
    enum class Kind { Periodic, Spike, TabulatedSpike };

    static SeqSpec eventually_constant(std::vector<Rat> prefix, Rat tail);
    static SeqSpec eventually_periodic(std::vector<Rat> prefix, std::vector<Rat> cycle);
    static SeqSpec spike_mix(Rat base, Rat spike, IndexFamily where);
    static SeqSpec tabulated(std::vector<Rat> values, const SeqSpec& beyond);
    static SeqSpec constant(Rat value) { return eventually_constant({}, value); }

    Kind kind() const { return kind_; }
    const std::vector<Rat>& prefix() const { return prefix_; }
    const std::vector<Rat>& cycle() const { return cycle_; }
    const Rat& base() const { return base_; }
    const Rat& spike() const { return spike_; }
    const IndexFamily& where() const { return where_; }
    const std::vector<Rat>& values() const { return prefix_; }  // TabulatedSpike front

    /// Exact n-th term, n >= 1.
    Rat eval(std::int64_t n) const;

    /// True when the sequence converges ordinarily (canonical cycle length 1).
    bool eventually_constant_value(Rat* out = nullptr) const;

    /// The finitely many distinct values the tail can take.
    std::vector<Rat> tail_values() const;
    /// Index after which only tail values occur.
    std::int64_t head_length() const;

    /// All but finitely many terms lie in A (decided exactly).
    bool almost_in(const RSet& a) const;
    /// Every term lies in A (decided exactly).
    bool range_in(const RSet& a) const;

    friend bool operator==(const SeqSpec&, const SeqSpec&) = default;

    std::string str() const;

private:
    SeqSpec() : where_(IndexFamily::squares()) {}

    static SeqSpec make_periodic(std::vector<Rat> prefix, std::vector<Rat> cycle);

    Kind kind_ = Kind::Periodic;
    std::vector<Rat> prefix_;   // Periodic prefix / TabulatedSpike front values
    std::vector<Rat> cycle_;    // Periodic only, nonempty primitive cycle
    Rat base_, spike_;          // Spike / TabulatedSpike
    IndexFamily where_;
};

struct SeqMap {
    enum class Kind { Translate, Negate, Affine };
    Kind kind = Kind::Translate;
    Rat a;  // Affine scale
    Rat b;  // Translate shift / Affine offset

    static SeqMap translate(Rat g) { return {Kind::Translate, Rat(1), g}; }
    static SeqMap negate() { return {Kind::Negate, Rat(-1), Rat(0)}; }
    static SeqMap affine(Rat a, Rat b) { return {Kind::Affine, a, b}; }

    Rat apply(const Rat& x) const;
};

/// Pointwise image of the sequence, same catalog.
SeqSpec transform(const SeqSpec& s, const SeqMap& map);

/// Subsequence (x_{n_k}) along an infinite index family, in closed form.
/// Throws Unrepresentable for spike/family combinations that leave the
/// catalog, and std::invalid_argument for finite families.
SeqSpec subsequence(const SeqSpec& s, const IndexFamily& along);

/// Pointwise sum when representable in the catalog.
std::optional<SeqSpec> try_add(const SeqSpec& a, const SeqSpec& b);

}  // namespace gconv
