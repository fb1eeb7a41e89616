#pragma once

#include <cstdint>
#include <vector>

#include "gconv/method.hpp"
#include "gconv/product.hpp"
#include "gconv/rset.hpp"
#include "gconv/seq.hpp"

namespace gconv {

/// Deterministic splitmix64 generator: suite results must be reproducible
/// from the seed alone, across platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// Uniform in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool coin() { return next() & 1; }

    /// Random rational with denominator <= 16 and magnitude <= 32 (the fixed
    /// generator the oracle tolerances are calibrated against).
    Rat rat() {
        std::int64_t q = range(1, 16);
        return Rat(range(-32 * q, 32 * q), q);
    }
    Rat rat_in(std::int64_t lo, std::int64_t hi) {
        std::int64_t q = range(1, 16);
        return Rat(range(lo * q, hi * q), q);
    }

private:
    std::uint64_t state_;
};

/// Random finite union of up to 5 intervals (always nonempty, optionally
/// bounded), rational endpoints of denominator <= 16, magnitudes <= 32.
RSet random_set(Rng& rng, bool bounded = true);
/// Variant with only open intervals (useful as tau_G inputs under lim).
RSet random_open_set(Rng& rng);
/// Variant with all finite endpoints closed (G-closed under lim).
RSet random_closed_set(Rng& rng, bool bounded = true);

SeqSpec random_convergent_seq(Rng& rng);
DepthBox random_box(Rng& rng, std::int64_t max_depth = 4);

/// The fixed mixed corpus the trait checkers run against.
std::vector<SeqSpec> standard_corpus();
/// The fixed infinite index families paired with it.
std::vector<IndexFamily> standard_families();
/// n eventually-constant sequences, deterministic in the seed.
std::vector<SeqSpec> convergent_corpus(std::size_t n, std::uint64_t seed);
/// The fixed shifts used by translate-regularity checks.
std::vector<Rat> standard_shifts(std::size_t n = 20);

}  // namespace gconv
