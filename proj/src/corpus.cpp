#include "gconv/corpus.hpp"

#include <algorithm>

namespace gconv {

RSet random_set(Rng& rng, bool bounded) {
    std::int64_t n = rng.range(1, 5);
    std::vector<Interval> parts;
    for (std::int64_t i = 0; i < n; ++i) {
        if (rng.range(0, 5) == 0) {
            Rat p = rng.rat();
            parts.push_back(Interval{ExtRat(p), ExtRat(p), true, true});
            continue;
        }
        Rat a = rng.rat(), b = rng.rat();
        if (a == b) b = a + Rat(1, rng.range(1, 16));
        if (a > b) std::swap(a, b);
        bool lc = rng.coin(), hc = rng.coin();
        ExtRat lo(a), hi(b);
        if (!bounded && rng.range(0, 7) == 0) lo = ExtRat::neg_inf(), lc = false;
        if (!bounded && rng.range(0, 7) == 0) hi = ExtRat::pos_inf(), hc = false;
        parts.push_back(Interval{lo, hi, lc, hc});
    }
    RSet out(std::move(parts));
    if (out.is_empty()) return RSet::point(rng.rat());
    return out;
}

RSet random_open_set(Rng& rng) {
    std::int64_t n = rng.range(1, 4);
    std::vector<Interval> parts;
    for (std::int64_t i = 0; i < n; ++i) {
        Rat a = rng.rat(), b = rng.rat();
        if (a == b) b = a + Rat(1, rng.range(1, 16));
        if (a > b) std::swap(a, b);
        parts.push_back(Interval{ExtRat(a), ExtRat(b), false, false});
    }
    RSet out(std::move(parts));
    if (out.is_empty()) return RSet::open(Rat(0), Rat(1));
    return out;
}

RSet random_closed_set(Rng& rng, bool bounded) {
    return ordinary_closure(random_set(rng, bounded));
}

SeqSpec random_convergent_seq(Rng& rng) {
    std::vector<Rat> prefix;
    std::int64_t len = rng.range(0, 4);
    for (std::int64_t i = 0; i < len; ++i) prefix.push_back(rng.rat());
    return SeqSpec::eventually_constant(std::move(prefix), rng.rat());
}

DepthBox random_box(Rng& rng, std::int64_t max_depth) {
    std::int64_t depth = rng.range(1, max_depth);
    std::vector<RSet> factors;
    for (std::int64_t i = 0; i < depth; ++i) {
        // Half the boxes get lim-closed factors so that the closedness
        // direction of the product laws is actually exercised.
        factors.push_back(rng.coin() ? random_closed_set(rng) : random_set(rng));
    }
    SetFamily tail = SetFamily::constant(RSet::line());
    switch (rng.range(0, 3)) {
        case 0: tail = SetFamily::shifted_interval(Rat(rng.range(1, 8), 4), rng.coin(), rng.coin()); break;
        case 1: tail = SetFamily::constant(random_closed_set(rng)); break;
        default: break;
    }
    return DepthBox{depth, SetFamily::explicit_list(std::move(factors), std::move(tail))};
}

std::vector<SeqSpec> standard_corpus() {
    return {
        SeqSpec::constant(Rat(0)),
        SeqSpec::constant(Rat(3)),
        SeqSpec::eventually_constant({Rat(9), Rat(9)}, Rat(4)),
        SeqSpec::eventually_constant({Rat(-1, 2), Rat(7)}, Rat(1, 3)),
        SeqSpec::eventually_periodic({}, {Rat(0), Rat(1)}),
        SeqSpec::eventually_periodic({Rat(1)}, {Rat(2), Rat(3), Rat(4)}),
        SeqSpec::eventually_periodic({}, {Rat(1), Rat(1), Rat(2)}),
        SeqSpec::eventually_periodic({}, {Rat(-1), Rat(1)}),
        SeqSpec::spike_mix(Rat(0), Rat(1), IndexFamily::squares()),
        SeqSpec::spike_mix(Rat(2), Rat(-1), IndexFamily::powers_of_two()),
        SeqSpec::spike_mix(Rat(0), Rat(6), IndexFamily::ap(3, 3)),
        SeqSpec::spike_mix(Rat(1, 2), Rat(5, 2), IndexFamily::finite({2, 5})),
        SeqSpec::tabulated({Rat(5), Rat(7)},
                           SeqSpec::spike_mix(Rat(0), Rat(1), IndexFamily::squares())),
    };
}

std::vector<IndexFamily> standard_families() {
    return {
        IndexFamily::ap(1, 1), IndexFamily::ap(2, 2), IndexFamily::ap(1, 3),
        IndexFamily::squares(), IndexFamily::powers_of_two(),
    };
}

std::vector<SeqSpec> convergent_corpus(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<SeqSpec> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(random_convergent_seq(rng));
    return out;
}

std::vector<Rat> standard_shifts(std::size_t n) {
    std::vector<Rat> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(Rat(static_cast<std::int64_t>(k), 2) - Rat(5));
    return out;
}

}  // namespace gconv
