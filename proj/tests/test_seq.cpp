#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gconv/parser.hpp"
#include "gconv/seq.hpp"

using namespace gconv;

TEST_CASE("term access per variant") {
    CHECK(SeqSpec::eventually_constant({Rat(5)}, Rat(3)).eval(1) == Rat(5));
    CHECK(SeqSpec::eventually_constant({Rat(5)}, Rat(3)).eval(2) == Rat(3));
    CHECK(SeqSpec::eventually_periodic({}, {Rat(0), Rat(1)}).eval(4) == Rat(1));
    auto spike = SeqSpec::spike_mix(Rat(0), Rat(1), IndexFamily::squares());
    CHECK(spike.eval(9) == Rat(1));
    CHECK(spike.eval(10) == Rat(0));
    CHECK_THROWS_AS(spike.eval(0), std::invalid_argument);
}

TEST_CASE("index family membership and enumeration") {
    auto sq = IndexFamily::squares();
    CHECK(sq.contains(1));
    CHECK(sq.contains(65536));
    CHECK(!sq.contains(65537));
    CHECK(sq.nth(5) == 25);
    auto p2 = IndexFamily::powers_of_two();
    CHECK(p2.contains(1));
    CHECK(p2.contains(1024));
    CHECK(!p2.contains(1023));
    CHECK(p2.nth(1) == 1);
    auto ap = IndexFamily::ap(2, 2);
    CHECK(ap.contains(4));
    CHECK(!ap.contains(5));
    CHECK(!ap.contains(1));
    CHECK(ap.nth(3) == 6);
    auto fin = IndexFamily::finite({3, 1, 3});
    CHECK(fin.contains(1));
    CHECK(!fin.contains(2));
    CHECK_THROWS_AS(IndexFamily::ap(0, 1), std::invalid_argument);
}

TEST_CASE("natural densities") {
    CHECK(IndexFamily::finite({1, 2, 3}).natural_density() == Rat(0));
    CHECK(IndexFamily::ap(2, 2).natural_density() == Rat(1, 2));
    CHECK(IndexFamily::squares().natural_density() == Rat(0));
    CHECK(IndexFamily::powers_of_two().natural_density() == Rat(0));
    // d(AP(a,d)) * d = 1 exactly
    for (std::int64_t d = 1; d <= 16; ++d)
        CHECK(IndexFamily::ap(3, d).natural_density() * Rat(d) == Rat(1));
}

TEST_CASE("counting oracle confirms the densities") {
    // |{n <= N : n in F}| / N at N = 10^6
    const std::int64_t N = 1000000;
    auto count = [&](const IndexFamily& f) {
        std::int64_t c = 0;
        for (std::int64_t n = 1; n <= N; ++n)
            if (f.contains(n)) ++c;
        return static_cast<double>(c) / static_cast<double>(N);
    };
    CHECK(count(IndexFamily::ap(2, 2)) == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(count(IndexFamily::squares()) == doctest::Approx(0.0).epsilon(1e-2));
    CHECK(count(IndexFamily::squares()) <= 0.001);
    CHECK(count(IndexFamily::powers_of_two()) <= 0.0001);
    CHECK(count(IndexFamily::finite({1, 2, 3})) <= 0.00001);
    CHECK(count(IndexFamily::ap(5, 7)) == doctest::Approx(1.0 / 7).epsilon(1e-5));
}

TEST_CASE("normalization canonicalizes") {
    // eventually-constant is the cycle-length-1 periodic case
    auto a = SeqSpec::eventually_constant({}, Rat(3));
    auto b = SeqSpec::eventually_periodic({}, {Rat(3), Rat(3)});
    CHECK(a == b);
    // redundant prefix entries are trimmed
    auto c = SeqSpec::eventually_periodic({Rat(1)}, {Rat(0), Rat(1)});
    auto d = SeqSpec::eventually_periodic({}, {Rat(1), Rat(0)});
    CHECK(c == d);
    // finite spikes fold into a periodic form
    auto e = SeqSpec::spike_mix(Rat(0), Rat(9), IndexFamily::finite({2}));
    CHECK(e == SeqSpec::eventually_constant({Rat(0), Rat(9)}, Rat(0)));
    // equal base and spike collapse
    CHECK(SeqSpec::spike_mix(Rat(1, 2), Rat(1, 2), IndexFamily::squares()) ==
          SeqSpec::constant(Rat(1, 2)));
    // AP spikes are eventually periodic
    auto f = SeqSpec::spike_mix(Rat(0), Rat(6), IndexFamily::ap(3, 3));
    CHECK(f.kind() == SeqSpec::Kind::Periodic);
    CHECK(f.eval(3) == Rat(6));
    CHECK(f.eval(4) == Rat(0));
    CHECK(f.eval(6) == Rat(6));
    // tabulated trims values that repeat the underlying rule
    auto spike = SeqSpec::spike_mix(Rat(0), Rat(1), IndexFamily::squares());
    CHECK(SeqSpec::tabulated({Rat(1)}, spike) == spike);
    CHECK(SeqSpec::tabulated({Rat(7)}, spike).kind() == SeqSpec::Kind::TabulatedSpike);
}

TEST_CASE("normalization preserves every term") {
    auto raw_eval = [](const std::vector<Rat>& prefix, const std::vector<Rat>& cycle,
                       std::int64_t n) {
        if (n <= static_cast<std::int64_t>(prefix.size()))
            return prefix[static_cast<std::size_t>(n - 1)];
        auto m = static_cast<std::int64_t>(cycle.size());
        return cycle[static_cast<std::size_t>((n - static_cast<std::int64_t>(prefix.size()) - 1) % m)];
    };
    std::vector<Rat> prefix = {Rat(2), Rat(0), Rat(1), Rat(0)};
    std::vector<Rat> cycle = {Rat(1), Rat(0), Rat(1), Rat(0)};
    auto s = SeqSpec::eventually_periodic(prefix, cycle);
    for (std::int64_t n = 1; n <= 10000; ++n) CHECK(s.eval(n) == raw_eval(prefix, cycle, n));
}

TEST_CASE("range membership decided from the closed form") {
    auto per01 = SeqSpec::eventually_periodic({}, {Rat(0), Rat(1)});
    CHECK(per01.range_in(parse_set("[0,1]")));
    CHECK(!SeqSpec::spike_mix(Rat(0), Rat(1), IndexFamily::squares())
               .range_in(parse_set("(1/2,2)")));
    CHECK(!SeqSpec::eventually_constant({Rat(2)}, Rat(0)).range_in(parse_set("(-1,1)")));
    // range_in matches a finite term scan
    auto tab = SeqSpec::tabulated({Rat(5), Rat(7)},
                                  SeqSpec::spike_mix(Rat(0), Rat(1), IndexFamily::squares()));
    RSet a = parse_set("[0,10]");
    bool all = true;
    for (std::int64_t n = 1; n <= 2000; ++n) all = all && a.contains(tab.eval(n));
    CHECK(tab.range_in(a) == all);
}

TEST_CASE("almost_in ignores the head") {
    auto s = SeqSpec::eventually_constant({Rat(100)}, Rat(0));
    CHECK(s.almost_in(parse_set("(-1,1)")));
    CHECK(!s.range_in(parse_set("(-1,1)")));
    auto spike = SeqSpec::spike_mix(Rat(0), Rat(1), IndexFamily::squares());
    CHECK(!spike.almost_in(parse_set("(-1/2,1/2)")));  // spikes recur
    CHECK(spike.almost_in(parse_set("[0,1]")));
}

TEST_CASE("transforms act pointwise in the same class") {
    auto per01 = SeqSpec::eventually_periodic({}, {Rat(0), Rat(1)});
    CHECK(transform(per01, SeqMap::translate(Rat(3))) ==
          SeqSpec::eventually_periodic({}, {Rat(3), Rat(4)}));
    CHECK(transform(SeqSpec::constant(Rat(5)), SeqMap::negate()) == SeqSpec::constant(Rat(-5)));
    auto spike = SeqSpec::spike_mix(Rat(0), Rat(1), IndexFamily::squares());
    CHECK(transform(spike, SeqMap::affine(Rat(2), Rat(1))) ==
          SeqSpec::spike_mix(Rat(1), Rat(3), IndexFamily::squares()));
    // exact pointwise equality on sampled indices
    auto mapped = transform(spike, SeqMap::affine(Rat(-3), Rat(1, 2)));
    for (std::int64_t n = 1; n <= 500; ++n)
        CHECK(mapped.eval(n) == Rat(-3) * spike.eval(n) + Rat(1, 2));
    // affine collapse to a constant
    CHECK(transform(spike, SeqMap::affine(Rat(0), Rat(9))) == SeqSpec::constant(Rat(9)));
}

TEST_CASE("subsequences stay in the catalog where contracted") {
    auto per01 = SeqSpec::eventually_periodic({}, {Rat(0), Rat(1)});
    CHECK(subsequence(per01, IndexFamily::ap(2, 2)) == SeqSpec::constant(Rat(1)));
    auto spike = SeqSpec::spike_mix(Rat(0), Rat(1), IndexFamily::squares());
    CHECK(subsequence(spike, IndexFamily::squares()) == SeqSpec::constant(Rat(1)));
    auto s = SeqSpec::eventually_constant({Rat(7)}, Rat(3));
    CHECK(subsequence(s, IndexFamily::ap(1, 1)) == s);
    CHECK_THROWS_AS(subsequence(per01, IndexFamily::finite({1, 2})), std::invalid_argument);
}

TEST_CASE("subsequence closed forms match direct sampling") {
    std::vector<SeqSpec> seqs = {
        SeqSpec::eventually_periodic({Rat(9)}, {Rat(0), Rat(1), Rat(2)}),
        SeqSpec::eventually_periodic({}, {Rat(1), Rat(4)}),
        SeqSpec::eventually_constant({Rat(1), Rat(2), Rat(3)}, Rat(0)),
        SeqSpec::spike_mix(Rat(0), Rat(1), IndexFamily::squares()),
        SeqSpec::spike_mix(Rat(2), Rat(-1), IndexFamily::powers_of_two()),
        SeqSpec::tabulated({Rat(8), Rat(8), Rat(8)},
                           SeqSpec::spike_mix(Rat(0), Rat(1), IndexFamily::squares())),
    };
    std::vector<IndexFamily> fams = {IndexFamily::ap(1, 1),  IndexFamily::ap(2, 2),
                                     IndexFamily::ap(3, 5),  IndexFamily::squares(),
                                     IndexFamily::powers_of_two()};
    for (const auto& s : seqs) {
        for (const auto& f : fams) {
            SeqSpec sub = SeqSpec::constant(Rat(0));
            try {
                sub = subsequence(s, f);
            } catch (const Unrepresentable&) {
                continue;
            }
            for (std::int64_t k = 1; k <= 40; ++k) {
                if (f.kind() == IndexFamily::Kind::PowersOfTwo && k > 35) break;
                CHECK(sub.eval(k) == s.eval(f.nth(k)));
            }
        }
    }
}

TEST_CASE("squares along an AP without square residues is constant base") {
    // n = 2 mod 4 is never a perfect square
    auto spike = SeqSpec::spike_mix(Rat(0), Rat(1), IndexFamily::squares());
    CHECK(subsequence(spike, IndexFamily::ap(2, 4)) == SeqSpec::constant(Rat(0)));
    // odd n >= 3 is never a power of two
    auto p2 = SeqSpec::spike_mix(Rat(5), Rat(6), IndexFamily::powers_of_two());
    CHECK(subsequence(p2, IndexFamily::ap(3, 2)) == SeqSpec::constant(Rat(5)));
    // but squares along ap(1,1) keep the spikes: identity
    CHECK(subsequence(spike, IndexFamily::ap(1, 1)) == spike);
    // and squares along ap(1,4) has residue solutions: out of catalog
    CHECK_THROWS_AS(subsequence(spike, IndexFamily::ap(1, 4)), Unrepresentable);
}

TEST_CASE("cross-family subsequences") {
    auto spike_sq = SeqSpec::spike_mix(Rat(0), Rat(1), IndexFamily::squares());
    // 2^(k-1) is a square iff k odd
    CHECK(subsequence(spike_sq, IndexFamily::powers_of_two()) ==
          SeqSpec::eventually_periodic({}, {Rat(1), Rat(0)}));
    auto spike_p2 = SeqSpec::spike_mix(Rat(0), Rat(1), IndexFamily::powers_of_two());
    // k^2 is a power of two iff k is
    CHECK(subsequence(spike_p2, IndexFamily::squares()) ==
          SeqSpec::spike_mix(Rat(0), Rat(1), IndexFamily::powers_of_two()));
}

TEST_CASE("spike-along-AP decisions audited against brute membership") {
    // When the extraction succeeds the closed form must match sampling; when
    // it refuses, spikes must genuinely recur in the subsequence.
    for (auto base_family : {IndexFamily::squares(), IndexFamily::powers_of_two()}) {
        auto spike = SeqSpec::spike_mix(Rat(0), Rat(1), base_family);
        for (std::int64_t a = 1; a <= 6; ++a) {
            for (std::int64_t d = 1; d <= 8; ++d) {
                auto along = IndexFamily::ap(a, d);
                bool representable = true;
                SeqSpec sub = SeqSpec::constant(Rat(0));
                try {
                    sub = subsequence(spike, along);
                } catch (const Unrepresentable&) {
                    representable = false;
                }
                std::int64_t spikes_seen = 0;
                for (std::int64_t k = 1; k <= 5000; ++k) {
                    Rat direct = spike.eval(along.nth(k));
                    if (representable) CHECK(sub.eval(k) == direct);
                    if (direct == Rat(1)) ++spikes_seen;
                }
                if (!representable) {
                    CAPTURE(a);
                    CAPTURE(d);
                    CHECK(spikes_seen >= 2);
                }
            }
        }
    }
}

TEST_CASE("pointwise sums that stay representable") {
    auto per01 = SeqSpec::eventually_periodic({}, {Rat(0), Rat(1)});
    auto per2 = SeqSpec::constant(Rat(2));
    auto sum = try_add(per01, per2);
    REQUIRE(sum.has_value());
    CHECK(*sum == SeqSpec::eventually_periodic({}, {Rat(2), Rat(3)}));
    auto spike = SeqSpec::spike_mix(Rat(0), Rat(1), IndexFamily::squares());
    auto sum2 = try_add(spike, SeqSpec::constant(Rat(-1)));
    REQUIRE(sum2.has_value());
    CHECK(*sum2 == SeqSpec::spike_mix(Rat(-1), Rat(0), IndexFamily::squares()));
    // same family adds; different families leave the catalog
    CHECK(try_add(spike, spike).has_value());
    auto spike_p2 = SeqSpec::spike_mix(Rat(0), Rat(1), IndexFamily::powers_of_two());
    CHECK(!try_add(spike, spike_p2).has_value());
    CHECK(!try_add(per01, spike).has_value());
    // sampled agreement
    auto s3 = try_add(SeqSpec::eventually_periodic({Rat(5)}, {Rat(1), Rat(2), Rat(3)}),
                      SeqSpec::eventually_periodic({}, {Rat(10), Rat(20)}));
    REQUIRE(s3.has_value());
    for (std::int64_t n = 1; n <= 100; ++n)
        CHECK(s3->eval(n) == SeqSpec::eventually_periodic({Rat(5)}, {Rat(1), Rat(2), Rat(3)}).eval(n) +
                                 SeqSpec::eventually_periodic({}, {Rat(10), Rat(20)}).eval(n));
}

TEST_CASE("sums of tabulated spike fronts") {
    auto spike = SeqSpec::spike_mix(Rat(0), Rat(1), IndexFamily::squares());
    auto ta = SeqSpec::tabulated({Rat(5), Rat(7)}, spike);
    auto tb = SeqSpec::tabulated({Rat(-5)}, spike);
    auto sum = try_add(ta, tb);
    REQUIRE(sum.has_value());
    for (std::int64_t n = 1; n <= 200; ++n) CHECK(sum->eval(n) == ta.eval(n) + tb.eval(n));
    // tabulated front over an eventually-constant part adds with a spike
    auto head = SeqSpec::eventually_constant({Rat(100)}, Rat(2));
    auto sum2 = try_add(head, spike);
    REQUIRE(sum2.has_value());
    for (std::int64_t n = 1; n <= 200; ++n) CHECK(sum2->eval(n) == head.eval(n) + spike.eval(n));
}

TEST_CASE("literals round-trip through the parser") {
    std::vector<SeqSpec> seqs = {
        SeqSpec::constant(Rat(3)),
        SeqSpec::eventually_constant({Rat(1, 2)}, Rat(-3)),
        SeqSpec::eventually_periodic({Rat(1)}, {Rat(2), Rat(3)}),
        SeqSpec::spike_mix(Rat(0), Rat(1), IndexFamily::squares()),
        SeqSpec::tabulated({Rat(9)}, SeqSpec::spike_mix(Rat(0), Rat(1),
                                                        IndexFamily::powers_of_two())),
    };
    for (const auto& s : seqs) CHECK(parse_seq(s.str()) == s);
}
