#include "gconv/suites.hpp"

#include <chrono>
#include <cmath>

#include "gconv/corpus.hpp"
#include "gconv/group.hpp"
#include "gconv/oracle.hpp"
#include "gconv/parser.hpp"
#include "gconv/product.hpp"
#include "gconv/topology.hpp"

namespace gconv {

namespace {

std::vector<MethodSpec> core_methods() {
    return {MethodSpec::lim(), MethodSpec::cesaro(), MethodSpec::statistical()};
}

// ---------------------------------------------------------------------------
// thm3.1: product hull/closedness laws plus the depth-2 kernel identity

SuiteResult suite_thm31(const SuiteOptions& opt) {
    SuiteResult out;
    out.suite = "thm3.1";
    Rng rng(opt.seed);
    for (long t = 0; t < opt.trials; ++t) {
        DepthBox box = random_box(rng);
        for (const auto& m : core_methods()) {
            auto bh = box_hull(m, box);
            bool componentwise = true;
            for (std::int64_t i = 1; i <= box.depth + 3; ++i)
                componentwise = componentwise && bh.factor(i) == hull(m, box.factor(i));
            out.record(CheckResult{"box hull componentwise: " + m.name() + " #" +
                                       std::to_string(t),
                                   componentwise,
                                   componentwise ? "" : box.str(),
                                   nlohmann::json{{"box", box.str()}}});

            // all factors of the hulled box are G-closed, so the box must be
            bool closed_dir = box_closed(m, bh);
            bool factors_closed = true;
            for (std::int64_t i = 1; i <= box.depth + 3; ++i)
                factors_closed = factors_closed && is_g_closed(m, bh.factor(i));
            out.record(CheckResult{"all factors closed => box closed: " + m.name() + " #" +
                                       std::to_string(t),
                                   closed_dir && factors_closed,
                                   closed_dir ? "" : bh.str()});

            // converse direction on the raw box
            if (box_closed(m, box)) {
                bool each = true;
                for (std::int64_t i = 1; i <= box.depth + 3; ++i)
                    each = each && is_g_closed(m, box.factor(i));
                out.record(CheckResult{"box closed => factors closed: " + m.name() + " #" +
                                           std::to_string(t),
                                       each, each ? "" : box.str()});
            }
        }
        // Proposition 3.2 at depth 2 under lim: kernel componentwise.
        RSet a = random_set(rng), b = random_set(rng);
        DepthBox pair{2, SetFamily::explicit_list({a, b}, SetFamily::constant(RSet::line()))};
        auto lim = MethodSpec::product(MethodSpec::lim());
        auto bk = box_kernel(lim, pair);
        bool kernel_ok = bk.factor(1) == kernel(MethodSpec::lim(), a) &&
                         bk.factor(2) == kernel(MethodSpec::lim(), b) &&
                         bk.factor(3).is_line();
        out.record(CheckResult{"depth-2 kernel componentwise #" + std::to_string(t), kernel_ok,
                               kernel_ok ? "" : a.str() + " x " + b.str()});
    }
    return out;
}

// ---------------------------------------------------------------------------
// ex33

SuiteResult suite_ex33(const SuiteOptions& opt) {
    SuiteResult out;
    out.suite = "ex33";
    for (std::int64_t d : {std::int64_t(2), std::int64_t(4), std::int64_t(8), opt.depth}) {
        if (d < 2) continue;
        out.record(example33_scenario(d));
    }
    return out;
}

// ---------------------------------------------------------------------------
// thm4.5 (+ propositions 4.2/4.3/4.4)

SuiteResult suite_thm45(const SuiteOptions& opt) {
    SuiteResult out;
    out.suite = "thm4.5";
    Rng rng(opt.seed);
    auto lim = MethodSpec::lim();
    auto ces = MethodSpec::cesaro();

    // Proposition 4.2 on seeded families of intervals sharing a point.
    for (int t = 0; t < 20; ++t) {
        Rat c = rng.rat();
        std::vector<RSet> family;
        std::int64_t n = rng.range(1, 4);
        for (std::int64_t i = 0; i < n; ++i) {
            Rat w1 = rng.rat_in(0, 4).abs(), w2 = rng.rat_in(0, 4).abs();
            family.push_back(RSet::closed(c - w1, c + w2));
        }
        out.record(connectedness_union_law(lim, family));
    }
    // degenerate single-set family
    out.record(connectedness_union_law(lim, {RSet::closed(Rat(0), Rat(1))}));

    // Proposition 4.3 on seeded affine images.
    for (int t = 0; t < 20; ++t) {
        Rat a = rng.rat();
        if (a.is_zero()) a = Rat(2);
        Rat lo = rng.rat(), w = rng.rat_in(0, 4).abs();
        out.record(connectedness_image_law(lim, a, rng.rat(), RSet::closed(lo, lo + w)));
    }
    out.record(connectedness_image_law(lim, Rat(2), Rat(1), RSet::closed(Rat(0), Rat(1))));

    // Proposition 4.4 / Theorem 4.5 factorwise criterion at depth <= 3,
    // both directions, under lim and cesaro.
    for (const auto& m : {lim, ces}) {
        out.record(product_connectedness(m, {RSet::closed(Rat(0), Rat(1)),
                                             RSet::closed(Rat(0), Rat(1))}));
        out.record(product_connectedness(
            m, {RSet::closed(Rat(0), Rat(1)), RSet::closed(Rat(-2), Rat(5)),
                RSet::closed(Rat(7, 2), Rat(4))}));
        auto rep = product_connectedness(
            m, {RSet::closed(Rat(0), Rat(1)),
                set_union(RSet::closed(Rat(0), Rat(1)), RSet::closed(Rat(2), Rat(3)))});
        bool flagged_disconnected = false;
        for (const auto& c : rep.checks)
            if (c.witness.contains("connected") && c.witness["connected"] == false)
                flagged_disconnected = true;
        out.record(rep);
        out.record(CheckResult{"disconnected factor flips the criterion: " + m.name(),
                               flagged_disconnected, ""});
    }

    // Theorem 4.5 step 3 mechanism at the acceptance depth.
    out.record(sigma_density_scenario(8, PointSeq::constant(Rat(0)), PointSeq::identity()));
    out.record(sigma_density_scenario(8, PointSeq::constant(Rat(1)),
                                      PointSeq::reciprocal(Rat(1))));
    out.record(sigma_density_scenario(4, PointSeq::constant(Rat(3)), PointSeq::constant(Rat(3))));

    // Projection laws feeding the necessity direction of Theorem 4.5.
    std::vector<ProdSeq> corpus = {
        ProdSeq::example33(),
        ProdSeq::per_coordinate({SeqSpec::eventually_periodic({}, {Rat(0), Rat(1)}),
                                 SeqSpec::constant(Rat(2))},
                                SeqSpec::constant(Rat(0))),
        ProdSeq::sigma(PointSeq::constant(Rat(0)), PointSeq::identity()),
    };
    std::vector<DepthBox> boxes;
    for (int t = 0; t < 10; ++t) boxes.push_back(random_box(rng, 3));
    out.record(projection_suite(MethodSpec::product(lim), 4, corpus, boxes));
    return out;
}

// ---------------------------------------------------------------------------
// sec5

RSet random_open_neighborhood(Rng& rng) {
    // a bounded open interval around 0, sometimes with extra components
    Rat a = rng.rat_in(1, 8).abs() + Rat(1, 8), b = rng.rat_in(1, 8).abs() + Rat(1, 8);
    RSet u = RSet::open(-a, b);
    if (rng.coin()) {
        Rat lo = b + rng.rat_in(1, 4).abs() + Rat(1, 4);
        u = set_union(u, RSet::open(lo, lo + rng.rat_in(1, 4).abs() + Rat(1, 2)));
    }
    return u;
}

SuiteResult suite_sec5(const SuiteOptions& opt) {
    SuiteResult out;
    out.suite = "sec5";
    MethodSpec m = parse_method(opt.method);
    Rng rng(opt.seed);
    std::int64_t K = std::min<std::int64_t>(opt.base_count, 64);
    NeighborhoodBase base = NeighborhoodBase::standard(K);
    auto corpus = standard_corpus();
    auto shifts = standard_shifts();

    out.record(check_translations(m, corpus, shifts));

    for (std::int64_t t = 0; t < opt.sets; ++t) {
        RSet a = random_set(rng, /*bounded=*/true);
        RSet u = random_open_neighborhood(rng);
        Rat x = rng.rat();

        out.record(check_inverse_open(m, u));                              // Theorem 5.5(1)
        out.record(check_translated_base(m, u, x));                        // Theorem 5.7
        RSet v = symmetrize(u);                                            // Theorem 5.12
        bool sym_ok = v == set_negate(v) && v.subset_of(u) && is_g_open(m, v) &&
                      symmetrize(v) == v;
        out.record(CheckResult{"symmetric core G-open and idempotent #" + std::to_string(t),
                               sym_ok, sym_ok ? "" : u.str()});

        auto topo = check_topology(m, {u, random_open_neighborhood(rng), RSet::line(),
                                       RSet::empty()});                    // Theorem 5.8
        out.record(CheckResult{"intersections of G-opens are G-open #" + std::to_string(t),
                               topo.intersections_open,
                               topo.intersections_open ? "" : topo.counter_uv->str()});

        out.record(check_AU_open(m, a, u));                                // Proposition 5.15
        out.record(check_closure_bound(m, a, u));                          // Proposition 5.16
        out.record(closure_via_base(m, a, base));                          // Theorem 5.17
        out.record(check_symmetric_closure(m, set_union(a, set_negate(a))));  // Prop 5.18
        out.record(check_neighborhood_criterion(m, a, x, base));           // Prop 5.14
        Rat inside = a.parts().front().lo.finite() ? a.parts().front().lo.value() : Rat(0);
        out.record(check_neighborhood_criterion(m, a, inside, base));
    }
    out.record(hypothesis_necessity_suite(m));
    return out;
}

SuiteResult suite_sec5_counterexamples(const SuiteOptions& opt) {
    SuiteResult out;
    out.suite = "sec5-counterexamples";
    MethodSpec m = parse_method(opt.method);
    if (m.kind() == MethodSpec::Kind::Cesaro) {
        // The documented tau_G failure, reproduced deterministically.
        RSet u = parse_set("(-inf,1) u (2,inf)");
        RSet v = parse_set("(-inf,5) u (6,inf)");
        auto rep = check_topology(m, {u, v});
        bool produced = !rep.intersections_open && rep.counter_uv.has_value();
        RSet expect_uv = parse_set("(-inf,1) u (2,5) u (6,inf)");
        RSet expect_kernel = parse_set("(-inf,1) u (6,inf)");
        out.record(CheckResult{
            "cesaro intersection counterexample produced", produced,
            produced ? rep.counter_uv->str() : "intersection unexpectedly G-open"});
        out.record(CheckResult{"intersection is the documented set",
                               produced && *rep.counter_uv == expect_uv,
                               produced ? rep.counter_uv->str() : ""});
        out.record(CheckResult{"kernel excludes (2,5) exactly",
                               produced && *rep.counter_kernel == expect_kernel,
                               produced ? rep.counter_kernel->str() : "",
                               nlohmann::json{{"U", u.str()},
                                              {"V", v.str()},
                                              {"UnV", expect_uv.str()},
                                              {"kernel", expect_kernel.str()}}});
        // U and V themselves are Cesaro-open: the failure is intersection-only.
        out.record(CheckResult{"U and V are cesaro-open",
                               is_g_open(m, u) && is_g_open(m, v), ""});
    }
    out.record(hypothesis_necessity_suite(m));
    (void)opt;
    return out;
}

// ---------------------------------------------------------------------------
// traits

SuiteResult suite_traits(const SuiteOptions& opt) {
    SuiteResult out;
    out.suite = "traits";
    auto corpus = standard_corpus();
    auto families = standard_families();
    auto convergent = convergent_corpus(100, opt.seed);
    auto shifts = standard_shifts();

    // Silverman-Toeplitz verdicts.
    auto st_ces = check_matrix_regular(MatrixSpec::cesaro());
    out.record(CheckResult{"silverman-toeplitz: cesaro rows regular", st_ces.holds,
                           st_ces.detail});
    auto st_diag = check_matrix_regular(MatrixSpec::scaled_identity(Rat(2)));
    out.record(CheckResult{"silverman-toeplitz: diag(2) fails (iii)",
                           !st_diag.holds && st_diag.detail.find("(iii)") != std::string::npos,
                           st_diag.detail});
    auto st_col = check_matrix_regular(MatrixSpec::constant_column(1, Rat(1)));
    out.record(CheckResult{"silverman-toeplitz: column-1 matrix fails (ii)",
                           !st_col.holds && st_col.detail.find("(ii)") != std::string::npos,
                           st_col.detail});

    // Empirical regularity for the three core methods.
    for (const auto& m : core_methods()) {
        auto v = check_regular_empirical(m, convergent);
        out.record(CheckResult{"regularity: " + m.name(), v.holds, v.detail});
        out.record(CheckResult{"regularity flag consistent: " + m.name(),
                               v.holds == m.traits().regular, ""});
    }

    // Preservation of subsequence convergence, with the exact witnesses.
    auto v_lim = check_preserves_subsequences(MethodSpec::lim(), corpus, families);
    out.record(CheckResult{"lim preserves subsequences", v_lim.holds, v_lim.detail});

    auto v_ces = check_preserves_subsequences(MethodSpec::cesaro(), corpus, families);
    bool ces_witness = !v_ces.holds && v_ces.witness_values.size() == 2 &&
                       v_ces.witness_values[0] == Rat(1, 2) && v_ces.witness_values[1] == Rat(1);
    out.record(CheckResult{"cesaro fails with the periodic 0,1 witness (1/2 vs 1)", ces_witness,
                           v_ces.detail});

    auto v_stat = check_preserves_subsequences(MethodSpec::statistical(), corpus, families);
    bool stat_witness = !v_stat.holds && v_stat.witness_values.size() == 2 &&
                        v_stat.witness_values[0] == Rat(0) && v_stat.witness_values[1] == Rat(1);
    out.record(CheckResult{"stat fails with the spike-mix/squares witness (0 vs 1)",
                           stat_witness, v_stat.detail});

    for (const auto& m : core_methods())
        out.record(CheckResult{
            "preserves-subsequences flag consistent: " + m.name(),
            check_preserves_subsequences(m, corpus, families).holds ==
                m.traits().preserves_subsequences,
            ""});

    // Subsequential spot checks.
    auto sub_stat = check_subsequential(MethodSpec::statistical(),
                                        SeqSpec::spike_mix(Rat(0), Rat(1), IndexFamily::squares()));
    out.record(CheckResult{"stat subsequential on spike-mix", sub_stat.holds, sub_stat.detail});
    auto sub_lim = check_subsequential(MethodSpec::lim(), SeqSpec::constant(Rat(4)));
    out.record(CheckResult{"lim subsequential (identity witness)", sub_lim.holds,
                           sub_lim.detail});
    auto sub_ces = check_subsequential(MethodSpec::cesaro(),
                                       SeqSpec::eventually_periodic({}, {Rat(0), Rat(1)}));
    out.record(CheckResult{"cesaro not subsequential on the 0,1 cycle", !sub_ces.holds,
                           sub_ces.detail});

    // Translate regularity and map continuity.
    for (const auto& m : core_methods()) {
        auto v = check_translate_regular(m, corpus, shifts);
        out.record(CheckResult{"translate regular: " + m.name(), v.holds, v.detail});
        auto vg = check_g_continuity(m, SeqMap::negate(), corpus);
        out.record(CheckResult{"negation interchange: " + m.name(), vg.holds, vg.detail});
        auto va = check_g_continuity(m, SeqMap::affine(Rat(2), Rat(1)), corpus);
        out.record(CheckResult{"affine interchange: " + m.name(), va.holds, va.detail});
    }

    // Matrix(cesaro rows) routes to the exact path, and the independent
    // numeric row evaluation lands within the configured tolerance of it.
    NumericParams loose{20000, Rat(1, 20)};
    auto matrix_cesaro = MethodSpec::matrix(MatrixSpec::cesaro(), loose);
    bool routed = true, agree = true;
    Rng rng(opt.seed);
    for (int t = 0; t < 100 && agree; ++t) {
        SeqSpec s = random_convergent_seq(rng);
        auto exact = g_limit(MethodSpec::cesaro(), s);
        auto via_matrix = g_limit(matrix_cesaro, s);
        routed = routed && via_matrix == exact;
        auto numeric = numeric_matrix_estimate(MatrixSpec::cesaro(), loose, s);
        agree = std::abs(numeric.first - exact.value.to_double()) <= loose.tolerance.to_double();
    }
    out.record(CheckResult{"matrix(cesaro) routes to the exact cesaro limit", routed, ""});
    out.record(CheckResult{"numeric row evaluation agrees within tolerance at N_max", agree, ""});
    return out;
}

// ---------------------------------------------------------------------------
// oracle-hull

SuiteResult suite_oracle_hull(const SuiteOptions& opt) {
    SuiteResult out;
    out.suite = "oracle-hull";
    const double inside_tol = 1e-6, outside_tol = 1e-3;
    for (const auto& m : core_methods()) {
        Rng rng(opt.seed + static_cast<std::uint64_t>(m.kind()));
        for (std::int64_t t = 0; t < opt.sets; ++t) {
            RSet a = random_set(rng, /*bounded=*/true);
            RSet h = hull(m, a);
            Rat lo = h.inf()->value(), hi = h.sup()->value();
            std::vector<Rat> grid;
            if (lo == hi) {
                grid.push_back(lo);
            } else {
                Rat step = (hi - lo) / Rat(16);
                for (int j = 0; j <= 16; ++j) grid.push_back(lo + Rat(j) * step);
            }
            std::vector<double> inside_evals;
            std::vector<Rat> outside_points;
            bool ok = true;
            std::string fail;
            for (const auto& p : grid) {
                if (!h.contains(p)) {
                    outside_points.push_back(p);
                    continue;
                }
                auto constructions = build_constructions(m.kind(), a, p, opt.n_terms);
                if (constructions.empty()) {
                    ok = false;
                    fail = "no construction for claimed hull point " + p.str();
                    break;
                }
                double best = 1e300;
                for (const auto& c : constructions) {
                    if (!construction_valued_in(c, a, opt.n_terms)) {
                        ok = false;
                        fail = "construction leaves A at target " + p.str();
                        break;
                    }
                    double e = partial_eval(m.kind(), c, opt.n_terms);
                    inside_evals.push_back(e);
                    best = std::min(best, std::abs(e - p.to_double()));
                }
                if (!ok) break;
                if (best > inside_tol) {
                    ok = false;
                    fail = "claimed hull point " + p.str() + " not achieved (off by " +
                           std::to_string(best) + ")";
                    break;
                }
            }
            if (ok) {
                for (const auto& p : outside_points) {
                    for (const auto& c : build_constructions(m.kind(), a, p, opt.n_terms)) {
                        if (!construction_valued_in(c, a, opt.n_terms)) continue;
                        double e = partial_eval(m.kind(), c, opt.n_terms);
                        if (std::abs(e - p.to_double()) <= outside_tol) {
                            ok = false;
                            fail = "outside point " + p.str() + " achieved by a construction";
                        }
                    }
                    for (double e : inside_evals)
                        if (std::abs(e - p.to_double()) <= outside_tol) {
                            ok = false;
                            fail = "outside point " + p.str() + " within reach of an inside eval";
                        }
                    if (!ok) break;
                }
            }
            out.record(CheckResult{"hull oracle " + m.name() + " #" + std::to_string(t), ok,
                                   ok ? "" : fail + " for A = " + a.str(),
                                   nlohmann::json{{"set", a.str()}, {"hull", h.str()}}});
        }
    }
    return out;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"thm3.1", "ex33", "thm4.5", "sec5", "sec5-counterexamples", "traits", "oracle-hull"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    SuiteResult out;
    if (name == "thm3.1") out = suite_thm31(opt);
    else if (name == "ex33") out = suite_ex33(opt);
    else if (name == "thm4.5") out = suite_thm45(opt);
    else if (name == "sec5") out = suite_sec5(opt);
    else if (name == "sec5-counterexamples") out = suite_sec5_counterexamples(opt);
    else if (name == "traits") out = suite_traits(opt);
    else if (name == "oracle-hull") out = suite_oracle_hull(opt);
    else throw std::invalid_argument("unknown suite '" + name + "'");
    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace gconv
