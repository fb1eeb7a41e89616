#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gconv/corpus.hpp"
#include "gconv/parser.hpp"
#include "gconv/product.hpp"

using namespace gconv;

namespace {
RSet iv(const char* text) { return parse_set(text); }
const MethodSpec PLIM = MethodSpec::product(MethodSpec::lim());
const MethodSpec PCES = MethodSpec::product(MethodSpec::cesaro());
}  // namespace

TEST_CASE("coordinate traces of the catalog families") {
    auto ex = ProdSeq::example33();
    // trace at i = 3: prefix [3,3,0], then constant 3
    auto t3 = ex.coordinate_trace(3);
    CHECK(t3 == SeqSpec::eventually_constant({Rat(3), Rat(3), Rat(0)}, Rat(3)));
    CHECK(t3.eval(3) == Rat(0));
    CHECK(t3.eval(4) == Rat(3));
    CHECK(g_limit(MethodSpec::lim(), t3) == LimitResult::converges(Rat(3)));

    auto sig = ProdSeq::sigma(PointSeq::constant(Rat(0)), PointSeq::identity());
    // y^3 = (1,2,3,0,0,...)
    CHECK(sig.at(3, 1) == Rat(1));
    CHECK(sig.at(3, 3) == Rat(3));
    CHECK(sig.at(3, 4) == Rat(0));
    CHECK(sig.at(3, 6) == Rat(0));
}

TEST_CASE("point rules") {
    CHECK(PointSeq::identity().at(5) == Rat(5));
    CHECK(PointSeq::constant(Rat(1, 2)).at(99) == Rat(1, 2));
    CHECK(PointSeq::reciprocal(Rat(1)).at(4) == Rat(1, 4));
    auto e = PointSeq::explicit_list({Rat(7)}, Rat(0));
    CHECK(e.at(1) == Rat(7));
    CHECK(e.at(2) == Rat(0));
    CHECK_THROWS_AS(PointSeq::identity().at(0), std::invalid_argument);
}

TEST_CASE("product limits are coordinatewise") {
    auto limits = product_limit(PLIM, ProdSeq::example33(), 8);
    for (std::int64_t i = 1; i <= 8; ++i)
        CHECK(limits[static_cast<std::size_t>(i - 1)] == LimitResult::converges(Rat(i)));

    auto constant = ProdSeq::per_coordinate({}, SeqSpec::constant(Rat(5)));
    auto cl = product_limit(PLIM, constant, 4);
    for (const auto& l : cl) CHECK(l == LimitResult::converges(Rat(5)));

    auto mixed = ProdSeq::per_coordinate(
        {SeqSpec::eventually_periodic({}, {Rat(0), Rat(1)}), SeqSpec::constant(Rat(2))},
        SeqSpec::constant(Rat(0)));
    auto ml = product_limit(PCES, mixed, 3);
    CHECK(ml[0] == LimitResult::converges(Rat(1, 2)));
    CHECK(ml[1] == LimitResult::converges(Rat(2)));
    CHECK(ml[2] == LimitResult::converges(Rat(0)));

    // domain membership is the conjunction over coordinates
    CHECK(product_in_domain(PCES, mixed, 3));
    CHECK(!product_in_domain(PLIM, mixed, 3));
    CHECK(product_in_domain(PLIM, ProdSeq::example33(), 12));
}

TEST_CASE("box hull is componentwise, including the tail rule") {
    DepthBox b = parse_box("box[d=3]{(0,1); (0,1); (0,1); tail=R}");
    auto h = box_hull(PLIM, b);
    for (std::int64_t i = 1; i <= 3; ++i) CHECK(h.factor(i) == iv("[0,1]"));
    CHECK(h.factor(4).is_line());

    DepthBox b2 = parse_box("box[d=2]{{0} u {1}; [2,3]}");
    auto h2 = box_hull(PCES, b2);
    CHECK(h2.factor(1) == iv("[0,1]"));
    CHECK(h2.factor(2) == iv("[2,3]"));

    // empty factor stays empty
    DepthBox b3{1, SetFamily::explicit_list({RSet::empty()}, SetFamily::constant(RSet::line()))};
    CHECK(box_hull(PLIM, b3).factor(1).is_empty());

    // shifted tails transform symbolically
    DepthBox b4{2, SetFamily::shifted_interval(Rat(1, 4), false, false)};
    auto h4 = box_hull(PLIM, b4);
    for (std::int64_t i = 1; i <= 6; ++i)
        CHECK(h4.factor(i) == RSet::closed(Rat(i) - Rat(1, 4), Rat(i) + Rat(1, 4)));
}

TEST_CASE("box closedness needs every factor closed") {
    CHECK(box_closed(PLIM, parse_box("box[d=2]{[0,1]; [2,3]}")));
    CHECK(!box_closed(PLIM, parse_box("box[d=2]{[0,1]; (2,3)}")));
    CHECK(box_closed(PLIM, parse_box("box[d=1]{[0,1]; tail=R}")));
    CHECK(!box_closed(PCES, parse_box("box[d=1]{[0,1] u [2,3]; tail=R}")));
    DepthBox shifted_open{2, SetFamily::shifted_interval(Rat(1, 4), false, false)};
    CHECK(!box_closed(PLIM, shifted_open));
    DepthBox shifted_closed{2, SetFamily::shifted_interval(Rat(1, 4), true, true)};
    CHECK(box_closed(PLIM, shifted_closed));
}

TEST_CASE("box kernel: componentwise at explicit depth, gated on the trait") {
    DepthBox b = parse_box("box[d=2]{[0,1]; [0,2]; tail=R}");
    auto k = box_kernel(PLIM, b);
    CHECK(k.factor(1) == iv("(0,1)"));
    CHECK(k.factor(2) == iv("(0,2)"));
    CHECK(k.factor(3).is_line());

    DepthBox be{1, SetFamily::explicit_list({RSet::empty()}, SetFamily::constant(RSet::line()))};
    CHECK(box_kernel(PLIM, be).factor(1).is_empty());

    CHECK_THROWS_AS(box_kernel(PCES, b), MethodError);  // fails the trait
    DepthBox bounded_tail{1, SetFamily::shifted_interval(Rat(1, 4), false, false)};
    CHECK_THROWS_AS(box_kernel(PLIM, bounded_tail), MethodError);  // tail not full line
}

TEST_CASE("example 3.3 scenario passes at the contract depths") {
    for (std::int64_t d : {2, 4, 8, 16}) {
        auto rep = example33_scenario(d);
        CHECK(rep.all_pass());
    }
    CHECK_THROWS_AS(example33_scenario(1), std::invalid_argument);
}

TEST_CASE("sigma scenario: settle, converge, finitely many deviations") {
    auto rep = sigma_density_scenario(6, PointSeq::constant(Rat(0)), PointSeq::identity());
    CHECK(rep.all_pass());
    auto rep2 = sigma_density_scenario(4, PointSeq::constant(Rat(1)), PointSeq::reciprocal(Rat(1)));
    CHECK(rep2.all_pass());
    // x = a: constant family
    auto rep3 = sigma_density_scenario(5, PointSeq::constant(Rat(2)), PointSeq::constant(Rat(2)));
    CHECK(rep3.all_pass());
    // limit values spot check: a_i = 1, x_i = 1/i at depth 4
    auto fam = ProdSeq::sigma(PointSeq::constant(Rat(1)), PointSeq::reciprocal(Rat(1)));
    auto limits = product_limit(PLIM, fam, 4);
    CHECK(limits[3] == LimitResult::converges(Rat(1, 4)));
}

TEST_CASE("projection suite") {
    std::vector<ProdSeq> corpus = {
        ProdSeq::example33(),
        ProdSeq::sigma(PointSeq::constant(Rat(0)), PointSeq::identity()),
    };
    std::vector<DepthBox> boxes = {
        parse_box("box[d=2]{[0,1]; [2,3]}"),
        parse_box("box[d=2]{[0,1]; (2,3)}"),
        parse_box("box[d=3]{{0}; [1,2]; [0,1] u [2,3]}"),
    };
    auto rep = projection_suite(PLIM, 4, corpus, boxes);
    CHECK(rep.all_pass());
    // methods without the trait report the hypothesis violation
    auto rep2 = projection_suite(PCES, 2, corpus, boxes);
    CHECK(!rep2.all_pass());
    bool named = false;
    for (const auto& c : rep2.checks)
        if (c.detail.find("hypothesis violation") != std::string::npos) named = true;
    CHECK(named);
}

TEST_CASE("factorwise connectedness criterion") {
    auto rep = product_connectedness(PLIM, {iv("[0,1]"), iv("[0,1]")});
    CHECK(rep.all_pass());
    bool connected_flag = false;
    for (const auto& c : rep.checks)
        if (c.witness.contains("connected")) connected_flag = c.witness["connected"];
    CHECK(connected_flag);

    auto rep2 = product_connectedness(PLIM, {iv("[0,1]"), iv("[0,1] u [2,3]")});
    bool connected_flag2 = true;
    std::int64_t witness = 0;
    for (const auto& c : rep2.checks)
        if (c.witness.contains("connected")) {
            connected_flag2 = c.witness["connected"];
            witness = c.witness["witness_factor"];
        }
    CHECK(!connected_flag2);
    CHECK(witness == 2);

    auto rep3 = product_connectedness(MethodSpec::cesaro(), {iv("{0} u {1}")});
    bool connected_flag3 = true;
    for (const auto& c : rep3.checks)
        if (c.witness.contains("connected")) connected_flag3 = c.witness["connected"];
    CHECK(!connected_flag3);

    CHECK_THROWS_AS(product_connectedness(PLIM, {}), std::invalid_argument);
}

TEST_CASE("set family literals and equality") {
    auto f = SetFamily::shifted_interval(Rat(1, 4), false, false);
    CHECK(f.factor(3) == iv("(11/4,13/4)"));
    CHECK(f == SetFamily::shifted_interval(Rat(1, 4), false, false));
    CHECK(!(f == SetFamily::shifted_interval(Rat(1, 2), false, false)));
    auto e = SetFamily::explicit_list({iv("[0,1]")}, SetFamily::constant(RSet::line()));
    CHECK(e.factor(1) == iv("[0,1]"));
    CHECK(e.factor(2).is_line());
    // nested explicit rules flatten with indices aligned
    auto nested = SetFamily::explicit_list({iv("{5}")}, e);
    CHECK(nested.rule() == SetFamily::Rule::Explicit);
    CHECK(nested.factor(1) == iv("{5}"));
    CHECK(nested.factor(2).is_line());
    auto nested2 = SetFamily::explicit_list({}, SetFamily::explicit_list({iv("{1}"), iv("{2}")},
                                                                         SetFamily::constant(RSet::line())));
    CHECK(nested2.factor(2) == iv("{2}"));
    CHECK_THROWS_AS(f.factor(0), std::invalid_argument);
}
