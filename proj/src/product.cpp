#include "gconv/product.hpp"

namespace gconv {

// ---------------------------------------------------------------------------
// SetFamily / DepthBox

SetFamily SetFamily::constant(RSet a) {
    SetFamily f;
    f.rule_ = Rule::Constant;
    f.constant_ = std::move(a);
    return f;
}

SetFamily SetFamily::shifted_interval(Rat radius, bool lo_closed, bool hi_closed) {
    if (radius < Rat(0)) throw std::invalid_argument("SetFamily: radius >= 0");
    if (radius.is_zero() && !(lo_closed && hi_closed))
        throw std::invalid_argument("SetFamily: zero radius needs closed endpoints");
    SetFamily f;
    f.rule_ = Rule::ShiftedInterval;
    f.radius_ = radius;
    f.lo_closed_ = lo_closed;
    f.hi_closed_ = hi_closed;
    return f;
}

SetFamily SetFamily::explicit_list(std::vector<RSet> front, SetFamily beyond) {
    // Flatten nested explicit rules; indices stay aligned because factor()
    // always queries the beyond rule at the original index.
    if (beyond.rule_ == Rule::Explicit) {
        for (std::size_t i = front.size(); i < beyond.front_.size(); ++i)
            front.push_back(beyond.front_[i]);
        return explicit_list(std::move(front), *beyond.beyond_);
    }
    SetFamily f;
    f.rule_ = Rule::Explicit;
    f.front_ = std::move(front);
    f.beyond_ = std::make_shared<SetFamily>(std::move(beyond));
    return f;
}

RSet SetFamily::factor(std::int64_t i) const {
    if (i < 1) throw std::invalid_argument("SetFamily: index >= 1");
    switch (rule_) {
        case Rule::Constant: return constant_;
        case Rule::ShiftedInterval: {
            Rat center(i);
            return RSet::interval(center - radius_, lo_closed_, center + radius_, hi_closed_);
        }
        case Rule::Explicit:
            if (static_cast<std::size_t>(i) <= front_.size())
                return front_[static_cast<std::size_t>(i - 1)];
            return beyond_->factor(i);
    }
    throw std::logic_error("SetFamily: bad rule");
}

bool operator==(const SetFamily& a, const SetFamily& b) {
    if (a.rule_ != b.rule_) return false;
    switch (a.rule_) {
        case SetFamily::Rule::Constant: return a.constant_ == b.constant_;
        case SetFamily::Rule::ShiftedInterval:
            return a.radius_ == b.radius_ && a.lo_closed_ == b.lo_closed_ &&
                   a.hi_closed_ == b.hi_closed_;
        case SetFamily::Rule::Explicit:
            return a.front_ == b.front_ && *a.beyond_ == *b.beyond_;
    }
    return false;
}

std::string SetFamily::str() const {
    switch (rule_) {
        case Rule::Constant: return "const " + constant_.str();
        case Rule::ShiftedInterval: {
            std::string s = lo_closed_ ? "[" : "(";
            s += "i-" + radius_.str() + ", i+" + radius_.str();
            s += hi_closed_ ? "]" : ")";
            return "shifted " + s;
        }
        case Rule::Explicit: {
            std::string s = "explicit {";
            for (std::size_t i = 0; i < front_.size(); ++i) {
                if (i) s += "; ";
                s += front_[i].str();
            }
            return s + "} then " + beyond_->str();
        }
    }
    return "?";
}

bool operator==(const DepthBox& a, const DepthBox& b) {
    return a.depth == b.depth && a.factors == b.factors;
}

std::string DepthBox::str() const {
    std::string s = "box[d=" + std::to_string(depth) + "]{";
    for (std::int64_t i = 1; i <= depth; ++i) {
        if (i > 1) s += "; ";
        s += factor(i).str();
    }
    const SetFamily* tail = &factors;
    while (tail->rule() == SetFamily::Rule::Explicit &&
           static_cast<std::int64_t>(tail->front().size()) <= depth)
        tail = &tail->beyond();
    return s + "; tail=" + tail->str() + "}";
}

// ---------------------------------------------------------------------------
// PointSeq / ProdSeq

PointSeq PointSeq::linear(Rat a, Rat b) {
    PointSeq p;
    p.rule_ = Rule::Linear;
    p.a_ = a;
    p.b_ = b;
    return p;
}

PointSeq PointSeq::reciprocal(Rat c) {
    PointSeq p;
    p.rule_ = Rule::Reciprocal;
    p.c_ = c;
    return p;
}

PointSeq PointSeq::explicit_list(std::vector<Rat> front, Rat beyond) {
    PointSeq p;
    p.rule_ = Rule::Explicit;
    p.front_ = std::move(front);
    p.beyond_ = beyond;
    return p;
}

Rat PointSeq::at(std::int64_t i) const {
    if (i < 1) throw std::invalid_argument("PointSeq: index >= 1");
    switch (rule_) {
        case Rule::Linear: return a_ * Rat(i) + b_;
        case Rule::Reciprocal: return c_ / Rat(i);
        case Rule::Explicit:
            if (static_cast<std::size_t>(i) <= front_.size())
                return front_[static_cast<std::size_t>(i - 1)];
            return beyond_;
    }
    throw std::logic_error("PointSeq: bad rule");
}

std::string PointSeq::str() const {
    switch (rule_) {
        case Rule::Linear:
            if (a_.is_zero()) return "i -> " + b_.str();
            return "i -> " + a_.str() + "*i" + (b_.is_zero() ? "" : "+" + b_.str());
        case Rule::Reciprocal: return "i -> " + c_.str() + "/i";
        case Rule::Explicit: {
            std::string s = "i -> [";
            for (std::size_t i = 0; i < front_.size(); ++i) {
                if (i) s += ",";
                s += front_[i].str();
            }
            return s + "] then " + beyond_.str();
        }
    }
    return "?";
}

ProdSeq ProdSeq::per_coordinate(std::vector<SeqSpec> front, SeqSpec beyond) {
    ProdSeq s;
    s.kind_ = Kind::PerCoordinate;
    s.front_ = std::move(front);
    s.beyond_ = std::make_shared<SeqSpec>(std::move(beyond));
    return s;
}

ProdSeq ProdSeq::example33() {
    ProdSeq s;
    s.kind_ = Kind::Example33;
    return s;
}

ProdSeq ProdSeq::sigma(PointSeq a, PointSeq x) {
    ProdSeq s;
    s.kind_ = Kind::Sigma;
    s.a_ = std::move(a);
    s.x_ = std::move(x);
    return s;
}

SeqSpec ProdSeq::coordinate_trace(std::int64_t i) const {
    if (i < 1) throw std::invalid_argument("ProdSeq: coordinate >= 1");
    switch (kind_) {
        case Kind::PerCoordinate:
            if (static_cast<std::size_t>(i) <= front_.size())
                return front_[static_cast<std::size_t>(i - 1)];
            return *beyond_;
        case Kind::Example33: {
            // (x^n)_i = i for n != i, 0 at n = i: one-entry deviation.
            std::vector<Rat> prefix(static_cast<std::size_t>(i), Rat(i));
            prefix.back() = Rat(0);
            return SeqSpec::eventually_constant(std::move(prefix), Rat(i));
        }
        case Kind::Sigma: {
            // (y^n)_i = x_i once n >= i, a_i before.
            std::vector<Rat> prefix(static_cast<std::size_t>(i - 1), a_.at(i));
            return SeqSpec::eventually_constant(std::move(prefix), x_.at(i));
        }
    }
    throw std::logic_error("ProdSeq: bad kind");
}

std::string ProdSeq::str() const {
    switch (kind_) {
        case Kind::PerCoordinate: {
            std::string s = "percoord {";
            for (std::size_t i = 0; i < front_.size(); ++i) {
                if (i) s += "; ";
                s += front_[i].str();
            }
            return s + "} then " + beyond_->str();
        }
        case Kind::Example33: return "example33-family";
        case Kind::Sigma: return "sigma(a: " + a_.str() + "; x: " + x_.str() + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// product operators

std::vector<LimitResult> product_limit(const MethodSpec& m, const ProdSeq& s, std::int64_t depth) {
    if (depth < 1) throw std::invalid_argument("product_limit: depth >= 1");
    const MethodSpec& fm = m.kind() == MethodSpec::Kind::Product ? m.factor() : m;
    if (fm.kind() == MethodSpec::Kind::Matrix && fm.matrix_spec().form != MatrixSpec::Form::Cesaro)
        throw MethodError("product_limit: factor method must evaluate symbolically");
    std::vector<LimitResult> out;
    out.reserve(static_cast<std::size_t>(depth));
    for (std::int64_t i = 1; i <= depth; ++i) out.push_back(g_limit(fm, s.coordinate_trace(i)));
    return out;
}

bool product_in_domain(const MethodSpec& m, const ProdSeq& s, std::int64_t depth) {
    const MethodSpec& fm = m.kind() == MethodSpec::Kind::Product ? m.factor() : m;
    for (std::int64_t i = 1; i <= depth; ++i)
        if (!in_domain(fm, s.coordinate_trace(i))) return false;
    return true;
}

namespace {

SetFamily hull_rule(const MethodSpec& m, const SetFamily& f) {
    switch (f.rule()) {
        case SetFamily::Rule::Constant: return SetFamily::constant(hull(m, f.constant_set()));
        case SetFamily::Rule::ShiftedInterval:
            // hull of (i-r, i+r) is the closed window of the same radius for
            // every shipped method (closure = convex closure on an interval).
            if (f.radius().is_zero()) return f;
            return SetFamily::shifted_interval(f.radius(), true, true);
        case SetFamily::Rule::Explicit: {
            std::vector<RSet> front;
            for (const auto& a : f.front()) front.push_back(hull(m, a));
            return SetFamily::explicit_list(std::move(front), hull_rule(m, f.beyond()));
        }
    }
    throw std::logic_error("hull_rule");
}

bool rule_all_closed(const MethodSpec& m, const SetFamily& f) {
    switch (f.rule()) {
        case SetFamily::Rule::Constant: return is_g_closed(m, f.constant_set());
        case SetFamily::Rule::ShiftedInterval:
            if (f.radius().is_zero()) return true;        // singletons
            return f.lo_closed() && f.hi_closed();        // closed window
        case SetFamily::Rule::Explicit: {
            for (const auto& a : f.front())
                if (!is_g_closed(m, a)) return false;
            return rule_all_closed(m, f.beyond());
        }
    }
    return false;
}

const MethodSpec& factor_method(const MethodSpec& m) {
    return m.kind() == MethodSpec::Kind::Product ? m.factor() : m;
}

bool tail_is_full_line(const SetFamily& f) {
    switch (f.rule()) {
        case SetFamily::Rule::Constant: return f.constant_set().is_line();
        case SetFamily::Rule::ShiftedInterval: return false;
        case SetFamily::Rule::Explicit: return tail_is_full_line(f.beyond());
    }
    return false;
}

}  // namespace

DepthBox box_hull(const MethodSpec& m, const DepthBox& b) {
    const MethodSpec& fm = factor_method(m);
    std::vector<RSet> front;
    for (std::int64_t i = 1; i <= b.depth; ++i) front.push_back(hull(fm, b.factor(i)));
    // hull_rule keeps index alignment, so it serves as the beyond-depth rule
    // even when the input carried explicit factors of its own.
    return DepthBox{b.depth,
                    SetFamily::explicit_list(std::move(front), hull_rule(fm, b.factors))};
}

bool box_closed(const MethodSpec& m, const DepthBox& b) {
    const MethodSpec& fm = factor_method(m);
    for (std::int64_t i = 1; i <= b.depth; ++i)
        if (!is_g_closed(fm, b.factor(i))) return false;
    return rule_all_closed(fm, b.factors);
}

DepthBox box_kernel(const MethodSpec& m, const DepthBox& b) {
    const MethodSpec& fm = factor_method(m);
    if (!fm.traits().preserves_subsequences)
        throw MethodError("box_kernel: method " + fm.name() +
                          " lacks the preserves-subsequences trait");
    if (!tail_is_full_line(b.factors))
        throw MethodError(
            "box_kernel: componentwise kernel is only contracted for full-line tails; "
            "the kernel-product identity fails for genuinely infinite products");
    if (b.factors.rule() == SetFamily::Rule::Explicit &&
        static_cast<std::int64_t>(b.factors.front().size()) > b.depth)
        throw MethodError("box_kernel: explicit factors beyond the stated depth");
    std::vector<RSet> front;
    for (std::int64_t i = 1; i <= b.depth; ++i) front.push_back(kernel(fm, b.factor(i)));
    return DepthBox{b.depth, SetFamily::explicit_list(std::move(front),
                                                      SetFamily::constant(RSet::line()))};
}

// ---------------------------------------------------------------------------
// scenarios

Report example33_scenario(std::int64_t depth) {
    if (depth < 2) throw std::invalid_argument("example33_scenario: depth >= 2");
    Report rep;
    rep.title = "kernel-product inequality at depth " + std::to_string(depth);
    auto lim = MethodSpec::lim();
    Rat quarter(1, 4);

    // (a) each window factor is its own kernel
    bool a_ok = true;
    for (std::int64_t i = 1; i <= depth && a_ok; ++i) {
        RSet ai = RSet::open(Rat(i) - quarter, Rat(i) + quarter);
        a_ok = kernel(lim, ai) == ai;
    }
    rep.require("factor kernels fixed: (A_i)_G = A_i", a_ok);

    // (b) the target point lies in every factor kernel
    bool b_ok = true;
    for (std::int64_t i = 1; i <= depth && b_ok; ++i) {
        RSet ai = RSet::open(Rat(i) - quarter, Rat(i) + quarter);
        b_ok = kernel(lim, ai).contains(Rat(i));
    }
    rep.require("target point y_i = i in each (A_i)_G", b_ok);

    // (c) the n-th family point leaves the box at exactly index n
    auto fam = ProdSeq::example33();
    bool c_ok = true;
    std::int64_t c_witness = 0;
    for (std::int64_t n = 1; n <= depth && c_ok; ++n) {
        Rat vn = fam.at(n, n);
        RSet an = RSet::open(Rat(n) - quarter, Rat(n) + quarter);
        c_ok = vn.is_zero() && !an.contains(vn);
        c_witness = n;
    }
    rep.require("(x_n)_n = 0 escapes A_n, so x_n is outside the box", c_ok,
                "membership refuted at a single exact index",
                nlohmann::json{{"last_index_checked", c_witness}});

    // (d) coordinate traces settle, so the family converges coordinatewise to y
    bool d_ok = true;
    for (std::int64_t i = 1; i <= depth && d_ok; ++i) {
        auto l = g_limit(lim, fam.coordinate_trace(i));
        d_ok = l.is(LimitResult::Kind::Converges) && l.value == Rat(i) && l.exact;
    }
    rep.require("coordinate traces converge to y_i = i", d_ok);

    // (e) conclusion: a sequence valued in the box complement converges to y,
    // so y escapes the product kernel while sitting in the kernel product.
    rep.require("y in prod (A_i)_G but y not in (prod A_i)_G",
                a_ok && b_ok && c_ok && d_ok,
                "kernel-product inequality witnessed at depth " + std::to_string(depth));
    return rep;
}

Report sigma_density_scenario(std::int64_t depth, const PointSeq& a, const PointSeq& x) {
    if (depth < 1) throw std::invalid_argument("sigma_density_scenario: depth >= 1");
    Report rep;
    rep.title = "finite-completion approximation at depth " + std::to_string(depth);
    auto lim = MethodSpec::lim();
    auto fam = ProdSeq::sigma(a, x);

    bool settle_ok = true;
    for (std::int64_t i = 1; i <= depth && settle_ok; ++i) {
        Rat c;
        settle_ok = fam.coordinate_trace(i).eventually_constant_value(&c) && c == x.at(i);
    }
    rep.require("coordinate traces settle at x_i", settle_ok);

    auto limits = product_limit(MethodSpec::product(lim), fam, depth);
    bool limit_ok = true;
    for (std::int64_t i = 1; i <= depth && limit_ok; ++i) {
        const auto& l = limits[static_cast<std::size_t>(i - 1)];
        limit_ok = l.is(LimitResult::Kind::Converges) && l.value == x.at(i);
    }
    rep.require("product limit equals x at every explicit coordinate", limit_ok);

    bool finite_dev_ok = true;
    for (std::int64_t n = 1; n <= depth && finite_dev_ok; ++n)
        for (std::int64_t i = n + 1; i <= depth && finite_dev_ok; ++i)
            finite_dev_ok = fam.at(n, i) == a.at(i);
    rep.require("y^n matches a beyond coordinate n (finitely many deviations)", finite_dev_ok,
                "each y^n lies in the finite-completion class of a");
    return rep;
}

Report projection_suite(const MethodSpec& m, std::int64_t depth,
                        const std::vector<ProdSeq>& corpus, const std::vector<DepthBox>& boxes) {
    Report rep;
    rep.title = "projection laws for " + m.name();
    const MethodSpec& fm = factor_method(m);

    // (i) limit interchange pi_i(G~(x)) = G(pi_i(x)) needs no hypothesis.
    bool inter_ok = true;
    for (const auto& s : corpus) {
        if (!product_in_domain(m, s, depth)) continue;
        auto limits = product_limit(m, s, depth);
        for (std::int64_t i = 1; i <= depth; ++i) {
            auto direct = g_limit(fm, s.coordinate_trace(i));
            if (!(direct == limits[static_cast<std::size_t>(i - 1)])) inter_ok = false;
        }
    }
    rep.require("projection interchanges with the product limit", inter_ok);

    // (ii)/(iii) are contracted only under preserves-subsequences; a method
    // without it gets a named hypothesis violation rather than a silent skip.
    if (!fm.traits().preserves_subsequences) {
        rep.add(CheckResult::fail(
            "projection image/preimage laws",
            "hypothesis violation: " + fm.name() + " does not preserve subsequence convergence"));
        return rep;
    }
    bool image_ok = true, preimage_ok = true;
    for (const auto& b : boxes) {
        if (!box_closed(m, b)) continue;
        for (std::int64_t i = 1; i <= depth && i <= b.depth; ++i) {
            bool some_factor_empty = false;
            for (std::int64_t j = 1; j <= b.depth; ++j)
                if (b.factor(j).is_empty()) some_factor_empty = true;
            RSet image = some_factor_empty ? RSet::empty() : b.factor(i);
            if (!is_g_closed(fm, image)) image_ok = false;
        }
        // preimage pi_1^{-1}(A) = A x R x R x ...
        RSet a1 = b.factor(1);
        DepthBox pre{std::max<std::int64_t>(2, depth),
                     SetFamily::explicit_list({a1}, SetFamily::constant(RSet::line()))};
        if (is_g_closed(fm, a1) && !box_closed(m, pre)) preimage_ok = false;
    }
    rep.require("projection of a G-closed box is G-closed", image_ok);
    rep.require("preimage of a G-closed set is a G-closed box", preimage_ok);
    return rep;
}

Report product_connectedness(const MethodSpec& m, const std::vector<RSet>& factors) {
    if (factors.empty() || factors.size() > 3)
        throw std::invalid_argument("product_connectedness: 1 to 3 explicit factors");
    Report rep;
    rep.title = "factorwise G-connectedness criterion";
    const MethodSpec& fm = factor_method(m);
    bool all_connected = true;
    std::size_t witness = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        auto verdict = is_g_connected(fm, factors[i]);
        rep.require("factor " + std::to_string(i + 1) + " " + factors[i].str() +
                        (verdict.connected ? " G-connected" : " G-disconnected"),
                    true,
                    verdict.connected
                        ? ""
                        : "separation " + verdict.separation_f->str() + " | " +
                              verdict.separation_k->str());
        if (!verdict.connected) {
            all_connected = false;
            if (witness == 0) witness = i + 1;
        }
    }
    if (all_connected)
        rep.add(CheckResult::ok("product G-connected (all factors are)", "",
                                nlohmann::json{{"connected", true}}));
    else
        rep.add(CheckResult::ok("product G-disconnected (witness factor " +
                                    std::to_string(witness) + ")",
                                factors[witness - 1].str(),
                                nlohmann::json{{"connected", false},
                                               {"witness_factor", witness}}));
    return rep;
}

}  // namespace gconv
