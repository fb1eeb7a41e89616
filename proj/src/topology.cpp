#include "gconv/topology.hpp"

namespace gconv {

namespace {

constexpr int kFixpointGuard = 8;
constexpr std::size_t kSplitGuard = 20;

nlohmann::json set_json(const RSet& a) { return a.str(); }

}  // namespace

RSet hull(const MethodSpec& m, const RSet& a) {
    switch (m.scalar().kind()) {
        case MethodSpec::Kind::Lim:
        case MethodSpec::Kind::Statistical:
            return ordinary_closure(a);
        case MethodSpec::Kind::Cesaro: {
            if (a.is_empty()) return RSet::empty();
            ExtRat lo = *a.inf(), hi = *a.sup();
            return RSet::interval(lo, lo.finite(), hi, hi.finite());
        }
        default:
            throw MethodError("hull: no closed-form hull for " + m.name() +
                              "; use the achievability oracle");
    }
}

RSet kernel(const MethodSpec& m, const RSet& a) {
    return set_complement(hull(m, set_complement(a)));
}

bool is_g_closed(const MethodSpec& m, const RSet& a) { return hull(m, a) == a; }

bool is_g_open(const MethodSpec& m, const RSet& a) { return a.subset_of(kernel(m, a)); }

RSet g_closure(const MethodSpec& m, const RSet& a) {
    RSet cur = a;
    for (int i = 0; i < kFixpointGuard; ++i) {
        RSet next = hull(m, cur);
        if (next == cur) return cur;
        cur = next;
    }
    throw MethodError("g_closure: non-idempotent hull beyond guard");
}

RSet g_interior(const MethodSpec& m, const RSet& a) {
    RSet cur = kernel(m, a);  // kernel(A) is contained in A for regular methods
    for (int i = 0; i < kFixpointGuard; ++i) {
        RSet next = kernel(m, cur);
        if (next == cur) return cur;
        cur = next;
    }
    throw MethodError("g_interior: kernel iteration beyond guard");
}

bool is_g_dense(const MethodSpec& m, const RSet& a) { return g_closure(m, a).is_line(); }

bool is_relatively_g_closed(const MethodSpec& m, const RSet& f, const RSet& a) {
    if (!f.subset_of(a))
        throw std::invalid_argument("is_relatively_g_closed: F must be a subset of A");
    return set_intersect(g_closure(m, f), a) == f;
}

ConnectednessReport is_g_connected(const MethodSpec& m, const RSet& a) {
    if (a.is_empty()) throw std::invalid_argument("is_g_connected: A must be nonempty");
    // Separation candidates can be confined to whole ordinary components only
    // when every G-closed set is topologically closed (an interval component
    // cannot be split between two relatively closed pieces). Assert that the
    // method really is of this kind rather than silently mis-answering.
    if (!is_closed_ordinary(hull(m, a)))
        throw MethodError("is_g_connected: hull output not topologically closed for " + m.name());

    auto comps = a.components();
    const std::size_t c = comps.size();
    if (c > kSplitGuard) throw MethodError("is_g_connected: component count exceeds split guard");

    ConnectednessReport rep;
    if (c <= 1) {
        rep.connected = true;
        return rep;
    }
    // Lexicographically first assignment by component index: low bits first.
    const unsigned long long total = (1ull << c) - 1;
    for (unsigned long long mask = 1; mask < total; ++mask) {
        ++rep.splits_examined;
        RSet f, k;
        for (std::size_t i = 0; i < c; ++i) {
            if (mask & (1ull << i)) f = set_union(f, comps[i]);
            else k = set_union(k, comps[i]);
        }
        if (!is_closed_ordinary(g_closure(m, f)) || !is_closed_ordinary(g_closure(m, k)))
            throw MethodError("is_g_connected: hull output not topologically closed");
        if (is_relatively_g_closed(m, f, a) && is_relatively_g_closed(m, k, a)) {
            // Re-check the separation invariants before reporting.
            if (!set_intersect(f, k).is_empty() || !(set_union(f, k) == a) || f.is_empty() ||
                k.is_empty())
                throw std::logic_error("is_g_connected: malformed separation");
            rep.connected = false;
            rep.separation_f = f;
            rep.separation_k = k;
            return rep;
        }
    }
    rep.connected = true;
    return rep;
}

Report connectedness_union_law(const MethodSpec& m, const std::vector<RSet>& family) {
    Report rep;
    rep.title = "union of G-connected sets with a common point";
    if (family.empty()) throw std::invalid_argument("connectedness_union_law: empty family");
    RSet common = family.front();
    RSet whole;
    for (const auto& a : family) {
        rep.require("factor G-connected: " + a.str(), is_g_connected(m, a).connected);
        common = set_intersect(common, a);
        whole = set_union(whole, a);
    }
    rep.require("common point exists", !common.is_empty(), common.str());
    auto verdict = is_g_connected(m, whole);
    rep.require("union G-connected", verdict.connected, whole.str(), set_json(whole));
    return rep;
}

Report connectedness_image_law(const MethodSpec& m, const Rat& scale, const Rat& offset,
                               const RSet& a) {
    Report rep;
    rep.title = "G-continuous image of a G-connected set";
    rep.require("input G-connected", is_g_connected(m, a).connected, a.str());
    RSet image = affine_image(a, scale, offset);
    rep.require("map G-continuous on catalog sequences",
                m.scalar().kind() != MethodSpec::Kind::Matrix,
                "affine maps interchange with lim/cesaro/stat limits");
    auto verdict = is_g_connected(m, image);
    rep.require("image G-connected", verdict.connected, image.str(), set_json(image));
    return rep;
}

}  // namespace gconv
