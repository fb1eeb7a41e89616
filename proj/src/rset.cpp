#include "gconv/rset.hpp"

#include <algorithm>
#include <stdexcept>

namespace gconv {

namespace {

bool interval_empty(const Interval& iv) {
    if (iv.lo > iv.hi) return true;
    if (iv.lo == iv.hi) {
        // a point only when both ends closed (and finite)
        return !(iv.lo.finite() && iv.lo_closed && iv.hi_closed);
    }
    return false;
}

void validate(const Interval& iv) {
    if (!iv.lo.finite() && iv.lo_closed)
        throw std::invalid_argument("RSet: infinite endpoint must be open");
    if (!iv.hi.finite() && iv.hi_closed)
        throw std::invalid_argument("RSet: infinite endpoint must be open");
    if (iv.lo.kind() == ExtRat::Kind::PosInf || iv.hi.kind() == ExtRat::Kind::NegInf)
        throw std::invalid_argument("RSet: endpoint orientation");
}

// A.hi touches B.lo so that the union has no gap at the seam.
bool touches(const Interval& a, const Interval& b) {
    if (a.hi > b.lo) return true;
    if (a.hi == b.lo) return a.hi_closed || b.lo_closed;
    return false;
}

}  // namespace

RSet::RSet(std::vector<Interval> parts) {
    std::vector<Interval> kept;
    for (auto& iv : parts) {
        validate(iv);
        if (!interval_empty(iv)) kept.push_back(iv);
    }
    std::sort(kept.begin(), kept.end(), [](const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.lo_closed && !b.lo_closed;
    });
    for (auto& iv : kept) {
        if (!parts_.empty() && touches(parts_.back(), iv)) {
            Interval& cur = parts_.back();
            if (iv.hi > cur.hi)
                cur.hi = iv.hi, cur.hi_closed = iv.hi_closed;
            else if (iv.hi == cur.hi)
                cur.hi_closed = cur.hi_closed || iv.hi_closed;
        } else {
            parts_.push_back(iv);
        }
    }
}

RSet RSet::line() {
    return RSet({Interval{ExtRat::neg_inf(), ExtRat::pos_inf(), false, false}});
}

RSet RSet::point(const Rat& p) { return RSet({Interval{ExtRat(p), ExtRat(p), true, true}}); }

RSet RSet::interval(const ExtRat& lo, bool lc, const ExtRat& hi, bool hc) {
    return RSet({Interval{lo, hi, lc, hc}});
}

RSet RSet::interval(const Rat& lo, bool lc, const Rat& hi, bool hc) {
    return interval(ExtRat(lo), lc, ExtRat(hi), hc);
}

bool RSet::is_line() const {
    return parts_.size() == 1 && parts_[0].lo.kind() == ExtRat::Kind::NegInf &&
           parts_[0].hi.kind() == ExtRat::Kind::PosInf;
}

bool RSet::contains(const Rat& p) const {
    ExtRat e(p);
    for (const auto& iv : parts_) {
        if (e < iv.lo || (e == iv.lo && !iv.lo_closed)) continue;
        if (e > iv.hi || (e == iv.hi && !iv.hi_closed)) continue;
        return true;
    }
    return false;
}

bool RSet::subset_of(const RSet& other) const {
    return set_difference(*this, other).is_empty();
}

std::vector<RSet> RSet::components() const {
    std::vector<RSet> out;
    out.reserve(parts_.size());
    for (const auto& iv : parts_) out.push_back(RSet({iv}));
    return out;
}

std::optional<ExtRat> RSet::inf() const {
    if (parts_.empty()) return std::nullopt;
    return parts_.front().lo;
}

std::optional<ExtRat> RSet::sup() const {
    if (parts_.empty()) return std::nullopt;
    return parts_.back().hi;
}

bool RSet::bounded() const {
    return parts_.empty() || (parts_.front().lo.finite() && parts_.back().hi.finite());
}

std::string RSet::str() const {
    if (parts_.empty()) return "empty";
    if (is_line()) return "R";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        const auto& iv = parts_[i];
        if (i) out += " u ";
        if (iv.lo == iv.hi) {
            out += "{" + iv.lo.value().str() + "}";
        } else {
            out += iv.lo_closed ? "[" : "(";
            out += iv.lo.str();
            out += ",";
            out += iv.hi.str();
            out += iv.hi_closed ? "]" : ")";
        }
    }
    return out;
}

RSet set_union(const RSet& a, const RSet& b) {
    std::vector<Interval> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return RSet(std::move(parts));
}

RSet set_complement(const RSet& a) {
    std::vector<Interval> out;
    ExtRat cursor = ExtRat::neg_inf();
    bool cursor_closed = false;  // whether `cursor` itself belongs to the complement
    for (const auto& iv : a.parts()) {
        Interval gap{cursor, iv.lo, cursor_closed, !iv.lo_closed};
        if (!interval_empty(gap)) out.push_back(gap);
        cursor = iv.hi;
        cursor_closed = !iv.hi_closed;
    }
    Interval tail{cursor, ExtRat::pos_inf(), cursor_closed, false};
    if (!interval_empty(tail)) out.push_back(tail);
    return RSet(std::move(out));
}

RSet set_intersect(const RSet& a, const RSet& b) {
    std::vector<Interval> out;
    for (const auto& x : a.parts()) {
        for (const auto& y : b.parts()) {
            Interval iv;
            if (x.lo > y.lo) {
                iv.lo = x.lo;
                iv.lo_closed = x.lo_closed;
            } else if (x.lo < y.lo) {
                iv.lo = y.lo;
                iv.lo_closed = y.lo_closed;
            } else {
                iv.lo = x.lo;
                iv.lo_closed = x.lo_closed && y.lo_closed;
            }
            if (x.hi < y.hi) {
                iv.hi = x.hi;
                iv.hi_closed = x.hi_closed;
            } else if (x.hi > y.hi) {
                iv.hi = y.hi;
                iv.hi_closed = y.hi_closed;
            } else {
                iv.hi = x.hi;
                iv.hi_closed = x.hi_closed && y.hi_closed;
            }
            if (!interval_empty(iv)) out.push_back(iv);
        }
    }
    return RSet(std::move(out));
}

RSet set_difference(const RSet& a, const RSet& b) {
    return set_intersect(a, set_complement(b));
}

RSet minkowski_sum(const RSet& a, const RSet& b) {
    if (a.is_empty() || b.is_empty()) return RSet::empty();
    std::vector<Interval> out;
    for (const auto& x : a.parts()) {
        for (const auto& y : b.parts()) {
            Interval iv;
            iv.lo = x.lo + y.lo;
            iv.hi = x.hi + y.hi;
            iv.lo_closed = x.lo_closed && y.lo_closed && iv.lo.finite();
            iv.hi_closed = x.hi_closed && y.hi_closed && iv.hi.finite();
            out.push_back(iv);
        }
    }
    return RSet(std::move(out));
}

RSet set_negate(const RSet& a) {
    std::vector<Interval> out;
    for (const auto& iv : a.parts())
        out.push_back(Interval{-iv.hi, -iv.lo, iv.hi_closed, iv.lo_closed});
    return RSet(std::move(out));
}

RSet set_translate(const RSet& a, const Rat& g) {
    return minkowski_sum(a, RSet::point(g));
}

RSet affine_image(const RSet& s, const Rat& a, const Rat& b) {
    if (a.is_zero()) return s.is_empty() ? RSet::empty() : RSet::point(b);
    auto map = [&](const ExtRat& e) -> ExtRat {
        if (!e.finite()) return a.sign() > 0 ? e : -e;
        return ExtRat(a * e.value() + b);
    };
    std::vector<Interval> out;
    for (const auto& iv : s.parts()) {
        if (a.sign() > 0)
            out.push_back(Interval{map(iv.lo), map(iv.hi), iv.lo_closed, iv.hi_closed});
        else
            out.push_back(Interval{map(iv.hi), map(iv.lo), iv.hi_closed, iv.lo_closed});
    }
    return RSet(std::move(out));
}

RSet ordinary_closure(const RSet& a) {
    std::vector<Interval> out;
    for (auto iv : a.parts()) {
        if (iv.lo.finite()) iv.lo_closed = true;
        if (iv.hi.finite()) iv.hi_closed = true;
        out.push_back(iv);
    }
    return RSet(std::move(out));
}

RSet ordinary_interior(const RSet& a) {
    // Sound componentwise on normalized input: distinct components are
    // separated by at least a missing point.
    std::vector<Interval> out;
    for (auto iv : a.parts()) {
        iv.lo_closed = false;
        iv.hi_closed = false;
        out.push_back(iv);
    }
    return RSet(std::move(out));
}

bool is_closed_ordinary(const RSet& a) { return ordinary_closure(a) == a; }
bool is_open_ordinary(const RSet& a) { return ordinary_interior(a) == a; }
bool is_connected_ordinary(const RSet& a) { return a.component_count() <= 1; }

std::optional<Rat> distance(const Rat& p, const RSet& a) {
    if (a.is_empty()) return std::nullopt;
    ExtRat e(p);
    std::optional<Rat> best;
    for (const auto& iv : a.parts()) {
        Rat d;
        if (e < iv.lo)
            d = iv.lo.finite() ? iv.lo.value() - p : Rat(0);  // lo=-inf implies e>=lo
        else if (e > iv.hi)
            d = iv.hi.finite() ? p - iv.hi.value() : Rat(0);
        else
            d = Rat(0);
        if (!best || d < *best) best = d;
    }
    return best;
}

ExtRat hausdorff_gap(const RSet& b, const RSet& c) {
    if (b.is_empty()) return ExtRat(Rat(0));
    if (c.is_empty()) return ExtRat::pos_inf();
    // Unbounded sides of B must be tracked by C.
    if (b.parts().front().lo.kind() == ExtRat::Kind::NegInf &&
        c.parts().front().lo.kind() != ExtRat::Kind::NegInf)
        return ExtRat::pos_inf();
    if (b.parts().back().hi.kind() == ExtRat::Kind::PosInf &&
        c.parts().back().hi.kind() != ExtRat::Kind::PosInf)
        return ExtRat::pos_inf();
    // Candidate maximizers: finite endpoints of B, and midpoints of gaps
    // between consecutive components of C that fall inside B. dist(., C) is
    // piecewise linear with breakpoints exactly there.
    std::vector<Rat> candidates;
    for (const auto& iv : b.parts()) {
        if (iv.lo.finite()) candidates.push_back(iv.lo.value());
        if (iv.hi.finite()) candidates.push_back(iv.hi.value());
    }
    const auto& cp = c.parts();
    for (std::size_t i = 0; i + 1 < cp.size(); ++i) {
        if (cp[i].hi.finite() && cp[i + 1].lo.finite()) {
            Rat mid = (cp[i].hi.value() + cp[i + 1].lo.value()) / Rat(2);
            candidates.push_back(mid);
        }
    }
    Rat best(0);
    for (const auto& x : candidates) {
        ExtRat e(x);
        bool in_b = false;
        for (const auto& iv : b.parts())
            if (!(e < iv.lo) && !(e > iv.hi)) { in_b = true; break; }
        if (!in_b) continue;
        auto d = distance(x, c);
        if (d && *d > best) best = *d;
    }
    return ExtRat(best);
}

}  // namespace gconv
