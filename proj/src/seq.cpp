#include "gconv/seq.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace gconv {

// ---------------------------------------------------------------------------
// IndexFamily

IndexFamily IndexFamily::ap(std::int64_t first, std::int64_t step) {
    if (first < 1 || step < 1) throw std::invalid_argument("IndexFamily: ap needs first>=1, step>=1");
    IndexFamily f(Kind::AP);
    f.first_ = first;
    f.step_ = step;
    return f;
}

IndexFamily IndexFamily::finite(std::vector<std::int64_t> elems) {
    for (auto e : elems)
        if (e < 1) throw std::invalid_argument("IndexFamily: elements must be positive");
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    IndexFamily f(Kind::Finite);
    f.elems_ = std::move(elems);
    return f;
}

bool is_perfect_square(std::int64_t n) {
    if (n < 0) return false;
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    for (std::int64_t c = r > 1 ? r - 1 : 0; c <= r + 1; ++c)
        if (c * c == n) return true;
    return false;
}

bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

bool IndexFamily::contains(std::int64_t n) const {
    if (n < 1) return false;
    switch (kind_) {
        case Kind::Squares: return is_perfect_square(n);
        case Kind::PowersOfTwo: return is_power_of_two(n);
        case Kind::AP: return n >= first_ && (n - first_) % step_ == 0;
        case Kind::Finite: return std::binary_search(elems_.begin(), elems_.end(), n);
    }
    return false;
}

std::int64_t IndexFamily::nth(std::int64_t k) const {
    if (k < 1) throw std::invalid_argument("IndexFamily: k >= 1");
    switch (kind_) {
        case Kind::Squares: return k * k;
        case Kind::PowersOfTwo:
            if (k > 62) throw std::overflow_error("IndexFamily: power-of-two index overflow");
            return std::int64_t(1) << (k - 1);
        case Kind::AP: return first_ + (k - 1) * step_;
        case Kind::Finite: throw std::invalid_argument("IndexFamily: finite family has no nth enumeration here");
    }
    return 0;
}

Rat IndexFamily::natural_density() const {
    switch (kind_) {
        case Kind::Squares:
        case Kind::PowersOfTwo:
        case Kind::Finite: return Rat(0);
        case Kind::AP: return Rat(1, step_);
    }
    return Rat(0);
}

std::string IndexFamily::str() const {
    switch (kind_) {
        case Kind::Squares: return "squares";
        case Kind::PowersOfTwo: return "pow2";
        case Kind::AP: return "ap(" + std::to_string(first_) + "," + std::to_string(step_) + ")";
        case Kind::Finite: {
            std::string s = "finite(";
            for (std::size_t i = 0; i < elems_.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(elems_[i]);
            }
            return s + ")";
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// SeqSpec canonicalization

namespace {

// Smallest d | m such that the cycle is d-periodic.
std::vector<Rat> primitive_cycle(const std::vector<Rat>& cycle) {
    std::size_t m = cycle.size();
    for (std::size_t d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < m && ok; ++i) ok = cycle[i] == cycle[i % d];
        if (ok) return {cycle.begin(), cycle.begin() + static_cast<long>(d)};
    }
    return cycle;
}

}  // namespace

SeqSpec SeqSpec::make_periodic(std::vector<Rat> prefix, std::vector<Rat> cycle) {
    if (cycle.empty()) throw std::invalid_argument("SeqSpec: empty cycle");
    cycle = primitive_cycle(cycle);
    // Absorb prefix entries that already continue the cycle: dropping the last
    // prefix value and rotating the cycle right keeps the sequence unchanged.
    while (!prefix.empty() && prefix.back() == cycle.back()) {
        prefix.pop_back();
        std::rotate(cycle.begin(), cycle.end() - 1, cycle.end());
    }
    SeqSpec s;
    s.kind_ = Kind::Periodic;
    s.prefix_ = std::move(prefix);
    s.cycle_ = std::move(cycle);
    return s;
}

SeqSpec SeqSpec::eventually_constant(std::vector<Rat> prefix, Rat tail) {
    return make_periodic(std::move(prefix), {tail});
}

SeqSpec SeqSpec::eventually_periodic(std::vector<Rat> prefix, std::vector<Rat> cycle) {
    return make_periodic(std::move(prefix), std::move(cycle));
}

SeqSpec SeqSpec::spike_mix(Rat base, Rat spike, IndexFamily where) {
    if (base == spike) return constant(base);
    switch (where.kind()) {
        case IndexFamily::Kind::Finite: {
            std::vector<Rat> prefix;
            if (!where.elems().empty()) {
                prefix.assign(static_cast<std::size_t>(where.elems().back()), base);
                for (auto n : where.elems()) prefix[static_cast<std::size_t>(n - 1)] = spike;
            }
            return make_periodic(std::move(prefix), {base});
        }
        case IndexFamily::Kind::AP: {
            auto a = where.first(), d = where.step();
            std::vector<Rat> prefix(static_cast<std::size_t>(a - 1), base);
            std::vector<Rat> cycle(static_cast<std::size_t>(d), base);
            cycle[0] = spike;
            return make_periodic(std::move(prefix), std::move(cycle));
        }
        default: {
            SeqSpec s;
            s.kind_ = Kind::Spike;
            s.base_ = base;
            s.spike_ = spike;
            s.where_ = where;
            return s;
        }
    }
}

SeqSpec SeqSpec::tabulated(std::vector<Rat> values, const SeqSpec& beyond) {
    if (beyond.kind_ == Kind::Periodic) {
        auto L = std::max(values.size(), beyond.prefix_.size());
        std::vector<Rat> prefix;
        prefix.reserve(L);
        for (std::size_t n = 1; n <= L; ++n)
            prefix.push_back(n <= values.size() ? values[n - 1] : beyond.eval(static_cast<std::int64_t>(n)));
        std::size_t m = beyond.cycle_.size();
        std::size_t phase = (L - beyond.prefix_.size()) % m;  // L >= |beyond prefix|
        std::vector<Rat> cycle = beyond.cycle_;
        std::rotate(cycle.begin(), cycle.begin() + static_cast<long>(phase), cycle.end());
        return make_periodic(std::move(prefix), std::move(cycle));
    }
    if (beyond.kind_ == Kind::TabulatedSpike) {
        // Flatten: outer values override the front of the inner table.
        std::vector<Rat> merged;
        auto L = std::max(values.size(), beyond.prefix_.size());
        for (std::size_t n = 1; n <= L; ++n)
            merged.push_back(n <= values.size() ? values[n - 1] : beyond.eval(static_cast<std::int64_t>(n)));
        return tabulated(std::move(merged), spike_mix(beyond.base_, beyond.spike_, beyond.where_));
    }
    // beyond is a canonical Spike
    while (!values.empty() &&
           values.back() == beyond.eval(static_cast<std::int64_t>(values.size())))
        values.pop_back();
    if (values.empty()) return beyond;
    SeqSpec s;
    s.kind_ = Kind::TabulatedSpike;
    s.prefix_ = std::move(values);
    s.base_ = beyond.base_;
    s.spike_ = beyond.spike_;
    s.where_ = beyond.where_;
    return s;
}

Rat SeqSpec::eval(std::int64_t n) const {
    if (n < 1) throw std::invalid_argument("SeqSpec: n >= 1");
    switch (kind_) {
        case Kind::Periodic: {
            auto p = static_cast<std::int64_t>(prefix_.size());
            if (n <= p) return prefix_[static_cast<std::size_t>(n - 1)];
            auto m = static_cast<std::int64_t>(cycle_.size());
            return cycle_[static_cast<std::size_t>((n - p - 1) % m)];
        }
        case Kind::Spike: return where_.contains(n) ? spike_ : base_;
        case Kind::TabulatedSpike: {
            if (n <= static_cast<std::int64_t>(prefix_.size()))
                return prefix_[static_cast<std::size_t>(n - 1)];
            return where_.contains(n) ? spike_ : base_;
        }
    }
    throw std::logic_error("SeqSpec: bad kind");
}

bool SeqSpec::eventually_constant_value(Rat* out) const {
    if (kind_ != Kind::Periodic || cycle_.size() != 1) return false;
    if (out) *out = cycle_[0];
    return true;
}

std::vector<Rat> SeqSpec::tail_values() const {
    if (kind_ == Kind::Periodic) return cycle_;
    return {base_, spike_};
}

std::int64_t SeqSpec::head_length() const {
    return kind_ == Kind::Spike ? 0 : static_cast<std::int64_t>(prefix_.size());
}

bool SeqSpec::almost_in(const RSet& a) const {
    // Spike families here are infinite with infinite complement, so both
    // base and spike recur infinitely often.
    for (const auto& v : tail_values())
        if (!a.contains(v)) return false;
    return true;
}

bool SeqSpec::range_in(const RSet& a) const {
    for (const auto& v : prefix_)
        if (!a.contains(v)) return false;
    return almost_in(a);
}

std::string SeqSpec::str() const {
    auto list = [](const std::vector<Rat>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += v[i].str();
        }
        return s + "]";
    };
    switch (kind_) {
        case Kind::Periodic:
            if (cycle_.size() == 1) {
                if (prefix_.empty()) return "const(tail=" + cycle_[0].str() + ")";
                return "const(prefix=" + list(prefix_) + "; tail=" + cycle_[0].str() + ")";
            }
            return "per(prefix=" + list(prefix_) + "; cycle=" + list(cycle_) + ")";
        case Kind::Spike:
            return "spike(base=" + base_.str() + "; spike=" + spike_.str() +
                   "; where=" + where_.str() + ")";
        case Kind::TabulatedSpike:
            return "tab(values=" + list(prefix_) + "; beyond=spike(base=" + base_.str() +
                   "; spike=" + spike_.str() + "; where=" + where_.str() + "))";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// transform / subsequence / sum

Rat SeqMap::apply(const Rat& x) const {
    switch (kind) {
        case Kind::Translate: return x + b;
        case Kind::Negate: return -x;
        case Kind::Affine: return a * x + b;
    }
    return x;
}

SeqSpec transform(const SeqSpec& s, const SeqMap& map) {
    switch (s.kind()) {
        case SeqSpec::Kind::Periodic: {
            std::vector<Rat> prefix, cycle;
            for (const auto& v : s.prefix()) prefix.push_back(map.apply(v));
            for (const auto& v : s.cycle()) cycle.push_back(map.apply(v));
            return SeqSpec::eventually_periodic(std::move(prefix), std::move(cycle));
        }
        case SeqSpec::Kind::Spike:
            return SeqSpec::spike_mix(map.apply(s.base()), map.apply(s.spike()), s.where());
        case SeqSpec::Kind::TabulatedSpike: {
            std::vector<Rat> values;
            for (const auto& v : s.values()) values.push_back(map.apply(v));
            return SeqSpec::tabulated(
                std::move(values),
                SeqSpec::spike_mix(map.apply(s.base()), map.apply(s.spike()), s.where()));
        }
    }
    throw std::logic_error("transform: bad kind");
}

namespace {

std::int64_t mod_pow2(std::int64_t exponent, std::int64_t m) {
    std::int64_t r = 1 % m;
    for (std::int64_t i = 0; i < exponent; ++i) r = (r * 2) % m;
    return r;
}

// Residue of the k-th index of `along` modulo m, without materializing n_k.
std::int64_t nth_mod(const IndexFamily& along, std::int64_t k, std::int64_t m) {
    switch (along.kind()) {
        case IndexFamily::Kind::Squares: {
            std::int64_t km = k % m;
            return (km * km) % m;
        }
        case IndexFamily::Kind::PowersOfTwo: return mod_pow2(k - 1, m);
        case IndexFamily::Kind::AP:
            return ((along.first() % m) + ((k - 1) % m) * (along.step() % m)) % m;
        default: throw std::logic_error("nth_mod: finite family");
    }
}

// Subsequence of a canonical periodic sequence along an infinite family.
SeqSpec subsequence_periodic(const SeqSpec& s, const IndexFamily& along) {
    auto p = static_cast<std::int64_t>(s.prefix().size());
    auto m = static_cast<std::int64_t>(s.cycle().size());

    // Count indices that still fall in the prefix.
    std::int64_t pre = 0;
    while (true) {
        // Guard nth() overflow for powers of two: indices beyond 2^62 cannot
        // land in a finite prefix anyway.
        if (along.kind() == IndexFamily::Kind::PowersOfTwo && pre + 1 > 62) break;
        if (along.nth(pre + 1) > p) break;
        ++pre;
    }

    std::int64_t period = m;
    if (along.kind() == IndexFamily::Kind::PowersOfTwo) {
        // Orbit of 2^j mod m is eventually periodic; find entry point and period.
        std::map<std::int64_t, std::int64_t> seen;
        std::int64_t r = 1 % m;
        std::int64_t j = 0;
        while (!seen.count(r)) {
            seen[r] = j;
            r = (r * 2) % m;
            ++j;
        }
        std::int64_t j0 = seen[r];
        period = j - j0;
        pre = std::max(pre, j0);  // k - 1 >= j0 for periodicity in k
    }

    std::vector<Rat> prefix, cycle;
    for (std::int64_t k = 1; k <= pre; ++k) prefix.push_back(s.eval(along.nth(k)));
    for (std::int64_t k = pre + 1; k <= pre + period; ++k) {
        // n_k > p here, so the term is cycle[(n_k - p - 1) mod m].
        std::int64_t idx = ((nth_mod(along, k, m) - (p + 1) % m) % m + m) % m;
        cycle.push_back(s.cycle()[static_cast<std::size_t>(idx)]);
    }
    return SeqSpec::eventually_periodic(std::move(prefix), std::move(cycle));
}

// Subsequence of a canonical spike sequence. Exact case analysis; spike
// patterns that fall outside the family catalog raise Unrepresentable.
SeqSpec subsequence_spike(const Rat& base, const Rat& spike, const IndexFamily& w,
                          const IndexFamily& along) {
    using K = IndexFamily::Kind;
    if (along == w) return SeqSpec::constant(spike);

    if (along.kind() == K::AP) {
        auto a = along.first(), d = along.step();
        if (w.kind() == K::Squares) {
            // n_k = a + (k-1)d is a square only if some residue r has
            // r^2 = a (mod d); any solution yields infinitely many spikes.
            for (std::int64_t r = 0; r < d; ++r)
                if ((r * r) % d == a % d)
                    throw Unrepresentable("subsequence: squares along " + along.str() +
                                          " leaves the catalog");
            return SeqSpec::constant(base);
        }
        // w == PowersOfTwo: spikes at k with a + (k-1)d = 2^t. If a mod d
        // recurs in the eventual orbit of 2^t mod d the spike set is infinite.
        std::map<std::int64_t, std::int64_t> seen;
        std::int64_t r = 1 % d, t = 0;
        while (!seen.count(r)) {
            seen[r] = t;
            r = (r * 2) % d;
            ++t;
        }
        std::int64_t cycle_entry = seen[r];
        std::vector<std::int64_t> spike_ks;
        for (std::int64_t e = 0; e <= 62; ++e) {
            std::int64_t pw = std::int64_t(1) << e;
            if (pw < a || (pw - a) % d != 0) continue;
            if (e >= cycle_entry)
                throw Unrepresentable("subsequence: pow2 along " + along.str() +
                                      " leaves the catalog");
            spike_ks.push_back((pw - a) / d + 1);
        }
        if (spike_ks.empty()) return SeqSpec::constant(base);
        std::vector<Rat> prefix(static_cast<std::size_t>(spike_ks.back()), base);
        for (auto k : spike_ks) prefix[static_cast<std::size_t>(k - 1)] = spike;
        return SeqSpec::eventually_constant(std::move(prefix), base);
    }

    if (along.kind() == K::Squares && w.kind() == K::PowersOfTwo)
        // k^2 = 2^t iff k itself is a power of two.
        return SeqSpec::spike_mix(base, spike, IndexFamily::powers_of_two());

    if (along.kind() == K::PowersOfTwo && w.kind() == K::Squares)
        // 2^(k-1) is a square iff k is odd.
        return SeqSpec::eventually_periodic({}, {spike, base});

    throw Unrepresentable("subsequence: " + w.str() + " along " + along.str() +
                          " leaves the catalog");
}

}  // namespace

SeqSpec subsequence(const SeqSpec& s, const IndexFamily& along) {
    if (!along.infinite())
        throw std::invalid_argument("subsequence: finite index families do not define subsequences");
    if (along == IndexFamily::ap(1, 1)) return s;  // identity subsequence
    switch (s.kind()) {
        case SeqSpec::Kind::Periodic: return subsequence_periodic(s, along);
        case SeqSpec::Kind::Spike:
            return subsequence_spike(s.base(), s.spike(), s.where(), along);
        case SeqSpec::Kind::TabulatedSpike: {
            SeqSpec rest = subsequence_spike(s.base(), s.spike(), s.where(), along);
            // Front indices that still read from the table.
            std::int64_t front = 0;
            auto len = static_cast<std::int64_t>(s.values().size());
            while (!(along.kind() == IndexFamily::Kind::PowersOfTwo && front + 1 > 62) &&
                   along.nth(front + 1) <= len)
                ++front;
            std::vector<Rat> head;
            for (std::int64_t k = 1; k <= front; ++k) head.push_back(s.eval(along.nth(k)));
            return SeqSpec::tabulated(std::move(head), rest);
        }
    }
    throw std::logic_error("subsequence: bad kind");
}

namespace {

std::optional<SeqSpec> add_periodic(const SeqSpec& a, const SeqSpec& b) {
    auto pa = static_cast<std::int64_t>(a.prefix().size());
    auto pb = static_cast<std::int64_t>(b.prefix().size());
    auto ma = static_cast<std::int64_t>(a.cycle().size());
    auto mb = static_cast<std::int64_t>(b.cycle().size());
    std::int64_t p = std::max(pa, pb);
    std::int64_t m = std::lcm(ma, mb);
    std::vector<Rat> prefix, cycle;
    for (std::int64_t n = 1; n <= p; ++n) prefix.push_back(a.eval(n) + b.eval(n));
    for (std::int64_t n = p + 1; n <= p + m; ++n) cycle.push_back(a.eval(n) + b.eval(n));
    return SeqSpec::eventually_periodic(std::move(prefix), std::move(cycle));
}

}  // namespace

std::optional<SeqSpec> try_add(const SeqSpec& a, const SeqSpec& b) {
    using K = SeqSpec::Kind;
    if (a.kind() == K::Periodic && b.kind() == K::Periodic) return add_periodic(a, b);
    if (a.kind() == K::Periodic || b.kind() == K::Periodic) {
        const SeqSpec& per = a.kind() == K::Periodic ? a : b;
        const SeqSpec& sp = a.kind() == K::Periodic ? b : a;
        Rat c;
        if (!per.eventually_constant_value(&c)) return std::nullopt;
        std::int64_t head = std::max(per.head_length(), sp.head_length());
        std::vector<Rat> values;
        for (std::int64_t n = 1; n <= head; ++n) values.push_back(per.eval(n) + sp.eval(n));
        return SeqSpec::tabulated(std::move(values),
                                  SeqSpec::spike_mix(sp.base() + c, sp.spike() + c, sp.where()));
    }
    // both spike-like: representable only over the same family
    if (!(a.where() == b.where())) return std::nullopt;
    std::int64_t head = std::max(a.head_length(), b.head_length());
    std::vector<Rat> values;
    for (std::int64_t n = 1; n <= head; ++n) values.push_back(a.eval(n) + b.eval(n));
    return SeqSpec::tabulated(std::move(values),
                              SeqSpec::spike_mix(a.base() + b.base(), a.spike() + b.spike(),
                                                 a.where()));
}

}  // namespace gconv
