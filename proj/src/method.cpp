#include "gconv/method.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace gconv {

// ---------------------------------------------------------------------------
// MatrixSpec

MatrixSpec MatrixSpec::scaled_identity(Rat c) {
    MatrixSpec m;
    m.form = Form::ScaledIdentity;
    m.scale = c;
    m.label = "diag(" + c.str() + ")";
    return m;
}

MatrixSpec MatrixSpec::constant_column(std::int64_t col, Rat c) {
    if (col < 1) throw std::invalid_argument("MatrixSpec: column >= 1");
    MatrixSpec m;
    m.form = Form::ConstantColumn;
    m.column = col;
    m.scale = c;
    m.label = "column(" + std::to_string(col) + "," + c.str() + ")";
    return m;
}

namespace {

Rat parse_rat_token(const std::string& tok) {
    auto slash = tok.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(tok));
        return Rat(std::stoll(tok.substr(0, slash)), std::stoll(tok.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("matrix file: bad rational '" + tok + "'");
    }
}

}  // namespace

MatrixSpec MatrixSpec::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("matrix file: cannot open " + path);
    MatrixSpec m;
    m.label = path;
    std::string line;
    bool first_content = true;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        if (first_content && line == "cesaro") return cesaro();
        first_content = false;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("matrix file: missing 'n:' on line '" + line + "'");
        std::int64_t n = std::stoll(line.substr(0, colon));
        if (n < 1) throw std::invalid_argument("matrix file: row index >= 1");
        if (static_cast<std::size_t>(n) > m.rows.size()) m.rows.resize(static_cast<std::size_t>(n));
        std::vector<std::pair<std::int64_t, Rat>> row;
        std::stringstream ss(line.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("matrix file: expected k=p/q in '" + item + "'");
            std::int64_t k = std::stoll(item.substr(0, eq));
            if (k < 1) throw std::invalid_argument("matrix file: column index >= 1");
            std::string val = item.substr(eq + 1);
            auto vb = val.find_first_not_of(" \t");
            auto ve = val.find_last_not_of(" \t");
            row.emplace_back(k, parse_rat_token(val.substr(vb, ve - vb + 1)));
        }
        m.rows[static_cast<std::size_t>(n - 1)] = std::move(row);
    }
    m.form = Form::Explicit;
    if (m.rows.empty()) throw std::invalid_argument("matrix file: no rows");
    return m;
}

std::string MatrixSpec::name() const {
    switch (form) {
        case Form::Cesaro: return "cesaro";
        default: return label.empty() ? "explicit" : label;
    }
}

// ---------------------------------------------------------------------------
// MethodSpec

MethodSpec MethodSpec::lim() {
    MethodSpec m;
    m.kind_ = Kind::Lim;
    m.traits_ = {true, true, true, true};
    return m;
}

MethodSpec MethodSpec::cesaro() {
    MethodSpec m;
    m.kind_ = Kind::Cesaro;
    m.traits_ = {true, false, false, true};
    return m;
}

MethodSpec MethodSpec::statistical() {
    MethodSpec m;
    m.kind_ = Kind::Statistical;
    m.traits_ = {true, true, false, true};
    return m;
}

MethodSpec MethodSpec::matrix(MatrixSpec spec, NumericParams p) {
    if (p.n_max < 100) throw std::invalid_argument("MethodSpec: N_max >= 100");
    if (!(p.tolerance > Rat(0))) throw std::invalid_argument("MethodSpec: tolerance > 0");
    MethodSpec m;
    m.kind_ = Kind::Matrix;
    m.matrix_ = std::make_shared<MatrixSpec>(std::move(spec));
    m.params_ = p;
    if (m.matrix_->form == MatrixSpec::Form::Cesaro)
        m.traits_ = {true, false, false, true};  // exact Cesaro route
    else
        m.traits_ = {false, false, false, false};  // nothing verified symbolically
    return m;
}

MethodSpec MethodSpec::product(MethodSpec factor) {
    MethodSpec m;
    m.kind_ = Kind::Product;
    m.traits_ = factor.traits_;  // coordinatewise method inherits factor traits
    m.params_ = factor.params_;
    m.factor_ = std::make_shared<MethodSpec>(std::move(factor));
    return m;
}

const MethodSpec& MethodSpec::factor() const {
    if (kind_ != Kind::Product) throw std::logic_error("MethodSpec: not a product method");
    return *factor_;
}

const MethodSpec& MethodSpec::scalar() const {
    return kind_ == Kind::Product ? factor_->scalar() : *this;
}

const MatrixSpec& MethodSpec::matrix_spec() const {
    if (kind_ != Kind::Matrix) throw std::logic_error("MethodSpec: not a matrix method");
    return *matrix_;
}

std::string MethodSpec::name() const {
    switch (kind_) {
        case Kind::Lim: return "lim";
        case Kind::Cesaro: return "cesaro";
        case Kind::Statistical: return "stat";
        case Kind::Matrix: return "matrix:" + matrix_->name();
        case Kind::Product: return "prod(" + factor_->name() + ")";
    }
    return "?";
}

std::string LimitResult::str() const {
    switch (kind) {
        case Kind::Converges: return "converges(" + value.str() + (exact ? ", exact)" : ")");
        case Kind::Diverges: return "diverges";
        case Kind::Unknown:
            return "unknown(estimate=" + estimate.str() + ", spread=" + spread.str() + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// domain / limit

namespace {

Rat cycle_mean(const std::vector<Rat>& cycle) {
    Rat sum(0);
    for (const auto& v : cycle) sum += v;
    return sum / Rat(static_cast<std::int64_t>(cycle.size()));
}

// Exact Cesaro limit: the prefix contributes nothing asymptotically, the
// cycle contributes its mean, spikes contribute at their natural density.
Rat cesaro_limit_exact(const SeqSpec& s) {
    switch (s.kind()) {
        case SeqSpec::Kind::Periodic: return cycle_mean(s.cycle());
        case SeqSpec::Kind::Spike:
        case SeqSpec::Kind::TabulatedSpike:
            return s.base() + (s.spike() - s.base()) * s.where().natural_density();
    }
    throw std::logic_error("cesaro_limit_exact");
}

// Statistical limit off a density-zero exceptional set, when it exists.
std::optional<Rat> statistical_limit_exact(const SeqSpec& s) {
    Rat c;
    if (s.eventually_constant_value(&c)) return c;
    switch (s.kind()) {
        case SeqSpec::Kind::Periodic:
            // Primitive cycle of length >= 2: at least two distinct values,
            // each occurring with positive density.
            return std::nullopt;
        case SeqSpec::Kind::Spike:
        case SeqSpec::Kind::TabulatedSpike:
            // Canonical spike families (squares, powers of two) have density 0.
            return s.base();
    }
    return std::nullopt;
}

// Numeric matrix transform row evaluation: y_n = sum_k a_nk x_k.
struct MatrixEval {
    double estimate = 0;
    double spread = 0;
    bool cauchy = false;
};

std::vector<std::pair<std::int64_t, Rat>> matrix_row(const MatrixSpec& m, std::int64_t n) {
    switch (m.form) {
        case MatrixSpec::Form::Cesaro: {
            std::vector<std::pair<std::int64_t, Rat>> row;
            row.reserve(static_cast<std::size_t>(n));
            for (std::int64_t k = 1; k <= n; ++k) row.emplace_back(k, Rat(1, n));
            return row;
        }
        case MatrixSpec::Form::ScaledIdentity: return {{n, m.scale}};
        case MatrixSpec::Form::ConstantColumn: return {{m.column, m.scale}};
        case MatrixSpec::Form::Explicit:
            if (static_cast<std::size_t>(n) <= m.rows.size())
                return m.rows[static_cast<std::size_t>(n - 1)];
            return {};
    }
    return {};
}

MatrixEval matrix_evaluate(const MatrixSpec& spec, const NumericParams& p, const SeqSpec& s) {
    std::int64_t n_rows = p.n_max;
    if (spec.form == MatrixSpec::Form::Explicit)
        n_rows = std::min<std::int64_t>(n_rows, static_cast<std::int64_t>(spec.rows.size()));
    if (spec.form == MatrixSpec::Form::Cesaro) {
        // Row n averages the first n terms; keep the scan incremental.
        double sum = 0, y = 0, mn = 0, mx = 0;
        std::int64_t window = std::max<std::int64_t>(1, n_rows / 4);
        bool started = false;
        for (std::int64_t n = 1; n <= n_rows; ++n) {
            sum += s.eval(n).to_double();
            y = sum / static_cast<double>(n);
            if (n > n_rows - window) {
                if (!started) mn = mx = y, started = true;
                mn = std::min(mn, y);
                mx = std::max(mx, y);
            }
        }
        return {y, mx - mn, (mx - mn) <= p.tolerance.to_double()};
    }
    double y = 0, mn = 0, mx = 0;
    bool started = false;
    std::int64_t window = std::max<std::int64_t>(1, n_rows / 4);
    for (std::int64_t n = 1; n <= n_rows; ++n) {
        double acc = 0;
        for (const auto& [k, a] : matrix_row(spec, n)) acc += a.to_double() * s.eval(k).to_double();
        y = acc;
        if (n > n_rows - window) {
            if (!started) mn = mx = y, started = true;
            mn = std::min(mn, y);
            mx = std::max(mx, y);
        }
    }
    return {y, mx - mn, started && (mx - mn) <= p.tolerance.to_double()};
}

Rat rat_from_double(double v) {
    // Wire-grade approximation for numeric estimates; exactness is never
    // claimed on this path.
    const double scale = 1e12;
    double r = std::round(v * scale);
    if (std::abs(r) > 9e17) throw std::overflow_error("rat_from_double: out of range");
    return Rat(static_cast<std::int64_t>(r), static_cast<std::int64_t>(scale));
}

}  // namespace

std::pair<double, double> numeric_matrix_estimate(const MatrixSpec& m, const NumericParams& p,
                                                  const SeqSpec& s) {
    auto ev = matrix_evaluate(m, p, s);
    return {ev.estimate, ev.spread};
}

bool in_domain(const MethodSpec& m, const SeqSpec& s) {
    switch (m.kind()) {
        case MethodSpec::Kind::Lim: return s.eventually_constant_value();
        case MethodSpec::Kind::Cesaro: return true;
        case MethodSpec::Kind::Statistical: return statistical_limit_exact(s).has_value();
        case MethodSpec::Kind::Matrix:
            if (m.matrix_spec().form == MatrixSpec::Form::Cesaro) return true;
            return matrix_evaluate(m.matrix_spec(), m.params(), s).cauchy;
        case MethodSpec::Kind::Product:
            // A scalar sequence is a depth-1 product.
            return in_domain(m.factor(), s);
    }
    return false;
}

LimitResult g_limit(const MethodSpec& m, const SeqSpec& s) {
    switch (m.kind()) {
        case MethodSpec::Kind::Lim: {
            Rat c;
            if (s.eventually_constant_value(&c)) return LimitResult::converges(c);
            return LimitResult::diverges();
        }
        case MethodSpec::Kind::Cesaro: return LimitResult::converges(cesaro_limit_exact(s));
        case MethodSpec::Kind::Statistical: {
            auto v = statistical_limit_exact(s);
            return v ? LimitResult::converges(*v) : LimitResult::diverges();
        }
        case MethodSpec::Kind::Matrix: {
            if (m.matrix_spec().form == MatrixSpec::Form::Cesaro)
                return LimitResult::converges(cesaro_limit_exact(s));
            // Numeric evidence cannot prove divergence: never Diverges here.
            auto ev = matrix_evaluate(m.matrix_spec(), m.params(), s);
            return LimitResult::unknown(rat_from_double(ev.estimate), rat_from_double(ev.spread));
        }
        case MethodSpec::Kind::Product: return g_limit(m.factor(), s);
    }
    return LimitResult::diverges();
}

// ---------------------------------------------------------------------------
// Silverman-Toeplitz

TraitVerdict check_matrix_regular(const MatrixSpec& m, const NumericParams& p) {
    TraitVerdict v;
    v.trait = "matrix-regular";
    switch (m.form) {
        case MatrixSpec::Form::Cesaro:
            // (i) sum_k |a_nk| = 1, (ii) column entries 1/n -> 0, (iii) row sums = 1.
            v.holds = true;
            v.scope = "proved-exactly";
            v.detail = "rows a_nk = 1/n for k<=n: norm 1, columns 1/n -> 0, row sums 1";
            return v;
        case MatrixSpec::Form::ScaledIdentity: {
            v.scope = "proved-exactly";
            if (m.scale == Rat(1)) {
                v.holds = true;
                v.detail = "identity matrix";
                return v;
            }
            v.holds = false;
            v.detail = "fails (iii): row sums are identically " + m.scale.str();
            v.witness_values = {m.scale};
            return v;
        }
        case MatrixSpec::Form::ConstantColumn: {
            v.scope = "proved-exactly";
            if (!m.scale.is_zero()) {
                v.holds = false;
                v.detail = "fails (ii): column k=" + std::to_string(m.column) +
                           " is constant " + m.scale.str();
                v.witness_values = {m.scale};
                return v;
            }
            v.holds = false;
            v.detail = "fails (iii): row sums are identically 0";
            v.witness_values = {Rat(0)};
            return v;
        }
        case MatrixSpec::Form::Explicit: break;
    }
    // Numeric bound checks over the available rows.
    v.scope = "corpus-checked";
    const auto n_rows = static_cast<std::int64_t>(m.rows.size());
    if (n_rows == 0) throw MethodError("check_matrix_regular: no rows");
    double tol = p.tolerance.to_double();
    double sup_norm = 0;
    std::int64_t max_col = 0;
    for (const auto& row : m.rows) {
        double norm = 0;
        for (const auto& [k, a] : row) {
            norm += std::abs(a.to_double());
            max_col = std::max(max_col, k);
        }
        sup_norm = std::max(sup_norm, norm);
    }
    std::int64_t tail_start = n_rows - std::max<std::int64_t>(1, n_rows / 4);
    // Column decay is a per-fixed-k limit: only columns far below the tail
    // window have had room to settle, so the numeric check stops there.
    std::int64_t settled_cols = std::min(max_col, std::max<std::int64_t>(1, n_rows / 4));
    for (std::int64_t k = 1; k <= settled_cols; ++k) {
        for (std::int64_t n = tail_start + 1; n <= n_rows; ++n) {
            double a = 0;
            for (const auto& [kk, av] : m.rows[static_cast<std::size_t>(n - 1)])
                if (kk == k) a = av.to_double();
            if (std::abs(a) > std::max(tol, 1e-6)) {
                v.holds = false;
                v.detail = "fails (ii) numerically at column k=" + std::to_string(k) +
                           ", row n=" + std::to_string(n);
                return v;
            }
        }
    }
    for (std::int64_t n = tail_start + 1; n <= n_rows; ++n) {
        double sum = 0;
        for (const auto& [k, a] : m.rows[static_cast<std::size_t>(n - 1)]) sum += a.to_double();
        if (std::abs(sum - 1.0) > std::max(tol, 1e-6)) {
            v.holds = false;
            v.detail = "fails (iii) numerically at row n=" + std::to_string(n);
            return v;
        }
    }
    v.holds = true;
    char buf[64];
    std::snprintf(buf, sizeof buf, "sup row norm %.6g", sup_norm);
    v.detail = std::string(buf) + " over " + std::to_string(n_rows) + " rows";
    return v;
}

// ---------------------------------------------------------------------------
// trait checkers

TraitVerdict check_regular_empirical(const MethodSpec& m, const std::vector<SeqSpec>& corpus) {
    for (const auto& s : corpus)
        if (!s.eventually_constant_value())
            throw std::invalid_argument("check_regular_empirical: corpus must be convergent");
    TraitVerdict v;
    v.trait = "regular";
    v.scope = "corpus-checked";
    v.holds = true;
    for (const auto& s : corpus) {
        auto expect = g_limit(MethodSpec::lim(), s);
        auto got = g_limit(m, s);
        bool ok;
        if (got.is(LimitResult::Kind::Unknown))
            ok = (got.estimate - expect.value).abs().to_double() <= 4 * m.params().tolerance.to_double();
        else
            ok = got.is(LimitResult::Kind::Converges) && got.value == expect.value;
        if (!ok) {
            v.holds = false;
            v.witness_seq = s;
            v.witness_values = {expect.value};
            v.detail = "limit mismatch on " + s.str() + ": expected " + expect.value.str() +
                       ", got " + got.str();
            return v;
        }
    }
    v.detail = "agrees with lim on " + std::to_string(corpus.size()) + " convergent sequences";
    return v;
}

TraitVerdict check_preserves_subsequences(const MethodSpec& m, const std::vector<SeqSpec>& corpus,
                                          const std::vector<IndexFamily>& families) {
    for (const auto& f : families)
        if (!f.infinite())
            throw std::invalid_argument("check_preserves_subsequences: families must be infinite");
    TraitVerdict v;
    v.trait = "preserves-subsequences";
    // For lim the conclusion also has a closed-form argument in the catalog:
    // a convergent sequence is eventually constant, and every subsequence of
    // it is eventually constant with the same tail.
    v.scope = m.scalar().kind() == MethodSpec::Kind::Lim ? "proved-exactly" : "corpus-checked";
    v.holds = true;
    for (const auto& s : corpus) {
        auto l = g_limit(m, s);
        if (!l.is(LimitResult::Kind::Converges)) continue;
        for (const auto& f : families) {
            SeqSpec sub = SeqSpec::constant(Rat(0));
            try {
                sub = subsequence(s, f);
            } catch (const Unrepresentable&) {
                ++v.skipped;
                continue;
            }
            auto lsub = g_limit(m, sub);
            if (!(lsub.is(LimitResult::Kind::Converges) && lsub.value == l.value)) {
                v.holds = false;
                v.witness_seq = s;
                v.witness_family = f;
                v.witness_values = {l.value};
                if (lsub.is(LimitResult::Kind::Converges)) v.witness_values.push_back(lsub.value);
                v.detail = "G(" + s.str() + ") = " + l.value.str() + " but along " + f.str() +
                           " the subsequence " + sub.str() + " gives " + lsub.str();
                return v;
            }
        }
    }
    v.detail = "all subsequence limits agree";
    return v;
}

TraitVerdict check_subsequential(const MethodSpec& m, const SeqSpec& s) {
    if (!in_domain(m, s)) throw std::invalid_argument("check_subsequential: sequence not in domain");
    TraitVerdict v;
    v.trait = "subsequential";
    v.scope = "proved-exactly";
    auto l = g_limit(m, s);
    if (!l.is(LimitResult::Kind::Converges))
        throw std::invalid_argument("check_subsequential: no symbolic limit");

    auto verify = [&](const IndexFamily& f) -> bool {
        auto sub = subsequence(s, f);
        Rat c;
        return sub.eventually_constant_value(&c) && c == l.value;
    };

    // Ordinarily convergent: the identity subsequence witnesses it.
    Rat c;
    if (s.eventually_constant_value(&c)) {
        v.holds = true;
        v.witness_family = IndexFamily::ap(1, 1);
        v.detail = "identity subsequence converges to " + l.value.str();
        return v;
    }

    if (s.kind() == SeqSpec::Kind::Periodic) {
        // Limit is the cycle mean; a convergent subsequence must eventually
        // sit on one value, so it exists iff the limit is a cycle value.
        const auto& cyc = s.cycle();
        auto mth = static_cast<std::int64_t>(cyc.size());
        for (std::int64_t j = 0; j < mth; ++j) {
            if (cyc[static_cast<std::size_t>(j)] != l.value) continue;
            // Positions of cycle slot j form an AP with step m.
            auto p = static_cast<std::int64_t>(s.prefix().size());
            auto fam = IndexFamily::ap(p + 1 + j, mth);
            if (verify(fam)) {
                v.holds = true;
                v.witness_family = fam;
                v.detail = "subsequence along " + fam.str() + " is constant " + l.value.str();
                return v;
            }
        }
        v.holds = false;
        v.witness_seq = s;
        v.witness_values = {l.value};
        v.detail = "limit " + l.value.str() +
                   " is not among the tail values; no subsequence can converge to it";
        return v;
    }

    // Spike-like: the limit is the base; dodge the spikes along an AP.
    IndexFamily avoid = s.where().kind() == IndexFamily::Kind::Squares
                            ? IndexFamily::ap(2, 4)   // n = 2 mod 4 is never a square
                            : IndexFamily::ap(3, 2);  // odd n >= 3 is never a power of two
    if (verify(avoid)) {
        v.holds = true;
        v.witness_family = avoid;
        v.detail = "subsequence along " + avoid.str() + " is constant " + l.value.str();
        return v;
    }
    v.holds = false;
    v.witness_seq = s;
    v.detail = "no catalog subsequence converges to " + l.value.str();
    return v;
}

TraitVerdict check_translate_regular(const MethodSpec& m, const std::vector<SeqSpec>& corpus,
                                     const std::vector<Rat>& shifts) {
    TraitVerdict v;
    v.trait = "translate-regular";
    v.scope = "corpus-checked";
    v.holds = true;
    for (const auto& s : corpus) {
        auto l = g_limit(m, s);
        if (l.is(LimitResult::Kind::Unknown)) continue;
        for (const auto& g : shifts) {
            auto shifted = transform(s, SeqMap::translate(g));
            auto lg = g_limit(m, shifted);
            bool ok = l.is(LimitResult::Kind::Converges)
                          ? lg.is(LimitResult::Kind::Converges) && lg.value == g + l.value
                          : lg.is(LimitResult::Kind::Diverges);
            if (!ok) {
                v.holds = false;
                v.witness_seq = s;
                v.witness_values = {g};
                v.detail = "G(g+x) != g+G(x) for g=" + g.str() + ", x=" + s.str();
                return v;
            }
        }
    }
    v.detail = "G(g+x) = g+G(x) on corpus x shifts";
    return v;
}

TraitVerdict check_g_continuity(const MethodSpec& m, const SeqMap& map,
                                const std::vector<SeqSpec>& corpus) {
    TraitVerdict v;
    v.trait = "g-continuity";
    v.scope = "corpus-checked";
    v.holds = true;
    for (const auto& s : corpus) {
        auto l = g_limit(m, s);
        if (!l.is(LimitResult::Kind::Converges)) continue;
        auto mapped = g_limit(m, transform(s, map));
        bool ok = mapped.is(LimitResult::Kind::Converges) && mapped.value == map.apply(l.value);
        if (!ok) {
            v.holds = false;
            v.witness_seq = s;
            v.witness_values = {l.value};
            v.detail = "G(f(x)) != f(G(x)) on " + s.str();
            return v;
        }
    }
    v.detail = "interchange identity exact on corpus";
    return v;
}

}  // namespace gconv
