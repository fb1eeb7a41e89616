#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gconv/rat.hpp"
#include "gconv/seq.hpp"

namespace gconv {

/// Raised when a method cannot support the requested operation (no
/// closed-form hull for matrix methods, missing trait hypothesis, ...).
struct MethodError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A summability matrix. Structured forms admit exact Silverman-Toeplitz
/// verdicts and, for the Cesaro form, an exact limit route; Explicit holds
/// finitely many rows loaded from a file and is evaluated numerically.
struct MatrixSpec {
    enum class Form { Cesaro, ScaledIdentity, ConstantColumn, Explicit };

    Form form = Form::Cesaro;
    Rat scale = Rat(1);        // ScaledIdentity: a_nn; ConstantColumn: a_{n,col}
    std::int64_t column = 1;   // ConstantColumn
    // Explicit rows: rows[n-1] lists (k, a_nk) with k >= 1.
    std::vector<std::vector<std::pair<std::int64_t, Rat>>> rows;
    std::string label;  // CLI name / file path

    static MatrixSpec cesaro() { return {}; }
    static MatrixSpec scaled_identity(Rat c);
    static MatrixSpec constant_column(std::int64_t col, Rat c);
    static MatrixSpec from_file(const std::string& path);

    std::string name() const;
};

struct MethodTraits {
    bool regular = false;
    bool subsequential = false;
    bool preserves_subsequences = false;
    bool translate_regular = false;
};

/// Numeric fallback parameters for matrix evaluation.
struct NumericParams {
    std::int64_t n_max = 100000;
    Rat tolerance = Rat(1, 1000000000);
};

/// A G-method as a first-class value. The scalar methods act on SeqSpec;
/// Product wraps a scalar factor and acts coordinatewise (product-space
/// operators live in product.hpp). Trait flags are the verified catalog
/// values for the method kind; the checkers below must reproduce them on
/// the standard corpus.
class MethodSpec {
public:
    enum class Kind { Lim, Cesaro, Statistical, Matrix, Product };

    static MethodSpec lim();
    static MethodSpec cesaro();
    static MethodSpec statistical();
    static MethodSpec matrix(MatrixSpec m, NumericParams p = {});
    static MethodSpec product(MethodSpec factor);

    Kind kind() const { return kind_; }
    const MethodSpec& factor() const;
    /// Innermost scalar method (identity for non-product methods).
    const MethodSpec& scalar() const;
    const MatrixSpec& matrix_spec() const;
    const NumericParams& params() const { return params_; }
    const MethodTraits& traits() const { return traits_; }

    std::string name() const;

private:
    MethodSpec() = default;
    Kind kind_ = Kind::Lim;
    std::shared_ptr<MethodSpec> factor_;
    std::shared_ptr<MatrixSpec> matrix_;
    NumericParams params_;
    MethodTraits traits_;
};

struct LimitResult {
    enum class Kind { Converges, Diverges, Unknown };

    Kind kind = Kind::Diverges;
    Rat value;            // Converges
    bool exact = false;   // true only on symbolic paths
    Rat estimate;         // Unknown
    Rat spread;           // Unknown

    static LimitResult converges(Rat v) { return {Kind::Converges, v, true, Rat(0), Rat(0)}; }
    static LimitResult diverges() { return {}; }
    static LimitResult unknown(Rat est, Rat spread) {
        return {Kind::Unknown, Rat(0), false, est, spread};
    }

    bool is(Kind k) const { return kind == k; }
    friend bool operator==(const LimitResult&, const LimitResult&) = default;

    std::string str() const;
};

/// Outcome of a method-trait check, with a concrete counterexample whenever
/// holds == false. scope records whether the verdict rests on a closed-form
/// argument or on the checked corpus.
struct TraitVerdict {
    std::string trait;
    bool holds = false;
    std::string scope;  // "proved-exactly" | "corpus-checked"
    std::string detail;
    std::optional<SeqSpec> witness_seq;
    std::optional<IndexFamily> witness_family;
    std::vector<Rat> witness_values;
    long skipped = 0;  // catalog-unrepresentable combinations skipped
};

// -- domain / limit -----------------------------------------------------------

bool in_domain(const MethodSpec& m, const SeqSpec& s);
LimitResult g_limit(const MethodSpec& m, const SeqSpec& s);

// -- trait checkers -----------------------------------------------------------

TraitVerdict check_matrix_regular(const MatrixSpec& m, const NumericParams& p = {});
/// Independent numeric route (estimate, spread) for cross-checking the exact
/// paths; rows are evaluated term by term in floating point.
std::pair<double, double> numeric_matrix_estimate(const MatrixSpec& m, const NumericParams& p,
                                                  const SeqSpec& s);
TraitVerdict check_regular_empirical(const MethodSpec& m, const std::vector<SeqSpec>& convergent_corpus);
TraitVerdict check_preserves_subsequences(const MethodSpec& m, const std::vector<SeqSpec>& corpus,
                                          const std::vector<IndexFamily>& families);
TraitVerdict check_subsequential(const MethodSpec& m, const SeqSpec& s);
TraitVerdict check_translate_regular(const MethodSpec& m, const std::vector<SeqSpec>& corpus,
                                     const std::vector<Rat>& shifts);
TraitVerdict check_g_continuity(const MethodSpec& m, const SeqMap& map,
                                const std::vector<SeqSpec>& corpus);

}  // namespace gconv
