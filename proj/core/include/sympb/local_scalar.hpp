#pragma once

#include <climits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympb/fq.hpp"

namespace sympb {

/// Element of K = F_q((t)) with tracked precision.
///
/// A value is either exact -- equal to the stored finite Laurent polynomial
/// -- or known modulo t^prec: the stored coefficients are certified for all
/// exponents < prec and nothing is claimed beyond. Exactness propagates
/// through ring operations; it is lost only through unit inversion and
/// explicit window capping, and every consumer that needs an exact zero
/// (Gram entries, membership tests, canonical forms) checks for it and
/// fails loudly instead of guessing.
///
/// The uniformizer is fixed as t throughout; |t|_K = 1/q.
class LocalScalar {
public:
    static constexpr int kExactPrec = INT_MAX;

    LocalScalar() = default;

    /// Exact zero.
    explicit LocalScalar(FieldSpec f) : field_(std::move(f)) {}

    static LocalScalar zero(const FieldSpec& f) { return LocalScalar(f); }
    static LocalScalar one(const FieldSpec& f) { return monomial(f, 0, f.one()); }
    static LocalScalar monomial(const FieldSpec& f, int exponent, FqElem c);
    static LocalScalar monomial(const FieldSpec& f, int exponent) { return monomial(f, exponent, f.one()); }
    static LocalScalar constant(const FieldSpec& f, FqElem c) { return monomial(f, 0, c); }
    /// From (exponent, coefficient) terms; exponents need not be sorted.
    static LocalScalar from_terms(const FieldSpec& f, const std::vector<std::pair<int, FqElem>>& terms);
    /// Zero modulo t^prec, nothing known beyond: the inexact zero.
    static LocalScalar inexact_zero(const FieldSpec& f, int prec);

    const FieldSpec& field() const { return field_; }

    bool exact() const { return prec_ == kExactPrec; }
    /// Precision bound: coefficients certified for exponents < prec().
    int prec() const { return prec_; }

    /// True when no nonzero coefficient is known. Does NOT certify the value
    /// is zero unless exact() also holds.
    bool known_zero() const { return coeffs_.empty(); }
    bool is_exact_zero() const { return coeffs_.empty() && exact(); }
    /// Inexact zero: vanishes at the current precision but is uncertified.
    bool is_fuzzy_zero() const { return coeffs_.empty() && !exact(); }

    /// ord(x); nullopt is the +infinity marker (x vanishes at precision).
    std::optional<int> valuation() const {
        if (coeffs_.empty()) return std::nullopt;
        return val_;
    }
    /// Valuation of a value with a known leading term; throws otherwise.
    int val_finite() const;
    /// Leading coefficient; throws on zero-at-precision.
    FqElem leading() const;

    /// Coefficient of t^exponent. Throws precision_error when the exponent
    /// is at or beyond the certified range.
    FqElem coeff(int exponent) const;

    LocalScalar operator+(const LocalScalar& o) const;
    LocalScalar operator-(const LocalScalar& o) const;
    LocalScalar operator-() const;
    LocalScalar operator*(const LocalScalar& o) const;

    /// Multiply by t^k (exact shift).
    LocalScalar shifted(int k) const;
    LocalScalar scaled(FqElem c) const;

    /// Truncate to exponents < bound. Marks the result inexact iff
    /// certified coefficients were actually dropped.
    LocalScalar truncated(int bound) const;

    /// Enforce the session exponent window [-window, window): throws
    /// precision_error if the known leading exponent lies below -window,
    /// truncates (honestly, with precision marking) above.
    LocalScalar windowed(int window) const;

    /// Split as q*t^k + r with r supported on exponents < k. The remainder
    /// is exact when all its coefficients are certified (prec >= k or exact).
    std::pair<LocalScalar, LocalScalar> split_at(int k) const;

    /// Clamp precision down to at most bound (no-op when already coarser).
    LocalScalar with_prec_at_most(int bound) const;

    /// Certify as exact: requires every stored coefficient certified and is
    /// the caller's assertion that the true value equals the stored
    /// polynomial (used by canonicalization after algebraic cancellation,
    /// which then re-verifies the span). Throws if prec < min_cert.
    LocalScalar certified_exact(int min_cert) const;

    friend bool operator==(const LocalScalar& a, const LocalScalar& b) {
        return a.val_ == b.val_ && a.prec_ == b.prec_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LocalScalar& a, const LocalScalar& b) { return !(a == b); }

    /// Terms as (exponent, coefficient), ascending exponent.
    std::vector<std::pair<int, FqElem>> terms() const;

    std::string to_string() const;

private:
    void normalize();
    static int add_prec(const LocalScalar& a, const LocalScalar& b);

    FieldSpec field_;
    int val_ = 0;                 // exponent of coeffs_[0]; meaningless when coeffs_ empty
    std::vector<FqElem> coeffs_;  // front() nonzero, back() nonzero (dense between)
    int prec_ = kExactPrec;
};

/// ord(x) as the spec operation: nullopt encodes +infinity.
inline std::optional<int> valuation(const LocalScalar& x) { return x.valuation(); }

/// Product with the min-rule precision contract.
inline LocalScalar series_mul(const LocalScalar& a, const LocalScalar& b) { return a * b; }

/// Inverse of a unit-times-monomial u: result r with u*r == 1 modulo t^N and
/// ord(r) = -ord(u). Exact when u is an exact monomial. Throws on
/// zero-at-precision input or when not even the leading digit is certifiable.
LocalScalar series_invert_unit(const LocalScalar& u, int target_prec);

} // namespace sympb
