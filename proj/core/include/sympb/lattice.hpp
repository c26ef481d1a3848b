#pragma once

#include <string>
#include <vector>

#include "sympb/local_scalar.hpp"

namespace sympb {

/// Dense matrix of LocalScalar, row major.
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(const FieldSpec& f, size_t rows, size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, LocalScalar::zero(f)) {}

    static ScalarMatrix identity(const FieldSpec& f, size_t n);

    const FieldSpec& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    LocalScalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const LocalScalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    ScalarMatrix operator*(const ScalarMatrix& o) const;
    ScalarMatrix transposed() const;
    /// Every entry multiplied by t^k.
    ScalarMatrix shifted(int k) const;
    /// Cap all entries to the exponent window (see LocalScalar::windowed).
    ScalarMatrix windowed(int window) const;

    bool all_exact() const;

    friend bool operator==(const ScalarMatrix& x, const ScalarMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    std::string to_string() const;

private:
    FieldSpec field_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<LocalScalar> a_;
};

/// O-lattice in K^2n presented by basis rows, with the ambient standard
/// alternating form <e_i, f_j> = delta_ij (f_i = e_{n+i}). `window` is the
/// session exponent bound: all tracked exponents stay in [-window, window).
struct Lattice {
    size_t n = 0;
    FieldSpec field;
    int window = 0;
    ScalarMatrix basis; // 2n x 2n, rows span the lattice over O

    static Lattice standard(const FieldSpec& f, size_t n, int window);
    /// Diagonal lattice span{t^a_i e_i, t^b_i f_i}.
    static Lattice diagonal(const FieldSpec& f, size_t n, int window,
                            const std::vector<int>& a, const std::vector<int>& b);
    Lattice scaled(int k) const; // t^k L
    Lattice with_basis(ScalarMatrix b) const;
};

/// Canonical homothety-class representative of a vertex: Hermite-reduced
/// basis normalized so the minimal diagonal pivot valuation is 0, plus the
/// cached symplectic invariants. Equality of `key` is equality of classes.
struct LatticeVertex {
    size_t n = 0;
    FieldSpec field;
    int window = 0;
    ScalarMatrix canon;
    std::vector<int> divisors; // sorted d_1 <= ... <= d_n of the canon rep
    int mu_parity = 0;         // d_1 mod 2; the type invariant
    std::string key;           // canonical byte encoding of canon

    bool special() const;
    Lattice lattice() const { return Lattice{n, field, window, canon}; }

    friend bool operator==(const LatticeVertex& a, const LatticeVertex& b) { return a.key == b.key; }
    friend bool operator!=(const LatticeVertex& a, const LatticeVertex& b) { return a.key != b.key; }
    friend bool operator<(const LatticeVertex& a, const LatticeVertex& b) { return a.key < b.key; }
};

/// Stable byte encoding of an exact canonical matrix.
std::string matrix_key(const ScalarMatrix& m);

/// Unique column-echelon form over O: upper triangular with monomial pivots
/// t^k_c on the diagonal and the entries above each pivot reduced modulo it.
/// The result is verified against the input (row membership plus determinant
/// valuation), so a successful return certifies span equality; failures
/// raise precision_error / invalid_argument (degenerate input).
Lattice hnf_canonicalize(const Lattice& l);

/// Gram matrix G[i][j] = <row_i, row_j> under the standard form; alternating.
ScalarMatrix gram(const Lattice& l);

/// Valuations of the hyperbolic-pair elementary divisors of gram(L), sorted
/// ascending; invariant under O-unimodular basis change.
std::vector<int> symplectic_divisors(const Lattice& l);

/// Divisor-window vertex test: sorted divisors d satisfy
/// max-min <= 1 and (max == min or min odd).
bool is_vertex(const Lattice& l);

/// (all divisors equal, mu parity). Throws std::invalid_argument on a
/// non-vertex; the parity slot is -1 when not special.
std::pair<bool, int> is_special(const Lattice& l);

/// Divisors all zero, no homothety normalization.
bool is_primitive(const Lattice& l);

/// Canonical homothety key: HNF of t^-k L with k the minimal pivot
/// valuation. Throws std::invalid_argument if [L] is not a vertex.
LatticeVertex vertex_key(const Lattice& l);

/// Form-free variant used for the SL comparison graph: canonical HNF basis
/// normalized to minimal pivot valuation 0, no vertex predicate.
std::pair<ScalarMatrix, std::string> class_key_no_form(const Lattice& l);

/// Exact membership of a row vector in the span of a canonical (exact,
/// upper-triangular, monomial-pivot) basis.
bool canonical_span_contains(const ScalarMatrix& canon, const std::vector<LocalScalar>& row);

/// Valuation of det(basis) computed by exact polynomial arithmetic
/// (no window); requires exact entries.
int det_valuation(const ScalarMatrix& basis);

} // namespace sympb
