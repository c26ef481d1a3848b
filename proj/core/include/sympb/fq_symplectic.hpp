#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sympb/fq.hpp"

namespace sympb {

/// Dense matrix over F_q, row major. Small sizes only (ambient 2n <= ~12).
class FqMatrix {
public:
    FqMatrix() = default;
    FqMatrix(FieldSpec f, size_t rows, size_t cols)
        : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, FqElem{0}) {}

    static FqMatrix identity(const FieldSpec& f, size_t n);

    const FieldSpec& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    FqElem& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    FqElem at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    FqMatrix operator*(const FqMatrix& o) const;
    FqMatrix transposed() const;

    /// Reduced row echelon form; zero rows dropped. Returns the rank rows.
    FqMatrix rref() const;
    size_t rank() const { return rref().rows(); }
    bool invertible() const { return rows_ == cols_ && rank() == rows_; }

    /// Flattened element codes prefixed by shape; total order for keys.
    std::vector<uint32_t> key() const;

    friend bool operator==(const FqMatrix& x, const FqMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    std::string to_string() const;

private:
    FieldSpec field_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<FqElem> a_;
};

/// Subspace of F_q^ambient held as its unique reduced-row-echelon basis.
class FqSubspace {
public:
    FqSubspace() = default;
    /// Canonicalize the row span of `rows`.
    static FqSubspace from_rows(const FqMatrix& rows);

    const FqMatrix& basis() const { return basis_; }
    size_t dim() const { return basis_.rows(); }
    size_t ambient() const { return basis_.cols(); }
    const FieldSpec& field() const { return basis_.field(); }

    /// Apply a group element (columns convention: vectors map v -> g v, so
    /// basis rows pick up g^t) and re-canonicalize.
    FqSubspace transformed(const FqMatrix& g) const;

    bool contains(const FqSubspace& other) const;

    std::vector<uint32_t> key() const { return basis_.key(); }
    friend bool operator==(const FqSubspace& x, const FqSubspace& y) { return x.basis_ == y.basis_; }
    friend bool operator<(const FqSubspace& x, const FqSubspace& y) { return x.key() < y.key(); }

private:
    FqMatrix basis_;
};

/// Standard alternating Gram matrix J = [[0, I_n], [-I_n, 0]] on F_q^2n.
FqMatrix standard_symplectic_gram(const FieldSpec& f, size_t n);

/// <u, w> under the given alternating Gram matrix.
FqElem form_value(const FqMatrix& gram, const FqMatrix& rows, size_t i, size_t j);

/// All pairwise form values of U's basis vanish. Gram defaults to standard J.
bool is_isotropic(const FqSubspace& u);
bool is_isotropic(const FqSubspace& u, const FqMatrix& gram);

/// Enumerate every dim-`dim` subspace of F_q^ambient in canonical order.
/// The callback may return false to stop early.
void enumerate_subspaces(const FieldSpec& f, size_t ambient, size_t dim,
                         const std::function<bool(const FqSubspace&)>& cb);

/// All maximal isotropic (dimension n) subspaces for the standard form,
/// canonically sorted. Guarded against oversized enumerations.
std::vector<FqSubspace> enumerate_lagrangians(const FieldSpec& f, size_t n);

/// Formula side of the degree count: prod_{m=1..n} (q^m + 1).
mpz_class lagrangian_count_formula(size_t n, const mpz_class& q);

/// Number of complete isotropic flags U_1 < ... < U_n, by recursive
/// enumeration over vector extensions (the chamber count of the residue
/// C_n building). Guarded.
mpz_class count_isotropic_flags(const FieldSpec& f, size_t n);

/// Formula side of the chamber count: prod_{m=1..n} (q^2m - 1)/(q - 1).
mpz_class isotropic_flag_count_formula(size_t n, const mpz_class& q);

/// Number of complete flags in F_q^dim: prod_{m=1..dim} (q^m - 1)/(q - 1).
mpz_class count_full_flags(size_t dim, const mpz_class& q);

/// Gaussian binomial (n choose m)_q: m-dimensional subspaces of F_q^n.
mpz_class gauss_binomial(size_t n, size_t m, const mpz_class& q);

/// M(eps, n) = sum_{i<j} max(0, eps_i - eps_j): zeros following each one.
int m_stat(const std::vector<int>& eps);

/// Orbit label: bits eps, weight m = |eps|, statistic M = m_stat(eps).
/// Predicted Borel orbit size is q^(M + m(m+1)/2).
struct EpsilonSignature {
    std::vector<int> bits;
    int m = 0;
    int M = 0;

    static EpsilonSignature of(const std::vector<int>& bits);
    mpz_class predicted_orbit_size(const mpz_class& q) const;
    /// Orbit size of the reversed cell: Card(Q_{x_eps} o) = Card(Q_o x_{1-eps}).
    EpsilonSignature complement() const;
    std::string to_string() const; // e.g. "(1,0)"
    friend bool operator==(const EpsilonSignature& a, const EpsilonSignature& b) {
        return a.bits == b.bits;
    }
};

/// All 2^n signatures in lexicographic bit order (0...0 first).
std::vector<EpsilonSignature> all_signatures(size_t n);

/// The coordinate Lagrangian for eps: span of {e_i : eps_i = 0} and
/// {f_i : eps_i = 1}.
FqSubspace coordinate_lagrangian(const FieldSpec& f, const EpsilonSignature& eps);

/// Generators of the finite Borel-type group: the reduction mod t of the
/// vertex stabilizer intersected with the minimal parabolic. Diagonal
/// similitude tori plus the elementary unipotents respecting the block
/// shape (A upper triangular, C = 0).
std::vector<FqMatrix> borel_generators(const FieldSpec& f, size_t n);

/// Borel orbit decomposition of the Lagrangians, keyed by signature, with a
/// transporter group element recorded per subspace.
class BorelOrbits {
public:
    static BorelOrbits compute(const FieldSpec& f, size_t n);

    const FieldSpec& field() const { return field_; }
    size_t n() const { return n_; }

    const std::vector<EpsilonSignature>& signatures() const { return sigs_; }
    const std::vector<FqSubspace>& orbit(size_t eps_index) const { return orbits_[eps_index]; }
    size_t orbit_count() const { return orbits_.size(); }

    /// Signature of the orbit containing the Lagrangian U; throws
    /// std::invalid_argument if U is not Lagrangian / not found.
    const EpsilonSignature& signature_of(const FqSubspace& u) const;

    /// A Borel element sigma with sigma * U_eps(U) = U.
    const FqMatrix& transporter_to(const FqSubspace& u) const;

    size_t total_lagrangians() const { return total_; }

private:
    FieldSpec field_;
    size_t n_ = 0;
    std::vector<EpsilonSignature> sigs_;
    std::vector<std::vector<FqSubspace>> orbits_;
    std::map<std::vector<uint32_t>, std::pair<size_t, FqMatrix>> index_; // key -> (eps idx, transporter)
    size_t total_ = 0;
};

/// Find T with T * gram * T^t = J for a nondegenerate alternating gram
/// (symplectic Gram-Schmidt over F_q).
FqMatrix symplectic_standardize(const FqMatrix& gram);

/// Sum over |eps| = m of q^M(eps): equals (n choose m)_q.
mpz_class schubert_weight_sum(size_t n, size_t m, const mpz_class& q);

/// prod_{m=1..n}(1 + q^m) == sum_i q^(i(i+1)/2) (n choose i)_q.
bool lagrangian_count_identity_holds(size_t n, const mpz_class& q);

} // namespace sympb
