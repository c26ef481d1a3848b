#include "sympb/fq_symplectic.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace sympb {

// ---------------------------------------------------------------------------
// FqMatrix

FqMatrix FqMatrix::identity(const FieldSpec& f, size_t n) {
    FqMatrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("FqMatrix: shape mismatch in product");
    FqMatrix r(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            FqElem aik = at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                FqElem p = field_.mul(aik, o.at(k, j));
                r.at(i, j) = field_.add(r.at(i, j), p);
            }
        }
    return r;
}

FqMatrix FqMatrix::transposed() const {
    FqMatrix r(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

FqMatrix FqMatrix::rref() const {
    FqMatrix m(*this);
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t piv = row;
        while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
        if (piv == rows_) continue;
        if (piv != row)
            for (size_t c = 0; c < cols_; ++c) std::swap(m.at(piv, c), m.at(row, c));
        FqElem inv = field_.inv(m.at(row, col));
        for (size_t c = 0; c < cols_; ++c) m.at(row, c) = field_.mul(m.at(row, c), inv);
        for (size_t r = 0; r < rows_; ++r) {
            if (r == row) continue;
            FqElem f0 = m.at(r, col);
            if (f0.is_zero()) continue;
            for (size_t c = 0; c < cols_; ++c)
                m.at(r, c) = field_.sub(m.at(r, c), field_.mul(f0, m.at(row, c)));
        }
        ++row;
    }
    FqMatrix out(field_, row, cols_);
    for (size_t r = 0; r < row; ++r)
        for (size_t c = 0; c < cols_; ++c) out.at(r, c) = m.at(r, c);
    return out;
}

std::vector<uint32_t> FqMatrix::key() const {
    std::vector<uint32_t> k;
    k.reserve(2 + a_.size());
    k.push_back(uint32_t(rows_));
    k.push_back(uint32_t(cols_));
    for (auto e : a_) k.push_back(e.v);
    return k;
}

std::string FqMatrix::to_string() const {
    std::ostringstream os;
    for (size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "[");
        for (size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << field_.to_string(at(r, c));
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// FqSubspace

FqSubspace FqSubspace::from_rows(const FqMatrix& rows) {
    FqSubspace s;
    s.basis_ = rows.rref();
    return s;
}

FqSubspace FqSubspace::transformed(const FqMatrix& g) const {
    return from_rows(basis_ * g.transposed());
}

bool FqSubspace::contains(const FqSubspace& other) const {
    // Rank of the stacked matrix equals dim(this) iff other's rows lie in it.
    FqMatrix stacked(field(), dim() + other.dim(), ambient());
    for (size_t r = 0; r < dim(); ++r)
        for (size_t c = 0; c < ambient(); ++c) stacked.at(r, c) = basis_.at(r, c);
    for (size_t r = 0; r < other.dim(); ++r)
        for (size_t c = 0; c < ambient(); ++c) stacked.at(dim() + r, c) = other.basis().at(r, c);
    return stacked.rank() == dim();
}

// ---------------------------------------------------------------------------
// Forms

FqMatrix standard_symplectic_gram(const FieldSpec& f, size_t n) {
    FqMatrix j(f, 2 * n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        j.at(i, n + i) = f.one();
        j.at(n + i, i) = f.neg(f.one());
    }
    return j;
}

FqElem form_value(const FqMatrix& gram, const FqMatrix& rows, size_t i, size_t j) {
    const FieldSpec& f = gram.field();
    FqElem acc{0};
    for (size_t a = 0; a < gram.rows(); ++a) {
        FqElem ra = rows.at(i, a);
        if (ra.is_zero()) continue;
        for (size_t b = 0; b < gram.cols(); ++b) {
            FqElem g = gram.at(a, b);
            if (g.is_zero()) continue;
            acc = f.add(acc, f.mul(ra, f.mul(g, rows.at(j, b))));
        }
    }
    return acc;
}

bool is_isotropic(const FqSubspace& u, const FqMatrix& gram) {
    for (size_t i = 0; i < u.dim(); ++i)
        for (size_t j = i + 1; j < u.dim(); ++j)
            if (!form_value(gram, u.basis(), i, j).is_zero()) return false;
    return true;
}

bool is_isotropic(const FqSubspace& u) {
    if (u.ambient() % 2 != 0) throw std::invalid_argument("is_isotropic: odd ambient dimension");
    return is_isotropic(u, standard_symplectic_gram(u.field(), u.ambient() / 2));
}

// ---------------------------------------------------------------------------
// Subspace enumeration

void enumerate_subspaces(const FieldSpec& f, size_t ambient, size_t dim,
                         const std::function<bool(const FqSubspace&)>& cb) {
    if (dim > ambient) return;
    const uint32_t q = f.q();
    // Iterate pivot column sets in lexicographic order.
    std::vector<size_t> piv(dim);
    for (size_t i = 0; i < dim; ++i) piv[i] = i;
    auto advance_pivots = [&]() -> bool {
        size_t i = dim;
        while (i-- > 0) {
            if (piv[i] + (dim - i) <= ambient - 1 + 0) {
                // can move pivot i right if room remains for the later ones
                if (piv[i] + 1 <= ambient - (dim - i)) {
                    ++piv[i];
                    for (size_t j = i + 1; j < dim; ++j) piv[j] = piv[j - 1] + 1;
                    return true;
                }
            }
        }
        return false;
    };
    if (dim == 0) {
        cb(FqSubspace::from_rows(FqMatrix(f, 0, ambient)));
        return;
    }
    while (true) {
        // Free positions: (row i, col c) with c > piv[i] and c not a pivot.
        std::vector<std::pair<size_t, size_t>> free_pos;
        std::vector<bool> is_piv(ambient, false);
        for (auto p : piv) is_piv[p] = true;
        for (size_t i = 0; i < dim; ++i)
            for (size_t c = piv[i] + 1; c < ambient; ++c)
                if (!is_piv[c]) free_pos.emplace_back(i, c);

        FqMatrix m(f, dim, ambient);
        for (size_t i = 0; i < dim; ++i) m.at(i, piv[i]) = f.one();
        std::vector<uint32_t> odo(free_pos.size(), 0);
        while (true) {
            FqSubspace s = FqSubspace::from_rows(m);
            if (!cb(s)) return;
            // odometer over free entries
            size_t k = 0;
            for (; k < odo.size(); ++k) {
                odo[k] = (odo[k] + 1) % q;
                m.at(free_pos[k].first, free_pos[k].second) = f.element(odo[k]);
                if (odo[k] != 0) break;
            }
            if (k == odo.size()) break;
        }
        if (!advance_pivots()) break;
    }
}

namespace {
constexpr uint64_t kMaxCandidates = 5'000'000;
} // namespace

std::vector<FqSubspace> enumerate_lagrangians(const FieldSpec& f, size_t n) {
    if (f.q() > 16) throw guard_error("enumerate_lagrangians: q too large for enumeration");
    mpz_class candidates = gauss_binomial(2 * n, n, mpz_class(f.q()));
    if (candidates > kMaxCandidates)
        throw guard_error("enumerate_lagrangians: candidate Grassmannian too large");
    FqMatrix j = standard_symplectic_gram(f, n);
    std::vector<FqSubspace> out;
    enumerate_subspaces(f, 2 * n, n, [&](const FqSubspace& s) {
        if (is_isotropic(s, j)) out.push_back(s);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

mpz_class lagrangian_count_formula(size_t n, const mpz_class& q) {
    mpz_class r = 1, qm = 1;
    for (size_t m = 1; m <= n; ++m) {
        qm *= q;
        r *= qm + 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Flags

namespace {

// Distinct isotropic (k+1)-extensions of U; recursion counts complete flags.
mpz_class flag_extensions(const FieldSpec& f, const FqMatrix& j, size_t n, const FqSubspace& u) {
    if (u.dim() == n) return 1;
    const size_t amb = 2 * n;
    const uint32_t q = f.q();
    uint64_t total_vectors = 1;
    for (size_t i = 0; i < amb; ++i) total_vectors *= q;

    std::set<std::vector<uint32_t>> seen;
    mpz_class count = 0;
    for (uint64_t code = 1; code < total_vectors; ++code) {
        FqMatrix v(f, 1, amb);
        uint64_t c = code;
        for (size_t i = 0; i < amb; ++i) {
            v.at(0, i) = f.element(uint32_t(c % q));
            c /= q;
        }
        // v must pair to zero with all of U and not lie in U.
        FqMatrix stacked(f, u.dim() + 1, amb);
        for (size_t r = 0; r < u.dim(); ++r)
            for (size_t cc = 0; cc < amb; ++cc) stacked.at(r, cc) = u.basis().at(r, cc);
        for (size_t cc = 0; cc < amb; ++cc) stacked.at(u.dim(), cc) = v.at(0, cc);
        bool ok = true;
        for (size_t r = 0; r < u.dim() && ok; ++r)
            if (!form_value(j, stacked, r, u.dim()).is_zero()) ok = false;
        if (!ok) continue;
        FqSubspace ext = FqSubspace::from_rows(stacked);
        if (ext.dim() != u.dim() + 1) continue; // v in U
        if (seen.insert(ext.key()).second) count += flag_extensions(f, j, n, ext);
    }
    return count;
}

} // namespace

mpz_class count_isotropic_flags(const FieldSpec& f, size_t n) {
    mpz_class estimate = isotropic_flag_count_formula(n, mpz_class(f.q()));
    if (estimate > 1'000'000) throw guard_error("count_isotropic_flags: flag count too large to enumerate");
    uint64_t vectors = 1;
    for (size_t i = 0; i < 2 * n; ++i) {
        vectors *= f.q();
        if (vectors > 1'000'000) throw guard_error("count_isotropic_flags: ambient vector space too large");
    }
    FqMatrix j = standard_symplectic_gram(f, n);
    return flag_extensions(f, j, n, FqSubspace::from_rows(FqMatrix(f, 0, 2 * n)));
}

mpz_class isotropic_flag_count_formula(size_t n, const mpz_class& q) {
    mpz_class r = 1, q2m = 1;
    for (size_t m = 1; m <= n; ++m) {
        q2m *= q * q;
        mpz_class term = (q2m - 1) / (q - 1);
        r *= term;
    }
    return r;
}

mpz_class count_full_flags(size_t dim, const mpz_class& q) {
    mpz_class r = 1, qm = 1;
    for (size_t m = 1; m <= dim; ++m) {
        qm *= q;
        r *= (qm - 1) / (q - 1);
    }
    return r;
}

mpz_class gauss_binomial(size_t n, size_t m, const mpz_class& q) {
    if (m > n) return 0;
    mpz_class num = 1, den = 1;
    std::vector<mpz_class> qpow(n + 1);
    qpow[0] = 1;
    for (size_t i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * q;
    for (size_t i = 1; i <= m; ++i) {
        num *= qpow[n - m + i] - 1;
        den *= qpow[i] - 1;
    }
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

// ---------------------------------------------------------------------------
// Signatures

int m_stat(const std::vector<int>& eps) {
    int m = 0;
    for (size_t i = 0; i < eps.size(); ++i)
        for (size_t j = i + 1; j < eps.size(); ++j) m += std::max(0, eps[i] - eps[j]);
    return m;
}

EpsilonSignature EpsilonSignature::of(const std::vector<int>& bits) {
    for (int b : bits)
        if (b != 0 && b != 1) throw std::invalid_argument("EpsilonSignature: bits must be 0/1");
    EpsilonSignature s;
    s.bits = bits;
    s.m = 0;
    for (int b : bits) s.m += b;
    s.M = m_stat(bits);
    return s;
}

mpz_class EpsilonSignature::predicted_orbit_size(const mpz_class& q) const {
    mpz_class r;
    int exp = M + m * (m + 1) / 2;
    mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), uint32_t(exp));
    return r;
}

EpsilonSignature EpsilonSignature::complement() const {
    std::vector<int> b(bits);
    for (auto& x : b) x = 1 - x;
    return of(b);
}

std::string EpsilonSignature::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < bits.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(bits[i]);
    }
    return s + ")";
}

std::vector<EpsilonSignature> all_signatures(size_t n) {
    std::vector<EpsilonSignature> out;
    out.reserve(size_t(1) << n);
    for (uint64_t code = 0; code < (uint64_t(1) << n); ++code) {
        std::vector<int> bits(n);
        for (size_t i = 0; i < n; ++i) bits[i] = int((code >> (n - 1 - i)) & 1);
        out.push_back(EpsilonSignature::of(bits));
    }
    return out;
}

FqSubspace coordinate_lagrangian(const FieldSpec& f, const EpsilonSignature& eps) {
    const size_t n = eps.bits.size();
    FqMatrix rows(f, n, 2 * n);
    for (size_t i = 0; i < n; ++i)
        rows.at(i, eps.bits[i] ? n + i : i) = f.one();
    return FqSubspace::from_rows(rows);
}

// ---------------------------------------------------------------------------
// Borel-type generators and orbits

std::vector<FqMatrix> borel_generators(const FieldSpec& f, size_t n) {
    std::vector<FqMatrix> gens;
    const size_t d = 2 * n;
    auto ident = [&]() { return FqMatrix::identity(f, d); };

    // Torus: a at slot i, a^-1 opposite (nu = 1); plus the global similitude
    // scaling (c, ..., c; 1, ..., 1) with nu = c.
    for (uint32_t a = 2; a < f.q(); ++a) {
        for (size_t i = 0; i < n; ++i) {
            FqMatrix g = ident();
            g.at(i, i) = f.element(a);
            g.at(n + i, n + i) = f.inv(f.element(a));
            gens.push_back(g);
        }
        FqMatrix s = ident();
        for (size_t i = 0; i < n; ++i) s.at(i, i) = f.element(a);
        gens.push_back(s);
    }
    if (f.q() == 2) {
        // No nontrivial torus; identity not needed as a generator.
    }

    for (uint32_t cv = 1; cv < f.q(); ++cv) {
        FqElem c = f.element(cv);
        // A-block elementaries: A = I + c E_ij, D = I - c E_ji  (i < j).
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                FqMatrix g = ident();
                g.at(i, j) = c;
                g.at(n + j, n + i) = f.neg(c);
                gens.push_back(g);
            }
        // Symmetric B-block elementaries: B = c (E_ij + E_ji), i < j.
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                FqMatrix g = ident();
                g.at(i, n + j) = c;
                g.at(j, n + i) = c;
                gens.push_back(g);
            }
        // Long-root elementaries: B = c E_ii.
        for (size_t i = 0; i < n; ++i) {
            FqMatrix g = ident();
            g.at(i, n + i) = c;
            gens.push_back(g);
        }
    }
    return gens;
}

BorelOrbits BorelOrbits::compute(const FieldSpec& f, size_t n) {
    BorelOrbits bo;
    bo.field_ = f;
    bo.n_ = n;
    bo.sigs_ = all_signatures(n);
    bo.orbits_.resize(bo.sigs_.size());

    auto lagrangians = enumerate_lagrangians(f, n);
    bo.total_ = lagrangians.size();
    auto gens = borel_generators(f, n);

    for (size_t ei = 0; ei < bo.sigs_.size(); ++ei) {
        FqSubspace rep = coordinate_lagrangian(f, bo.sigs_[ei]);
        if (bo.index_.count(rep.key()))
            throw model_violation("borel_orbits: coordinate representatives not in disjoint orbits");
        std::deque<FqSubspace> queue{rep};
        bo.index_.emplace(rep.key(), std::make_pair(ei, FqMatrix::identity(f, 2 * n)));
        while (!queue.empty()) {
            FqSubspace u = queue.front();
            queue.pop_front();
            const FqMatrix& sigma = bo.index_.at(u.key()).second;
            for (const auto& g : gens) {
                FqSubspace v = u.transformed(g);
                auto it = bo.index_.find(v.key());
                if (it == bo.index_.end()) {
                    bo.index_.emplace(v.key(), std::make_pair(ei, g * sigma));
                    queue.push_back(v);
                } else if (it->second.first != ei) {
                    throw model_violation("borel_orbits: orbits intersect");
                }
            }
        }
    }

    for (const auto& l : lagrangians) {
        auto it = bo.index_.find(l.key());
        if (it == bo.index_.end())
            throw model_violation("borel_orbits: Lagrangian in no orbit (missing coordinate representative)");
        bo.orbits_[it->second.first].push_back(l);
    }
    for (auto& orb : bo.orbits_) std::sort(orb.begin(), orb.end());
    return bo;
}

const EpsilonSignature& BorelOrbits::signature_of(const FqSubspace& u) const {
    auto it = index_.find(u.key());
    if (it == index_.end()) throw std::invalid_argument("BorelOrbits: subspace is not a known Lagrangian");
    return sigs_[it->second.first];
}

const FqMatrix& BorelOrbits::transporter_to(const FqSubspace& u) const {
    auto it = index_.find(u.key());
    if (it == index_.end()) throw std::invalid_argument("BorelOrbits: subspace is not a known Lagrangian");
    return it->second.second;
}

// ---------------------------------------------------------------------------
// Symplectic Gram-Schmidt over F_q

FqMatrix symplectic_standardize(const FqMatrix& gram) {
    const FieldSpec& f = gram.field();
    const size_t d = gram.rows();
    if (d % 2 != 0 || gram.cols() != d)
        throw std::invalid_argument("symplectic_standardize: need a square even-dimensional gram");

    auto pairing = [&](const std::vector<FqElem>& x, const std::vector<FqElem>& y) {
        FqElem acc{0};
        for (size_t a = 0; a < d; ++a) {
            if (x[a].is_zero()) continue;
            for (size_t b = 0; b < d; ++b) {
                if (gram.at(a, b).is_zero()) continue;
                acc = f.add(acc, f.mul(x[a], f.mul(gram.at(a, b), y[b])));
            }
        }
        return acc;
    };

    std::vector<std::vector<FqElem>> remaining;
    for (size_t i = 0; i < d; ++i) {
        std::vector<FqElem> e(d, FqElem{0});
        e[i] = f.one();
        remaining.push_back(e);
    }
    std::vector<std::vector<FqElem>> us, ws;
    while (!remaining.empty()) {
        auto v = remaining.front();
        size_t wi = 0;
        FqElem c{0};
        for (size_t k = 1; k < remaining.size(); ++k) {
            c = pairing(v, remaining[k]);
            if (!c.is_zero()) {
                wi = k;
                break;
            }
        }
        if (wi == 0) throw std::invalid_argument("symplectic_standardize: degenerate form");
        auto w = remaining[wi];
        FqElem cinv = f.inv(c);
        for (auto& x : w) x = f.mul(x, cinv);
        remaining.erase(remaining.begin() + long(wi));
        remaining.erase(remaining.begin());
        for (auto& u : remaining) {
            FqElem uw = pairing(u, w), uv = pairing(u, v);
            // u' = u - <u,w> v + <u,v> w  kills both pairings
            for (size_t a = 0; a < d; ++a) {
                u[a] = f.sub(u[a], f.mul(uw, v[a]));
                u[a] = f.add(u[a], f.mul(uv, w[a]));
            }
        }
        us.push_back(v);
        ws.push_back(w);
    }
    FqMatrix t(f, d, d);
    for (size_t i = 0; i < us.size(); ++i)
        for (size_t a = 0; a < d; ++a) {
            t.at(i, a) = us[i][a];
            t.at(us.size() + i, a) = ws[i][a];
        }
    return t;
}

// ---------------------------------------------------------------------------
// Identities

mpz_class schubert_weight_sum(size_t n, size_t m, const mpz_class& q) {
    mpz_class total = 0;
    for (const auto& s : all_signatures(n)) {
        if (size_t(s.m) != m) continue;
        mpz_class term;
        mpz_pow_ui(term.get_mpz_t(), q.get_mpz_t(), uint32_t(s.M));
        total += term;
    }
    return total;
}

bool lagrangian_count_identity_holds(size_t n, const mpz_class& q) {
    mpz_class lhs = lagrangian_count_formula(n, q);
    mpz_class rhs = 0;
    for (size_t i = 0; i <= n; ++i) {
        mpz_class term;
        mpz_pow_ui(term.get_mpz_t(), q.get_mpz_t(), uint32_t(i * (i + 1) / 2));
        rhs += term * gauss_binomial(n, i, q);
    }
    return lhs == rhs;
}

} // namespace sympb
