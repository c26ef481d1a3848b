#include "sympb/fq.hpp"

#include <algorithm>
#include <sstream>

namespace sympb {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

constexpr uint32_t kMaxQ = 1u << 20;       // element codes stay in 32 bits
constexpr uint32_t kTableQ = 256;          // dense tables below this

std::vector<uint32_t> decode(uint32_t v, uint32_t p, uint32_t e) {
    std::vector<uint32_t> d(e, 0);
    for (uint32_t i = 0; i < e; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

uint32_t encode(const std::vector<uint32_t>& d, uint32_t p) {
    uint32_t v = 0;
    for (size_t i = d.size(); i-- > 0;) v = v * p + d[i] % p;
    return v;
}

// Multiply two coefficient vectors over F_p and reduce modulo the monic
// modulus (constant first, degree e).
std::vector<uint32_t> polymul_mod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                                  const std::vector<uint32_t>& mod, uint32_t p) {
    const size_t e = mod.size() - 1;
    std::vector<uint64_t> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) prod[i + j] += uint64_t(a[i]) * b[j];
    for (auto& c : prod) c %= p;
    // Reduce: x^e = -(mod[0] + ... + mod[e-1] x^{e-1}).
    for (size_t k = prod.size(); k-- > e;) {
        uint64_t lead = prod[k] % p;
        if (lead == 0) continue;
        prod[k] = 0;
        for (size_t i = 0; i < e; ++i) {
            uint64_t sub = lead * mod[i] % p;
            prod[k - e + i] = (prod[k - e + i] + p - sub) % p;
        }
    }
    std::vector<uint32_t> out(e, 0);
    for (size_t i = 0; i < e && i < prod.size(); ++i) out[i] = uint32_t(prod[i] % p);
    return out;
}

// Irreducibility by trial division: no monic factor of degree 1..e/2.
bool poly_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
    const size_t e = f.size() - 1;
    for (size_t d = 1; 2 * d <= e; ++d) {
        // All monic candidates of degree d: p^d coefficient choices.
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t code = 0; code < count; ++code) {
            std::vector<uint32_t> g(d + 1, 0);
            uint64_t c = code;
            for (size_t i = 0; i < d; ++i) {
                g[i] = uint32_t(c % p);
                c /= p;
            }
            g[d] = 1;
            // Remainder of f by g via synthetic division over F_p.
            std::vector<uint32_t> r(f);
            for (size_t k = r.size(); k-- > d;) {
                uint32_t lead = r[k] % p;
                if (lead == 0) continue;
                r[k] = 0;
                for (size_t i = 0; i < d; ++i) {
                    uint64_t sub = uint64_t(lead) * g[i] % p;
                    r[k - d + i] = uint32_t((r[k - d + i] + p - sub) % p);
                }
            }
            bool zero = std::all_of(r.begin(), r.begin() + d, [](uint32_t x) { return x == 0; });
            if (zero) return false;
        }
    }
    return true;
}

} // namespace

FieldSpec FieldSpec::make(uint32_t p, uint32_t e) {
    if (!is_prime(p)) throw std::invalid_argument("FieldSpec: p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw std::invalid_argument("FieldSpec: extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxQ) throw guard_error("FieldSpec: q = p^e exceeds supported bound");
    }

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->e = e;
    t->q = uint32_t(q);

    if (e > 1) {
        // Scan monic degree-e polynomials in increasing integer encoding.
        uint64_t count = 1;
        for (uint32_t i = 0; i < e; ++i) count *= p;
        bool found = false;
        for (uint64_t code = 0; code < count && !found; ++code) {
            std::vector<uint32_t> f(e + 1, 0);
            uint64_t c = code;
            for (uint32_t i = 0; i < e; ++i) {
                f[i] = uint32_t(c % p);
                c /= p;
            }
            f[e] = 1;
            if (poly_irreducible(f, p)) {
                t->modulus = f;
                found = true;
            }
        }
        if (!found) throw std::logic_error("FieldSpec: no irreducible modulus found"); // unreachable
    }

    FieldSpec spec(std::shared_ptr<const Tables>(t));
    if (t->q <= kTableQ) {
        auto* mt = const_cast<Tables*>(spec.t_.get());
        mt->mul_table.resize(size_t(t->q) * t->q);
        for (uint32_t a = 0; a < t->q; ++a)
            for (uint32_t b = 0; b < t->q; ++b)
                mt->mul_table[size_t(a) * t->q + b] = spec.mul_direct(FqElem{a}, FqElem{b});
        mt->inv_table.assign(t->q, FqElem{0});
        for (uint32_t a = 1; a < t->q; ++a)
            for (uint32_t b = 1; b < t->q; ++b)
                if (mt->mul_table[size_t(a) * t->q + b].v == 1) {
                    mt->inv_table[a] = FqElem{b};
                    break;
                }
        mt->has_tables = true;
    }
    return spec;
}

FqElem FieldSpec::from_int(int64_t k) const {
    int64_t r = k % int64_t(t_->p);
    if (r < 0) r += t_->p;
    return FqElem{uint32_t(r)};
}

FqElem FieldSpec::element(uint32_t code) const {
    if (code >= t_->q) throw std::invalid_argument("FieldSpec: element code out of range");
    return FqElem{code};
}

FqElem FieldSpec::add(FqElem a, FqElem b) const {
    if (t_->e == 1) {
        uint32_t s = a.v + b.v;
        if (s >= t_->p) s -= t_->p;
        return FqElem{s};
    }
    auto da = decode(a.v, t_->p, t_->e), db = decode(b.v, t_->p, t_->e);
    for (uint32_t i = 0; i < t_->e; ++i) da[i] = (da[i] + db[i]) % t_->p;
    return FqElem{encode(da, t_->p)};
}

FqElem FieldSpec::neg(FqElem a) const {
    if (t_->e == 1) return FqElem{a.v == 0 ? 0 : t_->p - a.v};
    auto d = decode(a.v, t_->p, t_->e);
    for (auto& c : d) c = (t_->p - c) % t_->p;
    return FqElem{encode(d, t_->p)};
}

FqElem FieldSpec::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem FieldSpec::mul_direct(FqElem a, FqElem b) const {
    if (t_->e == 1) return FqElem{uint32_t(uint64_t(a.v) * b.v % t_->p)};
    auto da = decode(a.v, t_->p, t_->e), db = decode(b.v, t_->p, t_->e);
    return FqElem{encode(polymul_mod(da, db, t_->modulus, t_->p), t_->p)};
}

FqElem FieldSpec::mul(FqElem a, FqElem b) const {
    if (t_->has_tables) return t_->mul_table[size_t(a.v) * t_->q + b.v];
    return mul_direct(a, b);
}

FqElem FieldSpec::pow(FqElem a, uint64_t k) const {
    FqElem r = one(), base = a;
    while (k) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

FqElem FieldSpec::inv(FqElem a) const {
    if (a.is_zero()) throw std::invalid_argument("FieldSpec: inverse of zero");
    if (t_->has_tables) return t_->inv_table[a.v];
    return pow(a, uint64_t(t_->q) - 2);
}

std::vector<uint32_t> FieldSpec::digits(FqElem a) const { return decode(a.v, t_->p, t_->e); }

FqElem FieldSpec::from_digits(const std::vector<uint32_t>& d) const {
    if (d.size() != t_->e) throw std::invalid_argument("FieldSpec: digit vector has wrong length");
    return FqElem{encode(d, t_->p)};
}

std::string FieldSpec::to_string(FqElem a) const {
    if (t_->e == 1) return std::to_string(a.v);
    std::ostringstream os;
    os << "[";
    auto d = digits(a);
    for (uint32_t i = 0; i < t_->e; ++i) os << (i ? "," : "") << d[i];
    os << "]";
    return os.str();
}

} // namespace sympb
