#include "sympb/local_scalar.hpp"

#include <algorithm>
#include <sstream>

namespace sympb {

namespace {
void require_same_field(const LocalScalar& a, const LocalScalar& b) {
    if (a.field() != b.field())
        throw std::invalid_argument("LocalScalar: operands from different fields");
}

long long sat_add(long long a, long long b) {
    if (a >= LocalScalar::kExactPrec || b >= LocalScalar::kExactPrec) return LocalScalar::kExactPrec;
    return a + b;
}
} // namespace

void LocalScalar::normalize() {
    // Drop anything at or beyond the precision bound.
    if (prec_ != kExactPrec && !coeffs_.empty()) {
        long long last = (long long)val_ + (long long)coeffs_.size();
        if (last > prec_) {
            long long keep = (long long)prec_ - val_;
            if (keep <= 0)
                coeffs_.clear();
            else
                coeffs_.resize(size_t(keep));
        }
    }
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        val_ = 0;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + long(lead));
        val_ += int(lead);
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

LocalScalar LocalScalar::monomial(const FieldSpec& f, int exponent, FqElem c) {
    LocalScalar s(f);
    if (!c.is_zero()) {
        s.val_ = exponent;
        s.coeffs_ = {c};
    }
    return s;
}

LocalScalar LocalScalar::from_terms(const FieldSpec& f, const std::vector<std::pair<int, FqElem>>& terms) {
    LocalScalar s(f);
    if (terms.empty()) return s;
    int lo = terms[0].first, hi = terms[0].first;
    for (auto& [e, c] : terms) {
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    s.val_ = lo;
    s.coeffs_.assign(size_t(hi - lo + 1), f.zero());
    for (auto& [e, c] : terms) s.coeffs_[size_t(e - lo)] = f.add(s.coeffs_[size_t(e - lo)], c);
    s.normalize();
    return s;
}

LocalScalar LocalScalar::inexact_zero(const FieldSpec& f, int prec) {
    LocalScalar s(f);
    s.prec_ = prec;
    return s;
}

int LocalScalar::val_finite() const {
    if (coeffs_.empty()) throw precision_error("LocalScalar: valuation of zero-at-precision requested");
    return val_;
}

FqElem LocalScalar::leading() const {
    if (coeffs_.empty()) throw precision_error("LocalScalar: leading coefficient of zero-at-precision");
    return coeffs_.front();
}

FqElem LocalScalar::coeff(int exponent) const {
    if (!exact() && exponent >= prec_)
        throw precision_error("LocalScalar: coefficient beyond certified precision");
    if (coeffs_.empty() || exponent < val_ || exponent >= val_ + int(coeffs_.size())) return FqElem{0};
    return coeffs_[size_t(exponent - val_)];
}

int LocalScalar::add_prec(const LocalScalar& a, const LocalScalar& b) {
    return std::min(a.prec_, b.prec_);
}

LocalScalar LocalScalar::operator+(const LocalScalar& o) const {
    require_same_field(*this, o);
    LocalScalar r(field_);
    r.prec_ = add_prec(*this, o);
    if (coeffs_.empty() && o.coeffs_.empty()) return r;
    int lo = coeffs_.empty() ? o.val_ : (o.coeffs_.empty() ? val_ : std::min(val_, o.val_));
    int hi = lo;
    if (!coeffs_.empty()) hi = std::max(hi, val_ + int(coeffs_.size()));
    if (!o.coeffs_.empty()) hi = std::max(hi, o.val_ + int(o.coeffs_.size()));
    r.val_ = lo;
    r.coeffs_.assign(size_t(hi - lo), field_.zero());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[size_t(val_ - lo) + i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) {
        auto& slot = r.coeffs_[size_t(o.val_ - lo) + i];
        slot = field_.add(slot, o.coeffs_[i]);
    }
    r.normalize();
    return r;
}

LocalScalar LocalScalar::operator-() const {
    LocalScalar r(*this);
    for (auto& c : r.coeffs_) c = field_.neg(c);
    return r;
}

LocalScalar LocalScalar::operator-(const LocalScalar& o) const { return *this + (-o); }

LocalScalar LocalScalar::operator*(const LocalScalar& o) const {
    require_same_field(*this, o);
    // Exact zero annihilates regardless of the other side's precision.
    if (is_exact_zero() || o.is_exact_zero()) return LocalScalar(field_);
    if (coeffs_.empty() || o.coeffs_.empty()) {
        // A fuzzy zero times x: zero modulo t^(prec + ord(x)).
        long long p;
        if (coeffs_.empty() && o.coeffs_.empty())
            p = sat_add(prec_, o.prec_);
        else if (coeffs_.empty())
            p = sat_add(prec_, o.val_);
        else
            p = sat_add(o.prec_, val_);
        LocalScalar r(field_);
        r.prec_ = int(std::min<long long>(p, kExactPrec));
        return r;
    }
    LocalScalar r(field_);
    long long p = kExactPrec;
    if (prec_ != kExactPrec) p = std::min(p, sat_add(prec_, o.val_));
    if (o.prec_ != kExactPrec) p = std::min(p, sat_add(o.prec_, val_));
    r.prec_ = int(p);
    r.val_ = val_ + o.val_;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, field_.zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            auto& slot = r.coeffs_[i + j];
            slot = field_.add(slot, field_.mul(coeffs_[i], o.coeffs_[j]));
        }
    }
    r.normalize();
    return r;
}

LocalScalar LocalScalar::shifted(int k) const {
    LocalScalar r(*this);
    if (!r.coeffs_.empty()) r.val_ += k;
    if (r.prec_ != kExactPrec) r.prec_ = int(std::min<long long>(sat_add(r.prec_, k), kExactPrec));
    return r;
}

LocalScalar LocalScalar::scaled(FqElem c) const {
    if (c.is_zero()) return LocalScalar(field_); // exact 0 times anything
    LocalScalar r(*this);
    for (auto& a : r.coeffs_) a = field_.mul(a, c);
    r.normalize();
    return r;
}

LocalScalar LocalScalar::truncated(int bound) const {
    LocalScalar r(*this);
    bool dropped = false;
    if (!r.coeffs_.empty() && r.val_ + int(r.coeffs_.size()) > bound) {
        long long keep = (long long)bound - r.val_;
        size_t k = keep <= 0 ? 0 : size_t(keep);
        for (size_t i = k; i < r.coeffs_.size(); ++i)
            if (!r.coeffs_[i].is_zero()) dropped = true;
        r.coeffs_.resize(std::min(r.coeffs_.size(), k));
    }
    if (dropped || r.prec_ != kExactPrec) r.prec_ = std::min(r.prec_, bound);
    r.normalize();
    return r;
}

LocalScalar LocalScalar::windowed(int window) const {
    if (!coeffs_.empty() && val_ < -window)
        throw precision_error("LocalScalar: exponent " + std::to_string(val_) +
                              " below window -" + std::to_string(window));
    return truncated(window);
}

std::pair<LocalScalar, LocalScalar> LocalScalar::split_at(int k) const {
    LocalScalar quot(field_), rem(field_);
    // Remainder: exponents < k, certified when prec reaches k.
    rem.prec_ = (exact() || prec_ >= k) ? kExactPrec : prec_;
    quot.prec_ = exact() ? kExactPrec : int(std::min<long long>(sat_add(prec_, -k), kExactPrec));
    if (coeffs_.empty()) return {quot, rem};
    std::vector<std::pair<int, FqElem>> qt, rt;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        int e = val_ + int(i);
        if (e >= k)
            qt.emplace_back(e - k, coeffs_[i]);
        else
            rt.emplace_back(e, coeffs_[i]);
    }
    auto q2 = from_terms(field_, qt);
    q2.prec_ = quot.prec_;
    q2.normalize();
    auto r2 = from_terms(field_, rt);
    r2.prec_ = rem.prec_;
    r2.normalize();
    return {q2, r2};
}

LocalScalar LocalScalar::with_prec_at_most(int bound) const {
    LocalScalar r(*this);
    r.prec_ = std::min(r.prec_, bound);
    r.normalize();
    return r;
}

LocalScalar LocalScalar::certified_exact(int min_cert) const {
    if (exact()) return *this;
    if (prec_ < min_cert)
        throw precision_error("LocalScalar: cannot certify exactness at precision " +
                              std::to_string(prec_) + " (need " + std::to_string(min_cert) + ")");
    LocalScalar r(*this);
    r.prec_ = kExactPrec;
    return r;
}

std::vector<std::pair<int, FqElem>> LocalScalar::terms() const {
    std::vector<std::pair<int, FqElem>> out;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) out.emplace_back(val_ + int(i), coeffs_[i]);
    return out;
}

std::string LocalScalar::to_string() const {
    if (coeffs_.empty()) {
        if (exact()) return "0";
        return "O(t^" + std::to_string(prec_) + ")";
    }
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms()) {
        if (!first) os << " + ";
        first = false;
        if (e == 0 || c.v != 1 || field_.e() > 1) os << field_.to_string(c);
        if (e != 0) {
            if (c.v != 1 || field_.e() > 1) os << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    if (!exact()) os << " + O(t^" << prec_ << ")";
    return os.str();
}

LocalScalar series_invert_unit(const LocalScalar& u, int target_prec) {
    if (u.known_zero()) throw std::invalid_argument("series_invert_unit: zero input");
    const FieldSpec& f = u.field();
    const int v = u.val_finite();
    // Number of certified inverse digits: the inverse of u = t^v*w has the
    // form t^-v * (z_0 + z_1 t + ...); digit z_k needs w's digits up to k.
    long long digits = target_prec;
    if (!u.exact()) digits = std::min<long long>(digits, (long long)u.prec() - v);
    if (digits <= 0) throw precision_error("series_invert_unit: no certifiable digits at this precision");

    auto w0 = u.leading();
    auto w0inv = f.inv(w0);
    auto terms = u.terms();
    // Exact monomial has an exact inverse.
    if (u.exact() && terms.size() == 1)
        return LocalScalar::monomial(f, -v, w0inv);

    std::vector<FqElem> z(size_t(digits), f.zero());
    z[0] = w0inv;
    for (long long k = 1; k < digits; ++k) {
        FqElem acc = f.zero();
        for (auto& [e, c] : terms) {
            long long i = e - v;
            if (i >= 1 && i <= k) acc = f.add(acc, f.mul(c, z[size_t(k - i)]));
        }
        z[size_t(k)] = f.neg(f.mul(w0inv, acc));
    }
    std::vector<std::pair<int, FqElem>> out;
    for (long long k = 0; k < digits; ++k)
        if (!z[size_t(k)].is_zero()) out.emplace_back(int(-v + k), z[size_t(k)]);
    auto r = LocalScalar::from_terms(f, out);
    r = r.with_prec_at_most(int(-v + digits));
    return r;
}

} // namespace sympb
