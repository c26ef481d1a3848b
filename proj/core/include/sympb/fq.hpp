#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sympb/errors.hpp"

namespace sympb {

/// Element of a finite field F_q, q = p^e. The value is the base-p digit
/// encoding of the coefficient vector of the representative polynomial,
/// constant term in the lowest digit; for prime fields it is just the
/// residue. All arithmetic goes through FieldSpec.
struct FqElem {
    uint32_t v = 0;

    friend bool operator==(FqElem a, FqElem b) { return a.v == b.v; }
    friend bool operator!=(FqElem a, FqElem b) { return a.v != b.v; }
    friend bool operator<(FqElem a, FqElem b) { return a.v < b.v; }
    bool is_zero() const { return v == 0; }
};

/// Description of F_q = F_p[x]/(modulus), q = p^e. Immutable and cheap to
/// copy; the multiplication tables are shared. Construct via FieldSpec::make
/// so that the same (p, e) always produces the same modulus.
class FieldSpec {
public:
    FieldSpec() = default; // invalid until assigned from make()

    /// Deterministic field constructor. The modulus is the monic irreducible
    /// degree-e polynomial whose coefficient vector, read as the base-p
    /// integer sum c_i p^i, is smallest. Throws std::invalid_argument for
    /// non-prime p or e < 1, guard_error for q beyond the supported range.
    static FieldSpec make(uint32_t p, uint32_t e);

    bool valid() const { return t_ != nullptr; }
    uint32_t p() const { return t_->p; }
    uint32_t e() const { return t_->e; }
    uint32_t q() const { return t_->q; }

    /// Modulus coefficients, constant term first, length e+1, monic.
    /// For e == 1 this is unused and returned empty.
    const std::vector<uint32_t>& modulus() const { return t_->modulus; }

    FqElem zero() const { return FqElem{0}; }
    FqElem one() const { return FqElem{1}; }

    /// Element from an integer: residue mod p embedded as a constant.
    FqElem from_int(int64_t k) const;
    /// Element with the given digit encoding; must be < q.
    FqElem element(uint32_t code) const;

    FqElem add(FqElem a, FqElem b) const;
    FqElem sub(FqElem a, FqElem b) const;
    FqElem neg(FqElem a) const;
    FqElem mul(FqElem a, FqElem b) const;
    /// Multiplicative inverse; throws std::invalid_argument on zero.
    FqElem inv(FqElem a) const;
    FqElem pow(FqElem a, uint64_t k) const;

    /// Digits of the representative polynomial, constant term first, length e.
    std::vector<uint32_t> digits(FqElem a) const;
    FqElem from_digits(const std::vector<uint32_t>& d) const;

    std::string to_string(FqElem a) const;

    /// Fields compare by (p, e); make() is deterministic so this suffices.
    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.t_->p == b.t_->p && a.t_->e == b.t_->e;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

private:
    struct Tables {
        uint32_t p = 0, e = 0, q = 0;
        std::vector<uint32_t> modulus;  // constant first, length e+1; empty for e==1
        // Dense op tables, only built for small q.
        std::vector<FqElem> mul_table;  // q*q
        std::vector<FqElem> inv_table;  // q
        bool has_tables = false;
    };

    explicit FieldSpec(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

    FqElem mul_direct(FqElem a, FqElem b) const;

    std::shared_ptr<const Tables> t_;
};

bool is_prime(uint64_t n);

} // namespace sympb
