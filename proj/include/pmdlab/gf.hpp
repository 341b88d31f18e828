#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

namespace pmdlab {

class FieldElement;

/// Galois field GF(q), q = p^d, with table-driven arithmetic.
///
/// Fields are interned: get(p, d) always returns the same instance for equal
/// (p, d), and every extension field uses a fixed low-weight irreducible
/// modulus from a shipped table, so all coordinate computations are
/// reproducible bit for bit.
///
/// Elements are encoded as integers in 0..q-1: the index
/// a_{d-1} p^{d-1} + ... + a_1 p + a_0 stands for the polynomial
/// a_{d-1} x^{d-1} + ... + a_1 x + a_0 over GF(p).  Index 0 is the additive
/// identity and index 1 the multiplicative identity.
class Field {
public:
    /// Interned lookup by characteristic and degree.
    /// Supported: d = 1 for every prime p <= 31, and
    /// (p, d) in {(2,2), (2,3), (2,4), (3,2), (3,3), (5,2)}.
    /// Throws std::invalid_argument for non-prime p or unsupported (p, d).
    static const Field& get(int p, int d);

    /// Interned lookup by field order (4 -> GF(2^2), 7 -> GF(7), ...).
    static const Field& of_order(int q);

    static bool order_supported(int q);

    int p() const { return p_; }
    int d() const { return d_; }
    int q() const { return q_; }

    /// Monic modulus polynomial; modulus()[i] is the coefficient of x^i.
    /// For d = 1 this is the polynomial x and is not used by arithmetic.
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement element(int index) const;
    FieldElement zero() const;
    FieldElement one() const;

    // Index-level arithmetic.  All arguments must lie in 0..q-1.
    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    /// Throws std::domain_error("division by zero") for a = 0.
    int inv(int a) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field(int p, int d, std::vector<int> modulus);

    int p_, d_, q_;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_, neg_, inv_;
};

/// Value type for one element of an interned Field.  Elements compare by
/// (field identity, index); arithmetic between elements of different fields
/// throws std::invalid_argument("field mismatch").
class FieldElement {
public:
    FieldElement() : field_(nullptr), index_(0) {}
    FieldElement(const Field& field, int index);

    const Field& field() const { return *field_; }
    int index() const { return index_; }
    bool is_zero() const { return index_ == 0; }
    bool is_one() const { return index_ == 1; }

    FieldElement inverse() const;

    friend FieldElement operator+(FieldElement a, FieldElement b);
    friend FieldElement operator-(FieldElement a, FieldElement b);
    friend FieldElement operator*(FieldElement a, FieldElement b);
    friend FieldElement operator/(FieldElement a, FieldElement b);
    FieldElement operator-() const;

    friend bool operator==(FieldElement a, FieldElement b) {
        return a.field_ == b.field_ && a.index_ == b.index_;
    }
    friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }
    // Deterministic order: by (p, d), then index.  Elements of distinct
    // fields are never mixed in one container in practice.
    friend bool operator<(FieldElement a, FieldElement b);

private:
    const Field* field_;
    int index_;
};

FieldElement pow(FieldElement base, long long e);

std::ostream& operator<<(std::ostream& os, FieldElement e);

}  // namespace pmdlab
