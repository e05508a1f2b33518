#pragma once

#include <vector>

#include "trigon/errors.hpp"

namespace trigon {

// GF(q) for prime powers q <= 27. Elements are integers 0..q-1 read as
// base-p digit vectors, little-endian: the element sum(d_i * p^i) stands for
// the polynomial sum(d_i * x^i) over GF(p). For extension fields the modulus
// comes from a fixed built-in table so that tables are identical across runs.
class Field {
public:
    explicit Field(int q);

    int q() const noexcept { return q_; }
    int p() const noexcept { return p_; }
    int degree() const noexcept { return k_; }
    // Modulus coefficients, constant term first; empty for prime fields.
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    int add(int a, int b) const { return add_[check(a) * q_ + check(b)]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int neg(int a) const { return neg_[check(a)]; }
    int mul(int a, int b) const { return mul_[check(a) * q_ + check(b)]; }
    int inv(int a) const;
    int div(int a, int b) const { return mul(a, inv(b)); }

private:
    int check(int a) const;

    int q_ = 0, p_ = 0, k_ = 0;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_; // q*q tables
    std::vector<int> neg_, inv_; // size q; inv_[0] = -1 sentinel
};

} // namespace trigon
