#include "trigon/field.hpp"

#include <array>
#include <utility>

namespace trigon {

namespace {

// Fixed irreducible moduli for the supported extension fields, constant term
// first. Chosen once; never searched at runtime.
const std::vector<int>* modulus_for(int q) {
    static const std::vector<int> m4{1, 1, 1};        // x^2 + x + 1
    static const std::vector<int> m8{1, 1, 0, 1};     // x^3 + x + 1
    static const std::vector<int> m9{1, 0, 1};        // x^2 + 1
    static const std::vector<int> m16{1, 1, 0, 0, 1}; // x^4 + x + 1
    static const std::vector<int> m25{3, 0, 1};       // x^2 + 3
    static const std::vector<int> m27{1, 2, 0, 1};    // x^3 + 2x + 1
    switch (q) {
        case 4: return &m4;
        case 8: return &m8;
        case 9: return &m9;
        case 16: return &m16;
        case 25: return &m25;
        case 27: return &m27;
        default: return nullptr;
    }
}

// Returns (p, k) with q = p^k for the smallest prime p, or p = 0 if q is not
// a prime power.
std::pair<int, int> factor_prime_power(int q) {
    if (q < 2) return {0, 0};
    int p = 0;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return {q, 1}; // q itself prime
    int k = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) return {0, 0};
    return {p, k};
}

std::vector<int> digits_of(int a, int p, int k) {
    std::vector<int> d(k, 0);
    for (int i = 0; i < k; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

int value_of(const std::vector<int>& d, int p, int k) {
    int v = 0;
    for (int i = k - 1; i >= 0; --i) v = v * p + d[i];
    return v;
}

} // namespace

Field::Field(int q) {
    auto [p, k] = factor_prime_power(q);
    if (p == 0) throw NotPrimePower(q);
    if (q > 27) throw UnsupportedOrder(q);
    if (k >= 2) {
        const auto* m = modulus_for(q);
        if (m == nullptr) throw UnsupportedOrder(q);
        modulus_ = *m;
    }
    q_ = q;
    p_ = p;
    k_ = k;

    add_.assign(static_cast<size_t>(q) * q, 0);
    mul_.assign(static_cast<size_t>(q) * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, -1);

    for (int a = 0; a < q; ++a) {
        auto da = digits_of(a, p, k);
        for (int b = 0; b < q; ++b) {
            auto db = digits_of(b, p, k);
            std::vector<int> sum(k);
            for (int i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
            add_[static_cast<size_t>(a) * q + b] = value_of(sum, p, k);

            // Polynomial product reduced mod the modulus (degree k).
            std::vector<int> prod(2 * k - 1, 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            for (int d = 2 * k - 2; d >= k; --d) {
                int c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                // x^d = -modulus_tail * x^(d-k) (leading coefficient is 1)
                for (int i = 0; i < k; ++i) {
                    int t = prod[d - k + i] - c * modulus_[i];
                    prod[d - k + i] = ((t % p) + p) % p;
                }
            }
            prod.resize(k);
            mul_[static_cast<size_t>(a) * q + b] = value_of(prod, p, k);
        }
    }
    for (int a = 0; a < q; ++a) {
        auto da = digits_of(a, p, k);
        for (int& d : da) d = (p - d) % p;
        neg_[a] = value_of(da, p, k);
        for (int b = 0; b < q; ++b) {
            if (mul_[static_cast<size_t>(a) * q + b] == 1) {
                inv_[a] = b;
                break;
            }
        }
    }
}

int Field::inv(int a) const {
    check(a);
    if (a == 0) throw DivisionByZero();
    return inv_[a];
}

int Field::check(int a) const {
    if (a < 0 || a >= q_)
        throw Error("element " + std::to_string(a) + " out of range for GF(" +
                    std::to_string(q_) + ")");
    return a;
}

} // namespace trigon
