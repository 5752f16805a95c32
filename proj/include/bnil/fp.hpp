#pragma once

// Prime field F_p with compile-time modulus, p < 2^16.  Values live in
// [0, p); arithmetic is branch-light and never overflows 32 bits.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bnil {

constexpr bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

template <uint32_t P>
class Fp {
    static_assert(P >= 2 && P < 65536, "modulus out of range");
    static_assert(is_prime_u32(P), "modulus must be prime");

public:
    Fp() : v_(0) {}
    Fp(long long v) : v_(static_cast<uint32_t>(((v % P) + P) % P)) {}

    uint32_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return from_raw(v_ ? P - v_ : 0); }
    Fp& operator+=(Fp o) { v_ += o.v_; if (v_ >= P) v_ -= P; return *this; }
    Fp& operator-=(Fp o) { v_ += P - o.v_; if (v_ >= P) v_ -= P; return *this; }
    Fp& operator*=(Fp o) { v_ = v_ * o.v_ % P; return *this; }
    Fp& operator/=(Fp o) { return *this *= o.inv(); }

    friend Fp operator+(Fp a, Fp b) { return a += b; }
    friend Fp operator-(Fp a, Fp b) { return a -= b; }
    friend Fp operator*(Fp a, Fp b) { return a *= b; }
    friend Fp operator/(Fp a, Fp b) { return a /= b; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

    Fp inv() const {
        if (v_ == 0) throw std::domain_error("Fp: division by zero");
        // Extended Euclid on (v, P).
        int64_t a = v_, b = P, x0 = 1, x1 = 0;
        while (b) {
            int64_t q = a / b;
            a -= q * b; std::swap(a, b);
            x0 -= q * x1; std::swap(x0, x1);
        }
        return Fp(x0);
    }

    std::string str() const { return std::to_string(v_); }

private:
    static Fp from_raw(uint32_t v) { Fp f; f.v_ = v; return f; }
    uint32_t v_;
};

}  // namespace bnil
