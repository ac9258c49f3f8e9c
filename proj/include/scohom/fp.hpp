#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <iosfwd>
#include <ostream>
#include <Eigen/Core>

namespace scohom {

struct ZeroInverseError : std::domain_error {
    ZeroInverseError() : std::domain_error("inverse of zero residue") {}
};

struct ModulusMismatchError : std::invalid_argument {
    ModulusMismatchError(uint32_t a, uint32_t b)
        : std::invalid_argument("modulus mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/**
 * Residue modulo a prime, carrying its modulus.
 *
 * A default-constructed or integer-constructed value is "unbound" (modulus 0)
 * and behaves as a plain integer constant; any arithmetic with a bound value
 * reduces it into that modulus. This is what lets `Eigen::Matrix<Fp,...>`
 * work: Eigen materializes literals as `Scalar(0)`, `Scalar(1)`.
 */
class Fp {
public:
    Fp() = default;
    Fp(long long n) : val_(n) {}
    Fp(int n) : val_(n) {}
    Fp(long long n, uint32_t p) : mod_(p) { val_ = reduce(n, p); }

    long long value() const { return val_; }
    uint32_t modulus() const { return mod_; }
    bool bound() const { return mod_ != 0; }
    bool isZero() const { return val_ == 0; }

    Fp operator-() const { return mod_ ? Fp(mod_ - val_, mod_) : Fp(-val_); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        uint32_t m = merged(a, b);
        return m ? Fp(reduce(a.val_, m) + reduce(b.val_, m), m) : Fp(a.val_ + b.val_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        uint32_t m = merged(a, b);
        return m ? Fp(reduce(a.val_, m) - reduce(b.val_, m), m) : Fp(a.val_ - b.val_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        uint32_t m = merged(a, b);
        return m ? Fp(reduce(a.val_, m) * reduce(b.val_, m), m) : Fp(a.val_ * b.val_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        uint32_t m = merged(a, b);
        return m ? reduce(a.val_, m) == reduce(b.val_, m) : a.val_ == b.val_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    /// Multiplicative inverse; throws ZeroInverseError on zero, requires a bound modulus.
    Fp inverse() const {
        if (!bound()) throw std::logic_error("inverse of unbound Fp constant");
        if (val_ == 0) throw ZeroInverseError();
        long long t = 0, newt = 1, r = mod_, newr = val_;
        while (newr != 0) {
            long long q = r / newr;
            long long tmp = t - q * newt; t = newt; newt = tmp;
            tmp = r - q * newr; r = newr; newr = tmp;
        }
        return Fp(t, mod_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.val_; }

private:
    static long long reduce(long long n, uint32_t p) {
        long long r = n % static_cast<long long>(p);
        return r < 0 ? r + p : r;
    }
    static uint32_t merged(const Fp& a, const Fp& b) {
        if (a.mod_ == b.mod_) return a.mod_;
        if (a.mod_ == 0) return b.mod_;
        if (b.mod_ == 0) return a.mod_;
        throw ModulusMismatchError(a.mod_, b.mod_);
    }

    long long val_ = 0;
    uint32_t mod_ = 0;
};

/**
 * An odd prime field F_p with p machine-word sized. Rejects p = 2 and
 * composite p at construction.
 */
class PrimeField {
public:
    explicit PrimeField(uint32_t p) : p_(p) {
        if (p < 3) throw std::invalid_argument("prime field requires an odd prime p >= 3");
        if (!isPrime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    }

    uint32_t p() const { return p_; }
    Fp operator()(long long n) const { return Fp(n, p_); }
    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }
    Fp inverse(const Fp& a) const { return Fp(a.value(), p_).inverse(); }
    Fp half() const { return Fp(2, p_).inverse(); }

    static bool isPrime(uint64_t n) {
        if (n < 2) return false;
        for (uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    uint32_t p_;
};

/// binom(n, k) reduced mod p (exact integer computation, n small).
inline Fp binomMod(long long n, long long k, const PrimeField& F) {
    if (k < 0 || k > n) return F.zero();
    // Lucas' theorem keeps everything word-sized for arbitrary n.
    uint64_t p = F.p();
    uint64_t result = 1;
    uint64_t N = static_cast<uint64_t>(n), K = static_cast<uint64_t>(k);
    while (N > 0 || K > 0) {
        uint64_t ni = N % p, ki = K % p;
        if (ki > ni) return F.zero();
        uint64_t c = 1;
        for (uint64_t i = 0; i < ki; ++i) {
            c = c * (ni - i) % p;
            c = c * static_cast<uint64_t>(Fp(static_cast<long long>(i + 1), F.p()).inverse().value()) % p;
        }
        result = result * c % p;
        N /= p; K /= p;
    }
    return F(static_cast<long long>(result));
}

/// binom(p, i)/p as an integer, 0 < i < p, then reduced mod p.
inline Fp carryCoefficient(uint32_t i, const PrimeField& F) {
    uint32_t p = F.p();
    if (i == 0 || i >= p) throw std::invalid_argument("carryCoefficient requires 0 < i < p");
    unsigned long long binom = 1;
    for (uint32_t j = 1; j <= i; ++j) binom = binom * (p - j + 1) / j;
    return F(static_cast<long long>(binom / p));
}

using MatFp = Eigen::Matrix<Fp, Eigen::Dynamic, Eigen::Dynamic>;
using VecFp = Eigen::Matrix<Fp, Eigen::Dynamic, 1>;

}  // namespace scohom

namespace Eigen {
template <>
struct NumTraits<scohom::Fp> {
    typedef scohom::Fp Real;
    typedef scohom::Fp NonInteger;
    typedef scohom::Fp Literal;
    typedef scohom::Fp Nested;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };
    static inline Real epsilon() { return scohom::Fp(0); }
    static inline Real dummy_precision() { return scohom::Fp(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen
