#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scohom/fp.hpp"

namespace scohom {

/// (external degree, internal parity) in Z x Z/2.
struct Bidegree {
    int deg = 0;
    int par = 0;  // 0 or 1

    friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.deg + b.deg, (a.par + b.par) & 1}; }
    friend bool operator==(Bidegree a, Bidegree b) { return a.deg == b.deg && a.par == b.par; }
};

/// Sign of the graded twist map T(v (x) w) = sign * (w (x) v).
inline int twistSign(Bidegree a, Bidegree b) {
    int e = (a.deg * b.deg + a.par * b.par) & 1;
    return e ? -1 : 1;
}

/// Koszul sign picked up when a map g passes a vector v: (f (x) g)(v (x) w).
inline int mapTensorSign(Bidegree g, Bidegree v) {
    int e = (g.deg * v.deg + g.par * v.par) & 1;
    return e ? -1 : 1;
}

/**
 * Ordered homogeneous basis of a superspace: even names x_1..x_s then odd
 * names y_1..y_t. Fixed once; every complex downstream enumerates its bases
 * relative to this order.
 */
struct SuperBasis {
    std::vector<std::string> even;
    std::vector<std::string> odd;

    int s() const { return static_cast<int>(even.size()); }
    int t() const { return static_cast<int>(odd.size()); }
    int dim() const { return s() + t(); }
    int parityOf(int gen) const { return gen < s() ? 0 : 1; }
    const std::string& nameOf(int gen) const {
        return gen < s() ? even[gen] : odd[gen - s()];
    }
    int indexOf(const std::string& name) const;  // -1 when absent

    friend bool operator==(const SuperBasis& a, const SuperBasis& b) {
        return a.even == b.even && a.odd == b.odd;
    }
};

/**
 * Standard monomial <x_{i_1}...x_{i_b}> gamma_{a_1}(y_1)...gamma_{a_t}(y_t)
 * gamma'_{c_1}(x_1)...gamma'_{c_s}(x_s) in Lambda (x) Gamma (x) Gamma'.
 * Bidegree (b + sum a_j + 2 sum c_i, parity of sum a_j).
 */
struct CgaMono {
    uint32_t ext = 0;            // bitmask over even indices, strictly increasing
    std::vector<int> gamma;      // size t
    std::vector<int> gammaP;     // size s

    int extCount() const { return __builtin_popcount(ext); }
    int gammaTotal() const { int n = 0; for (int a : gamma) n += a; return n; }
    int gammaPTotal() const { int n = 0; for (int c : gammaP) n += c; return n; }
    Bidegree bidegree() const { return {extCount() + gammaTotal() + 2 * gammaPTotal(), gammaTotal() & 1}; }
    bool isOne() const { return ext == 0 && gammaTotal() == 0 && gammaPTotal() == 0; }

    static CgaMono one(int s, int t) {
        CgaMono m;
        m.gamma.assign(t, 0);
        m.gammaP.assign(s, 0);
        return m;
    }

    friend bool operator==(const CgaMono& a, const CgaMono& b) {
        return a.ext == b.ext && a.gamma == b.gamma && a.gammaP == b.gammaP;
    }
    /// Subset-lex on the exterior part, then lex on gamma, then on gamma'.
    friend bool operator<(const CgaMono& a, const CgaMono& b);

    std::string str(const SuperBasis& basis) const;
};

/// F_p-linear combination of standard monomials.
using CgaElement = std::map<CgaMono, Fp>;

void cgaAdd(CgaElement& dst, const CgaMono& m, const Fp& c);
void cgaAdd(CgaElement& dst, const CgaElement& src, const Fp& scale);

/// Product of two standard monomials: zero, or a scalar times one monomial.
/// Exterior collisions kill the product; divided powers merge with binomial
/// coefficients mod p; the sign is the Koszul reordering sign.
bool cgaMultiply(const CgaMono& m1, const CgaMono& m2, const PrimeField& F,
                 Fp& coeffOut, CgaMono& monoOut);

CgaElement cgaMultiply(const CgaElement& a, const CgaElement& b, const PrimeField& F);

/// Coproduct terms (coefficient, left, right) of a standard monomial, with
/// Koszul signs from assembling the tensor-square product.
std::vector<std::tuple<Fp, CgaMono, CgaMono>> cgaCoproduct(const CgaMono& m, const PrimeField& F);

/**
 * All standard monomials of the given external degree, in canonical order.
 * `withGammaP` enables the gamma'-part (external degree doubled).
 */
std::vector<CgaMono> enumerateMonomials(int s, int t, int degree, bool withGammaP);

/// Sign of interleaving two disjoint increasing index sets; 0 on collision.
int extMergeSign(uint32_t a, uint32_t b);

}  // namespace scohom
