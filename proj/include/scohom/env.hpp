#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "scohom/liesuper.hpp"

namespace scohom {

struct AmbientMismatchError : std::invalid_argument {
    AmbientMismatchError() : std::invalid_argument("elements live in different enveloping algebras") {}
};

/**
 * A PBW-ordered monomial x_1^{n_1}...x_s^{n_s} y_{j_1}...y_{j_k}: even
 * exponent tuple plus a strictly increasing odd subset. In V(L) the even
 * exponents are capped at p-1. Monomial length drives the filtration F_i.
 */
struct PbwMono {
    std::vector<int> even;  // size s
    uint32_t odd = 0;       // bitmask over odd indices

    int length() const {
        int n = __builtin_popcount(odd);
        for (int e : even) n += e;
        return n;
    }
    int parity() const { return __builtin_popcount(odd) & 1; }
    bool isOne() const { return odd == 0 && length() == 0; }

    static PbwMono one(int s) { return PbwMono{std::vector<int>(s, 0), 0}; }

    friend bool operator==(const PbwMono& a, const PbwMono& b) {
        return a.odd == b.odd && a.even == b.even;
    }
    friend bool operator<(const PbwMono& a, const PbwMono& b) {
        if (a.even != b.even) return a.even < b.even;
        return a.odd < b.odd;
    }

    std::string str(const SuperBasis& basis) const;
};

/// Normal-form element of U(L) or V(L).
using EnvElt = std::map<PbwMono, Fp>;
using EnvTensorElt = std::map<std::pair<PbwMono, PbwMono>, Fp>;

void envAdd(EnvElt& dst, const PbwMono& m, const Fp& c);
void envAdd(EnvElt& dst, const EnvElt& src, const Fp& scale);

/**
 * PBW-normalized arithmetic in U(L) (ambient = Universal) or
 * V(L) = U(L)/<x^p - x^{[p]}> (ambient = Restricted), plus the Hopf
 * structure. Rewriting: leftmost odd square first, then leftmost
 * out-of-order adjacent pair, then (in V) exponent capping; terminates by
 * the (length, inversions) measure.
 *
 * Caches are per-instance and not synchronized; share one instance per
 * thread or construct afresh.
 */
class EnvAlgebra {
public:
    enum class Ambient { Universal, Restricted };

    EnvAlgebra(const LieSuperAlgebraSpec& L, Ambient ambient);

    const LieSuperAlgebraSpec& lie() const { return L_; }
    const PrimeField& field() const { return L_.field; }
    Ambient ambient() const { return ambient_; }
    bool restricted() const { return ambient_ == Ambient::Restricted; }

    EnvElt one() const;
    EnvElt gen(int g) const;
    /// Normal form of a product of generators (word of generator indices).
    EnvElt normalizeWord(const std::vector<int>& word, Fp coeff) const;
    EnvElt multiply(const EnvElt& a, const EnvElt& b) const;
    EnvElt multiplyMono(const PbwMono& a, const PbwMono& b) const;

    Fp counit(const EnvElt& a) const;
    EnvTensorElt coproduct(const EnvElt& a) const;
    const EnvTensorElt& coproductMono(const PbwMono& m) const;
    EnvElt antipode(const EnvElt& a) const;

    /// Full PBW basis of V(L), in canonical order. Restricted ambient only.
    const std::vector<PbwMono>& vBasis() const;
    int vIndex(const PbwMono& m) const;
    int vDim() const;
    /// Maximal monomial length in V(L): (p-1)s + t.
    int maxLength() const { return (static_cast<int>(L_.p()) - 1) * L_.s() + L_.t(); }

    static std::vector<int> word(const PbwMono& m, int s);

private:
    void normalizeInto(std::vector<int>& w, Fp c, EnvElt& out) const;

    LieSuperAlgebraSpec L_;
    Ambient ambient_;
    mutable std::vector<PbwMono> vBasis_;
    mutable std::map<PbwMono, int> vIndex_;
    mutable std::map<std::pair<PbwMono, PbwMono>, EnvElt> mulCache_;
    mutable std::map<PbwMono, EnvTensorElt> coprodCache_;
};

/**
 * The finite dual superbialgebra V(L)^* on the basis dual to the PBW
 * monomials: structure tensors for product (transpose of the coproduct of
 * V) and coproduct (transpose of multiplication), and the levels of the
 * augmentation-ideal filtration I_eps^n, spanned by duals of monomials of
 * length >= n.
 */
struct DualBialgebra {
    int dim = 0;
    int unitIndex = 0;  // the counit of V = dual of the PBW monomial 1
    std::vector<int> parity;
    std::vector<int> filtrationLevel;                                      // = monomial length
    std::vector<std::vector<std::vector<std::pair<int, Fp>>>> product;     // [u][v] -> terms
    std::vector<std::vector<std::pair<std::pair<int, int>, Fp>>> coproduct;  // [m] -> terms

    std::vector<Fp> multiply(const std::vector<Fp>& f, const std::vector<Fp>& g,
                             const PrimeField& F) const;
};

DualBialgebra buildDualBialgebra(const EnvAlgebra& env);

}  // namespace scohom
