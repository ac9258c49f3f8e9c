#include "scohom/grading.hpp"

#include <algorithm>
#include <sstream>

namespace scohom {

int SuperBasis::indexOf(const std::string& name) const {
    for (int i = 0; i < s(); ++i)
        if (even[i] == name) return i;
    for (int j = 0; j < t(); ++j)
        if (odd[j] == name) return s() + j;
    return -1;
}

static std::vector<int> maskToIndices(uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i);
    return out;
}

bool operator<(const CgaMono& a, const CgaMono& b) {
    if (a.ext != b.ext) {
        std::vector<int> ia = maskToIndices(a.ext), ib = maskToIndices(b.ext);
        return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
    }
    if (a.gamma != b.gamma) return a.gamma < b.gamma;
    return a.gammaP < b.gammaP;
}

std::string CgaMono::str(const SuperBasis& basis) const {
    std::ostringstream os;
    bool any = false;
    if (ext) {
        os << "<";
        bool first = true;
        for (int i : maskToIndices(ext)) {
            if (!first) os << " ";
            os << basis.even[i];
            first = false;
        }
        os << ">";
        any = true;
    }
    for (size_t j = 0; j < gamma.size(); ++j) {
        if (gamma[j] > 0) {
            os << "g" << gamma[j] << "(" << basis.odd[j] << ")";
            any = true;
        }
    }
    for (size_t i = 0; i < gammaP.size(); ++i) {
        if (gammaP[i] > 0) {
            os << "g'" << gammaP[i] << "(" << basis.even[i] << ")";
            any = true;
        }
    }
    if (!any) os << "1";
    return os.str();
}

void cgaAdd(CgaElement& dst, const CgaMono& m, const Fp& c) {
    if (c.isZero()) return;
    auto it = dst.find(m);
    if (it == dst.end()) {
        dst.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.isZero()) dst.erase(it);
    }
}

void cgaAdd(CgaElement& dst, const CgaElement& src, const Fp& scale) {
    if (scale.isZero()) return;
    for (auto& [m, c] : src) cgaAdd(dst, m, c * scale);
}

int extMergeSign(uint32_t a, uint32_t b) {
    if (a & b) return 0;
    // Count pairs (i in b, j in a) with j > i: each such pair is a transposition.
    int inv = 0;
    for (int i = 0; i < 32; ++i) {
        if (b & (1u << i)) inv += __builtin_popcount(a & ~((1u << (i + 1)) - 1));
    }
    return (inv & 1) ? -1 : 1;
}

bool cgaMultiply(const CgaMono& m1, const CgaMono& m2, const PrimeField& F,
                 Fp& coeffOut, CgaMono& monoOut)
{
    int es = extMergeSign(m1.ext, m2.ext);
    if (es == 0) return false;
    // m2's exterior part moves left past m1's gamma part: bidegrees
    // (|ext2|, 0) vs (sum a, sum a mod 2), so only the external degrees count.
    int moveSign = ((m2.extCount() * m1.gammaTotal()) & 1) ? -1 : 1;
    Fp coeff = F(es * moveSign);
    CgaMono out;
    out.ext = m1.ext | m2.ext;
    size_t t = m1.gamma.size(), s = m1.gammaP.size();
    if (m2.gamma.size() != t || m2.gammaP.size() != s)
        throw std::invalid_argument("cgaMultiply: basis mismatch");
    out.gamma.resize(t);
    out.gammaP.resize(s);
    for (size_t j = 0; j < t; ++j) {
        out.gamma[j] = m1.gamma[j] + m2.gamma[j];
        coeff *= binomMod(out.gamma[j], m1.gamma[j], F);
    }
    for (size_t i = 0; i < s; ++i) {
        out.gammaP[i] = m1.gammaP[i] + m2.gammaP[i];
        coeff *= binomMod(out.gammaP[i], m1.gammaP[i], F);
    }
    if (coeff.isZero()) return false;
    coeffOut = coeff;
    monoOut = out;
    return true;
}

CgaElement cgaMultiply(const CgaElement& a, const CgaElement& b, const PrimeField& F) {
    CgaElement out;
    for (auto& [m1, c1] : a) {
        for (auto& [m2, c2] : b) {
            Fp c;
            CgaMono m;
            if (cgaMultiply(m1, m2, F, c, m)) cgaAdd(out, m, c * c1 * c2);
        }
    }
    return out;
}

std::vector<std::tuple<Fp, CgaMono, CgaMono>> cgaCoproduct(const CgaMono& m, const PrimeField& F) {
    size_t s = m.gammaP.size(), t = m.gamma.size();
    std::vector<std::tuple<Fp, CgaMono, CgaMono>> terms;
    terms.emplace_back(F.one(), CgaMono::one(static_cast<int>(s), static_cast<int>(t)),
                       CgaMono::one(static_cast<int>(s), static_cast<int>(t)));

    // Multiply in the coproduct of each generator factor, in canonical order.
    // Product in the tensor square: (a (x) b)(u (x) v) picks up the twist
    // sign of b past u; right-side appends of canonically ordered factors
    // inside each tensor leg carry no further reordering sign.
    auto absorb = [&](const std::vector<std::pair<CgaMono, CgaMono>>& split) {
        std::vector<std::tuple<Fp, CgaMono, CgaMono>> next;
        for (auto& [c, a, b] : terms) {
            for (auto& [u, v] : split) {
                Fp cc = c * F(twistSign(b.bidegree(), u.bidegree()));
                Fp c1, c2;
                CgaMono au, bv;
                if (!cgaMultiply(a, u, F, c1, au)) continue;
                if (!cgaMultiply(b, v, F, c2, bv)) continue;
                cc *= c1 * c2;
                if (!cc.isZero()) next.emplace_back(cc, au, bv);
            }
        }
        terms = std::move(next);
    };

    for (int i = 0; i < static_cast<int>(s); ++i) {
        if (!(m.ext & (1u << i))) continue;
        CgaMono g = CgaMono::one(static_cast<int>(s), static_cast<int>(t));
        g.ext = 1u << i;
        CgaMono unit = CgaMono::one(static_cast<int>(s), static_cast<int>(t));
        absorb({{g, unit}, {unit, g}});
    }
    for (size_t j = 0; j < t; ++j) {
        if (m.gamma[j] == 0) continue;
        std::vector<std::pair<CgaMono, CgaMono>> split;
        for (int u = 0; u <= m.gamma[j]; ++u) {
            CgaMono l = CgaMono::one(static_cast<int>(s), static_cast<int>(t));
            CgaMono r = l;
            l.gamma[j] = u;
            r.gamma[j] = m.gamma[j] - u;
            split.push_back({l, r});
        }
        absorb(split);
    }
    for (size_t i = 0; i < s; ++i) {
        if (m.gammaP[i] == 0) continue;
        std::vector<std::pair<CgaMono, CgaMono>> split;
        for (int u = 0; u <= m.gammaP[i]; ++u) {
            CgaMono l = CgaMono::one(static_cast<int>(s), static_cast<int>(t));
            CgaMono r = l;
            l.gammaP[i] = u;
            r.gammaP[i] = m.gammaP[i] - u;
            split.push_back({l, r});
        }
        absorb(split);
    }
    return terms;
}

static void enumerateGammaTuples(int slots, int total, std::vector<int>& cur,
                                 std::vector<std::vector<int>>& out)
{
    if (slots == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int a = 0; a <= total; ++a) {
        cur.push_back(a);
        enumerateGammaTuples(slots - 1, total - a, cur, out);
        cur.pop_back();
    }
}

std::vector<CgaMono> enumerateMonomials(int s, int t, int degree, bool withGammaP) {
    std::vector<CgaMono> result;
    if (degree < 0) return result;
    for (uint32_t mask = 0; mask < (1u << s); ++mask) {
        int b = __builtin_popcount(mask);
        if (b > degree) continue;
        int maxGp = withGammaP ? (degree - b) / 2 : 0;
        for (int gp = 0; gp <= maxGp; ++gp) {
            int g = degree - b - 2 * gp;
            if (g < 0 || (t == 0 && g > 0)) continue;
            std::vector<std::vector<int>> gammas;
            if (t == 0) {
                gammas.push_back({});
            } else {
                std::vector<int> cur;
                enumerateGammaTuples(t, g, cur, gammas);
            }
            std::vector<std::vector<int>> gps;
            if (gp == 0) {
                gps.push_back(std::vector<int>(s, 0));
            } else if (s == 0) {
                continue;
            } else {
                std::vector<int> cur;
                enumerateGammaTuples(s, gp, cur, gps);
            }
            for (auto& ga : gammas) {
                for (auto& gpv : gps) {
                    CgaMono m;
                    m.ext = mask;
                    m.gamma = ga;
                    m.gammaP = gpv;
                    result.push_back(std::move(m));
                }
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace scohom
