#include "scohom/env.hpp"

#include <algorithm>
#include <sstream>

namespace scohom {

std::string PbwMono::str(const SuperBasis& basis) const {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < even.size(); ++i) {
        if (even[i] > 0) {
            os << basis.even[i];
            if (even[i] > 1) os << "^" << even[i];
            any = true;
        }
    }
    for (int j = 0; j < basis.t(); ++j) {
        if (odd & (1u << j)) {
            os << basis.odd[j];
            any = true;
        }
    }
    if (!any) os << "1";
    return os.str();
}

void envAdd(EnvElt& dst, const PbwMono& m, const Fp& c) {
    if (c.isZero()) return;
    auto it = dst.find(m);
    if (it == dst.end()) {
        dst.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.isZero()) dst.erase(it);
    }
}

void envAdd(EnvElt& dst, const EnvElt& src, const Fp& scale) {
    if (scale.isZero()) return;
    for (auto& [m, c] : src) envAdd(dst, m, c * scale);
}

EnvAlgebra::EnvAlgebra(const LieSuperAlgebraSpec& L, Ambient ambient)
    : L_(L), ambient_(ambient) {}

EnvElt EnvAlgebra::one() const {
    EnvElt e;
    e.emplace(PbwMono::one(L_.s()), field().one());
    return e;
}

EnvElt EnvAlgebra::gen(int g) const { return normalizeWord({g}, field().one()); }

std::vector<int> EnvAlgebra::word(const PbwMono& m, int s) {
    std::vector<int> w;
    for (int i = 0; i < static_cast<int>(m.even.size()); ++i)
        for (int k = 0; k < m.even[i]; ++k) w.push_back(i);
    for (int j = 0; m.odd >> j; ++j)
        if (m.odd & (1u << j)) w.push_back(s + j);
    return w;
}

void EnvAlgebra::normalizeInto(std::vector<int>& w, Fp c, EnvElt& out) const {
    const int s = L_.s();
    const int p = static_cast<int>(L_.p());
    const auto& basis = L_.basis;

    // Scan for the first rewrite site: odd squares first, then inversions,
    // then (in V) even runs of length p.
    for (size_t k = 0; k + 1 < w.size(); ++k) {
        int a = w[k], b = w[k + 1];
        if (a == b && basis.parityOf(a) == 1) {
            // y y = (1/2)[y, y]
            Fp half = field().half();
            const auto& br = L_.bracketOf(a, a);
            for (int m = 0; m < L_.dim(); ++m) {
                if (br[m].isZero()) continue;
                std::vector<int> w2(w.begin(), w.begin() + k);
                w2.push_back(m);
                w2.insert(w2.end(), w.begin() + k + 2, w.end());
                normalizeInto(w2, c * half * br[m], out);
            }
            return;
        }
    }
    for (size_t k = 0; k + 1 < w.size(); ++k) {
        int a = w[k], b = w[k + 1];
        if (a > b) {
            // a b = (-1)^{|a||b|} b a + [a, b]
            int sign = (basis.parityOf(a) & basis.parityOf(b)) ? -1 : 1;
            std::vector<int> swapped = w;
            std::swap(swapped[k], swapped[k + 1]);
            normalizeInto(swapped, c * Fp(sign), out);
            const auto& br = L_.bracketOf(a, b);
            for (int m = 0; m < L_.dim(); ++m) {
                if (br[m].isZero()) continue;
                std::vector<int> w2(w.begin(), w.begin() + k);
                w2.push_back(m);
                w2.insert(w2.end(), w.begin() + k + 2, w.end());
                normalizeInto(w2, c * br[m], out);
            }
            return;
        }
    }
    if (restricted()) {
        for (size_t k = 0; k + 1 < w.size(); ++k) {
            if (w[k] >= s || w[k] != w[k + 1]) continue;
            size_t run = 1;
            while (k + run < w.size() && w[k + run] == w[k]) ++run;
            if (static_cast<int>(run) >= p) {
                const auto& r = L_.restriction[w[k]];
                for (int m = 0; m < L_.dim(); ++m) {
                    if (r[m].isZero()) continue;
                    std::vector<int> w2(w.begin(), w.begin() + k);
                    w2.push_back(m);
                    w2.insert(w2.end(), w.begin() + k + p, w.end());
                    normalizeInto(w2, c * r[m], out);
                }
                return;
            }
            k += run - 1;
        }
    }

    // Normal form reached.
    PbwMono m = PbwMono::one(s);
    for (int g : w) {
        if (g < s) m.even[g] += 1;
        else m.odd |= 1u << (g - s);
    }
    envAdd(out, m, c);
}

EnvElt EnvAlgebra::normalizeWord(const std::vector<int>& word, Fp coeff) const {
    EnvElt out;
    std::vector<int> w = word;
    normalizeInto(w, field()(coeff.value()), out);
    return out;
}

EnvElt EnvAlgebra::multiplyMono(const PbwMono& a, const PbwMono& b) const {
    auto key = std::make_pair(a, b);
    auto it = mulCache_.find(key);
    if (it != mulCache_.end()) return it->second;
    std::vector<int> w = word(a, L_.s());
    std::vector<int> wb = word(b, L_.s());
    w.insert(w.end(), wb.begin(), wb.end());
    EnvElt out = normalizeWord(w, field().one());
    mulCache_.emplace(key, out);
    return out;
}

EnvElt EnvAlgebra::multiply(const EnvElt& a, const EnvElt& b) const {
    EnvElt out;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b) envAdd(out, multiplyMono(ma, mb), ca * cb);
    return out;
}

Fp EnvAlgebra::counit(const EnvElt& a) const {
    auto it = a.find(PbwMono::one(L_.s()));
    return it == a.end() ? field().zero() : it->second;
}

const EnvTensorElt& EnvAlgebra::coproductMono(const PbwMono& m) const {
    auto it = coprodCache_.find(m);
    if (it != coprodCache_.end()) return it->second;

    // Multiply out Delta(g) = g (x) 1 + 1 (x) g letter by letter; the super
    // tensor product inserts (-1)^{|b||g|} when g passes the right leg b.
    EnvTensorElt cur;
    cur.emplace(std::make_pair(PbwMono::one(L_.s()), PbwMono::one(L_.s())), field().one());
    for (int g : word(m, L_.s())) {
        int gp = L_.basis.parityOf(g);
        EnvTensorElt next;
        for (auto& [pr, c] : cur) {
            // (a (x) b)(g (x) 1) = (-1)^{|b||g|} a g (x) b
            int sign = (gp & pr.second.parity()) ? -1 : 1;
            std::vector<int> w = word(pr.first, L_.s());
            w.push_back(g);
            EnvElt agn = normalizeWord(w, field().one());
            for (auto& [ma, ca] : agn) {
                auto key = std::make_pair(ma, pr.second);
                auto it2 = next.find(key);
                Fp v = c * ca * Fp(sign);
                if (it2 == next.end()) next.emplace(key, v);
                else { it2->second += v; if (it2->second.isZero()) next.erase(it2); }
            }
            // (a (x) b)(1 (x) g) = a (x) b g
            std::vector<int> wb = word(pr.second, L_.s());
            wb.push_back(g);
            EnvElt bgn = normalizeWord(wb, field().one());
            for (auto& [mb, cb] : bgn) {
                auto key = std::make_pair(pr.first, mb);
                auto it2 = next.find(key);
                Fp v = c * cb;
                if (it2 == next.end()) next.emplace(key, v);
                else { it2->second += v; if (it2->second.isZero()) next.erase(it2); }
            }
        }
        cur = std::move(next);
    }
    return coprodCache_.emplace(m, std::move(cur)).first->second;
}

EnvTensorElt EnvAlgebra::coproduct(const EnvElt& a) const {
    EnvTensorElt out;
    for (auto& [m, c] : a) {
        for (auto& [pr, cc] : coproductMono(m)) {
            auto it = out.find(pr);
            Fp v = c * cc;
            if (v.isZero()) continue;
            if (it == out.end()) out.emplace(pr, v);
            else { it->second += v; if (it->second.isZero()) out.erase(it); }
        }
    }
    return out;
}

EnvElt EnvAlgebra::antipode(const EnvElt& a) const {
    EnvElt out;
    for (auto& [m, c] : a) {
        std::vector<int> w = word(m, L_.s());
        int o = __builtin_popcount(m.odd);
        int sign = ((w.size() + static_cast<size_t>(o * (o - 1) / 2)) & 1) ? -1 : 1;
        std::reverse(w.begin(), w.end());
        envAdd(out, normalizeWord(w, c * Fp(sign)), field().one());
    }
    return out;
}

const std::vector<PbwMono>& EnvAlgebra::vBasis() const {
    if (!vBasis_.empty() || L_.dim() == 0) return vBasis_;
    if (!restricted()) throw std::logic_error("vBasis: universal ambient is infinite-dimensional");
    const int s = L_.s(), t = L_.t(), p = static_cast<int>(L_.p());
    PbwMono m = PbwMono::one(s);
    std::vector<PbwMono> out;
    // Odd-major then even counters, re-sorted into canonical order below.
    for (uint32_t mask = 0; mask < (1u << t); ++mask) {
        m.odd = mask;
        std::fill(m.even.begin(), m.even.end(), 0);
        while (true) {
            out.push_back(m);
            int i = s - 1;
            while (i >= 0 && m.even[i] == p - 1) m.even[i--] = 0;
            if (i < 0) break;
            m.even[i] += 1;
        }
    }
    std::sort(out.begin(), out.end());
    vBasis_ = std::move(out);
    for (size_t i = 0; i < vBasis_.size(); ++i) vIndex_.emplace(vBasis_[i], static_cast<int>(i));
    return vBasis_;
}

int EnvAlgebra::vIndex(const PbwMono& m) const {
    vBasis();
    auto it = vIndex_.find(m);
    if (it == vIndex_.end()) throw std::logic_error("vIndex: not a V(L) basis monomial");
    return it->second;
}

int EnvAlgebra::vDim() const { return static_cast<int>(vBasis().size()); }

std::vector<Fp> DualBialgebra::multiply(const std::vector<Fp>& f, const std::vector<Fp>& g,
                                        const PrimeField& F) const {
    std::vector<Fp> out(dim, F.zero());
    for (int u = 0; u < dim; ++u) {
        if (f[u].isZero()) continue;
        for (int v = 0; v < dim; ++v) {
            if (g[v].isZero()) continue;
            for (auto& [m, c] : product[u][v]) out[m] += f[u] * g[v] * c;
        }
    }
    return out;
}

DualBialgebra buildDualBialgebra(const EnvAlgebra& env) {
    const auto& basis = env.vBasis();
    const PrimeField& F = env.field();
    DualBialgebra D;
    D.dim = static_cast<int>(basis.size());
    D.unitIndex = env.vIndex(PbwMono::one(env.lie().s()));
    D.parity.resize(D.dim);
    D.filtrationLevel.resize(D.dim);
    for (int i = 0; i < D.dim; ++i) {
        D.parity[i] = basis[i].parity();
        D.filtrationLevel[i] = basis[i].length();
    }

    // Product of functionals: transpose of the coproduct of V, with the
    // dual-pairing sign (-1)^{|u||v|} on each matched split.
    D.product.assign(D.dim, std::vector<std::vector<std::pair<int, Fp>>>(D.dim));
    for (int m = 0; m < D.dim; ++m) {
        for (auto& [pr, c] : env.coproductMono(basis[m])) {
            int u = env.vIndex(pr.first), v = env.vIndex(pr.second);
            int sign = (D.parity[u] & D.parity[v]) ? -1 : 1;
            D.product[u][v].push_back({m, c * Fp(sign)});
        }
    }

    // Coproduct of functionals: transpose of multiplication.
    D.coproduct.assign(D.dim, {});
    for (int a = 0; a < D.dim; ++a) {
        for (int b = 0; b < D.dim; ++b) {
            EnvElt prod = env.multiplyMono(basis[a], basis[b]);
            int sign = (D.parity[a] & D.parity[b]) ? -1 : 1;
            for (auto& [m, c] : prod) {
                int mi = env.vIndex(m);
                D.coproduct[mi].push_back({{a, b}, c * Fp(sign)});
            }
        }
    }
    return D;
}

}  // namespace scohom
