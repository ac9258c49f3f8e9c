#include "scohom/examples.hpp"

#include <stdexcept>

namespace scohom {

namespace {

LieSuperAlgebraSpec make(PrimeField F, std::vector<std::string> even,
                         std::vector<std::string> odd, const std::string& name) {
    SuperBasis b;
    b.even = std::move(even);
    b.odd = std::move(odd);
    auto spec = LieSuperAlgebraSpec::zeroed(F, b);
    spec.name = name;
    return spec;
}

void setBracket(LieSuperAlgebraSpec& L, int i, int j, int k, long long c) {
    L.bracket[i][j][k] = L.field(c);
    // super skew-symmetry fills the mirror entry
    int sign = (L.basis.parityOf(i) & L.basis.parityOf(j)) ? 1 : -1;
    L.bracket[j][i][k] = L.field(sign * c);
}

// Distinct power-of-1024 weights give abelian examples a faithful
// multigrading through a single integer; exponent sums stay far below 1024.
std::vector<long long> digitWeights(int n) {
    std::vector<long long> w(n);
    long long v = 1;
    for (int i = 0; i < n; ++i, v *= 1024) w[i] = v;
    return w;
}

}  // namespace

std::vector<std::string> builtinExampleNames() {
    return {"k0bar",       "k0bar-toral", "k1bar",         "abelian11",
            "abelian21",   "abelian12",   "heisenberg-odd", "borel",
            "borel-odd",   "borel-odd-null"};
}

LieSuperAlgebraSpec builtinExample(const std::string& name, uint32_t p) {
    PrimeField F(p);
    if (name == "k0bar") {
        auto L = make(F, {"x"}, {}, name);
        L.weights = {1};
        return L;
    }
    if (name == "k0bar-toral") {
        auto L = make(F, {"x"}, {}, name);
        L.restriction[0][0] = F.one();
        L.weights = {0};
        return L;
    }
    if (name == "k1bar") {
        auto L = make(F, {}, {"y"}, name);
        L.weights = {1};
        return L;
    }
    if (name == "abelian11") {
        auto L = make(F, {"x"}, {"y"}, name);
        L.weights = digitWeights(2);
        return L;
    }
    if (name == "abelian21") {
        auto L = make(F, {"x1", "x2"}, {"y"}, name);
        L.weights = digitWeights(3);
        return L;
    }
    if (name == "abelian12") {
        auto L = make(F, {"x"}, {"y1", "y2"}, name);
        L.weights = digitWeights(3);
        return L;
    }
    if (name == "heisenberg-odd") {
        // x central even, [y,y] = x, x^[p] = 0
        auto L = make(F, {"x"}, {"y"}, name);
        setBracket(L, 1, 1, 0, 1);
        L.weights = {2, 1};
        return L;
    }
    if (name == "borel") {
        auto L = make(F, {"h", "e"}, {}, name);
        setBracket(L, 0, 1, 1, 1);      // [h, e] = e
        L.restriction[0][0] = F.one();  // h^[p] = h
        L.weights = {0, 1};
        return L;
    }
    if (name == "borel-odd") {
        // [h,e] = 2e, [h,y] = y, [y,y] = e; the 2 is forced by super-Jacobi.
        auto L = make(F, {"h", "e"}, {"y"}, name);
        setBracket(L, 0, 1, 1, 2);
        setBracket(L, 0, 2, 2, 1);
        setBracket(L, 2, 2, 1, 1);
        L.restriction[0][0] = F.one();
        L.weights = {0, 2, 1};
        return L;
    }
    if (name == "borel-odd-null") {
        auto L = make(F, {"h", "e"}, {"y"}, name);
        setBracket(L, 0, 1, 1, 1);  // [h, e] = e
        setBracket(L, 0, 2, 2, 1);  // [h, y] = y
        L.restriction[0][0] = F.one();
        L.weights = {0, 1, 1};
        return L;
    }
    throw std::invalid_argument("unknown example: " + name);
}

std::vector<LieSuperAlgebraSpec> allBuiltinExamples() {
    std::vector<LieSuperAlgebraSpec> out;
    for (uint32_t p : {3u, 5u})
        for (const auto& name : builtinExampleNames()) {
            auto L = builtinExample(name, p);
            L.name = name + "-p" + std::to_string(p);
            out.push_back(std::move(L));
        }
    return out;
}

}  // namespace scohom
