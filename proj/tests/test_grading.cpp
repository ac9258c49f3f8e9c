#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <tuple>

#include "scohom/grading.hpp"
#include "test_util.hpp"

using namespace scohom;
using testutil::Rng;

namespace {

CgaMono mono(int s, int t, uint32_t ext, std::vector<int> gamma = {}, std::vector<int> gp = {}) {
    CgaMono m = CgaMono::one(s, t);
    m.ext = ext;
    if (!gamma.empty()) m.gamma = gamma;
    if (!gp.empty()) m.gammaP = gp;
    return m;
}

CgaMono randomMono(Rng& rng, int s, int t, int maxExp) {
    CgaMono m = CgaMono::one(s, t);
    m.ext = static_cast<uint32_t>(rng.uniform(0, (1 << s) - 1));
    for (int j = 0; j < t; ++j) m.gamma[j] = rng.uniform(0, maxExp);
    for (int i = 0; i < s; ++i) m.gammaP[i] = rng.uniform(0, 1);
    return m;
}

}  // namespace

TEST_CASE("twist and map-tensor signs")
{
    REQUIRE(twistSign({0, 0}, {5, 1}) == 1);
    REQUIRE(twistSign({1, 1}, {1, 1}) == 1);
    REQUIRE(twistSign({1, 0}, {1, 0}) == -1);

    REQUIRE(mapTensorSign({0, 0}, {3, 1}) == 1);
    REQUIRE(mapTensorSign({1, 1}, {1, 1}) == 1);
    REQUIRE(mapTensorSign({-1, 0}, {1, 0}) == -1);

    // T o T = id with total sign +1 on random bidegrees.
    Rng rng(3);
    for (int k = 0; k < 50; ++k) {
        Bidegree a{rng.uniform(-4, 4), rng.uniform(0, 1)};
        Bidegree b{rng.uniform(-4, 4), rng.uniform(0, 1)};
        REQUIRE(twistSign(a, b) * twistSign(b, a) == 1);
    }
}

TEST_CASE("cga multiplication")
{
    PrimeField F5(5);
    Fp c;
    CgaMono out;

    SECTION("exterior square vanishes") {
        CgaMono x1 = mono(2, 1, 1u << 0);
        REQUIRE(!cgaMultiply(x1, x1, F5, c, out));
    }
    SECTION("divided powers merge with binomials") {
        CgaMono g1 = mono(1, 1, 0, {1});
        REQUIRE(cgaMultiply(g1, g1, F5, c, out));
        REQUIRE(c == F5(2));
        REQUIRE(out.gamma[0] == 2);

        CgaMono g2 = mono(1, 1, 0, {2}), g3 = mono(1, 1, 0, {3});
        REQUIRE(!cgaMultiply(g2, g3, F5, c, out));  // binom(5,2) = 10 = 0 mod 5
    }
    SECTION("exterior reordering sign") {
        CgaMono x1 = mono(2, 0, 1u << 0), x2 = mono(2, 0, 1u << 1);
        REQUIRE(cgaMultiply(x2, x1, F5, c, out));
        REQUIRE(c == F5(-1));
        REQUIRE(cgaMultiply(x1, x2, F5, c, out));
        REQUIRE(c == F5(1));
    }
}

TEST_CASE("graded commutativity of the monomial product", "[property]")
{
    PrimeField F3(3);
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        CgaMono m1 = randomMono(rng, 2, 2, 3), m2 = randomMono(rng, 2, 2, 3);
        Fp c12, c21;
        CgaMono o12, o21;
        bool ok12 = cgaMultiply(m1, m2, F3, c12, o12);
        bool ok21 = cgaMultiply(m2, m1, F3, c21, o21);
        REQUIRE(ok12 == ok21);
        if (ok12) {
            REQUIRE(o12 == o21);
            REQUIRE(c12 == F3(twistSign(m1.bidegree(), m2.bidegree())) * c21);
        }
    }
}

TEST_CASE("divided power relations up to 2p")
{
    PrimeField F3(3);
    int p = 3;
    for (int r = 0; r <= 2 * p; ++r) {
        for (int s = 0; s <= 2 * p - r; ++s) {
            CgaMono gr = mono(0, 1, 0, {r}), gs = mono(0, 1, 0, {s});
            Fp c;
            CgaMono out;
            bool ok = cgaMultiply(gr, gs, F3, c, out);
            Fp expect = binomMod(r + s, r, F3);
            if (expect.isZero()) {
                REQUIRE(!ok);
            } else {
                REQUIRE(ok);
                REQUIRE(c == expect);
                REQUIRE(out.gamma[0] == r + s);
            }
        }
    }
    // gamma_0(y) = 1
    CgaMono g0 = mono(0, 1, 0, {0});
    REQUIRE(g0.isOne());
}

TEST_CASE("degree-slice dimensions match the closed count")
{
    auto binom = [](long long n, long long k) {
        if (k == 0) return 1ll;
        if (k < 0 || k > n) return 0ll;
        long long r = 1;
        for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    for (int s = 0; s <= 3; ++s) {
        for (int t = 0; t <= 2; ++t) {
            for (int n = 0; n <= 6; ++n) {
                long long expect = 0;
                for (int a = 0; a <= n; ++a) {
                    int b = n - a;
                    expect += binom(s, a) * binom(t + b - 1, b);
                }
                auto basis = enumerateMonomials(s, t, n, false);
                REQUIRE(static_cast<long long>(basis.size()) == expect);
                for (auto& m : basis) REQUIRE(m.bidegree().deg == n);
                for (size_t i = 1; i < basis.size(); ++i) REQUIRE(basis[i - 1] < basis[i]);
            }
        }
    }
    // gamma' doubles external degrees: Gamma'_odd = 0
    auto withP = enumerateMonomials(1, 0, 2, true);
    REQUIRE(withP.size() == 1);  // gamma'_1(x); <x> has degree 1, Lambda^2 = 0
    REQUIRE(withP[0].gammaP[0] == 1);
}

TEST_CASE("coproduct on pinned cases")
{
    PrimeField F3(3);
    SECTION("primitive exterior generator") {
        auto terms = cgaCoproduct(mono(1, 0, 1u << 0), F3);
        REQUIRE(terms.size() == 2);
        for (auto& [c, a, b] : terms) {
            REQUIRE(c == F3(1));
            REQUIRE((a.isOne() || b.isOne()));
        }
    }
    SECTION("divided power") {
        auto terms = cgaCoproduct(mono(0, 1, 0, {2}), F3);
        REQUIRE(terms.size() == 3);
        for (auto& [c, a, b] : terms) {
            REQUIRE(c == F3(1));
            REQUIRE(a.gamma[0] + b.gamma[0] == 2);
        }
    }
    SECTION("unit") {
        auto terms = cgaCoproduct(CgaMono::one(1, 1), F3);
        REQUIRE(terms.size() == 1);
        REQUIRE(std::get<1>(terms[0]).isOne());
        REQUIRE(std::get<2>(terms[0]).isOne());
    }
}

namespace {

using PairElt = std::map<std::pair<CgaMono, CgaMono>, Fp>;
using TripleElt = std::map<std::tuple<CgaMono, CgaMono, CgaMono>, Fp>;

PairElt coproductOf(const CgaMono& m, const PrimeField& F) {
    PairElt out;
    for (auto& [c, a, b] : cgaCoproduct(m, F)) {
        auto key = std::make_pair(a, b);
        auto it = out.find(key);
        if (it == out.end()) out.emplace(key, c);
        else { it->second += c; if (it->second.isZero()) out.erase(it); }
    }
    return out;
}

void addTriple(TripleElt& dst, const CgaMono& a, const CgaMono& b, const CgaMono& c, const Fp& coef) {
    if (coef.isZero()) return;
    auto key = std::make_tuple(a, b, c);
    auto it = dst.find(key);
    if (it == dst.end()) dst.emplace(key, coef);
    else { it->second += coef; if (it->second.isZero()) dst.erase(it); }
}

}  // namespace

TEST_CASE("coproduct is coassociative and graded-cocommutative", "[property]")
{
    PrimeField F3(3);
    Rng rng(17);
    std::vector<CgaMono> samples;
    for (int trial = 0; trial < 30; ++trial) {
        CgaMono m = randomMono(rng, 2, 2, 2);
        if (m.bidegree().deg <= 6) samples.push_back(m);
    }
    samples.push_back(mono(2, 2, 3, {1, 2}));
    for (auto& m : samples) {
        PairElt dm = coproductOf(m, F3);

        TripleElt left, right;
        for (auto& [pr, c] : dm) {
            for (auto& [c2, u, v] : cgaCoproduct(pr.first, F3))
                addTriple(left, u, v, pr.second, c * c2);
            for (auto& [c2, u, v] : cgaCoproduct(pr.second, F3))
                addTriple(right, pr.first, u, v, c * c2);
        }
        REQUIRE(left == right);

        PairElt twisted;
        for (auto& [pr, c] : dm) {
            Fp cc = c * F3(twistSign(pr.first.bidegree(), pr.second.bidegree()));
            auto key = std::make_pair(pr.second, pr.first);
            auto it = twisted.find(key);
            if (it == twisted.end()) twisted.emplace(key, cc);
            else { it->second += cc; if (it->second.isZero()) twisted.erase(it); }
        }
        REQUIRE(twisted == dm);
    }
}

TEST_CASE("coproduct is an algebra map on products", "[property]")
{
    // Delta(m1 m2) = Delta(m1) Delta(m2) with the super tensor product.
    PrimeField F5(5);
    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        CgaMono m1 = randomMono(rng, 2, 1, 2), m2 = randomMono(rng, 2, 1, 2);
        Fp c;
        CgaMono m;
        if (!cgaMultiply(m1, m2, F5, c, m)) continue;
        PairElt lhs;
        for (auto& [cc, a, b] : cgaCoproduct(m, F5)) {
            auto key = std::make_pair(a, b);
            auto it = lhs.find(key);
            Fp v = cc * c;
            if (it == lhs.end()) lhs.emplace(key, v);
            else { it->second += v; if (it->second.isZero()) lhs.erase(it); }
        }
        PairElt rhs;
        for (auto& [c1, a1, b1] : cgaCoproduct(m1, F5)) {
            for (auto& [c2, a2, b2] : cgaCoproduct(m2, F5)) {
                Fp cc = c1 * c2 * F5(twistSign(b1.bidegree(), a2.bidegree()));
                Fp ca, cb;
                CgaMono a, b;
                if (!cgaMultiply(a1, a2, F5, ca, a)) continue;
                if (!cgaMultiply(b1, b2, F5, cb, b)) continue;
                cc *= ca * cb;
                auto key = std::make_pair(a, b);
                auto it = rhs.find(key);
                if (it == rhs.end()) rhs.emplace(key, cc);
                else { it->second += cc; if (it->second.isZero()) rhs.erase(it); }
            }
        }
        REQUIRE(lhs == rhs);
    }
}
