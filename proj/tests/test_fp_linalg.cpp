#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "scohom/fp.hpp"
#include "scohom/linalg.hpp"
#include "scohom/matrixfp.hpp"
#include "test_util.hpp"

using namespace scohom;
using testutil::Rng;

TEST_CASE("prime field construction and inverses")
{
    REQUIRE_THROWS(PrimeField(2));
    REQUIRE_THROWS(PrimeField(9));
    REQUIRE_THROWS(PrimeField(1));

    PrimeField F5(5);
    REQUIRE(F5.inverse(F5(1)) == F5(1));
    REQUIRE(F5.inverse(F5(2)) == F5(3));
    PrimeField F3(3);
    REQUIRE(F3.inverse(F3(2)) == F3(2));  // the residue used for 1/2
    REQUIRE_THROWS_AS(F3.inverse(F3(0)), ZeroInverseError);

    for (uint32_t p : {3u, 5u, 7u, 11u}) {
        PrimeField F(p);
        for (uint32_t a = 1; a < p; ++a) REQUIRE(F(a) * F.inverse(F(a)) == F(1));
    }
}

TEST_CASE("unbound constants interoperate with bound residues")
{
    PrimeField F5(5);
    Fp x = F5(3);
    REQUIRE(x + Fp(4) == F5(2));
    REQUIRE(x * Fp(-1) == F5(2));
    REQUIRE(Fp(0) == F5.zero());
    REQUIRE_THROWS_AS(F5(1) + PrimeField(3)(1), ModulusMismatchError);
}

TEST_CASE("binomial coefficients mod p")
{
    PrimeField F5(5);
    REQUIRE(binomMod(2, 1, F5) == F5(2));
    REQUIRE(binomMod(5, 2, F5) == F5(0));
    REQUIRE(binomMod(7, 3, F5) == F5(35 % 5));
    PrimeField F3(3);
    REQUIRE(carryCoefficient(1, F3) == F3(1));
    REQUIRE(carryCoefficient(2, F3) == F3(1));
    REQUIRE(carryCoefficient(2, PrimeField(5)) == PrimeField(5)(2));  // binom(5,2)/5 = 2
}

TEST_CASE("rank, kernel, image on pinned examples")
{
    PrimeField F5(5), F3(3);

    MatFp zero(3, 3);
    zero.setConstant(F5.zero());
    REQUIRE(rank<Fp>(zero) == 0);
    REQUIRE(kernel<Fp>(zero).cols() == 3);

    MatFp id(4, 4);
    id.setConstant(F3.zero());
    for (int i = 0; i < 4; ++i) id(i, i) = F3(1);
    REQUIRE(rank<Fp>(id) == 4);
    REQUIRE(kernel<Fp>(id).cols() == 0);

    MatFp A(2, 3);
    A << F5(1), F5(2), F5(0),
         F5(2), F5(4), F5(0);
    // Independent oracle: enumerate all 25 row combinations and count the
    // span of the row space directly.
    std::set<std::vector<long long>> rowSpan;
    for (int a = 0; a < 5; ++a) {
        for (int b = 0; b < 5; ++b) {
            std::vector<long long> v(3);
            for (int j = 0; j < 3; ++j)
                v[j] = (F5(a) * A(0, j) + F5(b) * A(1, j)).value();
            rowSpan.insert(v);
        }
    }
    int oracleDim = 0;
    for (size_t n = rowSpan.size(); n > 1; n /= 5) ++oracleDim;
    REQUIRE(oracleDim == 1);
    REQUIRE(rank<Fp>(A) == oracleDim);
}

TEST_CASE("solve returns the canonical free-variable-zero solution")
{
    PrimeField F3(3);
    MatFp id(3, 3);
    id.setConstant(F3.zero());
    for (int i = 0; i < 3; ++i) id(i, i) = F3(1);
    VecFp b(3);
    b << F3(1), F3(2), F3(0);
    auto x = solve<Fp>(id, b);
    REQUIRE(x);
    REQUIRE(*x == b);

    MatFp zero(2, 2);
    zero.setConstant(F3.zero());
    VecFp nz(2);
    nz << F3(1), F3(0);
    REQUIRE(!solve<Fp>(zero, nz));

    MatFp M(2, 2);
    M << F3(1), F3(1),
         F3(0), F3(0);
    VecFp rhs(2);
    rhs << F3(2), F3(0);
    auto y = solve<Fp>(M, rhs);
    REQUIRE(y);
    REQUIRE((*y)(0) == F3(2));
    REQUIRE((*y)(1) == F3(0));
}

TEST_CASE("subquotient bases")
{
    PrimeField F3(3);
    MatFp Z(2, 2), empty(2, 0);
    Z << F3(1), F3(0),
         F3(0), F3(1);
    auto full = subquotient<Fp>(Z, empty);
    REQUIRE(full.dim() == 2);

    auto nothing = subquotient<Fp>(Z, Z);
    REQUIRE(nothing.dim() == 0);

    MatFp Z2(2, 2), B2(2, 1);
    Z2 << F3(1), F3(1),
          F3(0), F3(1);
    B2 << F3(1), F3(0);
    auto sq = subquotient<Fp>(Z2, B2);
    REQUIRE(sq.dim() == 1);
    // e2 = (e1+e2) - e1 reduces to the single representative mod B
    VecFp e2(2);
    e2 << F3(0), F3(1);
    auto coords = sq.quotientCoords(e2);
    REQUIRE(coords);
    REQUIRE((*coords)(0) != F3(0));

    // B not inside span(Z) must be rejected
    MatFp Zline(2, 1), Bout(2, 1);
    Zline << F3(1), F3(0);
    Bout << F3(0), F3(1);
    REQUIRE_THROWS_AS(subquotient<Fp>(Zline, Bout), NotContainedError);
}

TEST_CASE("rank is row-order invariant and rank-nullity holds", "[property]")
{
    Rng rng(20250809);
    for (uint32_t p : {3u, 5u}) {
        PrimeField F(p);
        for (int trial = 0; trial < 40; ++trial) {
            int rows = rng.uniform(1, 8), cols = rng.uniform(1, 8);
            MatFp M = testutil::randomMatrix(rng, rows, cols, F);
            int rk = rank<Fp>(M);

            MatFp P = M;
            for (int i = 0; i < rows; ++i) P.row(i) = M.row(rows - 1 - i);
            REQUIRE(rank<Fp>(P) == rk);

            MatFp K = kernel<Fp>(M);
            REQUIRE(rk + K.cols() == cols);
            for (Eigen::Index j = 0; j < K.cols(); ++j) {
                VecFp img = M * VecFp(K.col(j));
                for (Eigen::Index i = 0; i < img.rows(); ++i) REQUIRE(img(i) == F.zero());
            }

            REQUIRE(image<Fp>(M).cols() == rk);
        }
    }
}

TEST_CASE("subquotient representatives are independent from B inside span(Z)", "[property]")
{
    Rng rng(7);
    PrimeField F(5);
    for (int trial = 0; trial < 30; ++trial) {
        int ambient = rng.uniform(2, 7);
        int zc = rng.uniform(1, ambient);
        MatFp Z = testutil::randomMatrix(rng, ambient, zc, F);
        // Take B as random combinations of Z's columns so containment holds.
        int bc = rng.uniform(0, zc);
        MatFp C = testutil::randomMatrix(rng, zc, bc, F);
        MatFp B = Z * C;
        auto sq = subquotient<Fp>(Z, B);
        REQUIRE(sq.dim() == rank<Fp>(Z) - rank<Fp>(B));
        MatFp joint(ambient, B.cols() + sq.reps.cols());
        joint.leftCols(B.cols()) = B;
        joint.rightCols(sq.reps.cols()) = sq.reps;
        REQUIRE(rank<Fp>(joint) == rank<Fp>(B) + static_cast<int>(sq.dim()));
    }
}

TEST_CASE("MatrixFp picks storage by fill ratio and ranks agree", "[property]")
{
    Rng rng(99);
    PrimeField F(5);
    for (int trial = 0; trial < 20; ++trial) {
        int rows = rng.uniform(70, 90), cols = rng.uniform(70, 90);
        std::vector<Triplet> entries;
        int nnz = rng.uniform(30, 120);
        for (int k = 0; k < nnz; ++k)
            entries.push_back({rng.uniform(0, rows - 1), rng.uniform(0, cols - 1), rng.residue(F)});
        MatrixFp sparse(rows, cols, F, entries, 0.25);
        REQUIRE(!sparse.isDense());
        REQUIRE(sparse.rank() == rank<Fp>(sparse.toDense()));

        // Force-dense copy of the same data agrees as well.
        MatrixFp dense(rows, cols, F, entries, 0.0);
        REQUIRE(dense.isDense());
        REQUIRE(dense.rank() == sparse.rank());
    }
}
