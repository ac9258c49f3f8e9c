#pragma once

#include <optional>
#include <stdexcept>
#include <vector>
#include <Eigen/Core>

#include "scohom/fp.hpp"

namespace scohom {

struct NotContainedError : std::invalid_argument {
    NotContainedError() : std::invalid_argument("subspace B is not contained in span(Z)") {}
};

/**
 * Reduce the given matrix to (reduced) row echelon form over an exact field.
 *
 * Pivoting is deterministic: within each column, the first row (in the
 * current order) with a nonzero entry is chosen. This makes every basis
 * produced downstream reproducible.
 *
 * @param A Input matrix.
 * @param pivots If non-null, receives the pivot column indices in order.
 * @returns The reduced row echelon form of A.
 */
template <typename T>
Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> rowEchelonForm(
    const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& A,
    std::vector<int>* pivots = nullptr)
{
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> R = A;
    const Eigen::Index nrows = R.rows(), ncols = R.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < ncols && r < nrows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = r; i < nrows; ++i) {
            if (!(R(i, c) == T(0))) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        if (pivot != r) R.row(pivot).swap(R.row(r));
        T inv = T(1) / R(r, c);
        for (Eigen::Index j = c; j < ncols; ++j) R(r, j) *= inv;
        for (Eigen::Index i = 0; i < nrows; ++i) {
            if (i == r) continue;
            T f = R(i, c);
            if (f == T(0)) continue;
            for (Eigen::Index j = c; j < ncols; ++j) R(i, j) -= f * R(r, j);
        }
        if (pivots) pivots->push_back(static_cast<int>(c));
        ++r;
    }
    return R;
}

/**
 * Rank of a matrix over an exact field.
 */
template <typename T>
int rank(const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& A)
{
    std::vector<int> pivots;
    rowEchelonForm<T>(A, &pivots);
    return static_cast<int>(pivots.size());
}

/**
 * Basis of the null space of A, returned as the columns of the result.
 *
 * Free variables are enumerated in column order; each basis vector has a 1
 * in its free coordinate. Exact: A * kernel(A) == 0.
 */
template <typename T>
Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> kernel(
    const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& A)
{
    std::vector<int> pivots;
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> R = rowEchelonForm<T>(A, &pivots);
    const Eigen::Index ncols = A.cols();
    std::vector<bool> isPivot(ncols, false);
    for (int c : pivots) isPivot[c] = true;
    std::vector<int> freeCols;
    for (Eigen::Index c = 0; c < ncols; ++c)
        if (!isPivot[c]) freeCols.push_back(static_cast<int>(c));

    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> K(ncols, freeCols.size());
    K.setConstant(T(0));
    for (size_t k = 0; k < freeCols.size(); ++k) {
        int fc = freeCols[k];
        K(fc, k) = T(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            K(pivots[r], k) = -R(static_cast<Eigen::Index>(r), fc);
    }
    return K;
}

/**
 * Columns of A spanning its column space: the pivot columns, in order.
 */
template <typename T>
Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> image(
    const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& A)
{
    std::vector<int> pivots;
    rowEchelonForm<T>(A, &pivots);
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> I(A.rows(), pivots.size());
    for (size_t k = 0; k < pivots.size(); ++k) I.col(k) = A.col(pivots[k]);
    return I;
}

/**
 * Solve A x = b exactly. Returns the canonical solution with all free
 * variables set to zero, or an empty optional when b is not in the column
 * space of A.
 */
template <typename T>
std::optional<Eigen::Matrix<T, Eigen::Dynamic, 1>> solve(
    const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& A,
    const Eigen::Matrix<T, Eigen::Dynamic, 1>& b)
{
    if (b.rows() != A.rows()) throw std::invalid_argument("solve: size mismatch");
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> aug(A.rows(), A.cols() + 1);
    aug.leftCols(A.cols()) = A;
    aug.col(A.cols()) = b;
    std::vector<int> pivots;
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> R = rowEchelonForm<T>(aug, &pivots);
    if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
    Eigen::Matrix<T, Eigen::Dynamic, 1> x(A.cols());
    x.setConstant(T(0));
    for (size_t r = 0; r < pivots.size(); ++r)
        x(pivots[r]) = R(static_cast<Eigen::Index>(r), A.cols());
    return x;
}

/**
 * Solve A X = B column by column; empty optional if any column fails.
 */
template <typename T>
std::optional<Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>> solveMany(
    const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& A,
    const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& B)
{
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> X(A.cols(), B.cols());
    for (Eigen::Index j = 0; j < B.cols(); ++j) {
        auto x = solve<T>(A, B.col(j));
        if (!x) return std::nullopt;
        X.col(j) = *x;
    }
    return X;
}

/**
 * Bases of a subquotient Z/B of an ambient coordinate space.
 *
 * `reps` holds coset representatives: columns of Z extending a basis of B to
 * a basis of span(Z), chosen deterministically in input column order.
 */
template <typename T>
struct SubquotientBasis {
    Eigen::Index ambientDim = 0;
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> Z;     // cycle-space basis (columns)
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> B;     // boundary-space basis (columns)
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> reps;  // coset representatives (columns)

    Eigen::Index dim() const { return reps.cols(); }

    /// Coordinates of v in the representative basis, modulo span(B).
    /// Empty optional when v is not in span(Z).
    std::optional<Eigen::Matrix<T, Eigen::Dynamic, 1>> quotientCoords(
        const Eigen::Matrix<T, Eigen::Dynamic, 1>& v) const
    {
        Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> full(ambientDim, B.cols() + reps.cols());
        full.leftCols(B.cols()) = B;
        full.rightCols(reps.cols()) = reps;
        auto c = solve<T>(full, v);
        if (!c) return std::nullopt;
        return Eigen::Matrix<T, Eigen::Dynamic, 1>(c->tail(reps.cols()));
    }
};

/**
 * Compute the subquotient span(Z)/span(B). Throws NotContainedError when
 * span(B) is not contained in span(Z).
 */
template <typename T>
SubquotientBasis<T> subquotient(
    const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& Z,
    const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& B)
{
    SubquotientBasis<T> out;
    out.ambientDim = Z.rows();
    out.Z = Z;
    out.B = B;
    if (B.cols() > 0) {
        if (B.rows() != Z.rows()) throw std::invalid_argument("subquotient: ambient dims differ");
        if (!solveMany<T>(Z, B)) throw NotContainedError();
    }
    // Pivot columns of [B | Z] lying in the Z part extend B to a basis of span(Z).
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> combined(Z.rows(), B.cols() + Z.cols());
    if (B.cols() > 0) combined.leftCols(B.cols()) = B;
    combined.rightCols(Z.cols()) = Z;
    std::vector<int> pivots;
    rowEchelonForm<T>(combined, &pivots);
    std::vector<int> repCols;
    for (int c : pivots)
        if (c >= B.cols()) repCols.push_back(c - static_cast<int>(B.cols()));
    out.reps.resize(Z.rows(), repCols.size());
    for (size_t k = 0; k < repCols.size(); ++k) out.reps.col(k) = Z.col(repCols[k]);
    return out;
}

/// True when v lies in the column span of A.
template <typename T>
bool inSpan(const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& A,
            const Eigen::Matrix<T, Eigen::Dynamic, 1>& v)
{
    return solve<T>(A, v).has_value();
}

}  // namespace scohom
