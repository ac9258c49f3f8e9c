#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "scohom/fp.hpp"
#include "scohom/linalg.hpp"

namespace scohom {

/// Triplet entry used to assemble matrices before the storage choice is made.
struct Triplet {
    int row;
    int col;
    Fp value;
};

/**
 * Matrix over F_p whose storage (dense Eigen matrix vs. CSC-style sparse
 * columns) is chosen at construction by fill ratio. Immutable afterwards;
 * safe to share across threads.
 *
 * Dense operations delegate to the scalar-templated free functions; the
 * sparse path implements exact rank by deterministic column reduction with
 * a pivot-row map (first nonzero in column order), matching the dense
 * pivoting rule.
 */
class MatrixFp {
public:
    MatrixFp(int rows, int cols, const PrimeField& F, std::vector<Triplet> entries,
             double sparseThreshold = kDefaultSparseThreshold)
        : rows_(rows), cols_(cols), field_(F)
    {
        long long nnz = 0;
        std::vector<std::vector<std::pair<int, uint32_t>>> colData(cols);
        for (auto& t : entries) {
            Fp v = F(t.value.value());
            if (v.isZero()) continue;
            colData[t.col].push_back({t.row, static_cast<uint32_t>(v.value())});
        }
        for (auto& col : colData) {
            std::sort(col.begin(), col.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            // merge duplicate coordinates
            std::vector<std::pair<int, uint32_t>> merged;
            for (auto& e : col) {
                if (!merged.empty() && merged.back().first == e.first) {
                    uint64_t sum = (merged.back().second + static_cast<uint64_t>(e.second)) % F.p();
                    merged.back().second = static_cast<uint32_t>(sum);
                } else {
                    merged.push_back(e);
                }
            }
            std::erase_if(merged, [](const auto& e) { return e.second == 0; });
            nnz += static_cast<long long>(merged.size());
            col = std::move(merged);
        }
        double fill = (rows_ == 0 || cols_ == 0)
                          ? 0.0
                          : static_cast<double>(nnz) / (static_cast<double>(rows_) * cols_);
        dense_ = fill > sparseThreshold || static_cast<long long>(rows_) * cols_ <= 4096;
        if (dense_) {
            denseData_.resize(rows_, cols_);
            denseData_.setConstant(F.zero());
            for (int c = 0; c < cols_; ++c)
                for (auto& e : colData[c]) denseData_(e.first, c) = F(e.second);
        } else {
            sparseCols_ = std::move(colData);
        }
    }

    static constexpr double kDefaultSparseThreshold = 0.25;

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const PrimeField& field() const { return field_; }
    bool isDense() const { return dense_; }

    const MatFp& dense() const {
        if (!dense_) throw std::logic_error("MatrixFp: sparse storage; use toDense()");
        return denseData_;
    }

    MatFp toDense() const {
        if (dense_) return denseData_;
        MatFp M(rows_, cols_);
        M.setConstant(field_.zero());
        for (int c = 0; c < cols_; ++c)
            for (auto& e : sparseCols_[c]) M(e.first, c) = field_(e.second);
        return M;
    }

    int rank() const {
        if (dense_) return scohom::rank<Fp>(denseData_);
        return sparseRank();
    }

    MatFp kernelBasis() const { return kernel<Fp>(toDense()); }
    MatFp imageBasis() const { return image<Fp>(toDense()); }
    std::optional<VecFp> solveFor(const VecFp& b) const { return solve<Fp>(toDense(), b); }

private:
    using SparseCol = std::vector<std::pair<int, uint32_t>>;

    int sparseRank() const {
        const uint64_t p = field_.p();
        std::vector<SparseCol> pivotCols;  // normalized: leading coefficient 1
        std::vector<int> pivotOfRow(rows_, -1);
        int rk = 0;
        for (int c = 0; c < cols_; ++c) {
            SparseCol cur = sparseCols_[c];
            while (!cur.empty()) {
                int top = cur.front().first;
                int pc = pivotOfRow[top];
                if (pc < 0) {
                    uint64_t inv = static_cast<uint64_t>(
                        Fp(static_cast<long long>(cur.front().second), field_.p()).inverse().value());
                    for (auto& e : cur) e.second = static_cast<uint32_t>(e.second * inv % p);
                    pivotOfRow[top] = static_cast<int>(pivotCols.size());
                    pivotCols.push_back(std::move(cur));
                    ++rk;
                    break;
                }
                cur = axpy(cur, pivotCols[pc], p - cur.front().second % p, p);
            }
        }
        return rk;
    }

    // cur + coef * other over F_p, both sorted by row.
    static SparseCol axpy(const SparseCol& cur, const SparseCol& other, uint64_t coef, uint64_t p) {
        SparseCol out;
        out.reserve(cur.size() + other.size());
        size_t i = 0, j = 0;
        while (i < cur.size() || j < other.size()) {
            if (j == other.size() || (i < cur.size() && cur[i].first < other[j].first)) {
                out.push_back(cur[i++]);
            } else if (i == cur.size() || other[j].first < cur[i].first) {
                uint32_t v = static_cast<uint32_t>(other[j].second * coef % p);
                if (v) out.push_back({other[j].first, v});
                ++j;
            } else {
                uint32_t v = static_cast<uint32_t>((cur[i].second + other[j].second * coef) % p);
                if (v) out.push_back({cur[i].first, v});
                ++i; ++j;
            }
        }
        return out;
    }

    int rows_, cols_;
    PrimeField field_;
    bool dense_ = true;
    MatFp denseData_;
    std::vector<SparseCol> sparseCols_;
};

}  // namespace scohom
