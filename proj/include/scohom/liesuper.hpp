#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scohom/fp.hpp"
#include "scohom/grading.hpp"

namespace scohom {

/**
 * A finite-dimensional restricted Lie superalgebra given by structure
 * constants over F_p: bracket table [e_i, e_j] = sum_k c_{ij}^k e_k and a
 * p-restriction table on the even basis. This is the single source of truth
 * for L; everything downstream is built from it and from the fixed basis
 * order.
 */
struct LieSuperAlgebraSpec {
    PrimeField field;
    SuperBasis basis;
    std::string name;
    // bracket[i][j] is the coefficient vector of [e_i, e_j], length dim.
    std::vector<std::vector<std::vector<Fp>>> bracket;
    // restriction[i] is the coefficient vector of x_i^{[p]}, length dim.
    std::vector<std::vector<Fp>> restriction;
    // Optional integer weights per basis element. When they make the bracket,
    // restriction, and module actions homogeneous, complexes split into
    // weight blocks; validity is machine-checked before use.
    std::vector<long long> weights;

    int dim() const { return basis.dim(); }
    int s() const { return basis.s(); }
    int t() const { return basis.t(); }
    uint32_t p() const { return field.p(); }

    const std::vector<Fp>& bracketOf(int i, int j) const { return bracket[i][j]; }

    static LieSuperAlgebraSpec zeroed(PrimeField F, SuperBasis b);

    /// Same superspace, zero bracket, trivial restriction (L_ab of the paper).
    LieSuperAlgebraSpec abelianized() const;

    /// The even subalgebra on x_1..x_s with the inherited structure.
    LieSuperAlgebraSpec evenSubalgebra() const;

    bool weightsValid() const;
};

struct ValidationIssue {
    std::string rule;
    std::string witness;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string str() const;
};

/**
 * Check the structure-constant identities (parity additivity, super
 * skew-symmetry, super Jacobi, restriction landing in the even part) and,
 * via U(L), that x_i^p - x_i^{[p]} supercommutes with every basis element.
 */
ValidationReport validateAlgebra(const LieSuperAlgebraSpec& spec);

/// Bilinear extension of the bracket table to coordinate vectors.
std::vector<Fp> extendBracket(const LieSuperAlgebraSpec& spec,
                              const std::vector<Fp>& a, const std::vector<Fp>& b);

/**
 * A finite-dimensional supermodule: parity vector and one action matrix per
 * basis element of L (columns = source coordinates).
 */
struct SupermoduleSpec {
    std::string name;
    std::vector<int> parity;       // per module basis vector
    std::vector<MatFp> action;     // dim(L) matrices, each dim(M) x dim(M)
    std::vector<long long> weights;  // optional, same contract as on L

    int dim() const { return static_cast<int>(parity.size()); }

    static SupermoduleSpec trivial(const LieSuperAlgebraSpec& L);
    static SupermoduleSpec adjoint(const LieSuperAlgebraSpec& L);
};

ValidationReport validateSupermodule(const SupermoduleSpec& M, const LieSuperAlgebraSpec& L,
                                     bool restricted);

bool moduleWeightsValid(const SupermoduleSpec& M, const LieSuperAlgebraSpec& L);

}  // namespace scohom
