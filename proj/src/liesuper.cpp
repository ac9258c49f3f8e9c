#include "scohom/liesuper.hpp"

#include <sstream>

#include "scohom/env.hpp"

namespace scohom {

LieSuperAlgebraSpec LieSuperAlgebraSpec::zeroed(PrimeField F, SuperBasis b) {
    LieSuperAlgebraSpec spec{F, std::move(b), "", {}, {}, {}};
    int d = spec.dim();
    spec.bracket.assign(d, std::vector<std::vector<Fp>>(d, std::vector<Fp>(d, F.zero())));
    spec.restriction.assign(spec.s(), std::vector<Fp>(d, F.zero()));
    return spec;
}

LieSuperAlgebraSpec LieSuperAlgebraSpec::abelianized() const {
    LieSuperAlgebraSpec ab = zeroed(field, basis);
    ab.name = name.empty() ? "abelianized" : name + "-ab";
    ab.weights = weights;
    return ab;
}

LieSuperAlgebraSpec LieSuperAlgebraSpec::evenSubalgebra() const {
    SuperBasis b;
    b.even = basis.even;
    LieSuperAlgebraSpec sub = zeroed(field, b);
    sub.name = name + "-even";
    for (int i = 0; i < s(); ++i) {
        for (int j = 0; j < s(); ++j)
            for (int k = 0; k < s(); ++k) sub.bracket[i][j][k] = bracket[i][j][k];
        for (int k = 0; k < s(); ++k) sub.restriction[i][k] = restriction[i][k];
    }
    if (!weights.empty())
        sub.weights = std::vector<long long>(weights.begin(), weights.begin() + s());
    return sub;
}

bool LieSuperAlgebraSpec::weightsValid() const {
    if (weights.empty()) return false;
    if (static_cast<int>(weights.size()) != dim()) return false;
    for (int i = 0; i < dim(); ++i) {
        for (int j = 0; j < dim(); ++j)
            for (int k = 0; k < dim(); ++k)
                if (!bracket[i][j][k].isZero() && weights[k] != weights[i] + weights[j]) return false;
    }
    for (int i = 0; i < s(); ++i)
        for (int k = 0; k < dim(); ++k)
            if (!restriction[i][k].isZero() &&
                weights[k] != static_cast<long long>(p()) * weights[i]) return false;
    return true;
}

std::string ValidationReport::str() const {
    std::ostringstream os;
    if (ok()) {
        os << "valid";
    } else {
        for (auto& issue : issues) os << issue.rule << ": " << issue.witness << "\n";
    }
    return os.str();
}

std::vector<Fp> extendBracket(const LieSuperAlgebraSpec& spec,
                              const std::vector<Fp>& a, const std::vector<Fp>& b) {
    std::vector<Fp> out(spec.dim(), spec.field.zero());
    for (int i = 0; i < spec.dim(); ++i) {
        if (a[i].isZero()) continue;
        for (int j = 0; j < spec.dim(); ++j) {
            if (b[j].isZero()) continue;
            const auto& br = spec.bracketOf(i, j);
            for (int k = 0; k < spec.dim(); ++k) out[k] += a[i] * b[j] * br[k];
        }
    }
    return out;
}

ValidationReport validateAlgebra(const LieSuperAlgebraSpec& spec) {
    ValidationReport report;
    const int d = spec.dim();
    const PrimeField& F = spec.field;
    auto names = [&](std::initializer_list<int> ids) {
        std::ostringstream os;
        bool first = true;
        for (int i : ids) {
            if (!first) os << ", ";
            os << spec.basis.nameOf(i);
            first = false;
        }
        return os.str();
    };

    if (static_cast<int>(spec.bracket.size()) != d ||
        static_cast<int>(spec.restriction.size()) != spec.s()) {
        report.issues.push_back({"shape", "bracket/restriction tables have wrong dimensions"});
        return report;
    }

    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            int pij = (spec.basis.parityOf(i) + spec.basis.parityOf(j)) & 1;
            for (int k = 0; k < d; ++k) {
                if (!spec.bracket[i][j][k].isZero() && spec.basis.parityOf(k) != pij)
                    report.issues.push_back({"parity", "[" + names({i, j}) + "] hits " +
                                                           spec.basis.nameOf(k)});
                int skewSign = (spec.basis.parityOf(i) & spec.basis.parityOf(j)) ? 1 : -1;
                if (spec.bracket[i][j][k] != F(skewSign) * spec.bracket[j][i][k]) {
                    report.issues.push_back({"super-skew-symmetry", "[" + names({i, j}) + "]"});
                    break;
                }
            }
        }
    }

    for (int i = 0; i < d && report.ok(); ++i) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                std::vector<Fp> ei(d, F.zero()), ej(d, F.zero()), ek(d, F.zero());
                ei[i] = F.one(); ej[j] = F.one(); ek[k] = F.one();
                auto term = [&](const std::vector<Fp>& a, const std::vector<Fp>& b,
                                const std::vector<Fp>& c, int pa, int pc) {
                    std::vector<Fp> inner = extendBracket(spec, b, c);
                    std::vector<Fp> outer = extendBracket(spec, a, inner);
                    Fp sign = F((pa & pc) ? -1 : 1);
                    for (auto& x : outer) x *= sign;
                    return outer;
                };
                int pi = spec.basis.parityOf(i), pj = spec.basis.parityOf(j),
                    pk = spec.basis.parityOf(k);
                auto t1 = term(ei, ej, ek, pi, pk);
                auto t2 = term(ej, ek, ei, pj, pi);
                auto t3 = term(ek, ei, ej, pk, pj);
                for (int m = 0; m < d; ++m) {
                    if (t1[m] + t2[m] + t3[m] != F.zero()) {
                        report.issues.push_back({"super-jacobi", "(" + names({i, j, k}) + ")"});
                        break;
                    }
                }
            }
        }
    }

    for (int i = 0; i < spec.s(); ++i) {
        for (int k = spec.s(); k < d; ++k) {
            if (!spec.restriction[i][k].isZero())
                report.issues.push_back({"restriction-parity",
                                         spec.basis.nameOf(i) + "^[p] has an odd component"});
        }
    }

    if (!report.ok()) return report;

    // x_i^p - x_i^{[p]} must supercommute with every basis element in U(L).
    EnvAlgebra U(spec, EnvAlgebra::Ambient::Universal);
    for (int i = 0; i < spec.s(); ++i) {
        std::vector<int> pw(spec.p(), i);
        EnvElt central = U.normalizeWord(pw, F.one());
        for (int k = 0; k < d; ++k) envAdd(central, U.gen(k), -spec.restriction[i][k]);
        for (int g = 0; g < d; ++g) {
            EnvElt lhs = U.multiply(central, U.gen(g));
            envAdd(lhs, U.multiply(U.gen(g), central), F(-1));  // central element is even
            if (!lhs.empty()) {
                report.issues.push_back(
                    {"restrictedness",
                     spec.basis.nameOf(i) + "^p - " + spec.basis.nameOf(i) +
                         "^[p] fails to commute with " + spec.basis.nameOf(g)});
            }
        }
    }
    return report;
}

SupermoduleSpec SupermoduleSpec::trivial(const LieSuperAlgebraSpec& L) {
    SupermoduleSpec M;
    M.name = "k";
    M.parity = {0};
    MatFp zero(1, 1);
    zero(0, 0) = L.field.zero();
    M.action.assign(L.dim(), zero);
    M.weights = {0};
    return M;
}

SupermoduleSpec SupermoduleSpec::adjoint(const LieSuperAlgebraSpec& L) {
    SupermoduleSpec M;
    M.name = "adjoint";
    int d = L.dim();
    M.parity.resize(d);
    for (int i = 0; i < d; ++i) M.parity[i] = L.basis.parityOf(i);
    M.action.assign(d, MatFp());
    for (int g = 0; g < d; ++g) {
        MatFp A(d, d);
        A.setConstant(L.field.zero());
        for (int j = 0; j < d; ++j) {
            const auto& br = L.bracketOf(g, j);
            for (int k = 0; k < d; ++k) A(k, j) = br[k];
        }
        M.action[g] = A;
    }
    M.weights = L.weights;
    return M;
}

ValidationReport validateSupermodule(const SupermoduleSpec& M, const LieSuperAlgebraSpec& L,
                                     bool restricted) {
    ValidationReport report;
    const PrimeField& F = L.field;
    int d = L.dim(), n = M.dim();
    if (static_cast<int>(M.action.size()) != d) {
        report.issues.push_back({"shape", "one action matrix per basis element required"});
        return report;
    }
    for (int g = 0; g < d; ++g) {
        if (M.action[g].rows() != n || M.action[g].cols() != n) {
            report.issues.push_back({"shape", "action matrix " + L.basis.nameOf(g)});
            return report;
        }
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (!(M.action[g](r, c) == F.zero()) &&
                    M.parity[r] != ((M.parity[c] + L.basis.parityOf(g)) & 1))
                    report.issues.push_back({"action-parity", L.basis.nameOf(g)});
    }
    if (!report.ok()) return report;

    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            MatFp lhs(n, n);
            lhs.setConstant(F.zero());
            const auto& br = L.bracketOf(a, b);
            for (int k = 0; k < d; ++k)
                if (!br[k].isZero()) lhs += br[k] * M.action[k];
            int sign = (L.basis.parityOf(a) & L.basis.parityOf(b)) ? -1 : 1;
            MatFp rhs = M.action[a] * M.action[b] - Fp(sign) * (M.action[b] * M.action[a]);
            if (!(lhs == rhs))
                report.issues.push_back({"bracket-compatibility",
                                         "[" + L.basis.nameOf(a) + ", " + L.basis.nameOf(b) + "]"});
        }
    }

    if (restricted) {
        for (int i = 0; i < L.s(); ++i) {
            MatFp pw = MatFp::Identity(n, n);
            for (uint32_t k = 0; k < L.p(); ++k) pw = pw * M.action[i];
            MatFp rhs(n, n);
            rhs.setConstant(F.zero());
            for (int k = 0; k < d; ++k)
                if (!L.restriction[i][k].isZero()) rhs += L.restriction[i][k] * M.action[k];
            if (!(pw == rhs))
                report.issues.push_back({"restricted-compatibility",
                                         "rho(" + L.basis.nameOf(i) + ")^p"});
        }
    }
    return report;
}

bool moduleWeightsValid(const SupermoduleSpec& M, const LieSuperAlgebraSpec& L) {
    if (!L.weightsValid()) return false;
    if (static_cast<int>(M.weights.size()) != M.dim()) return false;
    for (int g = 0; g < L.dim(); ++g)
        for (int r = 0; r < M.dim(); ++r)
            for (int c = 0; c < M.dim(); ++c)
                if (!(M.action[g](r, c) == L.field.zero()) &&
                    M.weights[r] != M.weights[c] + L.weights[g]) return false;
    return true;
}

}  // namespace scohom
