#pragma once
// Finite-dimensional highest-weight modules for the compact families: spin
// modules and their Cartan powers built by exact lowering closure, the
// quadratic relation checker, and expectation scans at a highest weight.

#include "relkit/cartan.hpp"
#include "relkit/clifford.hpp"
#include "relkit/matrix.hpp"
#include "relkit/numeric.hpp"

#include <string>
#include <vector>

namespace relkit {

// Irreducible module carried as explicit generator matrices over a weight
// basis. The basis is orthogonal across distinct weights but not normalized,
// so operator adjoints are taken against gram; rep.unitary records whether
// the matrices happen to be literally hermitian.
struct CompactModule {
    LieType type;
    MatrixRep rep;
    Weight highest_weight;
    std::vector<GaussianRational> hw_coords;  // highest weight vector, module coordinates
    ExactMatrix gram;                         // hermitian positive definite
    std::vector<Weight> basis_weights;
};

struct RelationReport {
    bool passed = false;
    GaussianRational a;           // scalar of the quadratic relation when passed
    std::string first_violation;  // empty when passed
};

CompactModule trivial_module(AlgebraKind kind, int n);
// B: the full 2^n spin module. D: the chirality half s_+ (chirality=+1) or
// s_- (chirality=-1); B accepts only the default.
CompactModule spinor_module(AlgebraKind kind, int n, int chirality = +1);
// Defining d-dimensional module in a weight basis (all H_i diagonal).
CompactModule vector_module(AlgebraKind kind, int n);
// Irreducible submodule of base^{tensor k} generated from hw^{tensor k} by
// exact lowering closure; highest weight k * base.highest_weight.
CompactModule cartan_power(const CompactModule& base, int k);
// ad acting on the span of the M_{ab}.
MatrixRep adjoint_rep(const LieType& t);

// Full scan of sum_lambda (M_{mu lambda} M^lambda_nu + M^lambda_nu M_{mu lambda})
// over every index pair; passes iff the result is a * eta_{mu nu} * identity
// for one scalar a.
RelationReport check_relations(const MatrixRep& rep);
RelationReport check_relations(const CompactModule& m);

// Scalar of sum over ordered pairs M_{mu lambda} M^{mu lambda}; throws
// ContractError("casimir: reducible input") when the sum is not scalar.
GaussianRational casimir_C(const MatrixRep& rep);

long long weyl_dim(AlgebraKind kind, const Weight& w);

// Same scans evaluated purely from structure constants as expectations at a
// formal highest weight vector, no module construction. Valid for all four
// families.
RelationReport hw_relation_scan(const LieType& t, const std::vector<Rational>& hw);
Rational casimir_at_highest_weight(const LieType& t, const std::vector<Rational>& hw);

// gram * M == adjoint(M) * gram for every generator.
bool module_selfadjoint(const CompactModule& m);

// D-type only. Checks that O = sum_{i != 1} E_{-e^1-e^i} E_{-e^1+e^i}
// vanishes as a matrix, that O_1 = H_1^2 - c_2/n + (1/2) sum_{i != 1}
// ({E_{-e^1-e^i}, E_{e^1+e^i}} + {E_{-e^1+e^i}, E_{e^1-e^i}}) kills the
// highest weight vector, the two-row sums sum_k {M_{ik}, M_{jk}} = 0, and
// the decomposition sum_k (M_{1k})^2 - c_2/n = O_1 + O^dagger + O.
std::vector<CartanCheck> verify_annihilator_identity(const CompactModule& m);

}  // namespace relkit
