#pragma once
// Dense exact matrices over Gaussian rationals, hermitian inertia by congruence
// elimination, and a sparse echelon basis for span/coordinate work in large
// ambient spaces.

#include "relkit/numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace relkit {

struct ExactMatrix {
    int rows = 0, cols = 0;
    std::vector<GaussianRational> e;  // row-major

    ExactMatrix() = default;
    ExactMatrix(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c) {}

    GaussianRational& at(int r, int c) { return e[static_cast<size_t>(r) * cols + c]; }
    const GaussianRational& at(int r, int c) const { return e[static_cast<size_t>(r) * cols + c]; }

    static ExactMatrix identity(int n);
    static ExactMatrix zero(int r, int c) { return ExactMatrix(r, c); }

    bool is_zero() const;
    bool is_square() const { return rows == cols; }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.e == b.e;
    }
};

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mat_add(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mat_sub(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mat_scale(const GaussianRational& s, const ExactMatrix& a);
ExactMatrix adjoint(const ExactMatrix& a);            // conjugate transpose
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b);
bool is_hermitian(const ExactMatrix& a);
// Scalar s with a == s*I, if any.
std::optional<GaussianRational> as_scalar(const ExactMatrix& a);

struct Inertia {
    int n_pos = 0, n_zero = 0, n_neg = 0;
    friend bool operator==(const Inertia& a, const Inertia& b) {
        return a.n_pos == b.n_pos && a.n_zero == b.n_zero && a.n_neg == b.n_neg;
    }
};

// Signature of a hermitian matrix by exact simultaneous row/column elimination.
// Throws ContractError if h is not hermitian.
Inertia inertia(const ExactMatrix& h);

int mat_rank(const ExactMatrix& a);

// Exact inverse; throws ContractError unless a is square and nonsingular.
ExactMatrix mat_inverse(const ExactMatrix& a);

// Sparse vector over a (possibly huge) index space.
using SparseVec = std::map<uint64_t, GaussianRational>;

SparseVec sv_add(const SparseVec& a, const SparseVec& b);
SparseVec sv_scale(const GaussianRational& s, const SparseVec& a);
void sv_add_scaled(SparseVec& acc, const GaussianRational& s, const SparseVec& a);
// Standard hermitian inner product <a,b> = sum conj(a_i) b_i.
GaussianRational sv_dot(const SparseVec& a, const SparseVec& b);

// Row-reduced spanning set with unique leading indices; supports membership
// tests and coordinate extraction against the inserted vectors.
class EchelonBasis {
  public:
    // Inserts v's residue if independent; returns true when the span grew.
    bool insert(const SparseVec& v);
    bool contains(const SparseVec& v) const;
    // Coordinates of v in terms of the *inserted* vectors (in insertion order),
    // or nullopt if v is outside the span.
    std::optional<std::vector<GaussianRational>> coordinates(const SparseVec& v) const;
    int dim() const { return static_cast<int>(rows_.size()); }
    const SparseVec& inserted(int k) const { return inserted_[k]; }

  private:
    struct Row {
        uint64_t lead;
        SparseVec vec;                         // reduced, leading coefficient 1
        std::vector<GaussianRational> coords;  // vec as combination of inserted_
    };
    // Reduces v in place; appends elimination coefficients into coords.
    void reduce(SparseVec& v, std::vector<GaussianRational>& coords) const;
    std::vector<Row> rows_;
    std::map<uint64_t, int> lead_row_;
    std::vector<SparseVec> inserted_;
};

}  // namespace relkit
