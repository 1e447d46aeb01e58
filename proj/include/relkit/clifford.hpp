#pragma once
// Complex Clifford algebra over a diagonal metric, the rotation generators
// M_{mu,nu} = (i/2) X_mu X_nu, and their gamma-matrix realizations.

#include "relkit/matrix.hpp"
#include "relkit/numeric.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace relkit {

// Diagonal metric: +1 on the first p labels, -1 on the remaining q.
struct Signature {
    int p = 0, q = 0;
    std::vector<int> labels;

    int dim() const { return p + q; }
    int eta(int label) const { return position(label) < p ? 1 : -1; }
    int eta_at(int pos) const { return pos < p ? 1 : -1; }
    int position(int label) const;

    static Signature general(int p, int q);  // labels 1..p+q
    static Signature compact(int d) { return general(d, 0); }
    static Signature split2(int q);  // labels -1, 0, 1..q with eta(-1)=eta(0)=+1

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.p == b.p && a.q == b.q && a.labels == b.labels;
    }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
    std::string to_string() const;
};

// Basis blade as a bitmask over label positions.
using Blade = uint32_t;

struct CliffordElement {
    Signature sig;
    std::map<Blade, GaussianRational> terms;

    explicit CliffordElement(Signature s) : sig(std::move(s)) {}
    bool is_zero() const { return terms.empty(); }
    void add_term(Blade b, const GaussianRational& c);
    friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
        return a.sig == b.sig && a.terms == b.terms;
    }
};

CliffordElement c_zero(const Signature& sig);
CliffordElement c_scalar(const Signature& sig, const GaussianRational& c);
// The generator X_mu.
CliffordElement x_element(int label, const Signature& sig);
CliffordElement c_add(const CliffordElement& a, const CliffordElement& b);
CliffordElement c_sub(const CliffordElement& a, const CliffordElement& b);
CliffordElement c_scale(const GaussianRational& s, const CliffordElement& a);
// Product with X_mu X_nu + X_nu X_mu = -2 eta_{mu,nu} enforced by sign counting.
CliffordElement blade_mul(const CliffordElement& a, const CliffordElement& b, const Signature& sig);
// (i/2) X_mu X_nu for mu != nu; zero when mu == nu.
CliffordElement make_M(int mu, int nu, const Signature& sig);

struct MatrixRep {
    Signature sig;
    int dim = 0;
    bool unitary = false;
    std::string tag;
    std::map<std::pair<int, int>, ExactMatrix> mats;  // key ordered by label position

    // M_{mu,nu} with antisymmetry and the zero diagonal handled.
    ExactMatrix M(int mu, int nu) const;
    void set(int mu, int nu, ExactMatrix m);
};

struct BracketViolation {
    int a, b, c, d;
    std::string detail;
};

// Checks [M_{ab}, M_{cd}] = -i(eta_{bc} M_{ad} - eta_{ac} M_{bd} - eta_{bd} M_{ac}
// + eta_{ad} M_{bc}) for every index quadruple.
std::vector<BracketViolation> check_so_bracket(const MatrixRep& rep);
// Same identity computed inside the blade algebra, independent of any matrices.
std::vector<BracketViolation> check_so_bracket_blades(const Signature& sig);

struct GammaModel {
    MatrixRep rep;                // the M_{mu,nu}
    std::vector<ExactMatrix> X;   // X by label position; X_mu X_nu + X_nu X_mu = -2 eta
    std::vector<ExactMatrix> gamma;  // hermitian, gamma^2 = +1
    ExactMatrix chirality;        // sigma_z tensor power; commutes with all M
};

// Iterated 2x2 tensor construction; matrices of size 2^floor((p+q)/2).
GammaModel gamma_model(const Signature& sig);
MatrixRep gamma_rep(const Signature& sig);

// Matrix image of a Clifford element under the model's X map.
ExactMatrix realize_element(const CliffordElement& el, const GammaModel& model);

}  // namespace relkit
