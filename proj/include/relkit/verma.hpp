#pragma once
// Truncated highest-weight modules for the split-signature families, with
// exact PBW straightening and per-weight Shapovalov Gram blocks. The pairing
// against window monomials quotients by the radical, so relation checks speak
// about the unitary quotient without building it.

#include "relkit/cartan.hpp"
#include "relkit/matrix.hpp"
#include "relkit/numeric.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace relkit {

// Monomials in the lowering generators, exponent vectors over a fixed root
// order (ascending height, then lex), graded by total height.
struct PBWBasis {
    std::vector<Root> neg_roots;
    std::vector<int> heights;                 // of the positive counterparts
    std::vector<std::vector<int>> monomials;  // exponent vectors, height <= cutoff
    std::vector<int> mono_height;
    int cutoff = 0;

    int level_dimension(int h) const;
};

// Exact state and straightening engine over one highest weight. Applications
// are unbounded: no height cap enters anywhere, the window only selects which
// monomials get tabulated and paired.
class VermaEngine {
  public:
    // Vector in the module: monomial id -> coefficient.
    using Vec = std::map<int, GaussianRational>;

    VermaEngine(const LieType& t, std::vector<Rational> hw);

    const CartanAlgebra& algebra() const { return alg_; }
    const std::vector<Rational>& highest_weight() const { return lam_; }
    int num_roots() const { return static_cast<int>(pos_order_.size()); }
    const Root& ordered_root(int k) const { return pos_order_[k]; }
    int ordered_height(int k) const { return height_[k]; }

    int mono_id(const std::vector<int>& expo);
    const std::vector<int>& mono_expo(int id) const { return monos_[id].expo; }
    int mono_height(int id) const { return monos_[id].height; }
    const std::vector<Rational>& mono_weight(int id) const { return monos_[id].weight; }

    // Exact action of one generator (CartanAlgebra id) on a basis monomial.
    const Vec& apply_gen(int gen, int mono);
    Vec apply_gen(int gen, const Vec& v);
    Vec apply_combo(const CartanAlgebra::HECombo& combo, const Vec& v);
    // M_{ab} through the inverse dictionary.
    Vec apply_m(int label_a, int label_b, const Vec& v);

    // Shapovalov values S(u Omega, -) with (E_{-alpha})^dagger = E_{alpha}.
    GaussianRational pair(int mono_u, int mono_v);
    GaussianRational pair(int mono_u, const Vec& v);

  private:
    struct Mono {
        std::vector<int> expo;
        int height;
        std::vector<Rational> weight;  // highest weight plus the root shift
    };

    LieType type_;
    CartanAlgebra alg_;
    std::vector<Rational> lam_;
    std::vector<Root> pos_order_;  // ascending (height, lex)
    std::vector<int> height_;
    std::vector<int> pos_id_, neg_id_;    // generator ids per ordered root
    std::map<Root, int> order_of_;         // negative root -> order index
    std::vector<Mono> monos_;
    std::map<std::vector<int>, int> mono_index_;
    std::map<std::pair<int, int>, Vec> apply_memo_;
    std::map<std::pair<int, int>, GaussianRational> pair_memo_;
};

// Window monomials of one weight with their Gram block.
struct WeightBlock {
    std::vector<Rational> weight;
    std::vector<int> monos;  // engine monomial ids, all with height <= cutoff
    ExactMatrix gram;
};

struct TruncatedHWModule {
    LieType type;
    std::vector<Rational> highest_weight;
    PBWBasis basis;
    // Action matrices over the window, by generator id; components that leave
    // the window are simply not tabulated (checks use the exact engine).
    std::map<int, ExactMatrix> action_tables;
    std::vector<WeightBlock> blocks;
    std::shared_ptr<VermaEngine> engine;
};

struct NoncompactRelationReport {
    bool passed = false;
    GaussianRational a;
    std::string first_violation;  // "(mu,nu) against monomials u, v" when failed
};

TruncatedHWModule build_truncated(AlgebraKind kind, int n, const std::vector<Rational>& hw, int cutoff);
TruncatedHWModule build_truncated(AlgebraKind kind, int n, const Weight& hw, int cutoff);

// For every label pair and every window pair u (height <= cutoff-2),
// v (height <= cutoff): S(v Omega, (sum_lambda {M_{mu lambda}, M^lambda_nu}
// - a eta_{mu nu}) u Omega) = 0, with a solved from the (Omega, Omega)
// element first.
NoncompactRelationReport check_relations_truncated(const TruncatedHWModule& m);

}  // namespace relkit
