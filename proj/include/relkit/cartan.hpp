#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "relkit/clifford.hpp"
#include "relkit/matrix.hpp"
#include "relkit/numeric.hpp"

namespace relkit {

// Four algebra families, parametrized by n:
//   CompactB    so(2n+1)    n >= 1
//   CompactD    so(2n)      n >= 2
//   NoncompactB so(2,2n+1)  n >= 1
//   NoncompactD so(2,2n)    n >= 1
enum class AlgebraKind { CompactB, CompactD, NoncompactB, NoncompactD };

struct LieType {
  AlgebraKind kind;
  int n;
};

bool is_compact(AlgebraKind k);
bool has_short_roots(AlgebraKind k);
// Number of Cartan generators: n for compact, n+1 for noncompact.
int rank(const LieType& t);
Signature signature_of(const LieType& t);
std::string lie_to_string(const LieType& t);
// Accepts "so5", "so(5)", "so(2,4)" forms. Throws ContractError on anything
// else (so(2) and so(2,1) have no rank-1 Cartan data here, so(4k') compact
// needs n >= 2).
LieType parse_lie(const std::string& s);

// Cartan indices: compact types use 1..n, noncompact use 0..n (index 0 is the
// distinguished noncompact direction pair).
std::vector<int> cartan_indices(const LieType& t);

// A root as its coefficient vector over e^{i}, i running over
// cartan_indices(t) in order. Entries in {-1,0,1}; one or two nonzero.
struct Root {
  std::vector<int> e;

  bool operator==(const Root& o) const { return e == o.e; }
  bool operator<(const Root& o) const { return e < o.e; }
  Root operator-() const;
  bool is_positive() const;  // first nonzero entry is +1
  bool is_short() const;     // exactly one nonzero entry
};

std::string root_to_string(const Root& r);
std::vector<Root> positive_roots(const LieType& t);
// Height of a positive root in the standard simple-root system; negative
// roots get minus the height of their opposite.
int root_height(const LieType& t, const Root& r);

// Element of so(p,q) as an exact combination of the generators M_{ab}.
// Keys are label pairs with position(a) < position(b).
using MCombo = std::map<std::pair<int, int>, GaussianRational>;

void mc_add(const Signature& sig, MCombo& c, int a, int b, const GaussianRational& coeff);
MCombo mc_scale(const MCombo& c, const GaussianRational& s);
MCombo mc_sum(const MCombo& a, const MCombo& b);
bool mc_is_zero(const MCombo& c);
// Lie bracket from the defining commutator identity of the M's.
MCombo bracket_m(const Signature& sig, const MCombo& x, const MCombo& y);
// Formal adjoint in the convention where every M_{ab} is hermitian.
MCombo mc_dagger(const MCombo& c);
ExactMatrix realize_combo(const MatrixRep& rep, const MCombo& c);

// The displayed long-root vector for eta e^j + eta' e^k, valid for either
// index order; antisymmetric under swapping the two (index, sign) slots.
MCombo pair_root_vector(const Signature& sig, int j, int k, int ej, int ek);

struct CartanDictionary {
  LieType type;
  std::map<int, MCombo> h_defs;    // by Cartan index
  std::map<Root, MCombo> e_defs;   // all roots, both signs
  const MCombo& h(int i) const;
  const MCombo& e(const Root& r) const;
};

// Exact coefficient tables. Long-root vectors carry the 1/2 prefactor;
// short-root vectors are stored unnormalized (no 1/sqrt2), which turns
// [E_{e^i}, E_{-e^i}] = H_i into a factor-2 variant.
CartanDictionary build_dictionary(const LieType& t);

struct CartanCheck {
  std::string name;
  std::string status;  // "pass" | "fail" | "skip"
  std::string detail;
};

// Checks, in the given matrix representation:
//   [H_i, E_alpha] = alpha_i E_alpha for every root and Cartan index;
//   the displayed [E_alpha, E_{-alpha}] identities (with the factor-2 short
//   variants and the noncompact -H_0 signs);
//   (E_alpha)^dagger = E_{-alpha} and H_i hermitian on unitary reps (skipped
//   otherwise);
//   full rank of the dictionary as a linear map onto the M-span.
std::vector<CartanCheck> verify_cartan_relations(const CartanDictionary& dict,
                                                 const MatrixRep& rep);
bool all_passed(const std::vector<CartanCheck>& checks);

// Generator-indexed view with exact structure constants and the inverse
// dictionary. Ids: 0..rank-1 are H's in cartan_indices order, then roots
// (positives sorted by (height, lex), then negatives likewise).
class CartanAlgebra {
 public:
  explicit CartanAlgebra(const LieType& t);

  const LieType& type() const { return type_; }
  const CartanDictionary& dict() const { return dict_; }
  const Signature& sig() const { return sig_; }
  int num_gens() const { return static_cast<int>(gens_.size()); }

  bool is_h(int id) const { return id < rank_; }
  int h_id(int cartan_index) const;
  int e_id(const Root& r) const;
  // For an H id, the Cartan index; for an E id, the root.
  int h_index_of(int id) const;
  const Root& root_of(int id) const;
  const MCombo& combo_of(int id) const;
  std::string gen_name(int id) const;

  using HECombo = std::map<int, GaussianRational>;
  // Inverse dictionary: exact coordinates over the generator basis.
  HECombo to_he(const MCombo& c) const;
  HECombo m_in_he(int label_a, int label_b) const;
  const HECombo& bracket(int a, int b) const;  // cached

 private:
  LieType type_;
  Signature sig_;
  CartanDictionary dict_;
  int rank_ = 0;
  std::vector<int> cartan_idx_;
  struct Gen {
    bool is_h;
    int h_index;
    Root root;
    MCombo combo;
  };
  std::vector<Gen> gens_;
  std::map<Root, int> root_ids_;
  std::vector<std::pair<int, int>> m_basis_;        // position pairs ia<ib
  std::map<std::pair<int, int>, int> m_index_;      // position pair -> row
  ExactMatrix inverse_;                             // num_gens x dim
  mutable std::map<std::pair<int, int>, HECombo> bracket_cache_;
};

// Dominance inequalities for candidate highest weights, per family:
//   CompactB:    l_1 >= ... >= l_n >= 0
//   CompactD:    l_1 >= ... >= l_{n-1} >= |l_n|
//   NoncompactB: -l_0 >= l_1 >= ... >= l_n >= 0
//   NoncompactD: -l_0 >= l_1 >= ... >= |l_n|
bool is_dominant(const LieType& t, const std::vector<Rational>& w);
bool is_dominant(const LieType& t, const Weight& w);
std::vector<Rational> weight_to_rationals(const Weight& w);

}  // namespace relkit
