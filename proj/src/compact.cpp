#include "relkit/compact.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace relkit {

namespace {

HalfInt halfint_from(const GaussianRational& g) {
    if (!g.is_real()) throw ContractError("halfint_from: complex weight entry");
    Rational t = g.re * 2;
    if (denominator(t) != 1) throw ContractError("halfint_from: not a half integer");
    return HalfInt::from_twice(numerator(t));
}

Weight weight_scale(const Weight& w, int k) {
    Weight out(w.size());
    for (size_t i = 0; i < w.size(); ++i) out[i] = HalfInt::from_twice(w[i].twice * k);
    return out;
}

bool all_hermitian(const MatrixRep& rep) {
    for (const auto& [key, m] : rep.mats)
        if (!is_hermitian(m)) return false;
    return true;
}

std::vector<GaussianRational> mat_vec(const ExactMatrix& a, const std::vector<GaussianRational>& v) {
    std::vector<GaussianRational> out(a.rows);
    for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < a.cols; ++c) out[r] += a.at(r, c) * v[c];
    return out;
}

bool vec_is_zero(const std::vector<GaussianRational>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// One Lie-algebra generator acting on base^{tensor k}: sum over slots.
SparseVec apply_gen_tensor(const ExactMatrix& a, const SparseVec& v, int k, int64_t base_dim,
                           const std::vector<int64_t>& stride) {
    SparseVec out;
    for (const auto& [key, coeff] : v) {
        if (coeff.is_zero()) continue;
        for (int s = 0; s < k; ++s) {
            int64_t st = stride[s];
            int digit = static_cast<int>((static_cast<int64_t>(key) / st) % base_dim);
            for (int r = 0; r < static_cast<int>(base_dim); ++r) {
                const GaussianRational& entry = a.at(r, digit);
                if (entry.is_zero()) continue;
                uint64_t nk = static_cast<uint64_t>(static_cast<int64_t>(key) + (r - digit) * st);
                out[nk] += coeff * entry;
            }
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero())
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

// <u, v> against the tensor-power metric gram_base^{tensor k}.
GaussianRational tensor_gram_entry(const SparseVec& u, const SparseVec& v, const ExactMatrix& gram_base,
                                   bool gram_is_identity, int k, int64_t base_dim,
                                   const std::vector<int64_t>& stride) {
    if (gram_is_identity) return sv_dot(u, v);
    GaussianRational total;
    for (const auto& [k1, c1] : u) {
        for (const auto& [k2, c2] : v) {
            GaussianRational f = c1.conj() * c2;
            for (int s = 0; s < k && !f.is_zero(); ++s) {
                int d1 = static_cast<int>((static_cast<int64_t>(k1) / stride[s]) % base_dim);
                int d2 = static_cast<int>((static_cast<int64_t>(k2) / stride[s]) % base_dim);
                f *= gram_base.at(d1, d2);
            }
            total += f;
        }
    }
    return total;
}

}  // namespace

CompactModule trivial_module(AlgebraKind kind, int n) {
    if (!is_compact(kind)) throw ContractError("trivial_module: compact kind required");
    LieType t{kind, n};
    CompactModule out;
    out.type = t;
    out.rep.sig = signature_of(t);
    out.rep.dim = 1;
    out.rep.unitary = true;
    out.rep.tag = lie_to_string(t) + "-trivial";
    int d = out.rep.sig.dim();
    for (int ia = 0; ia < d; ++ia)
        for (int ib = ia + 1; ib < d; ++ib)
            out.rep.set(out.rep.sig.labels[ia], out.rep.sig.labels[ib], ExactMatrix::zero(1, 1));
    out.highest_weight.assign(n, HalfInt());
    out.hw_coords = {GaussianRational(1)};
    out.gram = ExactMatrix::identity(1);
    out.basis_weights = {out.highest_weight};
    return out;
}

CompactModule spinor_module(AlgebraKind kind, int n, int chirality) {
    if (!is_compact(kind)) throw ContractError("spinor_module: compact kind required");
    if (chirality != 1 && chirality != -1) throw ContractError("spinor_module: chirality must be +1 or -1");
    if (kind == AlgebraKind::CompactB && chirality != 1)
        throw ContractError("spinor_module: B-type has no chirality split");
    LieType t{kind, n};
    Signature sig = signature_of(t);
    GammaModel model = gamma_model(sig);

    std::vector<int> sel;
    for (int r = 0; r < model.rep.dim; ++r) {
        if (kind == AlgebraKind::CompactB || model.chirality.at(r, r) == GaussianRational(chirality))
            sel.push_back(r);
    }

    CompactModule out;
    out.type = t;
    out.rep.sig = sig;
    out.rep.dim = static_cast<int>(sel.size());
    out.rep.unitary = true;
    out.rep.tag = lie_to_string(t) + (kind == AlgebraKind::CompactB ? "-spin" : (chirality == 1 ? "-spin+" : "-spin-"));
    int d = sig.dim();
    for (int ia = 0; ia < d; ++ia) {
        for (int ib = ia + 1; ib < d; ++ib) {
            ExactMatrix full = model.rep.M(sig.labels[ia], sig.labels[ib]);
            ExactMatrix sub(out.rep.dim, out.rep.dim);
            for (int r = 0; r < out.rep.dim; ++r)
                for (int c = 0; c < out.rep.dim; ++c) sub.at(r, c) = full.at(sel[r], sel[c]);
            out.rep.set(sig.labels[ia], sig.labels[ib], std::move(sub));
        }
    }

    out.basis_weights.resize(out.rep.dim);
    for (int r = 0; r < out.rep.dim; ++r) {
        Weight w(n);
        for (int i = 1; i <= n; ++i) w[i - 1] = halfint_from(model.rep.M(2 * i - 1, 2 * i).at(sel[r], sel[r]));
        out.basis_weights[r] = std::move(w);
    }

    Weight target(n, HalfInt::from_twice(1));
    if (kind == AlgebraKind::CompactD && chirality == -1) target[n - 1] = HalfInt::from_twice(-1);
    out.highest_weight = target;
    out.hw_coords.assign(out.rep.dim, GaussianRational());
    int found = -1;
    for (int r = 0; r < out.rep.dim; ++r) {
        if (out.basis_weights[r] == target) {
            if (found >= 0) throw ContractError("spinor_module: highest weight space not one dimensional");
            found = r;
        }
    }
    if (found < 0) throw ContractError("spinor_module: highest weight vector not found");
    out.hw_coords[found] = GaussianRational(1);
    out.gram = ExactMatrix::identity(out.rep.dim);
    return out;
}

CompactModule vector_module(AlgebraKind kind, int n) {
    if (!is_compact(kind)) throw ContractError("vector_module: compact kind required");
    LieType t{kind, n};
    Signature sig = signature_of(t);
    int d = sig.dim();

    // Coordinate matrices (M_{mu nu})_{ab} = -i(delta_{a mu} delta_{nu b} - delta_{a nu} delta_{mu b}).
    auto coord_m = [&](int ia, int ib) {
        ExactMatrix m(d, d);
        m.at(ia, ib) = -GaussianRational::i();
        m.at(ib, ia) = GaussianRational::i();
        return m;
    };

    // Columns: e_{2j-1} +- i e_{2j} carry weights +-e^j; odd d keeps the last
    // coordinate as the zero-weight vector.
    ExactMatrix p(d, d);
    for (int j = 1; j <= n; ++j) {
        p.at(2 * j - 2, j - 1) = GaussianRational(1);
        p.at(2 * j - 1, j - 1) = GaussianRational::i();
        p.at(2 * j - 2, n + j - 1) = GaussianRational(1);
        p.at(2 * j - 1, n + j - 1) = -GaussianRational::i();
    }
    if (d % 2 == 1) p.at(d - 1, d - 1) = GaussianRational(1);
    ExactMatrix pinv = mat_inverse(p);

    CompactModule out;
    out.type = t;
    out.rep.sig = sig;
    out.rep.dim = d;
    out.rep.tag = lie_to_string(t) + "-vector";
    for (int ia = 0; ia < d; ++ia)
        for (int ib = ia + 1; ib < d; ++ib)
            out.rep.set(sig.labels[ia], sig.labels[ib], mat_mul(pinv, mat_mul(coord_m(ia, ib), p)));
    out.rep.unitary = all_hermitian(out.rep);

    out.basis_weights.resize(d, Weight(n, HalfInt()));
    for (int j = 1; j <= n; ++j) {
        out.basis_weights[j - 1][j - 1] = HalfInt::from_twice(2);
        out.basis_weights[n + j - 1][j - 1] = HalfInt::from_twice(-2);
    }
    out.highest_weight = out.basis_weights[0];
    out.hw_coords.assign(d, GaussianRational());
    out.hw_coords[0] = GaussianRational(1);
    out.gram = mat_mul(adjoint(p), p);
    return out;
}

CompactModule cartan_power(const CompactModule& base, int k) {
    if (k < 0) throw ContractError("cartan_power: negative power");
    if (k == 0) return trivial_module(base.type.kind, base.type.n);
    if (k == 1) return base;

    const Signature& sig = base.rep.sig;
    int64_t base_dim = base.rep.dim;
    int64_t ambient = 1;
    for (int s = 0; s < k; ++s) {
        ambient *= base_dim;
        if (ambient > (int64_t{1} << 40)) throw ContractError("cartan_power: tensor space too large");
    }
    std::vector<int64_t> stride(k);
    stride[k - 1] = 1;
    for (int s = k - 2; s >= 0; --s) stride[s] = stride[s + 1] * base_dim;

    CartanDictionary dict = build_dictionary(base.type);
    std::vector<ExactMatrix> lowering;
    for (const Root& r : positive_roots(base.type)) lowering.push_back(realize_combo(base.rep, dict.e(-r)));

    std::vector<std::pair<int, GaussianRational>> hw_nz;
    for (int i = 0; i < static_cast<int>(base.hw_coords.size()); ++i)
        if (!base.hw_coords[i].is_zero()) hw_nz.emplace_back(i, base.hw_coords[i]);
    SparseVec start;
    std::vector<int> odo(k, 0);
    for (;;) {
        uint64_t key = 0;
        GaussianRational c(1);
        for (int s = 0; s < k; ++s) {
            key += static_cast<uint64_t>(hw_nz[odo[s]].first * stride[s]);
            c *= hw_nz[odo[s]].second;
        }
        start[key] = c;
        int s = k - 1;
        while (s >= 0 && ++odo[s] == static_cast<int>(hw_nz.size())) odo[s--] = 0;
        if (s < 0) break;
    }

    EchelonBasis basis;
    basis.insert(start);
    // Sweep to a fixed point; the last sweep certifies closure under every
    // lowering generator.
    bool grew = true;
    while (grew) {
        grew = false;
        for (int j = 0; j < basis.dim(); ++j)
            for (const ExactMatrix& e : lowering)
                if (basis.insert(apply_gen_tensor(e, basis.inserted(j), k, base_dim, stride))) grew = true;
    }
    int mdim = basis.dim();

    CompactModule out;
    out.type = base.type;
    out.rep.sig = sig;
    out.rep.dim = mdim;
    out.rep.tag = base.rep.tag + "^" + std::to_string(k);
    int d = sig.dim();
    for (int ia = 0; ia < d; ++ia) {
        for (int ib = ia + 1; ib < d; ++ib) {
            ExactMatrix a = base.rep.M(sig.labels[ia], sig.labels[ib]);
            ExactMatrix m(mdim, mdim);
            for (int j = 0; j < mdim; ++j) {
                auto coords = basis.coordinates(apply_gen_tensor(a, basis.inserted(j), k, base_dim, stride));
                if (!coords) throw ContractError("cartan_power: closure violated");
                for (int r = 0; r < mdim; ++r) m.at(r, j) = (*coords)[r];
            }
            out.rep.set(sig.labels[ia], sig.labels[ib], std::move(m));
        }
    }
    out.rep.unitary = all_hermitian(out.rep);

    bool gram_id = (base.gram == ExactMatrix::identity(base.gram.rows));
    out.gram = ExactMatrix(mdim, mdim);
    for (int i = 0; i < mdim; ++i)
        for (int j = 0; j < mdim; ++j)
            out.gram.at(i, j) =
                tensor_gram_entry(basis.inserted(i), basis.inserted(j), base.gram, gram_id, k, base_dim, stride);

    out.basis_weights.resize(mdim);
    for (int j = 0; j < mdim; ++j) {
        uint64_t key = basis.inserted(j).begin()->first;
        Weight w(base.highest_weight.size(), HalfInt());
        for (int s = 0; s < k; ++s) {
            int digit = static_cast<int>((static_cast<int64_t>(key) / stride[s]) % base_dim);
            for (size_t i = 0; i < w.size(); ++i)
                w[i] = HalfInt::from_twice(w[i].twice + base.basis_weights[digit][i].twice);
        }
        out.basis_weights[j] = std::move(w);
    }

    out.highest_weight = weight_scale(base.highest_weight, k);
    auto hw = basis.coordinates(start);
    if (!hw) throw ContractError("cartan_power: lost the highest weight vector");
    out.hw_coords = *hw;
    return out;
}

MatrixRep adjoint_rep(const LieType& t) {
    Signature sig = signature_of(t);
    int d = sig.dim();
    std::vector<std::pair<int, int>> pairs;
    std::map<std::pair<int, int>, int> index;
    for (int ia = 0; ia < d; ++ia) {
        for (int ib = ia + 1; ib < d; ++ib) {
            index[{sig.labels[ia], sig.labels[ib]}] = static_cast<int>(pairs.size());
            pairs.emplace_back(sig.labels[ia], sig.labels[ib]);
        }
    }
    MatrixRep rep;
    rep.sig = sig;
    rep.dim = static_cast<int>(pairs.size());
    rep.tag = lie_to_string(t) + "-adjoint";
    for (const auto& [mu, nu] : pairs) {
        MCombo gen;
        mc_add(sig, gen, mu, nu, GaussianRational(1));
        ExactMatrix m(rep.dim, rep.dim);
        for (int j = 0; j < rep.dim; ++j) {
            MCombo arg;
            mc_add(sig, arg, pairs[j].first, pairs[j].second, GaussianRational(1));
            for (const auto& [pq, c] : bracket_m(sig, gen, arg)) m.at(index.at(pq), j) = c;
        }
        rep.set(mu, nu, std::move(m));
    }
    rep.unitary = all_hermitian(rep);
    return rep;
}

RelationReport check_relations(const MatrixRep& rep) {
    const Signature& sig = rep.sig;
    int d = sig.dim();
    RelationReport out;
    bool have_a = false;
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            int mu = sig.labels[i], nu = sig.labels[j];
            ExactMatrix s = ExactMatrix::zero(rep.dim, rep.dim);
            for (int l = 0; l < d; ++l) {
                if (l == i || l == j) continue;
                int lam = sig.labels[l];
                ExactMatrix term = anticommutator(rep.M(mu, lam), rep.M(lam, nu));
                s = mat_add(s, sig.eta_at(l) == 1 ? term : mat_scale(GaussianRational(-1), term));
            }
            if (i == j && !have_a) {
                out.a = s.at(0, 0) * GaussianRational(sig.eta_at(i));
                have_a = true;
            }
            GaussianRational want_diag = (i == j) ? out.a * GaussianRational(sig.eta_at(i)) : GaussianRational();
            for (int r = 0; r < rep.dim; ++r) {
                for (int c = 0; c < rep.dim; ++c) {
                    GaussianRational want = (r == c) ? want_diag : GaussianRational();
                    if (!(s.at(r, c) - want).is_zero()) {
                        out.passed = false;
                        out.first_violation = "(mu,nu)=(" + std::to_string(mu) + "," + std::to_string(nu) +
                                              ") entry (" + std::to_string(r) + "," + std::to_string(c) +
                                              ") = " + gr_to_string(s.at(r, c)) + ", expected " + gr_to_string(want);
                        return out;
                    }
                }
            }
        }
    }
    out.passed = true;
    return out;
}

RelationReport check_relations(const CompactModule& m) { return check_relations(m.rep); }

GaussianRational casimir_C(const MatrixRep& rep) {
    const Signature& sig = rep.sig;
    int d = sig.dim();
    ExactMatrix c = ExactMatrix::zero(rep.dim, rep.dim);
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            ExactMatrix m = rep.M(sig.labels[i], sig.labels[j]);
            c = mat_add(c, mat_scale(GaussianRational(2 * sig.eta_at(i) * sig.eta_at(j)), mat_mul(m, m)));
        }
    }
    auto s = as_scalar(c);
    if (!s) throw ContractError("casimir: reducible input");
    return *s;
}

long long weyl_dim(AlgebraKind kind, const Weight& w) {
    if (!is_compact(kind)) throw ContractError("weyl_dim: compact kind required");
    int n = static_cast<int>(w.size());
    LieType t{kind, n};
    signature_of(t);  // rank bounds
    if (!is_dominant(t, w)) throw ContractError("weyl_dim: non-dominant weight");
    std::vector<Rational> lam = weight_to_rationals(w);
    std::vector<Rational> rho(n);
    for (int i = 0; i < n; ++i)
        rho[i] = (kind == AlgebraKind::CompactB) ? Rational(2 * (n - i) - 1, 2) : Rational(n - 1 - i);
    Rational num(1), den(1);
    for (const Root& r : positive_roots(t)) {
        Rational a(0), b(0);
        for (int i = 0; i < n; ++i) {
            if (r.e[i] == 0) continue;
            a += (lam[i] + rho[i]) * r.e[i];
            b += rho[i] * r.e[i];
        }
        num *= a;
        den *= b;
    }
    Rational q = num / den;
    if (denominator(q) != 1 || q <= 0) throw ContractError("weyl_dim: formula did not produce a positive integer");
    return numerator(q).convert_to<long long>();
}

namespace {

// <Omega| g1 g2 |Omega> for single generators at formal highest weight lam.
// Nonzero only for H H and E_alpha E_{-alpha} with alpha positive.
GaussianRational pair_expectation(const CartanAlgebra& alg, const std::vector<Rational>& lam, int g1, int g2) {
    bool h1 = alg.is_h(g1), h2 = alg.is_h(g2);
    if (h1 && h2) return GaussianRational(lam[g1] * lam[g2]);
    if (h1 || h2) return GaussianRational();
    const Root& r1 = alg.root_of(g1);
    if (!r1.is_positive() || !(alg.root_of(g2) == -r1)) return GaussianRational();
    GaussianRational v;
    for (const auto& [id, c] : alg.bracket(g1, g2)) {
        if (!alg.is_h(id)) throw ContractError("pair_expectation: opposite-root bracket left the Cartan");
        v += c * GaussianRational(lam[id]);
    }
    return v;
}

// <Omega| M_{ab} M_{cd} |Omega>.
GaussianRational mm_expectation(const CartanAlgebra& alg, const std::vector<Rational>& lam, int a, int b, int c,
                                int d) {
    if (a == b || c == d) return GaussianRational();
    GaussianRational out;
    for (const auto& [g1, c1] : alg.m_in_he(a, b))
        for (const auto& [g2, c2] : alg.m_in_he(c, d)) out += c1 * c2 * pair_expectation(alg, lam, g1, g2);
    return out;
}

void require_weight(const LieType& t, const std::vector<Rational>& hw, const char* who) {
    if (static_cast<int>(hw.size()) != rank(t))
        throw ContractError(std::string(who) + ": weight length does not match the rank");
    if (!is_dominant(t, hw)) throw ContractError(std::string(who) + ": non-dominant weight");
}

}  // namespace

RelationReport hw_relation_scan(const LieType& t, const std::vector<Rational>& hw) {
    require_weight(t, hw, "hw_relation_scan");
    CartanAlgebra alg(t);
    const Signature& sig = alg.sig();
    int d = sig.dim();
    RelationReport out;
    bool have_a = false;
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            int mu = sig.labels[i], nu = sig.labels[j];
            GaussianRational val;
            for (int l = 0; l < d; ++l) {
                if (l == i || l == j) continue;
                int lam = sig.labels[l];
                GaussianRational term = mm_expectation(alg, hw, mu, lam, lam, nu) +
                                        mm_expectation(alg, hw, lam, nu, mu, lam);
                val += GaussianRational(sig.eta_at(l)) * term;
            }
            if (i == j && !have_a) {
                out.a = val * GaussianRational(sig.eta_at(i));
                have_a = true;
            }
            GaussianRational want = (i == j) ? out.a * GaussianRational(sig.eta_at(i)) : GaussianRational();
            if (!(val - want).is_zero()) {
                out.passed = false;
                out.first_violation = "(mu,nu)=(" + std::to_string(mu) + "," + std::to_string(nu) +
                                      ") expectation " + gr_to_string(val) + ", expected " + gr_to_string(want);
                return out;
            }
        }
    }
    out.passed = true;
    return out;
}

Rational casimir_at_highest_weight(const LieType& t, const std::vector<Rational>& hw) {
    require_weight(t, hw, "casimir_at_highest_weight");
    CartanAlgebra alg(t);
    const Signature& sig = alg.sig();
    int d = sig.dim();
    GaussianRational c;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            GaussianRational term = mm_expectation(alg, hw, sig.labels[i], sig.labels[j], sig.labels[i], sig.labels[j]);
            c += GaussianRational(2 * sig.eta_at(i) * sig.eta_at(j)) * term;
        }
    }
    if (!c.is_real()) throw ContractError("casimir_at_highest_weight: non-real value");
    return c.re;
}

bool module_selfadjoint(const CompactModule& m) {
    for (const auto& [key, mat] : m.rep.mats)
        if (!(mat_mul(m.gram, mat) == mat_mul(adjoint(mat), m.gram))) return false;
    return true;
}

std::vector<CartanCheck> verify_annihilator_identity(const CompactModule& m) {
    if (m.type.kind != AlgebraKind::CompactD)
        throw ContractError("verify_annihilator_identity: D-type module required");
    int n = m.type.n;
    int dim = m.rep.dim;
    CartanDictionary dict = build_dictionary(m.type);
    auto eroot = [&](int s1, int i, int si) {
        Root r;
        r.e.assign(n, 0);
        r.e[0] = s1;
        r.e[i - 1] = si;
        return realize_combo(m.rep, dict.e(r));
    };

    std::vector<CartanCheck> checks;

    ExactMatrix o = ExactMatrix::zero(dim, dim);
    for (int i = 2; i <= n; ++i) o = mat_add(o, mat_mul(eroot(-1, i, -1), eroot(-1, i, +1)));
    checks.push_back({"lowering-product-vanishes", o.is_zero() ? "pass" : "fail",
                      o.is_zero() ? "" : "nonzero matrix of dimension " + std::to_string(dim)});

    GaussianRational c2 = casimir_C(m.rep) * GaussianRational(Rational(1, 2));
    ExactMatrix h1 = realize_combo(m.rep, dict.h(1));
    ExactMatrix o1 = mat_mul(h1, h1);
    o1 = mat_sub(o1, mat_scale(c2 / GaussianRational(n), ExactMatrix::identity(dim)));
    GaussianRational half(Rational(1, 2));
    for (int i = 2; i <= n; ++i) {
        ExactMatrix pair_sum = mat_add(anticommutator(eroot(-1, i, -1), eroot(+1, i, +1)),
                                       anticommutator(eroot(-1, i, +1), eroot(+1, i, -1)));
        o1 = mat_add(o1, mat_scale(half, pair_sum));
    }
    bool kills = vec_is_zero(mat_vec(o1, m.hw_coords));
    checks.push_back({"cartan-counterterm-kills-hw", kills ? "pass" : "fail",
                      kills ? "" : "highest weight vector not annihilated"});

    const Signature& sig = m.rep.sig;
    int d = sig.dim();
    bool two_ok = true;
    std::string two_detail;
    for (int i = 0; i < d && two_ok; ++i) {
        for (int j = i + 1; j < d && two_ok; ++j) {
            ExactMatrix s = ExactMatrix::zero(dim, dim);
            for (int l = 0; l < d; ++l) {
                if (l == i || l == j) continue;
                s = mat_add(s, anticommutator(m.rep.M(sig.labels[i], sig.labels[l]),
                                              m.rep.M(sig.labels[j], sig.labels[l])));
            }
            if (!s.is_zero()) {
                two_ok = false;
                two_detail = "sum_k {M_{i,k}, M_{j,k}} nonzero at (i,j)=(" + std::to_string(sig.labels[i]) + "," +
                             std::to_string(sig.labels[j]) + ")";
            }
        }
    }
    checks.push_back({"two-row-anticommutator-sums", two_ok ? "pass" : "fail", two_detail});

    ExactMatrix lhs = ExactMatrix::zero(dim, dim);
    for (int l = 1; l < d; ++l) {
        ExactMatrix mk = m.rep.M(sig.labels[0], sig.labels[l]);
        lhs = mat_add(lhs, mat_mul(mk, mk));
    }
    lhs = mat_sub(lhs, mat_scale(c2 / GaussianRational(n), ExactMatrix::identity(dim)));
    ExactMatrix o_adj = mat_mul(mat_inverse(m.gram), mat_mul(adjoint(o), m.gram));
    ExactMatrix rhs = mat_add(o1, mat_add(o_adj, o));
    bool decomp = (lhs == rhs);
    checks.push_back({"first-row-square-decomposition", decomp ? "pass" : "fail",
                      decomp ? "" : "decomposition mismatch"});
    return checks;
}

}  // namespace relkit
