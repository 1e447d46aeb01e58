#include "relkit/cartan.hpp"

#include <algorithm>
#include <sstream>

namespace relkit {

bool is_compact(AlgebraKind k) {
    return k == AlgebraKind::CompactB || k == AlgebraKind::CompactD;
}

bool has_short_roots(AlgebraKind k) {
    return k == AlgebraKind::CompactB || k == AlgebraKind::NoncompactB;
}

static void validate_type(const LieType& t) {
    int min_n = (t.kind == AlgebraKind::CompactD) ? 2 : 1;
    if (t.n < min_n) throw ContractError("LieType: rank parameter out of range for " + lie_to_string(t));
}

int rank(const LieType& t) {
    return is_compact(t.kind) ? t.n : t.n + 1;
}

Signature signature_of(const LieType& t) {
    validate_type(t);
    switch (t.kind) {
        case AlgebraKind::CompactB: return Signature::compact(2 * t.n + 1);
        case AlgebraKind::CompactD: return Signature::compact(2 * t.n);
        case AlgebraKind::NoncompactB: return Signature::split2(2 * t.n + 1);
        case AlgebraKind::NoncompactD: return Signature::split2(2 * t.n);
    }
    throw ContractError("signature_of: bad kind");
}

std::string lie_to_string(const LieType& t) {
    std::ostringstream os;
    switch (t.kind) {
        case AlgebraKind::CompactB: os << "so(" << 2 * t.n + 1 << ")"; break;
        case AlgebraKind::CompactD: os << "so(" << 2 * t.n << ")"; break;
        case AlgebraKind::NoncompactB: os << "so(2," << 2 * t.n + 1 << ")"; break;
        case AlgebraKind::NoncompactD: os << "so(2," << 2 * t.n << ")"; break;
    }
    return os.str();
}

LieType parse_lie(const std::string& s) {
    std::string body = s;
    if (body.rfind("so", 0) != 0) throw ContractError("parse_lie: expected so... got " + s);
    body = body.substr(2);
    auto parse_int = [&s](const std::string& digits) {
        if (digits.empty()) throw ContractError("parse_lie: bad integer in " + s);
        for (char ch : digits)
            if (ch < '0' || ch > '9') throw ContractError("parse_lie: bad integer in " + s);
        return std::stoi(digits);
    };
    int p = 0, q = 0;
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw ContractError("parse_lie: unbalanced parens in " + s);
        body = body.substr(1, body.size() - 2);
        auto comma = body.find(',');
        if (comma == std::string::npos) {
            p = parse_int(body);
            q = 0;
        } else {
            p = parse_int(body.substr(0, comma));
            q = parse_int(body.substr(comma + 1));
        }
    } else {
        p = parse_int(body);
    }
    if (q == 0) {
        int d = p;
        if (d >= 3 && d % 2 == 1) return LieType{AlgebraKind::CompactB, (d - 1) / 2};
        if (d >= 4 && d % 2 == 0) return LieType{AlgebraKind::CompactD, d / 2};
        throw ContractError("parse_lie: unsupported compact dimension in " + s);
    }
    if (p != 2) throw ContractError("parse_lie: only so(2,q) noncompact forms supported, got " + s);
    if (q >= 3 && q % 2 == 1) return LieType{AlgebraKind::NoncompactB, (q - 1) / 2};
    if (q >= 2 && q % 2 == 0) return LieType{AlgebraKind::NoncompactD, q / 2};
    throw ContractError("parse_lie: unsupported noncompact dimension in " + s);
}

std::vector<int> cartan_indices(const LieType& t) {
    validate_type(t);
    std::vector<int> out;
    for (int i = is_compact(t.kind) ? 1 : 0; i <= t.n; ++i) out.push_back(i);
    return out;
}

Root Root::operator-() const {
    Root r = *this;
    for (int& v : r.e) v = -v;
    return r;
}

bool Root::is_positive() const {
    for (int v : e) {
        if (v > 0) return true;
        if (v < 0) return false;
    }
    return false;
}

bool Root::is_short() const {
    int nz = 0;
    for (int v : e) nz += (v != 0);
    return nz == 1;
}

std::string root_to_string(const Root& r) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < r.e.size(); ++i) {
        if (r.e[i] == 0) continue;
        if (r.e[i] > 0 && !first) os << "+";
        if (r.e[i] < 0) os << "-";
        os << "e" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<Root> positive_roots(const LieType& t) {
    validate_type(t);
    int r = rank(t);
    std::vector<Root> out;
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            for (int sb : {-1, 1}) {
                Root root;
                root.e.assign(r, 0);
                root.e[a] = 1;
                root.e[b] = sb;
                out.push_back(root);
            }
    if (has_short_roots(t.kind))
        for (int a = 0; a < r; ++a) {
            Root root;
            root.e.assign(r, 0);
            root.e[a] = 1;
            out.push_back(root);
        }
    return out;
}

int root_height(const LieType& t, const Root& root) {
    if (!root.is_positive()) return -root_height(t, -root);
    int r = rank(t);
    // Positions of the nonzero entries, 1-based.
    int a = -1, b = -1;
    for (int i = 0; i < r; ++i) {
        if (root.e[i] == 0) continue;
        if (a < 0)
            a = i + 1;
        else
            b = i + 1;
    }
    if (a < 0) throw ContractError("root_height: zero root");
    bool btype = has_short_roots(t.kind);
    if (b < 0) {
        if (!btype) throw ContractError("root_height: short root in D-type");
        return r - a + 1;
    }
    if (root.e[b - 1] < 0) return b - a;
    return btype ? 2 * r - a - b + 2 : 2 * r - a - b;
}

void mc_add(const Signature& sig, MCombo& c, int a, int b, const GaussianRational& coeff) {
    if (coeff.is_zero()) return;
    if (a == b) return;  // M_{aa} = 0
    GaussianRational v = coeff;
    if (sig.position(a) > sig.position(b)) {
        std::swap(a, b);
        v = -v;
    }
    auto key = std::make_pair(a, b);
    auto it = c.find(key);
    if (it == c.end())
        c.emplace(key, v);
    else {
        it->second += v;
        if (it->second.is_zero()) c.erase(it);
    }
}

MCombo mc_scale(const MCombo& c, const GaussianRational& s) {
    MCombo out;
    if (s.is_zero()) return out;
    for (const auto& [k, v] : c) {
        GaussianRational w = v * s;
        if (!w.is_zero()) out.emplace(k, w);
    }
    return out;
}

MCombo mc_sum(const MCombo& a, const MCombo& b) {
    MCombo out = a;
    for (const auto& [k, v] : b) {
        auto it = out.find(k);
        if (it == out.end())
            out.emplace(k, v);
        else {
            it->second += v;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

bool mc_is_zero(const MCombo& c) { return c.empty(); }

MCombo bracket_m(const Signature& sig, const MCombo& x, const MCombo& y) {
    MCombo out;
    const GaussianRational neg_i = -GaussianRational::i();
    for (const auto& [pq, cx] : x)
        for (const auto& [rs, cy] : y) {
            int a = pq.first, b = pq.second, c = rs.first, d = rs.second;
            GaussianRational f = cx * cy * neg_i;
            // [M_ab, M_cd] = -i(eta_bc M_ad - eta_ac M_bd - eta_bd M_ac + eta_ad M_bc)
            if (b == c) mc_add(sig, out, a, d, f * GaussianRational(sig.eta(b)));
            if (a == c) mc_add(sig, out, b, d, -(f * GaussianRational(sig.eta(a))));
            if (b == d) mc_add(sig, out, a, c, -(f * GaussianRational(sig.eta(b))));
            if (a == d) mc_add(sig, out, b, c, f * GaussianRational(sig.eta(a)));
        }
    return out;
}

MCombo mc_dagger(const MCombo& c) {
    MCombo out;
    for (const auto& [k, v] : c) out.emplace(k, v.conj());
    return out;
}

ExactMatrix realize_combo(const MatrixRep& rep, const MCombo& c) {
    ExactMatrix out(rep.dim, rep.dim);
    for (const auto& [k, v] : c) out = mat_add(out, mat_scale(v, rep.M(k.first, k.second)));
    return out;
}

const MCombo& CartanDictionary::h(int i) const {
    auto it = h_defs.find(i);
    if (it == h_defs.end()) throw ContractError("CartanDictionary: no such H index");
    return it->second;
}

const MCombo& CartanDictionary::e(const Root& r) const {
    auto it = e_defs.find(r);
    if (it == e_defs.end()) throw ContractError("CartanDictionary: no such root " + root_to_string(r));
    return it->second;
}

// Label pair (2j-1, 2j) attached to Cartan index j; index 0 lands on the
// noncompact labels (-1, 0).
static std::pair<int, int> index_labels(int j) { return {2 * j - 1, 2 * j}; }

MCombo pair_root_vector(const Signature& sig, int j, int k, int ej, int ek) {
    if (j == k) throw ContractError("pair_root_vector: indices must differ");
    auto [aj, bj] = index_labels(j);
    auto [ak, bk] = index_labels(k);
    const GaussianRational half(Rational(1, 2));
    const GaussianRational i = GaussianRational::i();
    MCombo out;
    mc_add(sig, out, aj, ak, half);
    mc_add(sig, out, bj, ak, i * GaussianRational(ej) * half);
    mc_add(sig, out, aj, bk, i * GaussianRational(ek) * half);
    mc_add(sig, out, bj, bk, -(GaussianRational(ej * ek) * half));
    return out;
}

// Unnormalized short-root vector for eta e^j; last label carries the odd
// coordinate.
static MCombo short_root_combo(const Signature& sig, int j, int ej, int last_label) {
    auto [aj, bj] = index_labels(j);
    MCombo out;
    mc_add(sig, out, aj, last_label, GaussianRational(1));
    mc_add(sig, out, bj, last_label, GaussianRational::i() * GaussianRational(ej));
    return out;
}

CartanDictionary build_dictionary(const LieType& t) {
    validate_type(t);
    CartanDictionary dict;
    dict.type = t;
    Signature sig = signature_of(t);
    bool compact = is_compact(t.kind);
    std::vector<int> idx = cartan_indices(t);

    for (int i : idx) {
        auto [a, b] = index_labels(i);
        MCombo h;
        bool negated = !compact && i != 0;
        mc_add(sig, h, a, b, GaussianRational(negated ? -1 : 1));
        dict.h_defs.emplace(i, std::move(h));
    }

    int last_label = 2 * t.n + 1;  // only used by B-type families
    int r = rank(t);
    for (const Root& root : positive_roots(t)) {
        // Cartan indices of the nonzero entries.
        int ja = -1, jb = -1;
        for (int pos = 0; pos < r; ++pos) {
            if (root.e[pos] == 0) continue;
            if (ja < 0)
                ja = idx[pos];
            else
                jb = idx[pos];
        }
        MCombo plus, minus;
        if (jb < 0) {
            plus = short_root_combo(sig, ja, 1, last_label);
            minus = short_root_combo(sig, ja, -1, last_label);
        } else {
            int sign_b = 0;
            for (int pos = r - 1; pos >= 0; --pos)
                if (root.e[pos] != 0) {
                    sign_b = root.e[pos];
                    break;
                }
            plus = pair_root_vector(sig, ja, jb, 1, sign_b);
            minus = pair_root_vector(sig, ja, jb, -1, -sign_b);
        }
        dict.e_defs.emplace(root, std::move(plus));
        dict.e_defs.emplace(-root, std::move(minus));
    }
    return dict;
}

bool all_passed(const std::vector<CartanCheck>& checks) {
    for (const auto& c : checks)
        if (c.status == "fail") return false;
    return true;
}

std::vector<CartanCheck> verify_cartan_relations(const CartanDictionary& dict, const MatrixRep& rep) {
    std::vector<CartanCheck> out;
    const LieType& t = dict.type;
    Signature sig = signature_of(t);
    if (!(rep.sig == sig)) throw ContractError("verify_cartan_relations: signature mismatch");
    std::vector<int> idx = cartan_indices(t);
    int r = rank(t);

    std::map<int, ExactMatrix> h_mat;
    for (int i : idx) h_mat.emplace(i, realize_combo(rep, dict.h(i)));
    std::map<Root, ExactMatrix> e_mat;
    for (const auto& [root, combo] : dict.e_defs) e_mat.emplace(root, realize_combo(rep, combo));

    {
        // [H_i, E_alpha] = alpha_i E_alpha for every root, both signs.
        bool ok = true;
        std::string detail;
        for (const auto& [root, em] : e_mat) {
            for (int pos = 0; pos < r; ++pos) {
                int i = idx[pos];
                ExactMatrix lhs = commutator(h_mat.at(i), em);
                ExactMatrix rhs = mat_scale(GaussianRational(root.e[pos]), em);
                if (!(lhs == rhs)) {
                    ok = false;
                    detail = "[H_" + std::to_string(i) + ", E_{" + root_to_string(root) + "}] != alpha_i E";
                    break;
                }
            }
            if (!ok) break;
        }
        out.push_back({"h-root-bracket", ok ? "pass" : "fail", detail});
    }

    {
        // Displayed [E_alpha, E_{-alpha}] identities over positive roots.
        bool ok = true;
        std::string detail;
        for (const auto& [root, em] : e_mat) {
            if (!root.is_positive()) continue;
            ExactMatrix lhs = commutator(em, e_mat.at(-root));
            ExactMatrix rhs(rep.dim, rep.dim);
            // Roots touching the noncompact index 0 negate the whole H side.
            bool compact = is_compact(t.kind);
            int sign = (!compact && root.e[0] != 0) ? -1 : 1;
            // Unnormalized short vectors double the right-hand side.
            int scale = root.is_short() ? 2 : 1;
            for (int pos = 0; pos < r; ++pos) {
                if (root.e[pos] == 0) continue;
                GaussianRational coeff(sign * scale * root.e[pos]);
                rhs = mat_add(rhs, mat_scale(coeff, h_mat.at(idx[pos])));
            }
            if (!(lhs == rhs)) {
                ok = false;
                detail = "[E, E_-] mismatch at " + root_to_string(root);
                break;
            }
        }
        out.push_back({"opposite-root-bracket", ok ? "pass" : "fail", detail});
    }

    if (rep.unitary) {
        bool ok = true;
        std::string detail;
        for (int i : idx)
            if (!(adjoint(h_mat.at(i)) == h_mat.at(i))) {
                ok = false;
                detail = "H_" + std::to_string(i) + " not hermitian";
            }
        for (const auto& [root, em] : e_mat) {
            if (!root.is_positive()) continue;
            if (!(adjoint(em) == e_mat.at(-root))) {
                ok = false;
                detail = "(E_alpha)^dagger != E_{-alpha} at " + root_to_string(root);
                break;
            }
        }
        out.push_back({"hermiticity", ok ? "pass" : "fail", detail});
    } else {
        out.push_back({"hermiticity", "skip", "non-unitary representation"});
    }

    {
        // Dictionary spans the full M-space: rank over the exact field.
        int d = sig.dim();
        int dim_so = d * (d - 1) / 2;
        std::map<std::pair<int, int>, int> m_index;
        int next = 0;
        for (int ia = 0; ia < d; ++ia)
            for (int ib = ia + 1; ib < d; ++ib) m_index[{sig.labels[ia], sig.labels[ib]}] = next++;
        int cols = static_cast<int>(idx.size() + dict.e_defs.size());
        ExactMatrix dm(dim_so, cols);
        int col = 0;
        auto put = [&](const MCombo& c) {
            for (const auto& [k, v] : c) dm.at(m_index.at(k), col) = v;
            ++col;
        };
        for (int i : idx) put(dict.h(i));
        for (const auto& [root, combo] : dict.e_defs) {
            (void)root;
            put(combo);
        }
        bool ok = (cols == dim_so) && (mat_rank(dm) == dim_so);
        out.push_back({"dictionary-rank", ok ? "pass" : "fail",
                       ok ? "" : "dictionary does not span the generator space"});
    }
    return out;
}

int CartanAlgebra::h_id(int cartan_index) const {
    for (int i = 0; i < rank_; ++i)
        if (cartan_idx_[i] == cartan_index) return i;
    throw ContractError("CartanAlgebra: bad Cartan index");
}

int CartanAlgebra::e_id(const Root& r) const {
    auto it = root_ids_.find(r);
    if (it == root_ids_.end()) throw ContractError("CartanAlgebra: unknown root " + root_to_string(r));
    return it->second;
}

int CartanAlgebra::h_index_of(int id) const {
    if (!is_h(id)) throw ContractError("CartanAlgebra: not an H id");
    return cartan_idx_[id];
}

const Root& CartanAlgebra::root_of(int id) const {
    if (is_h(id)) throw ContractError("CartanAlgebra: not an E id");
    return gens_[id].root;
}

const MCombo& CartanAlgebra::combo_of(int id) const { return gens_[id].combo; }

std::string CartanAlgebra::gen_name(int id) const {
    if (is_h(id)) return "H_" + std::to_string(cartan_idx_[id]);
    return "E_{" + root_to_string(gens_[id].root) + "}";
}

CartanAlgebra::CartanAlgebra(const LieType& t)
    : type_(t), sig_(signature_of(t)), dict_(build_dictionary(t)) {
    cartan_idx_ = cartan_indices(t);
    rank_ = static_cast<int>(cartan_idx_.size());
    for (int i : cartan_idx_) gens_.push_back({true, i, Root{}, dict_.h(i)});

    std::vector<Root> pos = positive_roots(t);
    auto by_height = [&](const Root& a, const Root& b) {
        int ha = root_height(t, a), hb = root_height(t, b);
        if (ha != hb) return ha < hb;
        return a < b;
    };
    std::sort(pos.begin(), pos.end(), by_height);
    for (const Root& root : pos) {
        root_ids_[root] = static_cast<int>(gens_.size());
        gens_.push_back({false, -1, root, dict_.e(root)});
    }
    for (const Root& root : pos) {
        Root neg = -root;
        root_ids_[neg] = static_cast<int>(gens_.size());
        gens_.push_back({false, -1, neg, dict_.e(neg)});
    }

    int d = sig_.dim();
    for (int ia = 0; ia < d; ++ia)
        for (int ib = ia + 1; ib < d; ++ib) {
            m_index_[{sig_.labels[ia], sig_.labels[ib]}] = static_cast<int>(m_basis_.size());
            m_basis_.emplace_back(sig_.labels[ia], sig_.labels[ib]);
        }
    int dim_so = static_cast<int>(m_basis_.size());
    if (dim_so != num_gens()) throw ContractError("CartanAlgebra: generator count mismatch");

    ExactMatrix dm(dim_so, dim_so);
    for (int g = 0; g < num_gens(); ++g)
        for (const auto& [k, v] : gens_[g].combo) dm.at(m_index_.at(k), g) = v;
    inverse_ = mat_inverse(dm);
}

CartanAlgebra::HECombo CartanAlgebra::to_he(const MCombo& c) const {
    HECombo out;
    for (const auto& [k, v] : c) {
        int row = m_index_.at(k);
        for (int g = 0; g < num_gens(); ++g) {
            const GaussianRational& w = inverse_.at(g, row);
            if (w.is_zero()) continue;
            auto it = out.find(g);
            if (it == out.end())
                out.emplace(g, w * v);
            else {
                it->second += w * v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

CartanAlgebra::HECombo CartanAlgebra::m_in_he(int label_a, int label_b) const {
    MCombo c;
    mc_add(sig_, c, label_a, label_b, GaussianRational(1));
    return to_he(c);
}

const CartanAlgebra::HECombo& CartanAlgebra::bracket(int a, int b) const {
    auto key = std::make_pair(a, b);
    auto it = bracket_cache_.find(key);
    if (it != bracket_cache_.end()) return it->second;
    MCombo br = bracket_m(sig_, gens_[a].combo, gens_[b].combo);
    auto [ins, ok] = bracket_cache_.emplace(key, to_he(br));
    (void)ok;
    return ins->second;
}

static bool dominant_impl(const LieType& t, const std::vector<Rational>& w) {
    size_t r = static_cast<size_t>(rank(t));
    if (w.size() != r) throw ContractError("is_dominant: weight length mismatch");
    bool compact = is_compact(t.kind);
    std::vector<Rational> v;
    if (compact)
        v = w;
    else {
        v.push_back(-w[0]);
        for (size_t i = 1; i < r; ++i) v.push_back(w[i]);
    }
    bool btype = has_short_roots(t.kind);
    for (size_t i = 0; i + 1 < v.size(); ++i) {
        Rational next = v[i + 1];
        if (!btype && i + 2 == v.size() && next < 0) next = -next;
        if (v[i] < next) return false;
    }
    if (btype && v.back() < 0) return false;
    return true;
}

bool is_dominant(const LieType& t, const std::vector<Rational>& w) { return dominant_impl(t, w); }

bool is_dominant(const LieType& t, const Weight& w) {
    return dominant_impl(t, weight_to_rationals(w));
}

std::vector<Rational> weight_to_rationals(const Weight& w) {
    std::vector<Rational> out;
    out.reserve(w.size());
    for (const HalfInt& h : w) out.push_back(h.to_rational());
    return out;
}

}  // namespace relkit
