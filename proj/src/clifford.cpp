#include "relkit/clifford.hpp"

#include <bit>

namespace relkit {

int Signature::position(int label) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    throw ContractError("label " + std::to_string(label) + " not in signature " + to_string());
}

Signature Signature::general(int p, int q) {
    if (p < 0 || q < 0 || p + q < 2) throw ContractError("signature needs p+q >= 2");
    Signature s;
    s.p = p;
    s.q = q;
    for (int i = 1; i <= p + q; ++i) s.labels.push_back(i);
    return s;
}

Signature Signature::split2(int q) {
    if (q < 1) throw ContractError("split2 needs q >= 1");
    Signature s;
    s.p = 2;
    s.q = q;
    s.labels.push_back(-1);
    s.labels.push_back(0);
    for (int i = 1; i <= q; ++i) s.labels.push_back(i);
    return s;
}

std::string Signature::to_string() const {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

void CliffordElement::add_term(Blade b, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms.find(b);
    if (it == terms.end()) {
        terms.emplace(b, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

CliffordElement c_zero(const Signature& sig) { return CliffordElement(sig); }

CliffordElement c_scalar(const Signature& sig, const GaussianRational& c) {
    CliffordElement e(sig);
    e.add_term(0, c);
    return e;
}

CliffordElement x_element(int label, const Signature& sig) {
    CliffordElement e(sig);
    e.add_term(Blade(1) << sig.position(label), GaussianRational(1));
    return e;
}

CliffordElement c_add(const CliffordElement& a, const CliffordElement& b) {
    if (a.sig != b.sig) throw ContractError("clifford add: signature mismatch");
    CliffordElement c = a;
    for (const auto& [bl, v] : b.terms) c.add_term(bl, v);
    return c;
}

CliffordElement c_sub(const CliffordElement& a, const CliffordElement& b) {
    if (a.sig != b.sig) throw ContractError("clifford sub: signature mismatch");
    CliffordElement c = a;
    for (const auto& [bl, v] : b.terms) c.add_term(bl, -v);
    return c;
}

CliffordElement c_scale(const GaussianRational& s, const CliffordElement& a) {
    CliffordElement c(a.sig);
    if (s.is_zero()) return c;
    for (const auto& [bl, v] : a.terms) c.terms.emplace(bl, s * v);
    return c;
}

namespace {

// e_A e_B = (-1)^t prod_{m in A cap B} (-eta_m) e_{A xor B}, where t counts
// generator transpositions needed to interleave B into A.
std::pair<Blade, GaussianRational> mul_blades(Blade a, Blade b, const Signature& sig) {
    int swaps = 0;
    GaussianRational scalar(1);
    for (int j = 0; j < sig.dim(); ++j) {
        if (!(b >> j & 1)) continue;
        swaps += std::popcount(a >> (j + 1));
        if (a >> j & 1) scalar *= GaussianRational(-sig.eta_at(j));
    }
    if (swaps & 1) scalar = -scalar;
    return {a ^ b, scalar};
}

}  // namespace

CliffordElement blade_mul(const CliffordElement& a, const CliffordElement& b, const Signature& sig) {
    if (a.sig != sig || b.sig != sig) throw ContractError("blade_mul: signature mismatch");
    CliffordElement c(sig);
    for (const auto& [ba, va] : a.terms)
        for (const auto& [bb, vb] : b.terms) {
            auto [bl, s] = mul_blades(ba, bb, sig);
            c.add_term(bl, va * vb * s);
        }
    return c;
}

CliffordElement make_M(int mu, int nu, const Signature& sig) {
    if (mu == nu) return c_zero(sig);
    CliffordElement prod = blade_mul(x_element(mu, sig), x_element(nu, sig), sig);
    GaussianRational half_i(Rational(0), Rational(1, 2));
    return c_scale(half_i, prod);
}

ExactMatrix MatrixRep::M(int mu, int nu) const {
    if (mu == nu) return ExactMatrix::zero(dim, dim);
    int pm = sig.position(mu), pn = sig.position(nu);
    if (pm < pn) return mats.at({mu, nu});
    return mat_scale(GaussianRational(-1), mats.at({nu, mu}));
}

void MatrixRep::set(int mu, int nu, ExactMatrix m) {
    int pm = sig.position(mu), pn = sig.position(nu);
    if (pm == pn) throw ContractError("MatrixRep::set needs distinct labels");
    if (pm < pn)
        mats[{mu, nu}] = std::move(m);
    else
        mats[{nu, mu}] = mat_scale(GaussianRational(-1), m);
}

namespace {

template <typename MFn, typename ZeroFn, typename AddFn, typename ScaleFn, typename EqFn>
std::vector<BracketViolation> check_bracket_generic(const Signature& sig, MFn Mof, ZeroFn zero,
                                                    AddFn bracket, ScaleFn scale, EqFn equal) {
    std::vector<BracketViolation> out;
    const auto& L = sig.labels;
    int d = sig.dim();
    GaussianRational neg_i(Rational(0), Rational(-1));
    for (int ia = 0; ia < d; ++ia)
        for (int ib = ia + 1; ib < d; ++ib)
            for (int ic = 0; ic < d; ++ic)
                for (int id = ic + 1; id < d; ++id) {
                    int a = L[ia], b = L[ib], c = L[ic], dd = L[id];
                    auto lhs = bracket(Mof(a, b), Mof(c, dd));
                    auto rhs = zero();
                    auto addm = [&](int s, int e1, int e2, int f1, int f2) {
                        // eta_{e1,e2} is diagonal
                        if (e1 != e2) return;
                        rhs = scale(GaussianRational(s * sig.eta(e1)), Mof(f1, f2), rhs);
                    };
                    addm(+1, b, c, a, dd);
                    addm(-1, a, c, b, dd);
                    addm(-1, b, dd, a, c);
                    addm(+1, a, dd, b, c);
                    rhs = scale(neg_i, rhs, zero());
                    if (!equal(lhs, rhs))
                        out.push_back({a, b, c, dd, "commutator identity violated"});
                }
    return out;
}

}  // namespace

std::vector<BracketViolation> check_so_bracket(const MatrixRep& rep) {
    auto Mof = [&](int m, int n) { return rep.M(m, n); };
    auto zero = [&]() { return ExactMatrix::zero(rep.dim, rep.dim); };
    auto bracket = [](const ExactMatrix& x, const ExactMatrix& y) { return commutator(x, y); };
    auto scale = [](const GaussianRational& s, const ExactMatrix& x, const ExactMatrix& acc) {
        return mat_add(acc, mat_scale(s, x));
    };
    auto equal = [](const ExactMatrix& x, const ExactMatrix& y) { return x == y; };
    return check_bracket_generic(rep.sig, Mof, zero, bracket, scale, equal);
}

std::vector<BracketViolation> check_so_bracket_blades(const Signature& sig) {
    auto Mof = [&](int m, int n) { return make_M(m, n, sig); };
    auto zero = [&]() { return c_zero(sig); };
    auto bracket = [&](const CliffordElement& x, const CliffordElement& y) {
        return c_sub(blade_mul(x, y, sig), blade_mul(y, x, sig));
    };
    auto scale = [](const GaussianRational& s, const CliffordElement& x, const CliffordElement& acc) {
        return c_add(acc, c_scale(s, x));
    };
    auto equal = [](const CliffordElement& x, const CliffordElement& y) { return x == y; };
    return check_bracket_generic(sig, Mof, zero, bracket, scale, equal);
}

namespace {

ExactMatrix pauli(char which) {
    ExactMatrix m(2, 2);
    GaussianRational i = GaussianRational::i();
    switch (which) {
        case 'x':
            m.at(0, 1) = GaussianRational(1);
            m.at(1, 0) = GaussianRational(1);
            break;
        case 'y':
            m.at(0, 1) = -i;
            m.at(1, 0) = i;
            break;
        case 'z':
            m.at(0, 0) = GaussianRational(1);
            m.at(1, 1) = GaussianRational(-1);
            break;
        default:
            throw ContractError("unknown pauli");
    }
    return m;
}

// Hermitian gammas with gamma^2 = +1 for even dimension 2k, size 2^k.
std::vector<ExactMatrix> gammas_even(int k) {
    std::vector<ExactMatrix> g = {pauli('x'), pauli('y')};
    for (int step = 2; step <= k; ++step) {
        std::vector<ExactMatrix> next;
        next.reserve(2 * step);
        for (auto& gj : g) next.push_back(tensor(gj, pauli('z')));
        ExactMatrix id = ExactMatrix::identity(1 << (step - 1));
        next.push_back(tensor(id, pauli('x')));
        next.push_back(tensor(id, pauli('y')));
        g = std::move(next);
    }
    return g;
}

ExactMatrix sigma_z_power(int k) {
    ExactMatrix m = ExactMatrix::identity(1);
    for (int i = 0; i < k; ++i) m = tensor(m, pauli('z'));
    return m;
}

}  // namespace

GammaModel gamma_model(const Signature& sig) {
    int d = sig.dim();
    int k = d / 2;
    GammaModel model;
    model.gamma = gammas_even(k);
    if (d % 2 == 1) model.gamma.push_back(sigma_z_power(k));
    model.chirality = sigma_z_power(k);
    int size = 1 << k;
    GaussianRational i = GaussianRational::i();
    for (int pos = 0; pos < d; ++pos) {
        if (sig.eta_at(pos) == 1)
            model.X.push_back(mat_scale(i, model.gamma[pos]));
        else
            model.X.push_back(model.gamma[pos]);
    }
    model.rep.sig = sig;
    model.rep.dim = size;
    model.rep.unitary = (sig.q == 0);
    model.rep.tag = "gamma" + sig.to_string();
    GaussianRational half_i(Rational(0), Rational(1, 2));
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            model.rep.set(sig.labels[a], sig.labels[b],
                          mat_scale(half_i, mat_mul(model.X[a], model.X[b])));
    return model;
}

MatrixRep gamma_rep(const Signature& sig) { return gamma_model(sig).rep; }

ExactMatrix realize_element(const CliffordElement& el, const GammaModel& model) {
    int n = model.rep.dim;
    ExactMatrix out = ExactMatrix::zero(n, n);
    for (const auto& [blade, coeff] : el.terms) {
        ExactMatrix m = ExactMatrix::identity(n);
        for (int pos = 0; pos < el.sig.dim(); ++pos)
            if (blade >> pos & 1) m = mat_mul(m, model.X[pos]);
        out = mat_add(out, mat_scale(coeff, m));
    }
    return out;
}

}  // namespace relkit
