#include "relkit/matrix.hpp"

namespace relkit {

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : e)
        if (!v.is_zero()) return false;
    return true;
}

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols != b.rows) throw ContractError("mat_mul: shape mismatch");
    ExactMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const GaussianRational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols; ++j) {
                const GaussianRational& bkj = b.at(k, j);
                if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

ExactMatrix mat_add(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw ContractError("mat_add: shape mismatch");
    ExactMatrix c = a;
    for (size_t i = 0; i < c.e.size(); ++i) c.e[i] += b.e[i];
    return c;
}

ExactMatrix mat_sub(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw ContractError("mat_sub: shape mismatch");
    ExactMatrix c = a;
    for (size_t i = 0; i < c.e.size(); ++i) c.e[i] -= b.e[i];
    return c;
}

ExactMatrix mat_scale(const GaussianRational& s, const ExactMatrix& a) {
    ExactMatrix c = a;
    for (auto& v : c.e) v *= s;
    return c;
}

ExactMatrix adjoint(const ExactMatrix& a) {
    ExactMatrix c(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) c.at(j, i) = a.at(i, j).conj();
    return c;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) {
    return mat_sub(mat_mul(a, b), mat_mul(b, a));
}

ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b) {
    return mat_add(mat_mul(a, b), mat_mul(b, a));
}

ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix c(a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            const GaussianRational& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (int k = 0; k < b.rows; ++k)
                for (int l = 0; l < b.cols; ++l) {
                    const GaussianRational& bkl = b.at(k, l);
                    if (!bkl.is_zero()) c.at(i * b.rows + k, j * b.cols + l) = aij * bkl;
                }
        }
    return c;
}

bool is_hermitian(const ExactMatrix& a) {
    if (!a.is_square()) return false;
    for (int i = 0; i < a.rows; ++i)
        for (int j = i; j < a.cols; ++j)
            if (a.at(i, j) != a.at(j, i).conj()) return false;
    return true;
}

std::optional<GaussianRational> as_scalar(const ExactMatrix& a) {
    if (!a.is_square() || a.rows == 0) return std::nullopt;
    GaussianRational s = a.at(0, 0);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            if (i == j && a.at(i, j) != s) return std::nullopt;
            if (i != j && !a.at(i, j).is_zero()) return std::nullopt;
        }
    return s;
}

Inertia inertia(const ExactMatrix& h0) {
    if (!is_hermitian(h0)) throw ContractError("inertia: input not hermitian");
    ExactMatrix h = h0;
    int n = h.rows;
    std::vector<bool> done(n, false);
    Inertia out;
    int remaining = n;
    while (remaining > 0) {
        int piv = -1;
        for (int k = 0; k < n; ++k)
            if (!done[k] && !h.at(k, k).is_zero()) {
                piv = k;
                break;
            }
        if (piv < 0) {
            // All remaining diagonal entries vanish; manufacture a nonzero one
            // by the congruence h -> g' h g with g = I + alpha*E_{kj}.
            int jj = -1, kk = -1;
            for (int j = 0; j < n && jj < 0; ++j)
                for (int k = 0; k < n && jj < 0; ++k)
                    if (j != k && !done[j] && !done[k] && !h.at(j, k).is_zero()) {
                        jj = j;
                        kk = k;
                    }
            if (jj < 0) {
                out.n_zero += remaining;
                return out;
            }
            GaussianRational alpha =
                h.at(jj, kk).re != 0 ? GaussianRational(1) : GaussianRational::i();
            for (int c = 0; c < n; ++c) h.at(jj, c) += alpha.conj() * h.at(kk, c);
            for (int r = 0; r < n; ++r) h.at(r, jj) += alpha * h.at(r, kk);
            continue;
        }
        GaussianRational p = h.at(piv, piv);  // real by hermiticity
        if (p.re > 0)
            ++out.n_pos;
        else
            ++out.n_neg;
        for (int i = 0; i < n; ++i) {
            if (done[i] || i == piv || h.at(i, piv).is_zero()) continue;
            GaussianRational f = h.at(i, piv) / p;
            for (int j = 0; j < n; ++j)
                if (!done[j]) h.at(i, j) -= f * h.at(piv, j);
        }
        for (int j = 0; j < n; ++j)
            if (!done[j] && j != piv) h.at(piv, j) = GaussianRational();
        for (int i = 0; i < n; ++i)
            if (!done[i] && i != piv) h.at(i, piv) = GaussianRational();
        done[piv] = true;
        --remaining;
    }
    return out;
}

int mat_rank(const ExactMatrix& a) {
    ExactMatrix m = a;
    int rank = 0;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!m.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        GaussianRational inv = GaussianRational(1) / m.at(r, c);
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            GaussianRational f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
        ++rank;
    }
    return rank;
}

ExactMatrix mat_inverse(const ExactMatrix& a) {
    if (a.rows != a.cols) throw ContractError("mat_inverse: not square");
    int n = a.rows;
    ExactMatrix m = a;
    ExactMatrix inv = ExactMatrix::identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!m.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw ContractError("mat_inverse: singular matrix");
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        GaussianRational s = GaussianRational(1) / m.at(c, c);
        for (int j = 0; j < n; ++j) {
            m.at(c, j) *= s;
            inv.at(c, j) *= s;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || m.at(i, c).is_zero()) continue;
            GaussianRational f = m.at(i, c);
            for (int j = 0; j < n; ++j) {
                m.at(i, j) -= f * m.at(c, j);
                inv.at(i, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

SparseVec sv_add(const SparseVec& a, const SparseVec& b) {
    SparseVec c = a;
    sv_add_scaled(c, GaussianRational(1), b);
    return c;
}

SparseVec sv_scale(const GaussianRational& s, const SparseVec& a) {
    SparseVec c;
    if (s.is_zero()) return c;
    for (const auto& [k, v] : a) c[k] = s * v;
    return c;
}

void sv_add_scaled(SparseVec& acc, const GaussianRational& s, const SparseVec& a) {
    if (s.is_zero()) return;
    for (const auto& [k, v] : a) {
        auto it = acc.find(k);
        if (it == acc.end()) {
            acc.emplace(k, s * v);
        } else {
            it->second += s * v;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

GaussianRational sv_dot(const SparseVec& a, const SparseVec& b) {
    GaussianRational out;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first)
            ++ia;
        else if (ib->first < ia->first)
            ++ib;
        else {
            out += ia->second.conj() * ib->second;
            ++ia;
            ++ib;
        }
    }
    return out;
}

void EchelonBasis::reduce(SparseVec& v, std::vector<GaussianRational>& coords) const {
    coords.assign(inserted_.size(), GaussianRational());
    auto it = v.begin();
    while (it != v.end()) {
        if (it->second.is_zero()) {
            it = v.erase(it);
            continue;
        }
        auto f = lead_row_.find(it->first);
        if (f == lead_row_.end()) {
            ++it;
            continue;
        }
        const Row& row = rows_[f->second];
        GaussianRational coeff = it->second;
        uint64_t key = it->first;
        // row.vec's leading index is its smallest, so only keys > key are touched
        for (const auto& [idx, val] : row.vec) v[idx] -= coeff * val;
        for (size_t k = 0; k < row.coords.size(); ++k) coords[k] += coeff * row.coords[k];
        it = v.erase(v.find(key));
    }
}

bool EchelonBasis::insert(const SparseVec& v) {
    SparseVec res = v;
    std::vector<GaussianRational> coords;
    reduce(res, coords);
    if (res.empty()) return false;
    GaussianRational lc = res.begin()->second;
    Row row;
    row.lead = res.begin()->first;
    row.vec = sv_scale(GaussianRational(1) / lc, res);
    row.coords.assign(inserted_.size() + 1, GaussianRational());
    for (size_t k = 0; k < coords.size(); ++k) row.coords[k] = -coords[k] / lc;
    row.coords[inserted_.size()] = GaussianRational(1) / lc;
    inserted_.push_back(v);
    lead_row_[row.lead] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

bool EchelonBasis::contains(const SparseVec& v) const {
    SparseVec res = v;
    std::vector<GaussianRational> coords;
    reduce(res, coords);
    return res.empty();
}

std::optional<std::vector<GaussianRational>> EchelonBasis::coordinates(const SparseVec& v) const {
    SparseVec res = v;
    std::vector<GaussianRational> coords;
    reduce(res, coords);
    if (!res.empty()) return std::nullopt;
    coords.resize(inserted_.size(), GaussianRational());
    return coords;
}

}  // namespace relkit
