#include "relkit/compact.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using namespace relkit;

namespace {

Weight mk_w(const std::string& s) { return parse_weight(s); }

std::vector<Rational> rats(const Weight& w) { return weight_to_rationals(w); }

// Every H_i diagonal in the module basis and equal to the recorded weights.
void require_weight_basis(const CompactModule& m) {
    CartanDictionary dict = build_dictionary(m.type);
    for (int i = 1; i <= m.type.n; ++i) {
        ExactMatrix h = realize_combo(m.rep, dict.h(i));
        for (int r = 0; r < m.rep.dim; ++r) {
            for (int c = 0; c < m.rep.dim; ++c) {
                GaussianRational want =
                    (r == c) ? GaussianRational(m.basis_weights[r][i - 1].to_rational()) : GaussianRational();
                REQUIRE((h.at(r, c) - want).is_zero());
            }
        }
    }
}

ExactMatrix block_diag(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix out(a.rows + b.rows, a.cols + b.cols);
    for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < a.cols; ++c) out.at(r, c) = a.at(r, c);
    for (int r = 0; r < b.rows; ++r)
        for (int c = 0; c < b.cols; ++c) out.at(a.rows + r, a.cols + c) = b.at(r, c);
    return out;
}

std::multiset<std::vector<long long>> weight_multiset(const CompactModule& m) {
    std::multiset<std::vector<long long>> out;
    for (const Weight& w : m.basis_weights) {
        std::vector<long long> tw;
        for (const HalfInt& h : w) tw.push_back(h.twice.convert_to<long long>());
        out.insert(tw);
    }
    return out;
}

const CartanCheck& check_named(const std::vector<CartanCheck>& checks, const std::string& name) {
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw std::runtime_error("missing check " + name);
}

}  // namespace

TEST_SUITE("compact") {

TEST_CASE("trivial and spin module shapes") {
    CompactModule t = trivial_module(AlgebraKind::CompactB, 2);
    CHECK(t.rep.dim == 1);
    CHECK(t.highest_weight == mk_w("0,0"));
    CHECK(check_relations(t).passed);
    CHECK(check_relations(t).a.is_zero());

    CompactModule b2 = spinor_module(AlgebraKind::CompactB, 2);
    CHECK(b2.rep.dim == 4);
    CHECK(b2.highest_weight == mk_w("1/2,1/2"));
    CHECK(b2.gram == ExactMatrix::identity(4));
    CHECK(weight_multiset(b2) ==
          std::multiset<std::vector<long long>>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    require_weight_basis(b2);

    CompactModule d2p = spinor_module(AlgebraKind::CompactD, 2, +1);
    CompactModule d2m = spinor_module(AlgebraKind::CompactD, 2, -1);
    CHECK(d2p.rep.dim == 2);
    CHECK(d2m.rep.dim == 2);
    CHECK(d2p.highest_weight == mk_w("1/2,1/2"));
    CHECK(d2m.highest_weight == mk_w("1/2,-1/2"));
    CHECK(weight_multiset(d2p) == std::multiset<std::vector<long long>>{{1, 1}, {-1, -1}});
    CHECK(weight_multiset(d2m) == std::multiset<std::vector<long long>>{{1, -1}, {-1, 1}});
    require_weight_basis(d2p);
    require_weight_basis(d2m);

    CompactModule d3p = spinor_module(AlgebraKind::CompactD, 3, +1);
    CHECK(d3p.rep.dim == 4);
    CHECK(d3p.highest_weight == mk_w("1/2,1/2,1/2"));
    require_weight_basis(d3p);

    CHECK_THROWS_AS(spinor_module(AlgebraKind::CompactB, 2, -1), ContractError);
    CHECK_THROWS_AS(spinor_module(AlgebraKind::NoncompactB, 1), ContractError);
}

TEST_CASE("weyl dimension formula") {
    CHECK(weyl_dim(AlgebraKind::CompactB, mk_w("1/2,1/2")) == 4);
    CHECK(weyl_dim(AlgebraKind::CompactD, mk_w("1,1")) == 3);
    CHECK(weyl_dim(AlgebraKind::CompactB, mk_w("0,0")) == 1);
    CHECK(weyl_dim(AlgebraKind::CompactD, mk_w("0,0,0")) == 1);
    CHECK(weyl_dim(AlgebraKind::CompactB, mk_w("1/2,1/2,1/2")) == 8);
    CHECK(weyl_dim(AlgebraKind::CompactD, mk_w("1/2,1/2,1/2")) == 4);
    CHECK(weyl_dim(AlgebraKind::CompactD, mk_w("1/2,1/2,-1/2")) == 4);
    CHECK(weyl_dim(AlgebraKind::CompactD, mk_w("1,1,1")) == 10);
    CHECK(weyl_dim(AlgebraKind::CompactB, mk_w("1,0")) == 5);
    CHECK(weyl_dim(AlgebraKind::CompactD, mk_w("1,0,0")) == 6);
    CHECK(weyl_dim(AlgebraKind::CompactB, mk_w("1,1")) == 10);
    CHECK_THROWS_AS(weyl_dim(AlgebraKind::CompactB, mk_w("0,1")), ContractError);
    CHECK_THROWS_AS(weyl_dim(AlgebraKind::CompactD, mk_w("1,-2")), ContractError);
    CHECK_THROWS_AS(weyl_dim(AlgebraKind::NoncompactB, mk_w("0,0")), ContractError);
}

TEST_CASE("cartan powers close onto the predicted dimensions") {
    CompactModule s4 = spinor_module(AlgebraKind::CompactD, 2, +1);
    for (int k = 0; k <= 4; ++k) {
        CompactModule m = cartan_power(s4, k);
        CHECK(m.highest_weight == Weight(2, HalfInt::from_twice(k)));
        CHECK(m.rep.dim == weyl_dim(AlgebraKind::CompactD, m.highest_weight));
        Inertia in = inertia(m.gram);
        CHECK(in.n_pos == m.rep.dim);
        CHECK(in.n_zero == 0);
        require_weight_basis(m);
    }
    CHECK(cartan_power(s4, 2).rep.dim == 3);
    CHECK(cartan_power(s4, 1).rep.dim == s4.rep.dim);
    CHECK(cartan_power(s4, 1).highest_weight == s4.highest_weight);

    CompactModule s4m = cartan_power(spinor_module(AlgebraKind::CompactD, 2, -1), 2);
    CHECK(s4m.rep.dim == 3);
    CHECK(s4m.highest_weight == mk_w("1,-1"));
    require_weight_basis(s4m);

    CompactModule s6sq = cartan_power(spinor_module(AlgebraKind::CompactD, 3, +1), 2);
    CHECK(s6sq.rep.dim == 10);
    CHECK(s6sq.highest_weight == mk_w("1,1,1"));
    require_weight_basis(s6sq);

    // Highest weight vector is an eigenvector of every H.
    CartanDictionary dict = build_dictionary(s6sq.type);
    for (int i = 1; i <= 3; ++i) {
        ExactMatrix h = realize_combo(s6sq.rep, dict.h(i));
        for (int r = 0; r < s6sq.rep.dim; ++r) {
            GaussianRational got;
            for (int c = 0; c < s6sq.rep.dim; ++c) got += h.at(r, c) * s6sq.hw_coords[c];
            GaussianRational want = GaussianRational(Rational(1)) * s6sq.hw_coords[r];
            CHECK((got - want).is_zero());
        }
    }
}

TEST_CASE("module generators satisfy the commutation relations") {
    CompactModule s4sq = cartan_power(spinor_module(AlgebraKind::CompactD, 2, +1), 2);
    CHECK(check_so_bracket(s4sq.rep).empty());
    CartanDictionary d2 = build_dictionary(s4sq.type);
    for (const auto& c : verify_cartan_relations(d2, s4sq.rep)) CHECK(c.status != "fail");

    CompactModule s6sq = cartan_power(spinor_module(AlgebraKind::CompactD, 3, +1), 2);
    CHECK(check_so_bracket(s6sq.rep).empty());
    CartanDictionary d3 = build_dictionary(s6sq.type);
    for (const auto& c : verify_cartan_relations(d3, s6sq.rep)) CHECK(c.status != "fail");
}

TEST_CASE("defining module in weight coordinates") {
    CompactModule v5 = vector_module(AlgebraKind::CompactB, 2);
    CHECK(v5.rep.dim == 5);
    CHECK(v5.highest_weight == mk_w("1,0"));
    CHECK(weight_multiset(v5) ==
          std::multiset<std::vector<long long>>{{2, 0}, {0, 2}, {-2, 0}, {0, -2}, {0, 0}});
    require_weight_basis(v5);
    CHECK(check_so_bracket(v5.rep).empty());
    CHECK(module_selfadjoint(v5));
    CHECK_FALSE(check_relations(v5).passed);
    CHECK(!check_relations(v5).first_violation.empty());
    CHECK(casimir_C(v5.rep) == GaussianRational(8));

    CompactModule v6 = vector_module(AlgebraKind::CompactD, 3);
    CHECK(v6.rep.dim == 6);
    require_weight_basis(v6);
    CHECK_FALSE(check_relations(v6).passed);
    CHECK(casimir_C(v6.rep) == GaussianRational(10));

    CompactModule v7 = vector_module(AlgebraKind::CompactB, 3);
    CHECK_FALSE(check_relations(v7).passed);
    CHECK(casimir_C(v7.rep) == GaussianRational(12));
}

TEST_CASE("adjoint module") {
    MatrixRep ad5 = adjoint_rep(LieType{AlgebraKind::CompactB, 2});
    CHECK(ad5.dim == 10);
    CHECK(ad5.unitary);
    CHECK(check_so_bracket(ad5).empty());
    CHECK(casimir_C(ad5) == GaussianRational(12));
    CHECK_FALSE(check_relations(ad5).passed);

    MatrixRep ad7 = adjoint_rep(LieType{AlgebraKind::CompactB, 3});
    CHECK(ad7.dim == 21);
    CHECK_FALSE(check_relations(ad7).passed);
}

TEST_CASE("quadratic relation scalars on spin towers") {
    RelationReport r5 = check_relations(spinor_module(AlgebraKind::CompactB, 2));
    CHECK(r5.passed);
    CHECK(r5.a == GaussianRational(-2));
    CHECK(r5.first_violation.empty());

    RelationReport r7 = check_relations(spinor_module(AlgebraKind::CompactB, 3));
    CHECK(r7.passed);
    CHECK(r7.a == GaussianRational(-3));

    // so(4) tower: scalar -(k^2 + 2k)/2 at the k-th power.
    CompactModule s4 = spinor_module(AlgebraKind::CompactD, 2, +1);
    std::vector<Rational> expect = {Rational(0), Rational(-3, 2), Rational(-4), Rational(-15, 2), Rational(-12)};
    for (int k = 0; k <= 4; ++k) {
        RelationReport r = check_relations(cartan_power(s4, k));
        CHECK(r.passed);
        CHECK(r.a == GaussianRational(expect[k]));
        CHECK(r.a.is_real());
    }
    CompactModule s4m = spinor_module(AlgebraKind::CompactD, 2, -1);
    for (int k = 0; k <= 4; ++k) {
        RelationReport r = check_relations(cartan_power(s4m, k));
        CHECK(r.passed);
        CHECK(r.a == GaussianRational(expect[k]));
    }

    CompactModule s6 = spinor_module(AlgebraKind::CompactD, 3, +1);
    CHECK(check_relations(s6).a == GaussianRational(Rational(-5, 2)));
    CHECK(check_relations(cartan_power(s6, 2)).a == GaussianRational(-6));

    // Scalar against the Casimir: a = -2 C / (p+q) on everything that passes.
    auto link = [](const CompactModule& m) {
        RelationReport r = check_relations(m);
        REQUIRE(r.passed);
        GaussianRational c = casimir_C(m.rep);
        int d = m.rep.sig.dim();
        CHECK(r.a * GaussianRational(d) == GaussianRational(-2) * c);
    };
    link(spinor_module(AlgebraKind::CompactB, 2));
    link(spinor_module(AlgebraKind::CompactB, 3));
    link(cartan_power(s4, 3));
    link(cartan_power(s6, 2));
}

TEST_CASE("casimir scalars and the reducible rejection") {
    CHECK(casimir_C(spinor_module(AlgebraKind::CompactB, 2).rep) == GaussianRational(5));
    CHECK(casimir_C(trivial_module(AlgebraKind::CompactB, 2).rep).is_zero());
    // Ordered-pair normalization: 12 ordered pairs, each square 1/4.
    CHECK(casimir_C(spinor_module(AlgebraKind::CompactD, 2, +1).rep) == GaussianRational(3));
    CHECK(casimir_C(spinor_module(AlgebraKind::CompactD, 3, +1).rep) == GaussianRational(Rational(15, 2)));
    CHECK(casimir_C(cartan_power(spinor_module(AlgebraKind::CompactD, 3, +1), 2).rep) == GaussianRational(18));

    // Direct sum of inequivalent pieces has a non-scalar Casimir.
    CompactModule t5 = trivial_module(AlgebraKind::CompactB, 2);
    CompactModule v5 = vector_module(AlgebraKind::CompactB, 2);
    MatrixRep sum;
    sum.sig = v5.rep.sig;
    sum.dim = 1 + v5.rep.dim;
    for (int ia = 0; ia < sum.sig.dim(); ++ia)
        for (int ib = ia + 1; ib < sum.sig.dim(); ++ib) {
            int la = sum.sig.labels[ia], lb = sum.sig.labels[ib];
            sum.set(la, lb, block_diag(t5.rep.M(la, lb), v5.rep.M(la, lb)));
        }
    CHECK_THROWS_AS(casimir_C(sum), ContractError);
}

TEST_CASE("highest weight expectation scan matches module checks") {
    LieType b2{AlgebraKind::CompactB, 2};
    RelationReport scan = hw_relation_scan(b2, rats(mk_w("1/2,1/2")));
    CHECK(scan.passed);
    CHECK(scan.a == GaussianRational(-2));

    LieType d3{AlgebraKind::CompactD, 3};
    RelationReport scan6 = hw_relation_scan(d3, rats(mk_w("1,1,1")));
    CHECK(scan6.passed);
    CHECK(scan6.a == GaussianRational(-6));

    CHECK_FALSE(hw_relation_scan(b2, rats(mk_w("1,0"))).passed);
    CHECK_FALSE(hw_relation_scan(d3, rats(mk_w("1,0,0"))).passed);

    CHECK_THROWS_AS(hw_relation_scan(b2, rats(mk_w("0,1"))), ContractError);
    CHECK_THROWS_AS(hw_relation_scan(b2, rats(mk_w("0,0,0"))), ContractError);
}

TEST_CASE("expectation scan passes exactly on the known families") {
    // B_n, entries 0..2 in half steps: trivial and the spin weight only.
    for (int n : {2, 3}) {
        LieType t{AlgebraKind::CompactB, n};
        std::vector<int> tw(n, 0);
        for (;;) {
            Weight w(n);
            for (int i = 0; i < n; ++i) w[i] = HalfInt::from_twice(tw[i]);
            if (is_dominant(t, w)) {
                bool all_zero = std::all_of(tw.begin(), tw.end(), [](int x) { return x == 0; });
                bool all_half = std::all_of(tw.begin(), tw.end(), [](int x) { return x == 1; });
                RelationReport r = hw_relation_scan(t, rats(w));
                CHECK(r.passed == (all_zero || all_half));
                if (all_half) {
                    // a = -2(lambda^2 + (n-1/2)lambda) at lambda = 1/2
                    Rational lam(1, 2);
                    Rational c = lam * lam + Rational(2 * n - 1, 2) * lam;
                    CHECK(r.a == GaussianRational(Rational(-2) * c));
                }
            }
            int i = n - 1;
            while (i >= 0 && ++tw[i] == 5) tw[i--] = 0;
            if (i < 0) break;
        }
    }
    // D_n: the one-parameter family (|mu|, ..., |mu|, mu).
    for (int n : {2, 3}) {
        LieType t{AlgebraKind::CompactD, n};
        std::vector<int> tw(n, 0);
        tw[n - 1] = -4;
        for (;;) {
            Weight w(n);
            for (int i = 0; i < n; ++i) w[i] = HalfInt::from_twice(tw[i]);
            if (is_dominant(t, w)) {
                bool family = true;
                for (int i = 0; i + 1 < n; ++i) family = family && (tw[i] == std::abs(tw[n - 1]));
                RelationReport r = hw_relation_scan(t, rats(w));
                CHECK(r.passed == family);
                if (family) {
                    Rational mu(std::abs(tw[n - 1]), 2);
                    Rational c = mu * mu + Rational(n - 1) * mu;
                    CHECK(r.a == GaussianRational(Rational(-2) * c));
                }
            }
            int i = n - 1;
            while (i >= 0) {
                ++tw[i];
                if (tw[i] <= 4) break;
                tw[i] = (i == n - 1) ? -4 : 0;
                --i;
            }
            if (i < 0) break;
        }
    }
}

TEST_CASE("casimir at the highest weight agrees with the matrix casimir") {
    LieType b2{AlgebraKind::CompactB, 2};
    LieType b3{AlgebraKind::CompactB, 3};
    LieType d2{AlgebraKind::CompactD, 2};
    LieType d3{AlgebraKind::CompactD, 3};
    CHECK(casimir_at_highest_weight(b2, rats(mk_w("1/2,1/2"))) == Rational(5));
    CHECK(casimir_at_highest_weight(b2, rats(mk_w("1,0"))) == Rational(8));
    CHECK(casimir_at_highest_weight(b2, rats(mk_w("1,1"))) == Rational(12));
    CHECK(casimir_at_highest_weight(b3, rats(mk_w("1,0,0"))) == Rational(12));
    CHECK(casimir_at_highest_weight(d2, rats(mk_w("1/2,1/2"))) == Rational(3));
    CHECK(casimir_at_highest_weight(d3, rats(mk_w("1/2,1/2,1/2"))) == Rational(15, 2));
    CHECK(casimir_at_highest_weight(d3, rats(mk_w("1,1,1"))) == Rational(18));
    CHECK(casimir_at_highest_weight(d3, rats(mk_w("1,0,0"))) == Rational(10));
}

TEST_CASE("annihilator identities on plus-chirality powers") {
    CompactModule s6 = spinor_module(AlgebraKind::CompactD, 3, +1);
    for (int k = 0; k <= 2; ++k) {
        auto checks = verify_annihilator_identity(cartan_power(s6, k));
        CHECK(all_passed(checks));
        CHECK(check_named(checks, "lowering-product-vanishes").status == "pass");
        CHECK(check_named(checks, "cartan-counterterm-kills-hw").status == "pass");
        CHECK(check_named(checks, "two-row-anticommutator-sums").status == "pass");
        CHECK(check_named(checks, "first-row-square-decomposition").status == "pass");
    }
    CompactModule s4 = spinor_module(AlgebraKind::CompactD, 2, +1);
    for (int k = 0; k <= 4; ++k) CHECK(all_passed(verify_annihilator_identity(cartan_power(s4, k))));

    auto neg = verify_annihilator_identity(vector_module(AlgebraKind::CompactD, 3));
    CHECK_FALSE(all_passed(neg));
    CHECK(check_named(neg, "lowering-product-vanishes").status == "fail");

    CHECK_THROWS_AS(verify_annihilator_identity(spinor_module(AlgebraKind::CompactB, 2)), ContractError);
}

TEST_CASE("modules are selfadjoint against their gram") {
    CHECK(module_selfadjoint(spinor_module(AlgebraKind::CompactB, 2)));
    CHECK(module_selfadjoint(spinor_module(AlgebraKind::CompactD, 3, +1)));
    CompactModule m = cartan_power(spinor_module(AlgebraKind::CompactD, 3, +1), 2);
    CHECK(module_selfadjoint(m));
    CHECK(is_hermitian(m.gram));
    CompactModule p4 = cartan_power(spinor_module(AlgebraKind::CompactD, 2, +1), 4);
    CHECK(module_selfadjoint(p4));
}

TEST_CASE("relation checker rejects a corrupted generator") {
    CompactModule s5 = spinor_module(AlgebraKind::CompactB, 2);
    ExactMatrix bad = s5.rep.M(1, 3);
    bad.at(0, 0) += GaussianRational(Rational(1, 2));
    s5.rep.set(1, 3, bad);
    RelationReport r = check_relations(s5);
    CHECK_FALSE(r.passed);
    CHECK(!r.first_violation.empty());
}

}  // TEST_SUITE
