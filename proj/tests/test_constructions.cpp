#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bialg/catalog.hpp"
#include "bialg/constructions.hpp"

using namespace bialg;

namespace {

const Rational::Field Q{};

MultTensor<Rational> one_dim_algebra() {
    MultTensor<Rational> m(Q, 1);
    m.c.at(0, 0, 0) = Rational(1);
    return m;
}

std::vector<std::string> algebras_of_dim(int dim) { return catalog::mult_ids(dim); }

} // namespace

TEST_CASE("K1 of the 1-dimensional algebra is (mu1_2, delta_1_3_2)") {
    BialgebraData<Rational> out = kaplansky_k1(UnitalAlgebraInput<Rational>(one_dim_algebra()));
    CHECK(out.mult == catalog::get_mult("mu1_2"));
    CHECK(out.comult == catalog::get_comult("delta_1_3_2"));
    CHECK(check_bialgebra(out.mult, out.comult, out.unit).passed);
    CHECK(check_infinitesimal(out.mult, out.comult, out.unit, Rational(1)).passed);
}

TEST_CASE("K1(mu1_2) = (mu1_3, delta_1_5_3) and K2(mu1_2) = (mu1_3, delta_1_4_3)") {
    UnitalAlgebraInput<Rational> a(catalog::get_mult("mu1_2"));
    BialgebraData<Rational> k1 = kaplansky_k1(a);
    CHECK(k1.mult == catalog::get_mult("mu1_3"));
    CHECK(k1.comult == catalog::get_comult("delta_1_5_3"));
    BialgebraData<Rational> k2 = kaplansky_k2(a);
    CHECK(k2.mult == catalog::get_mult("mu1_3"));
    CHECK(k2.comult == catalog::get_comult("delta_1_4_3"));
    // K2(mu1_2) is a bialgebra but not unital infinitesimal
    CHECK(check_bialgebra(k2.mult, k2.comult, k2.unit).passed);
    CHECK(!check_infinitesimal(k2.mult, k2.comult, k2.unit, Rational(1)).passed);
}

TEST_CASE("K1(mu2_2) lands on the cop of delta_2_1_3") {
    BialgebraData<Rational> k1 = kaplansky_k1(UnitalAlgebraInput<Rational>(catalog::get_mult("mu2_2")));
    CHECK(k1.mult == catalog::get_mult("mu2_3"));
    CHECK(k1.comult == cop(catalog::get_comult("delta_2_1_3")));
    CHECK(check_bialgebra(k1.mult, k1.comult, k1.unit).passed);
    CHECK(check_infinitesimal(k1.mult, k1.comult, k1.unit, Rational(1)).passed);
}

TEST_CASE("K2 of the 1-dimensional algebra equals K1") {
    UnitalAlgebraInput<Rational> a(one_dim_algebra());
    CHECK(kaplansky_k1(a).comult == kaplansky_k2(a).comult);
    CHECK(kaplansky_k1(a).mult == kaplansky_k2(a).mult);
}

TEST_CASE("K1 output is always a unital infinitesimal bialgebra, K2 a bialgebra") {
    const Rational one(1);
    for (int dim : {2, 3}) {
        for (const auto& id : algebras_of_dim(dim)) {
            UnitalAlgebraInput<Rational> a(catalog::get_mult(id));
            BialgebraData<Rational> k1 = kaplansky_k1(a);
            INFO("K1(" << id << ")");
            CHECK(check_bialgebra(k1.mult, k1.comult, k1.unit).passed);
            CHECK(check_infinitesimal(k1.mult, k1.comult, k1.unit, one).passed);
            BialgebraData<Rational> k2 = kaplansky_k2(a);
            INFO("K2(" << id << ")");
            CHECK(check_bialgebra(k2.mult, k2.comult, k2.unit).passed);
        }
    }
}

TEST_CASE("invalid inputs are rejected") {
    // non-associative data: e2 e2 = e3, e2 e3 = e1
    MultTensor<Rational> bad(Q, 3);
    for (int i = 0; i < 3; ++i) {
        bad.c.at(0, i, i) = Rational(1);
        if (i > 0) bad.c.at(i, 0, i) = Rational(1);
    }
    bad.c.at(1, 1, 2) = Rational(1);
    bad.c.at(1, 2, 0) = Rational(1);
    CHECK_THROWS_AS((UnitalAlgebraInput<Rational>{bad}), std::invalid_argument);
    // unit must sit at e1 (here e2 is the unit and e1 an orthogonal idempotent)
    MultTensor<Rational> shifted(Q, 2);
    shifted.c.at(1, 0, 0) = shifted.c.at(0, 1, 0) = Rational(1);
    shifted.c.at(1, 1, 1) = shifted.c.at(0, 0, 0) = Rational(1);
    CHECK_THROWS_AS((UnitalAlgebraInput<Rational>{shifted}), std::invalid_argument);
    // dimension mismatch in pair builders
    UnitalAlgebraInput<Rational> a2(catalog::get_mult("mu1_2"));
    UnitalAlgebraInput<Rational> a3(catalog::get_mult("mu1_3"));
    CHECK_THROWS_AS(build_2as(a2, a3), DimMismatch);
}

TEST_CASE("pair builders pass their own checks on all equal-dimension catalog pairs") {
    for (int dim : {2, 3}) {
        auto ids = algebras_of_dim(dim);
        for (const auto& i1 : ids)
            for (const auto& i2 : ids) {
                UnitalAlgebraInput<Rational> a1(catalog::get_mult(i1)), a2(catalog::get_mult(i2));
                INFO("pair (" << i1 << ", " << i2 << ")");
                BuiltBundle<Rational> twoas = build_2as(a1, a2);
                CHECK(twoas.report.passed);
                CHECK(twoas.bundle.dim() == dim + 1);
                auto [b1, b2] = build_2b(a1, a2);
                CHECK(b1.report.passed);
                CHECK(b2.report.passed);
                BuiltBundle<Rational> tt = build_22b(a1, a2);
                CHECK(tt.report.passed);
            }
    }
}

TEST_CASE("diagonal and small cases of the pair builders") {
    UnitalAlgebraInput<Rational> a(catalog::get_mult("mu1_2"));
    BuiltBundle<Rational> diag = build_2as(a, a);
    CHECK(diag.bundle.mults[0] == diag.bundle.mults[1]);
    CHECK(diag.bundle.mults[0] == catalog::get_mult("mu1_3"));
    CHECK(diag.bundle.comults[0] == catalog::get_comult("delta_1_5_3"));

    // build_2b on 1-dimensional inputs: Delta1 from K1 is symmetric, so B1 = B2
    UnitalAlgebraInput<Rational> one(one_dim_algebra());
    auto [b1, b2] = build_2b(one, one);
    CHECK(b1.bundle == b2.bundle);

    // build_22b(1-dim, 1-dim) = (mu1_2, mu1_2, delta_1_3_2, delta_1_3_2)
    BuiltBundle<Rational> tt = build_22b(one, one);
    CHECK(tt.bundle.mults[0] == catalog::get_mult("mu1_2"));
    CHECK(tt.bundle.comults[0] == catalog::get_comult("delta_1_3_2"));
    CHECK(tt.bundle.comults[1] == catalog::get_comult("delta_1_3_2"));
}
