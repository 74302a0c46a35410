#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tuple>

#include "bialg/catalog.hpp"
#include "bialg/polysys.hpp"
#include "testutil.hpp"

using namespace bialg;

namespace {

const Rational::Field Q{};

Bundle<Rational> dim1_2as() {
    MultTensor<Rational> m(Q, 1);
    m.c.at(0, 0, 0) = Rational(1);
    ComultTensor<Rational> c(Q, 1);
    c.d.at(0, 0, 0) = Rational(1);
    c.counit[0] = Rational(1);
    return Bundle<Rational>{BundleKind::TwoAs, {m, m}, {c}, catalog::unit_e1(1), std::nullopt};
}

Bundle<Rational> dim2_2as() {
    return Bundle<Rational>{BundleKind::TwoAs,
                            {catalog::get_mult("mu1_2"), catalog::get_mult("mu1_2")},
                            {catalog::get_comult("delta_1_2_2")},
                            catalog::unit_e1(2),
                            std::nullopt};
}

bool all_zero_under(const std::vector<PolySystemLine>& lines, const Bundle<Rational>& b) {
    auto assign = bundle_assignment(b);
    for (const auto& l : lines)
        if (!l.poly.evaluate(assign).is_zero()) return false;
    return true;
}

} // namespace

TEST_CASE("polynomial printing and parsing round-trip") {
    Polynomial p = Polynomial::var("C", {1, 2, 2}) * Polynomial::var("D", {2, 1, 1}) * Polynomial::constant(Rational(3)) +
                   Polynomial::constant(Rational(-1, 2)) * Polynomial::var("xi", {2});
    std::string s = p.str();
    CHECK(Polynomial::parse(s) == p);
    CHECK(Polynomial::parse("0").is_zero());
    CHECK(Polynomial::parse(Polynomial().str()).is_zero());
    // squares print with repeated factors and parse back
    Polynomial sq = Polynomial::var("xi", {2}) * Polynomial::var("xi", {2});
    CHECK(Polynomial::parse(sq.str()) == sq);
}

TEST_CASE("dimension-1 system: compatibility reduces to zero under unit substitutions") {
    PolySystem sys = export_system(1, SystemKind::TwoAs);
    // substituting the unique dimension-1 2-associative bialgebra kills everything
    CHECK(all_zero_under(sys.lines, dim1_2as()));
}

TEST_CASE("catalog structure constants are common zeros of the exported systems") {
    PolySystem sys2 = export_system(2, SystemKind::TwoAs);
    CHECK(all_zero_under(sys2.lines, dim2_2as()));

    // text round-trip preserves the system
    auto parsed = parse_system(sys2.str());
    REQUIRE(parsed.size() == sys2.lines.size());
    for (size_t i = 0; i < parsed.size(); ++i) {
        CHECK(parsed[i].family == sys2.lines[i].family);
        CHECK(parsed[i].poly == sys2.lines[i].poly);
    }
    CHECK(all_zero_under(parsed, dim2_2as()));
}

TEST_CASE("2b system polynomial count matches the component-equation count") {
    const int n = 2;
    PolySystem sys = export_system(n, SystemKind::TwoB);
    // per multiplication: assoc n^4 + unit 2 n^2; per comultiplication:
    // coassoc n^4 + counit 2 n^2; per bialgebra pair: compat n^4 +
    // counit morphism (n^2 + 1) + unit image n^2
    size_t expected = 2 * (16 + 8) + 2 * (16 + 8) + 4 * (16 + 4 + 1 + 4);
    CHECK(sys.lines.size() == expected);
    // deterministic output
    CHECK(export_system(n, SystemKind::TwoB).str() == sys.str());
}

TEST_CASE("dimension-3 catalog bundles zero the exported 2as system") {
    PolySystem sys = export_system(3, SystemKind::TwoAs);
    for (auto [m1, m2, c] : {std::tuple{"mu3_3", "mu5_3", "delta_3_1_3"},
                             std::tuple{"mu1_3", "mu2_3", "delta_2_1_3"},
                             std::tuple{"mu1_3", "mu2_3", "delta_2_2_3"}}) {
        Bundle<Rational> b{BundleKind::TwoAs,
                           {catalog::get_mult(m1), catalog::get_mult(m2)},
                           {catalog::get_comult(c)},
                           catalog::unit_e1(3),
                           std::nullopt};
        REQUIRE(check_bundle(b).passed);
        CHECK(all_zero_under(sys.lines, b));
    }
}

TEST_CASE("checker/exporter coherence on perturbations") {
    testutil::Rng rng(53);
    PolySystem sys = export_system(2, SystemKind::TwoAs);
    Bundle<Rational> good = dim2_2as();
    int tested = 0;
    while (tested < 100) {
        Bundle<Rational> b = good;
        // perturb one or two random entries across the members
        int edits = 1 + static_cast<int>(rng.next() % 2);
        for (int e = 0; e < edits; ++e) {
            long which = rng.range(0, 2);
            int i = static_cast<int>(rng.range(0, 1)), j = static_cast<int>(rng.range(0, 1)),
                k = static_cast<int>(rng.range(0, 1));
            Rational delta(rng.range(1, 3));
            if (which == 0)
                b.mults[0].c.at(i, j, k) += delta;
            else if (which == 1)
                b.mults[1].c.at(i, j, k) += delta;
            else
                b.comults[0].d.at(i, j, k) += delta;
        }
        CheckReport rep = check_bundle(b);
        if (rep.passed) continue; // rare: perturbation landed on another solution
        ++tested;
        CHECK(!all_zero_under(sys.lines, b));
    }
}

TEST_CASE("coherence both ways on catalog-derived 2as bundles") {
    // passing bundles evaluate to all-zero; failing ones violate something
    PolySystem sys = export_system(2, SystemKind::TwoAs);
    for (const auto& cid : catalog::comult_ids(2)) {
        Bundle<Rational> b{BundleKind::TwoAs,
                           {catalog::get_mult("mu1_2"), catalog::get_mult("mu1_2")},
                           {catalog::get_comult(cid)},
                           catalog::unit_e1(2),
                           std::nullopt};
        CHECK(check_bundle(b).passed == all_zero_under(sys.lines, b));
    }
}
