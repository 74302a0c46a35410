#include "bialg/catalog.hpp"

#include <algorithm>
#include <map>

namespace bialg::catalog {

namespace {

struct Quad {
    int i, j, k;
    long v;
};

struct MultData {
    std::string id;
    int dim;
    std::vector<Quad> products; // non-unit products only; unit rows are implied
    std::string provenance;
};

struct ComultData {
    std::string id;
    int dim;
    std::string for_mult;
    std::vector<Quad> rows;     // full D rows including Delta(e1) = e1 (x) e1
    std::vector<long> counit;
    bool has_lambda = false;
    Quad lambda_slot{};         // added as lambda * e_i -> e_j (x) e_k
    std::string provenance;
};

// Multiplications. The unit e1 rows C(1,i,i) = C(i,1,i) = 1 are filled in by
// the builder; only products among e2.. are listed here.
const std::vector<MultData>& mult_data() {
    static const std::vector<MultData> data = {
        {"mu1_2", 2, {{2, 2, 2, 1}}, "dim 2, algebra 1 of 2"},
        {"mu2_2", 2, {}, "dim 2, algebra 2 of 2"},
        {"mu1_3", 3, {{2, 2, 2, 1}, {2, 3, 3, 1}, {3, 2, 3, 1}, {3, 3, 3, 1}}, "dim 3, algebra 1 of 5"},
        {"mu2_3", 3, {{2, 2, 2, 1}, {2, 3, 3, 1}, {3, 2, 3, 1}}, "dim 3, algebra 2 of 5"},
        {"mu3_3", 3, {{2, 2, 2, 1}}, "dim 3, algebra 3 of 5"},
        {"mu4_3", 3, {}, "dim 3, algebra 4 of 5"},
        {"mu5_3", 3, {{2, 2, 2, 1}, {2, 3, 3, 1}}, "dim 3, algebra 5 of 5"},
        {"exA_3", 3, {{2, 2, 2, 1}, {3, 3, 3, 1}}, "dim 3 worked 2-bialgebra example, first multiplication"},
        {"exB_3", 3, {{2, 2, 2, 1}}, "dim 3 worked 2-bialgebra example, second multiplication"},
    };
    return data;
}

// Shorthand for the recurring row Delta(e2) = e1 (x) e2 + e2 (x) e1 - e2 (x) e2.
std::vector<Quad> std_e2_row() {
    return {{2, 1, 2, 1}, {2, 2, 1, 1}, {2, 2, 2, -1}};
}

std::vector<Quad> with_e1(std::vector<Quad> rows) {
    rows.insert(rows.begin(), {1, 1, 1, 1});
    return rows;
}

std::vector<Quad> cat(std::vector<Quad> a, std::vector<Quad> b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

const std::vector<ComultData>& comult_data() {
    auto e2 = std_e2_row;
    static const std::vector<ComultData> data = {
        // dimension 2, listed under mu1_2
        {"delta_1_1_2", 2, "mu1_2", with_e1(cat(e2(), {{2, 2, 2, -1}})), {1, 0}, false, {},
         "dim 2, algebra mu1_2, comultiplication 1 of 3"},
        {"delta_1_2_2", 2, "mu1_2", with_e1({{2, 2, 2, 1}}), {1, 1}, false, {},
         "dim 2, algebra mu1_2, comultiplication 2 of 3"},
        {"delta_1_3_2", 2, "mu1_2", with_e1(e2()), {1, 0}, false, {},
         "dim 2, algebra mu1_2, comultiplication 3 of 3"},

        // dimension 3, listed under mu1_3
        {"delta_1_1_3", 3, "mu1_3", with_e1(cat(e2(), {{3, 1, 3, 1}, {3, 3, 1, 1}, {3, 3, 3, -2}})), {1, 0, 0}, false, {},
         "dim 3, algebra mu1_3, comultiplication 1 of 18"},
        {"delta_1_2_3", 3, "mu1_3", with_e1(cat(e2(), {{3, 1, 3, 1}, {3, 3, 1, 1}, {3, 3, 3, -1}})), {1, 0, 0}, false, {},
         "dim 3, algebra mu1_3, comultiplication 2 of 18"},
        // The e3 (x) e3 coefficient is +1: the compatibility equation forces
        // t^2 = t and t = 0 is already comultiplication 4.
        {"delta_1_3_3", 3, "mu1_3",
         with_e1(cat(e2(), {{3, 1, 3, 1}, {3, 2, 3, -1}, {3, 3, 1, 1}, {3, 3, 2, -1}, {3, 3, 3, 1}})), {1, 0, 0},
         false, {}, "dim 3, algebra mu1_3, comultiplication 3 of 18"},
        {"delta_1_4_3", 3, "mu1_3", with_e1(cat(e2(), {{3, 1, 3, 1}, {3, 2, 3, -1}, {3, 3, 1, 1}, {3, 3, 2, -1}})),
         {1, 0, 0}, false, {}, "dim 3, algebra mu1_3, comultiplication 4 of 18"},
        {"delta_1_5_3", 3, "mu1_3", with_e1(cat(e2(), {{3, 1, 3, 1}, {3, 3, 1, 1}, {3, 2, 3, -1}})), {1, 0, 0}, false,
         {}, "dim 3, algebra mu1_3, comultiplication 5 of 18"},
        {"delta_1_6_3", 3, "mu1_3", with_e1(cat(e2(), {{3, 1, 3, 1}, {3, 3, 1, 1}, {3, 3, 2, -1}})), {1, 0, 0}, false,
         {}, "dim 3, algebra mu1_3, comultiplication 6 of 18"},
        {"delta_1_7_3", 3, "mu1_3", with_e1({{2, 2, 2, 1}, {3, 2, 3, 1}, {3, 3, 2, 1}, {3, 3, 3, -2}}), {1, 1, 0},
         false, {}, "dim 3, algebra mu1_3, comultiplication 7 of 18"},
        {"delta_1_8_3", 3, "mu1_3", with_e1({{2, 2, 2, 1}, {3, 2, 3, 1}, {3, 3, 2, 1}, {3, 3, 3, -1}}), {1, 1, 0},
         false, {}, "dim 3, algebra mu1_3, comultiplication 8 of 18"},
        {"delta_1_9_3", 3, "mu1_3",
         with_e1({{2, 1, 3, 1}, {2, 2, 2, 1}, {2, 2, 3, -1}, {2, 3, 1, 1}, {2, 3, 2, -1},
                  {3, 1, 3, 1}, {3, 3, 1, 1}, {3, 3, 3, -1}}),
         {1, 1, 0}, false, {}, "dim 3, algebra mu1_3, comultiplication 9 of 18"},
        {"delta_1_10_3", 3, "mu1_3",
         with_e1({{2, 1, 3, 1}, {2, 2, 2, 1}, {2, 2, 3, -1}, {2, 3, 1, 1}, {2, 3, 2, -1}, {2, 3, 3, -1},
                  {3, 1, 3, 1}, {3, 3, 1, 1}, {3, 3, 3, -2}}),
         {1, 1, 0}, false, {}, "dim 3, algebra mu1_3, comultiplication 10 of 18"},
        {"delta_1_11_3", 3, "mu1_3",
         with_e1({{2, 2, 2, 1}, {2, 3, 1, 1}, {2, 3, 2, -1}, {3, 2, 3, 1}, {3, 3, 1, 1}, {3, 3, 3, -1}}), {1, 1, 0},
         false, {}, "dim 3, algebra mu1_3, comultiplication 11 of 18"},
        {"delta_1_12_3", 3, "mu1_3",
         with_e1({{2, 1, 3, 1}, {2, 2, 2, 1}, {2, 2, 3, -1}, {3, 1, 3, 1}, {3, 3, 2, 1}, {3, 3, 3, -1}}), {1, 1, 0},
         false, {}, "dim 3, algebra mu1_3, comultiplication 12 of 18"},
        {"delta_1_13_3", 3, "mu1_3",
         with_e1({{2, 1, 2, 1}, {2, 1, 3, -1}, {2, 2, 1, 1}, {2, 2, 2, -2}, {2, 2, 3, 2}, {2, 3, 1, -1},
                  {2, 3, 2, 2}, {2, 3, 3, -1},
                  {3, 3, 3, 1}}),
         {1, 1, 1}, false, {}, "dim 3, algebra mu1_3, comultiplication 13 of 18"},
        {"delta_1_14_3", 3, "mu1_3",
         with_e1({{2, 1, 2, 1}, {2, 1, 3, -1}, {2, 2, 1, 1}, {2, 2, 2, -1}, {2, 2, 3, 1}, {2, 3, 1, -1},
                  {2, 3, 2, 1},
                  {3, 3, 3, 1}}),
         {1, 1, 1}, false, {}, "dim 3, algebra mu1_3, comultiplication 14 of 18"},
        {"delta_1_15_3", 3, "mu1_3", with_e1({{2, 2, 2, 1}, {3, 3, 3, 1}}), {1, 1, 1}, false, {},
         "dim 3, algebra mu1_3, comultiplication 15 of 18"},
        {"delta_1_16_3", 3, "mu1_3",
         with_e1({{2, 2, 2, 1}, {3, 2, 2, 1}, {3, 2, 3, -1}, {3, 3, 2, -1}, {3, 3, 3, 2}}), {1, 1, 1}, false, {},
         "dim 3, algebra mu1_3, comultiplication 16 of 18"},
        {"delta_1_17_3", 3, "mu1_3", with_e1({{2, 2, 3, 1}, {2, 3, 2, 1}, {2, 3, 3, -1}, {3, 3, 3, 1}}), {1, 1, 1},
         false, {}, "dim 3, algebra mu1_3, comultiplication 17 of 18"},
        {"delta_1_18_3", 3, "mu1_3", with_e1({{2, 2, 1, 1}, {2, 3, 1, -1}, {2, 3, 2, 1}, {3, 3, 3, 1}}), {1, 1, 1},
         false, {}, "dim 3, algebra mu1_3, comultiplication 18 of 18"},

        // dimension 3, listed under mu2_3
        {"delta_2_1_3", 3, "mu2_3", with_e1(cat(e2(), {{3, 1, 3, 1}, {3, 3, 1, 1}, {3, 3, 2, -1}})), {1, 0, 0}, false,
         {}, "dim 3, algebra mu2_3, comultiplication 1 of 3"},
        // The e3 row is stored as e1 (x) e3 - e2 (x) e3 + e3 (x) e1: the sign of
        // the middle term is forced by coassociativity and by compatibility
        // with mu2_3 (see the repository docs on catalog data).
        {"delta_2_2_3", 3, "mu2_3", with_e1(cat(e2(), {{3, 1, 3, 1}, {3, 2, 3, -1}, {3, 3, 1, 1}})), {1, 0, 0}, false,
         {}, "dim 3, algebra mu2_3, comultiplication 2 of 3"},
        {"delta_2_3_3", 3, "mu2_3",
         with_e1(cat(e2(), {{3, 1, 3, 1}, {3, 2, 3, -1}, {3, 3, 1, 1}, {3, 3, 2, -1}})), {1, 0, 0}, true,
         {3, 3, 3, 1}, "dim 3, algebra mu2_3, comultiplication 3 of 3 (one-parameter family)"},

        // dimension 3, listed under mu3_3
        {"delta_3_1_3", 3, "mu3_3", with_e1({{2, 2, 2, 1}, {3, 2, 3, 1}, {3, 3, 2, 1}}), {1, 1, 0}, false, {},
         "dim 3, algebra mu3_3, comultiplication 1 of 3"},
        {"delta_3_2_3", 3, "mu3_3", with_e1({{2, 2, 2, 1}, {3, 1, 3, 1}, {3, 3, 2, 1}}), {1, 1, 0}, false, {},
         "dim 3, algebra mu3_3, comultiplication 2 of 3"},
        {"delta_3_3_3", 3, "mu3_3", with_e1({{2, 2, 2, 1}, {3, 2, 3, 1}, {3, 3, 1, 1}}), {1, 1, 0}, false, {},
         "dim 3, algebra mu3_3, comultiplication 3 of 3"},

        // dimension 3, listed under mu5_3
        {"delta_5_1_3", 3, "mu5_3", with_e1({{2, 2, 2, 1}, {3, 2, 3, 1}, {3, 3, 2, 1}}), {1, 1, 0}, false, {},
         "dim 3, algebra mu5_3, comultiplication 1 of 1"},

        // worked-example comultiplication on basis {1, x, y}: Delta(x) = x (x) x,
        // Delta(y) = y (x) 1 + x (x) y (the second term is forced by
        // compatibility with both example multiplications).
        {"ex_delta_3", 3, "exA_3", with_e1({{2, 2, 2, 1}, {3, 3, 1, 1}, {3, 2, 3, 1}}), {1, 1, 0}, false, {},
         "dim 3 worked 2-bialgebra example, shared comultiplication"},
    };
    return data;
}

const Rational::Field Q{};

MultTensor<Rational> build_mult(const MultData& md) {
    MultTensor<Rational> m(Q, md.dim);
    for (int i = 0; i < md.dim; ++i) {
        m.c.at(0, i, i) = Rational(1);
        if (i > 0) m.c.at(i, 0, i) = Rational(1);
    }
    for (const Quad& q : md.products)
        m.c.at(q.i - 1, q.j - 1, q.k - 1) = Rational(q.v);
    return m;
}

ComultTensor<Rational> build_comult(const ComultData& cd, const Rational& lambda) {
    ComultTensor<Rational> c(Q, cd.dim);
    for (const Quad& q : cd.rows)
        c.d.at(q.i - 1, q.j - 1, q.k - 1) += Rational(q.v);
    if (cd.has_lambda)
        c.d.at(cd.lambda_slot.i - 1, cd.lambda_slot.j - 1, cd.lambda_slot.k - 1) += lambda * Rational(cd.lambda_slot.v);
    for (int i = 0; i < cd.dim; ++i)
        c.counit[i] = Rational(cd.counit[static_cast<size_t>(i)]);
    return c;
}

const MultData& find_mult(const std::string& id) {
    for (const auto& m : mult_data())
        if (m.id == id) return m;
    throw UnknownId("unknown multiplication id: " + id);
}

const ComultData& find_comult(const std::string& id) {
    for (const auto& c : comult_data())
        if (c.id == id) return c;
    throw UnknownId("unknown comultiplication id: " + id);
}

} // namespace

Vec<Rational> unit_e1(int dim) {
    return Vec<Rational>::basis(Q, dim, 0);
}

const std::vector<EntryInfo>& entries() {
    static const std::vector<EntryInfo> all = [] {
        std::vector<EntryInfo> v;
        for (const auto& m : mult_data())
            v.push_back({m.id, m.dim, EntryKind::Mult, "", {}, m.provenance});
        for (const auto& c : comult_data()) {
            std::vector<std::string> params;
            if (c.has_lambda) params.push_back("lambda");
            v.push_back({c.id, c.dim, EntryKind::Comult, c.for_mult, params, c.provenance});
        }
        v.push_back({"example_2b_3", 3, EntryKind::Bundle, "", {},
                     "dim 3 worked example: 2-bialgebra on basis {1, x, y}"});
        v.push_back({"example_22b_3", 3, EntryKind::Bundle, "", {},
                     "dim 3 worked example: the type (2,2) 2-2-bialgebra"});
        return v;
    }();
    return all;
}

const EntryInfo& info(const std::string& id) {
    for (const auto& e : entries())
        if (e.id == id) return e;
    throw UnknownId("unknown catalog id: " + id);
}

std::vector<std::string> mult_ids(int dim) {
    std::vector<std::string> v;
    for (const auto& m : mult_data())
        if (m.dim == dim && m.id.rfind("mu", 0) == 0) v.push_back(m.id);
    return v;
}

std::vector<std::string> comult_ids(int dim) {
    std::vector<std::string> v;
    for (const auto& c : comult_data())
        if (c.dim == dim && c.id.rfind("delta", 0) == 0) v.push_back(c.id);
    return v;
}

std::vector<std::string> comult_ids_for(const std::string& mult_id) {
    std::vector<std::string> v;
    for (const auto& c : comult_data())
        if (c.for_mult == mult_id && c.id.rfind("delta", 0) == 0) v.push_back(c.id);
    return v;
}

std::vector<std::string> bundle_ids() {
    return {"example_2b_3", "example_22b_3"};
}

MultTensor<Rational> get_mult(const std::string& id) {
    return build_mult(find_mult(id));
}

ComultTensor<Rational> get_comult(const std::string& id, const Bindings& b) {
    const ComultData& cd = find_comult(id);
    Rational lambda = b.lambda.value_or(Rational(0));
    if (!cd.has_lambda && b.lambda)
        throw UnknownId("comultiplication " + id + " takes no parameter");
    return build_comult(cd, lambda);
}

Bundle<Rational> make_pair_bundle(const std::string& mult_id, const std::string& comult_id, BundleKind kind,
                                  const Bindings& b) {
    MultTensor<Rational> m = get_mult(mult_id);
    ComultTensor<Rational> c = get_comult(comult_id, b);
    if (m.dim() != c.dim()) throw DimMismatch("catalog pair dimension mismatch");
    std::optional<Rational> theta;
    if (kind == BundleKind::Infinitesimal) theta = Rational(1);
    return Bundle<Rational>{kind, {m}, {c}, unit_e1(m.dim()), theta};
}

Bundle<Rational> get_bundle(const std::string& id) {
    if (id == "example_2b_3") {
        MultTensor<Rational> ma = get_mult("exA_3");
        MultTensor<Rational> mb = get_mult("exB_3");
        ComultTensor<Rational> d = get_comult("ex_delta_3");
        return Bundle<Rational>{BundleKind::TwoB, {ma, mb}, {d, d}, unit_e1(3), std::nullopt};
    }
    if (id == "example_22b_3") {
        return Bundle<Rational>{BundleKind::TwoTwoB,
                                {get_mult("mu1_3"), get_mult("mu2_3")},
                                {get_comult("delta_1_5_3"), get_comult("delta_2_1_3")},
                                unit_e1(3),
                                std::nullopt};
    }
    throw UnknownId("unknown bundle id: " + id);
}

std::vector<VerifyItem> verify_all() {
    std::vector<VerifyItem> out;
    auto record = [&](const std::string& label, const CheckReport& rep) {
        out.push_back({label, rep.passed, rep.residuals.size()});
    };
    for (const auto& m : mult_data()) {
        MultTensor<Rational> t = build_mult(m);
        record(m.id + ": algebra", check_algebra(t, unit_e1(m.dim)));
    }
    for (const auto& c : comult_data()) {
        std::vector<Rational> lambdas = {Rational(0)};
        if (c.has_lambda) lambdas = {Rational(0), Rational(1), Rational(-1)};
        for (const Rational& l : lambdas) {
            ComultTensor<Rational> t = build_comult(c, l);
            std::string suffix = c.has_lambda ? " (lambda=" + l.str() + ")" : "";
            record(c.id + suffix + ": coalgebra", check_coalgebra(t));
            if (!c.for_mult.empty() && c.id.rfind("delta", 0) == 0) {
                MultTensor<Rational> m = build_mult(find_mult(c.for_mult));
                record(c.for_mult + " * " + c.id + suffix + ": bialgebra",
                       check_bialgebra(m, t, unit_e1(c.dim)));
            }
        }
    }
    for (const std::string& id : bundle_ids())
        record(id + ": bundle", check_bundle(get_bundle(id)));
    return out;
}

} // namespace bialg::catalog
