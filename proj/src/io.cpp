#include "bialg/io.hpp"

#include <fstream>

#include <json.hpp>

namespace bialg::io {

using nlohmann::json;

BundleKind kind_from_string(const std::string& s) {
    if (s == "algebra") return BundleKind::Algebra;
    if (s == "coalgebra") return BundleKind::Coalgebra;
    if (s == "bialgebra") return BundleKind::Bialgebra;
    if (s == "infinitesimal") return BundleKind::Infinitesimal;
    if (s == "2as") return BundleKind::TwoAs;
    if (s == "2b") return BundleKind::TwoB;
    if (s == "22b") return BundleKind::TwoTwoB;
    throw ParseError("unknown structure kind: '" + s + "'");
}

namespace {

std::string coef_string(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw ParseError("coefficient must be a string or an integer");
}

template <class S>
Bundle<S> parse_typed(const json& j, const typename S::Field& F, BundleKind kind, int dim) {
    auto parse_coef = [&](const json& c) { return S::parse(F, coef_string(c)); };

    auto parse_mult = [&](const char* key) {
        MultTensor<S> m(F, dim);
        if (j.contains(key)) {
            for (const auto& e : j.at(key)) {
                if (!e.is_array() || e.size() != 4) throw ParseError(std::string(key) + " entries must be [i,j,k,coef]");
                int i = e[0].get<int>(), jj = e[1].get<int>(), k = e[2].get<int>();
                if (i < 1 || i > dim || jj < 1 || jj > dim || k < 1 || k > dim)
                    throw ParseError(std::string(key) + " index out of range");
                m.c.at(i - 1, jj - 1, k - 1) += parse_coef(e[3]);
            }
        }
        return m;
    };
    auto parse_comult = [&](const char* key, const char* counit_key) {
        ComultTensor<S> c(F, dim);
        if (j.contains(key)) {
            for (const auto& e : j.at(key)) {
                if (!e.is_array() || e.size() != 4) throw ParseError(std::string(key) + " entries must be [i,j,k,coef]");
                int i = e[0].get<int>(), jj = e[1].get<int>(), k = e[2].get<int>();
                if (i < 1 || i > dim || jj < 1 || jj > dim || k < 1 || k > dim)
                    throw ParseError(std::string(key) + " index out of range");
                c.d.at(i - 1, jj - 1, k - 1) += parse_coef(e[3]);
            }
        }
        if (j.contains(counit_key)) {
            const auto& xi = j.at(counit_key);
            if (!xi.is_array() || static_cast<int>(xi.size()) != dim)
                throw ParseError(std::string(counit_key) + " must list one coefficient per basis vector");
            for (int i = 0; i < dim; ++i) c.counit[i] = parse_coef(xi[static_cast<size_t>(i)]);
        }
        return c;
    };

    Vec<S> unit(F, dim);
    if (!j.contains("unit")) {
        unit[0] = S::one(F);
    } else if (j.at("unit").is_number_integer()) {
        int u = j.at("unit").get<int>();
        if (u < 1 || u > dim) throw ParseError("unit index out of range");
        unit[u - 1] = S::one(F);
    } else if (j.at("unit").is_array()) {
        const auto& arr = j.at("unit");
        if (static_cast<int>(arr.size()) != dim) throw ParseError("unit vector has wrong length");
        for (int i = 0; i < dim; ++i) unit[i] = parse_coef(arr[static_cast<size_t>(i)]);
    } else {
        throw ParseError("unit must be a 1-based index or a coefficient vector");
    }

    Bundle<S> b{kind, {}, {}, unit, std::nullopt};
    auto need = [&](const char* key) {
        if (!j.contains(key)) throw ParseError(std::string("kind '") + kind_name(kind) + "' requires '" + key + "'");
    };
    switch (kind) {
        case BundleKind::Algebra:
            need("mult");
            b.mults.push_back(parse_mult("mult"));
            break;
        case BundleKind::Coalgebra:
            need("comult");
            need("counit");
            b.comults.push_back(parse_comult("comult", "counit"));
            break;
        case BundleKind::Bialgebra:
        case BundleKind::Infinitesimal:
            need("mult");
            need("comult");
            b.mults.push_back(parse_mult("mult"));
            b.comults.push_back(parse_comult("comult", "counit"));
            if (kind == BundleKind::Infinitesimal)
                b.theta = j.contains("theta") ? S::parse(F, coef_string(j.at("theta"))) : S::one(F);
            break;
        case BundleKind::TwoAs:
            need("mult");
            need("mult2");
            need("comult");
            b.mults.push_back(parse_mult("mult"));
            b.mults.push_back(parse_mult("mult2"));
            b.comults.push_back(parse_comult("comult", "counit"));
            break;
        case BundleKind::TwoB:
        case BundleKind::TwoTwoB:
            need("mult");
            need("mult2");
            need("comult");
            need("comult2");
            b.mults.push_back(parse_mult("mult"));
            b.mults.push_back(parse_mult("mult2"));
            b.comults.push_back(parse_comult("comult", "counit"));
            b.comults.push_back(parse_comult("comult2", "counit2"));
            break;
    }
    b.validate_shape();
    return b;
}

template <class S>
json serialize_typed(const Bundle<S>& b) {
    json j;
    j["dim"] = b.dim();
    j["kind"] = kind_name(b.kind);

    // write the unit as an index when it is a basis vector
    int unit_idx = -1;
    int nonzero = 0;
    for (int i = 0; i < b.dim(); ++i)
        if (!b.unit[i].is_zero()) {
            ++nonzero;
            if (b.unit[i] == S::one(b.field())) unit_idx = i;
        }
    if (nonzero == 1 && unit_idx >= 0) {
        j["unit"] = unit_idx + 1;
    } else {
        json arr = json::array();
        for (int i = 0; i < b.dim(); ++i) arr.push_back(to_string(b.unit[i]));
        j["unit"] = arr;
    }

    auto mult_json = [&](const MultTensor<S>& m) {
        json arr = json::array();
        for (int i = 0; i < m.dim(); ++i)
            for (int jj = 0; jj < m.dim(); ++jj)
                for (int k = 0; k < m.dim(); ++k)
                    if (!m.c.at(i, jj, k).is_zero())
                        arr.push_back(json::array({i + 1, jj + 1, k + 1, to_string(m.c.at(i, jj, k))}));
        return arr;
    };
    auto comult_json = [&](const ComultTensor<S>& c, json& counit_out) {
        json arr = json::array();
        for (int i = 0; i < c.dim(); ++i)
            for (int jj = 0; jj < c.dim(); ++jj)
                for (int k = 0; k < c.dim(); ++k)
                    if (!c.d.at(i, jj, k).is_zero())
                        arr.push_back(json::array({i + 1, jj + 1, k + 1, to_string(c.d.at(i, jj, k))}));
        counit_out = json::array();
        for (int i = 0; i < c.dim(); ++i) counit_out.push_back(to_string(c.counit[i]));
        return arr;
    };

    if (!b.mults.empty()) j["mult"] = mult_json(b.mults[0]);
    if (b.mults.size() > 1) j["mult2"] = mult_json(b.mults[1]);
    if (!b.comults.empty()) {
        json xi;
        j["comult"] = comult_json(b.comults[0], xi);
        j["counit"] = xi;
    }
    if (b.comults.size() > 1) {
        json xi;
        j["comult2"] = comult_json(b.comults[1], xi);
        j["counit2"] = xi;
    }
    if (b.theta) j["theta"] = to_string(*b.theta);
    return j;
}

} // namespace

StructureFile parse(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!j.contains("dim")) throw ParseError("missing 'dim'");
        int dim = j.at("dim").get<int>();
        check_dim(dim);
        if (!j.contains("kind")) throw ParseError("missing 'kind'");
        BundleKind kind = kind_from_string(j.at("kind").get<std::string>());
        std::string field = j.contains("field") ? j.at("field").get<std::string>() : "Q";
        std::string name = j.contains("name") ? j.at("name").get<std::string>() : "";
        if (field == "Q") {
            return {name, parse_typed<Rational>(j, Rational::Field{}, kind, dim)};
        }
        if (field == "Fp") {
            if (!j.contains("p")) throw ParseError("field 'Fp' requires 'p'");
            Fp::Field F{j.at("p").get<std::uint64_t>()};
            Fp::check_prime(F.p);
            return {name, parse_typed<Fp>(j, F, kind, dim)};
        }
        throw ParseError("field must be 'Q' or 'Fp'");
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed structure file: ") + e.what());
    }
}

std::string serialize(const StructureFile& f) {
    json j = std::visit([](const auto& b) { return serialize_typed(b); }, f.bundle);
    if (!f.name.empty()) j["name"] = f.name;
    if (std::holds_alternative<Bundle<Fp>>(f.bundle)) {
        j["field"] = "Fp";
        j["p"] = std::get<Bundle<Fp>>(f.bundle).field().p;
    } else {
        j["field"] = "Q";
    }
    return j.dump(2) + "\n";
}

StructureFile load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse(text);
}

void save(const StructureFile& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << serialize(f);
}

std::string report_json(const CheckReport& rep) {
    json j;
    j["passed"] = rep.passed;
    if (!rep.theta.empty()) j["theta"] = rep.theta;
    json arr = json::array();
    for (const auto& r : rep.residuals) {
        json e;
        e["context"] = r.context;
        e["axiom"] = r.axiom;
        e["indices"] = r.indices;
        e["value"] = r.value;
        arr.push_back(e);
    }
    j["residuals"] = arr;
    return j.dump(2) + "\n";
}

} // namespace bialg::io
