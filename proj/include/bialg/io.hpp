#pragma once

#include <string>
#include <variant>

#include "bialg/axioms.hpp"

namespace bialg::io {

using AnyBundle = std::variant<Bundle<Rational>, Bundle<Fp>>;

/// One structure file: a named bundle over Q or F_p. Coefficients are strings
/// ("-2", "1/3"), normalized on load; omitted sparse entries are zero;
/// load(save(x)) == x exactly.
struct StructureFile {
    std::string name;
    AnyBundle bundle;

    int dim() const {
        return std::visit([](const auto& b) { return b.dim(); }, bundle);
    }
    BundleKind kind() const {
        return std::visit([](const auto& b) { return b.kind; }, bundle);
    }
};

BundleKind kind_from_string(const std::string& s);

StructureFile parse(const std::string& json_text);
std::string serialize(const StructureFile& f);

StructureFile load(const std::string& path);
void save(const StructureFile& f, const std::string& path);

/// Machine-readable JSON for a check report (stable ordering).
std::string report_json(const CheckReport& rep);

} // namespace bialg::io
