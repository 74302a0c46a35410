#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bialg/axioms.hpp"

namespace bialg::catalog {

struct UnknownId : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class EntryKind { Mult, Comult, Bundle };

struct EntryInfo {
    std::string id;
    int dim = 0;
    EntryKind kind = EntryKind::Mult;
    std::string for_mult;              // comult entries: the multiplication they are listed under
    std::vector<std::string> params;   // named rational parameters (e.g. "lambda")
    std::string provenance;            // which catalog table/slot this entry fills
};

/// Optional parameter bindings; parameterized entries default per entry
/// (lambda = 0 for the one parameterized comultiplication).
struct Bindings {
    std::optional<Rational> lambda;
};

const std::vector<EntryInfo>& entries();
const EntryInfo& info(const std::string& id);

std::vector<std::string> mult_ids(int dim);
std::vector<std::string> comult_ids(int dim);
std::vector<std::string> comult_ids_for(const std::string& mult_id);
std::vector<std::string> bundle_ids();

MultTensor<Rational> get_mult(const std::string& id);
ComultTensor<Rational> get_comult(const std::string& id, const Bindings& b = {});
Bundle<Rational> get_bundle(const std::string& id);

/// Assemble a (mult, comult) catalog pair as a Bialgebra or Infinitesimal
/// bundle with unit e1.
Bundle<Rational> make_pair_bundle(const std::string& mult_id, const std::string& comult_id,
                                  BundleKind kind = BundleKind::Bialgebra,
                                  const Bindings& b = {});

/// Unit vector e1 for a catalog dimension.
Vec<Rational> unit_e1(int dim);

/// Structural verification of every entry: algebras pass check_algebra,
/// comultiplications pass check_coalgebra, each listed (mult, comult) pair
/// passes check_bialgebra (parameterized entries at lambda in {0, 1, -1}),
/// and the worked-example bundles pass check_bundle.
struct VerifyItem {
    std::string label;
    bool passed;
    size_t residual_count;
};
std::vector<VerifyItem> verify_all();

} // namespace bialg::catalog
