#pragma once

#include <string>
#include <vector>

#include "bialg/catalog.hpp"

namespace bialg::census {

/// Per-multiplication compatibility counts, recomputed from raw axiom checks
/// over the comultiplications listed under that multiplication.
struct PerMult {
    std::string mult_id;
    int computed_bialgebras = 0;
    int computed_infinitesimals = 0;
    int published_bialgebras = 0;
    int published_infinitesimals = 0;
    std::vector<std::string> bialgebra_ids;
    std::vector<std::string> infinitesimal_ids;
};

struct PairRef {
    std::string mult_id, comult_id;
    bool operator==(const PairRef&) const = default;
};

/// Non-trivial 2-associative bialgebra combination: unordered multiplication
/// pair plus one shared comultiplication; an orientation records which
/// multiplication carries the bialgebra side and which the infinitesimal side.
struct ComboTwoAs {
    std::string mult_a, mult_b; // catalog order, a before b
    std::string comult;         // universe representative id
    bool bial_a_inf_b = false;  // (mult_a, comult) bialgebra and (mult_b, comult) infinitesimal
    bool bial_b_inf_a = false;
};

struct ComboType21 {
    std::string mult_a, mult_b, comult;
};

struct ComboType22 {
    std::string mult_a, mult_b, comult_c, comult_d; // comults unordered, c before d in universe order
};

/// 2-2-bialgebra combination with distinct multiplications.
struct ComboTwoTwo {
    std::string mult_a, mult_b, comult_c, comult_d; // unordered comult pair (c <= d in universe order)
    bool distinct_comults = false;
    bool orient_cd = false; // quadruple (mult_a, mult_b, comult_c, comult_d) passes
    bool orient_dc = false; // quadruple (mult_a, mult_b, comult_d, comult_c) passes
};

/// An exact isomorphism found between two catalog pair-bundles (used in
/// dimension 2, where the raw census finds more structures than the
/// classification counts).
struct IsoNote {
    PairRef from, to;
    std::vector<std::string> witness_rows; // matrix rows, comma-separated exact entries
};

struct CensusTable {
    int dim = 0;

    std::vector<PerMult> per_mult;

    std::vector<PairRef> trivial_2as; // both bialgebra and theta=1 infinitesimal
    int published_trivial_2as = 0;

    std::vector<ComboTwoAs> nontrivial_2as;
    int published_nontrivial_2as = 0;

    long type_11 = 0, type_12 = 0;
    std::vector<ComboType21> type_21;
    std::vector<ComboType22> type_22;
    long published_type_11 = 0, published_type_12 = 0, published_type_21 = 0, published_type_22 = 0;

    std::vector<ComboTwoTwo> twotwob_cross; // distinct multiplications
    long twotwob_same_mult_mixed = 0;       // same multiplication, two distinct comultiplications
    int published_twotwob = 0;                  // published count of 2-2-bialgebras for this dimension

    std::vector<std::string> alias_notes; // entrywise coincidences between catalog entries
    std::vector<IsoNote> iso_notes;       // exact transport witnesses between raw finds
};

/// Recompute the whole table from the catalog by running the axiom checkers;
/// no published number feeds the computation (they are carried for display).
CensusTable run(int dim);

/// Human-readable rendering, computed values side by side with the published
/// ones, agreements and deviations marked.
std::string render(const CensusTable& t);

} // namespace bialg::census
