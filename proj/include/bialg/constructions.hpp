#pragma once

#include "bialg/axioms.hpp"

namespace bialg {

/// A unital associative algebra whose unit is the first basis vector; the
/// builders below adjoin a fresh unit in front of the basis, so the old unit
/// lands at index 2 (1-based).
template <class S>
struct UnitalAlgebraInput {
    MultTensor<S> mult;

    explicit UnitalAlgebraInput(MultTensor<S> m) : mult(std::move(m)) {
        Vec<S> e1 = Vec<S>::basis(mult.field(), mult.dim(), 0);
        CheckReport rep = check_algebra(mult, e1);
        if (!rep.passed)
            throw std::invalid_argument("input is not a unital associative algebra with unit e1");
    }

    int dim() const { return mult.dim(); }
    Vec<S> unit() const { return Vec<S>::basis(mult.field(), mult.dim(), 0); }
};

template <class S>
struct BialgebraData {
    MultTensor<S> mult;
    ComultTensor<S> comult;
    Vec<S> unit; // e1 of the enlarged space

    Bundle<S> as_bundle(BundleKind kind, std::optional<S> theta = std::nullopt) const {
        return Bundle<S>{kind, {mult}, {comult}, unit, std::move(theta)};
    }
};

namespace detail {

/// Extend mu to span(e1_new, old basis): e1_new is a two-sided unit, old
/// products are kept with all indices shifted by one.
template <class S>
MultTensor<S> adjoin_unit(const MultTensor<S>& m) {
    const int n = m.dim();
    MultTensor<S> r(m.field(), n + 1);
    const S one = S::one(m.field());
    for (int k = 0; k <= n; ++k) {
        r.c.at(0, k, k) = one;
        if (k > 0) r.c.at(k, 0, k) = one;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                r.c.at(i + 1, j + 1, k + 1) = m.c.at(i, j, k);
    return r;
}

/// Counit picking off the coefficient of the adjoined unit.
template <class S>
Vec<S> adjoined_counit(const typename S::Field& f, int dim_out) {
    Vec<S> xi(f, dim_out);
    xi[0] = S::one(f);
    return xi;
}

} // namespace detail

/// First Kaplansky bialgebra: Delta(x) = x (x) e1 + e1 (x) x - e2 (x) x on old
/// basis vectors, Delta(e1) = e1 (x) e1. Output is a bialgebra and a unital
/// infinitesimal bialgebra.
template <class S>
BialgebraData<S> kaplansky_k1(const UnitalAlgebraInput<S>& a) {
    const int n = a.dim();
    const auto& f = a.mult.field();
    const S one = S::one(f);
    BialgebraData<S> out{detail::adjoin_unit(a.mult), ComultTensor<S>(f, n + 1),
                         Vec<S>::basis(f, n + 1, 0)};
    out.comult.d.at(0, 0, 0) = one;
    for (int x = 1; x <= n; ++x) {
        out.comult.d.at(x, x, 0) += one;  // x (x) e1
        out.comult.d.at(x, 0, x) += one;  // e1 (x) x
        out.comult.d.at(x, 1, x) -= one;  // - e2 (x) x  (old unit sits at index 2)
    }
    out.comult.counit = detail::adjoined_counit<S>(f, n + 1);
    return out;
}

/// Second Kaplansky bialgebra: Delta(e2) = e2 (x) e1 + e1 (x) e2 - e2 (x) e2,
/// Delta(x) = (e1 - e2) (x) x + x (x) (e1 - e2) on the other old basis vectors.
/// Output is a bialgebra but in general not unital infinitesimal.
template <class S>
BialgebraData<S> kaplansky_k2(const UnitalAlgebraInput<S>& a) {
    const int n = a.dim();
    const auto& f = a.mult.field();
    const S one = S::one(f);
    BialgebraData<S> out{detail::adjoin_unit(a.mult), ComultTensor<S>(f, n + 1),
                         Vec<S>::basis(f, n + 1, 0)};
    out.comult.d.at(0, 0, 0) = one;
    out.comult.d.at(1, 1, 0) += one;
    out.comult.d.at(1, 0, 1) += one;
    out.comult.d.at(1, 1, 1) -= one;
    for (int x = 2; x <= n; ++x) {
        out.comult.d.at(x, 0, x) += one; // (e1 - e2) (x) x
        out.comult.d.at(x, 1, x) -= one;
        out.comult.d.at(x, x, 0) += one; // x (x) (e1 - e2)
        out.comult.d.at(x, x, 1) -= one;
    }
    out.comult.counit = detail::adjoined_counit<S>(f, n + 1);
    return out;
}

template <class S>
struct BuiltBundle {
    Bundle<S> bundle;
    CheckReport report; // postcondition self-check
};

template <class S>
void require_same_dim(const UnitalAlgebraInput<S>& a, const UnitalAlgebraInput<S>& b) {
    if (a.dim() != b.dim()) throw DimMismatch("input algebras must share dimension");
    if (!(a.mult.field() == b.mult.field())) throw FieldMismatch("input algebras must share field");
}

/// (n+1)-dimensional 2-associative bialgebra from two n-dimensional algebras.
template <class S>
BuiltBundle<S> build_2as(const UnitalAlgebraInput<S>& a, const UnitalAlgebraInput<S>& a2) {
    require_same_dim(a, a2);
    BialgebraData<S> k1 = kaplansky_k1(a);
    BialgebraData<S> k1b = kaplansky_k1(a2);
    Bundle<S> b{BundleKind::TwoAs, {k1.mult, k1b.mult}, {k1.comult}, k1.unit, std::nullopt};
    return {b, check_bundle(b)};
}

/// Two (n+1)-dimensional 2-bialgebras: B1 with (Delta1, Delta2) from K1/K2,
/// B2 with Delta1 replaced by its cop.
template <class S>
std::pair<BuiltBundle<S>, BuiltBundle<S>> build_2b(const UnitalAlgebraInput<S>& a1, const UnitalAlgebraInput<S>& a2) {
    require_same_dim(a1, a2);
    BialgebraData<S> k1 = kaplansky_k1(a1);
    BialgebraData<S> k2 = kaplansky_k2(a2);
    Bundle<S> b1{BundleKind::TwoB, {k1.mult, k2.mult}, {k1.comult, k2.comult}, k1.unit, std::nullopt};
    Bundle<S> b2 = b1;
    b2.comults[0] = cop(k1.comult);
    return {BuiltBundle<S>{b1, check_bundle(b1)}, BuiltBundle<S>{b2, check_bundle(b2)}};
}

/// (n+1)-dimensional 2-2-bialgebra: both comultiplications are the K1 one.
template <class S>
BuiltBundle<S> build_22b(const UnitalAlgebraInput<S>& a1, const UnitalAlgebraInput<S>& a2) {
    require_same_dim(a1, a2);
    BialgebraData<S> k1 = kaplansky_k1(a1);
    BialgebraData<S> k1b = kaplansky_k1(a2);
    Bundle<S> b{BundleKind::TwoTwoB, {k1.mult, k1b.mult}, {k1.comult, k1.comult}, k1.unit, std::nullopt};
    return {b, check_bundle(b)};
}

} // namespace bialg
