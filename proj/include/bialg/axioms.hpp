#pragma once

#include <string>
#include <vector>

#include "bialg/structure.hpp"

namespace bialg {

/// One violated component equation. Indices are 1-based, matching all I/O.
struct Residual {
    std::string context; // bundle member path, e.g. "mu2*delta"
    std::string axiom;   // assoc | unit | coassoc | counit_left | counit_right |
                         // compat_mult | compat_unit_image | compat_counit | infinitesimal
    std::vector<int> indices;
    std::string value;   // exact scalar, canonical string

    bool operator==(const Residual&) const = default;
};

/// Exact verdict of an axiom bundle; passed iff no residual survived.
struct CheckReport {
    bool passed = true;
    std::vector<Residual> residuals;
    std::string theta; // set by infinitesimal checks

    void add(std::string axiom, std::vector<int> idx, std::string value) {
        passed = false;
        residuals.push_back({"", std::move(axiom), std::move(idx), std::move(value)});
    }
    void merge(const std::string& prefix, const CheckReport& sub) {
        if (!sub.passed) passed = false;
        for (Residual r : sub.residuals) {
            r.context = r.context.empty() ? prefix : prefix + "/" + r.context;
            residuals.push_back(std::move(r));
        }
    }
};

namespace residuals {

// The generators below are the single source of truth for every axiom: the
// checkers evaluate them over Q / F_p, the system exporter evaluates the same
// code over a polynomial ring. Ring operations only; no division.

/// sum_l C_ij^l C_lk^s - C_jk^l C_il^s for all (i,j,k,s).
template <class S, class Emit>
void assoc(const MultTensor<S>& m, Emit&& emit) {
    const int n = m.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int s = 0; s < n; ++s) {
                    S acc = S::zero(m.field());
                    for (int l = 0; l < n; ++l) {
                        acc += m.c.at(i, j, l) * m.c.at(l, k, s);
                        acc -= m.c.at(j, k, l) * m.c.at(i, l, s);
                    }
                    emit(i, j, k, s, acc);
                }
}

/// mu(u, e_i) - e_i (side 1) and mu(e_i, u) - e_i (side 2), componentwise.
template <class S, class Emit>
void unit(const MultTensor<S>& m, const Vec<S>& u, Emit&& emit) {
    const int n = m.dim();
    for (int side = 1; side <= 2; ++side)
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                S acc = S::zero(m.field());
                for (int a = 0; a < n; ++a)
                    acc += u[a] * (side == 1 ? m.c.at(a, i, k) : m.c.at(i, a, k));
                if (i == k) acc -= S::one(m.field());
                emit(side, i, k, acc);
            }
}

/// ((Delta (x) id) - (id (x) Delta)) Delta (e_s), component (i,j,k).
template <class S, class Emit>
void coassoc(const ComultTensor<S>& c, Emit&& emit) {
    const int n = c.dim();
    for (int s = 0; s < n; ++s)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    S acc = S::zero(c.field());
                    for (int l = 0; l < n; ++l) {
                        acc += c.d.at(s, l, k) * c.d.at(l, i, j);
                        acc -= c.d.at(s, i, l) * c.d.at(l, j, k);
                    }
                    emit(s, i, j, k, acc);
                }
}

/// (eps (x) id) Delta = id (side 1 / counit_left) and (id (x) eps) Delta = id
/// (side 2 / counit_right); component j of the image of e_i.
template <class S, class Emit>
void counit(const ComultTensor<S>& c, Emit&& emit) {
    const int n = c.dim();
    for (int side = 1; side <= 2; ++side)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                S acc = S::zero(c.field());
                for (int l = 0; l < n; ++l)
                    acc += (side == 1 ? c.d.at(i, l, j) : c.d.at(i, j, l)) * c.counit[l];
                if (i == j) acc -= S::one(c.field());
                emit(side, i, j, acc);
            }
}

/// Delta(mu(e_i (x) e_j)) - Delta(e_i) . Delta(e_j), component (a,b).
template <class S, class Emit>
void bialgebra_compat(const MultTensor<S>& m, const ComultTensor<S>& c, Emit&& emit) {
    const int n = m.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<S> prod(m.field(), n);
            for (int k = 0; k < n; ++k) prod[k] = m.c.at(i, j, k);
            Tensor2<S> lhs = evaluate_comult(c, prod);
            Tensor2<S> di = evaluate_comult(c, Vec<S>::basis(m.field(), n, i));
            Tensor2<S> dj = evaluate_comult(c, Vec<S>::basis(m.field(), n, j));
            Tensor2<S> rhs = tensor_square_product(m, di, dj);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    emit(i, j, a, b, lhs.at(a, b) - rhs.at(a, b));
        }
}

/// eps(mu(e_i (x) e_j)) - eps(e_i) eps(e_j) for all (i,j), then eps(u) - 1.
template <class S, class EmitPair, class EmitUnit>
void counit_morphism(const MultTensor<S>& m, const ComultTensor<S>& c, const Vec<S>& u,
                     EmitPair&& emit_pair, EmitUnit&& emit_unit) {
    const int n = m.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            S acc = S::zero(m.field());
            for (int l = 0; l < n; ++l)
                acc += m.c.at(i, j, l) * c.counit[l];
            acc -= c.counit[i] * c.counit[j];
            emit_pair(i, j, acc);
        }
    S eu = S::zero(m.field());
    for (int l = 0; l < n; ++l) eu += c.counit[l] * u[l];
    emit_unit(eu - S::one(m.field()));
}

/// Delta(u) - u (x) u, component (a,b).
template <class S, class Emit>
void unit_image(const ComultTensor<S>& c, const Vec<S>& u, Emit&& emit) {
    const int n = c.dim();
    Tensor2<S> du = evaluate_comult(c, u);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            emit(a, b, du.at(a, b) - u[a] * u[b]);
}

/// Delta(mu(e_i (x) e_j)) - (mu (x) id)(id (x) Delta) - (id (x) mu)(Delta (x) id)
/// + theta * e_i (x) e_j, component (k,s).
template <class S, class Emit>
void infinitesimal(const MultTensor<S>& m, const ComultTensor<S>& c, const S& theta, Emit&& emit) {
    const int n = m.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int s = 0; s < n; ++s) {
                    S acc = S::zero(m.field());
                    for (int l = 0; l < n; ++l)
                        acc += m.c.at(i, j, l) * c.d.at(l, k, s);
                    for (int a = 0; a < n; ++a)
                        acc -= m.c.at(i, a, k) * c.d.at(j, a, s);
                    for (int b = 0; b < n; ++b)
                        acc -= m.c.at(b, j, s) * c.d.at(i, k, b);
                    if (i == k && j == s) acc += theta;
                    emit(i, j, k, s, acc);
                }
}

} // namespace residuals

// ---- checkers ----------------------------------------------------------------

template <class S>
void require_compatible(const MultTensor<S>& m, const Vec<S>& u) {
    if (m.dim() != u.dim()) throw DimMismatch("multiplication / unit dimension mismatch");
    if (!(m.field() == u.field())) throw FieldMismatch("multiplication / unit field mismatch");
}

/// Associativity plus the two-sided unit axiom against the given unit vector.
template <class S>
CheckReport check_algebra(const MultTensor<S>& m, const Vec<S>& u) {
    require_compatible(m, u);
    CheckReport rep;
    residuals::assoc(m, [&](int i, int j, int k, int s, const S& v) {
        if (!v.is_zero()) rep.add("assoc", {i + 1, j + 1, k + 1, s + 1}, to_string(v));
    });
    residuals::unit(m, u, [&](int side, int i, int k, const S& v) {
        if (!v.is_zero()) rep.add("unit", {side, i + 1, k + 1}, to_string(v));
    });
    return rep;
}

/// Coassociativity plus the two-sided counit axiom.
template <class S>
CheckReport check_coalgebra(const ComultTensor<S>& c) {
    CheckReport rep;
    residuals::coassoc(c, [&](int s, int i, int j, int k, const S& v) {
        if (!v.is_zero()) rep.add("coassoc", {s + 1, i + 1, j + 1, k + 1}, to_string(v));
    });
    residuals::counit(c, [&](int side, int i, int j, const S& v) {
        if (!v.is_zero()) rep.add(side == 1 ? "counit_left" : "counit_right", {i + 1, j + 1}, to_string(v));
    });
    return rep;
}

/// Coassociativity only (the counit-free coalgebra precheck used at theta = 0).
template <class S>
CheckReport check_coassoc_only(const ComultTensor<S>& c) {
    CheckReport rep;
    residuals::coassoc(c, [&](int s, int i, int j, int k, const S& v) {
        if (!v.is_zero()) rep.add("coassoc", {s + 1, i + 1, j + 1, k + 1}, to_string(v));
    });
    return rep;
}

/// Full bialgebra check. A failing algebra/coalgebra precheck is reported as
/// such (residual labels exclusively from the failing family); compatibility
/// residuals appear only once the prechecks pass.
template <class S>
CheckReport check_bialgebra(const MultTensor<S>& m, const ComultTensor<S>& c, const Vec<S>& u) {
    require_compatible(m, u);
    if (m.dim() != c.dim()) throw DimMismatch("multiplication / comultiplication dimension mismatch");
    if (!(m.field() == c.field())) throw FieldMismatch("multiplication / comultiplication field mismatch");
    CheckReport pre = check_algebra(m, u);
    {
        CheckReport co = check_coalgebra(c);
        if (!co.passed) pre.merge("", co);
    }
    if (!pre.passed) return pre;

    CheckReport rep;
    residuals::bialgebra_compat(m, c, [&](int i, int j, int a, int b, const S& v) {
        if (!v.is_zero()) rep.add("compat_mult", {i + 1, j + 1, a + 1, b + 1}, to_string(v));
    });
    residuals::counit_morphism(
        m, c, u,
        [&](int i, int j, const S& v) {
            if (!v.is_zero()) rep.add("compat_counit", {i + 1, j + 1}, to_string(v));
        },
        [&](const S& v) {
            if (!v.is_zero()) rep.add("compat_counit", {}, to_string(v));
        });
    residuals::unit_image(c, u, [&](int a, int b, const S& v) {
        if (!v.is_zero()) rep.add("compat_unit_image", {a + 1, b + 1}, to_string(v));
    });
    return rep;
}

/// Generalized infinitesimal check: Delta o mu = (mu (x) id)(id (x) Delta)
/// + (id (x) mu)(Delta (x) id) - theta id (x) id. theta = 1 is the unital
/// infinitesimal relation, theta = 0 the derivation variant (counit-free:
/// a counit would force eps-normalization of Delta(1) = 0).
template <class S>
CheckReport check_infinitesimal(const MultTensor<S>& m, const ComultTensor<S>& c, const Vec<S>& u, const S& theta) {
    require_compatible(m, u);
    if (m.dim() != c.dim()) throw DimMismatch("multiplication / comultiplication dimension mismatch");
    if (!(m.field() == c.field())) throw FieldMismatch("multiplication / comultiplication field mismatch");
    CheckReport pre = check_algebra(m, u);
    {
        CheckReport co = theta.is_zero() ? check_coassoc_only(c) : check_coalgebra(c);
        if (!co.passed) pre.merge("", co);
    }
    pre.theta = to_string(theta);
    if (!pre.passed) return pre;

    CheckReport rep;
    rep.theta = to_string(theta);
    residuals::infinitesimal(m, c, theta, [&](int i, int j, int k, int s, const S& v) {
        if (!v.is_zero()) rep.add("infinitesimal", {i + 1, j + 1, k + 1, s + 1}, to_string(v));
    });
    if (theta == S::one(m.field())) {
        residuals::unit_image(c, u, [&](int a, int b, const S& v) {
            if (!v.is_zero()) rep.add("compat_unit_image", {a + 1, b + 1}, to_string(v));
        });
    }
    return rep;
}

/// Dispatch on the bundle kind; sub-reports are concatenated with member
/// context prefixes.
template <class S>
CheckReport check_bundle(const Bundle<S>& b) {
    b.validate_shape();
    const S one = S::one(b.field());
    CheckReport rep;
    switch (b.kind) {
        case BundleKind::Algebra:
            rep.merge("mu", check_algebra(b.mults[0], b.unit));
            break;
        case BundleKind::Coalgebra:
            rep.merge("delta", check_coalgebra(b.comults[0]));
            break;
        case BundleKind::Bialgebra:
            rep.merge("mu*delta", check_bialgebra(b.mults[0], b.comults[0], b.unit));
            break;
        case BundleKind::Infinitesimal:
            rep.merge("mu*delta", check_infinitesimal(b.mults[0], b.comults[0], b.unit, *b.theta));
            break;
        case BundleKind::TwoAs:
            rep.merge("mu1*delta", check_bialgebra(b.mults[0], b.comults[0], b.unit));
            rep.merge("mu2*delta", check_infinitesimal(b.mults[1], b.comults[0], b.unit, one));
            break;
        case BundleKind::TwoB:
            rep.merge("mu1*delta1", check_bialgebra(b.mults[0], b.comults[0], b.unit));
            rep.merge("mu2*delta2", check_bialgebra(b.mults[1], b.comults[1], b.unit));
            rep.merge("mu1*delta2", check_bialgebra(b.mults[0], b.comults[1], b.unit));
            rep.merge("mu2*delta1", check_bialgebra(b.mults[1], b.comults[0], b.unit));
            break;
        case BundleKind::TwoTwoB:
            rep.merge("mu1*delta1", check_bialgebra(b.mults[0], b.comults[0], b.unit));
            rep.merge("mu2*delta2", check_bialgebra(b.mults[1], b.comults[1], b.unit));
            rep.merge("mu1*delta2", check_infinitesimal(b.mults[0], b.comults[1], b.unit, one));
            rep.merge("mu2*delta1", check_infinitesimal(b.mults[1], b.comults[0], b.unit, one));
            break;
    }
    return rep;
}

} // namespace bialg
