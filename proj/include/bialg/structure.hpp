#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bialg/dense.hpp"

namespace bialg {

/// Multiplication by structure constants: mu(e_i (x) e_j) = sum_k c(i,j,k) e_k.
/// The unit is not part of this type; checkers and bundles carry it as a
/// coefficient vector so transported structures stay representable.
template <class S>
struct MultTensor {
    using Field = typename S::Field;

    MultTensor(const Field& f, int n) : c(f, n) { check_dim(n); }

    int dim() const { return c.dim(); }
    const Field& field() const { return c.field(); }

    bool operator==(const MultTensor& o) const { return c == o.c; }
    bool operator!=(const MultTensor& o) const { return !(*this == o); }

    Tensor3<S> c;
};

/// Comultiplication Delta(e_i) = sum_{j,k} d(i,j,k) e_j (x) e_k, bundled with
/// its counit vector xi. Raw data; axioms are checked elsewhere.
template <class S>
struct ComultTensor {
    using Field = typename S::Field;

    ComultTensor(const Field& f, int n) : d(f, n), counit(f, n) { check_dim(n); }

    int dim() const { return d.dim(); }
    const Field& field() const { return d.field(); }

    bool operator==(const ComultTensor& o) const { return d == o.d && counit == o.counit; }
    bool operator!=(const ComultTensor& o) const { return !(*this == o); }

    Tensor3<S> d;
    Vec<S> counit;
};

/// Endomorphism of V; column j = image of e_j.
template <class S>
using LinearEndo = Mat<S>;

enum class BundleKind {
    Algebra,
    Coalgebra,
    Bialgebra,
    Infinitesimal, // carries theta
    TwoAs,
    TwoB,
    TwoTwoB,
};

inline const char* kind_name(BundleKind k) {
    switch (k) {
        case BundleKind::Algebra: return "algebra";
        case BundleKind::Coalgebra: return "coalgebra";
        case BundleKind::Bialgebra: return "bialgebra";
        case BundleKind::Infinitesimal: return "infinitesimal";
        case BundleKind::TwoAs: return "2as";
        case BundleKind::TwoB: return "2b";
        case BundleKind::TwoTwoB: return "22b";
    }
    return "?";
}

/// A tagged collection of multiplications / comultiplications sharing one
/// dimension, field and unit vector.
template <class S>
struct Bundle {
    using Field = typename S::Field;

    BundleKind kind;
    std::vector<MultTensor<S>> mults;
    std::vector<ComultTensor<S>> comults;
    Vec<S> unit;
    std::optional<S> theta; // Infinitesimal kind only

    int dim() const { return unit.dim(); }
    const Field& field() const { return unit.field(); }

    bool operator==(const Bundle& o) const {
        return kind == o.kind && mults == o.mults && comults == o.comults && unit == o.unit && theta == o.theta;
    }

    /// Member counts per kind (structural well-formedness, not axioms).
    void validate_shape() const {
        auto need = [&](size_t nm, size_t nc) {
            if (mults.size() != nm || comults.size() != nc)
                throw DimMismatch(std::string("bundle of kind ") + kind_name(kind) + " has wrong member counts");
        };
        switch (kind) {
            case BundleKind::Algebra: need(1, 0); break;
            case BundleKind::Coalgebra: need(0, 1); break;
            case BundleKind::Bialgebra: need(1, 1); break;
            case BundleKind::Infinitesimal:
                need(1, 1);
                if (!theta) throw DimMismatch("infinitesimal bundle missing theta");
                break;
            case BundleKind::TwoAs: need(2, 1); break;
            case BundleKind::TwoB: need(2, 2); break;
            case BundleKind::TwoTwoB: need(2, 2); break;
        }
        for (const auto& m : mults)
            if (m.dim() != dim() || !(m.field() == field())) throw DimMismatch("bundle member dim/field mismatch");
        for (const auto& c : comults)
            if (c.dim() != dim() || !(c.field() == field())) throw DimMismatch("bundle member dim/field mismatch");
    }
};

// ---- evaluation -------------------------------------------------------------

/// mu(x, y): bilinear contraction sum_{i,j} x_i y_j C_ij^.
template <class S>
Vec<S> evaluate_mult(const MultTensor<S>& t, const Vec<S>& x, const Vec<S>& y) {
    const int n = t.dim();
    if (x.dim() != n || y.dim() != n) throw DimMismatch("evaluate_mult dimension mismatch");
    if (!(x.field() == t.field()) || !(y.field() == t.field())) throw FieldMismatch("evaluate_mult field mismatch");
    Vec<S> r(t.field(), n);
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            S xy = x[i] * y[j];
            for (int k = 0; k < n; ++k)
                r[k] += xy * t.c.at(i, j, k);
        }
    }
    return r;
}

/// Delta(x): linear contraction sum_i x_i D_i^..
template <class S>
Tensor2<S> evaluate_comult(const ComultTensor<S>& t, const Vec<S>& x) {
    const int n = t.dim();
    if (x.dim() != n) throw DimMismatch("evaluate_comult dimension mismatch");
    if (!(x.field() == t.field())) throw FieldMismatch("evaluate_comult field mismatch");
    Tensor2<S> r(t.field(), n);
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                r.at(j, k) += x[i] * t.d.at(i, j, k);
    }
    return r;
}

/// Counit applied to a coefficient vector.
template <class S>
S evaluate_counit(const ComultTensor<S>& t, const Vec<S>& x) {
    if (x.dim() != t.dim()) throw DimMismatch("counit dimension mismatch");
    S r = S::zero(t.field());
    for (int i = 0; i < t.dim(); ++i) r += t.counit[i] * x[i];
    return r;
}

/// The tensor-square product (x (x) y) . (x' (x) y') = mu(x (x) x') (x) mu(y (x) y'),
/// extended bilinearly to V (x) V.
template <class S>
Tensor2<S> tensor_square_product(const MultTensor<S>& t, const Tensor2<S>& u, const Tensor2<S>& v) {
    const int n = t.dim();
    if (u.dim() != n || v.dim() != n) throw DimMismatch("tensor_square_product dimension mismatch");
    if (!(u.field() == t.field()) || !(v.field() == t.field()))
        throw FieldMismatch("tensor_square_product field mismatch");
    Tensor2<S> r(t.field(), n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (u.at(a, b).is_zero()) continue;
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (v.at(c, d).is_zero()) continue;
                    S coef = u.at(a, b) * v.at(c, d);
                    for (int j = 0; j < n; ++j) {
                        if (t.c.at(a, c, j).is_zero()) continue;
                        S left = coef * t.c.at(a, c, j);
                        for (int k = 0; k < n; ++k)
                            r.at(j, k) += left * t.c.at(b, d, k);
                    }
                }
        }
    return r;
}

// ---- op / cop ---------------------------------------------------------------

/// mu^op(x (x) y) = mu(y (x) x): swap the two input slots.
template <class S>
MultTensor<S> op(const MultTensor<S>& t) {
    MultTensor<S> r(t.field(), t.dim());
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j)
            for (int k = 0; k < t.dim(); ++k)
                r.c.at(i, j, k) = t.c.at(j, i, k);
    return r;
}

/// Delta^cop = tau o Delta: swap the two output slots; counit unchanged.
template <class S>
ComultTensor<S> cop(const ComultTensor<S>& t) {
    ComultTensor<S> r(t.field(), t.dim());
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j)
            for (int k = 0; k < t.dim(); ++k)
                r.d.at(i, j, k) = t.d.at(i, k, j);
    r.counit = t.counit;
    return r;
}

template <class S>
Bundle<S> op_cop(const Bundle<S>& b) {
    Bundle<S> r = b;
    for (auto& m : r.mults) m = op(m);
    for (auto& c : r.comults) c = cop(c);
    return r;
}

// ---- structure transport ----------------------------------------------------

/// mu' = f o mu o (f^-1 (x) f^-1).
template <class S>
MultTensor<S> transport(const MultTensor<S>& t, const Mat<S>& f, const Mat<S>& finv) {
    const int n = t.dim();
    MultTensor<S> r(t.field(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // mu(f^-1 e_i, f^-1 e_j) in the old basis
            Vec<S> out(t.field(), n);
            for (int a = 0; a < n; ++a) {
                if (finv.at(a, i).is_zero()) continue;
                for (int b = 0; b < n; ++b) {
                    if (finv.at(b, j).is_zero()) continue;
                    S coef = finv.at(a, i) * finv.at(b, j);
                    for (int c = 0; c < n; ++c)
                        out[c] += coef * t.c.at(a, b, c);
                }
            }
            Vec<S> image = f.apply(out);
            for (int k = 0; k < n; ++k)
                r.c.at(i, j, k) = image[k];
        }
    return r;
}

/// Delta' = (f (x) f) o Delta o f^-1, eps' = eps o f^-1.
template <class S>
ComultTensor<S> transport(const ComultTensor<S>& t, const Mat<S>& f, const Mat<S>& finv) {
    const int n = t.dim();
    ComultTensor<S> r(t.field(), n);
    for (int i = 0; i < n; ++i) {
        for (int a = 0; a < n; ++a) {
            if (finv.at(a, i).is_zero()) continue;
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    if (t.d.at(a, b, c).is_zero()) continue;
                    S coef = finv.at(a, i) * t.d.at(a, b, c);
                    for (int j = 0; j < n; ++j) {
                        if (f.at(j, b).is_zero()) continue;
                        S left = coef * f.at(j, b);
                        for (int k = 0; k < n; ++k)
                            r.d.at(i, j, k) += left * f.at(k, c);
                    }
                }
        }
        for (int a = 0; a < n; ++a)
            r.counit[i] += t.counit[a] * finv.at(a, i);
    }
    return r;
}

/// Transport of a whole bundle; throws on singular f.
template <class S>
Bundle<S> transport(const Bundle<S>& b, const Mat<S>& f) {
    if (f.rows() != b.dim() || f.cols() != b.dim()) throw DimMismatch("transport dimension mismatch");
    auto finv = inverse(f);
    if (!finv) throw std::domain_error("transport by a singular endomorphism");
    Bundle<S> r = b;
    for (auto& m : r.mults) m = transport(m, f, *finv);
    for (auto& c : r.comults) c = transport(c, f, *finv);
    r.unit = f.apply(b.unit);
    return r;
}

// ---- field conversion -------------------------------------------------------

inline MultTensor<Fp> reduce_mod(const MultTensor<Rational>& t, const Fp::Field& f) {
    MultTensor<Fp> r(f, t.dim());
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j)
            for (int k = 0; k < t.dim(); ++k)
                r.c.at(i, j, k) = Fp::from_rational(f, t.c.at(i, j, k));
    return r;
}

inline ComultTensor<Fp> reduce_mod(const ComultTensor<Rational>& t, const Fp::Field& f) {
    ComultTensor<Fp> r(f, t.dim());
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j)
            for (int k = 0; k < t.dim(); ++k)
                r.d.at(i, j, k) = Fp::from_rational(f, t.d.at(i, j, k));
    for (int i = 0; i < t.dim(); ++i)
        r.counit[i] = Fp::from_rational(f, t.counit[i]);
    return r;
}

inline Vec<Fp> reduce_mod(const Vec<Rational>& v, const Fp::Field& f) {
    Vec<Fp> r(f, v.dim());
    for (int i = 0; i < v.dim(); ++i) r[i] = Fp::from_rational(f, v[i]);
    return r;
}

inline Bundle<Fp> reduce_mod(const Bundle<Rational>& b, const Fp::Field& f) {
    Bundle<Fp> r{b.kind, {}, {}, reduce_mod(b.unit, f), std::nullopt};
    for (const auto& m : b.mults) r.mults.push_back(reduce_mod(m, f));
    for (const auto& c : b.comults) r.comults.push_back(reduce_mod(c, f));
    if (b.theta) r.theta = Fp::from_rational(f, *b.theta);
    return r;
}

} // namespace bialg
