#pragma once

#include <optional>

#include "bialg/axioms.hpp"

namespace bialg {

/// Convolution context: a verified (mu, Delta) pair turning Hom(V,V) into an
/// associative algebra via f * g = mu o (f (x) g) o Delta.
template <class S>
class EndoAlgebraContext {
public:
    static EndoAlgebraContext bialgebra(MultTensor<S> m, ComultTensor<S> c, Vec<S> unit) {
        EndoAlgebraContext ctx(std::move(m), std::move(c), std::move(unit), std::nullopt);
        CheckReport rep = check_bialgebra(ctx.m_, ctx.c_, ctx.unit_);
        if (!rep.passed) throw std::invalid_argument("context pair is not a bialgebra");
        return ctx;
    }

    static EndoAlgebraContext infinitesimal(MultTensor<S> m, ComultTensor<S> c, Vec<S> unit, S theta) {
        EndoAlgebraContext ctx(std::move(m), std::move(c), std::move(unit), theta);
        CheckReport rep = check_infinitesimal(ctx.m_, ctx.c_, ctx.unit_, theta);
        if (!rep.passed) throw std::invalid_argument("context pair is not infinitesimal for the given theta");
        return ctx;
    }

    int dim() const { return m_.dim(); }
    const typename S::Field& field() const { return m_.field(); }
    const MultTensor<S>& mult() const { return m_; }
    const ComultTensor<S>& comult() const { return c_; }
    const Vec<S>& unit() const { return unit_; }
    const std::optional<S>& theta() const { return theta_; }

private:
    EndoAlgebraContext(MultTensor<S> m, ComultTensor<S> c, Vec<S> unit, std::optional<S> theta)
        : m_(std::move(m)), c_(std::move(c)), unit_(std::move(unit)), theta_(std::move(theta)) {
        if (m_.dim() != c_.dim() || m_.dim() != unit_.dim()) throw DimMismatch("context dimension mismatch");
    }

    MultTensor<S> m_;
    ComultTensor<S> c_;
    Vec<S> unit_;
    std::optional<S> theta_;
};

/// (f * g)(e_i) = sum_{a,b} D_i^{ab} mu(f(e_a) (x) g(e_b)).
template <class S>
Mat<S> convolution(const EndoAlgebraContext<S>& ctx, const Mat<S>& f, const Mat<S>& g) {
    const int n = ctx.dim();
    if (f.rows() != n || f.cols() != n || g.rows() != n || g.cols() != n)
        throw DimMismatch("convolution endomorphism dimension mismatch");
    Mat<S> r(ctx.field(), n, n);
    for (int i = 0; i < n; ++i) {
        Vec<S> col(ctx.field(), n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const S& coef = ctx.comult().d.at(i, a, b);
                if (coef.is_zero()) continue;
                // mu(f e_a, g e_b)
                for (int p = 0; p < n; ++p) {
                    if (f.at(p, a).is_zero()) continue;
                    for (int q = 0; q < n; ++q) {
                        if (g.at(q, b).is_zero()) continue;
                        S w = coef * f.at(p, a) * g.at(q, b);
                        for (int k = 0; k < n; ++k)
                            col[k] += w * ctx.mult().c.at(p, q, k);
                    }
                }
            }
        for (int k = 0; k < n; ++k) r.at(k, i) = col[k];
    }
    return r;
}

/// The convolution unit x -> eps(x) * unit (the map eta o eps on V).
template <class S>
Mat<S> convolution_unit(const EndoAlgebraContext<S>& ctx) {
    const int n = ctx.dim();
    Mat<S> r(ctx.field(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.at(i, j) = ctx.unit()[i] * ctx.comult().counit[j];
    return r;
}

enum class RotaBaxterSide { Left, Right };

/// phi(f) = id * f (left) or f * id (right).
template <class S>
Mat<S> rota_baxter_phi(const EndoAlgebraContext<S>& ctx, RotaBaxterSide side, const Mat<S>& f) {
    Mat<S> id = Mat<S>::identity(ctx.field(), ctx.dim());
    return side == RotaBaxterSide::Left ? convolution(ctx, id, f) : convolution(ctx, f, id);
}

/// phi(f) o phi(g) - phi(f o g) - phi(phi(f) o g + f o phi(g)); the zero map
/// iff (f, g) satisfies the Rota-Baxter identity for this phi.
template <class S>
Mat<S> rota_baxter_residual(const EndoAlgebraContext<S>& ctx, RotaBaxterSide side, const Mat<S>& f, const Mat<S>& g) {
    Mat<S> pf = rota_baxter_phi(ctx, side, f);
    Mat<S> pg = rota_baxter_phi(ctx, side, g);
    Mat<S> lhs = pf * pg - rota_baxter_phi(ctx, side, f * g);
    Mat<S> rhs = rota_baxter_phi(ctx, side, pf * g + f * pg);
    return lhs - rhs;
}

/// m(e_i, e_j) = sum mu(mu(e_j_(1) (x) e_i) (x) e_j_(2)) as a structure-constant
/// tensor: M_ij^k = sum_{a,b,t} D_j^{ab} C_{a i}^t C_{t b}^k. No unit is claimed.
template <class S>
MultTensor<S> prelie_mult(const MultTensor<S>& m, const ComultTensor<S>& c) {
    if (m.dim() != c.dim()) throw DimMismatch("prelie_mult dimension mismatch");
    if (!(m.field() == c.field())) throw FieldMismatch("prelie_mult field mismatch");
    const int n = m.dim();
    MultTensor<S> r(m.field(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    const S& d = c.d.at(j, a, b);
                    if (d.is_zero()) continue;
                    for (int t = 0; t < n; ++t) {
                        const S& inner = m.c.at(a, i, t);
                        if (inner.is_zero()) continue;
                        S w = d * inner;
                        for (int k = 0; k < n; ++k)
                            r.c.at(i, j, k) += w * m.c.at(t, b, k);
                    }
                }
    return r;
}

/// PreLie identity residuals over all basis triples, plus Jacobi and
/// antisymmetry of the commutator bracket.
template <class S>
CheckReport check_prelie(const MultTensor<S>& m) {
    const int n = m.dim();
    CheckReport rep;
    auto prod = [&](const Vec<S>& x, const Vec<S>& y) { return evaluate_mult(m, x, y); };
    auto basis = [&](int i) { return Vec<S>::basis(m.field(), n, i); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec<S> x = basis(i), y = basis(j), z = basis(k);
                Vec<S> lhs = prod(x, prod(y, z)) - prod(prod(x, y), z);
                Vec<S> rhs = prod(y, prod(x, z)) - prod(prod(y, x), z);
                Vec<S> res = lhs - rhs;
                for (int s = 0; s < n; ++s)
                    if (!res[s].is_zero()) rep.add("prelie", {i + 1, j + 1, k + 1, s + 1}, to_string(res[s]));
            }
    // commutator bracket
    MultTensor<S> br(m.field(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                br.c.at(i, j, k) = m.c.at(i, j, k) - m.c.at(j, i, k);
    auto bracket = [&](const Vec<S>& x, const Vec<S>& y) { return evaluate_mult(br, x, y); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<S> anti = bracket(basis(i), basis(j)) + bracket(basis(j), basis(i));
            for (int s = 0; s < n; ++s)
                if (!anti[s].is_zero()) rep.add("antisym", {i + 1, j + 1, s + 1}, to_string(anti[s]));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec<S> jac = bracket(basis(i), bracket(basis(j), basis(k)))
                           + bracket(basis(j), bracket(basis(k), basis(i)))
                           + bracket(basis(k), bracket(basis(i), basis(j)));
                for (int s = 0; s < n; ++s)
                    if (!jac[s].is_zero()) rep.add("jacobi", {i + 1, j + 1, k + 1, s + 1}, to_string(jac[s]));
            }
    return rep;
}

} // namespace bialg
