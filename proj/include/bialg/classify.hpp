#pragma once

#include <algorithm>
#include <optional>
#include <thread>

#include "bialg/axioms.hpp"

namespace bialg::classify {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Basis-free invariants of one multiplication.
struct MultInvariants {
    bool commutative = false;
    int dim_commutator = 0;  // rank of span{mu(x,y) - mu(y,x)}
    int dim_annihilator = 0; // dim{x : mu(x,V) = mu(V,x) = 0}
    bool operator==(const MultInvariants&) const = default;
};

/// Basis-free invariants of one comultiplication (primitives taken against
/// the bundle's unit vector).
struct ComultInvariants {
    bool cocommutative = false;
    int dim_primitives = 0; // dim{x : Delta(x) = x (x) 1 + 1 (x) x}
    bool operator==(const ComultInvariants&) const = default;
};

/// Transport-invariant fingerprint; equality is a necessary condition for
/// isomorphism of bundles.
struct Fingerprint {
    std::vector<MultInvariants> mults;
    std::vector<ComultInvariants> comults;
    bool operator==(const Fingerprint&) const = default;

    std::string str() const {
        std::string s = "{";
        for (const auto& m : mults)
            s += std::string(" mult(comm=") + (m.commutative ? "1" : "0") +
                 ",commutator=" + std::to_string(m.dim_commutator) +
                 ",annihilator=" + std::to_string(m.dim_annihilator) + ")";
        for (const auto& c : comults)
            s += std::string(" comult(cocomm=") + (c.cocommutative ? "1" : "0") +
                 ",primitives=" + std::to_string(c.dim_primitives) + ")";
        return s + " }";
    }
};

template <class S>
MultInvariants mult_invariants(const MultTensor<S>& m) {
    const int n = m.dim();
    MultInvariants inv;
    inv.commutative = true;
    std::vector<Vec<S>> commutators;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec<S> d(m.field(), n);
            bool nonzero = false;
            for (int k = 0; k < n; ++k) {
                d[k] = m.c.at(i, j, k) - m.c.at(j, i, k);
                nonzero = nonzero || !d[k].is_zero();
            }
            if (nonzero) inv.commutative = false;
            commutators.push_back(d);
        }
    inv.dim_commutator = span_rank(commutators);
    // annihilator: 2n^2 linear conditions on x
    Mat<S> sys(m.field(), 2 * n * n, n);
    int row = 0;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k, ++row)
            for (int i = 0; i < n; ++i)
                sys.at(row, i) = m.c.at(i, j, k);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k, ++row)
            for (int i = 0; i < n; ++i)
                sys.at(row, i) = m.c.at(j, i, k);
    inv.dim_annihilator = static_cast<int>(kernel(sys).size());
    return inv;
}

template <class S>
ComultInvariants comult_invariants(const ComultTensor<S>& c, const Vec<S>& unit) {
    const int n = c.dim();
    ComultInvariants inv;
    inv.cocommutative = true;
    for (int i = 0; i < n && inv.cocommutative; ++i)
        for (int j = 0; j < n && inv.cocommutative; ++j)
            for (int k = 0; k < n; ++k)
                if (c.d.at(i, j, k) != c.d.at(i, k, j)) {
                    inv.cocommutative = false;
                    break;
                }
    // primitives: Delta(x) - x (x) u - u (x) x = 0, coefficient of x_i in
    // component (j,k) is D_i^{jk} - delta_ij u_k - u_j delta_ik.
    Mat<S> sys(c.field(), n * n, n);
    int row = 0;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k, ++row)
            for (int i = 0; i < n; ++i) {
                S v = c.d.at(i, j, k);
                if (i == j) v -= unit[k];
                if (i == k) v -= unit[j];
                sys.at(row, i) = v;
            }
    inv.dim_primitives = static_cast<int>(kernel(sys).size());
    return inv;
}

template <class S>
Fingerprint fingerprint(const Bundle<S>& b) {
    b.validate_shape();
    Fingerprint fp;
    for (const auto& m : b.mults) fp.mults.push_back(mult_invariants(m));
    for (const auto& c : b.comults) fp.comults.push_back(comult_invariants(c, b.unit));
    return fp;
}

// ---- exhaustive isomorphism search over F_p -----------------------------------

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 21;

namespace detail {

/// p^digits with overflow/budget guard.
inline std::uint64_t candidate_count(std::uint64_t p, int digits, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (int i = 0; i < digits; ++i) {
        if (total > budget / p) throw BudgetExceeded("candidate space exceeds budget");
        total *= p;
    }
    if (total > budget) throw BudgetExceeded("candidate space exceeds budget");
    return total;
}

inline std::optional<int> basis_index(const Vec<Fp>& v) {
    int idx = -1;
    for (int i = 0; i < v.dim(); ++i) {
        if (v[i].is_zero()) continue;
        if (idx >= 0 || v[i] != Fp::one(v.field())) return std::nullopt;
        idx = i;
    }
    if (idx < 0) return std::nullopt;
    return idx;
}

} // namespace detail

/// Exhaustive search for an invertible f with transport(b1, f) == b2,
/// entrywise, over all matrices carrying unit(b1) to unit(b2). Deterministic
/// first-found order: the free entries are enumerated row-major, first entry
/// most significant, digits ascending 0..p-1.
inline std::optional<Mat<Fp>> isom_search_fp(const Bundle<Fp>& b1, const Bundle<Fp>& b2,
                                             std::uint64_t budget = kDefaultBudget) {
    if (b1.dim() != b2.dim()) throw DimMismatch("isomorphism search: dimension mismatch");
    if (!(b1.field() == b2.field())) throw FieldMismatch("isomorphism search: field mismatch");
    if (b1.kind != b2.kind) throw DimMismatch("isomorphism search: bundle kind mismatch");
    const int n = b1.dim();
    const Fp::Field F = b1.field();
    const std::uint64_t p = F.p;

    std::optional<int> fixed_col = detail::basis_index(b1.unit);
    const int digits = fixed_col ? n * (n - 1) : n * n;
    const std::uint64_t total = detail::candidate_count(p, digits, budget);

    std::vector<int> digit(static_cast<size_t>(digits), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Mat<Fp> f(F, n, n);
        int d = 0;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                if (fixed_col && c == *fixed_col)
                    f.at(r, c) = b2.unit[r];
                else
                    f.at(r, c) = Fp(F, digit[static_cast<size_t>(d++)]);
            }
        bool usable = !fixed_col ? (f.apply(b1.unit) == b2.unit) : true;
        if (usable && !determinant(f).is_zero() && transport(b1, f) == b2) return f;
        // odometer increment, last digit fastest
        for (int i = digits - 1; i >= 0; --i) {
            if (++digit[static_cast<size_t>(i)] < static_cast<int>(p)) break;
            digit[static_cast<size_t>(i)] = 0;
        }
    }
    return std::nullopt;
}

// ---- brute-force discovery over F_p -------------------------------------------

enum class DiscoverMode { Bialgebra, Infinitesimal };

namespace detail {

/// Fast early-exit filters used inside the enumeration loop; discovery output
/// is independently re-validated by the full checkers in the test suites.
inline bool coassoc_ok(const ComultTensor<Fp>& c) {
    const int n = c.dim();
    for (int s = 0; s < n; ++s)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    Fp acc = Fp::zero(c.field());
                    for (int l = 0; l < n; ++l) {
                        acc += c.d.at(s, l, k) * c.d.at(l, i, j);
                        acc -= c.d.at(s, i, l) * c.d.at(l, j, k);
                    }
                    if (!acc.is_zero()) return false;
                }
    return true;
}

inline bool counit_ok(const ComultTensor<Fp>& c) {
    const int n = c.dim();
    for (int side = 1; side <= 2; ++side)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Fp acc = Fp::zero(c.field());
                for (int l = 0; l < n; ++l)
                    acc += (side == 1 ? c.d.at(i, l, j) : c.d.at(i, j, l)) * c.counit[l];
                if (i == j) acc -= Fp::one(c.field());
                if (!acc.is_zero()) return false;
            }
    return true;
}

inline bool bialgebra_compat_ok(const MultTensor<Fp>& m, const ComultTensor<Fp>& c) {
    const int n = m.dim();
    const auto F = m.field();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<Fp> prod(F, n);
            for (int k = 0; k < n; ++k) prod[k] = m.c.at(i, j, k);
            Tensor2<Fp> lhs = evaluate_comult(c, prod);
            Tensor2<Fp> di = evaluate_comult(c, Vec<Fp>::basis(F, n, i));
            Tensor2<Fp> dj = evaluate_comult(c, Vec<Fp>::basis(F, n, j));
            if (lhs != tensor_square_product(m, di, dj)) return false;
            Fp eps = Fp::zero(F);
            for (int l = 0; l < n; ++l) eps += m.c.at(i, j, l) * c.counit[l];
            if (eps != c.counit[i] * c.counit[j]) return false;
        }
    return true;
}

inline bool infinitesimal_ok(const MultTensor<Fp>& m, const ComultTensor<Fp>& c, const Fp& theta) {
    const int n = m.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int s = 0; s < n; ++s) {
                    Fp acc = Fp::zero(m.field());
                    for (int l = 0; l < n; ++l)
                        acc += m.c.at(i, j, l) * c.d.at(l, k, s);
                    for (int a = 0; a < n; ++a)
                        acc -= m.c.at(i, a, k) * c.d.at(j, a, s);
                    for (int b = 0; b < n; ++b)
                        acc -= m.c.at(b, j, s) * c.d.at(i, k, b);
                    if (i == k && j == s) acc += theta;
                    if (!acc.is_zero()) return false;
                }
    return true;
}

} // namespace detail

/// All comultiplication tensors over F_p compatible with m, by exhaustive
/// lexicographic enumeration of the free structure constants. The unit must
/// be e1. Bialgebra mode and theta != 0 impose Delta(e1) = theta e1 (x) e1
/// and xi_1 = 1 and enumerate the remaining counit coordinates; theta = 0
/// imposes Delta(e1) = 0 and carries no counit. Chunks of the candidate
/// space may be processed on several threads; the output order equals the
/// sequential lexicographic order.
inline std::vector<ComultTensor<Fp>> discover_fp(const MultTensor<Fp>& m, DiscoverMode mode, const Fp& theta,
                                                 std::uint64_t budget = kDefaultBudget, unsigned threads = 0) {
    const int n = m.dim();
    const Fp::Field F = m.field();
    const std::uint64_t p = F.p;
    const Vec<Fp> e1 = Vec<Fp>::basis(F, n, 0);
    if (!check_algebra(m, e1).passed)
        throw std::invalid_argument("discover_fp requires a unital associative algebra with unit e1");

    const bool with_counit = mode == DiscoverMode::Bialgebra || !theta.is_zero();
    const int digits = (n - 1) * n * n + (with_counit ? (n - 1) : 0);
    const std::uint64_t total = detail::candidate_count(p, digits, budget);

    auto decode = [&](std::uint64_t idx, std::vector<int>& digit) {
        for (int d = digits - 1; d >= 0; --d) {
            digit[static_cast<size_t>(d)] = static_cast<int>(idx % p);
            idx /= p;
        }
    };
    auto build = [&](const std::vector<int>& digit) {
        ComultTensor<Fp> c(F, n);
        if (mode == DiscoverMode::Bialgebra) {
            c.d.at(0, 0, 0) = Fp::one(F);
        } else {
            c.d.at(0, 0, 0) = theta; // Delta(e1) = theta e1 (x) e1 is forced
        }
        int d = 0;
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    c.d.at(i, j, k) = Fp(F, digit[static_cast<size_t>(d++)]);
        if (with_counit) {
            c.counit[0] = Fp::one(F);
            for (int i = 1; i < n; ++i) c.counit[i] = Fp(F, digit[static_cast<size_t>(d++)]);
        }
        return c;
    };
    auto accept = [&](const ComultTensor<Fp>& c) {
        if (!detail::coassoc_ok(c)) return false;
        if (with_counit && !detail::counit_ok(c)) return false;
        if (mode == DiscoverMode::Bialgebra) {
            // Delta(e1) = e1 (x) e1 holds by construction
            return detail::bialgebra_compat_ok(m, c);
        }
        return detail::infinitesimal_ok(m, c, theta);
    };

    unsigned hw = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t min_chunk = 4096;
    unsigned nchunks = static_cast<unsigned>(std::min<std::uint64_t>(hw, std::max<std::uint64_t>(1, total / min_chunk)));
    if (nchunks == 0) nchunks = 1;

    std::vector<std::vector<ComultTensor<Fp>>> found(nchunks);
    auto work = [&](unsigned chunk) {
        std::uint64_t begin = total * chunk / nchunks;
        std::uint64_t end = total * (chunk + 1) / nchunks;
        std::vector<int> digit(static_cast<size_t>(digits), 0);
        decode(begin, digit);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            ComultTensor<Fp> c = build(digit);
            if (accept(c)) found[chunk].push_back(std::move(c));
            for (int i = digits - 1; i >= 0; --i) {
                if (++digit[static_cast<size_t>(i)] < static_cast<int>(p)) break;
                digit[static_cast<size_t>(i)] = 0;
            }
        }
    };
    if (nchunks == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nchunks; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    std::vector<ComultTensor<Fp>> out;
    for (auto& chunk : found)
        for (auto& c : chunk) out.push_back(std::move(c));
    return out;
}

} // namespace bialg::classify
