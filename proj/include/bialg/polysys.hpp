#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "bialg/axioms.hpp"

namespace bialg {

/// A variable occurrence like C[1,2,3] or xi[2].
struct PolyVar {
    std::string name;
    std::vector<int> idx; // 1-based

    auto operator<=>(const PolyVar&) const = default;

    std::string str() const {
        std::string s = name + "[";
        for (size_t i = 0; i < idx.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(idx[i]);
        }
        return s + "]";
    }
};

/// Multivariate polynomial over Q, usable as a ring scalar by the residual
/// generators (no division is ever required there).
class Polynomial {
public:
    struct Field {
        bool operator==(const Field&) const = default;
    };

    using Monomial = std::vector<PolyVar>; // sorted, duplicates = powers

    Polynomial() = default;

    static Polynomial zero(const Field&) { return Polynomial(); }
    static Polynomial one(const Field&) { return constant(Rational(1)); }
    static Polynomial from_int(const Field&, long n) { return constant(Rational(n)); }
    static Polynomial constant(const Rational& c) {
        Polynomial p;
        if (!c.is_zero()) p.terms_[{}] = c;
        return p;
    }
    static Polynomial var(std::string name, std::vector<int> idx) {
        Polynomial p;
        p.terms_[{PolyVar{std::move(name), std::move(idx)}}] = Rational(1);
        return p;
    }

    Field field() const { return {}; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator-() const {
        Polynomial r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    Polynomial operator+(const Polynomial& o) const {
        Polynomial r = *this;
        r += o;
        return r;
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) {
            auto it = terms_.find(m);
            if (it == terms_.end()) {
                terms_.emplace(m, c);
            } else {
                it->second += c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
    Polynomial operator*(const Polynomial& o) const {
        Polynomial r;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) {
                Monomial m = m1;
                m.insert(m.end(), m2.begin(), m2.end());
                std::sort(m.begin(), m.end());
                auto it = r.terms_.find(m);
                if (it == r.terms_.end()) {
                    Rational c = c1 * c2;
                    if (!c.is_zero()) r.terms_.emplace(std::move(m), c);
                } else {
                    it->second += c1 * c2;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

    /// "coef*Var[...]*Var[...] + coef*... "; the zero polynomial prints as "0".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += c.str();
            for (const PolyVar& v : m) s += "*" + v.str();
        }
        return s;
    }

    /// Substitute variables via the assignment and fold to a rational.
    Rational evaluate(const std::function<Rational(const PolyVar&)>& assign) const {
        Rational total(0);
        for (const auto& [m, c] : terms_) {
            Rational term = c;
            for (const PolyVar& v : m) term *= assign(v);
            total += term;
        }
        return total;
    }

    static Polynomial parse(const std::string& line);

private:
    std::map<Monomial, Rational> terms_;
};

inline std::string to_string(const Polynomial& p) { return p.str(); }

inline Polynomial Polynomial::parse(const std::string& line) {
    Polynomial out;
    size_t pos = 0;
    while (pos < line.size()) {
        size_t next = line.find(" + ", pos);
        std::string term = line.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? line.size() : next + 3;
        // term := coef ('*' var)*
        std::vector<std::string> factors;
        size_t fpos = 0;
        while (fpos <= term.size()) {
            size_t star = term.find('*', fpos);
            factors.push_back(term.substr(fpos, star == std::string::npos ? std::string::npos : star - fpos));
            if (star == std::string::npos) break;
            fpos = star + 1;
        }
        if (factors.empty()) throw ParseError("empty polynomial term");
        Polynomial t = Polynomial::constant(Rational::parse({}, factors[0]));
        for (size_t i = 1; i < factors.size(); ++i) {
            const std::string& f = factors[i];
            size_t lb = f.find('['), rb = f.find(']');
            if (lb == std::string::npos || rb == std::string::npos || rb < lb)
                throw ParseError("bad variable token: '" + f + "'");
            PolyVar v{f.substr(0, lb), {}};
            std::stringstream idx(f.substr(lb + 1, rb - lb - 1));
            std::string part;
            while (std::getline(idx, part, ','))
                v.idx.push_back(std::stoi(part));
            t *= Polynomial::var(v.name, v.idx);
        }
        out += t;
    }
    return out;
}

// ---- system generation --------------------------------------------------------

enum class SystemKind { TwoAs, TwoB };

struct PolySystemLine {
    std::string family; // comment label the polynomial belongs to
    Polynomial poly;
};

struct PolySystem {
    int dim = 0;
    SystemKind kind = SystemKind::TwoAs;
    std::vector<PolySystemLine> lines;

    std::string str() const {
        std::string out;
        std::string family;
        for (const auto& l : lines) {
            if (l.family != family) {
                family = l.family;
                out += "# " + family + "\n";
            }
            out += l.poly.str() + "\n";
        }
        return out;
    }
};

namespace detail {

inline MultTensor<Polynomial> symbolic_mult(int n, const std::string& name) {
    MultTensor<Polynomial> m({}, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                m.c.at(i, j, k) = Polynomial::var(name, {i + 1, j + 1, k + 1});
    return m;
}

inline ComultTensor<Polynomial> symbolic_comult(int n, const std::string& name, const std::string& counit_name) {
    ComultTensor<Polynomial> c({}, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                c.d.at(i, j, k) = Polynomial::var(name, {i + 1, j + 1, k + 1});
    for (int i = 0; i < n; ++i)
        c.counit[i] = Polynomial::var(counit_name, {i + 1});
    return c;
}

} // namespace detail

/// Polynomial system cut out by the structure axioms on symbolic structure
/// constants, regenerated from the coordinate-free definitions. Variables:
/// C/Ct (multiplications), D/Dt (comultiplications), xi/xit (counits);
/// the unit is the first basis vector.
inline PolySystem export_system(int n, SystemKind kind) {
    check_dim(n);
    PolySystem sys;
    sys.dim = n;
    sys.kind = kind;
    Polynomial::Field F{};
    Vec<Polynomial> e1 = Vec<Polynomial>::basis(F, n, 0);

    MultTensor<Polynomial> C = detail::symbolic_mult(n, "C");
    MultTensor<Polynomial> Ct = detail::symbolic_mult(n, "Ct");
    ComultTensor<Polynomial> D = detail::symbolic_comult(n, "D", "xi");

    auto push = [&](const std::string& family, const Polynomial& p) {
        sys.lines.push_back({family, p});
    };
    auto emit_algebra = [&](const MultTensor<Polynomial>& m, const std::string& tag) {
        residuals::assoc(m, [&](int, int, int, int, const Polynomial& p) { push("assoc " + tag, p); });
        residuals::unit(m, e1, [&](int, int, int, const Polynomial& p) { push("unit " + tag, p); });
    };
    auto emit_coalgebra = [&](const ComultTensor<Polynomial>& c, const std::string& tag) {
        residuals::coassoc(c, [&](int, int, int, int, const Polynomial& p) { push("coassoc " + tag, p); });
        residuals::counit(c, [&](int, int, int, const Polynomial& p) { push("counit " + tag, p); });
    };
    auto emit_bialgebra = [&](const MultTensor<Polynomial>& m, const ComultTensor<Polynomial>& c,
                              const std::string& tag) {
        residuals::bialgebra_compat(m, c, [&](int, int, int, int, const Polynomial& p) {
            push("bialgebra compat " + tag, p);
        });
        residuals::counit_morphism(
            m, c, e1, [&](int, int, const Polynomial& p) { push("counit morphism " + tag, p); },
            [&](const Polynomial& p) { push("counit morphism " + tag, p); });
        residuals::unit_image(c, e1, [&](int, int, const Polynomial& p) { push("unit image " + tag, p); });
    };

    if (kind == SystemKind::TwoAs) {
        emit_algebra(C, "mu1");
        emit_algebra(Ct, "mu2");
        emit_coalgebra(D, "delta");
        emit_bialgebra(C, D, "mu1*delta");
        residuals::infinitesimal(Ct, D, Polynomial::one(F), [&](int, int, int, int, const Polynomial& p) {
            push("infinitesimal mu2*delta", p);
        });
    } else {
        ComultTensor<Polynomial> Dt = detail::symbolic_comult(n, "Dt", "xit");
        emit_algebra(C, "mu1");
        emit_algebra(Ct, "mu2");
        emit_coalgebra(D, "delta1");
        emit_coalgebra(Dt, "delta2");
        emit_bialgebra(C, D, "mu1*delta1");
        emit_bialgebra(Ct, Dt, "mu2*delta2");
        emit_bialgebra(C, Dt, "mu1*delta2");
        emit_bialgebra(Ct, D, "mu2*delta1");
    }
    return sys;
}

/// Parse a system back from its text form; '#' lines delimit families.
inline std::vector<PolySystemLine> parse_system(const std::string& text) {
    std::vector<PolySystemLine> lines;
    std::stringstream in(text);
    std::string line, family;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            family = line.substr(line.find_first_not_of("# "));
            continue;
        }
        lines.push_back({family, Polynomial::parse(line)});
    }
    return lines;
}

/// Assignment of a TwoAs/TwoB bundle's structure constants to system variables.
inline std::function<Rational(const PolyVar&)> bundle_assignment(const Bundle<Rational>& b) {
    return [&b](const PolyVar& v) -> Rational {
        auto mult_at = [&](size_t which, const std::vector<int>& idx) {
            return b.mults.at(which).c.at(idx[0] - 1, idx[1] - 1, idx[2] - 1);
        };
        auto comult_at = [&](size_t which, const std::vector<int>& idx) {
            return b.comults.at(which).d.at(idx[0] - 1, idx[1] - 1, idx[2] - 1);
        };
        if (v.name == "C") return mult_at(0, v.idx);
        if (v.name == "Ct") return mult_at(b.mults.size() > 1 ? 1 : 0, v.idx);
        if (v.name == "D") return comult_at(0, v.idx);
        if (v.name == "Dt") return comult_at(b.comults.size() > 1 ? 1 : 0, v.idx);
        if (v.name == "xi") return b.comults.at(0).counit[v.idx[0] - 1];
        if (v.name == "xit") return b.comults.at(b.comults.size() > 1 ? 1 : 0).counit[v.idx[0] - 1];
        throw ParseError("unknown system variable: " + v.name);
    };
}

} // namespace bialg
