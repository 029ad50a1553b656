#ifndef NSALG_POLY_HPP
#define NSALG_POLY_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nsalg/rational.hpp"

namespace nsalg {

// Dense univariate polynomial over a field F, coefficients lowest degree
// first. The zero polynomial has an empty coefficient vector; otherwise the
// leading coefficient is nonzero. F must provide +,-,*,/ plus the free
// functions is_zero, zero_like, one_like (found by ADL).
template <class F>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(F v) {
        std::vector<F> c;
        if (!is_zero(v)) c.push_back(std::move(v));
        return Poly(std::move(c));
    }

    const std::vector<F>& coeffs() const { return c_; }
    bool is_zero_poly() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const F& lc() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    const F& operator[](std::size_t i) const { return c_[i]; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<F> r = a.c_;
        if (r.size() < b.c_.size()) r.resize(b.c_.size(), zero_exemplar(a, b));
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<F> r = a.c_;
        if (r.size() < b.c_.size()) r.resize(b.c_.size(), zero_exemplar(a, b));
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
        return Poly(std::move(r));
    }

    Poly operator-() const {
        std::vector<F> r = c_;
        for (auto& x : r) x = zero_like(x) - x;
        return Poly(std::move(r));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.c_.empty() || b.c_.empty()) return Poly();
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }

    Poly scaled(const F& s) const {
        std::vector<F> r = c_;
        for (auto& x : r) x = x * s;
        return Poly(std::move(r));
    }

    Poly monic() const {
        if (c_.empty()) return *this;
        return scaled(one_like(lc()) / lc());
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<F> r;
        r.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            F k = zero_like(c_[i]);
            for (std::size_t j = 0; j < i; ++j) k = k + one_like(c_[i]);
            r.push_back(k * c_[i]);
        }
        return Poly(std::move(r));
    }

    F eval(const F& x) const {
        if (c_.empty()) return zero_like(x);
        F acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// p(x + t), exact Horner rebuild.
    Poly shift_arg(const F& t) const {
        if (c_.empty()) return Poly();
        Poly acc = Poly::constant(c_.back());
        Poly lin(std::vector<F>{t, one_like(t)});
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * lin + Poly::constant(c_[i]);
        return acc;
    }

    /// p(s·x)
    Poly stretch_arg(const F& s) const {
        std::vector<F> r = c_;
        F pw = one_like(s);
        for (std::size_t i = 1; i < r.size(); ++i) {
            pw = pw * s;
            r[i] = r[i] * pw;
        }
        return Poly(std::move(r));
    }

private:
    std::vector<F> c_;

    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    static F zero_exemplar(const Poly& a, const Poly& b) {
        if (!a.c_.empty()) return zero_like(a.c_[0]);
        if (!b.c_.empty()) return zero_like(b.c_[0]);
        return F{};
    }
};

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero_poly()) throw std::domain_error("division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly<F>(), a};
    const F inv_lc = one_like(b.lc()) / b.lc();
    std::vector<F> rem = a.coeffs();
    std::vector<F> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, zero_like(b.lc()));
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        F q = rem[static_cast<std::size_t>(k + b.degree())] * inv_lc;
        if (is_zero(q)) continue;
        quo[static_cast<std::size_t>(k)] = q;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] =
                rem[static_cast<std::size_t>(k + j)] - q * b[static_cast<std::size_t>(j)];
    }
    return {Poly<F>(std::move(quo)), Poly<F>(std::move(rem))};
}

template <class F>
Poly<F> poly_mod(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).second;
}

/// Monic gcd; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero_poly()) {
        Poly<F> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r).monic();
    }
    return a.monic();
}

/// Extended gcd: returns (g, u, v) with u·a + v·b = g, g monic (or zero).
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> poly_ext_gcd(const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero_poly() && b.is_zero_poly()) return {Poly<F>(), Poly<F>(), Poly<F>()};
    const F one = a.is_zero_poly() ? one_like(b.lc()) : one_like(a.lc());
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0 = Poly<F>::constant(one), s1;
    Poly<F> t0, t1 = Poly<F>::constant(one);
    while (!r1.is_zero_poly()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<F> s = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s);
        Poly<F> t = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    // normalize to monic
    F scale = one / r0.lc();
    return {r0.scaled(scale), s0.scaled(scale), t0.scaled(scale)};
}

/// Yun square-free decomposition over a characteristic-0 field:
/// p = lc · ∏ out[k].first ^ out[k].second with the parts monic, square-free
/// and pairwise coprime.
template <class F>
std::vector<std::pair<Poly<F>, int>> squarefree_decomposition(const Poly<F>& p) {
    std::vector<std::pair<Poly<F>, int>> out;
    if (p.degree() <= 0) return out;
    Poly<F> f = p.monic();
    Poly<F> fp = f.derivative();
    Poly<F> g = poly_gcd(f, fp);
    Poly<F> c = divmod(f, g).first;
    Poly<F> d = divmod(fp, g).first - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
        Poly<F> u = poly_gcd(c, d);
        if (u.degree() > 0) out.emplace_back(u, i);
        c = divmod(c, u).first;
        d = divmod(d, u).first - c.derivative();
        ++i;
    }
    return out;
}

using PolyQ = Poly<Rational>;

/// Pretty-printer for summaries: "x^2 - 1/2*x + 3".
std::string poly_to_string(const PolyQ& p, const std::string& var = "x");

}  // namespace nsalg

#endif
