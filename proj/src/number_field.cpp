#include "nsalg/number_field.hpp"

#include <sstream>

#include "nsalg/factor.hpp"

namespace nsalg {

std::string poly_to_string(const PolyQ& p, const std::string& var) {
    if (p.is_zero_poly()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& c = p[static_cast<std::size_t>(i)];
        if (is_zero(c)) continue;
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        bool unit = (a == 1);
        if (i == 0 || !unit) {
            os << a.get_num().get_str();
            if (a.get_den() != 1) os << "/" << a.get_den().get_str();
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::shared_ptr<const NumberField> NumberField::make(PolyQ minpoly) {
    if (minpoly.degree() < 1) throw std::domain_error("minimal polynomial must have degree >= 1");
    if (!is_one(minpoly.lc())) throw std::domain_error("minimal polynomial must be monic");
    if (!is_irreducible_over_q(minpoly))
        throw std::domain_error("minimal polynomial is reducible over Q: " + poly_to_string(minpoly));
    return std::shared_ptr<const NumberField>(new NumberField(std::move(minpoly)));
}

const FieldPtr& NumberField::rationals() {
    static FieldPtr q = std::shared_ptr<const NumberField>(
        new NumberField(PolyQ(std::vector<Rational>{Rational(0), Rational(1)})));
    return q;
}

std::string NumberField::name() const {
    if (degree() == 1) return "Q";
    return "Q[a]/(" + poly_to_string(minpoly_, "a") + ")";
}

NFElement::NFElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw std::domain_error("element without field");
    if (coords_.size() != static_cast<std::size_t>(field_->degree()))
        throw std::domain_error("coordinate count does not match field degree");
}

NFElement NFElement::zero(const FieldPtr& f) {
    return NFElement(f, std::vector<Rational>(static_cast<std::size_t>(f->degree()), Rational(0)));
}

NFElement NFElement::one(const FieldPtr& f) { return from_rational(f, Rational(1)); }

NFElement NFElement::from_rational(const FieldPtr& f, const Rational& q) {
    std::vector<Rational> c(static_cast<std::size_t>(f->degree()), Rational(0));
    c[0] = q;
    return NFElement(f, std::move(c));
}

NFElement NFElement::generator(const FieldPtr& f) {
    if (f->degree() == 1) {
        // minpoly x - r: generator is the rational root r
        return from_rational(f, -f->minpoly()[0]);
    }
    std::vector<Rational> c(static_cast<std::size_t>(f->degree()), Rational(0));
    c[1] = 1;
    return NFElement(f, std::move(c));
}

bool NFElement::is_zero_elem() const {
    for (const auto& c : coords_)
        if (sgn(c) != 0) return false;
    return true;
}

bool NFElement::is_one_elem() const {
    if (coords_.empty() || coords_[0] != 1) return false;
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (sgn(coords_[i]) != 0) return false;
    return true;
}

bool NFElement::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (sgn(coords_[i]) != 0) return false;
    return true;
}

Rational NFElement::rational_part() const {
    if (!is_rational()) throw std::domain_error("element is not rational: " + to_string());
    return coords_[0];
}

static void require_same(const NFElement& a, const NFElement& b) {
    if (!same_field(a.field(), b.field()))
        throw std::domain_error("number field mismatch in arithmetic");
}

NFElement operator+(const NFElement& a, const NFElement& b) {
    require_same(a, b);
    std::vector<Rational> c = a.coords();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords()[i];
    return NFElement(a.field(), std::move(c));
}

NFElement operator-(const NFElement& a, const NFElement& b) {
    require_same(a, b);
    std::vector<Rational> c = a.coords();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords()[i];
    return NFElement(a.field(), std::move(c));
}

NFElement NFElement::operator-() const {
    std::vector<Rational> c = coords_;
    for (auto& x : c) x = -x;
    return NFElement(field_, std::move(c));
}

NFElement NFElement::scaled(const Rational& q) const {
    std::vector<Rational> c = coords_;
    for (auto& x : c) x *= q;
    return NFElement(field_, std::move(c));
}

NFElement operator*(const NFElement& a, const NFElement& b) {
    require_same(a, b);
    const std::size_t d = a.coords().size();
    // schoolbook product, then reduce by the minimal polynomial
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (sgn(a.coords()[i]) == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (sgn(b.coords()[j]) == 0) continue;
            prod[i + j] += a.coords()[i] * b.coords()[j];
        }
    }
    const PolyQ& m = a.field()->minpoly();
    for (std::size_t k = prod.size(); k-- > d;) {
        if (sgn(prod[k]) == 0) continue;
        Rational q = prod[k];
        prod[k] = 0;
        // x^k = x^(k-d) * (x^d) = x^(k-d) * (-m_0 - ... - m_{d-1} x^{d-1})
        for (std::size_t j = 0; j < d; ++j) prod[k - d + j] -= q * m[j];
    }
    prod.resize(d);
    return NFElement(a.field(), std::move(prod));
}

NFElement NFElement::inverse() const {
    if (is_zero_elem()) throw std::domain_error("inverse of zero field element");
    PolyQ e{std::vector<Rational>(coords_)};
    auto [g, u, v] = poly_ext_gcd(e, field_->minpoly());
    (void)v;
    if (g.degree() != 0)
        throw std::logic_error("nonunit gcd while inverting a field element");
    // u*e ≡ g (mod minpoly), g is the monic unit 1
    PolyQ inv = poly_mod(u, field_->minpoly());
    std::vector<Rational> c(coords_.size(), Rational(0));
    for (int i = 0; i <= inv.degree(); ++i) c[static_cast<std::size_t>(i)] = inv[static_cast<std::size_t>(i)];
    return NFElement(field_, std::move(c));
}

NFElement operator/(const NFElement& a, const NFElement& b) { return a * b.inverse(); }

bool operator==(const NFElement& a, const NFElement& b) {
    require_same(a, b);
    return a.coords() == b.coords();
}

int NFElement::cmp(const NFElement& a, const NFElement& b) {
    require_same(a, b);
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        int c = ::cmp(a.coords_[i], b.coords_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string NFElement::to_string() const {
    PolyQ p{std::vector<Rational>(coords_)};
    return poly_to_string(p, "a");
}

NFElement zero_like(const NFElement& e) { return NFElement::zero(e.field()); }
NFElement one_like(const NFElement& e) { return NFElement::one(e.field()); }

PolyNF embed_poly(const PolyQ& p, const FieldPtr& K) {
    std::vector<NFElement> c;
    c.reserve(static_cast<std::size_t>(p.degree() + 1));
    for (int i = 0; i <= p.degree(); ++i)
        c.push_back(NFElement::from_rational(K, p[static_cast<std::size_t>(i)]));
    return PolyNF(std::move(c));
}

int cmp_poly_nf(const PolyNF& a, const PolyNF& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = 0; i <= a.degree(); ++i) {
        int c = NFElement::cmp(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
        if (c != 0) return c;
    }
    return 0;
}

}  // namespace nsalg
