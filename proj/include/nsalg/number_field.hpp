#ifndef NSALG_NUMBER_FIELD_HPP
#define NSALG_NUMBER_FIELD_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsalg/poly.hpp"
#include "nsalg/rational.hpp"

namespace nsalg {

/// Finite extension of Q presented by a monic irreducible minimal polynomial.
/// Q itself is the degree-1 field with minimal polynomial x.
class NumberField {
public:
    /// Validates monicity and irreducibility (the latter by factoring).
    static std::shared_ptr<const NumberField> make(PolyQ minpoly);

    /// The rationals as a degree-1 field (minpoly x). Shared singleton.
    static const std::shared_ptr<const NumberField>& rationals();

    const PolyQ& minpoly() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }
    std::string name() const;  // e.g. "Q[a]/(a^2+1)"

private:
    explicit NumberField(PolyQ mp) : minpoly_(std::move(mp)) {}
    PolyQ minpoly_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a == b || a->minpoly() == b->minpoly();
}

/// Element of a number field in the power basis of the generator.
class NFElement {
public:
    NFElement() = default;
    NFElement(FieldPtr field, std::vector<Rational> coords);

    static NFElement zero(const FieldPtr& f);
    static NFElement one(const FieldPtr& f);
    static NFElement from_rational(const FieldPtr& f, const Rational& q);
    static NFElement generator(const FieldPtr& f);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero_elem() const;
    bool is_one_elem() const;
    /// The rational coordinate if the element lies in Q, else throws.
    Rational rational_part() const;
    bool is_rational() const;

    NFElement inverse() const;  // throws std::domain_error on zero

    friend NFElement operator+(const NFElement& a, const NFElement& b);
    friend NFElement operator-(const NFElement& a, const NFElement& b);
    friend NFElement operator*(const NFElement& a, const NFElement& b);
    friend NFElement operator/(const NFElement& a, const NFElement& b);
    NFElement operator-() const;
    NFElement scaled(const Rational& q) const;

    friend bool operator==(const NFElement& a, const NFElement& b);
    friend bool operator!=(const NFElement& a, const NFElement& b) { return !(a == b); }

    /// Total order on same-field elements (coordinate lexicographic, constant
    /// term first); used for deterministic factor ordering.
    static int cmp(const NFElement& a, const NFElement& b);

    std::string to_string() const;

private:
    FieldPtr field_;
    std::vector<Rational> coords_;
};

inline bool is_zero(const NFElement& e) { return e.is_zero_elem(); }
inline bool is_one(const NFElement& e) { return e.is_one_elem(); }
NFElement zero_like(const NFElement& e);
NFElement one_like(const NFElement& e);

using PolyNF = Poly<NFElement>;

/// Embeds a rational polynomial coefficientwise into K[x].
PolyNF embed_poly(const PolyQ& p, const FieldPtr& K);

/// Deterministic order on monic polynomials over a number field:
/// by degree, then coordinatewise from the constant term up.
int cmp_poly_nf(const PolyNF& a, const PolyNF& b);

}  // namespace nsalg

#endif
