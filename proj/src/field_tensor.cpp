#include "nsalg/field_tensor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nsalg/factor.hpp"

namespace nsalg {

RingElement::RingElement(RingPtr ring, PolyNF rep) : ring_(std::move(ring)), rep_(std::move(rep)) {
    if (rep_.degree() >= ring_->modulus().degree())
        throw std::logic_error("ring element representative not reduced");
}

static void require_same_ring(const RingElement& a, const RingElement& b) {
    if (a.ring() != b.ring() &&
        !(same_field(a.ring()->left_field(), b.ring()->left_field()) &&
          same_field(a.ring()->right_field(), b.ring()->right_field())))
        throw std::domain_error("tensor ring mismatch");
}

RingElement operator+(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    return RingElement(a.ring(), a.rep() + b.rep());
}

RingElement operator-(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    return RingElement(a.ring(), a.rep() - b.rep());
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    return RingElement(a.ring(), poly_mod(a.rep() * b.rep(), a.ring()->modulus()));
}

bool operator==(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    return a.rep() == b.rep();
}

std::string RingElement::to_string() const {
    if (rep_.is_zero_poly()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = rep_.degree(); i >= 0; --i) {
        const NFElement& c = rep_[static_cast<std::size_t>(i)];
        if (c.is_zero_elem()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (i > 0) {
            os << "*x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RingPtr FieldTensorRing::make(FieldPtr K, FieldPtr L, int degree_bound) {
    PolyNF modulus = embed_poly(K->minpoly(), L);
    std::vector<PolyNF> factors;
    for (const auto& [f, mult] : factor_over_nf(modulus, L, degree_bound)) {
        if (mult != 1)
            throw std::logic_error("repeated factor of a separable modulus");
        factors.push_back(f);
    }
    // verify the round trip: product of factors reconstitutes the modulus
    PolyNF prod = PolyNF::constant(NFElement::one(L));
    for (const auto& f : factors) prod = prod * f;
    if (prod != modulus) throw std::logic_error("factor product does not reconstitute the modulus");
    return RingPtr(new FieldTensorRing(std::move(K), std::move(L), std::move(modulus), std::move(factors)));
}

RingPtr build_tensor_ring(const FieldPtr& K, const FieldPtr& L, int degree_bound) {
    return FieldTensorRing::make(K, L, degree_bound);
}

RingElement FieldTensorRing::zero() const { return RingElement(shared_from_this(), PolyNF()); }

RingElement FieldTensorRing::one() const {
    return RingElement(shared_from_this(), PolyNF::constant(NFElement::one(right_)));
}

RingElement FieldTensorRing::from_poly(PolyNF rep) const {
    return RingElement(shared_from_this(), poly_mod(std::move(rep), modulus_));
}

RingElement FieldTensorRing::left_generator_image() const {
    if (modulus_.degree() == 1) {
        // x ≡ rational generator of the degree-1 left field
        return RingElement(shared_from_this(), PolyNF::constant(NFElement::zero(right_) - modulus_[0]));
    }
    std::vector<NFElement> c{NFElement::zero(right_), NFElement::one(right_)};
    return RingElement(shared_from_this(), PolyNF(std::move(c)));
}

RingElement FieldTensorRing::from_right(const NFElement& b) const {
    return RingElement(shared_from_this(), PolyNF::constant(b));
}

bool is_field(const FieldTensorRing& R) { return R.factors().size() == 1; }

Decomposition decompose(const FieldTensorRing& R) {
    RingPtr ring = R.shared_from_this();
    Decomposition dec;
    if (is_field(R)) {
        dec.components.push_back({R.factors()[0], R.one()});
        return dec;
    }
    for (const PolyNF& f : R.factors()) {
        PolyNF cofactor = divmod(R.modulus(), f).first;
        auto [g, u, v] = poly_ext_gcd(f, cofactor);
        if (g.degree() != 0) throw std::logic_error("factor and cofactor not coprime");
        (void)u;
        // e = v*cofactor ≡ 1 mod f, ≡ 0 mod cofactor
        RingElement e = ring->from_poly(v * cofactor);
        dec.components.push_back({f, e});
    }
    // internal checks: orthogonal idempotents summing to one
    RingElement sum = ring->zero();
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
        const RingElement& ei = dec.components[i].idempotent;
        if (ei * ei != ei) throw std::logic_error("component projector is not idempotent");
        for (std::size_t j = i + 1; j < dec.components.size(); ++j)
            if (!(ei * dec.components[j].idempotent).is_zero_elem())
                throw std::logic_error("component projectors are not orthogonal");
        sum = sum + ei;
    }
    if (sum != ring->one()) throw std::logic_error("projectors do not sum to the identity");
    return dec;
}

std::pair<RingElement, RingElement> zero_divisor_pair(const FieldTensorRing& R) {
    if (is_field(R)) throw std::domain_error("the tensor product is a field; no zero divisors exist");
    RingPtr ring = R.shared_from_this();
    const PolyNF& g = R.factors().front();
    PolyNF cof = divmod(R.modulus(), g).first;
    RingElement c1 = ring->from_poly(g);
    RingElement c2 = ring->from_poly(cof);
    if (c1.is_zero_elem() || c2.is_zero_elem() || !(c1 * c2).is_zero_elem())
        throw std::logic_error("zero divisor construction failed");
    return {c1, c2};
}

RingElement multiplication_kernel_witness(const FieldPtr& K) {
    if (K->degree() < 2)
        throw std::domain_error("the kernel element vanishes over the rationals");
    RingPtr ring = FieldTensorRing::make(K, K);
    NFElement alpha = NFElement::generator(K);
    std::vector<NFElement> c{NFElement::zero(K) - alpha, NFElement::one(K)};
    return RingElement(ring, PolyNF(std::move(c)));
}

NFElement multiplication_image(const RingElement& e) {
    const FieldPtr& K = e.ring()->right_field();
    if (!same_field(e.ring()->left_field(), K))
        throw std::domain_error("multiplication map needs equal tensor legs");
    return e.rep().eval(NFElement::generator(K));
}

}  // namespace nsalg
