#ifndef NSALG_FIELD_TENSOR_HPP
#define NSALG_FIELD_TENSOR_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nsalg/number_field.hpp"

namespace nsalg {

// K ⊗_Q L realized as L[x]/(m_K): the left factor is quotiented, so
// field-ness is irreducibility of m_K over L. In characteristic 0 the modulus
// stays square-free, so the ring splits as a product of field extensions of L.
class FieldTensorRing;
using RingPtr = std::shared_ptr<const FieldTensorRing>;

class RingElement {
public:
    RingElement(RingPtr ring, PolyNF rep);

    const RingPtr& ring() const { return ring_; }
    const PolyNF& rep() const { return rep_; }
    bool is_zero_elem() const { return rep_.is_zero_poly(); }

    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend bool operator==(const RingElement& a, const RingElement& b);
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

    std::string to_string() const;

private:
    RingPtr ring_;
    PolyNF rep_;  // degree < deg(modulus)
};

struct DecompositionComponent {
    PolyNF minpoly_over_right;  // monic irreducible factor of the modulus
    RingElement idempotent;
};

struct Decomposition {
    std::vector<DecompositionComponent> components;
};

class FieldTensorRing : public std::enable_shared_from_this<FieldTensorRing> {
public:
    /// Builds L[x]/(m_K) with the factorization of m_K over L cached.
    static RingPtr make(FieldPtr K, FieldPtr L, int degree_bound = 8);

    const FieldPtr& left_field() const { return left_; }
    const FieldPtr& right_field() const { return right_; }
    const PolyNF& modulus() const { return modulus_; }
    /// Irreducible factors of the modulus over L, sorted deterministically
    /// (degree, then coefficients); multiplicities are all 1 in char 0.
    const std::vector<PolyNF>& factors() const { return factors_; }

    RingElement zero() const;
    RingElement one() const;
    RingElement from_poly(PolyNF rep) const;  // reduces mod the modulus
    /// The residue class of x, i.e. the image of the left generator.
    RingElement left_generator_image() const;
    RingElement from_right(const NFElement& b) const;

private:
    FieldPtr left_, right_;
    PolyNF modulus_;
    std::vector<PolyNF> factors_;
    FieldTensorRing(FieldPtr K, FieldPtr L, PolyNF m, std::vector<PolyNF> f)
        : left_(std::move(K)), right_(std::move(L)), modulus_(std::move(m)), factors_(std::move(f)) {}
};

RingPtr build_tensor_ring(const FieldPtr& K, const FieldPtr& L, int degree_bound = 8);

bool is_field(const FieldTensorRing& R);

/// One component per irreducible factor; idempotents from the extended gcd of
/// factor/cofactor pairs. Orthogonality and the partition of unity are checked
/// before returning.
Decomposition decompose(const FieldTensorRing& R);

/// A pair (c1, c2) of nonzero elements with c1*c2 = 0, from the first factor
/// in the deterministic order. Throws std::domain_error when the ring is a
/// field.
std::pair<RingElement, RingElement> zero_divisor_pair(const FieldTensorRing& R);

/// The nonzero residue of x - α in K[x]/(m_K), which the multiplication map
/// of K ⊗ K sends to zero. Requires deg(K) >= 2.
RingElement multiplication_kernel_witness(const FieldPtr& K);

/// Image under the multiplication map K ⊗ K -> K (evaluation of the residue
/// polynomial at the generator). Only meaningful when left == right.
NFElement multiplication_image(const RingElement& e);

}  // namespace nsalg

#endif
