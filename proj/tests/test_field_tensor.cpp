#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsalg/factor.hpp"
#include "nsalg/field_tensor.hpp"
#include "support/generators.hpp"

using namespace nsalg;
using namespace nsalg::testing;

namespace {

PolyQ pq(std::vector<long> v) {
    std::vector<Rational> c;
    for (long x : v) c.push_back(Rational(x));
    return PolyQ(std::move(c));
}

std::vector<FieldPtr> field_corpus() {
    return {
        NumberField::make(pq({1, 0, 1})),          // x^2+1
        NumberField::make(pq({-2, 0, 1})),         // x^2-2
        NumberField::make(pq({-3, 0, 1})),         // x^2-3
        NumberField::make(pq({-1, -1, 1})),        // x^2-x-1
        NumberField::make(pq({-2, 0, 0, 1})),      // x^3-2
        NumberField::make(pq({-1, -1, 0, 1})),     // x^3-x-1
        NumberField::make(pq({-1, -3, 0, 1})),     // x^3-3x-1 (cyclic)
        NumberField::make(pq({-2, 0, 0, 0, 1})),   // x^4-2
        NumberField::make(pq({1, 0, 0, 0, 1})),    // x^4+1
        NumberField::make(pq({1, 1, 1, 1, 1})),    // 5th cyclotomic
        NumberField::make(pq({-2, 0, 0, 0, 0, 1})),    // x^5-2
        NumberField::make(pq({1, 0, 0, 1, 0, 0, 1})),  // 9th cyclotomic, degree 6
    };
}

}  // namespace

TEST_CASE("tensor ring construction on the worked examples") {
    FieldPtr qi = gauss_field();
    RingPtr r1 = build_tensor_ring(qi, qi);
    CHECK(r1->modulus() == embed_poly(pq({1, 0, 1}), qi));
    CHECK(r1->factors().size() == 2);

    FieldPtr q2 = NumberField::make(pq({-2, 0, 1}));
    FieldPtr q3 = NumberField::make(pq({-3, 0, 1}));
    RingPtr r2 = build_tensor_ring(q2, q3);
    CHECK(r2->factors().size() == 1);

    RingPtr r3 = build_tensor_ring(NumberField::rationals(), qi);
    CHECK(r3->modulus().degree() == 1);
    CHECK(r3->factors().size() == 1);
    CHECK(is_field(*r3));
}

TEST_CASE("field-ness of tensor products") {
    FieldPtr qi = gauss_field();
    FieldPtr q2 = NumberField::make(pq({-2, 0, 1}));
    FieldPtr q3 = NumberField::make(pq({-3, 0, 1}));
    CHECK_FALSE(is_field(*build_tensor_ring(qi, qi)));
    CHECK(is_field(*build_tensor_ring(q2, q3)));
    CHECK(is_field(*build_tensor_ring(NumberField::rationals(), qi)));
}

TEST_CASE("a proper extension tensored with itself is never a field") {
    for (const auto& k : field_corpus()) {
        if (k->degree() < 2) continue;
        CHECK_FALSE(is_field(*build_tensor_ring(k, k)));
    }
}

TEST_CASE("decomposition components and idempotents") {
    FieldPtr qi = gauss_field();
    Decomposition d1 = decompose(*build_tensor_ring(qi, qi));
    REQUIRE(d1.components.size() == 2);
    CHECK(d1.components[0].minpoly_over_right.degree() == 1);
    CHECK(d1.components[1].minpoly_over_right.degree() == 1);

    FieldPtr qc = NumberField::make(pq({-2, 0, 0, 1}));
    Decomposition d2 = decompose(*build_tensor_ring(qc, qc));
    REQUIRE(d2.components.size() == 2);
    CHECK(d2.components[0].minpoly_over_right.degree() == 1);
    CHECK(d2.components[1].minpoly_over_right.degree() == 2);

    RingPtr field_ring = build_tensor_ring(NumberField::make(pq({-2, 0, 1})),
                                           NumberField::make(pq({-3, 0, 1})));
    Decomposition d3 = decompose(*field_ring);
    REQUIRE(d3.components.size() == 1);
    CHECK(d3.components[0].idempotent == field_ring->one());
}

TEST_CASE("idempotents are orthogonal and sum to one across the corpus") {
    auto corpus = field_corpus();
    int pairs_checked = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (std::size_t j = 0; j < corpus.size(); ++j) {
            const auto& k = corpus[i];
            const auto& l = corpus[j];
            RingPtr ring = build_tensor_ring(k, l);
            Decomposition dec = decompose(*ring);  // self-checks idempotent laws
            CHECK(dec.components.size() == ring->factors().size());
            // the Q-dimension of the ring is deg(K)·deg(L): modulus degree
            // counts the left factor, coefficients supply the right
            CHECK(ring->modulus().degree() == k->degree());
            CHECK(ring->right_field()->degree() == l->degree());
            int total = 0;
            for (const auto& comp : dec.components) total += comp.minpoly_over_right.degree();
            CHECK(total == k->degree());
            ++pairs_checked;
        }
    }
    CHECK(pairs_checked == 144);
}

TEST_CASE("zero divisor pairs multiply to zero exactly") {
    FieldPtr qi = gauss_field();
    RingPtr r = build_tensor_ring(qi, qi);
    auto [c1, c2] = zero_divisor_pair(*r);
    CHECK_FALSE(c1.is_zero_elem());
    CHECK_FALSE(c2.is_zero_elem());
    CHECK((c1 * c2).is_zero_elem());
    // deterministic output: x - i first (degree, then coordinate order)
    NFElement i_elem = NFElement::generator(qi);
    CHECK(c1.rep() == PolyNF(std::vector<NFElement>{-i_elem, NFElement::one(qi)}));
    CHECK(c2.rep() == PolyNF(std::vector<NFElement>{i_elem, NFElement::one(qi)}));

    FieldPtr qc = NumberField::make(pq({-2, 0, 0, 1}));
    auto [d1, d2] = zero_divisor_pair(*build_tensor_ring(qc, qc));
    CHECK(d1.rep().degree() == 1);
    CHECK(d2.rep().degree() == 2);
    CHECK((d1 * d2).is_zero_elem());

    RingPtr field_ring = build_tensor_ring(NumberField::make(pq({-2, 0, 1})),
                                           NumberField::make(pq({-3, 0, 1})));
    CHECK_THROWS_AS(zero_divisor_pair(*field_ring), std::domain_error);
}

TEST_CASE("zero divisors across the corpus") {
    for (const auto& k : field_corpus()) {
        if (k->degree() < 2) continue;
        auto [c1, c2] = zero_divisor_pair(*build_tensor_ring(k, k));
        CHECK_FALSE(c1.is_zero_elem());
        CHECK_FALSE(c2.is_zero_elem());
        CHECK((c1 * c2).is_zero_elem());
    }
}

TEST_CASE("multiplication kernel witness") {
    FieldPtr qi = gauss_field();
    RingElement w = multiplication_kernel_witness(qi);
    CHECK_FALSE(w.is_zero_elem());
    CHECK(multiplication_image(w).is_zero_elem());
    NFElement i_elem = NFElement::generator(qi);
    CHECK(w.rep() == PolyNF(std::vector<NFElement>{-i_elem, NFElement::one(qi)}));

    FieldPtr q2 = NumberField::make(pq({-2, 0, 1}));
    CHECK_FALSE(multiplication_kernel_witness(q2).is_zero_elem());
    CHECK(multiplication_image(multiplication_kernel_witness(q2)).is_zero_elem());

    CHECK_THROWS_AS(multiplication_kernel_witness(NumberField::rationals()), std::domain_error);
}

TEST_CASE("ring arithmetic is consistent with the decomposition") {
    std::mt19937_64 gen(53);
    FieldPtr qi = gauss_field();
    RingPtr ring = build_tensor_ring(qi, qi);
    Decomposition dec = decompose(*ring);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<NFElement> c1{random_nf_element(gen, qi), random_nf_element(gen, qi)};
        std::vector<NFElement> c2{random_nf_element(gen, qi), random_nf_element(gen, qi)};
        RingElement a = ring->from_poly(PolyNF(c1));
        RingElement b = ring->from_poly(PolyNF(c2));
        // componentwise multiplication: e_i(ab) = (e_i a)(e_i b)
        for (const auto& comp : dec.components) {
            CHECK(comp.idempotent * (a * b) ==
                  (comp.idempotent * a) * (comp.idempotent * b));
        }
    }
}
