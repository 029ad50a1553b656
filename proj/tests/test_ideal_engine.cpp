#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/generators.hpp"
#include "support/truncated_model.hpp"

using namespace nsalg;
using namespace nsalg::testing;

namespace {

PolyQ pq(std::vector<long> v) {
    std::vector<Rational> c;
    for (long x : v) c.push_back(Rational(x));
    return PolyQ(std::move(c));
}

DescriptorPtr gauss_scalar_descriptor() {
    static DescriptorPtr d = NearlySimpleDescriptor::make(gauss_field(), NumberField::rationals());
    return d;
}

DescriptorPtr gauss_entry_descriptor() {
    static DescriptorPtr d = NearlySimpleDescriptor::make(NumberField::rationals(), gauss_field());
    return d;
}

AlgElement unit_elem(const DescriptorPtr& d, FinOp::Index r, FinOp::Index c) {
    return AlgElement::from_fin(d, FinOp::unit(d->entry_field(), r, c));
}

}  // namespace

TEST_CASE("admissibility of the descriptor corpus") {
    DescriptorPtr univ = universal_descriptor();
    DescriptorPtr sg = gauss_scalar_descriptor();
    DescriptorPtr eg = gauss_entry_descriptor();

    AdmissibilityVerdict vu = check_admissibility(univ, univ);
    CHECK(vu.all_admissible);

    AdmissibilityVerdict vs = check_admissibility(sg, sg);
    CHECK_FALSE(vs.all_admissible);
    CHECK_FALSE(vs.report(ProductSlot::ScalarScalar).field);
    CHECK(vs.report(ProductSlot::EntryScalar).field);
    CHECK(vs.report(ProductSlot::ScalarEntry).field);
    CHECK(vs.report(ProductSlot::EntryEntry).field);
    CHECK(vs.report(ProductSlot::ScalarScalar).num_components == 2);

    AdmissibilityVerdict ve = check_admissibility(eg, eg);
    CHECK_FALSE(ve.all_admissible);
    CHECK(ve.first_failing() == ProductSlot::EntryEntry);

    // mixed pair: exactly the scalar-entry slot fails, and swapping the
    // factors moves the failure to the mirror slot
    AdmissibilityVerdict vm = check_admissibility(sg, eg);
    CHECK_FALSE(vm.all_admissible);
    CHECK(vm.report(ProductSlot::ScalarScalar).field);
    CHECK(vm.report(ProductSlot::EntryScalar).field);
    CHECK_FALSE(vm.report(ProductSlot::ScalarEntry).field);
    CHECK(vm.report(ProductSlot::EntryEntry).field);
    AdmissibilityVerdict vm2 = check_admissibility(eg, sg);
    CHECK_FALSE(vm2.all_admissible);
    CHECK_FALSE(vm2.report(ProductSlot::EntryScalar).field);
    CHECK(vm2.report(ProductSlot::ScalarScalar).field);
    CHECK(vm2.report(ProductSlot::ScalarEntry).field);
    CHECK(vm2.report(ProductSlot::EntryEntry).field);
}

TEST_CASE("universality criterion") {
    CHECK(check_universal(universal_descriptor()));
    CHECK_FALSE(check_universal(gauss_scalar_descriptor()));
    CHECK_FALSE(check_universal(gauss_entry_descriptor()));
    // a universal left factor makes every pairing admissible
    for (const auto& right :
         {universal_descriptor(), gauss_scalar_descriptor(), gauss_entry_descriptor()}) {
        CHECK(check_admissibility(universal_descriptor(), right).all_admissible);
    }
}

TEST_CASE("extremal ideal checks") {
    auto r1 = check_extremal_ideals(universal_descriptor(), universal_descriptor());
    CHECK(r1.smallest_ok);
    CHECK(r1.sum_maximal_ok);
    auto r2 = check_extremal_ideals(gauss_scalar_descriptor(), gauss_scalar_descriptor());
    CHECK(r2.smallest_ok);
    CHECK_FALSE(r2.sum_maximal_ok);
    auto r3 = check_extremal_ideals(gauss_entry_descriptor(), gauss_entry_descriptor());
    CHECK_FALSE(r3.smallest_ok);
    CHECK(r3.sum_maximal_ok);
}

TEST_CASE("admissibility failures are flagged by the extremal checks") {
    // whenever the entry-entry or scalar-scalar product fails, the matching
    // extremal property fails with it
    std::vector<DescriptorPtr> corpus = {
        universal_descriptor(), gauss_scalar_descriptor(), gauss_entry_descriptor(),
        NearlySimpleDescriptor::make(NumberField::make(pq({-2, 0, 1})), NumberField::rationals()),
        NearlySimpleDescriptor::make(NumberField::rationals(), NumberField::make(pq({-2, 0, 1})))};
    for (const auto& a : corpus)
        for (const auto& b : corpus) {
            AdmissibilityVerdict v = check_admissibility(a, b);
            ExtremalReport ex = check_extremal_ideals(a, b);
            CHECK(ex.smallest_ok == v.report(ProductSlot::EntryEntry).field);
            CHECK(ex.sum_maximal_ok == v.report(ProductSlot::ScalarScalar).field);
        }
}

TEST_CASE("classification on the worked examples") {
    DescriptorPtr d = universal_descriptor();
    AdmissibilityVerdict v = check_admissibility(d, d);
    AlgElement one = AlgElement::one(d);
    AlgElement e11 = unit_elem(d, 1, 1);

    CHECK(classify_ideal_of(TensorElement(d, d), v).tag == AdmissibleTag::Zero);
    CHECK(classify_ideal_of(TensorElement::elementary(one, one), v).tag == AdmissibleTag::Full);
    CHECK(classify_ideal_of(TensorElement::elementary(e11, e11), v).tag == AdmissibleTag::IaIb);
    CHECK(classify_ideal_of(TensorElement::elementary(one, e11), v).tag == AdmissibleTag::AIb);
    CHECK(classify_ideal_of(TensorElement::elementary(e11, one), v).tag == AdmissibleTag::IaB);
    TensorElement mixed =
        TensorElement::elementary(one, e11) + TensorElement::elementary(e11, one);
    Classification c = classify_ideal_of(mixed, v);
    CHECK(c.tag == AdmissibleTag::Sum);
    CHECK_FALSE(c.lower_bound_only);

    // non-admissible context: the verdict flags the classification
    DescriptorPtr sg = gauss_scalar_descriptor();
    Classification lb = classify_ideal_of(
        TensorElement::elementary(AlgElement::one(sg), AlgElement::one(sg)),
        check_admissibility(sg, sg));
    CHECK(lb.lower_bound_only);

    CHECK(tag_contained_in(AdmissibleTag::IaIb, AdmissibleTag::Sum));
    CHECK_FALSE(tag_contained_in(AdmissibleTag::IaB, AdmissibleTag::AIb));
}

TEST_CASE("rank normalization preserves dense truncated-model coordinates") {
    // independent value check: the dense coordinate matrix built from raw,
    // unreduced pair lists must match the one built from the library's
    // normalized representation
    std::mt19937_64 gen(1777);
    DescriptorPtr d = universal_descriptor();
    TruncatedModel model(d, 4);
    auto dense = [&](const std::vector<TensorElement::Pair>& pairs) {
        std::vector<Rational> v(static_cast<std::size_t>(model.dim() * model.dim()), Rational(0));
        for (const auto& [a, b] : pairs) {
            auto ca = model.coords(a);
            auto cb = model.coords(b);
            for (std::size_t u = 0; u < ca.size(); ++u)
                for (std::size_t w = 0; w < cb.size(); ++w)
                    v[u * ca.size() + w] += ca[u] * cb[w];
        }
        return v;
    };
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<TensorElement::Pair> raw;
        std::uint64_t n = 1 + rand_below(gen, 5);
        for (std::uint64_t i = 0; i < n; ++i)
            raw.emplace_back(random_alg_element(gen, d, 3, rand_below(gen, 2) == 0, 3),
                             random_alg_element(gen, d, 3, rand_below(gen, 2) == 0, 3));
        // duplicate a pair to force folding
        if (rand_below(gen, 2) == 0) raw.push_back(raw.front());
        TensorElement t = TensorElement::from_pairs(d, d, raw);
        CHECK(dense(raw) == dense(t.pairs()));
        CHECK(t.rank() <= raw.size());
    }
}

TEST_CASE("classification agrees with the truncated-model closure oracle") {
    std::mt19937_64 gen(2024);
    struct Config {
        DescriptorPtr a, b;
        int blocks_a, blocks_b;
        FinOp::Index window;
        int count;
    };
    std::vector<Config> configs = {
        {universal_descriptor(), universal_descriptor(), 4, 4, 2, 200},
        {gauss_scalar_descriptor(), universal_descriptor(), 3, 3, 2, 200},
        {universal_descriptor(), gauss_entry_descriptor(), 4, 4, 2, 200},
    };
    for (const auto& cfg : configs) {
        TensorOracle oracle(cfg.a, cfg.b, cfg.blocks_a, cfg.blocks_b);
        AdmissibilityVerdict v = check_admissibility(cfg.a, cfg.b);
        REQUIRE(v.all_admissible);
        int mismatches = 0;
        for (int trial = 0; trial < cfg.count; ++trial) {
            TensorElement t = random_tensor(gen, cfg.a, cfg.b, cfg.window, 4);
            Classification c = classify_ideal_of(t, v);
            OracleOutcome o = oracle.classify(t);
            if (!o.tag || *o.tag != c.tag) ++mismatches;
        }
        CHECK(mismatches == 0);
    }
}

TEST_CASE("witness construction on the corpus") {
    DescriptorPtr sg = gauss_scalar_descriptor();
    DescriptorPtr eg = gauss_entry_descriptor();

    {
        AdmissibilityVerdict v = check_admissibility(eg, eg);
        WitnessRecord w = construct_witness(eg, eg, v);
        CHECK(w.failing == ProductSlot::EntryEntry);
        CHECK(w.space == WitnessSpace::Full);
        CHECK_FALSE(w.g1.is_zero_elem());
        CHECK_FALSE(w.g2.is_zero_elem());
        CHECK((w.g1 * w.g2).is_zero_elem());
        // the witnesses generate inside I_A ⊗ I_B
        CHECK(membership(w.g1, IdealSpace::IaIb));
        CHECK(membership(w.g2, IdealSpace::IaIb));
    }
    {
        AdmissibilityVerdict v = check_admissibility(sg, sg);
        WitnessRecord w = construct_witness(sg, sg, v);
        CHECK(w.failing == ProductSlot::ScalarScalar);
        CHECK(w.space == WitnessSpace::BothQuotient);
        CHECK((w.g1 * w.g2).is_zero_elem());
    }
    {
        AdmissibilityVerdict v = check_admissibility(sg, eg);
        WitnessRecord w = construct_witness(sg, eg, v);
        CHECK(w.failing == ProductSlot::ScalarEntry);
        CHECK(w.space == WitnessSpace::LeftQuotient);
        CHECK((w.g1 * w.g2).is_zero_elem());
        // quotient-side factors carry no finite part
        for (const auto& [a, b] : w.g1.pairs()) CHECK(a.fin().is_zero_op());
    }
    {
        AdmissibilityVerdict v = check_admissibility(eg, sg);
        WitnessRecord w = construct_witness(eg, sg, v);
        CHECK(w.failing == ProductSlot::EntryScalar);
        CHECK(w.space == WitnessSpace::RightQuotient);
        CHECK((w.g1 * w.g2).is_zero_elem());
    }
    CHECK_THROWS_AS(construct_witness(universal_descriptor(), universal_descriptor(),
                                      check_admissibility(universal_descriptor(),
                                                          universal_descriptor())),
                    std::domain_error);
}

TEST_CASE("witnesses across larger scalar fields") {
    // every non-admissible pair in a small corpus yields a verified witness
    std::vector<DescriptorPtr> corpus = {
        gauss_scalar_descriptor(), gauss_entry_descriptor(),
        NearlySimpleDescriptor::make(NumberField::make(pq({-2, 0, 1})), NumberField::rationals()),
        NearlySimpleDescriptor::make(NumberField::make(pq({-2, 0, 0, 1})), NumberField::rationals()),
        NearlySimpleDescriptor::make(NumberField::rationals(), NumberField::make(pq({-3, 0, 1})))};
    int witnesses = 0;
    for (const auto& a : corpus)
        for (const auto& b : corpus) {
            AdmissibilityVerdict v = check_admissibility(a, b);
            if (v.all_admissible) continue;
            WitnessRecord w = construct_witness(a, b, v);
            CHECK_FALSE(w.g1.is_zero_elem());
            CHECK_FALSE(w.g2.is_zero_elem());
            CHECK((w.g1 * w.g2).is_zero_elem());
            ++witnesses;
        }
    CHECK(witnesses >= 6);
}

TEST_CASE("rank reduction on the worked examples") {
    DescriptorPtr d = universal_descriptor();
    AlgElement one = AlgElement::one(d);
    AlgElement e11 = unit_elem(d, 1, 1);
    AlgElement b1 = unit_elem(d, 1, 2);
    AlgElement b2 = unit_elem(d, 2, 2);

    {  // already elementary: empty certificate
        TensorElement t = TensorElement::elementary(one, b1);
        ReductionCertificate cert = rank_reduction(t, 1);
        CHECK(cert.steps.empty());
        CHECK(cert.claim == t);
        CHECK(replay_certificate(t, cert) == t);
    }
    {  // one ideal summand: commutate, separate, combine
        TensorElement t = TensorElement::elementary(one, b1) + TensorElement::elementary(e11, b2);
        ReductionCertificate cert = rank_reduction(t, 5);
        CHECK(cert.claim == TensorElement::elementary(one, b1));
        CHECK(replay_certificate(t, cert) == cert.claim);
        REQUIRE(cert.steps.size() == 3);
        CHECK(std::holds_alternative<StepCommutate>(cert.steps[0]));
        CHECK(std::holds_alternative<StepSeparate>(cert.steps[1]));
        CHECK(std::holds_alternative<StepCombine>(cert.steps[2]));
    }
    {  // scalar normalization only
        AlgElement a(d, NFElement::from_rational(d->scalar_field(), Rational(2)),
                     FinOp::unit(d->entry_field(), 1, 1));
        TensorElement t = TensorElement::elementary(a, b1);
        ReductionCertificate cert = rank_reduction(t, 9);
        REQUIRE(cert.steps.size() == 1);
        CHECK(std::holds_alternative<StepApplyElementary>(cert.steps[0]));
        CHECK(cert.claim == TensorElement::elementary(one, b1));
        CHECK(replay_certificate(t, cert) == cert.claim);
    }
    {  // hypothesis failures
        CHECK_THROWS_AS(rank_reduction(TensorElement::elementary(e11, b1), 1), std::domain_error);
        // over a rational scalar field all nonzero scalar parts are dependent,
        // so a rank-2 quotient image needs a degree-2 scalar field
        DescriptorPtr sg = gauss_scalar_descriptor();
        AlgElement i_elem = AlgElement::from_scalar(
            sg, NFElement::generator(sg->scalar_field()));
        TensorElement two_heads =
            TensorElement::elementary(AlgElement::one(sg), unit_elem(sg, 1, 2)) +
            TensorElement::elementary(i_elem, unit_elem(sg, 2, 2));
        CHECK(quotient_image(two_heads, QuotientKind::LeftOnly).rank() == 2);
        CHECK_THROWS_AS(rank_reduction(two_heads, 1), std::domain_error);
        // a dependent second head folds into an elementary image and reduces fine
        TensorElement folded_heads = TensorElement::elementary(one, b1) +
                                     TensorElement::elementary(one + e11, b2);
        CHECK(quotient_image(folded_heads, QuotientKind::LeftOnly).rank() == 1);
        ReductionCertificate cert = rank_reduction(folded_heads, 3);
        CHECK(replay_certificate(folded_heads, cert) == cert.claim);
        DescriptorPtr eg = gauss_entry_descriptor();
        TensorElement over_big_entry =
            TensorElement::elementary(AlgElement::one(eg), AlgElement::one(eg));
        CHECK_THROWS_AS(rank_reduction(over_big_entry, 1), std::domain_error);
    }
}

TEST_CASE("tampered certificates are rejected") {
    DescriptorPtr d = universal_descriptor();
    AlgElement one = AlgElement::one(d);
    TensorElement t = TensorElement::elementary(one, unit_elem(d, 1, 2)) +
                      TensorElement::elementary(unit_elem(d, 1, 1), unit_elem(d, 2, 2));
    ReductionCertificate cert = rank_reduction(t, 11);
    CHECK(verify_certificate(t, cert));

    ReductionCertificate bad = cert;
    for (auto& step : bad.steps) {
        if (auto* s = std::get_if<StepCombine>(&step)) {
            s->terms[0].first += 1;  // alter one recorded coefficient
        }
    }
    CHECK_FALSE(verify_certificate(t, bad));
    CHECK_THROWS_AS(replay_certificate(t, bad), CertificateError);

    ReductionCertificate out_of_range = cert;
    if (auto* s = std::get_if<StepCommutate>(&out_of_range.steps[0])) s->src = 99;
    CHECK_FALSE(verify_certificate(t, out_of_range));
}

TEST_CASE("rank reduction with nontrivial scalar field") {
    // K_s = Q(i), K_e = Q: the normalizer has to walk through the companion
    // embedding, and the claim is still an elementary tensor at the unit
    DescriptorPtr sg = gauss_scalar_descriptor();
    std::mt19937_64 gen(131);
    for (int trial = 0; trial < 25; ++trial) {
        AlgElement a1 = random_alg_element(gen, sg, 4);
        if (a1.in_ideal()) continue;
        AlgElement a2 = random_alg_element(gen, sg, 4, true);
        AlgElement b1 = random_alg_element(gen, sg, 4);
        AlgElement b2 = random_alg_element(gen, sg, 4);
        if (b1.is_zero_elem() || a2.is_zero_elem()) continue;
        TensorElement t =
            TensorElement::elementary(a1, b1) + TensorElement::elementary(a2, b2);
        if (quotient_image(t, QuotientKind::LeftOnly).rank() != 1) continue;
        ReductionCertificate cert = rank_reduction(t, 1000 + static_cast<std::uint64_t>(trial));
        CHECK(replay_certificate(t, cert) == cert.claim);
        REQUIRE(cert.claim.rank() == 1);
        CHECK(cert.claim.pairs()[0].first.is_one_elem());
    }
}

TEST_CASE("reduction claims are certified members of the generated ideal") {
    DescriptorPtr d = universal_descriptor();
    TensorOracle oracle(d, d, 4, 4);
    AdmissibilityVerdict v = check_admissibility(d, d);
    std::mt19937_64 gen(137);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 40; ++trial) {
        // one head factor outside the ideal, up to three ideal summands
        std::vector<TensorElement::Pair> pairs;
        pairs.emplace_back(AlgElement::one(d) + random_alg_element(gen, d, 2, true, 2),
                           random_alg_element(gen, d, 2, false, 2));
        std::uint64_t extra = rand_below(gen, 3);
        for (std::uint64_t i = 0; i < extra; ++i)
            pairs.emplace_back(random_alg_element(gen, d, 2, true, 2),
                               random_alg_element(gen, d, 2, false, 2));
        TensorElement t = TensorElement::from_pairs(d, d, pairs);
        if (t.is_zero_elem() || quotient_image(t, QuotientKind::LeftOnly).rank() != 1) continue;
        ReductionCertificate cert = rank_reduction(t, 7000 + trial);
        CHECK(replay_certificate(t, cert) == cert.claim);
        auto confirmed = oracle.confirm_membership(cert.claim, t);
        REQUIRE(confirmed.has_value());
        CHECK(*confirmed);
        // consistency with the classification lattice
        Classification ct = classify_ideal_of(t, v);
        Classification cc = classify_ideal_of(cert.claim, v);
        CHECK(tag_contained_in(cc.tag, ct.tag));
        ++done;
    }
    CHECK(done >= 40);
}

TEST_CASE("admissible-context lattice: kernel tensors never classify as full") {
    std::mt19937_64 gen(139);
    DescriptorPtr d = universal_descriptor();
    AdmissibilityVerdict v = check_admissibility(d, d);
    int done = 0;
    for (int trial = 0; trial < 4000 && done < 300; ++trial) {
        TensorElement t = random_tensor(gen, d, d, 3, 3);
        if (t.is_zero_elem()) continue;
        if (!quotient_image(t, QuotientKind::Both).is_zero_elem()) continue;
        if (quotient_image(t, QuotientKind::LeftOnly).is_zero_elem()) continue;
        Classification c = classify_ideal_of(t, v);
        CHECK(c.tag != AdmissibleTag::Full);
        CHECK(tag_contained_in(c.tag, AdmissibleTag::Sum));
        ++done;
    }
    CHECK(done >= 300);
}
