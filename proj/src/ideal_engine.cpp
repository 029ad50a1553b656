#include "nsalg/ideal_engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nsalg/linalg.hpp"

namespace nsalg {

std::string to_string(AdmissibleTag tag) {
    switch (tag) {
        case AdmissibleTag::Zero: return "ZERO";
        case AdmissibleTag::IaIb: return "IA_IB";
        case AdmissibleTag::IaB: return "IA_B";
        case AdmissibleTag::AIb: return "A_IB";
        case AdmissibleTag::Sum: return "SUM";
        case AdmissibleTag::Full: return "FULL";
    }
    return "?";
}

bool tag_contained_in(AdmissibleTag a, AdmissibleTag b) {
    if (a == b) return true;
    auto level = [](AdmissibleTag t) {
        switch (t) {
            case AdmissibleTag::Zero: return 0;
            case AdmissibleTag::IaIb: return 1;
            case AdmissibleTag::IaB:
            case AdmissibleTag::AIb: return 2;
            case AdmissibleTag::Sum: return 3;
            case AdmissibleTag::Full: return 4;
        }
        return -1;
    };
    if (level(a) == 2 && level(b) == 2) return false;  // IaB vs AIb incomparable
    return level(a) < level(b);
}

std::string to_string(ProductSlot slot) {
    switch (slot) {
        case ProductSlot::ScalarScalar: return "Z(A/I_A)xZ(B/I_B)";
        case ProductSlot::EntryScalar: return "C(A)xZ(B/I_B)";
        case ProductSlot::ScalarEntry: return "Z(A/I_A)xC(B)";
        case ProductSlot::EntryEntry: return "C(A)xC(B)";
    }
    return "?";
}

std::string to_string(WitnessSpace s) {
    switch (s) {
        case WitnessSpace::Full: return "A(x)B";
        case WitnessSpace::LeftQuotient: return "(A/I_A)(x)B";
        case WitnessSpace::RightQuotient: return "A(x)(B/I_B)";
        case WitnessSpace::BothQuotient: return "(A/I_A)(x)(B/I_B)";
    }
    return "?";
}

std::optional<ProductSlot> AdmissibilityVerdict::first_failing() const {
    for (const auto& r : products)
        if (!r.field) return r.slot;
    return std::nullopt;
}

AdmissibilityVerdict check_admissibility(const DescriptorPtr& desc_a, const DescriptorPtr& desc_b,
                                         int degree_bound) {
    auto make_report = [&](ProductSlot slot, const FieldPtr& left, const FieldPtr& right) {
        ProductReport rep;
        rep.slot = slot;
        rep.left_name = left->name();
        rep.right_name = right->name();
        RingPtr ring = build_tensor_ring(left, right, degree_bound);
        rep.field = is_field(*ring);
        rep.num_components = ring->factors().size();
        for (const auto& f : ring->factors()) rep.component_degrees.push_back(f.degree());
        return rep;
    };
    AdmissibilityVerdict v;
    v.products[0] = make_report(ProductSlot::ScalarScalar, desc_a->scalar_field(), desc_b->scalar_field());
    v.products[1] = make_report(ProductSlot::EntryScalar, desc_a->entry_field(), desc_b->scalar_field());
    v.products[2] = make_report(ProductSlot::ScalarEntry, desc_a->scalar_field(), desc_b->entry_field());
    v.products[3] = make_report(ProductSlot::EntryEntry, desc_a->entry_field(), desc_b->entry_field());
    v.all_admissible = true;
    for (const auto& r : v.products) v.all_admissible = v.all_admissible && r.field;
    return v;
}

bool check_universal(const DescriptorPtr& desc) {
    return desc->scalar_field()->degree() == 1 && desc->entry_field()->degree() == 1;
}

ExtremalReport check_extremal_ideals(const DescriptorPtr& desc_a, const DescriptorPtr& desc_b,
                                     int degree_bound) {
    ExtremalReport r;
    r.smallest_ok =
        is_field(*build_tensor_ring(desc_a->entry_field(), desc_b->entry_field(), degree_bound));
    r.sum_maximal_ok =
        is_field(*build_tensor_ring(desc_a->scalar_field(), desc_b->scalar_field(), degree_bound));
    return r;
}

Classification classify_ideal_of(const TensorElement& t, const AdmissibilityVerdict& verdict) {
    Classification c;
    c.lower_bound_only = !verdict.all_admissible;
    if (t.is_zero_elem()) {
        c.tag = AdmissibleTag::Zero;
        return c;
    }
    if (!quotient_image(t, QuotientKind::Both).is_zero_elem()) {
        c.tag = AdmissibleTag::Full;
        return c;
    }
    const bool in_iab = membership(t, IdealSpace::IaB);
    const bool in_aib = membership(t, IdealSpace::AIb);
    if (in_iab && in_aib)
        c.tag = AdmissibleTag::IaIb;
    else if (in_iab)
        c.tag = AdmissibleTag::IaB;
    else if (in_aib)
        c.tag = AdmissibleTag::AIb;
    else
        c.tag = AdmissibleTag::Sum;
    return c;
}

Classification classify_ideal_of(const TensorElement& t) {
    return classify_ideal_of(t, check_admissibility(t.desc_a(), t.desc_b()));
}

namespace {

// Converts a zero divisor of the failing tensor product into pairs of field
// elements: the residue polynomial sum_j c_j x^j corresponds to
// sum_j (alpha^j) ⊗ c_j with alpha the left generator.
std::vector<std::pair<NFElement, NFElement>> ring_element_pairs(const RingElement& c) {
    const FieldPtr& K = c.ring()->left_field();
    std::vector<std::pair<NFElement, NFElement>> out;
    NFElement alpha_pow = NFElement::one(K);
    const NFElement alpha = NFElement::generator(K);
    for (int j = 0; j <= c.rep().degree(); ++j) {
        const NFElement& cj = c.rep()[static_cast<std::size_t>(j)];
        if (!cj.is_zero_elem()) out.emplace_back(alpha_pow, cj);
        alpha_pow = alpha_pow * alpha;
    }
    return out;
}

// Realizes a field element as an algebra element: entry fields scale the
// (1,1) matrix unit inside the ideal; scalar fields multiply the unit of the
// quotient (represented with a vanishing finite part).
AlgElement realize_factor(const NFElement& x, const DescriptorPtr& desc, bool entry_side) {
    if (entry_side) return AlgElement::from_fin(desc, FinOp::scaled_unit(1, 1, x));
    return AlgElement::from_scalar(desc, x);
}

}  // namespace

WitnessRecord construct_witness(const DescriptorPtr& desc_a, const DescriptorPtr& desc_b,
                                const AdmissibilityVerdict& verdict, int degree_bound) {
    auto failing = verdict.first_failing();
    if (!failing)
        throw std::domain_error("descriptor pair is admissible; no witness exists");
    const ProductSlot slot = *failing;
    const bool left_entry = (slot == ProductSlot::EntryScalar || slot == ProductSlot::EntryEntry);
    const bool right_entry = (slot == ProductSlot::ScalarEntry || slot == ProductSlot::EntryEntry);
    const FieldPtr& lf = left_entry ? desc_a->entry_field() : desc_a->scalar_field();
    const FieldPtr& rf = right_entry ? desc_b->entry_field() : desc_b->scalar_field();

    RingPtr ring = build_tensor_ring(lf, rf, degree_bound);
    auto [c1, c2] = zero_divisor_pair(*ring);

    auto realize = [&](const RingElement& c) {
        std::vector<TensorElement::Pair> pairs;
        for (const auto& [x, y] : ring_element_pairs(c))
            pairs.emplace_back(realize_factor(x, desc_a, left_entry),
                               realize_factor(y, desc_b, right_entry));
        return TensorElement::from_pairs(desc_a, desc_b, std::move(pairs));
    };

    WitnessRecord w{slot,
                    left_entry ? (right_entry ? WitnessSpace::Full : WitnessSpace::RightQuotient)
                               : (right_entry ? WitnessSpace::LeftQuotient : WitnessSpace::BothQuotient),
                    realize(c1), realize(c2)};
    if (w.g1.is_zero_elem() || w.g2.is_zero_elem() || !(w.g1 * w.g2).is_zero_elem())
        throw std::logic_error("witness construction failed its own product check");
    return w;
}

// --- rank reduction ---------------------------------------------------------

namespace {

struct WorkingForm {
    // value = 1 ⊗ head_right + sum_i tail[i].first ⊗ tail[i].second,
    // with the tail lefts inside the ideal and Q-independent
    AlgElement head_right;
    std::vector<std::pair<AlgElement, AlgElement>> tail;
};

// Folds the tail so its lefts are Q-independent and nonzero; exact and
// value-preserving. Lefts live inside the ideal.
void normalize_tail(std::vector<std::pair<AlgElement, AlgElement>>& tail,
                    const DescriptorPtr& desc_a) {
    std::vector<std::pair<AlgElement, AlgElement>> pruned;
    for (auto& p : tail)
        if (!p.first.is_zero_elem() && !p.second.is_zero_elem()) pruned.push_back(std::move(p));
    // coordinate context over the joint support of the lefts
    std::set<std::pair<FinOp::Index, FinOp::Index>> s;
    for (const auto& p : pruned)
        for (const auto& [rc, v] : p.first.fin().entries()) s.insert(rc);
    std::vector<std::pair<FinOp::Index, FinOp::Index>> supp(s.begin(), s.end());
    const FieldPtr& ke = desc_a->entry_field();
    RowReducer<Rational> red;
    std::vector<char> keep(pruned.size(), 1);
    for (std::size_t i = 0; i < pruned.size(); ++i) {
        std::vector<Rational> coords;
        for (const auto& rc : supp) {
            NFElement e = pruned[i].first.fin().entry(rc.first, rc.second, ke);
            for (const auto& q : e.coords()) coords.push_back(q);
        }
        auto ins = red.insert(std::move(coords), i);
        if (!ins.independent) {
            keep[i] = 0;
            for (const auto& [j, c] : ins.combination)
                pruned[j].second = pruned[j].second + pruned[i].second.scaled_rational(c);
        }
    }
    std::vector<std::pair<AlgElement, AlgElement>> out;
    for (std::size_t i = 0; i < pruned.size(); ++i)
        if (keep[i] && !pruned[i].second.is_zero_elem()) out.push_back(std::move(pruned[i]));
    tail = std::move(out);
}

}  // namespace

ReductionCertificate rank_reduction(const TensorElement& t, std::uint64_t seed,
                                    const RankReductionOptions& opts) {
    const DescriptorPtr& da = t.desc_a();
    const DescriptorPtr& db = t.desc_b();
    if (da->entry_field()->degree() != 1)
        throw std::domain_error(
            "constructive reduction requires the left entry field to be Q; "
            "use membership classification for larger entry fields");
    if (t.is_zero_elem()) throw std::domain_error("reduction of the zero tensor");
    {
        QuotientImage qi = quotient_image(t, QuotientKind::LeftOnly);
        if (qi.rank() != 1)
            throw std::domain_error(
                "hypothesis fails: the left-quotient image is not a nonzero elementary tensor");
    }

    ReductionCertificate cert{{}, TensorElement(da, db)};
    std::vector<TensorElement> pool{t};

    auto [k, dec] = decompose_mod_subspace(t, Side::Left);
    if (k != 1) throw std::logic_error("left-quotient rank 1 must give a single head factor");

    const AlgElement a1 = dec.pairs()[0].first;
    WorkingForm form{dec.pairs()[0].second, {}};
    for (std::size_t i = 1; i < dec.pairs().size(); ++i) form.tail.push_back(dec.pairs()[i]);

    std::size_t base_idx = 0;  // pool index holding the normalized element
    if (!a1.is_one_elem()) {
        ElementaryOperator phi = synth_unit_normalizer(a1, da);
        TensorElement e1 = apply_tensor_operator(phi, ElementaryOperator::identity(db), pool[0]);
        cert.steps.push_back(StepApplyElementary{phi, ElementaryOperator::identity(db), 0});
        pool.push_back(e1);
        base_idx = pool.size() - 1;
        // push the operator through the decomposed form
        for (auto& [u, w] : form.tail) u = apply_elementary(phi, u, da);
        // head becomes 1 ⊗ head_right exactly
    }
    normalize_tail(form.tail, da);

    {  // consistency: the tracked form must equal the pool element
        std::vector<TensorElement::Pair> check_pairs{{AlgElement::one(da), form.head_right}};
        for (const auto& p : form.tail) check_pairs.push_back(p);
        if (TensorElement::from_pairs(da, db, check_pairs) != pool[base_idx])
            throw std::logic_error("tracked working form diverged from the replayed element");
    }

    if (form.tail.empty()) {
        cert.claim = pool[base_idx];
        return cert;
    }

    std::vector<AlgElement> us;
    for (const auto& p : form.tail) us.push_back(p.first);

    // randomized commutator search, widening the window on exhaustion
    FinOp x0;
    {
        bool found = false;
        std::string last_error;
        for (int round = 0; round < opts.max_window_rounds && !found; ++round) {
            FindX0Options fo;
            fo.max_tries = opts.max_tries;
            fo.window_blocks = 2 * (round + 1);
            try {
                x0 = find_x0(us, da, seed + static_cast<std::uint64_t>(round), fo);
                found = true;
            } catch (const std::runtime_error& e) {
                last_error = e.what();
            }
        }
        if (!found) throw std::runtime_error(last_error);
    }

    TensorElement x0_tensor =
        TensorElement::elementary(AlgElement::from_fin(da, x0), AlgElement::one(db));
    TensorElement commuted = pool[base_idx] * x0_tensor - x0_tensor * pool[base_idx];
    cert.steps.push_back(StepCommutate{x0, base_idx});
    pool.push_back(commuted);
    const std::size_t commuted_idx = pool.size() - 1;

    std::vector<FinOp> comms;
    std::vector<AlgElement> targets;
    for (const auto& [u, w] : form.tail) {
        comms.push_back(u.fin() * x0 - x0 * u.fin());
        targets.push_back(u);
    }
    std::vector<ElementaryOperator> thetas = synth_separating_operators(comms, targets, da);

    std::vector<std::pair<Rational, std::size_t>> combo{{Rational(1), base_idx}};
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        TensorElement sep =
            apply_tensor_operator(thetas[i], ElementaryOperator::identity(db), pool[commuted_idx]);
        TensorElement expected = TensorElement::elementary(form.tail[i].first, form.tail[i].second);
        if (sep != expected)
            throw std::logic_error("separating operator did not recover its tensor summand");
        cert.steps.push_back(StepSeparate{thetas[i], commuted_idx});
        pool.push_back(sep);
        combo.emplace_back(Rational(-1), pool.size() - 1);
    }

    cert.steps.push_back(StepCombine{combo});
    TensorElement final_elem(da, db);
    for (const auto& [c, idx] : combo) final_elem = final_elem + pool[idx].scaled_rational(c);
    pool.push_back(final_elem);

    TensorElement expected_claim =
        TensorElement::elementary(AlgElement::one(da), form.head_right);
    if (final_elem != expected_claim)
        throw std::logic_error("reduction did not terminate in the expected elementary tensor");
    cert.claim = final_elem;
    return cert;
}

TensorElement replay_certificate(const TensorElement& t, const ReductionCertificate& cert) {
    const DescriptorPtr& da = t.desc_a();
    const DescriptorPtr& db = t.desc_b();
    std::vector<TensorElement> pool{t};
    auto fetch = [&](std::size_t idx) -> const TensorElement& {
        if (idx >= pool.size()) throw CertificateError("certificate step references a missing element");
        return pool[idx];
    };
    for (const ReductionStep& step : cert.steps) {
        if (std::holds_alternative<StepApplyElementary>(step)) {
            const auto& s = std::get<StepApplyElementary>(step);
            pool.push_back(apply_tensor_operator(s.phi, s.psi, fetch(s.src)));
        } else if (std::holds_alternative<StepCommutate>(step)) {
            const auto& s = std::get<StepCommutate>(step);
            TensorElement x0t =
                TensorElement::elementary(AlgElement::from_fin(da, s.x0), AlgElement::one(db));
            const TensorElement& src = fetch(s.src);
            pool.push_back(src * x0t - x0t * src);
        } else if (std::holds_alternative<StepSeparate>(step)) {
            const auto& s = std::get<StepSeparate>(step);
            pool.push_back(
                apply_tensor_operator(s.theta, ElementaryOperator::identity(db), fetch(s.src)));
        } else {
            const auto& s = std::get<StepCombine>(step);
            TensorElement acc(da, db);
            for (const auto& [c, idx] : s.terms) acc = acc + fetch(idx).scaled_rational(c);
            pool.push_back(acc);
        }
    }
    const TensorElement& final_elem = pool.back();
    if (final_elem != cert.claim)
        throw CertificateError("replay does not reproduce the claimed element");
    return final_elem;
}

bool verify_certificate(const TensorElement& t, const ReductionCertificate& cert) {
    try {
        replay_certificate(t, cert);
        return true;
    } catch (const CertificateError&) {
        return false;
    }
}

}  // namespace nsalg
