#include "nsalg/serialization.hpp"

#include <stdexcept>

namespace nsalg {

namespace {

std::runtime_error parse_error(const std::string& what) {
    return std::runtime_error("parse error: " + what);
}

std::vector<Rational> coords_from_json(const Json& j, std::size_t expected) {
    if (!j.is_array() || j.size() != expected)
        throw parse_error("expected a coordinate array of length " + std::to_string(expected));
    std::vector<Rational> c;
    c.reserve(expected);
    for (const auto& x : j) {
        if (!x.is_string()) throw parse_error("coordinates must be \"num/den\" strings");
        c.push_back(rat_parse(x.get<std::string>()));
    }
    return c;
}

Json coords_to_json(const std::vector<Rational>& c) {
    Json j = Json::array();
    for (const auto& q : c) j.push_back(rat_str(q));
    return j;
}

}  // namespace

Json poly_to_json(const PolyQ& p) {
    Json j = Json::array();
    for (const auto& c : p.coeffs()) j.push_back(rat_str(c));
    return j;
}

PolyQ poly_from_json(const Json& j) {
    if (!j.is_array()) throw parse_error("polynomial must be an array of coefficient strings");
    std::vector<Rational> c;
    for (const auto& x : j) {
        if (!x.is_string()) throw parse_error("polynomial coefficients must be strings");
        c.push_back(rat_parse(x.get<std::string>()));
    }
    return PolyQ(std::move(c));
}

Json field_to_json(const FieldPtr& f) { return Json{{"minpoly", poly_to_json(f->minpoly())}}; }

FieldPtr field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("minpoly")) throw parse_error("field needs a \"minpoly\" key");
    try {
        return NumberField::make(poly_from_json(j.at("minpoly")));
    } catch (const std::domain_error& e) {
        throw parse_error(std::string("invalid number field: ") + e.what());
    }
}

Json nf_elem_to_json(const NFElement& e) { return coords_to_json(e.coords()); }

NFElement nf_elem_from_json(const Json& j, const FieldPtr& f) {
    return NFElement(f, coords_from_json(j, static_cast<std::size_t>(f->degree())));
}

Json descriptor_to_json(const DescriptorPtr& d) {
    return Json{{"scalar_field", field_to_json(d->scalar_field())},
                {"entry_field", field_to_json(d->entry_field())}};
}

DescriptorPtr descriptor_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("scalar_field") || !j.contains("entry_field"))
        throw parse_error("descriptor needs \"scalar_field\" and \"entry_field\"");
    return NearlySimpleDescriptor::make(field_from_json(j.at("scalar_field")),
                                        field_from_json(j.at("entry_field")));
}

Json finop_to_json(const FinOp& f) {
    Json j = Json::array();
    for (const auto& [rc, v] : f.entries())
        j.push_back(Json::array({rc.first, rc.second, nf_elem_to_json(v)}));
    return j;
}

FinOp finop_from_json(const Json& j, const FieldPtr& entry_field) {
    if (!j.is_array()) throw parse_error("finite part must be an array of [row, col, coords]");
    FinOp f;
    for (const auto& ent : j) {
        if (!ent.is_array() || ent.size() != 3) throw parse_error("matrix entry must be [row, col, coords]");
        std::uint64_t r = ent.at(0).get<std::uint64_t>();
        std::uint64_t c = ent.at(1).get<std::uint64_t>();
        if (r == 0 || c == 0) throw parse_error("matrix indices are 1-based");
        f.add_entry(static_cast<FinOp::Index>(r), static_cast<FinOp::Index>(c),
                    nf_elem_from_json(ent.at(2), entry_field));
    }
    return f;
}

Json alg_elem_to_json(const AlgElement& a) {
    return Json{{"scalar", nf_elem_to_json(a.scalar())}, {"fin", finop_to_json(a.fin())}};
}

AlgElement alg_elem_from_json(const Json& j, const DescriptorPtr& d) {
    if (!j.is_object() || !j.contains("scalar") || !j.contains("fin"))
        throw parse_error("algebra element needs \"scalar\" and \"fin\"");
    return AlgElement(d, nf_elem_from_json(j.at("scalar"), d->scalar_field()),
                      finop_from_json(j.at("fin"), d->entry_field()));
}

Json tensor_to_json(const TensorElement& t) {
    Json pairs = Json::array();
    for (const auto& [a, b] : t.pairs())
        pairs.push_back(Json::array({alg_elem_to_json(a), alg_elem_to_json(b)}));
    return Json{{"pairs", pairs}};
}

TensorElement tensor_from_json(const Json& j, const DescriptorPtr& da, const DescriptorPtr& db) {
    if (!j.is_object() || !j.contains("pairs")) throw parse_error("tensor needs a \"pairs\" array");
    const Json& pj = j.at("pairs");
    if (!pj.is_array()) throw parse_error("tensor \"pairs\" must be an array");
    std::vector<TensorElement::Pair> pairs;
    for (const auto& p : pj) {
        if (!p.is_array() || p.size() != 2) throw parse_error("tensor pair must be [left, right]");
        pairs.emplace_back(alg_elem_from_json(p.at(0), da), alg_elem_from_json(p.at(1), db));
    }
    return TensorElement::from_pairs(da, db, std::move(pairs));
}

Json elementary_to_json(const ElementaryOperator& op) {
    Json j = Json::array();
    for (const auto& [a, b] : op.terms)
        j.push_back(Json::array({alg_elem_to_json(a), alg_elem_to_json(b)}));
    return j;
}

ElementaryOperator elementary_from_json(const Json& j, const DescriptorPtr& d) {
    if (!j.is_array()) throw parse_error("elementary operator must be an array of [left, right]");
    ElementaryOperator op;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2) throw parse_error("operator term must be [left, right]");
        op.terms.emplace_back(alg_elem_from_json(t.at(0), d), alg_elem_from_json(t.at(1), d));
    }
    return op;
}

Json ring_element_to_json(const RingElement& e) {
    Json j = Json::array();
    for (const auto& c : e.rep().coeffs()) j.push_back(nf_elem_to_json(c));
    return j;
}

Json verdict_to_json(const AdmissibilityVerdict& v) {
    Json products = Json::array();
    for (const auto& r : v.products) {
        Json degrees = Json::array();
        for (int d : r.component_degrees) degrees.push_back(d);
        products.push_back(Json{{"product", to_string(r.slot)},
                                {"left_field", r.left_name},
                                {"right_field", r.right_name},
                                {"is_field", r.field},
                                {"num_components", r.num_components},
                                {"component_degrees", degrees}});
    }
    return Json{{"all_admissible", v.all_admissible}, {"products", products}};
}

Json witness_to_json(const WitnessRecord& w) {
    return Json{{"failing_product", to_string(w.failing)},
                {"space", to_string(w.space)},
                {"g1", tensor_to_json(w.g1)},
                {"g2", tensor_to_json(w.g2)},
                {"product_is_zero", (w.g1 * w.g2).is_zero_elem()}};
}

Json classification_to_json(const Classification& c) {
    return Json{{"tag", to_string(c.tag)}, {"lower_bound_only", c.lower_bound_only}};
}

Json extremal_to_json(const ExtremalReport& r) {
    return Json{{"smallest_ok", r.smallest_ok}, {"sum_maximal_ok", r.sum_maximal_ok}};
}

Json field_tensor_report(const FieldTensorRing& ring) {
    Json degrees = Json::array();
    for (const auto& f : ring.factors()) degrees.push_back(f.degree());
    Json zd = Json::array();
    if (!is_field(ring)) {
        auto [c1, c2] = zero_divisor_pair(ring);
        zd.push_back(ring_element_to_json(c1));
        zd.push_back(ring_element_to_json(c2));
    }
    return Json{{"is_field", is_field(ring)},
                {"num_components", ring.factors().size()},
                {"component_degrees", degrees},
                {"zero_divisors", zd}};
}

Json certificate_to_json(const ReductionCertificate& cert) {
    Json steps = Json::array();
    for (const ReductionStep& step : cert.steps) {
        if (std::holds_alternative<StepApplyElementary>(step)) {
            const auto& s = std::get<StepApplyElementary>(step);
            steps.push_back(Json{{"kind", "apply_elementary"},
                                 {"phi", elementary_to_json(s.phi)},
                                 {"psi", elementary_to_json(s.psi)},
                                 {"src", s.src}});
        } else if (std::holds_alternative<StepCommutate>(step)) {
            const auto& s = std::get<StepCommutate>(step);
            steps.push_back(Json{{"kind", "commutate"}, {"x0", finop_to_json(s.x0)}, {"src", s.src}});
        } else if (std::holds_alternative<StepSeparate>(step)) {
            const auto& s = std::get<StepSeparate>(step);
            steps.push_back(
                Json{{"kind", "separate"}, {"theta", elementary_to_json(s.theta)}, {"src", s.src}});
        } else {
            const auto& s = std::get<StepCombine>(step);
            Json terms = Json::array();
            for (const auto& [c, idx] : s.terms) terms.push_back(Json::array({rat_str(c), idx}));
            steps.push_back(Json{{"kind", "combine"}, {"terms", terms}});
        }
    }
    return Json{{"steps", steps}, {"claim", tensor_to_json(cert.claim)}};
}

ReductionCertificate certificate_from_json(const Json& j, const DescriptorPtr& da,
                                           const DescriptorPtr& db) {
    if (!j.is_object() || !j.contains("steps") || !j.contains("claim"))
        throw parse_error("certificate needs \"steps\" and \"claim\"");
    ReductionCertificate cert{{}, tensor_from_json(j.at("claim"), da, db)};
    for (const auto& sj : j.at("steps")) {
        const std::string kind = sj.at("kind").get<std::string>();
        if (kind == "apply_elementary") {
            cert.steps.push_back(StepApplyElementary{elementary_from_json(sj.at("phi"), da),
                                                     elementary_from_json(sj.at("psi"), db),
                                                     sj.at("src").get<std::size_t>()});
        } else if (kind == "commutate") {
            cert.steps.push_back(StepCommutate{finop_from_json(sj.at("x0"), da->entry_field()),
                                               sj.at("src").get<std::size_t>()});
        } else if (kind == "separate") {
            cert.steps.push_back(StepSeparate{elementary_from_json(sj.at("theta"), da),
                                              sj.at("src").get<std::size_t>()});
        } else if (kind == "combine") {
            StepCombine s;
            for (const auto& t : sj.at("terms")) {
                if (!t.is_array() || t.size() != 2) throw parse_error("combine term must be [coeff, src]");
                s.terms.emplace_back(rat_parse(t.at(0).get<std::string>()), t.at(1).get<std::size_t>());
            }
            cert.steps.push_back(std::move(s));
        } else {
            throw parse_error("unknown certificate step kind: " + kind);
        }
    }
    return cert;
}

}  // namespace nsalg
