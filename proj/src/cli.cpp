#include "nsalg/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nsalg/serialization.hpp"

namespace nsalg {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json load_json(const std::string& path) { return Json::parse(read_file(path)); }

struct JobContext {
    const JobSpec& job;
    Json inputs = Json::object();

    Json load(const std::string& label, const std::string& path) {
        Json j = load_json(path);
        inputs[label] = Json{{"path", path}, {"fnv1a64", file_fnv1a(path)}};
        return j;
    }
};

Json envelope(const JobSpec& job, const Json& inputs, Json result) {
    return Json{{"command", job.command}, {"seed", job.seed},   {"truncation", job.truncation},
                {"degree_bound", job.degree_bound},             {"inputs", inputs},
                {"result", std::move(result)}};
}

void write_report(const JobSpec& job, const Json& report) {
    if (!job.out_path) return;
    std::ofstream out(*job.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + *job.out_path + "'");
    out << report.dump(2) << "\n";
}

std::pair<DescriptorPtr, DescriptorPtr> load_descriptors(JobContext& ctx) {
    if (!ctx.job.desc_a_path || !ctx.job.desc_b_path)
        throw std::runtime_error("this command needs --desc-a and --desc-b");
    return {descriptor_from_json(ctx.load("desc_a", *ctx.job.desc_a_path)),
            descriptor_from_json(ctx.load("desc_b", *ctx.job.desc_b_path))};
}

int run_fields(JobContext& ctx, std::ostream& out) {
    const JobSpec& job = ctx.job;
    if (!job.left_field_path || !job.right_field_path)
        throw std::runtime_error("fields needs --left and --right");
    FieldPtr K = field_from_json(ctx.load("left", *job.left_field_path));
    FieldPtr L = field_from_json(ctx.load("right", *job.right_field_path));
    RingPtr ring = build_tensor_ring(K, L, job.degree_bound);
    Json rep = field_tensor_report(*ring);
    out << K->name() << " (x) " << L->name() << ": "
        << (rep["is_field"].get<bool>() ? "a field" : "not a field") << ", "
        << ring->factors().size() << " component(s)\n";
    write_report(job, envelope(job, ctx.inputs, rep));
    return kExitOk;
}

int run_check(JobContext& ctx, std::ostream& out) {
    auto [da, db] = load_descriptors(ctx);
    AdmissibilityVerdict v = check_admissibility(da, db, ctx.job.degree_bound);
    ExtremalReport ex = check_extremal_ideals(da, db, ctx.job.degree_bound);
    for (const auto& r : v.products)
        out << to_string(r.slot) << " = " << r.left_name << " (x) " << r.right_name << ": "
            << (r.field ? "field" : "NOT a field") << "\n";
    out << (v.all_admissible ? "all ideals of A (x) B are admissible\n"
                             : "A (x) B has a non-admissible ideal\n");
    Json result{{"verdict", verdict_to_json(v)},
                {"extremal", extremal_to_json(ex)},
                {"universal_a", check_universal(da)},
                {"universal_b", check_universal(db)}};
    write_report(ctx.job, envelope(ctx.job, ctx.inputs, result));
    return kExitOk;
}

int run_classify(JobContext& ctx, std::ostream& out) {
    auto [da, db] = load_descriptors(ctx);
    if (!ctx.job.tensor_path) throw std::runtime_error("classify needs --tensor");
    TensorElement t = tensor_from_json(ctx.load("tensor", *ctx.job.tensor_path), da, db);
    AdmissibilityVerdict v = check_admissibility(da, db, ctx.job.degree_bound);
    Classification c = classify_ideal_of(t, v);
    out << "ideal generated by the tensor: " << to_string(c.tag)
        << (c.lower_bound_only ? " (lower bound: pair is not admissible)" : "") << "\n";
    Json result{{"classification", classification_to_json(c)},
                {"tensor_rank", t.rank()},
                {"verdict", verdict_to_json(v)}};
    write_report(ctx.job, envelope(ctx.job, ctx.inputs, result));
    return kExitOk;
}

int run_witness(JobContext& ctx, std::ostream& out) {
    auto [da, db] = load_descriptors(ctx);
    AdmissibilityVerdict v = check_admissibility(da, db, ctx.job.degree_bound);
    // throws domain_error when the pair is admissible
    WitnessRecord w = construct_witness(da, db, v, ctx.job.degree_bound);
    out << "failing product: " << to_string(w.failing) << "\n"
        << "witness space:   " << to_string(w.space) << "\n"
        << "g1 = " << w.g1.to_string() << "\n"
        << "g2 = " << w.g2.to_string() << "\n"
        << "g1*g2 = 0: yes\n";
    Json result{{"verdict", verdict_to_json(v)}, {"witness", witness_to_json(w)}};
    write_report(ctx.job, envelope(ctx.job, ctx.inputs, result));
    return kExitOk;
}

int run_reduce(JobContext& ctx, std::ostream& out) {
    auto [da, db] = load_descriptors(ctx);
    if (!ctx.job.tensor_path) throw std::runtime_error("reduce needs --tensor");
    TensorElement t = tensor_from_json(ctx.load("tensor", *ctx.job.tensor_path), da, db);
    ReductionCertificate cert = rank_reduction(t, ctx.job.seed);
    bool ok = verify_certificate(t, cert);
    out << "certificate with " << cert.steps.size() << " step(s); claim rank " << cert.claim.rank()
        << "; replay " << (ok ? "verified" : "FAILED") << "\n";
    Json result{{"certificate", certificate_to_json(cert)}, {"replay_ok", ok}};
    write_report(ctx.job, envelope(ctx.job, ctx.inputs, result));
    return ok ? kExitOk : kExitDomain;
}

int run_replay(JobContext& ctx, std::ostream& out) {
    auto [da, db] = load_descriptors(ctx);
    if (!ctx.job.tensor_path || !ctx.job.certificate_path)
        throw std::runtime_error("replay needs --tensor and --certificate");
    TensorElement t = tensor_from_json(ctx.load("tensor", *ctx.job.tensor_path), da, db);
    ReductionCertificate cert =
        certificate_from_json(ctx.load("certificate", *ctx.job.certificate_path), da, db);
    TensorElement final_elem = replay_certificate(t, cert);  // throws CertificateError
    out << "certificate verified; final element equals the claim (rank " << final_elem.rank()
        << ")\n";
    Json result{{"valid", true}, {"final", tensor_to_json(final_elem)}};
    write_report(ctx.job, envelope(ctx.job, ctx.inputs, result));
    return kExitOk;
}

// --- selftest ---------------------------------------------------------------

struct SelfTestItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

DescriptorPtr load_descriptor_file(JobContext& ctx, const std::string& rel) {
    std::filesystem::path p = std::filesystem::path(ctx.job.corpus_dir) / rel;
    return descriptor_from_json(ctx.load(rel, p.string()));
}

int run_selftest(JobContext& ctx, std::ostream& out) {
    std::vector<SelfTestItem> items;
    auto check = [&](const std::string& name, bool cond, const std::string& detail) {
        items.push_back({name, cond, detail});
        out << (cond ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
    };

    DescriptorPtr univ = load_descriptor_file(ctx, "descriptors/universal.json");
    DescriptorPtr scalar_gauss = load_descriptor_file(ctx, "descriptors/scalar_gauss.json");
    DescriptorPtr entry_gauss = load_descriptor_file(ctx, "descriptors/entry_gauss.json");

    {  // scalar-extension pair: the scalar-scalar product splits
        AdmissibilityVerdict v = check_admissibility(scalar_gauss, scalar_gauss);
        const ProductReport& ss = v.report(ProductSlot::ScalarScalar);
        bool only_ss = !ss.field && v.report(ProductSlot::EntryScalar).field &&
                       v.report(ProductSlot::ScalarEntry).field &&
                       v.report(ProductSlot::EntryEntry).field;
        bool split2 = ss.num_components == 2 && ss.component_degrees == std::vector<int>{1, 1};
        ExtremalReport ex = check_extremal_ideals(scalar_gauss, scalar_gauss);
        WitnessRecord w = construct_witness(scalar_gauss, scalar_gauss, v);
        check("scalar_gauss_self_admissibility", only_ss,
              "exactly the scalar-scalar product fails");
        check("scalar_gauss_self_split", split2, "Q(i) (x) Q(i) splits into two degree-1 components");
        check("scalar_gauss_self_extremal", ex.smallest_ok && !ex.sum_maximal_ok,
              "smallest ideal intact, sum not maximal");
        check("scalar_gauss_self_witness",
              w.space == WitnessSpace::BothQuotient && (w.g1 * w.g2).is_zero_elem() &&
                  !w.g1.is_zero_elem() && !w.g2.is_zero_elem(),
              "double-quotient zero-product witness");
    }
    {  // entry-extension pair: the entry-entry product splits
        AdmissibilityVerdict v = check_admissibility(entry_gauss, entry_gauss);
        bool only_ee = !v.report(ProductSlot::EntryEntry).field &&
                       v.report(ProductSlot::ScalarScalar).field &&
                       v.report(ProductSlot::EntryScalar).field &&
                       v.report(ProductSlot::ScalarEntry).field;
        ExtremalReport ex = check_extremal_ideals(entry_gauss, entry_gauss);
        WitnessRecord w = construct_witness(entry_gauss, entry_gauss, v);
        check("entry_gauss_self_admissibility", only_ee, "exactly the entry-entry product fails");
        check("entry_gauss_self_extremal", !ex.smallest_ok && ex.sum_maximal_ok,
              "smallest ideal lost, sum still maximal");
        check("entry_gauss_self_witness",
              w.space == WitnessSpace::Full && (w.g1 * w.g2).is_zero_elem() &&
                  !w.g1.is_zero_elem() && !w.g2.is_zero_elem(),
              "full-space zero-product witness certifies non-primality");
    }
    {  // mixed pair and its swap
        AdmissibilityVerdict v = check_admissibility(scalar_gauss, entry_gauss);
        bool only_se = !v.report(ProductSlot::ScalarEntry).field &&
                       v.report(ProductSlot::ScalarScalar).field &&
                       v.report(ProductSlot::EntryScalar).field &&
                       v.report(ProductSlot::EntryEntry).field;
        AdmissibilityVerdict vs = check_admissibility(entry_gauss, scalar_gauss);
        bool only_es = !vs.report(ProductSlot::EntryScalar).field &&
                       vs.report(ProductSlot::ScalarScalar).field &&
                       vs.report(ProductSlot::ScalarEntry).field &&
                       vs.report(ProductSlot::EntryEntry).field;
        WitnessRecord w = construct_witness(scalar_gauss, entry_gauss, v);
        check("mixed_pair_admissibility", only_se, "exactly the scalar-entry product fails");
        check("mixed_pair_swapped", only_es, "swapping factors mirrors the failing slot");
        check("mixed_pair_witness",
              w.space == WitnessSpace::LeftQuotient && (w.g1 * w.g2).is_zero_elem(),
              "left-quotient zero-product witness");
    }
    {  // universal pair: admissibility, classification battery, reduction roundtrip
        AdmissibilityVerdict v = check_admissibility(univ, univ);
        check("universal_admissible", v.all_admissible && check_universal(univ),
              "rational fields on both slots are universally admissible");
        const FieldPtr& ke = univ->entry_field();
        AlgElement one = AlgElement::one(univ);
        AlgElement e11 = AlgElement::from_fin(univ, FinOp::unit(ke, 1, 1));
        auto tag_of = [&](const TensorElement& t) { return classify_ideal_of(t, v).tag; };
        bool battery =
            tag_of(TensorElement::elementary(one, one)) == AdmissibleTag::Full &&
            tag_of(TensorElement::elementary(e11, e11)) == AdmissibleTag::IaIb &&
            tag_of(TensorElement::elementary(one, e11)) == AdmissibleTag::AIb &&
            tag_of(TensorElement::elementary(e11, one)) == AdmissibleTag::IaB &&
            tag_of(TensorElement::elementary(one, e11) + TensorElement::elementary(e11, one)) ==
                AdmissibleTag::Sum &&
            tag_of(TensorElement(univ, univ)) == AdmissibleTag::Zero;
        check("universal_classification", battery, "all six ideal tags reproduced");
        AlgElement b1 = AlgElement::from_fin(univ, FinOp::unit(ke, 1, 2));
        AlgElement b2 = AlgElement::from_fin(univ, FinOp::unit(ke, 2, 2));
        TensorElement t = TensorElement::elementary(one, b1) + TensorElement::elementary(e11, b2);
        ReductionCertificate cert = rank_reduction(t, ctx.job.seed);
        bool reduce_ok = verify_certificate(t, cert) &&
                         quotient_image(cert.claim, QuotientKind::LeftOnly).rank() == 1;
        check("universal_reduction", reduce_ok, "reduction certificate replays to its claim");
    }

    bool all = true;
    Json jitems = Json::array();
    for (const auto& it : items) {
        all = all && it.pass;
        jitems.push_back(Json{{"name", it.name}, {"pass", it.pass}, {"detail", it.detail}});
    }
    out << (all ? "selftest: all items pass\n" : "selftest: FAILURES present\n");
    Json result{{"items", jitems}, {"all_pass", all}};
    write_report(ctx.job, envelope(ctx.job, ctx.inputs, result));
    return all ? kExitOk : kExitDomain;
}

}  // namespace

std::string file_fnv1a(const std::string& path) {
    std::string data = read_file(path);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

int run_job(const JobSpec& job, std::ostream& out, std::ostream& err) {
    JobContext ctx{job};
    try {
        if (job.command == "fields") return run_fields(ctx, out);
        if (job.command == "check") return run_check(ctx, out);
        if (job.command == "classify") return run_classify(ctx, out);
        if (job.command == "witness") return run_witness(ctx, out);
        if (job.command == "reduce") return run_reduce(ctx, out);
        if (job.command == "replay") return run_replay(ctx, out);
        if (job.command == "selftest") return run_selftest(ctx, out);
        err << "unknown command: " << job.command << "\n";
        return kExitParse;
    } catch (const CertificateError& e) {
        err << "certificate error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const Json::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
}

}  // namespace nsalg
