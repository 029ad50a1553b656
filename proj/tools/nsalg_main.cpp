#include <CLI11.hpp>

#include <iostream>

#include "nsalg/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact ideal-structure toolkit for tensor products of nearly simple algebras"};
    app.require_subcommand(1);

    nsalg::JobSpec job;
    std::string left, right, desc_a, desc_b, tensor, certificate, out_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", job.seed, "random seed echoed into the report");
        cmd->add_option("--truncation", job.truncation, "truncation dimension echoed into the report");
        cmd->add_option("--degree-bound", job.degree_bound, "factorization degree bound");
        cmd->add_option("--out", out_path, "write the machine report (JSON) here");
    };
    auto add_descs = [&](CLI::App* cmd) {
        cmd->add_option("--desc-a", desc_a, "descriptor of the left algebra (JSON)")->required();
        cmd->add_option("--desc-b", desc_b, "descriptor of the right algebra (JSON)")->required();
    };

    CLI::App* fields = app.add_subcommand("fields", "analyze a tensor product of two number fields");
    fields->add_option("--left", left, "left number field (JSON)")->required();
    fields->add_option("--right", right, "right number field (JSON)")->required();
    add_common(fields);

    CLI::App* check = app.add_subcommand("check", "decide admissibility of a descriptor pair");
    add_descs(check);
    add_common(check);

    CLI::App* classify = app.add_subcommand("classify", "classify the ideal generated by a tensor");
    classify->add_option("--tensor", tensor, "tensor element (JSON)")->required();
    add_descs(classify);
    add_common(classify);

    CLI::App* witness = app.add_subcommand("witness", "construct a non-admissibility witness");
    add_descs(witness);
    add_common(witness);

    CLI::App* reduce = app.add_subcommand("reduce", "run the constructive rank reduction");
    reduce->add_option("--tensor", tensor, "tensor element (JSON)")->required();
    add_descs(reduce);
    add_common(reduce);

    CLI::App* replay = app.add_subcommand("replay", "replay and verify a reduction certificate");
    replay->add_option("--tensor", tensor, "tensor element (JSON)")->required();
    replay->add_option("--certificate", certificate, "certificate (JSON)")->required();
    add_descs(replay);
    add_common(replay);

    CLI::App* selftest = app.add_subcommand("selftest", "run the bundled descriptor corpus");
    selftest->add_option("--corpus", job.corpus_dir, "corpus directory (default: corpus)");
    add_common(selftest);

    CLI11_PARSE(app, argc, argv);

    job.command = app.get_subcommands().front()->get_name();
    if (!left.empty()) job.left_field_path = left;
    if (!right.empty()) job.right_field_path = right;
    if (!desc_a.empty()) job.desc_a_path = desc_a;
    if (!desc_b.empty()) job.desc_b_path = desc_b;
    if (!tensor.empty()) job.tensor_path = tensor;
    if (!certificate.empty()) job.certificate_path = certificate;
    if (!out_path.empty()) job.out_path = out_path;

    return nsalg::run_job(job, std::cout, std::cerr);
}
