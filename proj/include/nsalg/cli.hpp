#ifndef NSALG_CLI_HPP
#define NSALG_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nsalg {

// Batch job description for the command line front end. Seed and bounds are
// echoed into every report so runs can be reproduced bit for bit.
struct JobSpec {
    std::string command;  // fields | check | classify | witness | reduce | replay | selftest
    std::optional<std::string> left_field_path;   // fields
    std::optional<std::string> right_field_path;  // fields
    std::optional<std::string> desc_a_path;
    std::optional<std::string> desc_b_path;
    std::optional<std::string> tensor_path;
    std::optional<std::string> certificate_path;  // replay
    std::string corpus_dir = "corpus";            // selftest
    std::uint64_t seed = 0;
    unsigned truncation = 4;
    int degree_bound = 8;
    std::optional<std::string> out_path;
};

// exit codes: 0 success, 1 domain error, 2 I/O or parse error
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitParse = 2;

/// Runs a job: human summary to `out`, machine report (JSON) to
/// job.out_path when set. Returns the exit code.
int run_job(const JobSpec& job, std::ostream& out, std::ostream& err);

/// FNV-1a hash of a file's bytes, as a 16-digit hex string.
std::string file_fnv1a(const std::string& path);

}  // namespace nsalg

#endif
