#ifndef NSALG_IDEAL_ENGINE_HPP
#define NSALG_IDEAL_ENGINE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nsalg/field_tensor.hpp"
#include "nsalg/tensor_space.hpp"

namespace nsalg {

/// The admissible ideals of A ⊗ B, ordered by containment
/// (Zero < IaIb < {IaB, AIb} < Sum < Full; IaB and AIb are incomparable).
enum class AdmissibleTag { Zero, IaIb, IaB, AIb, Sum, Full };

std::string to_string(AdmissibleTag tag);
bool tag_contained_in(AdmissibleTag a, AdmissibleTag b);

/// The four tensor products whose field-ness decides admissibility:
/// Z(A/I_A)⊗Z(B/I_B), C(A)⊗Z(B/I_B), Z(A/I_A)⊗C(B), C(A)⊗C(B).
enum class ProductSlot { ScalarScalar, EntryScalar, ScalarEntry, EntryEntry };

std::string to_string(ProductSlot slot);

struct ProductReport {
    ProductSlot slot;
    std::string left_name, right_name;
    bool field = false;
    std::size_t num_components = 0;
    std::vector<int> component_degrees;
};

struct AdmissibilityVerdict {
    bool all_admissible = false;
    std::array<ProductReport, 4> products;

    const ProductReport& report(ProductSlot s) const {
        return products[static_cast<std::size_t>(s)];
    }
    std::optional<ProductSlot> first_failing() const;
};

AdmissibilityVerdict check_admissibility(const DescriptorPtr& desc_a, const DescriptorPtr& desc_b,
                                         int degree_bound = 8);

/// True exactly when both fields of the descriptor are Q: such an algebra has
/// admissible tensor products against every partner.
bool check_universal(const DescriptorPtr& desc);

struct ExtremalReport {
    bool smallest_ok = false;     // I_A⊗I_B is the smallest nonzero ideal
    bool sum_maximal_ok = false;  // I_A⊗B + A⊗I_B is maximal
};

ExtremalReport check_extremal_ideals(const DescriptorPtr& desc_a, const DescriptorPtr& desc_b,
                                     int degree_bound = 8);

struct Classification {
    AdmissibleTag tag = AdmissibleTag::Zero;
    /// Set when the descriptor pair is not admissible: the tag is then only a
    /// lower bound for the generated ideal.
    bool lower_bound_only = false;
};

Classification classify_ideal_of(const TensorElement& t, const AdmissibilityVerdict& verdict);
Classification classify_ideal_of(const TensorElement& t);

/// Which space a non-admissibility witness lives in. The failing tensor
/// product acts centrally there, so the two generated ideals multiply to zero.
enum class WitnessSpace { Full, LeftQuotient, RightQuotient, BothQuotient };

std::string to_string(WitnessSpace s);

struct WitnessRecord {
    ProductSlot failing;
    WitnessSpace space;
    TensorElement g1, g2;  // quotient-side factors carry a zero finite part
};

/// Builds two nonzero ideals with zero product from the zero-divisor pair of
/// the first failing tensor product. Throws std::domain_error when the pair is
/// admissible.
WitnessRecord construct_witness(const DescriptorPtr& desc_a, const DescriptorPtr& desc_b,
                                const AdmissibilityVerdict& verdict, int degree_bound = 8);

// --- constructive rank reduction -------------------------------------------

struct StepApplyElementary {
    ElementaryOperator phi;  // on A
    ElementaryOperator psi;  // on B
    std::size_t src = 0;
};
struct StepCommutate {
    FinOp x0;  // commutation with x0 ⊗ 1_B
    std::size_t src = 0;
};
struct StepSeparate {
    ElementaryOperator theta;  // on A, tensored with the identity on B
    std::size_t src = 0;
};
struct StepCombine {
    std::vector<std::pair<Rational, std::size_t>> terms;
};

using ReductionStep = std::variant<StepApplyElementary, StepCommutate, StepSeparate, StepCombine>;

/// Replayable trace of ideal-stable operations ending in an elementary tensor
/// 1_A ⊗ b inside the ideal generated by the input. Steps reference a pool of
/// intermediate elements; index 0 is the input tensor.
struct ReductionCertificate {
    std::vector<ReductionStep> steps;
    TensorElement claim;
};

struct RankReductionOptions {
    int max_tries = 2000;
    int max_window_rounds = 4;  // window widens by 2 blocks per round
};

/// Runs the constructive reduction on a tensor whose left-quotient image is a
/// nonzero elementary tensor. Requires the entry field of A to be Q. Throws
/// std::domain_error when the hypothesis fails and std::runtime_error when the
/// randomized commutator search is exhausted.
ReductionCertificate rank_reduction(const TensorElement& t, std::uint64_t seed,
                                    const RankReductionOptions& opts = {});

struct CertificateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Applies the recorded steps to t and returns the final element; throws
/// CertificateError when the result differs from the certificate's claim or a
/// step is malformed.
TensorElement replay_certificate(const TensorElement& t, const ReductionCertificate& cert);

bool verify_certificate(const TensorElement& t, const ReductionCertificate& cert);

}  // namespace nsalg

#endif
