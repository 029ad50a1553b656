#ifndef NSALG_TENSOR_SPACE_HPP
#define NSALG_TENSOR_SPACE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "nsalg/operator_algebra.hpp"

namespace nsalg {

// Elements of A ⊗ B as finite pair lists, kept rank-normalized: both factor
// families are Q-independent after every operation, so the list length is the
// tensor rank. Equality is decided by reducing the difference.
class TensorElement {
public:
    using Pair = std::pair<AlgElement, AlgElement>;

    TensorElement(DescriptorPtr desc_a, DescriptorPtr desc_b);  // zero tensor
    static TensorElement from_pairs(DescriptorPtr desc_a, DescriptorPtr desc_b,
                                    std::vector<Pair> pairs);
    static TensorElement elementary(const AlgElement& a, const AlgElement& b);

    const DescriptorPtr& desc_a() const { return desc_a_; }
    const DescriptorPtr& desc_b() const { return desc_b_; }
    const std::vector<Pair>& pairs() const { return pairs_; }
    std::size_t rank() const { return pairs_.size(); }
    bool is_zero_elem() const { return pairs_.empty(); }

    friend TensorElement operator+(const TensorElement& s, const TensorElement& t);
    friend TensorElement operator-(const TensorElement& s, const TensorElement& t);
    TensorElement operator-() const;
    TensorElement scaled_rational(const Rational& q) const;
    /// Product in A ⊗ B (pairwise products, renormalized).
    friend TensorElement operator*(const TensorElement& s, const TensorElement& t);
    friend bool operator==(const TensorElement& s, const TensorElement& t);
    friend bool operator!=(const TensorElement& s, const TensorElement& t) { return !(s == t); }

    std::string to_string() const;

private:
    DescriptorPtr desc_a_, desc_b_;
    std::vector<Pair> pairs_;
    struct raw_tag {};
    TensorElement(DescriptorPtr a, DescriptorPtr b, std::vector<Pair> pairs, raw_tag);
    friend TensorElement reduce_rank_impl(DescriptorPtr, DescriptorPtr, std::vector<Pair>);
    friend std::pair<std::size_t, TensorElement> decompose_mod_subspace(const TensorElement&, Side);
};

/// Canonical minimal-length representative (Gaussian elimination with
/// first-seen pivoting, left factors first, then right).
TensorElement reduce_rank(const TensorElement& t);

/// Rewrites t so that the first k chosen-side factors are independent over
/// the ideal (Q-independent scalar parts) and the remaining factors lie inside
/// it. Throws std::domain_error when every chosen-side factor is in the ideal.
std::pair<std::size_t, TensorElement> decompose_mod_subspace(const TensorElement& t, Side side);

enum class QuotientKind { LeftOnly, RightOnly, Both };

/// Image under q_{I_A} ⊗ id, id ⊗ q_{I_B}, or q_{I_A} ⊗ q_{I_B}:
/// the quotiented side collapses to its scalar part, then the pair list is
/// rank-normalized in the quotient space.
struct QuotientImage {
    QuotientKind which;
    std::vector<std::pair<NFElement, AlgElement>> left_quotient;
    std::vector<std::pair<AlgElement, NFElement>> right_quotient;
    std::vector<std::pair<NFElement, NFElement>> both_quotient;

    std::size_t rank() const;
    bool is_zero_elem() const { return rank() == 0; }
};

QuotientImage quotient_image(const TensorElement& t, QuotientKind which);

enum class IdealSpace { IaIb, IaB, AIb, Sum };

/// Membership in I_A⊗I_B, I_A⊗B, A⊗I_B, or I_A⊗B + A⊗I_B. The one-sided
/// memberships read the scalar parts of the normalized representation; the
/// sum is the kernel of the double quotient.
bool membership(const TensorElement& t, IdealSpace space);

/// (φ ⊗ ψ)(t) with φ, ψ elementary operators on the two legs.
TensorElement apply_tensor_operator(const ElementaryOperator& phi, const ElementaryOperator& psi,
                                    const TensorElement& t);

}  // namespace nsalg

#endif
