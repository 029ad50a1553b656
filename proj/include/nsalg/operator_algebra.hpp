#ifndef NSALG_OPERATOR_ALGEBRA_HPP
#define NSALG_OPERATOR_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nsalg/number_field.hpp"

namespace nsalg {

// Concrete nearly simple algebra A = K_s·1 + F(V): finitely supported
// matrices over the entry field K_e on a countable 1-based basis, plus a
// scalar field K_s embedded as block-diagonal copies of the companion matrix
// of its minimal polynomial (basis indices are grouped into consecutive
// blocks of length deg K_s).
//
// Derived data used throughout: the unique non-trivial ideal is F(V), the
// residue field A/I_A is K_s (the scalar part is exactly the image under the
// quotient map), and the extended centroid is K_e. The latter rests on the
// identification of the symmetric quotient algebra of A with the multiplier
// algebra of F(V), i.e. all K_e-linear operators on V, whose center is K_e
// acting by entry scaling. The construction assumes nothing about how K_s
// and K_e relate; only the companion-block embedding of K_s is modeled.
class NearlySimpleDescriptor {
public:
    static std::shared_ptr<const NearlySimpleDescriptor> make(FieldPtr scalar_field,
                                                              FieldPtr entry_field);

    const FieldPtr& scalar_field() const { return scalar_; }
    const FieldPtr& entry_field() const { return entry_; }
    int block_size() const { return block_; }
    bool is_universal() const { return scalar_->degree() == 1 && entry_->degree() == 1; }

    /// The block-local matrix of multiplication by s (the companion matrix of
    /// the minimal polynomial evaluated at s's power-basis coordinates).
    std::vector<std::vector<Rational>> embedding_matrix(const NFElement& s) const;

private:
    FieldPtr scalar_, entry_;
    int block_;
    std::vector<std::vector<std::vector<Rational>>> gen_powers_;  // C^0 .. C^(d-1)
    NearlySimpleDescriptor(FieldPtr s, FieldPtr e);
};

using DescriptorPtr = std::shared_ptr<const NearlySimpleDescriptor>;

inline bool same_descriptor(const DescriptorPtr& a, const DescriptorPtr& b) {
    return a == b || (same_field(a->scalar_field(), b->scalar_field()) &&
                      same_field(a->entry_field(), b->entry_field()));
}

enum class Side { Left, Right };

/// Finitely supported matrix over the entry field; stored entries are nonzero.
class FinOp {
public:
    using Index = std::uint32_t;
    using Support = std::map<std::pair<Index, Index>, NFElement>;

    FinOp() = default;

    static FinOp unit(const FieldPtr& entry_field, Index row, Index col);
    static FinOp scaled_unit(Index row, Index col, NFElement value);

    const Support& entries() const { return entries_; }
    bool is_zero_op() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }
    Index max_index() const;  // 0 when empty

    void add_entry(Index row, Index col, const NFElement& v);  // accumulates, drops zeros
    NFElement entry(Index row, Index col, const FieldPtr& entry_field) const;

    friend FinOp operator+(const FinOp& a, const FinOp& b);
    friend FinOp operator-(const FinOp& a, const FinOp& b);
    FinOp operator-() const;
    FinOp scaled(const NFElement& c) const;
    FinOp scaled_rational(const Rational& q) const;
    friend FinOp operator*(const FinOp& a, const FinOp& b);  // sparse matrix product

    friend bool operator==(const FinOp& a, const FinOp& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const FinOp& a, const FinOp& b) { return !(a == b); }

    std::string to_string() const;

private:
    Support entries_;
};

/// s·f or f·s through the block-diagonal companion embedding of K_s.
FinOp structured_scalar_action(const NFElement& s, const FinOp& f, Side side,
                               const DescriptorPtr& desc);

/// Element of A = K_s·1 ⊕ F(V). The scalar part is the image in A/I_A.
class AlgElement {
public:
    AlgElement(DescriptorPtr desc, NFElement scalar, FinOp fin);

    static AlgElement zero(const DescriptorPtr& d);
    static AlgElement one(const DescriptorPtr& d);
    static AlgElement from_scalar(const DescriptorPtr& d, NFElement s);
    static AlgElement from_fin(const DescriptorPtr& d, FinOp f);

    const DescriptorPtr& descriptor() const { return desc_; }
    const NFElement& scalar() const { return scalar_; }
    const FinOp& fin() const { return fin_; }

    bool is_zero_elem() const { return scalar_.is_zero_elem() && fin_.is_zero_op(); }
    bool in_ideal() const { return scalar_.is_zero_elem(); }
    bool is_one_elem() const { return scalar_.is_one_elem() && fin_.is_zero_op(); }

    friend AlgElement operator+(const AlgElement& a, const AlgElement& b);
    friend AlgElement operator-(const AlgElement& a, const AlgElement& b);
    AlgElement operator-() const;
    AlgElement scaled_rational(const Rational& q) const;
    friend bool operator==(const AlgElement& a, const AlgElement& b);
    friend bool operator!=(const AlgElement& a, const AlgElement& b) { return !(a == b); }

    std::string to_string() const;

private:
    DescriptorPtr desc_;
    NFElement scalar_;  // in K_s
    FinOp fin_;         // entries in K_e
};

AlgElement alg_mul(const AlgElement& x, const AlgElement& y);
AlgElement commutator(const AlgElement& x, const AlgElement& y);

/// Finite sum of two-sided multiplications x -> a·x·b.
struct ElementaryOperator {
    std::vector<std::pair<AlgElement, AlgElement>> terms;

    static ElementaryOperator identity(const DescriptorPtr& d);
    static ElementaryOperator zero() { return {}; }
    bool is_identity() const;
};

AlgElement apply_elementary(const ElementaryOperator& phi, const AlgElement& x,
                            const DescriptorPtr& desc);
ElementaryOperator compose(const ElementaryOperator& outer, const ElementaryOperator& inner);

/// An elementary operator mapping a (with a ∉ I_A) exactly to 1. The sandwich
/// corrections act through a basis block disjoint from the support of the
/// finite part. Throws std::domain_error when a ∈ I_A.
ElementaryOperator synth_unit_normalizer(const AlgElement& a, const DescriptorPtr& desc);

/// Flattens each op over the joint support; exact rank test over K_e.
bool entry_field_independent(const std::vector<FinOp>& us, const DescriptorPtr& desc);

struct FindX0Options {
    int max_tries = 2000;
    int window_blocks = 2;  // widening beyond the joint support, in blocks
};

/// Random sparse x0 ∈ F(V) with {[u_i, x0]} independent over K_e. The inputs
/// must be nonempty, inside the ideal, and K_e-independent. Reports seed and
/// window on exhaustion.
FinOp find_x0(const std::vector<AlgElement>& us, const DescriptorPtr& desc, std::uint64_t seed,
              const FindX0Options& opts = {});

/// theta_i with theta_i(u_j) = delta_ij * targets[i]: entry functionals dual
/// to the (independent) family us, realized as matrix-unit sandwiches.
std::vector<ElementaryOperator> synth_separating_operators(const std::vector<FinOp>& us,
                                                           const std::vector<AlgElement>& targets,
                                                           const DescriptorPtr& desc);

}  // namespace nsalg

#endif
