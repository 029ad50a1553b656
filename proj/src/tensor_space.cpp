#include "nsalg/tensor_space.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nsalg/linalg.hpp"

namespace nsalg {

namespace {

// Coordinatization of an algebra element over Q: scalar coordinates followed
// by the entry-field coordinates of each slot of a fixed joint support.
struct AlgSide {
    DescriptorPtr desc;
    std::vector<std::pair<FinOp::Index, FinOp::Index>> support;

    template <class Get, class PairVec>
    void build(const PairVec& pairs, Get get) {
        std::set<std::pair<FinOp::Index, FinOp::Index>> s;
        for (const auto& p : pairs)
            for (const auto& [rc, v] : get(p).fin().entries()) s.insert(rc);
        support.assign(s.begin(), s.end());
    }

    std::vector<Rational> coords(const AlgElement& x) const {
        std::vector<Rational> c;
        const std::size_t ds = static_cast<std::size_t>(desc->scalar_field()->degree());
        const std::size_t de = static_cast<std::size_t>(desc->entry_field()->degree());
        c.reserve(ds + support.size() * de);
        for (const auto& q : x.scalar().coords()) c.push_back(q);
        for (const auto& rc : support) {
            NFElement e = x.fin().entry(rc.first, rc.second, desc->entry_field());
            for (const auto& q : e.coords()) c.push_back(q);
        }
        return c;
    }

    static bool zero(const AlgElement& x) { return x.is_zero_elem(); }
    static void axpy(AlgElement& x, const Rational& c, const AlgElement& y) {
        x = x + y.scaled_rational(c);
    }
};

struct ScalarSide {
    FieldPtr field;

    template <class Get, class PairVec>
    void build(const PairVec&, Get) {}

    std::vector<Rational> coords(const NFElement& x) const { return x.coords(); }
    static bool zero(const NFElement& x) { return x.is_zero_elem(); }
    static void axpy(NFElement& x, const Rational& c, const NFElement& y) {
        x = x + y.scaled(c);
    }
};

// Two-pass bilinear reduction: eliminate on the left factors folding right
// factors into the pivots, then symmetrically on the right. First-seen
// pivoting keeps the result deterministic in the input order.
template <class L, class R, class LS, class RS>
std::vector<std::pair<L, R>> bilinear_reduce(std::vector<std::pair<L, R>> pairs, LS lside, RS rside) {
    auto drop_zero = [&](std::vector<std::pair<L, R>>& ps) {
        std::vector<std::pair<L, R>> out;
        out.reserve(ps.size());
        for (auto& p : ps)
            if (!LS::zero(p.first) && !RS::zero(p.second)) out.push_back(std::move(p));
        ps = std::move(out);
    };
    drop_zero(pairs);
    if (pairs.empty()) return pairs;

    {  // left pass
        lside.build(pairs, [](const std::pair<L, R>& p) -> const L& { return p.first; });
        RowReducer<Rational> red;
        std::vector<char> keep(pairs.size(), 1);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            auto ins = red.insert(lside.coords(pairs[i].first), i);
            if (!ins.independent) {
                keep[i] = 0;
                for (const auto& [j, c] : ins.combination) RS::axpy(pairs[j].second, c, pairs[i].second);
            }
        }
        std::vector<std::pair<L, R>> out;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (keep[i]) out.push_back(std::move(pairs[i]));
        pairs = std::move(out);
        drop_zero(pairs);
    }
    if (pairs.empty()) return pairs;

    {  // right pass
        rside.build(pairs, [](const std::pair<L, R>& p) -> const R& { return p.second; });
        RowReducer<Rational> red;
        std::vector<char> keep(pairs.size(), 1);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            auto ins = red.insert(rside.coords(pairs[i].second), i);
            if (!ins.independent) {
                keep[i] = 0;
                for (const auto& [j, c] : ins.combination) LS::axpy(pairs[j].first, c, pairs[i].first);
            }
        }
        std::vector<std::pair<L, R>> out;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (keep[i]) out.push_back(std::move(pairs[i]));
        pairs = std::move(out);
        drop_zero(pairs);
    }
    return pairs;
}

}  // namespace

TensorElement reduce_rank_impl(DescriptorPtr da, DescriptorPtr db,
                               std::vector<TensorElement::Pair> pairs) {
    pairs = bilinear_reduce(std::move(pairs), AlgSide{da, {}}, AlgSide{db, {}});
    return TensorElement(std::move(da), std::move(db), std::move(pairs), TensorElement::raw_tag{});
}

TensorElement::TensorElement(DescriptorPtr desc_a, DescriptorPtr desc_b)
    : desc_a_(std::move(desc_a)), desc_b_(std::move(desc_b)) {}

TensorElement::TensorElement(DescriptorPtr a, DescriptorPtr b, std::vector<Pair> pairs, raw_tag)
    : desc_a_(std::move(a)), desc_b_(std::move(b)), pairs_(std::move(pairs)) {}

TensorElement TensorElement::from_pairs(DescriptorPtr desc_a, DescriptorPtr desc_b,
                                        std::vector<Pair> pairs) {
    for (const auto& [a, b] : pairs) {
        if (!same_descriptor(a.descriptor(), desc_a) || !same_descriptor(b.descriptor(), desc_b))
            throw std::domain_error("tensor pair from the wrong algebra");
    }
    return reduce_rank_impl(std::move(desc_a), std::move(desc_b), std::move(pairs));
}

TensorElement TensorElement::elementary(const AlgElement& a, const AlgElement& b) {
    return from_pairs(a.descriptor(), b.descriptor(), {{a, b}});
}

TensorElement reduce_rank(const TensorElement& t) {
    return reduce_rank_impl(t.desc_a(), t.desc_b(), t.pairs());
}

static void require_same_space(const TensorElement& s, const TensorElement& t) {
    if (!same_descriptor(s.desc_a(), t.desc_a()) || !same_descriptor(s.desc_b(), t.desc_b()))
        throw std::domain_error("tensor space mismatch");
}

TensorElement operator+(const TensorElement& s, const TensorElement& t) {
    require_same_space(s, t);
    std::vector<TensorElement::Pair> pairs = s.pairs();
    pairs.insert(pairs.end(), t.pairs().begin(), t.pairs().end());
    return reduce_rank_impl(s.desc_a(), s.desc_b(), std::move(pairs));
}

TensorElement operator-(const TensorElement& s, const TensorElement& t) {
    return s + (-t);
}

TensorElement TensorElement::operator-() const {
    std::vector<Pair> pairs = pairs_;
    for (auto& [a, b] : pairs) a = -a;
    return TensorElement(desc_a_, desc_b_, std::move(pairs), raw_tag{});
}

TensorElement TensorElement::scaled_rational(const Rational& q) const {
    if (sgn(q) == 0) return TensorElement(desc_a_, desc_b_);
    std::vector<Pair> pairs = pairs_;
    for (auto& [a, b] : pairs) a = a.scaled_rational(q);
    return TensorElement(desc_a_, desc_b_, std::move(pairs), raw_tag{});
}

TensorElement operator*(const TensorElement& s, const TensorElement& t) {
    require_same_space(s, t);
    std::vector<TensorElement::Pair> pairs;
    pairs.reserve(s.rank() * t.rank());
    for (const auto& [a, b] : s.pairs())
        for (const auto& [c, d] : t.pairs()) pairs.emplace_back(alg_mul(a, c), alg_mul(b, d));
    return reduce_rank_impl(s.desc_a(), s.desc_b(), std::move(pairs));
}

bool operator==(const TensorElement& s, const TensorElement& t) {
    return (s - t).is_zero_elem();
}

std::string TensorElement::to_string() const {
    if (pairs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, b] : pairs_) {
        if (!first) os << " + ";
        first = false;
        os << a.to_string() << " (x) " << b.to_string();
    }
    return os.str();
}

std::pair<std::size_t, TensorElement> decompose_mod_subspace(const TensorElement& t, Side side) {
    const auto& pairs = t.pairs();
    if (pairs.empty()) throw std::domain_error("decomposition of the zero tensor");

    // pivot selection on the scalar parts of the chosen side
    RowReducer<Rational> red;
    std::vector<std::size_t> head;
    std::vector<std::pair<std::size_t, std::vector<std::pair<std::size_t, Rational>>>> tail;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const NFElement& s = (side == Side::Left) ? pairs[i].first.scalar() : pairs[i].second.scalar();
        auto ins = red.insert(s.coords(), i);
        if (ins.independent)
            head.push_back(i);
        else
            tail.emplace_back(i, std::move(ins.combination));
    }
    if (head.empty())
        throw std::domain_error("every chosen-side factor lies inside the ideal");

    // head pairs absorb the dependent combinations; tail factors move into the ideal
    std::vector<TensorElement::Pair> out;
    out.reserve(pairs.size());
    for (std::size_t i : head) out.push_back(pairs[i]);
    std::vector<TensorElement::Pair> tail_pairs;
    for (const auto& [j, combo] : tail) {
        TensorElement::Pair moved = pairs[j];
        for (const auto& [orig, c] : combo) {
            // orig indexes the insertion order = pair index; find its head slot
            std::size_t slot = static_cast<std::size_t>(
                std::find(head.begin(), head.end(), orig) - head.begin());
            if (side == Side::Left) {
                out[slot].second = out[slot].second + pairs[j].second.scaled_rational(c);
                moved.first = moved.first - pairs[orig].first.scaled_rational(c);
            } else {
                out[slot].first = out[slot].first + pairs[j].first.scaled_rational(c);
                moved.second = moved.second - pairs[orig].second.scaled_rational(c);
            }
        }
        tail_pairs.push_back(std::move(moved));
    }
    const std::size_t k = head.size();
    out.insert(out.end(), tail_pairs.begin(), tail_pairs.end());
    return {k, reduce_rank_impl(t.desc_a(), t.desc_b(), std::move(out))};
}

std::size_t QuotientImage::rank() const {
    switch (which) {
        case QuotientKind::LeftOnly: return left_quotient.size();
        case QuotientKind::RightOnly: return right_quotient.size();
        case QuotientKind::Both: return both_quotient.size();
    }
    return 0;
}

QuotientImage quotient_image(const TensorElement& t, QuotientKind which) {
    QuotientImage img;
    img.which = which;
    const FieldPtr& ksa = t.desc_a()->scalar_field();
    const FieldPtr& ksb = t.desc_b()->scalar_field();
    switch (which) {
        case QuotientKind::LeftOnly: {
            std::vector<std::pair<NFElement, AlgElement>> pairs;
            for (const auto& [a, b] : t.pairs()) pairs.emplace_back(a.scalar(), b);
            img.left_quotient =
                bilinear_reduce(std::move(pairs), ScalarSide{ksa}, AlgSide{t.desc_b(), {}});
            break;
        }
        case QuotientKind::RightOnly: {
            std::vector<std::pair<AlgElement, NFElement>> pairs;
            for (const auto& [a, b] : t.pairs()) pairs.emplace_back(a, b.scalar());
            img.right_quotient =
                bilinear_reduce(std::move(pairs), AlgSide{t.desc_a(), {}}, ScalarSide{ksb});
            break;
        }
        case QuotientKind::Both: {
            std::vector<std::pair<NFElement, NFElement>> pairs;
            for (const auto& [a, b] : t.pairs()) pairs.emplace_back(a.scalar(), b.scalar());
            img.both_quotient = bilinear_reduce(std::move(pairs), ScalarSide{ksa}, ScalarSide{ksb});
            break;
        }
    }
    return img;
}

bool membership(const TensorElement& t, IdealSpace space) {
    auto left_in = [&]() {
        for (const auto& [a, b] : t.pairs())
            if (!a.in_ideal()) return false;
        return true;
    };
    auto right_in = [&]() {
        for (const auto& [a, b] : t.pairs())
            if (!b.in_ideal()) return false;
        return true;
    };
    switch (space) {
        case IdealSpace::IaB: return left_in();
        case IdealSpace::AIb: return right_in();
        case IdealSpace::IaIb: return left_in() && right_in();
        case IdealSpace::Sum: return quotient_image(t, QuotientKind::Both).is_zero_elem();
    }
    return false;
}

TensorElement apply_tensor_operator(const ElementaryOperator& phi, const ElementaryOperator& psi,
                                    const TensorElement& t) {
    std::vector<TensorElement::Pair> pairs;
    pairs.reserve(t.rank());
    for (const auto& [a, b] : t.pairs())
        pairs.emplace_back(apply_elementary(phi, a, t.desc_a()), apply_elementary(psi, b, t.desc_b()));
    return reduce_rank_impl(t.desc_a(), t.desc_b(), std::move(pairs));
}

}  // namespace nsalg
