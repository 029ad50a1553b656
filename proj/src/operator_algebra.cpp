#include "nsalg/operator_algebra.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nsalg/linalg.hpp"

namespace nsalg {

NearlySimpleDescriptor::NearlySimpleDescriptor(FieldPtr s, FieldPtr e)
    : scalar_(std::move(s)), entry_(std::move(e)), block_(scalar_->degree()) {
    const int d = block_;
    const PolyQ& m = scalar_->minpoly();
    // companion matrix C: column j is the coordinate vector of γ·γ^j
    std::vector<std::vector<Rational>> c(static_cast<std::size_t>(d),
                                         std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)));
    for (int j = 0; j + 1 < d; ++j) c[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(j)] = 1;
    for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(d - 1)] = -m[static_cast<std::size_t>(i)];
    // powers C^0 .. C^(d-1)
    std::vector<std::vector<Rational>> id(static_cast<std::size_t>(d),
                                          std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)));
    for (int i = 0; i < d; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    gen_powers_.push_back(id);
    for (int k = 1; k < d; ++k) {
        const auto& prev = gen_powers_.back();
        std::vector<std::vector<Rational>> next(static_cast<std::size_t>(d),
                                                std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k2 = 0; k2 < d; ++k2)
                    next[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                        c[static_cast<std::size_t>(i)][static_cast<std::size_t>(k2)] *
                        prev[static_cast<std::size_t>(k2)][static_cast<std::size_t>(j)];
        gen_powers_.push_back(std::move(next));
    }
}

DescriptorPtr NearlySimpleDescriptor::make(FieldPtr scalar_field, FieldPtr entry_field) {
    return DescriptorPtr(new NearlySimpleDescriptor(std::move(scalar_field), std::move(entry_field)));
}

std::vector<std::vector<Rational>> NearlySimpleDescriptor::embedding_matrix(const NFElement& s) const {
    if (!same_field(s.field(), scalar_)) throw std::domain_error("scalar from the wrong field");
    const int d = block_;
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(d),
                                         std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)));
    for (int k = 0; k < d; ++k) {
        const Rational& ck = s.coords()[static_cast<std::size_t>(k)];
        if (sgn(ck) == 0) continue;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    ck * gen_powers_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

FinOp FinOp::unit(const FieldPtr& entry_field, Index row, Index col) {
    return scaled_unit(row, col, NFElement::one(entry_field));
}

FinOp FinOp::scaled_unit(Index row, Index col, NFElement value) {
    FinOp f;
    if (row == 0 || col == 0) throw std::domain_error("basis indices are 1-based");
    if (!value.is_zero_elem()) f.entries_.emplace(std::make_pair(row, col), std::move(value));
    return f;
}

FinOp::Index FinOp::max_index() const {
    Index m = 0;
    for (const auto& [rc, v] : entries_) m = std::max({m, rc.first, rc.second});
    return m;
}

void FinOp::add_entry(Index row, Index col, const NFElement& v) {
    if (v.is_zero_elem()) return;
    auto key = std::make_pair(row, col);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, v);
    } else {
        it->second = it->second + v;
        if (it->second.is_zero_elem()) entries_.erase(it);
    }
}

NFElement FinOp::entry(Index row, Index col, const FieldPtr& entry_field) const {
    auto it = entries_.find(std::make_pair(row, col));
    return it == entries_.end() ? NFElement::zero(entry_field) : it->second;
}

FinOp operator+(const FinOp& a, const FinOp& b) {
    FinOp r = a;
    for (const auto& [rc, v] : b.entries_) r.add_entry(rc.first, rc.second, v);
    return r;
}

FinOp operator-(const FinOp& a, const FinOp& b) {
    FinOp r = a;
    for (const auto& [rc, v] : b.entries_) r.add_entry(rc.first, rc.second, -v);
    return r;
}

FinOp FinOp::operator-() const {
    FinOp r;
    for (const auto& [rc, v] : entries_) r.entries_.emplace(rc, -v);
    return r;
}

FinOp FinOp::scaled(const NFElement& c) const {
    FinOp r;
    if (c.is_zero_elem()) return r;
    for (const auto& [rc, v] : entries_) {
        NFElement w = v * c;
        if (!w.is_zero_elem()) r.entries_.emplace(rc, std::move(w));
    }
    return r;
}

FinOp FinOp::scaled_rational(const Rational& q) const {
    FinOp r;
    if (sgn(q) == 0) return r;
    for (const auto& [rc, v] : entries_) r.entries_.emplace(rc, v.scaled(q));
    return r;
}

FinOp operator*(const FinOp& a, const FinOp& b) {
    FinOp r;
    for (const auto& [rc, v] : a.entries_) {
        auto lo = b.entries_.lower_bound(std::make_pair(rc.second, FinOp::Index(0)));
        auto hi = b.entries_.upper_bound(
            std::make_pair(rc.second, std::numeric_limits<FinOp::Index>::max()));
        for (auto it = lo; it != hi; ++it) r.add_entry(rc.first, it->first.second, v * it->second);
    }
    return r;
}

std::string FinOp::to_string() const {
    if (entries_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [rc, v] : entries_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.to_string() << ")e[" << rc.first << "," << rc.second << "]";
    }
    return os.str();
}

FinOp structured_scalar_action(const NFElement& s, const FinOp& f, Side side,
                               const DescriptorPtr& desc) {
    const int d = desc->block_size();
    auto m = desc->embedding_matrix(s);
    FinOp out;
    for (const auto& [rc, v] : f.entries()) {
        if (side == Side::Left) {
            FinOp::Index i = rc.first;
            FinOp::Index block_start = ((i - 1) / static_cast<FinOp::Index>(d)) * static_cast<FinOp::Index>(d) + 1;
            int loc = static_cast<int>((i - 1) % static_cast<FinOp::Index>(d));
            for (int r = 0; r < d; ++r) {
                const Rational& c = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(loc)];
                if (sgn(c) == 0) continue;
                out.add_entry(block_start + static_cast<FinOp::Index>(r), rc.second, v.scaled(c));
            }
        } else {
            FinOp::Index j = rc.second;
            FinOp::Index block_start = ((j - 1) / static_cast<FinOp::Index>(d)) * static_cast<FinOp::Index>(d) + 1;
            int loc = static_cast<int>((j - 1) % static_cast<FinOp::Index>(d));
            for (int c2 = 0; c2 < d; ++c2) {
                const Rational& c = m[static_cast<std::size_t>(loc)][static_cast<std::size_t>(c2)];
                if (sgn(c) == 0) continue;
                out.add_entry(rc.first, block_start + static_cast<FinOp::Index>(c2), v.scaled(c));
            }
        }
    }
    return out;
}

AlgElement::AlgElement(DescriptorPtr desc, NFElement scalar, FinOp fin)
    : desc_(std::move(desc)), scalar_(std::move(scalar)), fin_(std::move(fin)) {
    if (!same_field(scalar_.field(), desc_->scalar_field()))
        throw std::domain_error("scalar part from the wrong field");
    for (const auto& [rc, v] : fin_.entries())
        if (!same_field(v.field(), desc_->entry_field()))
            throw std::domain_error("matrix entry from the wrong field");
}

AlgElement AlgElement::zero(const DescriptorPtr& d) {
    return AlgElement(d, NFElement::zero(d->scalar_field()), FinOp());
}

AlgElement AlgElement::one(const DescriptorPtr& d) {
    return AlgElement(d, NFElement::one(d->scalar_field()), FinOp());
}

AlgElement AlgElement::from_scalar(const DescriptorPtr& d, NFElement s) {
    return AlgElement(d, std::move(s), FinOp());
}

AlgElement AlgElement::from_fin(const DescriptorPtr& d, FinOp f) {
    return AlgElement(d, NFElement::zero(d->scalar_field()), std::move(f));
}

AlgElement operator+(const AlgElement& a, const AlgElement& b) {
    return AlgElement(a.desc_, a.scalar_ + b.scalar_, a.fin_ + b.fin_);
}

AlgElement operator-(const AlgElement& a, const AlgElement& b) {
    return AlgElement(a.desc_, a.scalar_ - b.scalar_, a.fin_ - b.fin_);
}

AlgElement AlgElement::operator-() const { return AlgElement(desc_, -scalar_, -fin_); }

AlgElement AlgElement::scaled_rational(const Rational& q) const {
    return AlgElement(desc_, scalar_.scaled(q), fin_.scaled_rational(q));
}

bool operator==(const AlgElement& a, const AlgElement& b) {
    return a.scalar_ == b.scalar_ && a.fin_ == b.fin_;
}

std::string AlgElement::to_string() const {
    std::ostringstream os;
    os << "(" << scalar_.to_string() << ", " << fin_.to_string() << ")";
    return os.str();
}

AlgElement alg_mul(const AlgElement& x, const AlgElement& y) {
    if (!same_descriptor(x.descriptor(), y.descriptor()))
        throw std::domain_error("descriptor mismatch in multiplication");
    const DescriptorPtr& d = x.descriptor();
    FinOp fin = structured_scalar_action(x.scalar(), y.fin(), Side::Left, d) +
                structured_scalar_action(y.scalar(), x.fin(), Side::Right, d) + x.fin() * y.fin();
    return AlgElement(d, x.scalar() * y.scalar(), std::move(fin));
}

AlgElement commutator(const AlgElement& x, const AlgElement& y) {
    return alg_mul(x, y) - alg_mul(y, x);
}

ElementaryOperator ElementaryOperator::identity(const DescriptorPtr& d) {
    return {{{AlgElement::one(d), AlgElement::one(d)}}};
}

bool ElementaryOperator::is_identity() const {
    return terms.size() == 1 && terms[0].first.is_one_elem() && terms[0].second.is_one_elem();
}

AlgElement apply_elementary(const ElementaryOperator& phi, const AlgElement& x,
                            const DescriptorPtr& desc) {
    AlgElement acc = AlgElement::zero(desc);
    for (const auto& [a, b] : phi.terms) acc = acc + alg_mul(alg_mul(a, x), b);
    return acc;
}

ElementaryOperator compose(const ElementaryOperator& outer, const ElementaryOperator& inner) {
    ElementaryOperator r;
    for (const auto& [c, d] : outer.terms)
        for (const auto& [a, b] : inner.terms)
            r.terms.emplace_back(alg_mul(c, a), alg_mul(b, d));
    return r;
}

ElementaryOperator synth_unit_normalizer(const AlgElement& a, const DescriptorPtr& desc) {
    if (a.in_ideal())
        throw std::domain_error("no elementary operator maps an ideal element to the identity");
    const NFElement k = a.scalar();
    if (a.fin().is_zero_op() && k.is_one_elem()) return ElementaryOperator::identity(desc);

    const NFElement kinv = k.inverse();
    ElementaryOperator phi;
    phi.terms.emplace_back(AlgElement::from_scalar(desc, kinv), AlgElement::one(desc));
    // leftover finite part after scaling: g = S(k^-1)·f
    FinOp g = structured_scalar_action(kinv, a.fin(), Side::Left, desc);
    if (g.is_zero_op()) return phi;

    const int d = desc->block_size();
    // first block strictly beyond the support of f
    FinOp::Index mx = a.fin().max_index();
    FinOp::Index block_start = ((mx - 1) / static_cast<FinOp::Index>(d) + 1) * static_cast<FinOp::Index>(d) + 1;
    // a nonzero rational entry of the local embedding matrix of k
    auto m = desc->embedding_matrix(k);
    int u = -1, v = -1;
    for (int i = 0; i < d && u < 0; ++i)
        for (int j = 0; j < d; ++j)
            if (sgn(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) != 0) {
                u = i;
                v = j;
                break;
            }
    const Rational c = m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    const FinOp::Index mu = block_start + static_cast<FinOp::Index>(u);
    const FinOp::Index mv = block_start + static_cast<FinOp::Index>(v);
    for (const auto& [rc, val] : g.entries()) {
        NFElement coeff = -(val.scaled(1 / c));
        phi.terms.emplace_back(
            AlgElement::from_fin(desc, FinOp::scaled_unit(rc.first, mu, std::move(coeff))),
            AlgElement::from_fin(desc, FinOp::unit(desc->entry_field(), mv, rc.second)));
    }
    return phi;
}

namespace {

// Sorted joint support and flattened coordinate rows over K_e.
std::vector<std::pair<FinOp::Index, FinOp::Index>> joint_support(const std::vector<FinOp>& us) {
    std::set<std::pair<FinOp::Index, FinOp::Index>> s;
    for (const FinOp& u : us)
        for (const auto& [rc, v] : u.entries()) s.insert(rc);
    return {s.begin(), s.end()};
}

std::vector<std::vector<NFElement>> flatten_rows(
    const std::vector<FinOp>& us, const std::vector<std::pair<FinOp::Index, FinOp::Index>>& supp,
    const FieldPtr& ke) {
    std::vector<std::vector<NFElement>> rows;
    rows.reserve(us.size());
    for (const FinOp& u : us) {
        std::vector<NFElement> row;
        row.reserve(supp.size());
        for (const auto& rc : supp) row.push_back(u.entry(rc.first, rc.second, ke));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

bool entry_field_independent(const std::vector<FinOp>& us, const DescriptorPtr& desc) {
    if (us.empty()) return true;
    auto supp = joint_support(us);
    if (supp.empty()) return false;
    auto rows = flatten_rows(us, supp, desc->entry_field());
    return matrix_rank(std::move(rows)) == us.size();
}

FinOp find_x0(const std::vector<AlgElement>& us, const DescriptorPtr& desc, std::uint64_t seed,
              const FindX0Options& opts) {
    if (us.empty()) throw std::domain_error("empty input family");
    std::vector<FinOp> fins;
    fins.reserve(us.size());
    for (const AlgElement& u : us) {
        if (!u.in_ideal()) throw std::domain_error("input family must lie inside the ideal");
        fins.push_back(u.fin());
    }
    if (!entry_field_independent(fins, desc))
        throw std::domain_error("input family is dependent over the entry field");

    const int d = desc->block_size();
    FinOp::Index mx = 0;
    for (const FinOp& f : fins) mx = std::max(mx, f.max_index());
    if (mx == 0) throw std::domain_error("input family is zero");
    FinOp::Index window =
        mx + static_cast<FinOp::Index>(opts.window_blocks * d);

    std::mt19937_64 gen(seed);
    auto rand_below = [&gen](std::uint64_t n) { return gen() % n; };
    const FieldPtr& ke = desc->entry_field();

    for (int attempt = 0; attempt < opts.max_tries; ++attempt) {
        FinOp x0;
        std::size_t nnz = 1 + rand_below(5);
        for (std::size_t e = 0; e < nnz; ++e) {
            FinOp::Index r = 1 + static_cast<FinOp::Index>(rand_below(window));
            FinOp::Index c = 1 + static_cast<FinOp::Index>(rand_below(window));
            long val = static_cast<long>(rand_below(7)) - 3;
            if (val == 0) val = 1;
            x0.add_entry(r, c, NFElement::from_rational(ke, Rational(val)));
        }
        if (x0.is_zero_op()) continue;
        std::vector<FinOp> comms;
        comms.reserve(fins.size());
        bool nonzero = true;
        for (const FinOp& u : fins) {
            FinOp c = u * x0 - x0 * u;
            if (c.is_zero_op()) {
                nonzero = false;
                break;
            }
            comms.push_back(std::move(c));
        }
        if (!nonzero) continue;
        if (entry_field_independent(comms, desc)) return x0;
    }
    throw std::runtime_error("commutator independence search exhausted (seed " +
                             std::to_string(seed) + ", window " + std::to_string(window) +
                             ", tries " + std::to_string(opts.max_tries) + ")");
}

std::vector<ElementaryOperator> synth_separating_operators(const std::vector<FinOp>& us,
                                                           const std::vector<AlgElement>& targets,
                                                           const DescriptorPtr& desc) {
    if (us.empty() || us.size() != targets.size())
        throw std::domain_error("family and target sizes differ");
    const FieldPtr& ke = desc->entry_field();
    auto supp = joint_support(us);
    if (supp.empty()) throw std::domain_error("zero family");
    auto rows = flatten_rows(us, supp, ke);
    DualSolver<NFElement> solver(std::move(rows));  // throws on dependence

    std::vector<ElementaryOperator> out;
    out.reserve(us.size());
    for (std::size_t i = 0; i < us.size(); ++i) {
        if (!targets[i].in_ideal())
            throw std::domain_error("separation targets must lie inside the ideal");
        ElementaryOperator theta;
        auto functional = solver.solve_unit(i);  // pairs (support slot, coefficient)
        for (const auto& [pq, gval] : targets[i].fin().entries()) {
            for (const auto& [slot, coeff] : functional) {
                const auto& rs = supp[slot];
                NFElement left_val = gval * coeff;
                theta.terms.emplace_back(
                    AlgElement::from_fin(desc, FinOp::scaled_unit(pq.first, rs.first, left_val)),
                    AlgElement::from_fin(desc, FinOp::unit(ke, rs.second, pq.second)));
            }
        }
        out.push_back(std::move(theta));
    }
    return out;
}

}  // namespace nsalg
