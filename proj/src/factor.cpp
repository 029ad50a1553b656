#include "nsalg/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

/*
 * Factorization over Q: square-free decomposition (Yun), then for each
 * square-free part the Zassenhaus route — reduce to a monic integer
 * polynomial, factor modulo a small prime (deterministic Berlekamp),
 * Hensel-lift the modular factors past the Landau-Mignotte bound, and
 * recombine subsets by exact trial division. Degrees are desk-scale, so the
 * exponential subset search is immaterial.
 *
 * Factorization over a number field K = Q(α): Trager's method. For a
 * square-free part g, pick a small integer shift s with square-free norm
 * N(g(x − sα)) ∈ Q[x], factor the norm over Q, and pull each factor back
 * with a gcd over K[x]. Norms are computed as resultants via evaluation and
 * Newton interpolation.
 */

namespace nsalg {

namespace {

// ---------------------------------------------------------------------------
// arithmetic mod a small prime
// ---------------------------------------------------------------------------

using ZpPoly = std::vector<std::int64_t>;  // lowest degree first, values in [0, p)

std::int64_t zp_inv(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return t < 0 ? t + p : t;
}

void zp_trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int zp_deg(const ZpPoly& a) { return static_cast<int>(a.size()) - 1; }

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    zp_trim(r);
    return r;
}

// divmod with monic-or-invertible divisor
std::pair<ZpPoly, ZpPoly> zp_divmod(ZpPoly a, const ZpPoly& b, std::int64_t p) {
    ZpPoly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, 0);
    std::int64_t inv = zp_inv(b.back(), p);
    while (zp_deg(a) >= zp_deg(b)) {
        std::int64_t c = a.back() * inv % p;
        std::size_t k = a.size() - b.size();
        q[k] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = ((a[k + j] - c * b[j]) % p + p) % p;
        zp_trim(a);
        if (a.empty()) break;
    }
    zp_trim(q);
    return {q, a};
}

ZpPoly zp_monic(ZpPoly a, std::int64_t p) {
    if (a.empty()) return a;
    std::int64_t inv = zp_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::int64_t p) {
    while (!b.empty()) {
        ZpPoly r = zp_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return zp_monic(a, p);
}

// extended gcd for coprime (a, b): s·a + t·b = 1
void zp_ext_gcd(const ZpPoly& a, const ZpPoly& b, ZpPoly& s, ZpPoly& t, std::int64_t p) {
    ZpPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        auto [q, r] = zp_divmod(r0, r1, p);
        auto step = [&](ZpPoly& x0, ZpPoly& x1) {
            ZpPoly qx = zp_mul(q, x1, p);
            ZpPoly nx = x0;
            if (nx.size() < qx.size()) nx.resize(qx.size(), 0);
            for (std::size_t i = 0; i < qx.size(); ++i) nx[i] = ((nx[i] - qx[i]) % p + p) % p;
            zp_trim(nx);
            x0 = std::move(x1);
            x1 = std::move(nx);
        };
        step(s0, s1);
        step(t0, t1);
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    if (zp_deg(r0) != 0) throw std::logic_error("zp_ext_gcd: inputs not coprime");
    std::int64_t inv = zp_inv(r0[0], p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    s = std::move(s0);
    t = std::move(t0);
}

ZpPoly zp_derivative(const ZpPoly& a, std::int64_t p) {
    ZpPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<std::int64_t>(i % p) % p);
    zp_trim(r);
    return r;
}

// Deterministic Berlekamp factorization of a monic square-free polynomial
// mod a small prime. Returns monic irreducible factors.
std::vector<ZpPoly> berlekamp(const ZpPoly& f, std::int64_t p) {
    const int n = zp_deg(f);
    if (n == 1) return {f};
    // Q matrix: column j = x^(p*j) mod f
    std::vector<ZpPoly> xp_pows(static_cast<std::size_t>(n));
    ZpPoly xp = {1};
    ZpPoly base(static_cast<std::size_t>(p) + 1, 0);  // x^p
    base[static_cast<std::size_t>(p)] = 1;
    base = zp_divmod(base, f, p).second;
    for (int j = 0; j < n; ++j) {
        xp_pows[static_cast<std::size_t>(j)] = xp;
        xp = zp_mul(xp, base, p);
        xp = zp_divmod(xp, f, p).second;
    }
    // kernel of (Q - I)^T over F_p: rows indexed by j, Q[i][j] = coeff i of x^(pj)
    std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(n),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    for (int j = 0; j < n; ++j) {
        const ZpPoly& col = xp_pows[static_cast<std::size_t>(j)];
        for (int i = 0; i < static_cast<int>(col.size()); ++i)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(i)];
        m[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] =
            ((m[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] - 1) % p + p) % p;
    }
    // nullspace by column reduction
    std::vector<int> pivot_row_of_col(static_cast<std::size_t>(n), -1);
    int rank = 0;
    std::vector<int> pivot_col(static_cast<std::size_t>(n), -1);
    for (int col = 0; col < n; ++col) {
        int pr = -1;
        for (int r = 0; r < n; ++r) {
            bool used = false;
            for (int c2 = 0; c2 < col; ++c2)
                if (pivot_row_of_col[static_cast<std::size_t>(c2)] == r) used = true;
            if (!used && m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        pivot_row_of_col[static_cast<std::size_t>(col)] = pr;
        pivot_col[static_cast<std::size_t>(rank)] = col;
        ++rank;
        std::int64_t inv = zp_inv(m[static_cast<std::size_t>(pr)][static_cast<std::size_t>(col)], p);
        for (int c2 = 0; c2 < n; ++c2)
            m[static_cast<std::size_t>(pr)][static_cast<std::size_t>(c2)] =
                m[static_cast<std::size_t>(pr)][static_cast<std::size_t>(c2)] * inv % p;
        for (int r = 0; r < n; ++r) {
            if (r == pr) continue;
            std::int64_t c = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (c == 0) continue;
            for (int c2 = 0; c2 < n; ++c2)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] =
                    ((m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] -
                      c * m[static_cast<std::size_t>(pr)][static_cast<std::size_t>(c2)]) %
                         p +
                     p) %
                    p;
        }
    }
    // basis vectors of the nullspace (one per free column)
    std::vector<ZpPoly> kernel;
    for (int col = 0; col < n; ++col) {
        if (pivot_row_of_col[static_cast<std::size_t>(col)] >= 0) continue;
        ZpPoly v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(col)] = 1;
        for (int c2 = 0; c2 < n; ++c2) {
            int pr = pivot_row_of_col[static_cast<std::size_t>(c2)];
            if (pr < 0) continue;
            v[static_cast<std::size_t>(c2)] =
                ((-m[static_cast<std::size_t>(pr)][static_cast<std::size_t>(col)]) % p + p) % p;
        }
        zp_trim(v);
        kernel.push_back(std::move(v));
    }
    const std::size_t r = kernel.size();  // nullspace dimension = number of irreducible factors
    std::vector<ZpPoly> factors = {f};
    for (const ZpPoly& v : kernel) {
        if (factors.size() >= r) break;
        for (std::size_t fi = 0; fi < factors.size() && factors.size() < r; ++fi) {
            if (zp_deg(factors[fi]) <= 1) continue;
            for (std::int64_t s = 0; s < p && factors.size() < r; ++s) {
                ZpPoly vs = v;
                if (vs.empty()) vs.push_back(0);
                vs[0] = ((vs[0] - s) % p + p) % p;
                zp_trim(vs);
                if (vs.empty()) continue;
                ZpPoly g = zp_gcd(factors[fi], vs, p);
                if (zp_deg(g) > 0 && zp_deg(g) < zp_deg(factors[fi])) {
                    ZpPoly rest = zp_divmod(factors[fi], g, p).first;
                    factors[fi] = std::move(g);
                    factors.push_back(std::move(rest));
                }
            }
        }
    }
    if (factors.size() != r) throw std::logic_error("berlekamp: incomplete split");
    return factors;
}

// ---------------------------------------------------------------------------
// integer polynomials and Hensel lifting
// ---------------------------------------------------------------------------

using ZPoly = std::vector<Int>;  // lowest degree first

void z_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int z_deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    z_trim(r);
    return r;
}

ZPoly z_sub(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    z_trim(a);
    return a;
}

void z_mod_sym(ZPoly& a, const Int& m) {
    Int half = m / 2;
    for (auto& c : a) {
        c %= m;  // gmp: sign follows dividend
        if (c > half) c -= m;
        if (c < -half) c += m;
    }
    z_trim(a);
}

void z_mod_pos(ZPoly& a, const Int& m) {
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
    }
    z_trim(a);
}

std::pair<ZPoly, ZPoly> z_divmod_monic_mod(ZPoly a, const ZPoly& b, const Int& m) {
    z_mod_pos(a, m);
    ZPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Int(0));
    while (z_deg(a) >= z_deg(b)) {
        Int c = a.back();
        std::size_t k = a.size() - b.size();
        q[k] = c;
        for (std::size_t j = 0; j < b.size(); ++j) {
            a[k + j] -= c * b[j];
            a[k + j] %= m;
            if (a[k + j] < 0) a[k + j] += m;
        }
        z_trim(a);
    }
    z_trim(q);
    return {q, a};
}

ZPoly z_mul_mod(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r = z_mul(a, b);
    z_mod_pos(r, m);
    return r;
}

// exact division test for monic divisor over Z; returns quotient when the
// remainder vanishes
bool z_try_divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
    ZPoly r = a;
    ZPoly q;
    if (r.size() < b.size()) return false;
    q.assign(r.size() - b.size() + 1, Int(0));
    while (z_deg(r) >= z_deg(b)) {
        Int c = r.back();
        std::size_t k = r.size() - b.size();
        q[k] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
        z_trim(r);
    }
    if (!r.empty()) return false;
    quotient = std::move(q);
    return true;
}

// One quadratic Hensel step (monic h): lifts f ≡ g·h (mod m), s·g + t·h ≡ 1
// (mod m) to the same congruences mod m².
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m) {
    Int m2 = m * m;
    ZPoly e = z_sub(f, z_mul(g, h));
    z_mod_pos(e, m2);
    auto [q, r] = z_divmod_monic_mod(z_mul_mod(s, e, m2), h, m2);
    ZPoly gstar = g;
    {
        ZPoly te = z_mul_mod(t, e, m2);
        ZPoly qg = z_mul_mod(q, g, m2);
        if (gstar.size() < std::max(te.size(), qg.size())) gstar.resize(std::max(te.size(), qg.size()), Int(0));
        for (std::size_t i = 0; i < te.size(); ++i) gstar[i] += te[i];
        for (std::size_t i = 0; i < qg.size(); ++i) gstar[i] += qg[i];
        z_mod_pos(gstar, m2);
    }
    ZPoly hstar = h;
    {
        if (hstar.size() < r.size()) hstar.resize(r.size(), Int(0));
        for (std::size_t i = 0; i < r.size(); ++i) hstar[i] += r[i];
        z_mod_pos(hstar, m2);
    }
    // refresh the Bezout pair
    ZPoly b = z_sub(z_mul(s, gstar), ZPoly{Int(1)});
    {
        ZPoly th = z_mul(t, hstar);
        if (b.size() < th.size()) b.resize(th.size(), Int(0));
        for (std::size_t i = 0; i < th.size(); ++i) b[i] += th[i];
        z_mod_pos(b, m2);
    }
    auto [c, d] = z_divmod_monic_mod(z_mul_mod(s, b, m2), hstar, m2);
    ZPoly sstar = z_sub(s, d);
    z_mod_pos(sstar, m2);
    ZPoly tstar = z_sub(z_sub(t, z_mul_mod(t, b, m2)), z_mul_mod(c, gstar, m2));
    z_mod_pos(tstar, m2);
    g = std::move(gstar);
    h = std::move(hstar);
    s = std::move(sstar);
    t = std::move(tstar);
}

ZPoly zp_to_z(const ZpPoly& a) {
    ZPoly r;
    r.reserve(a.size());
    for (auto c : a) r.emplace_back(c);
    return r;
}

// Lifts monic modular factors of a monic f from mod p to mod ≥ target via a
// factor tree. factors are monic mod p with f ≡ ∏ factors (mod p).
void lift_tree(const ZPoly& f, std::vector<ZPoly>& factors, std::size_t lo, std::size_t hi,
               std::int64_t p, const Int& target, std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        out.push_back(f);
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    // g = product of left half mod p, h = right half
    ZpPoly gp = {1}, hp = {1};
    auto to_zp = [&](const ZPoly& a) {
        ZpPoly r;
        r.reserve(a.size());
        for (const auto& c : a) {
            Int m = c % p;
            if (m < 0) m += p;
            r.push_back(m.get_si());
        }
        zp_trim(r);
        return r;
    };
    for (std::size_t i = lo; i < mid; ++i) gp = zp_mul(gp, to_zp(factors[i]), p);
    for (std::size_t i = mid; i < hi; ++i) hp = zp_mul(hp, to_zp(factors[i]), p);
    ZpPoly sp, tp;
    zp_ext_gcd(gp, hp, sp, tp, p);
    ZPoly g = zp_to_z(gp), h = zp_to_z(hp), s = zp_to_z(sp), t = zp_to_z(tp);
    Int m(p);
    while (m < target) {
        hensel_step(f, g, h, s, t, m);
        m *= m;
    }
    // keep factors monic with nonnegative reduced coefficients for recursion
    z_mod_pos(g, m);
    z_mod_pos(h, m);
    lift_tree(g, factors, lo, mid, p, target, out);
    lift_tree(h, factors, mid, hi, p, target, out);
}

// Landau-Mignotte style bound: coefficients of any monic factor of monic H
// are at most 2^n * ||H||_2 in absolute value.
Int factor_coeff_bound(const ZPoly& h) {
    Int norm2 = 0;
    for (const auto& c : h) norm2 += c * c;
    Int s = sqrt(norm2) + 1;
    Int b = s << static_cast<unsigned>(z_deg(h));
    return b;
}

const std::int64_t kPrimes[] = {3,  5,  7,  11, 13, 17, 19,  23,  29,  31,  37,  41,  43, 47,
                                53, 59, 61, 67, 71, 73, 79,  83,  89,  97,  101, 103, 107, 109,
                                113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179};

// Factors a monic square-free integer polynomial into monic irreducible
// integer factors.
std::vector<ZPoly> factor_monic_squarefree_z(const ZPoly& h) {
    const int n = z_deg(h);
    if (n == 1) return {h};
    // among square-free-preserving primes, keep the one with the fewest
    // modular factors; that keeps the recombination subsets small
    std::int64_t p = 0;
    std::vector<ZpPoly> modular;
    int tried = 0;
    for (std::int64_t cand : kPrimes) {
        ZpPoly r;
        r.reserve(h.size());
        for (const auto& c : h) {
            Int m = c % cand;
            if (m < 0) m += cand;
            r.push_back(m.get_si());
        }
        zp_trim(r);
        if (zp_deg(r) != n) continue;
        ZpPoly g = zp_gcd(r, zp_derivative(r, cand), cand);
        if (zp_deg(g) != 0) continue;
        std::vector<ZpPoly> factors = berlekamp(zp_monic(r, cand), cand);
        if (factors.size() == 1) return {h};  // irreducible mod p, hence over Q
        if (modular.empty() || factors.size() < modular.size()) {
            modular = std::move(factors);
            p = cand;
        }
        if (++tried >= 5 || modular.size() <= 2) break;
    }
    if (modular.empty()) throw std::logic_error("no suitable prime found for factorization");
    std::sort(modular.begin(), modular.end());

    Int bound = factor_coeff_bound(h) * 2 + 1;
    Int target = bound;
    std::vector<ZPoly> lifted_in;
    lifted_in.reserve(modular.size());
    for (auto& f : modular) lifted_in.push_back(zp_to_z(f));
    // the tree lifts to modulus m with m ≥ target by repeated squaring from p
    Int m(p);
    while (m < target) m *= m;
    std::vector<ZPoly> lifted;
    {
        ZPoly hmod = h;
        z_mod_pos(hmod, m);
        lift_tree(hmod, lifted_in, 0, lifted_in.size(), p, target, lifted);
    }
    for (auto& f : lifted) z_mod_pos(f, m);

    // subset recombination with exact trial division
    std::vector<ZPoly> result;
    ZPoly remaining = h;
    std::vector<ZPoly> pool = lifted;
    std::size_t d = 1;
    while (2 * d <= pool.size()) {
        bool found = false;
        std::vector<std::size_t> idx(d);
        // iterate subsets of size d in lexicographic order
        for (std::size_t i = 0; i < d; ++i) idx[i] = i;
        while (true) {
            ZPoly cand = {Int(1)};
            for (std::size_t i : idx) cand = z_mul_mod(cand, pool[i], m);
            z_mod_sym(cand, m);
            ZPoly quot;
            if (z_try_divide_exact(remaining, cand, quot)) {
                result.push_back(cand);
                remaining = quot;
                std::vector<ZPoly> next_pool;
                for (std::size_t i = 0, j = 0; i < pool.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    next_pool.push_back(pool[i]);
                }
                pool = std::move(next_pool);
                found = true;
                break;
            }
            // next subset
            std::size_t k = d;
            while (k > 0 && idx[k - 1] == pool.size() - d + (k - 1)) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t i = k; i < d; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++d;
    }
    if (z_deg(remaining) > 0) result.push_back(remaining);
    return result;
}

// monic rational square-free polynomial -> monic irreducible rational factors
std::vector<PolyQ> factor_monic_squarefree_q(const PolyQ& g) {
    const int n = g.degree();
    if (n == 1) return {g};
    // lambda = lcm of coefficient denominators; H(x) = lambda^n g(x/lambda) is
    // monic integral, factors map back by x -> lambda x and renormalizing.
    Int lambda = 1;
    for (int i = 0; i <= n; ++i)
        mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(),
                mpq_denref(g[static_cast<std::size_t>(i)].get_mpq_t()));
    ZPoly h(static_cast<std::size_t>(n) + 1);
    Int pw = 1;  // lambda^(n-i)
    for (int i = n; i >= 0; --i) {
        Rational c = g[static_cast<std::size_t>(i)] * Rational(pw);
        if (c.get_den() != 1) throw std::logic_error("monicization failed");
        h[static_cast<std::size_t>(i)] = c.get_num();
        pw *= lambda;
    }
    std::vector<ZPoly> zfactors = factor_monic_squarefree_z(h);
    std::vector<PolyQ> out;
    out.reserve(zfactors.size());
    Rational lam(lambda);
    for (const ZPoly& f : zfactors) {
        std::vector<Rational> c(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) c[i] = Rational(f[i]);
        PolyQ q{std::move(c)};
        q = q.stretch_arg(lam);
        out.push_back(q.monic());
    }
    return out;
}

bool poly_q_less(const PolyQ& a, const PolyQ& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        int c = cmp(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace

std::vector<std::pair<PolyQ, int>> factor_over_q(const PolyQ& p) {
    if (p.is_zero_poly()) throw std::domain_error("cannot factor the zero polynomial");
    std::vector<std::pair<PolyQ, int>> out;
    if (p.degree() == 0) return out;
    for (const auto& [part, mult] : squarefree_decomposition(p))
        for (const PolyQ& f : factor_monic_squarefree_q(part)) out.emplace_back(f, mult);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return poly_q_less(a.first, b.first); });
    return out;
}

bool is_irreducible_over_q(const PolyQ& p) {
    if (p.degree() < 1) return false;
    auto f = factor_over_q(p);
    return f.size() == 1 && f[0].second == 1;
}

Rational resultant_q(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero_poly() || b.is_zero_poly()) return Rational(0);
    if (a.degree() == 0) {
        Rational r = 1;
        for (int i = 0; i < b.degree(); ++i) r *= a[0];
        return r;
    }
    if (b.degree() == 0) {
        Rational r = 1;
        for (int i = 0; i < a.degree(); ++i) r *= b[0];
        return r;
    }
    PolyQ r = poly_mod(a, b);
    if (r.is_zero_poly()) return Rational(0);
    Rational lead = 1;
    for (int i = 0; i < a.degree() - r.degree(); ++i) lead *= b.lc();
    Rational sign = ((a.degree() * b.degree()) % 2 == 0) ? Rational(1) : Rational(-1);
    return sign * lead * resultant_q(b, r);
}

namespace {

// Norm of g ∈ K[x] (K = Q(α), minpoly m): N(g)(x) = Res_y(m(y), G(x, y))
// where G substitutes y for α. Computed by evaluation + Newton interpolation.
PolyQ nf_poly_norm(const PolyNF& g, const FieldPtr& K) {
    const int dk = K->degree();
    const int dg = g.degree();
    const int dn = dk * dg;
    // coefficient polynomials P_c(x) = sum_j coeff(g_j, c) x^j
    std::vector<PolyQ> pc(static_cast<std::size_t>(dk));
    for (int c = 0; c < dk; ++c) {
        std::vector<Rational> cs(static_cast<std::size_t>(dg) + 1);
        for (int j = 0; j <= dg; ++j) cs[static_cast<std::size_t>(j)] = g[static_cast<std::size_t>(j)].coords()[static_cast<std::size_t>(c)];
        pc[static_cast<std::size_t>(c)] = PolyQ(std::move(cs));
    }
    std::vector<Rational> xs, ys;
    for (int k = 0; k <= dn; ++k) {
        Rational x0(k);
        std::vector<Rational> gy(static_cast<std::size_t>(dk));
        for (int c = 0; c < dk; ++c) gy[static_cast<std::size_t>(c)] = pc[static_cast<std::size_t>(c)].eval(x0);
        xs.push_back(x0);
        ys.push_back(resultant_q(K->minpoly(), PolyQ(std::move(gy))));
    }
    // Newton interpolation
    std::vector<Rational> coef = ys;
    for (std::size_t j = 1; j < coef.size(); ++j)
        for (std::size_t i = coef.size(); i-- > j;)
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    PolyQ result;
    for (std::size_t i = coef.size(); i-- > 0;) {
        PolyQ lin(std::vector<Rational>{-xs[i], Rational(1)});
        result = result * lin + PolyQ::constant(coef[i]);
    }
    return result;
}

std::vector<PolyNF> factor_monic_squarefree_nf(const PolyNF& g, const FieldPtr& K) {
    if (g.degree() == 1) return {g};
    if (K->degree() == 1) {
        // the field is Q up to renaming; factor rationally
        std::vector<Rational> cs;
        for (int i = 0; i <= g.degree(); ++i) {
            // coordinates are in the power basis of a degree-1 generator; the
            // element is its own rational value only when the generator is 0,
            // so evaluate via rational_part of a reduced representation
            cs.push_back(g[static_cast<std::size_t>(i)].coords()[0]);
        }
        PolyQ gq{std::move(cs)};
        std::vector<PolyNF> out;
        for (const auto& [f, mult] : factor_over_q(gq)) {
            (void)mult;  // square-free input
            out.push_back(embed_poly(f, K));
        }
        return out;
    }
    const NFElement alpha = NFElement::generator(K);
    for (int trial = 0;; ++trial) {
        if (trial > 8 * (g.degree() + 1) * K->degree())
            throw std::logic_error("no square-free shift found in Trager factorization");
        long s = (trial + 1) / 2 * ((trial % 2) ? 1 : -1);  // 0, 1, -1, 2, -2, ...
        NFElement shift = alpha.scaled(Rational(-s));
        PolyNF gs = g.shift_arg(shift);  // g(x - s·α)
        PolyQ norm = nf_poly_norm(gs, K);
        if (poly_gcd(norm, norm.derivative()).degree() != 0) continue;
        std::vector<PolyNF> out;
        NFElement unshift = alpha.scaled(Rational(s));
        int total = 0;
        for (const auto& [nf_factor, mult] : factor_over_q(norm)) {
            (void)mult;
            PolyNF h = poly_gcd(gs, embed_poly(nf_factor, K));
            if (h.degree() < 1) continue;
            total += h.degree();
            out.push_back(h.shift_arg(unshift).monic());
        }
        if (total != g.degree()) throw std::logic_error("Trager factor degrees do not sum up");
        return out;
    }
}

}  // namespace

std::vector<std::pair<PolyNF, int>> factor_over_nf(const PolyNF& p, const FieldPtr& K,
                                                   int degree_bound) {
    if (p.is_zero_poly()) throw std::domain_error("cannot factor the zero polynomial");
    if (p.degree() > degree_bound)
        throw std::domain_error("factorization degree bound exceeded: degree " +
                                std::to_string(p.degree()) + " > bound " +
                                std::to_string(degree_bound));
    std::vector<std::pair<PolyNF, int>> out;
    if (p.degree() == 0) return out;
    for (const auto& [part, mult] : squarefree_decomposition(p))
        for (const PolyNF& f : factor_monic_squarefree_nf(part, K)) out.emplace_back(f, mult);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return cmp_poly_nf(a.first, b.first) < 0; });
    return out;
}

}  // namespace nsalg
