// Univariate polynomial arithmetic over Q and Z, and Zassenhaus
// factorization over Z: squarefree split (Yun), factorization mod p
// (Cantor-Zassenhaus), quadratic Hensel lifting on a factor tree, and
// subset recombination against the Landau-Mignotte bound.  Degrees here
// stay small (<= ~24), so no effort is spent on asymptotics.

#include "ksendo/intpoly.hpp"
#include "ksendo/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace ksendo {
namespace poly {

void normalize(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
void normalize(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }
int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] += b[i];
    normalize(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] -= b[i];
    normalize(r);
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
    normalize(r);
    return r;
}

QPoly scale(const QPoly& a, const mpq_class& c) {
    if (c == 0) return {};
    QPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.empty()) throw DomainError("polynomial division by zero");
    r = a;
    normalize(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, mpq_class(0));
    while (r.size() >= b.size() && !r.empty()) {
        mpq_class c = r.back() / b.back();
        size_t shift = r.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); i++) r[shift + i] -= c * b[i];
        normalize(r);
    }
    normalize(q);
}

QPoly gcd(QPoly a, QPoly b) {
    normalize(a);
    normalize(b);
    while (!b.empty()) {
        QPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        mpq_class lc = a.back();
        for (auto& x : a) x /= lc;
    }
    return a;
}

QPoly derivative(const QPoly& a) {
    QPoly r;
    for (size_t i = 1; i < a.size(); i++) r.push_back(a[i] * mpq_class((long)i));
    normalize(r);
    return r;
}

mpq_class eval(const QPoly& a, const mpq_class& x) {
    mpq_class r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
    return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
    normalize(r);
    return r;
}

mpz_class content(const ZPoly& a) {
    mpz_class g = 0;
    for (auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly primitive_part(const ZPoly& a) {
    if (a.empty()) return {};
    mpz_class c = content(a);
    if (sgn(a.back()) < 0) c = -c;
    ZPoly r = a;
    for (auto& x : r) x /= c;
    return r;
}

QPoly to_q(const ZPoly& a) {
    QPoly r;
    r.reserve(a.size());
    for (auto& c : a) r.push_back(mpq_class(c));
    return r;
}

ZPoly z_primitive_of(const QPoly& a) {
    mpz_class den = 1;
    for (auto& c : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z;
    z.reserve(a.size());
    for (auto& c : a) {
        mpq_class t = c * mpq_class(den);
        z.push_back(t.get_num());
    }
    return primitive_part(z);
}

} // namespace poly

// ---------------------------------------------------------------------
// arithmetic mod a word-size prime

namespace {

using u64 = uint64_t;

u64 addm(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 subm(u64 a, u64 b, u64 p) { return (a + p - b % p) % p; }
u64 mulm(u64 a, u64 b, u64 p) { return (u64)((__uint128_t)a * b % p); }
u64 powm(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}
u64 invm(u64 a, u64 p) { return powm(a % p, p - 2, p); }

using PPoly = std::vector<u64>;

void pnorm(PPoly& a) { while (!a.empty() && a.back() == 0) a.pop_back(); }
int pdeg(const PPoly& a) { return (int)a.size() - 1; }

PPoly pmul(const PPoly& a, const PPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++) r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
    pnorm(r);
    return r;
}

PPoly psub(const PPoly& a, const PPoly& b, u64 p) {
    PPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); i++) r[i] = a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] = subm(r[i], b[i], p);
    pnorm(r);
    return r;
}

void pdivmod(const PPoly& a, const PPoly& b, PPoly& q, PPoly& r, u64 p) {
    r = a;
    pnorm(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    u64 binv = invm(b.back(), p);
    while ((int)r.size() >= (int)b.size() && !r.empty()) {
        u64 c = mulm(r.back(), binv, p);
        size_t shift = r.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); i++) r[shift + i] = subm(r[shift + i], mulm(c, b[i], p), p);
        pnorm(r);
    }
    pnorm(q);
}

PPoly pmod(const PPoly& a, const PPoly& b, u64 p) {
    PPoly q, r;
    pdivmod(a, b, q, r, p);
    return r;
}

PPoly pgcd(PPoly a, PPoly b, u64 p) {
    pnorm(a);
    pnorm(b);
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 inv = invm(a.back(), p);
        for (auto& c : a) c = mulm(c, inv, p);
    }
    return a;
}

PPoly ppowmod(PPoly a, mpz_class e, const PPoly& m, u64 p) {
    PPoly r = {1};
    a = pmod(a, m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = pmod(pmul(r, a, p), m, p);
        a = pmod(pmul(a, a, p), m, p);
        e >>= 1;
    }
    return r;
}

// equal-degree splitting (Cantor-Zassenhaus); f monic squarefree, all
// irreducible factors of degree d
void equal_degree(const PPoly& f, int d, u64 p, std::vector<PPoly>& out, u64& seed) {
    if (pdeg(f) == d) { out.push_back(f); return; }
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), (unsigned long)p, (unsigned long)d);
    e = (e - 1) / 2;
    while (true) {
        PPoly a(pdeg(f), 0);
        for (auto& c : a) {
            seed = seed * 6364136223846793005ull + 1442695040888963407ull;
            c = (seed >> 16) % p;
        }
        pnorm(a);
        if (pdeg(a) < 1) continue;
        PPoly g = pgcd(f, a, p);
        if (pdeg(g) > 0 && pdeg(g) < pdeg(f)) {
            PPoly q, r;
            pdivmod(f, g, q, r, p);
            equal_degree(g, d, p, out, seed);
            equal_degree(q, d, p, out, seed);
            return;
        }
        PPoly b = psub(ppowmod(a, e, f, p), {1}, p);
        g = pgcd(f, b, p);
        if (pdeg(g) > 0 && pdeg(g) < pdeg(f)) {
            PPoly q, r;
            pdivmod(f, g, q, r, p);
            equal_degree(g, d, p, out, seed);
            equal_degree(q, d, p, out, seed);
            return;
        }
    }
}

// distinct-degree then equal-degree; f squarefree mod p
std::vector<PPoly> factor_mod_p(PPoly f, u64 p) {
    u64 inv = invm(f.back(), p);
    for (auto& c : f) c = mulm(c, inv, p);
    std::vector<PPoly> out;
    u64 seed = 0x9e3779b97f4a7c15ull;
    PPoly h = {0, 1};
    PPoly v = f;
    int d = 0;
    while (pdeg(v) > 0) {
        d++;
        if (2 * d > pdeg(v)) { out.push_back(v); break; }
        h = ppowmod(h, mpz_class((unsigned long)p), f, p);
        PPoly g = pgcd(v, psub(h, {0, 1}, p), p);
        if (pdeg(g) > 0) {
            equal_degree(g, d, p, out, seed);
            PPoly q, r;
            pdivmod(v, g, q, r, p);
            v = q;
        }
    }
    return out;
}

// ---------------------------------------------------------------------
// ZPoly arithmetic mod m (m a big modulus), symmetric representatives

mpz_class symrep(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

ZPoly zred(ZPoly a, const mpz_class& m) {
    for (auto& c : a) { c %= m; if (c < 0) c += m; }
    poly::normalize(a);
    return a;
}

ZPoly zadd_m(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] += b[i];
    return zred(std::move(r), m);
}

ZPoly zsub_m(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] -= b[i];
    return zred(std::move(r), m);
}

ZPoly zmul_m(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    return zred(poly::mul(a, b), m);
}

// division with remainder mod m; b monic
void zdivmod_m(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r, const mpz_class& m) {
    r = zred(a, m);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, mpz_class(0));
    while ((int)r.size() >= (int)b.size() && !r.empty()) {
        mpz_class c = r.back();
        size_t shift = r.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); i++) {
            r[shift + i] -= c * b[i];
            r[shift + i] %= m;
            if (r[shift + i] < 0) r[shift + i] += m;
        }
        poly::normalize(r);
    }
    poly::normalize(q);
}

// One quadratic Hensel step (von zur Gathen & Gerhard, 15.10):
// given f = g*h (mod m), s*g + t*h = 1 (mod m), f,g,h monic,
// produce the same data mod m^2.
struct HenselPair {
    ZPoly g, h, s, t;
};

void hensel_step(const ZPoly& f, HenselPair& P, const mpz_class& m) {
    mpz_class m2 = m * m;
    ZPoly e = zsub_m(f, zmul_m(P.g, P.h, m2), m2);
    ZPoly q, r;
    zdivmod_m(zmul_m(P.s, e, m2), P.h, q, r, m2);
    ZPoly gnew = zadd_m(zadd_m(P.g, zmul_m(P.t, e, m2), m2), zmul_m(q, P.g, m2), m2);
    ZPoly hnew = zadd_m(P.h, r, m2);
    ZPoly b = zsub_m(zadd_m(zmul_m(P.s, gnew, m2), zmul_m(P.t, hnew, m2), m2), ZPoly{1}, m2);
    ZPoly c, d;
    zdivmod_m(zmul_m(P.s, b, m2), hnew, c, d, m2);
    ZPoly snew = zsub_m(P.s, d, m2);
    ZPoly tnew = zsub_m(zsub_m(P.t, zmul_m(P.t, b, m2), m2), zmul_m(c, gnew, m2), m2);
    P.g = std::move(gnew);
    P.h = std::move(hnew);
    P.s = std::move(snew);
    P.t = std::move(tnew);
}

struct TreeNode {
    ZPoly poly;      // product of the leaves below (mod current modulus)
    HenselPair pair; // internal nodes only
    int left = -1, right = -1;
    int leaf = -1;
};

ZPoly zpoly_from_ppoly(const PPoly& a) {
    ZPoly r;
    for (auto c : a) r.push_back(mpz_class((unsigned long)c));
    poly::normalize(r);
    return r;
}

PPoly ppoly_from_zpoly(const ZPoly& a, u64 p) {
    PPoly r;
    for (auto& c : a) {
        mpz_class t = c % mpz_class((unsigned long)p);
        if (t < 0) t += mpz_class((unsigned long)p);
        r.push_back(t.get_ui());
    }
    pnorm(r);
    return r;
}

void build_tree(std::vector<TreeNode>& tree, int node, std::vector<int> leaf_ids,
                const std::vector<ZPoly>& leaves, u64 p) {
    if (leaf_ids.size() == 1) {
        tree[node].leaf = leaf_ids[0];
        tree[node].poly = leaves[leaf_ids[0]];
        return;
    }
    size_t half = leaf_ids.size() / 2;
    std::vector<int> L(leaf_ids.begin(), leaf_ids.begin() + half);
    std::vector<int> R(leaf_ids.begin() + half, leaf_ids.end());
    int li = (int)tree.size();
    tree.push_back({});
    build_tree(tree, li, L, leaves, p);
    int ri = (int)tree.size();
    tree.push_back({});
    build_tree(tree, ri, R, leaves, p);
    tree[node].left = li;
    tree[node].right = ri;
    ZPoly g = tree[li].poly;
    ZPoly h = tree[ri].poly;
    tree[node].poly = zred(poly::mul(g, h), mpz_class((unsigned long)p));
    // Bezout pair mod p for (g, h) via extended Euclid
    PPoly r0 = ppoly_from_zpoly(g, p), r1 = ppoly_from_zpoly(h, p);
    PPoly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        PPoly q, r;
        pdivmod(r0, r1, q, r, p);
        PPoly s2 = psub(s0, pmul(q, s1, p), p);
        PPoly t2 = psub(t0, pmul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (pdeg(r0) != 0) throw VerificationFailure("modular factors not coprime");
    u64 inv = invm(r0[0], p);
    for (auto& c : s0) c = mulm(c, inv, p);
    for (auto& c : t0) c = mulm(c, inv, p);
    tree[node].pair.g = g;
    tree[node].pair.h = h;
    tree[node].pair.s = zpoly_from_ppoly(s0);
    tree[node].pair.t = zpoly_from_ppoly(t0);
}

void lift_tree(std::vector<TreeNode>& tree, int node, const ZPoly& f, const mpz_class& m) {
    if (tree[node].leaf >= 0) {
        tree[node].poly = f;
        return;
    }
    hensel_step(f, tree[node].pair, m);
    tree[node].poly = f;
    lift_tree(tree, tree[node].left, tree[node].pair.g, m);
    lift_tree(tree, tree[node].right, tree[node].pair.h, m);
}

void collect_leaves(const std::vector<TreeNode>& tree, int node, std::vector<ZPoly>& out) {
    if (tree[node].leaf >= 0) {
        if ((int)out.size() <= tree[node].leaf) out.resize(tree[node].leaf + 1);
        out[tree[node].leaf] = tree[node].poly;
        return;
    }
    collect_leaves(tree, tree[node].left, out);
    collect_leaves(tree, tree[node].right, out);
}

// factor a primitive squarefree f (deg >= 1, lc > 0) over Z
std::vector<ZPoly> factor_squarefree(const ZPoly& f) {
    int n = poly::degree(f);
    if (n == 1) return {f};
    static const u64 prime_pool[] = {10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079,
                                     10091, 10093, 10099, 10103, 10111, 10133, 10139, 10141,
                                     12007, 13001, 15013, 17011, 19001, 23003, 29009, 31013};
    u64 p = 0;
    std::vector<PPoly> modular;
    for (u64 cand : prime_pool) {
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), (unsigned long)cand)) continue;
        PPoly fp = ppoly_from_zpoly(f, cand);
        if (pdeg(fp) != n) continue;
        PPoly der;
        for (size_t i = 1; i < fp.size(); i++) der.push_back(mulm(fp[i], i % cand, cand));
        pnorm(der);
        if (pdeg(pgcd(fp, der, cand)) != 0) continue;
        p = cand;
        modular = factor_mod_p(fp, p);
        break;
    }
    if (p == 0) throw VerificationFailure("no suitable prime found for factorization");
    if (modular.size() == 1) return {f};

    // Work with the monic polynomial f~(x) = lc^(n-1) * f(x/lc); its factors
    // map back via g(x) -> primitive part of g(lc*x).
    mpz_class lc = f.back();
    ZPoly fmon(f.size());
    fmon[n] = 1;
    for (int i = 0; i < n; i++) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), lc.get_mpz_t(), (unsigned long)(n - 1 - i));
        fmon[i] = f[i] * pw;
    }
    std::vector<ZPoly> leaves_mon;
    for (auto& w : modular) {
        PPoly wm = w;
        u64 lcp;
        {
            mpz_class t = lc % mpz_class((unsigned long)p);
            if (t < 0) t += mpz_class((unsigned long)p);
            lcp = t.get_ui();
        }
        u64 mult = 1;
        for (int i = pdeg(wm); i >= 0; i--) {
            wm[i] = mulm(wm[i], mult, p);
            mult = mulm(mult, lcp, p);
        }
        u64 inv = invm(wm.back(), p);
        for (auto& c : wm) c = mulm(c, inv, p);
        leaves_mon.push_back(zpoly_from_ppoly(wm));
    }

    // Landau-Mignotte bound for factors of fmon
    mpz_class norm2 = 0;
    for (auto& c : fmon) norm2 += c * c;
    mpz_class sq;
    mpz_sqrt(sq.get_mpz_t(), norm2.get_mpz_t());
    sq += 1;
    mpz_class two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, (unsigned long)n + 1);
    mpz_class bound = sq * two_n;

    std::vector<TreeNode> tree(1);
    std::vector<int> ids(leaves_mon.size());
    for (size_t i = 0; i < ids.size(); i++) ids[i] = (int)i;
    build_tree(tree, 0, ids, leaves_mon, p);
    mpz_class pk((unsigned long)p);
    while (pk <= 2 * bound) {
        lift_tree(tree, 0, zred(fmon, pk * pk), pk);
        pk = pk * pk;
    }
    std::vector<ZPoly> lifted;
    collect_leaves(tree, 0, lifted);

    // subset recombination; divisibility tested exactly over Q
    std::vector<int> alive(lifted.size(), 1);
    std::vector<ZPoly> result;
    ZPoly rem = f;
    auto try_subset = [&](const std::vector<int>& sel) -> bool {
        ZPoly prod = {1};
        for (int j : sel) prod = zred(poly::mul(prod, lifted[j]), pk);
        for (auto& c : prod) c = symrep(c, pk);
        poly::normalize(prod);
        if (prod.empty()) return false;
        ZPoly cand(prod.size());
        mpz_class mult = 1;
        for (size_t i = 0; i < prod.size(); i++) {
            cand[i] = prod[i] * mult;
            mult *= lc;
        }
        poly::normalize(cand);
        if (cand.empty()) return false;
        cand = poly::primitive_part(cand);
        if (poly::degree(cand) < 1) return false;
        QPoly q, r;
        poly::divmod(poly::to_q(rem), poly::to_q(cand), q, r);
        if (!r.empty()) return false;
        result.push_back(cand);
        rem = poly::z_primitive_of(q);
        for (int j : sel) alive[j] = 0;
        return true;
    };
    for (size_t card = 1; card <= lifted.size(); card++) {
        bool progress = true;
        while (progress && poly::degree(rem) > 0) {
            progress = false;
            std::vector<int> idx;
            for (size_t i = 0; i < lifted.size(); i++)
                if (alive[i]) idx.push_back((int)i);
            if (idx.size() < card) break;
            std::vector<int> sel(card);
            std::function<bool(size_t, size_t)> rec = [&](size_t pos, size_t start) -> bool {
                if (pos == card) return try_subset(sel);
                for (size_t s = start; s + (card - pos) <= idx.size() + 0u && s < idx.size(); s++) {
                    sel[pos] = idx[s];
                    if (rec(pos + 1, s + 1)) return true;
                }
                return false;
            };
            if (rec(0, 0)) progress = true;
        }
        if (poly::degree(rem) <= 0) break;
    }
    if (poly::degree(rem) > 0) result.push_back(poly::primitive_part(rem));
    return result;
}

} // namespace

std::vector<std::pair<ZPoly, int>> factor_over_Q(const QPoly& fq) {
    QPoly f = fq;
    poly::normalize(f);
    if (f.empty()) throw DomainError("factor of zero polynomial");
    std::vector<std::pair<ZPoly, int>> out;
    if (poly::degree(f) == 0) return out;
    // Yun squarefree decomposition
    QPoly d = poly::derivative(f);
    QPoly g = poly::gcd(f, d);
    QPoly w, y, q, r;
    poly::divmod(f, g, w, r);
    poly::divmod(d, g, y, r);
    int mult = 1;
    while (poly::degree(w) > 0) {
        QPoly z = poly::sub(y, poly::derivative(w));
        QPoly h = poly::gcd(w, z);
        if (poly::degree(h) > 0) {
            ZPoly hz = poly::z_primitive_of(h);
            for (auto& part : factor_squarefree(hz)) out.push_back({part, mult});
        }
        poly::divmod(w, h, q, r);
        w = q;
        poly::divmod(z, h, q, r);
        y = q;
        mult++;
    }
    return out;
}

bool is_irreducible_over_Q(const QPoly& f) {
    if (poly::degree(f) < 1) return false;
    auto fac = factor_over_Q(f);
    return fac.size() == 1 && fac[0].second == 1 &&
           poly::degree(fac[0].first) == poly::degree(f);
}

} // namespace ksendo
