#include "arithdyn/intpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>

// Zassenhaus factorization of primitive squarefree polynomials over Z:
// pick an odd prime p keeping f squarefree mod p, factor mod p
// (distinct-degree + Cantor-Zassenhaus), lift the factors with quadratic
// Hensel steps past the Mignotte bound, then recombine subsets.

namespace arithdyn::zx {

namespace {

// ---------- arithmetic mod a small odd prime (p < 2^31) ----------

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using FPoly = std::vector<u64>;  // low-to-high, coefficients in [0,p)

struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const { u64 r = a + b; return r >= p ? r - p : r; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>((u128)a * b % p); }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
};

int fdeg(const FPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i]) return i;
    return -1;
}

void ftrim(FPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FPoly fmul(const Fp& F, const FPoly& a, const FPoly& b) {
    if (a.empty() || b.empty()) return {};
    FPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    ftrim(r);
    return r;
}

FPoly fsub(const Fp& F, const FPoly& a, const FPoly& b) {
    FPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    ftrim(r);
    return r;
}

// a mod b (b nonzero); in-place variant returns remainder.
FPoly frem(const Fp& F, FPoly a, const FPoly& b) {
    int db = fdeg(b);
    u64 linv = F.inv(b[db]);
    int da = fdeg(a);
    while (da >= db) {
        u64 c = F.mul(a[da], linv);
        for (int i = 0; i <= db; ++i)
            a[da - db + i] = F.sub(a[da - db + i], F.mul(c, b[i]));
        da = fdeg(a);
    }
    ftrim(a);
    return a;
}

FPoly fdivq(const Fp& F, FPoly a, const FPoly& b) {  // exact or floor quotient
    int db = fdeg(b);
    u64 linv = F.inv(b[db]);
    int da = fdeg(a);
    if (da < db) return {};
    FPoly q(da - db + 1, 0);
    while (da >= db) {
        u64 c = F.mul(a[da], linv);
        q[da - db] = c;
        for (int i = 0; i <= db; ++i)
            a[da - db + i] = F.sub(a[da - db + i], F.mul(c, b[i]));
        da = fdeg(a);
    }
    return q;
}

FPoly fgcd(const Fp& F, FPoly a, FPoly b) {
    ftrim(a);
    ftrim(b);
    while (fdeg(b) >= 0) {
        FPoly r = frem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    int d = fdeg(a);
    if (d >= 0) {
        u64 linv = F.inv(a[d]);
        for (auto& c : a) c = F.mul(c, linv);
    }
    return a;
}

void fmonic(const Fp& F, FPoly& a) {
    int d = fdeg(a);
    if (d < 0) return;
    u64 linv = F.inv(a[d]);
    for (auto& c : a) c = F.mul(c, linv);
}

FPoly fderiv(const Fp& F, const FPoly& a) {
    if (a.size() <= 1) return {};
    FPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.p);
    ftrim(r);
    return r;
}

// base^e mod f, with e an arbitrary-precision exponent.
FPoly fpowmod(const Fp& F, const FPoly& base, const Int& e, const FPoly& f) {
    FPoly r{1};
    FPoly b = frem(F, base, f);
    long bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (long i = bits - 1; i >= 0; --i) {
        r = frem(F, fmul(F, r, r), f);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = frem(F, fmul(F, r, b), f);
    }
    return r;
}

FPoly reduce_mod_p(const Poly& a, const Fp& F) {
    FPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        long m = mpz_fdiv_ui(a[i].get_mpz_t(), F.p);
        r[i] = static_cast<u64>(m);
    }
    ftrim(r);
    return r;
}

// Equal-degree splitting (Cantor-Zassenhaus, p odd): f monic squarefree,
// all irreducible factors of degree d.
void edf(const Fp& F, const FPoly& f, int d, std::mt19937_64& rng,
         std::vector<FPoly>& out) {
    int n = fdeg(f);
    if (n == d) {
        out.push_back(f);
        return;
    }
    Int exponent;
    mpz_ui_pow_ui(exponent.get_mpz_t(), static_cast<unsigned long>(F.p),
                  static_cast<unsigned long>(d));
    exponent = (exponent - 1) / 2;
    while (true) {
        FPoly a(n);
        for (auto& c : a) c = rng() % F.p;
        ftrim(a);
        if (fdeg(a) < 1) continue;
        FPoly g = fgcd(F, a, f);
        if (fdeg(g) > 0 && fdeg(g) < n) {
            edf(F, g, d, rng, out);
            edf(F, fdivq(F, f, g), d, rng, out);
            return;
        }
        FPoly b = fpowmod(F, a, exponent, f);
        if (b.empty()) continue;
        b[0] = F.sub(b[0], 1);
        ftrim(b);
        g = fgcd(F, b, f);
        if (fdeg(g) > 0 && fdeg(g) < n) {
            edf(F, g, d, rng, out);
            edf(F, fdivq(F, f, g), d, rng, out);
            return;
        }
    }
}

// Full factorization of a monic squarefree f mod p into monic irreducibles.
std::vector<FPoly> factor_mod_p(const Fp& F, FPoly f) {
    std::vector<FPoly> out;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (F.p << 16) ^ fdeg(f));
    FPoly h{0, 1};  // x
    int d = 0;
    while (true) {
        int n = fdeg(f);
        if (n <= 0) break;
        ++d;
        if (2 * d > n) {
            out.push_back(f);  // what's left is irreducible
            break;
        }
        h = fpowmod(F, h, Int(static_cast<long>(F.p)), f);
        FPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = F.sub(hx[1], 1);
        ftrim(hx);
        FPoly g = fgcd(F, hx, f);
        if (fdeg(g) > 0) {
            edf(F, g, d, rng, out);
            f = fdivq(F, f, g);
            h = frem(F, h, f.empty() ? FPoly{1} : f);
            if (fdeg(f) <= 0) break;
        }
    }
    return out;
}

// ---------- Hensel lifting ----------

using ZPoly = Poly;

Int symmetric(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

ZPoly zmod(const ZPoly& a, const Int& m) {
    ZPoly r = a;
    for (auto& c : r) {
        c %= m;
        if (c < 0) c += m;
    }
    trim(r);
    return r;
}

ZPoly zmulmod(const ZPoly& a, const ZPoly& b, const Int& m) {
    return zmod(mul(a, b), m);
}

// Division by a monic polynomial with coefficients mod m.
void zdivmod_monic(const ZPoly& a, const ZPoly& g, const Int& m, ZPoly& q, ZPoly& r) {
    int dg = deg(g);
    r = a;
    trim(r);
    int da = deg(r);
    if (da < dg) {
        q = {};
        return;
    }
    q.assign(da - dg + 1, Int(0));
    for (int k = da - dg; k >= 0; --k) {
        Int c = (k + dg < static_cast<int>(r.size())) ? r[k + dg] : Int(0);
        c %= m;
        if (c < 0) c += m;
        if (c == 0) continue;
        q[k] = c;
        for (int i = 0; i <= dg; ++i) {
            Int& t = r[k + i];
            t = (t - c * g[i]) % m;
            if (t < 0) t += m;
        }
    }
    trim(q);
    trim(r);
}

// One quadratic Hensel step: f = g*h (mod m), s*g + t*h = 1 (mod m), g monic.
// Produces the same relations mod m^2 (g stays monic).
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m) {
    Int m2 = m * m;
    ZPoly e = zmod(sub(f, mul(g, h)), m2);
    // Writing e*t = q*g + r gives h*r + g*(e*s + q*h) = e*(s*g + t*h) = e
    // (mod m^2), so g += r keeps g monic and h += e*s + q*h absorbs the rest.
    ZPoly q, r;
    zdivmod_monic(zmulmod(t, e, m2), g, m2, q, r);
    ZPoly gnew = zmod(add(g, r), m2);
    ZPoly hnew = zmod(add(h, add(zmulmod(s, e, m2), zmulmod(q, h, m2))), m2);
    g = std::move(gnew);
    h = std::move(hnew);
    // Lift the Bezout pair: with t*b = q*g + r, setting t -= r and
    // s -= s*b + q*h leaves s*g + t*h - 1 = -b^2 = 0 (mod m^2).
    ZPoly b = zmod(sub(add(zmulmod(s, g, m2), zmulmod(t, h, m2)), ZPoly{1}), m2);
    zdivmod_monic(zmulmod(t, b, m2), g, m2, q, r);
    ZPoly tnew = zmod(sub(t, r), m2);
    ZPoly snew = zmod(sub(s, add(zmulmod(s, b, m2), zmulmod(q, h, m2))), m2);
    s = std::move(snew);
    t = std::move(tnew);
}

// Lifts the list of monic mod-p factors of f (with f = lc * prod factors
// mod p) to monic factors mod M >= target with the same product relation.
// Recursive binary split.
void hensel_lift_list(const ZPoly& f, std::vector<FPoly>::const_iterator begin,
                      std::vector<FPoly>::const_iterator end, const Fp& F,
                      const Int& target, std::vector<ZPoly>& out) {
    size_t count = end - begin;
    Int p(static_cast<long>(F.p));
    if (count == 1) {
        // f is (up to its lc) a power-of-p lift of the single factor; make monic.
        Int M = p;
        while (M < target) M *= M;
        ZPoly fm = zmod(f, M);
        int d = deg(fm);
        Int linv;
        mpz_invert(linv.get_mpz_t(), fm[d].get_mpz_t(), M.get_mpz_t());
        for (auto& c : fm) c = c * linv % M;
        out.push_back(zmod(fm, M));
        return;
    }
    size_t half = count / 2;
    // g = monic product of the first half, h = lc(f) * product of the rest.
    FPoly gp{1}, hp{1};
    for (auto it = begin; it != begin + half; ++it) gp = fmul(F, gp, *it);
    for (auto it = begin + half; it != end; ++it) hp = fmul(F, hp, *it);
    u64 l = static_cast<u64>(mpz_fdiv_ui(lc(f).get_mpz_t(), F.p));
    for (auto& c : hp) c = F.mul(c, l);
    // Bezout: s*g + t*h = 1 mod p (g, h coprime since f squarefree mod p).
    // Extended Euclid over F_p.
    FPoly r0 = gp, r1 = hp, s0{1}, s1{}, t0{}, t1{1};
    while (fdeg(r1) >= 0) {
        FPoly q = fdivq(F, r0, r1);
        FPoly r2 = fsub(F, r0, fmul(F, q, r1));
        FPoly s2 = fsub(F, s0, fmul(F, q, s1));
        FPoly t2 = fsub(F, t0, fmul(F, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is a nonzero constant; scale.
    u64 cinv = F.inv(r0[0]);
    for (auto& c : s0) c = F.mul(c, cinv);
    for (auto& c : t0) c = F.mul(c, cinv);

    auto to_z = [](const FPoly& a) {
        ZPoly r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
        trim(r);
        return r;
    };
    ZPoly g = to_z(gp), h = to_z(hp), s = to_z(s0), t = to_z(t0);
    Int m = p;
    while (m < target) {
        hensel_step(f, g, h, s, t, m);
        m *= m;
    }
    hensel_lift_list(zmod(g, m), begin, begin + half, F, target, out);
    hensel_lift_list(zmod(h, m), begin + half, end, F, target, out);
}

Int mignotte_bound(const Poly& f) {
    // |coeff of any divisor of f over Z| <= 2^n * ||f||_2 * |lc(f)| (loose).
    Int sq = 0;
    for (const auto& c : f) sq += c * c;
    Int norm;
    mpz_sqrt(norm.get_mpz_t(), sq.get_mpz_t());
    norm += 1;
    Int b = norm * abs(lc(f));
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), deg(f) + 1);
    return b;
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& input) {
    std::vector<Poly> out;
    Poly f = input;
    trim(f);
    int n = deg(f);
    if (n <= 0) return out;
    // Pull out a root at x = 0 so the trailing-coefficient prune applies.
    if (f[0] == 0) {
        out.push_back(Poly{0, 1});
        f.erase(f.begin());
        n = deg(f);
        if (n == 0) return out;
    }
    if (n == 1) {
        out.push_back(f);
        return out;
    }

    // Choose the odd prime (f squarefree mod p, p not dividing lc) giving the
    // fewest modular factors among a handful of candidates.
    Fp best{0};
    std::vector<FPoly> best_factors;
    int tried = 0;
    Int p = 2;
    while (tried < 6) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (!p.fits_ulong_p()) throw math_error("factor_squarefree: prime overflow");
        Fp F{p.get_ui()};
        if (mpz_fdiv_ui(lc(f).get_mpz_t(), F.p) == 0) continue;
        FPoly fp = reduce_mod_p(f, F);
        if (fdeg(fgcd(F, fp, fderiv(F, fp))) != 0) continue;  // not squarefree mod p
        ++tried;
        FPoly fpm = fp;
        fmonic(F, fpm);
        auto factors = factor_mod_p(F, fpm);
        if (best.p == 0 || factors.size() < best_factors.size()) {
            best = F;
            best_factors = std::move(factors);
        }
        if (best_factors.size() <= 3) break;
    }
    if (best_factors.size() == 1) {
        auto g = content_primitive(f).second;
        out.push_back(g);
        return out;
    }

    // Hensel lift past twice the Mignotte bound.
    Int target = 2 * mignotte_bound(f) + 1;
    std::vector<ZPoly> lifted;
    Int M(static_cast<long>(best.p));
    while (M < target) M *= M;
    std::sort(best_factors.begin(), best_factors.end(),
              [](const FPoly& a, const FPoly& b) { return a.size() < b.size(); });
    hensel_lift_list(zmod(f, M), best_factors.begin(), best_factors.end(), best, target,
                     lifted);

    // Zassenhaus recombination over subsets of the lifted factors.
    std::vector<int> live(lifted.size());
    for (size_t i = 0; i < lifted.size(); ++i) live[i] = static_cast<int>(i);

    auto try_subset = [&](const std::vector<int>& subset) -> bool {
        ZPoly prod{lc(f)};
        for (int i : subset) prod = zmulmod(prod, lifted[i], M);
        for (auto& c : prod) c = symmetric(c, M);
        trim(prod);
        auto [c, cand] = content_primitive(prod);
        (void)c;
        auto q = div_exact(f, cand);
        if (!q) return false;
        out.push_back(cand);
        auto [qc, qp] = content_primitive(*q);
        (void)qc;
        f = qp;
        std::vector<int> rest;
        for (int i : live)
            if (std::find(subset.begin(), subset.end(), i) == subset.end())
                rest.push_back(i);
        live = rest;
        return true;
    };

    bool progress = true;
    while (progress && live.size() > 0) {
        progress = false;
        size_t r = live.size();
        for (size_t s = 1; !progress && 2 * s <= r; ++s) {
            // Enumerate s-subsets with an incremental trailing-coefficient
            // product for cheap pruning.
            std::vector<int> idx(s);
            std::vector<Int> tcprod(s + 1);
            tcprod[0] = lc(f);
            Int lim = lc(f) * f[0];
            std::function<bool(size_t, size_t)> rec = [&](size_t pos, size_t start) -> bool {
                if (pos == s) {
                    Int tc = symmetric(tcprod[s], M);
                    if (tc == 0 || !mpz_divisible_p(lim.get_mpz_t(), tc.get_mpz_t()))
                        return false;
                    std::vector<int> subset(s);
                    for (size_t i = 0; i < s; ++i) subset[i] = live[idx[i]];
                    return try_subset(subset);
                }
                for (size_t i = start; i + (s - pos) <= live.size(); ++i) {
                    idx[pos] = static_cast<int>(i);
                    const ZPoly& g = lifted[live[i]];
                    tcprod[pos + 1] = tcprod[pos] * (g.empty() ? Int(0) : g[0]) % M;
                    if (rec(pos + 1, i + 1)) return true;
                }
                return false;
            };
            if (rec(0, 0)) progress = true;
        }
        if (!progress) break;
    }
    if (deg(f) > 0) out.push_back(content_primitive(f).second);
    return out;
}

}  // namespace arithdyn::zx
