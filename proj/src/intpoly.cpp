#include "arithdyn/intpoly.hpp"

#include <sstream>

namespace arithdyn::zx {

int deg(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_zero(const Poly& p) { return deg(p) < 0; }

const Int& lc(const Poly& p) {
    static const Int zero = 0;
    int d = deg(p);
    return d < 0 ? zero : p[d];
}

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    if (is_zero(a) || is_zero(b)) return {};
    Poly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

Poly mul_scalar(const Poly& a, const Int& c) {
    if (c == 0) return {};
    Poly r = a;
    for (auto& x : r) x *= c;
    return r;
}

Poly derivative(const Poly& a) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
    trim(r);
    return r;
}

Int eval(const Poly& a, const Int& x) {
    Int r = 0;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) r = r * x + a[i];
    return r;
}

Rat eval(const Poly& a, const Rat& x) {
    Rat r = 0;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) r = r * x + a[i];
    return r;
}

Int eval_homog(const Poly& a, const Int& x, const Int& y) {
    int d = deg(a);
    if (d < 0) return 0;
    // Horner in x with a running power of y.
    Int r = 0;
    Int ypow = 1;
    for (int i = d; i >= 0; --i) {
        r = r * x + a[i] * ypow;
        if (i > 0) ypow *= y;
    }
    return r;
}

Int content(const Poly& a) {
    Int g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::pair<Int, Poly> content_primitive(const Poly& a) {
    int d = deg(a);
    if (d < 0) throw math_error("content of the zero polynomial");
    Int c = content(a);
    if (a[d] < 0) c = -c;
    Poly p(a.begin(), a.begin() + d + 1);
    for (auto& x : p) x /= c;
    return {c, p};
}

std::optional<Poly> div_exact(const Poly& a, const Poly& d) {
    int dd = deg(d);
    if (dd < 0) throw math_error("division by zero polynomial");
    int da = deg(a);
    if (da < 0) return Poly{};
    if (da < dd) return std::nullopt;
    Poly rem(a.begin(), a.begin() + da + 1);
    Poly q(da - dd + 1, Int(0));
    const Int& l = d[dd];
    for (int k = da - dd; k >= 0; --k) {
        Int& head = rem[k + dd];
        if (head == 0) continue;
        if (!mpz_divisible_p(head.get_mpz_t(), l.get_mpz_t())) return std::nullopt;
        Int c = head / l;
        q[k] = c;
        for (int i = 0; i <= dd; ++i) rem[k + i] -= c * d[i];
    }
    if (!is_zero(rem)) return std::nullopt;
    trim(q);
    return q;
}

bool divides(const Poly& d, const Poly& a) {
    return div_exact(a, d).has_value();
}

namespace {

// lc(d)^(deg a - deg d + 1) * a = q*d + r; returns r. Requires deg a >= deg d.
Poly pseudo_rem(const Poly& a, const Poly& d) {
    int da = deg(a), dd = deg(d);
    Poly rem(a.begin(), a.begin() + da + 1);
    const Int& l = d[dd];
    for (int k = da - dd; k >= 0; --k) {
        // rem <- l*rem - rem[k+dd] * x^k * d
        Int head = rem[k + dd];
        for (int i = 0; i < k + dd; ++i) rem[i] *= l;
        rem[k + dd] = 0;
        for (int i = 0; i < dd; ++i) rem[k + i] -= head * d[i];
    }
    trim(rem);
    return rem;
}

Int pow_int(const Int& b, long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (is_zero(a) && is_zero(b)) return {};
    if (is_zero(a)) return content_primitive(b).second;
    if (is_zero(b)) return content_primitive(a).second;
    Int ca = content(a), cb = content(b);
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    Poly u = content_primitive(a).second;
    Poly v = content_primitive(b).second;
    if (deg(u) < deg(v)) std::swap(u, v);
    // Primitive PRS.
    while (!is_zero(v)) {
        Poly r = pseudo_rem(u, v);
        u = std::move(v);
        if (is_zero(r)) {
            v = {};
        } else {
            v = content_primitive(r).second;
        }
    }
    Poly g = mul_scalar(u, cg);
    if (lc(g) < 0)
        for (auto& x : g) x = -x;
    return g;
}

Int resultant(const Poly& a, const Poly& b) {
    // Subresultant PRS, Cohen Alg. 3.3.7; exact with sign.
    int da = deg(a), db = deg(b);
    if (da < 0 || db < 0) return 0;
    if (da == 0 && db == 0) return 1;
    Poly A = a, B = b;
    int s = 1;
    if (da < db) {
        std::swap(A, B);
        if ((da & 1) && (db & 1)) s = -s;
    }
    if (deg(B) == 0) return s * pow_int(B[0], deg(A));
    auto [ca, Ap] = content_primitive(A);
    auto [cb, Bp] = content_primitive(B);
    Int t = pow_int(ca, deg(Bp)) * pow_int(cb, deg(Ap));
    A = std::move(Ap);
    B = std::move(Bp);
    Int g = 1, h = 1;
    while (true) {
        int dA = deg(A), dB = deg(B);
        long delta = dA - dB;
        if ((dA & 1) && (dB & 1)) s = -s;
        Poly R = pseudo_rem(A, B);
        A = std::move(B);
        if (is_zero(R)) return 0;  // common factor
        Int divisor = g * pow_int(h, delta);
        B.assign(R.size(), Int(0));
        for (size_t i = 0; i < R.size(); ++i) B[i] = R[i] / divisor;
        trim(B);
        g = lc(A);
        if (delta >= 1) {
            Int hnew = pow_int(g, delta);
            if (delta > 1) hnew /= pow_int(h, delta - 1);
            h = hnew;
        }
        if (deg(B) == 0) break;
    }
    int dA = deg(A);
    Int res = pow_int(B[0], dA);
    if (dA > 1) res /= pow_int(h, dA - 1);
    return s * t * res;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& a) {
    // Yun's algorithm on the primitive part.
    auto [c, f] = content_primitive(a);
    (void)c;
    std::vector<std::pair<Poly, int>> out;
    if (deg(f) == 0) return out;
    Poly fp = derivative(f);
    Poly g = gcd(f, fp);
    Poly b = *div_exact(f, g);
    Poly d = sub(*div_exact(fp, g), derivative(b));
    int i = 1;
    while (deg(b) > 0) {
        Poly h = gcd(b, d);
        if (deg(h) > 0) out.emplace_back(h, i);
        b = *div_exact(b, h);
        d = sub(*div_exact(d, h), derivative(b));
        ++i;
    }
    return out;
}

Factorization factor(const Poly& a) {
    if (is_zero(a)) throw math_error("factor of the zero polynomial");
    auto [c, f] = content_primitive(a);
    Factorization out;
    out.unit_content = c;
    if (deg(f) == 0) return out;
    for (auto& [sf, mult] : squarefree_decomposition(f)) {
        for (auto& irr : factor_squarefree(sf)) out.factors.emplace_back(std::move(irr), mult);
    }
    // Canonical order: degree, then coefficients low-to-high.
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& x, const auto& y) {
                  if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
                  for (size_t i = x.first.size(); i-- > 0;)
                      if (x.first[i] != y.first[i]) return x.first[i] < y.first[i];
                  return x.second < y.second;
              });
    return out;
}

std::string to_string(const Poly& a) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i].get_str();
    }
    os << "]";
    return os.str();
}

}  // namespace arithdyn::zx
