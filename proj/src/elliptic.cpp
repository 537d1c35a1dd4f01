#include "arithdyn/elliptic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace arithdyn {

namespace {

using QPoly = std::vector<Rat>;  // low-to-high in x

int qdeg(const QPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

QPoly qscale(QPoly a, const Rat& c) {
    for (auto& x : a) x *= c;
    return a;
}

QPoly cubic_poly(const WeierstrassCurve& e) {
    return {e.c, e.b, e.a, Rat(1)};
}

// psi_n x-parts (full psi_n = xpart * y for even n), computed with the
// standard b-invariant seeds and doubling recurrences, cached per curve.
const std::vector<QPoly>& psi_xparts(const WeierstrassCurve& e, int nmax) {
    static std::mutex mu;
    static std::map<std::string, std::vector<QPoly>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& ps = cache[e.str()];
    if (static_cast<int>(ps.size()) > nmax) return ps;

    Rat b2 = 4 * e.a;
    Rat b4 = 2 * e.b;
    Rat b6 = 4 * e.c;
    Rat b8 = 4 * e.a * e.c - e.b * e.b;
    if (ps.empty()) {
        ps.push_back({});                   // psi_0 = 0
        ps.push_back({Rat(1)});             // psi_1
        ps.push_back({Rat(2)});             // psi_2 = 2y
        ps.push_back({b8, 3 * b6, 3 * b4, b2, Rat(3)});  // psi_3
        ps.push_back(qscale({b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6,
                             5 * b4, b2, Rat(2)},
                            Rat(2)));       // psi_4 = 2y * (2x^6 + ...)
    }
    QPoly f = cubic_poly(e);
    QPoly f2 = qmul(f, f);
    for (int n = static_cast<int>(ps.size()); n <= nmax; ++n) {
        if (n & 1) {
            int k = (n - 1) / 2;
            QPoly t1 = qmul(ps[k + 2], qmul(ps[k], qmul(ps[k], ps[k])));
            QPoly t2 = qmul(ps[k - 1], qmul(ps[k + 1], qmul(ps[k + 1], ps[k + 1])));
            // The even-parity side carries y^4 = f^2.
            if (k % 2 == 0) t1 = qmul(t1, f2);
            else t2 = qmul(t2, f2);
            ps.push_back(qsub(t1, t2));
        } else {
            int k = n / 2;
            QPoly t1 = qmul(ps[k + 2], qmul(ps[k - 1], ps[k - 1]));
            QPoly t2 = qmul(ps[k - 2], qmul(ps[k + 1], ps[k + 1]));
            ps.push_back(qscale(qmul(ps[k], qsub(t1, t2)), Rat(1, 2)));
        }
    }
    return ps;
}

// Clears denominators of num/den jointly and homogenizes both to degree d
// (the denominator picks up its Y power automatically).
RationalMap make_map(const QPoly& num, const QPoly& den, int d) {
    Int l = 1;
    for (const QPoly* p : {&num, &den})
        for (const auto& q : *p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    auto to_form = [&](const QPoly& p) {
        std::vector<Int> c(d + 1, Int(0));
        int dp = qdeg(p);
        for (int j = 0; j <= d; ++j)
            if (d - j <= dp && d - j >= 0) c[j] = Int(p[d - j] * l);
        return BinaryForm::raw(std::move(c));
    };
    return RationalMap::create(to_form(num), to_form(den));
}

}  // namespace

WeierstrassCurve::WeierstrassCurve(Rat a_, Rat b_, Rat c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (discriminant() == 0) throw math_error("singular curve: cubic has a repeated root");
}

Rat WeierstrassCurve::cubic(const Rat& x) const {
    return ((x + a) * x + b) * x + c;
}

Rat WeierstrassCurve::discriminant() const {
    // disc(x^3 + ax^2 + bx + c)
    return 18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b -
           27 * c * c;
}

std::string WeierstrassCurve::str() const {
    std::ostringstream os;
    os << "y^2=x^3";
    auto term = [&](const Rat& r, const char* m) {
        if (r == 0) return;
        os << (r > 0 ? "+" : "") << r.get_str() << m;
    };
    term(a, "x^2");
    term(b, "x");
    term(c, "");
    return os.str();
}

std::string EPoint::str() const {
    if (identity) return "O";
    return "(" + x.get_str() + "," + y.get_str() + ")";
}

bool on_curve(const WeierstrassCurve& e, const EPoint& p) {
    if (p.identity) return true;
    return p.y * p.y == e.cubic(p.x);
}

EPoint neg(const WeierstrassCurve& e, const EPoint& p) {
    (void)e;
    if (p.identity) return p;
    return EPoint(p.x, -p.y);
}

EPoint add(const WeierstrassCurve& e, const EPoint& p, const EPoint& q) {
    if (!on_curve(e, p) || !on_curve(e, q)) throw math_error("point not on curve");
    if (p.identity) return q;
    if (q.identity) return p;
    Rat lambda;
    if (p.x == q.x) {
        if (p.y == -q.y) return EPoint::O();  // inverse pair, incl. 2-torsion
        lambda = (3 * p.x * p.x + 2 * e.a * p.x + e.b) / (2 * p.y);
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
    }
    Rat x3 = lambda * lambda - e.a - p.x - q.x;
    Rat y3 = lambda * (p.x - x3) - p.y;
    return EPoint(x3, y3);
}

EPoint mul(const WeierstrassCurve& e, const Int& m, const EPoint& p) {
    Int k = abs(m);
    EPoint base = m < 0 ? neg(e, p) : p;
    EPoint acc = EPoint::O();
    long bits = (k == 0) ? 0 : mpz_sizeinbase(k.get_mpz_t(), 2);
    for (long i = bits - 1; i >= 0; --i) {
        acc = add(e, acc, acc);
        if (mpz_tstbit(k.get_mpz_t(), i)) acc = add(e, acc, base);
    }
    return acc;
}

DivPoly division_polynomial(const WeierstrassCurve& e, int n) {
    if (n < 1) throw math_error("division_polynomial: n must be >= 1");
    const auto& ps = psi_xparts(e, n);
    DivPoly d;
    d.xpart = ps[n];
    d.has_y = (n % 2 == 0);
    return d;
}

std::vector<Rat> division_polynomial_squared(const WeierstrassCurve& e, int n) {
    DivPoly d = division_polynomial(e, n);
    QPoly sq = qmul(d.xpart, d.xpart);
    if (d.has_y) sq = qmul(sq, cubic_poly(e));
    return sq;
}

BinaryForm torsion_form(const WeierstrassCurve& e, int n) {
    QPoly sq = division_polynomial_squared(e, n);
    Int l = 1;
    for (const auto& q : sq) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    zx::Poly p(sq.size());
    for (size_t i = 0; i < sq.size(); ++i) p[i] = Int(sq[i] * l);
    zx::trim(p);
    return BinaryForm::homogenize(p);
}

ProjPoint project_x(const EPoint& p) {
    if (p.identity) return ProjPoint::infinity_point();
    return ProjPoint(p.x, Rat(1));
}

LattesMap duplication_lattes(const WeierstrassCurve& e) {
    const Rat& a = e.a;
    const Rat& b = e.b;
    const Rat& c = e.c;
    QPoly num{b * b - 4 * a * c, -8 * c, -2 * b, Rat(0), Rat(1)};
    QPoly den{4 * c, 4 * b, 4 * a, Rat(4)};
    return LattesMap{e, 2, make_map(num, den, 4)};
}

LattesMap mult_m_lattes(const WeierstrassCurve& e, int m) {
    if (m < 2) throw math_error("mult_m_lattes: m must be >= 2");
    const auto& ps = psi_xparts(e, m + 1);
    QPoly f = cubic_poly(e);
    QPoly psim_sq = qmul(ps[m], ps[m]);
    if (m % 2 == 0) psim_sq = qmul(psim_sq, f);
    QPoly cross = qmul(ps[m - 1], ps[m + 1]);
    if (m % 2 == 1) cross = qmul(cross, f);  // psi_{m-1}, psi_{m+1} both carry y
    QPoly num = qsub(qmul(QPoly{Rat(0), Rat(1)}, psim_sq), cross);
    return LattesMap{e, m, make_map(num, psim_sq, m * m)};
}

bool is_torsion(const WeierstrassCurve& e, const EPoint& p, int order_bound) {
    if (!on_curve(e, p)) throw math_error("point not on curve");
    if (p.identity) return true;
    // Lutz-Nagell shortcut on integral models: torsion points are integral.
    if (e.a.get_den() == 1 && e.b.get_den() == 1 && e.c.get_den() == 1 &&
        (p.x.get_den() != 1 || p.y.get_den() != 1))
        return false;
    EPoint acc = p;
    for (int k = 2; k <= order_bound; ++k) {
        acc = add(e, acc, p);
        if (acc.identity) return true;
    }
    return false;
}

bool is_torsion_x_class(const WeierstrassCurve& e, const BinaryForm& g, int n_max) {
    if (g == BinaryForm({Int(0), Int(1)})) return true;  // class of pi(O)
    for (int n = 2; n <= n_max; ++n) {
        if (form_resultant(g, torsion_form(e, n)) == 0) return true;
    }
    return false;
}

FiberReport fiber_classify(const WeierstrassCurve& e, const ProjPoint& q) {
    FiberReport rep;
    rep.target = q;
    if (q.is_infinity()) {
        rep.rational_fiber = true;
        rep.points = {EPoint::O()};
        rep.x_class = BinaryForm({Int(0), Int(1)});
        rep.torsion = true;
        rep.note = "preperiodic target; theorem hypothesis fails";
        return rep;
    }
    Rat xq = q.affine();
    rep.x_class = BinaryForm::point_class(q);
    Rat fx = e.cubic(xq);
    bool square = false;
    Rat yq;
    if (fx == 0) {
        square = true;
        yq = 0;
    } else if (fx > 0) {
        Int num = fx.get_num(), den = fx.get_den();
        Int rn, rd;
        if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
            mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
            mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
            square = true;
            yq = Rat(rn, rd);
        }
    }
    if (square) {
        rep.rational_fiber = true;
        EPoint xi(xq, yq);
        rep.points.push_back(xi);
        if (yq != 0) rep.points.push_back(neg(e, xi));
        rep.torsion = is_torsion(e, xi);
    } else {
        // Conjugate quadratic pair (x_q, +-sqrt(f(x_q))); the x-class decides.
        rep.torsion = is_torsion_x_class(e, rep.x_class);
    }
    if (rep.torsion) {
        rep.note = "preperiodic target; theorem hypothesis fails";
    } else {
        // D = (xi) + (-xi); both fiber points share the x-class, so at class
        // level the divisor is the x-class with weight 2.
        rep.divisor = Divisor::single(rep.x_class, 2);
        rep.note = "target not preperiodic; divisor accepted";
    }
    return rep;
}

}  // namespace arithdyn
