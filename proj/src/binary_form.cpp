#include "arithdyn/binary_form.hpp"

#include "arithdyn/orbit.hpp"

#include <algorithm>
#include <sstream>

namespace arithdyn {

namespace {

// First nonzero coefficient (c_0 side); forms are never all-zero.
int first_nonzero(const std::vector<Int>& c) {
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) return static_cast<int>(i);
    return -1;
}

}  // namespace

std::pair<Int, BinaryForm> content_primitive(const std::vector<Int>& raw) {
    int fn = first_nonzero(raw);
    if (fn < 0) throw math_error("zero binary form");
    Int g = 0;
    for (const auto& x : raw) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (raw[fn] < 0) g = -g;
    std::vector<Int> c = raw;
    for (auto& x : c) x /= g;
    BinaryForm f;
    f = BinaryForm(std::move(c));
    return {g, f};
}

BinaryForm::BinaryForm(std::vector<Int> coeffs) {
    int fn = first_nonzero(coeffs);
    if (fn < 0) throw math_error("zero binary form");
    Int g = 0;
    for (const auto& x : coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (coeffs[fn] < 0) g = -g;
    for (auto& x : coeffs) x /= g;
    c_ = std::move(coeffs);
}

BinaryForm BinaryForm::raw(std::vector<Int> coeffs) {
    if (first_nonzero(coeffs) < 0) throw math_error("zero binary form");
    BinaryForm f;
    f.c_ = std::move(coeffs);
    return f;
}

BinaryForm BinaryForm::point_class(const ProjPoint& p) {
    // bX - aY vanishes at [a:b]; for [1:0] this is Y.
    return BinaryForm({p.x1, -p.x0});
}

BinaryForm BinaryForm::homogenize(const zx::Poly& p) {
    int d = zx::deg(p);
    if (d < 0) throw math_error("homogenize: zero polynomial");
    std::vector<Int> c(d + 1);
    for (int i = 0; i <= d; ++i) c[i] = p[d - i];
    return BinaryForm(std::move(c));
}

Int BinaryForm::evaluate(const ProjPoint& p) const {
    return evaluate(p.x0, p.x1);
}

Int BinaryForm::evaluate(const Int& x, const Int& y) const {
    // Horner in x with a running power of y: F = sum c_i x^(d-i) y^i.
    Int r = 0;
    Int ypow = 1;
    int d = degree();
    for (int i = 0; i <= d; ++i) {
        r = r * x + c_[i] * ypow;
        if (i < d) ypow *= y;
    }
    return r;
}

int BinaryForm::y_multiplicity() const {
    return first_nonzero(c_);
}

zx::Poly BinaryForm::dehomogenize() const {
    int k = y_multiplicity();
    int d = degree();
    // F/Y^k = sum_{i>=k} c_i X^(d-i) Y^(i-k); as a poly in x the coefficient
    // of x^(d-i) is c_i.
    zx::Poly p(d - k + 1, Int(0));
    for (int i = k; i <= d; ++i) p[d - i] = c_[i];
    return p;
}

ProjPoint BinaryForm::root() const {
    if (degree() != 1) throw math_error("root: form is not linear");
    // c0*X + c1*Y vanishes at [-c1 : c0].
    return ProjPoint(Rat(-c_[1]), Rat(c_[0]));
}

bool BinaryForm::operator<(const BinaryForm& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

std::string BinaryForm::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i].get_str();
    }
    os << ")";
    return os.str();
}

Int form_resultant(const BinaryForm& f, const BinaryForm& g) {
    int kf = f.y_multiplicity();
    int kg = g.y_multiplicity();
    if (kf > 0 && kg > 0) return 0;  // both vanish at infinity
    zx::Poly pf = f.dehomogenize();
    zx::Poly pg = g.dehomogenize();
    // Res(Y^kf * Ftilde, Y^kg * Gtilde): each Y against the other side
    // contributes that side's value at [1:0], i.e. its leading x-coefficient.
    Int r = zx::resultant(pf, pg);
    if (kf > 0) {
        Int lcg;
        mpz_pow_ui(lcg.get_mpz_t(), zx::lc(pg).get_mpz_t(), kf);
        r *= lcg;
    }
    if (kg > 0) {
        Int lcf;
        mpz_pow_ui(lcf.get_mpz_t(), zx::lc(pf).get_mpz_t(), kg);
        r *= lcf;
    }
    return r;
}

FactoredForm factor_form(const BinaryForm& f) {
    if (f.degree() < 1) throw math_error("factor_form: degree must be >= 1");
    FactoredForm out;
    int k = f.y_multiplicity();
    zx::Poly p = f.dehomogenize();
    auto fac = zx::factor(p);
    out.unit_content = fac.unit_content;
    if (k > 0) out.factors.emplace_back(BinaryForm({Int(0), Int(1)}), k);  // Y^k
    for (auto& [poly, mult] : fac.factors)
        out.factors.emplace_back(BinaryForm::homogenize(poly), mult);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<Int> expand(const FactoredForm& f) {
    // Multiply out in x with explicit Y bookkeeping.
    zx::Poly acc{f.unit_content};
    int ypow = 0;
    int total_deg = 0;
    for (const auto& [form, mult] : f.factors) {
        int ky = form.y_multiplicity();
        zx::Poly p = form.dehomogenize();
        for (int m = 0; m < mult; ++m) {
            acc = zx::mul(acc, p);
            ypow += ky;
        }
        total_deg += mult * form.degree();
    }
    // acc is the x-polynomial of the product divided by Y^ypow; rebuild the
    // coefficient list of the degree total_deg form.
    std::vector<Int> c(total_deg + 1, Int(0));
    int dx = zx::deg(acc);
    for (int j = 0; j <= dx; ++j) c[total_deg - j] = acc[j];
    return c;
}

BinaryForm pullback_form(const BinaryForm& f, const RationalMap& phi) {
    // F(N, M) computed by Horner over Z[x] pairs: treat N, M as x-polys with
    // a shared Y power. Both are forms of equal degree d, so represent them
    // by their full coefficient lists and do polynomial composition in two
    // variables via accumulation.
    int df = f.degree();
    int d = phi.degree();
    // Work with forms as polynomials in X with Y implicit: coefficient lists
    // N_0..N_d (X-descending). Multiplication of two such lists of degrees
    // p,q yields degree p+q with convolution.
    const auto& cf = f.coeffs();
    const auto& N = phi.numerator.coeffs();
    const auto& M = phi.denominator.coeffs();
    auto mulv = [](const std::vector<Int>& a, const std::vector<Int>& b) {
        std::vector<Int> r(a.size() + b.size() - 1, Int(0));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j)
                if (b[j] != 0) r[i + j] += a[i] * b[j];
        }
        return r;
    };
    // Horner in N: result = (((c0*N + c1*M)*N + c2*M^2*?)...) -- do it the
    // plain way instead: sum c_i N^(df-i) M^i, with cached powers.
    std::vector<std::vector<Int>> npow(df + 1), mpow(df + 1);
    npow[0] = {Int(1)};
    mpow[0] = {Int(1)};
    for (int i = 1; i <= df; ++i) {
        npow[i] = mulv(npow[i - 1], N);
        mpow[i] = mulv(mpow[i - 1], M);
    }
    std::vector<Int> acc(df * d + 1, Int(0));
    for (int i = 0; i <= df; ++i) {
        if (cf[i] == 0) continue;
        auto term = mulv(npow[df - i], mpow[i]);
        for (size_t j = 0; j < term.size(); ++j) acc[j] += cf[i] * term[j];
    }
    return BinaryForm(std::move(acc));
}

}  // namespace arithdyn
