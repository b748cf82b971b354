#include <mpfr.h>

#include <cstdlib>
#include <vector>

#include "singer/coxeter.hpp"

namespace singer {

namespace {

// Minimal RAII wrapper over mpfr_t; just enough arithmetic for 4x4 minors.
class Real {
public:
    explicit Real(int prec) {
        mpfr_init2(x_, prec);
        mpfr_set_zero(x_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    Real& operator=(const Real& o) {
        mpfr_set_prec(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
        return *this;
    }
    ~Real() { mpfr_clear(x_); }

    void set_si(long v) { mpfr_set_si(x_, v, MPFR_RNDN); }
    void set_ten_pow(long e) {
        mpfr_set_si(x_, 10, MPFR_RNDN);
        mpfr_pow_si(x_, x_, e, MPFR_RNDN);
    }
    void set_neg_cos_pi_over(long m) {
        mpfr_const_pi(x_, MPFR_RNDN);
        mpfr_div_si(x_, x_, m, MPFR_RNDN);
        mpfr_cos(x_, x_, MPFR_RNDN);
        mpfr_neg(x_, x_, MPFR_RNDN);
    }

    friend Real operator+(const Real& a, const Real& b) {
        Real r(a.prec());
        mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r(a.prec());
        mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r(a.prec());
        mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }

    // sign with a zero window: -1, 0, +1 for x < -eps, |x| <= eps, x > eps
    int certified_sign(const Real& eps) const {
        Real a(prec());
        mpfr_abs(a.x_, x_, MPFR_RNDN);
        if (mpfr_cmp(a.x_, eps.x_) <= 0) return 0;
        return mpfr_sgn(x_) > 0 ? 1 : -1;
    }

    int prec() const { return static_cast<int>(mpfr_get_prec(x_)); }

private:
    mutable mpfr_t x_;
};

int read_precision_env() {
    const char* env = std::getenv("SINGER_PRECISION_BITS");
    if (!env) return 256;
    long v = std::strtol(env, nullptr, 10);
    if (v < 64) v = 64;
    if (v > 65536) v = 65536;
    return static_cast<int>(v);
}

Real det3(const std::vector<std::vector<Real>>& g, int a, int b, int c) {
    return g[a][a] * (g[b][b] * g[c][c] - g[b][c] * g[c][b]) -
           g[a][b] * (g[b][a] * g[c][c] - g[b][c] * g[c][a]) +
           g[a][c] * (g[b][a] * g[c][b] - g[b][b] * g[c][a]);
}

Real principal_minor(const std::vector<std::vector<Real>>& g, const int* idx, int k, int prec) {
    Real det(prec);
    switch (k) {
        case 1:
            det = g[idx[0]][idx[0]];
            break;
        case 2:
            det = g[idx[0]][idx[0]] * g[idx[1]][idx[1]] - g[idx[0]][idx[1]] * g[idx[1]][idx[0]];
            break;
        case 3:
            det = det3(g, idx[0], idx[1], idx[2]);
            break;
        case 4: {
            // Laplace expansion along the first row
            det.set_si(0);
            const int r[3] = {idx[1], idx[2], idx[3]};
            for (int col = 0; col < 4; ++col) {
                int cols[3];
                int t = 0;
                for (int j = 0; j < 4; ++j)
                    if (j != col) cols[t++] = idx[j];
                Real m3 = g[r[0]][cols[0]] * (g[r[1]][cols[1]] * g[r[2]][cols[2]] - g[r[1]][cols[2]] * g[r[2]][cols[1]]) -
                          g[r[0]][cols[1]] * (g[r[1]][cols[0]] * g[r[2]][cols[2]] - g[r[1]][cols[2]] * g[r[2]][cols[0]]) +
                          g[r[0]][cols[2]] * (g[r[1]][cols[0]] * g[r[2]][cols[1]] - g[r[1]][cols[1]] * g[r[2]][cols[0]]);
                Real term = g[idx[0]][idx[col]] * m3;
                if (col % 2 == 0)
                    det = det + term;
                else
                    det = det - term;
            }
            break;
        }
        default:
            throw Error("minor size out of range");
    }
    return det;
}

}  // namespace

int gram_precision_bits() {
    static int bits = read_precision_env();
    return bits;
}

GramClass gram_class_via_minors(const LabelMatrix& lm) {
    const int n = lm.size();
    if (n > 4) throw SubsetTooLarge("gram_class beyond size 4");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!lm.get(i, j).is_finite()) throw InfiniteLabel("numeric Gram route needs finite labels");
    if (n == 0) return {GramClass::Kind::PositiveDefinite, 0};

    const int prec = gram_precision_bits();
    std::vector<std::vector<Real>> g(n, std::vector<Real>(n, Real(prec)));
    for (int i = 0; i < n; ++i) {
        g[i][i].set_si(1);
        for (int j = 0; j < n; ++j)
            if (i != j) g[i][j].set_neg_cos_pi_over(lm.finite(std::min(i, j), std::max(i, j)));
    }

    // A minor sum is declared zero when |value| < 10^-20; far above the
    // rounding error at >= 256 bits and far below the smallest non-zero
    // minor for labels capped at 10^6.
    Real eps(prec);
    eps.set_ten_pow(-20);

    // e_k = sum of all k x k principal minors = elementary symmetric
    // polynomial of the (real) eigenvalues.  A symmetric matrix has no
    // negative eigenvalue iff all e_k >= 0, and the number of trailing
    // vanishing coefficients is the kernel dimension.
    int sign[5] = {1, 0, 0, 0, 0};
    for (int k = 1; k <= n; ++k) {
        Real ek(prec);
        int idx[4];
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != k) continue;
            int t = 0;
            for (int b = 0; b < n; ++b)
                if (mask & (1u << b)) idx[t++] = b;
            ek = ek + principal_minor(g, idx, k, prec);
        }
        sign[k] = ek.certified_sign(eps);
    }

    for (int k = 1; k <= n; ++k)
        if (sign[k] < 0) return {GramClass::Kind::Indefinite, 0};
    int corank = 0;
    for (int k = n; k >= 1 && sign[k] == 0; --k) ++corank;
    for (int k = 1; k <= n - corank; ++k)
        if (sign[k] == 0) throw Error("inconclusive sign pattern in Gram minors; raise SINGER_PRECISION_BITS");
    if (corank == 0) return {GramClass::Kind::PositiveDefinite, 0};
    return {GramClass::Kind::PositiveSemidefinite, corank};
}

}  // namespace singer
