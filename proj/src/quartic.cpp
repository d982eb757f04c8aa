#include "safeguard/quartic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "safeguard/errors.hpp"

namespace safeguard {
namespace {

constexpr double kPi_ = 3.141592653589793238462643383279502884;

double cubic_eval(double p, double q, double r, double y) {
    return ((y + p) * y + q) * y + r;
}

double cubic_deriv(double p, double q, double y) {
    return (3.0 * y + 2.0 * p) * y + q;
}

void polish_cubic_root(double p, double q, double r, double& y) {
    for (int it = 0; it < 8; ++it) {
        const double f = cubic_eval(p, q, r, y);
        const double df = cubic_deriv(p, q, y);
        if (df == 0.0) break;
        const double step = f / df;
        y -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(y))) break;
    }
}

// Real roots of y^2 + b y + c, stable w.r.t. cancellation. Negative
// discriminants yield no roots; even-multiplicity cases are recovered
// elsewhere from the quartic's extrema.
void quadratic_real_roots(double b, double c, std::vector<double>& out) {
    const double disc = b * b - 4.0 * c;
    if (disc < 0.0) return;
    const double s = std::sqrt(disc);
    if (b == 0.0) {
        out.push_back(-0.5 * s);
        out.push_back(0.5 * s);
        return;
    }
    const double t = -0.5 * (b + std::copysign(s, b));
    out.push_back(t);
    out.push_back(t == 0.0 ? 0.0 : c / t);
}

// Discriminant of the monic quartic x^4 + b x^3 + c x^2 + d x + e.
double quartic_discriminant(double b, double c, double d, double e) {
    const double b2 = b * b, c2 = c * c, d2 = d * d, e2 = e * e;
    return 256.0 * e2 * e - 192.0 * b * d * e2 - 128.0 * c2 * e2 +
           144.0 * c * d2 * e - 27.0 * d2 * d2 + 144.0 * b2 * c * e2 -
           6.0 * b2 * d2 * e - 80.0 * b * c2 * d * e + 18.0 * b * c * d2 * d +
           16.0 * c2 * c2 * e - 4.0 * c2 * c * d2 - 27.0 * b2 * b2 * e2 +
           18.0 * b2 * b * c * d * e - 4.0 * b2 * b * d2 * d - 4.0 * b2 * c2 * c * e +
           b2 * c2 * d2;
}

// Evaluation-noise scale of the quartic at x.
double eval_scale(const MonicQuartic& f, double x) {
    const double ax = std::abs(x);
    return 1.0 + ((ax + std::abs(f.c3)) * ax + std::abs(f.c2)) * ax * ax +
           std::abs(f.c1) * ax + std::abs(f.c0);
}

void newton_polish(const MonicQuartic& f, double& x) {
    double best = x;
    double best_f = std::abs(f.eval(x));
    double cur = x;
    for (int it = 0; it < 20; ++it) {
        const double fv = f.eval(cur);
        const double dv = f.deriv(cur);
        if (dv == 0.0) break;
        const double step = fv / dv;
        cur -= step;
        if (!std::isfinite(cur)) break;
        const double cf = std::abs(f.eval(cur));
        if (cf < best_f) {
            best_f = cf;
            best = cur;
        }
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(cur))) break;
    }
    x = best;
}

void bisect_bracket(const MonicQuartic& f, double lo, double hi, std::vector<double>& out) {
    double flo = f.eval(lo);
    if (flo == 0.0) {
        out.push_back(lo);
        return;
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fm = f.eval(mid);
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((flo < 0.0) == (fm < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-16 * (1.0 + std::abs(mid))) break;
    }
    out.push_back(0.5 * (lo + hi));
}

}  // namespace

std::vector<double> cubic_real_roots(double p, double q, double r) {
    // depress with y = t - p/3
    const double P = q - p * p / 3.0;
    const double Q = 2.0 * p * p * p / 27.0 - p * q / 3.0 + r;
    std::vector<double> roots;
    const double disc = -4.0 * P * P * P - 27.0 * Q * Q;
    if (std::abs(P) < 1e-300 && std::abs(Q) < 1e-300) {
        roots.push_back(-p / 3.0);
    } else if (disc > 0.0) {
        // three real roots, trigonometric form (P < 0 here)
        const double m = 2.0 * std::sqrt(-P / 3.0);
        double arg = 3.0 * Q / (P * m);
        arg = std::clamp(arg, -1.0, 1.0);
        const double phi = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k) {
            roots.push_back(m * std::cos(phi - 2.0 * kPi_ * k / 3.0) - p / 3.0);
        }
    } else {
        const double D = Q * Q / 4.0 + P * P * P / 27.0;
        const double sd = std::sqrt(std::max(0.0, D));
        const double u = std::cbrt(-Q / 2.0 + sd);
        const double v = std::cbrt(-Q / 2.0 - sd);
        roots.push_back(u + v - p / 3.0);
    }
    for (double& y : roots) polish_cubic_root(p, q, r, y);
    std::sort(roots.begin(), roots.end());
    return roots;
}

double solve_cubic_resolvent(double p, double q, double r) {
    if (!std::isfinite(p) || !std::isfinite(q) || !std::isfinite(r)) {
        throw DegenerateCoefficients("non-finite cubic coefficient");
    }
    // Ferrari's factorization wants the positive root, which is always the
    // largest real one when the constant term is negative.
    return cubic_real_roots(p, q, r).back();
}

RealRoots solve_monic_quartic(const MonicQuartic& f) {
    if (!std::isfinite(f.c3) || !std::isfinite(f.c2) || !std::isfinite(f.c1) ||
        !std::isfinite(f.c0)) {
        throw DegenerateCoefficients("non-finite quartic coefficient");
    }

    const double coeff_mag =
        std::max({1.0, std::abs(f.c3), std::abs(f.c2), std::abs(f.c1), std::abs(f.c0)});

    // depress with x = y - c3/4:  y^4 + p y^2 + q y + r
    const double b = f.c3;
    const double p = f.c2 - 3.0 * b * b / 8.0;
    const double q = f.c1 - b * f.c2 / 2.0 + b * b * b / 8.0;
    const double r = f.c0 - b * f.c1 / 4.0 + b * b * f.c2 / 16.0 - 3.0 * b * b * b * b / 256.0;

    const double q_scale =
        1.0 + std::abs(f.c1) + std::abs(b * f.c2) / 2.0 + std::abs(b * b * b) / 8.0;

    std::vector<double> ys;
    ys.reserve(8);
    if (std::abs(q) <= 1e-14 * q_scale) {
        // biquadratic: z^2 + p z + r with y = +-sqrt(z)
        std::vector<double> zs;
        quadratic_real_roots(p, r, zs);
        for (double z : zs) {
            if (z < 0.0) continue;
            const double s = std::sqrt(z);
            ys.push_back(-s);
            ys.push_back(s);
        }
    } else {
        // resolvent  m^3 + p m^2 + (p^2/4 - r) m - q^2/8 = 0, take m > 0
        double m = solve_cubic_resolvent(p, p * p / 4.0 - r, -q * q / 8.0);
        m = std::max(m, 0.0);
        if (2.0 * m <= 1e-300) {
            std::vector<double> zs;
            quadratic_real_roots(p, r, zs);
            for (double z : zs) {
                if (z < 0.0) continue;
                const double s = std::sqrt(z);
                ys.push_back(-s);
                ys.push_back(s);
            }
        } else {
            const double s = std::sqrt(2.0 * m);
            const double half = p / 2.0 + m;
            const double shift = q / (2.0 * s);
            quadratic_real_roots(s, half - shift, ys);
            quadratic_real_roots(-s, half + shift, ys);
        }
    }

    std::vector<double> candidates;
    candidates.reserve(12);
    for (double y : ys) candidates.push_back(y - b / 4.0);

    // Extrema of the quartic catch even-multiplicity roots that closed-form
    // plus bisection both miss.
    for (double e : cubic_real_roots(0.75 * f.c3, 0.5 * f.c2, 0.25 * f.c1)) {
        if (std::abs(f.eval(e)) <= 1e-12 * eval_scale(f, e)) candidates.push_back(e);
    }

    // Near-degenerate discriminant: closed form loses digits, so also sweep a
    // bracketing grid over the Cauchy bound.
    const double disc = quartic_discriminant(f.c3, f.c2, f.c1, f.c0);
    const double disc_scale = std::pow(1.0 + coeff_mag, 6);
    if (std::abs(disc) < 1e-12 * disc_scale) {
        const double bound = 1.0 + coeff_mag;
        const int n = 64;
        double x0 = -bound;
        double f0 = f.eval(x0);
        for (int i = 1; i <= n; ++i) {
            const double x1 = -bound + 2.0 * bound * i / n;
            const double f1 = f.eval(x1);
            if (f0 == 0.0) candidates.push_back(x0);
            if ((f0 < 0.0) != (f1 < 0.0)) bisect_bracket(f, x0, x1, candidates);
            x0 = x1;
            f0 = f1;
        }
        if (f0 == 0.0) candidates.push_back(x0);
    }

    for (double& x : candidates) newton_polish(f, x);

    // keep only verified roots
    std::vector<double> roots;
    for (double x : candidates) {
        if (std::isfinite(x) && std::abs(f.eval(x)) <= 1e-9 * std::max(1.0, coeff_mag)) {
            roots.push_back(x);
        }
    }
    std::sort(roots.begin(), roots.end());

    // collapse multiplicities
    RealRoots out;
    for (double x : roots) {
        if (!out.empty() && std::abs(x - out.back()) <= 1e-6 * std::max(1.0, std::abs(x))) {
            if (std::abs(f.eval(x)) < std::abs(f.eval(out.back()))) out.back() = x;
        } else {
            out.push_back(x);
        }
    }
    return out;
}

}  // namespace safeguard
