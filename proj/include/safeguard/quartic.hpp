#pragma once

#include <vector>

namespace safeguard {

// Coefficients of the monic quartic  L^4 + c3 L^3 + c2 L^2 + c1 L + c0.
struct MonicQuartic {
    double c3 = 0.0;
    double c2 = 0.0;
    double c1 = 0.0;
    double c0 = 0.0;

    double eval(double x) const {
        return (((x + c3) * x + c2) * x + c1) * x + c0;
    }
    double deriv(double x) const {
        return ((4.0 * x + 3.0 * c3) * x + 2.0 * c2) * x + c1;
    }
};

// Sorted real roots with multiplicities collapsed. Roots closer than about
// 1e-6 (relative) are merged, so planted roots separated by >= 1e-4 stay
// distinct; below that they may merge.
using RealRoots = std::vector<double>;

// One real root of the monic cubic  y^3 + p y^2 + q y + r  (the largest one,
// which is the positive root Ferrari's factorization needs).
double solve_cubic_resolvent(double p, double q, double r);

// All real roots of the monic cubic, ascending.
std::vector<double> cubic_real_roots(double p, double q, double r);

// Every real root of the quartic via Ferrari's closed form, Newton-polished
// on the original polynomial. Near-degenerate discriminants fall back to
// sign-change bisection on a bracketing grid; even-multiplicity roots are
// recovered from the extrema of the quartic.
// Throws DegenerateCoefficients if any coefficient is non-finite.
RealRoots solve_monic_quartic(const MonicQuartic& poly);

}  // namespace safeguard
