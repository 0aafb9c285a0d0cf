#pragma once

#include <functional>
#include <string>
#include <vector>

#include "opineq/interval.hpp"
#include "opineq/matrix.hpp"

namespace opineq {

// Slack for order comparisons: rel scales with the operands, abs is a floor.
struct Tolerance {
    double rel = 1e-9;
    double abs = 1e-12;

    Tolerance() = default;
    Tolerance(double rel_, double abs_) : rel(rel_), abs(abs_) {
        if (rel < 0.0 || abs < 0.0) throw ArgumentOutOfRange("Tolerance: need rel, abs >= 0");
    }
};

// Eigenvalues below this are rejected for inverse/log/fractional powers.
inline constexpr double kPdThreshold = 1e-10;

// Eigendecomposition with eigenvalues sorted descending; column j of
// eigenvectors pairs with eigenvalues[j].
struct Spectrum {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;
};

// Cyclic Jacobi for small dense symmetric matrices. Fixed sweep order
// (p < q row-major), off-diagonal convergence threshold 1e-13 * ||A||_F,
// sweep cap 100. Deterministic for a fixed input, including the
// descending sort (stable, ties keep rotation order).
Spectrum eig_sym(const SymMatrix& a);

double lambda_min(const SymMatrix& a);
double lambda_max(const SymMatrix& a);
double spectral_norm(const SymMatrix& a);

// V diag(f(lambda)) V^T without any domain checking.
SymMatrix apply_eigenmap(const SymMatrix& a, const std::function<double(double)>& f);

// Functional calculus with the domain contract: every eigenvalue must lie
// strictly inside `domain`, otherwise DomainViolation listing the offenders.
SymMatrix apply_fn(const SymMatrix& a, const std::function<double(double)>& f,
                   const Interval& domain);

// A^p. Nonnegative integer p works for any symmetric A; anything else
// requires positive definite input (eigenvalues > pd_tol).
SymMatrix mat_pow(const SymMatrix& a, double p, double pd_tol = kPdThreshold);
SymMatrix mat_log(const SymMatrix& a, double pd_tol = kPdThreshold);
SymMatrix mat_exp(const SymMatrix& h);
SymMatrix mat_inv(const SymMatrix& a, double pd_tol = kPdThreshold);

enum class Order { LE, GE, EQ, INCOMPARABLE };

std::string order_name(Order o);

struct OrderResult {
    Order order;
    // lambda_min(B - A) / max(1, ||A||_2, ||B||_2): positive when A <= B
    // holds with room, ~0 on the boundary.
    double margin;
};

// Loewner comparison of A and B with slack tol.abs + tol.rel * max|B-A|.
OrderResult loewner_cmp(const SymMatrix& a, const SymMatrix& b, const Tolerance& tol = {});

bool is_pd(const SymMatrix& a, const Tolerance& tol = Tolerance(0.0, kPdThreshold));

}  // namespace opineq
