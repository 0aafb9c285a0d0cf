#pragma once

#include <vector>

#include "json.hpp"
#include "opineq/errors.hpp"

namespace opineq {

// Minimal dense real matrix, row-major. General (possibly non-square)
// intermediates only; the public matrix type of the library is SymMatrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0.0) {
        if (rows < 1 || cols < 1) throw ArgumentOutOfRange("Matrix: dims must be >= 1");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
    double& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

// Real symmetric n x n matrix, the stand-in for the Hermitian operators the
// inequalities are stated for. Symmetry is an invariant: every constructor
// that takes raw entries validates it within 1e-12 * max(1, max|entry|).
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int n);  // zero matrix
    static SymMatrix identity(int n);
    static SymMatrix diagonal(const std::vector<double>& d);
    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);
    // Accepts a general matrix that should be symmetric up to roundoff:
    // validates, then stores (M + M^T)/2.
    static SymMatrix from_nearly_symmetric(const Matrix& m, double tol_scale = 1e-9);

    int dim() const { return n_; }
    double operator()(int i, int j) const { return a_[size_t(i) * n_ + j]; }
    void set(int i, int j, double x) {  // keeps symmetry
        a_[size_t(i) * n_ + j] = x;
        a_[size_t(j) * n_ + i] = x;
    }

    Matrix full() const;
    std::vector<std::vector<double>> to_rows() const;

    double max_abs() const;
    double frobenius() const;
    double trace() const;

    SymMatrix operator+(const SymMatrix& rhs) const;
    SymMatrix operator-(const SymMatrix& rhs) const;
    SymMatrix operator*(double c) const;
    friend SymMatrix operator*(double c, const SymMatrix& m) { return m * c; }

    // max |A_ij - B_ij|
    static double max_abs_diff(const SymMatrix& a, const SymMatrix& b);

private:
    int n_ = 0;
    std::vector<double> a_;
};

void require_same_dim(const SymMatrix& a, const SymMatrix& b);

// T * S * T^T, symmetrized. T may be any square matrix of matching size.
SymMatrix congruence(const Matrix& t, const SymMatrix& s);
// R * S * R with symmetric R (e.g. A^{1/2} C A^{1/2}), symmetrized.
SymMatrix sandwich_product(const SymMatrix& r, const SymMatrix& s);
// Commutator norm max|AB - BA|_ij.
double commutator_max_abs(const SymMatrix& a, const SymMatrix& b);

// Fixture format: {"dim": n, "rows": [[...], ...]} with row-major doubles.
// nlohmann/json round-trips doubles exactly, which the fixtures rely on.
nlohmann::json to_json(const SymMatrix& m);
SymMatrix sym_from_json(const nlohmann::json& j);

}  // namespace opineq
