#include "opineq/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace opineq {

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimMismatch("Matrix multiply: inner dims differ");
    Matrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const double aik = (*this)(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out(i, j) += aik * rhs(k, j);
        }
    }
    return out;
}

SymMatrix::SymMatrix(int n) : n_(n), a_(size_t(n) * n, 0.0) {
    if (n < 1) throw ArgumentOutOfRange("SymMatrix: dim must be >= 1");
}

SymMatrix SymMatrix::identity(int n) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& d) {
    SymMatrix m(int(d.size()));
    for (int i = 0; i < m.n_; ++i) m.set(i, i, d[size_t(i)]);
    return m;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = int(rows.size());
    if (n < 1) throw ArgumentOutOfRange("SymMatrix: dim must be >= 1");
    SymMatrix m(n);
    double max_abs = 0.0;
    for (int i = 0; i < n; ++i) {
        if (int(rows[size_t(i)].size()) != n)
            throw DimMismatch("SymMatrix::from_rows: ragged rows");
        for (int j = 0; j < n; ++j) {
            const double x = rows[size_t(i)][size_t(j)];
            if (!std::isfinite(x)) throw ArgumentOutOfRange("SymMatrix: non-finite entry");
            max_abs = std::max(max_abs, std::abs(x));
        }
    }
    const double tol = 1e-12 * std::max(1.0, max_abs);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const double x = rows[size_t(i)][size_t(j)];
            const double y = rows[size_t(j)][size_t(i)];
            if (std::abs(x - y) > tol)
                throw NonSymmetric("SymMatrix: entries (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") break symmetry");
            m.set(i, j, 0.5 * (x + y));
        }
    }
    return m;
}

SymMatrix SymMatrix::from_nearly_symmetric(const Matrix& m, double tol_scale) {
    if (m.rows() != m.cols()) throw DimMismatch("from_nearly_symmetric: not square");
    const int n = m.rows();
    double max_abs = 0.0, max_skew = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            max_abs = std::max(max_abs, std::abs(m(i, j)));
            max_skew = std::max(max_skew, std::abs(m(i, j) - m(j, i)));
        }
    if (max_skew > tol_scale * std::max(1.0, max_abs))
        throw NonSymmetric("from_nearly_symmetric: skew part too large");
    SymMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) out.set(i, j, 0.5 * (m(i, j) + m(j, i)));
    return out;
}

Matrix SymMatrix::full() const {
    Matrix m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
    return m;
}

std::vector<std::vector<double>> SymMatrix::to_rows() const {
    std::vector<std::vector<double>> rows(size_t(n_), std::vector<double>(size_t(n_)));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) rows[size_t(i)][size_t(j)] = (*this)(i, j);
    return rows;
}

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (double x : a_) m = std::max(m, std::abs(x));
    return m;
}

double SymMatrix::frobenius() const {
    double s = 0.0;
    for (double x : a_) s += x * x;
    return std::sqrt(s);
}

double SymMatrix::trace() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += (*this)(i, i);
    return s;
}

SymMatrix SymMatrix::operator+(const SymMatrix& rhs) const {
    require_same_dim(*this, rhs);
    SymMatrix out(n_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
    return out;
}

SymMatrix SymMatrix::operator-(const SymMatrix& rhs) const {
    require_same_dim(*this, rhs);
    SymMatrix out(n_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
    return out;
}

SymMatrix SymMatrix::operator*(double c) const {
    SymMatrix out(n_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = c * a_[i];
    return out;
}

double SymMatrix::max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
    require_same_dim(a, b);
    double m = 0.0;
    for (size_t i = 0; i < a.a_.size(); ++i) m = std::max(m, std::abs(a.a_[i] - b.a_[i]));
    return m;
}

void require_same_dim(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim())
        throw DimMismatch("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()));
}

SymMatrix congruence(const Matrix& t, const SymMatrix& s) {
    if (t.rows() != t.cols() || t.rows() != s.dim())
        throw DimMismatch("congruence: shape mismatch");
    const Matrix prod = t * s.full() * t.transpose();
    // Exact in exact arithmetic; symmetrize away roundoff.
    SymMatrix out(s.dim());
    for (int i = 0; i < s.dim(); ++i)
        for (int j = i; j < s.dim(); ++j) out.set(i, j, 0.5 * (prod(i, j) + prod(j, i)));
    return out;
}

SymMatrix sandwich_product(const SymMatrix& r, const SymMatrix& s) {
    return congruence(r.full(), s);
}

double commutator_max_abs(const SymMatrix& a, const SymMatrix& b) {
    require_same_dim(a, b);
    const Matrix ab = a.full() * b.full();
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(ab(i, j) - ab(j, i)));
    return m;
}

nlohmann::json to_json(const SymMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : m.to_rows()) rows.push_back(r);
    return nlohmann::json{{"dim", m.dim()}, {"rows", rows}};
}

SymMatrix sym_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("rows"))
        throw ConfigError("matrix literal: expected {dim, rows}");
    const int n = j.at("dim").get<int>();
    auto rows = j.at("rows").get<std::vector<std::vector<double>>>();
    if (int(rows.size()) != n) throw DimMismatch("matrix literal: dim/rows disagree");
    return SymMatrix::from_rows(rows);
}

}  // namespace opineq
