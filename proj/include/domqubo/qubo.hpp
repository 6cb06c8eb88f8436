#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace domqubo {

// Binary assignment, one 0/1 entry per variable.
using Assignment = std::vector<std::uint8_t>;

/// Quadratic pseudo-Boolean polynomial in canonical form: linear terms,
/// quadratic terms over pairs (i < j), and a constant offset. x_i^2 terms
/// are folded into the linear part (x^2 = x on binaries) and exact-zero
/// coefficients are pruned as they appear.
class QuboPoly {
public:
    QuboPoly() = default;
    explicit QuboPoly(int num_vars);

    int num_vars() const { return num_vars_; }
    double offset() const { return offset_; }
    const std::map<int, double>& linear() const { return linear_; }
    const std::map<std::pair<int, int>, double>& quadratic() const { return quadratic_; }

    double linear_at(int i) const;
    double quadratic_at(int i, int j) const;

    void add_constant(double c) { offset_ += c; }
    void add_linear(int i, double c);
    // i == j folds into the linear part.
    void add_quadratic(int i, int j, double c);

    // this += scale * term. Grows num_vars to cover term if needed.
    void add_scaled(const QuboPoly& term, double scale);

    std::size_t term_count() const { return linear_.size() + quadratic_.size(); }

    bool operator==(const QuboPoly& other) const {
        return num_vars_ == other.num_vars_ && offset_ == other.offset_ &&
               linear_ == other.linear_ && quadratic_ == other.quadratic_;
    }

private:
    void check_var(int i) const;

    int num_vars_ = 0;
    std::map<int, double> linear_;
    std::map<std::pair<int, int>, double> quadratic_;
    double offset_ = 0.0;
};

// target + scale * term as a new polynomial.
QuboPoly add_scaled(const QuboPoly& target, const QuboPoly& term, double scale);

// Expansion of (sum coeffs_i * x_i + constant)^2 with x^2 = x.
QuboPoly square_affine(const std::map<int, double>& coeffs, double constant);

// Polynomial value at a full assignment; length must match num_vars.
double evaluate(const QuboPoly& poly, const Assignment& a);

// Energy change of flipping bit i of a, without re-evaluating the polynomial.
double flip_delta(const QuboPoly& poly, const Assignment& a, int i);

enum class MatrixConvention { Symmetric, UpperTriangular };

/// Dense QUBO matrix: x^T Q x + offset equals the source polynomial for
/// every binary x, under either convention.
struct QuboMatrix {
    int n = 0;
    std::vector<double> entries;  // row-major, n*n
    MatrixConvention convention = MatrixConvention::Symmetric;
    double offset = 0.0;

    double at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(j)];
    }
};

QuboMatrix to_matrix(const QuboPoly& poly, MatrixConvention convention);

// x^T Q x + offset, evaluated directly from the matrix entries.
double matrix_energy(const QuboMatrix& q, const Assignment& a);

// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

}  // namespace domqubo
