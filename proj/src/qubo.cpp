#include "domqubo/qubo.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace domqubo {

QuboPoly::QuboPoly(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0) throw std::invalid_argument("negative variable count");
}

void QuboPoly::check_var(int i) const {
    if (i < 0 || i >= num_vars_)
        throw std::invalid_argument("variable index " + std::to_string(i) + " out of range");
}

double QuboPoly::linear_at(int i) const {
    auto it = linear_.find(i);
    return it == linear_.end() ? 0.0 : it->second;
}

double QuboPoly::quadratic_at(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = quadratic_.find({i, j});
    return it == quadratic_.end() ? 0.0 : it->second;
}

void QuboPoly::add_linear(int i, double c) {
    check_var(i);
    if (c == 0.0) return;
    auto [it, inserted] = linear_.try_emplace(i, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0.0) linear_.erase(it);
    }
}

void QuboPoly::add_quadratic(int i, int j, double c) {
    check_var(i);
    check_var(j);
    if (i == j) {
        add_linear(i, c);  // x^2 = x
        return;
    }
    if (c == 0.0) return;
    if (i > j) std::swap(i, j);
    auto [it, inserted] = quadratic_.try_emplace(std::pair{i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0.0) quadratic_.erase(it);
    }
}

void QuboPoly::add_scaled(const QuboPoly& term, double scale) {
    num_vars_ = std::max(num_vars_, term.num_vars_);
    offset_ += scale * term.offset_;
    for (auto [i, c] : term.linear_) add_linear(i, scale * c);
    for (auto [ij, c] : term.quadratic_) add_quadratic(ij.first, ij.second, scale * c);
}

QuboPoly add_scaled(const QuboPoly& target, const QuboPoly& term, double scale) {
    QuboPoly out = target;
    out.add_scaled(term, scale);
    return out;
}

QuboPoly square_affine(const std::map<int, double>& coeffs, double constant) {
    int num_vars = 0;
    for (auto [i, c] : coeffs) {
        (void)c;
        if (i < 0) throw std::invalid_argument("negative variable index");
        num_vars = std::max(num_vars, i + 1);
    }
    QuboPoly out(num_vars);
    out.add_constant(constant * constant);
    for (auto [i, ci] : coeffs) out.add_linear(i, ci * (ci + 2.0 * constant));
    for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
        for (auto jt = std::next(it); jt != coeffs.end(); ++jt)
            out.add_quadratic(it->first, jt->first, 2.0 * it->second * jt->second);
    }
    return out;
}

double evaluate(const QuboPoly& poly, const Assignment& a) {
    if (static_cast<int>(a.size()) != poly.num_vars())
        throw std::invalid_argument("assignment length " + std::to_string(a.size()) +
                                    " does not match " + std::to_string(poly.num_vars()) +
                                    " variables");
    double e = poly.offset();
    for (auto [i, c] : poly.linear())
        if (a[static_cast<std::size_t>(i)]) e += c;
    for (auto [ij, c] : poly.quadratic())
        if (a[static_cast<std::size_t>(ij.first)] && a[static_cast<std::size_t>(ij.second)])
            e += c;
    return e;
}

double flip_delta(const QuboPoly& poly, const Assignment& a, int i) {
    if (static_cast<int>(a.size()) != poly.num_vars())
        throw std::invalid_argument("assignment length does not match variable count");
    if (i < 0 || i >= poly.num_vars())
        throw std::invalid_argument("flip index out of range");
    double slope = poly.linear_at(i);
    for (auto [ij, c] : poly.quadratic()) {
        if (ij.first == i && a[static_cast<std::size_t>(ij.second)]) slope += c;
        else if (ij.second == i && a[static_cast<std::size_t>(ij.first)]) slope += c;
    }
    return a[static_cast<std::size_t>(i)] ? -slope : slope;
}

QuboMatrix to_matrix(const QuboPoly& poly, MatrixConvention convention) {
    QuboMatrix q;
    q.n = poly.num_vars();
    q.convention = convention;
    q.offset = poly.offset();
    q.entries.assign(static_cast<std::size_t>(q.n) * static_cast<std::size_t>(q.n), 0.0);
    auto ref = [&](int i, int j) -> double& {
        return q.entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(q.n) +
                         static_cast<std::size_t>(j)];
    };
    for (auto [i, c] : poly.linear()) ref(i, i) = c;
    for (auto [ij, c] : poly.quadratic()) {
        if (convention == MatrixConvention::Symmetric) {
            ref(ij.first, ij.second) = c / 2.0;
            ref(ij.second, ij.first) = c / 2.0;
        } else {
            ref(ij.first, ij.second) = c;
        }
    }
    return q;
}

double matrix_energy(const QuboMatrix& q, const Assignment& a) {
    if (static_cast<int>(a.size()) != q.n)
        throw std::invalid_argument("assignment length does not match matrix dimension");
    double e = q.offset;
    for (int i = 0; i < q.n; ++i) {
        if (!a[static_cast<std::size_t>(i)]) continue;
        for (int j = 0; j < q.n; ++j)
            if (a[static_cast<std::size_t>(j)]) e += q.at(i, j);
    }
    return e;
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace domqubo
