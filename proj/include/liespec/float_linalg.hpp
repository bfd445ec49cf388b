#ifndef LIESPEC_FLOAT_LINALG_HPP
#define LIESPEC_FLOAT_LINALG_HPP

#include <Eigen/Dense>
#include <vector>

#include "matrix.hpp"

namespace liespec {

using FloatMatrix = Matrix<Complex>;

namespace fl {

inline Eigen::MatrixXcd to_eigen(const FloatMatrix& m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
    return e;
}

inline FloatMatrix from_eigen(const Eigen::MatrixXcd& e) {
    FloatMatrix m(e.rows(), e.cols());
    for (Eigen::Index i = 0; i < e.rows(); ++i)
        for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
    return m;
}

// Numerical rank: singular values above tol * sigma_max * max(rows, cols).
inline std::size_t rank(const FloatMatrix& m, double tol = 1e-9) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    double cut = tol * sv(0) * static_cast<double>(std::max(m.rows(), m.cols()));
    std::size_t r = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) > cut) ++r;
    return r;
}

inline std::vector<FloatMatrix> kernel_basis(const FloatMatrix& m, double tol = 1e-9) {
    std::vector<FloatMatrix> out;
    if (m.cols() == 0) return out;
    if (m.rows() == 0) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            FloatMatrix v(m.cols(), 1);
            v(j, 0) = 1.0;
            out.push_back(std::move(v));
        }
        return out;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m), Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double cut = sv.size() && sv(0) > 0.0
                     ? tol * sv(0) * static_cast<double>(std::max(m.rows(), m.cols()))
                     : 0.0;
    std::size_t r = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) > cut) ++r;
    const auto& v = svd.matrixV();
    for (std::size_t j = r; j < m.cols(); ++j) {
        FloatMatrix k(m.cols(), 1);
        for (std::size_t i = 0; i < m.cols(); ++i) k(i, 0) = v(i, j);
        out.push_back(std::move(k));
    }
    return out;
}

inline std::vector<Complex> eigenvalues(const FloatMatrix& m) {
    if (!m.is_square()) throw error(errc::internal, "eigenvalues of non-square matrix");
    if (m.rows() == 0) return {};
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(to_eigen(m), false);
    std::vector<Complex> out(m.rows());
    for (std::size_t k = 0; k < m.rows(); ++k) out[k] = es.eigenvalues()(k);
    std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

inline FloatMatrix solve(const FloatMatrix& a, const FloatMatrix& b) {
    Eigen::MatrixXcd x =
        to_eigen(a).completeOrthogonalDecomposition().solve(to_eigen(b));
    return from_eigen(x);
}

inline FloatMatrix inverse(const FloatMatrix& a) {
    return from_eigen(to_eigen(a).inverse());
}

} // namespace fl

// ---- unified front, dispatching on the scalar backend --------------------

template <class S>
std::size_t rank(const Matrix<S>& m, double tol = 1e-9);

template <>
inline std::size_t rank<GaussianRational>(const ExactMatrix& m, double) { return exact::rank(m); }
template <>
inline std::size_t rank<Complex>(const FloatMatrix& m, double tol) { return fl::rank(m, tol); }

template <class S>
std::vector<Matrix<S>> kernel_basis(const Matrix<S>& m, double tol = 1e-9);

template <>
inline std::vector<ExactMatrix> kernel_basis<GaussianRational>(const ExactMatrix& m, double) {
    return exact::kernel_basis(m);
}
template <>
inline std::vector<FloatMatrix> kernel_basis<Complex>(const FloatMatrix& m, double tol) {
    return fl::kernel_basis(m, tol);
}

template <class S>
Matrix<S> solve(const Matrix<S>& a, const Matrix<S>& b);

template <>
inline ExactMatrix solve<GaussianRational>(const ExactMatrix& a, const ExactMatrix& b) {
    return exact::solve(a, b);
}
template <>
inline FloatMatrix solve<Complex>(const FloatMatrix& a, const FloatMatrix& b) {
    return fl::solve(a, b);
}

template <class S>
Matrix<S> inverse(const Matrix<S>& a);

template <>
inline ExactMatrix inverse<GaussianRational>(const ExactMatrix& a) { return exact::inverse(a); }
template <>
inline FloatMatrix inverse<Complex>(const FloatMatrix& a) { return fl::inverse(a); }

} // namespace liespec

#endif
