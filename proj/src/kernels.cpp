#include "spinchain/kernels.hpp"

#include <cmath>
#include <cstdint>

#include "spinchain/errors.hpp"

namespace spinchain::kernels {

namespace {

void require_inner(std::size_t a_cols, std::size_t b_rows) {
    if (a_cols != b_rows) throw DimensionMismatch("matmul: inner dimensions differ");
}

void require_same_length(std::size_t vals, std::size_t weights) {
    if (vals != weights)
        throw DimensionMismatch("phase_sum_scan: eigenvalue/weight lengths differ");
}

std::vector<complex> unit_phases(const std::vector<double>& eigvals, double t) {
    std::vector<complex> phases(eigvals.size());
    for (std::size_t k = 0; k < eigvals.size(); ++k)
        phases[k] = std::polar(1.0, -t * eigvals[k]);
    return phases;
}

} // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
    require_inner(a.cols(), b.rows());
    Matrix out(a.rows(), b.cols());
    const std::int64_t rows = static_cast<std::int64_t>(a.rows());
    const std::size_t inner = a.cols(), cols = b.cols();
#pragma omp parallel for schedule(static) if (a.rows() * cols >= 4096)
    for (std::int64_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            const double aik = a(static_cast<std::size_t>(i), k);
            for (std::size_t j = 0; j < cols; ++j)
                out(static_cast<std::size_t>(i), j) += aik * b(k, j);
        }
    return out;
}

CMatrix cmatmul(const CMatrix& a, const CMatrix& b) {
    require_inner(a.cols(), b.rows());
    CMatrix out(a.rows(), b.cols());
    const std::int64_t rows = static_cast<std::int64_t>(a.rows());
    const std::size_t inner = a.cols(), cols = b.cols();
#pragma omp parallel for schedule(static) if (a.rows() * cols >= 4096)
    for (std::int64_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            const complex aik = a(static_cast<std::size_t>(i), k);
            for (std::size_t j = 0; j < cols; ++j)
                out(static_cast<std::size_t>(i), j) += aik * b(k, j);
        }
    return out;
}

CMatrix assemble_propagator(const Matrix& eigvecs, const std::vector<double>& eigvals,
                            double t) {
    require_same_length(eigvals.size(), eigvecs.cols());
    const std::size_t m = eigvecs.rows();
    const std::vector<complex> phases = unit_phases(eigvals, t);
    CMatrix out(m, m);
    const std::int64_t rows = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static) if (m >= 64)
    for (std::int64_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            const complex w = phases[k] * eigvecs(static_cast<std::size_t>(i), k);
            for (std::size_t j = 0; j < m; ++j)
                out(static_cast<std::size_t>(i), j) += w * eigvecs(j, k);
        }
    return out;
}

std::vector<complex> phase_sum_scan(const std::vector<double>& eigvals,
                                    const std::vector<double>& weights,
                                    const std::vector<double>& times) {
    require_same_length(eigvals.size(), weights.size());
    std::vector<complex> out(times.size());
    const std::int64_t samples = static_cast<std::int64_t>(times.size());
#pragma omp parallel for schedule(static) if (times.size() >= 256)
    for (std::int64_t s = 0; s < samples; ++s) {
        const double t = times[static_cast<std::size_t>(s)];
        complex acc = 0.0;
        for (std::size_t k = 0; k < eigvals.size(); ++k)
            acc += weights[k] * std::polar(1.0, -t * eigvals[k]);
        out[static_cast<std::size_t>(s)] = acc;
    }
    return out;
}

namespace serial {

// Textbook i-j-k loops; the production kernels above accumulate in a
// different order, so agreement between the two paths is a real check.

Matrix matmul(const Matrix& a, const Matrix& b) {
    require_inner(a.cols(), b.rows());
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            out(i, j) = acc;
        }
    return out;
}

CMatrix cmatmul(const CMatrix& a, const CMatrix& b) {
    require_inner(a.cols(), b.rows());
    CMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            complex acc = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            out(i, j) = acc;
        }
    return out;
}

CMatrix assemble_propagator(const Matrix& eigvecs, const std::vector<double>& eigvals,
                            double t) {
    require_same_length(eigvals.size(), eigvecs.cols());
    const std::size_t m = eigvecs.rows();
    const std::vector<complex> phases = unit_phases(eigvals, t);
    CMatrix out(m, m);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i) {
            const complex w = phases[k] * eigvecs(i, k);
            for (std::size_t j = 0; j < m; ++j) out(i, j) += w * eigvecs(j, k);
        }
    return out;
}

std::vector<complex> phase_sum_scan(const std::vector<double>& eigvals,
                                    const std::vector<double>& weights,
                                    const std::vector<double>& times) {
    require_same_length(eigvals.size(), weights.size());
    std::vector<complex> out(times.size());
    for (std::size_t s = 0; s < times.size(); ++s) {
        complex acc = 0.0;
        for (std::size_t k = 0; k < eigvals.size(); ++k)
            acc += weights[k] * std::polar(1.0, -times[s] * eigvals[k]);
        out[s] = acc;
    }
    return out;
}

} // namespace serial

} // namespace spinchain::kernels
