// Data-parallel dense kernels. The functions in kernels:: run the OpenMP
// production path; kernels::serial holds plain-loop reference twins used by
// the test suite and the benchmark tool.
#pragma once

#include <vector>

#include "spinchain/matrix.hpp"

namespace spinchain::kernels {

Matrix matmul(const Matrix& a, const Matrix& b);
CMatrix cmatmul(const CMatrix& a, const CMatrix& b);

// U(t) = sum_k exp(-i t lambda_k) v_k v_k^T from an orthonormal eigenbasis
// (column k of eigvecs belongs to eigvals[k]).
CMatrix assemble_propagator(const Matrix& eigvecs, const std::vector<double>& eigvals,
                            double t);

// a(t_j) = sum_k weights[k] * exp(-i t_j eigvals[k]); one amplitude per sample.
std::vector<complex> phase_sum_scan(const std::vector<double>& eigvals,
                                    const std::vector<double>& weights,
                                    const std::vector<double>& times);

namespace serial {

Matrix matmul(const Matrix& a, const Matrix& b);
CMatrix cmatmul(const CMatrix& a, const CMatrix& b);
CMatrix assemble_propagator(const Matrix& eigvecs, const std::vector<double>& eigvals,
                            double t);
std::vector<complex> phase_sum_scan(const std::vector<double>& eigvals,
                                    const std::vector<double>& weights,
                                    const std::vector<double>& times);

} // namespace serial

} // namespace spinchain::kernels
