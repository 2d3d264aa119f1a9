#ifndef FSDKIT_TENSOR_HPP
#define FSDKIT_TENSOR_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "fsdkit/errors.hpp"

namespace fsdkit {

/// Dense row-major tensor of doubles. Rank ≤ 4 in practice (vectors,
/// matrices, CHW images and OIHW conv kernels).
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> data;

    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> s);
    Tensor(std::vector<std::size_t> s, std::vector<double> d);
    /// 1-D convenience: Tensor{1.0, 2.0}.
    Tensor(std::initializer_list<double> values);

    static Tensor zeros(std::vector<std::size_t> s) { return Tensor(std::move(s)); }
    static Tensor zeros_like(const Tensor& t) { return Tensor(t.shape); }

    std::size_t numel() const { return data.size(); }
    std::size_t rank() const { return shape.size(); }
    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    double& operator[](std::size_t i) { return data[i]; }
    double operator[](std::size_t i) const { return data[i]; }

    /// 2-D access for matrices [rows, cols].
    double& at(std::size_t r, std::size_t c) { return data[r * shape[1] + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * shape[1] + c]; }

    std::size_t rows() const { return shape[0]; }
    std::size_t cols() const { return shape[1]; }

    bool all_finite() const;
    std::string shape_str() const;
};

std::size_t shape_numel(const std::vector<std::size_t>& shape);

// -- elementwise / BLAS-1 -----------------------------------------------------

void add_inplace(Tensor& a, const Tensor& b);
void sub_inplace(Tensor& a, const Tensor& b);
void scale_inplace(Tensor& a, double s);
/// a += s * b
void axpy_inplace(Tensor& a, double s, const Tensor& b);
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor hadamard(const Tensor& a, const Tensor& b);
double dot(const Tensor& a, const Tensor& b);
double squared_norm(const Tensor& a);

// -- BLAS-2/3 on [r,c] matrices and length-n vectors --------------------------

/// y = W x (+ b if given). W is [m,n], x length n.
Tensor matvec(const Tensor& w, const Tensor& x, const Tensor* bias = nullptr);
/// y = W^T x. W is [m,n], x length m.
Tensor matvec_transposed(const Tensor& w, const Tensor& x);
/// C = A B with A [m,k], B [k,n].
Tensor matmul(const Tensor& a, const Tensor& b);
/// C = A B^T with A [m,k], B [n,k].
Tensor matmul_bt(const Tensor& a, const Tensor& b);
/// C = A^T B with A [k,m], B [k,n].
Tensor matmul_at(const Tensor& a, const Tensor& b);
Tensor transpose(const Tensor& a);
/// x y^T as an [m,n] matrix.
Tensor outer(const Tensor& x, const Tensor& y);
double trace(const Tensor& a);
Tensor identity(std::size_t n);

// -- factorizations -----------------------------------------------------------

/// Lower-triangular L with L L^T = A for symmetric positive-definite A.
/// Returns nullopt if a pivot is not strictly positive.
std::optional<Tensor> cholesky(const Tensor& a);

/// All eigenvalues of a symmetric matrix, ascending, via cyclic Jacobi.
std::vector<double> symmetric_eigenvalues(Tensor a, double tol = 1e-12,
                                          int max_sweeps = 64);

double min_symmetric_eigenvalue(const Tensor& a);

/// Max |A_ij - A_ji|.
double symmetry_gap(const Tensor& a);

}  // namespace fsdkit

#endif
