#include "fsdkit/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fsdkit {

std::size_t shape_numel(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t d : shape) n *= d;
    return n;
}

Tensor::Tensor(std::vector<std::size_t> s)
    : shape(std::move(s)), data(shape_numel(shape), 0.0) {}

Tensor::Tensor(std::vector<std::size_t> s, std::vector<double> d)
    : shape(std::move(s)), data(std::move(d)) {
    if (shape_numel(shape) != data.size())
        throw InputError("tensor: shape/data size mismatch");
}

Tensor::Tensor(std::initializer_list<double> values)
    : shape{values.size()}, data(values) {}

bool Tensor::all_finite() const {
    for (double v : data)
        if (!std::isfinite(v)) return false;
    return true;
}

std::string Tensor::shape_str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < shape.size(); ++i)
        os << (i ? "," : "") << shape[i];
    os << "]";
    return os.str();
}

namespace {
void check_same_shape(const Tensor& a, const Tensor& b, const char* op) {
    if (!a.same_shape(b))
        throw InputError(std::string(op) + ": shape mismatch " + a.shape_str() +
                         " vs " + b.shape_str());
}
}  // namespace

void add_inplace(Tensor& a, const Tensor& b) {
    check_same_shape(a, b, "add");
    for (std::size_t i = 0; i < a.data.size(); ++i) a.data[i] += b.data[i];
}

void sub_inplace(Tensor& a, const Tensor& b) {
    check_same_shape(a, b, "sub");
    for (std::size_t i = 0; i < a.data.size(); ++i) a.data[i] -= b.data[i];
}

void scale_inplace(Tensor& a, double s) {
    for (double& v : a.data) v *= s;
}

void axpy_inplace(Tensor& a, double s, const Tensor& b) {
    check_same_shape(a, b, "axpy");
    for (std::size_t i = 0; i < a.data.size(); ++i) a.data[i] += s * b.data[i];
}

Tensor add(const Tensor& a, const Tensor& b) {
    Tensor r = a;
    add_inplace(r, b);
    return r;
}

Tensor sub(const Tensor& a, const Tensor& b) {
    Tensor r = a;
    sub_inplace(r, b);
    return r;
}

Tensor hadamard(const Tensor& a, const Tensor& b) {
    check_same_shape(a, b, "hadamard");
    Tensor r = a;
    for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] *= b.data[i];
    return r;
}

double dot(const Tensor& a, const Tensor& b) {
    check_same_shape(a, b, "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) s += a.data[i] * b.data[i];
    return s;
}

double squared_norm(const Tensor& a) {
    double s = 0.0;
    for (double v : a.data) s += v * v;
    return s;
}

Tensor matvec(const Tensor& w, const Tensor& x, const Tensor* bias) {
    if (w.rank() != 2 || x.numel() != w.cols())
        throw InputError("matvec: W" + w.shape_str() + " x" + x.shape_str());
    Tensor y({w.rows()});
    for (std::size_t r = 0; r < w.rows(); ++r) {
        const double* wr = w.data.data() + r * w.cols();
        double s = bias ? bias->data[r] : 0.0;
        for (std::size_t c = 0; c < w.cols(); ++c) s += wr[c] * x.data[c];
        y.data[r] = s;
    }
    return y;
}

Tensor matvec_transposed(const Tensor& w, const Tensor& x) {
    if (w.rank() != 2 || x.numel() != w.rows())
        throw InputError("matvec_t: W" + w.shape_str() + " x" + x.shape_str());
    Tensor y({w.cols()});
    for (std::size_t r = 0; r < w.rows(); ++r) {
        const double* wr = w.data.data() + r * w.cols();
        const double xv = x.data[r];
        for (std::size_t c = 0; c < w.cols(); ++c) y.data[c] += wr[c] * xv;
    }
    return y;
}

Tensor matmul(const Tensor& a, const Tensor& b) {
    if (a.rank() != 2 || b.rank() != 2 || a.cols() != b.rows())
        throw InputError("matmul: " + a.shape_str() + " x " + b.shape_str());
    const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
    Tensor c({m, n});
    for (std::size_t i = 0; i < m; ++i) {
        double* ci = c.data.data() + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const double av = a.data[i * k + p];
            if (av == 0.0) continue;
            const double* bp = b.data.data() + p * n;
            for (std::size_t j = 0; j < n; ++j) ci[j] += av * bp[j];
        }
    }
    return c;
}

Tensor matmul_bt(const Tensor& a, const Tensor& b) {
    if (a.rank() != 2 || b.rank() != 2 || a.cols() != b.cols())
        throw InputError("matmul_bt: " + a.shape_str() + " x " + b.shape_str());
    const std::size_t m = a.rows(), k = a.cols(), n = b.rows();
    Tensor c({m, n});
    for (std::size_t i = 0; i < m; ++i) {
        const double* ai = a.data.data() + i * k;
        double* ci = c.data.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) {
            const double* bj = b.data.data() + j * k;
            double s = 0.0;
            for (std::size_t p = 0; p < k; ++p) s += ai[p] * bj[p];
            ci[j] = s;
        }
    }
    return c;
}

Tensor matmul_at(const Tensor& a, const Tensor& b) {
    if (a.rank() != 2 || b.rank() != 2 || a.rows() != b.rows())
        throw InputError("matmul_at: " + a.shape_str() + " x " + b.shape_str());
    const std::size_t k = a.rows(), m = a.cols(), n = b.cols();
    Tensor c({m, n});
    for (std::size_t p = 0; p < k; ++p) {
        const double* ap = a.data.data() + p * m;
        const double* bp = b.data.data() + p * n;
        for (std::size_t i = 0; i < m; ++i) {
            const double av = ap[i];
            if (av == 0.0) continue;
            double* ci = c.data.data() + i * n;
            for (std::size_t j = 0; j < n; ++j) ci[j] += av * bp[j];
        }
    }
    return c;
}

Tensor transpose(const Tensor& a) {
    if (a.rank() != 2) throw InputError("transpose: rank != 2");
    Tensor t({a.cols(), a.rows()});
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) t.at(c, r) = a.at(r, c);
    return t;
}

Tensor outer(const Tensor& x, const Tensor& y) {
    Tensor m({x.numel(), y.numel()});
    for (std::size_t i = 0; i < x.numel(); ++i)
        for (std::size_t j = 0; j < y.numel(); ++j)
            m.data[i * y.numel() + j] = x.data[i] * y.data[j];
    return m;
}

double trace(const Tensor& a) {
    if (a.rank() != 2 || a.rows() != a.cols())
        throw InputError("trace: not square");
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += a.at(i, i);
    return s;
}

Tensor identity(std::size_t n) {
    Tensor m({n, n});
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

std::optional<Tensor> cholesky(const Tensor& a) {
    if (a.rank() != 2 || a.rows() != a.cols())
        throw InputError("cholesky: not square");
    const std::size_t n = a.rows();
    Tensor l({n, n});
    for (std::size_t j = 0; j < n; ++j) {
        double d = a.at(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= l.at(j, k) * l.at(j, k);
        if (!(d > 0.0)) return std::nullopt;
        const double ljj = std::sqrt(d);
        l.at(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a.at(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l.at(i, k) * l.at(j, k);
            l.at(i, j) = s / ljj;
        }
    }
    return l;
}

std::vector<double> symmetric_eigenvalues(Tensor a, double tol, int max_sweeps) {
    if (a.rank() != 2 || a.rows() != a.cols())
        throw InputError("eigenvalues: not square");
    const std::size_t n = a.rows();
    if (n == 0) return {};
    double scale = 0.0;
    for (double v : a.data) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return std::vector<double>(n, 0.0);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a.at(p, q) * a.at(p, q);
        if (std::sqrt(off) <= tol * scale * n) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (std::abs(apq) <= tol * scale * 1e-4) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * aqk;
                    a.at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a.at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

double min_symmetric_eigenvalue(const Tensor& a) {
    return symmetric_eigenvalues(a).front();
}

double symmetry_gap(const Tensor& a) {
    double g = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = r + 1; c < a.cols(); ++c)
            g = std::max(g, std::abs(a.at(r, c) - a.at(c, r)));
    return g;
}

}  // namespace fsdkit
