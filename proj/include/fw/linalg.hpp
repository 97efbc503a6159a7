#ifndef FW_LINALG_HPP
#define FW_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

// Dense column-major f64 linear algebra. Small sizes (dims up to ~1k),
// deterministic accumulation order everywhere: loops ascend, no reordering,
// no fused/blocked variants. Several tests rely on bit-reproducibility of
// these kernels.

namespace fw {

class DenseVector {
public:
    DenseVector() = default;
    explicit DenseVector(std::size_t dim, double value = 0.0) : data_(dim, value) {}
    DenseVector(std::initializer_list<double> values) : data_(values) {}

    std::size_t dim() const { return data_.size(); }
    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }
    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    bool empty() const { return data_.empty(); }

    void fill(double value);
    void resize(std::size_t dim, double value = 0.0) { data_.assign(dim, value); }

private:
    std::vector<double> data_;
};

class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double value = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, value) {}

    static DenseMatrix identity(std::size_t n);
    // Row-major list-of-rows constructor, for literals in tests and tools.
    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i + j * rows_]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i + j * rows_]; }
    double* col(std::size_t j) { return data_.data() + j * rows_; }
    const double* col(std::size_t j) const { return data_.data() + j * rows_; }
    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    void fill(double value);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// --- vector ops ---

double dot(const DenseVector& a, const DenseVector& b);
DenseVector add(const DenseVector& a, const DenseVector& b);
DenseVector sub(const DenseVector& a, const DenseVector& b);
DenseVector scaled(const DenseVector& a, double alpha);
// y += alpha * x
void axpy(DenseVector& y, double alpha, const DenseVector& x);

double norm2(const DenseVector& v);
double norm1(const DenseVector& v);
double norm_inf(const DenseVector& v);
// L_p norm, p in [1, inf]; max-scaled so huge entries do not overflow.
double norm_p(const DenseVector& v, double p);

bool all_finite(const DenseVector& v);
bool all_finite(const DenseMatrix& A);
// Throws std::invalid_argument naming `what` if any entry is NaN/Inf.
void ensure_finite(const DenseVector& v, const std::string& what);
void ensure_finite(const DenseMatrix& A, const std::string& what);

// --- matrix ops ---

DenseVector matvec(const DenseMatrix& A, const DenseVector& v);
// A^T v without forming the transpose.
DenseVector matvec_t(const DenseMatrix& A, const DenseVector& v);
DenseMatrix matmul(const DenseMatrix& A, const DenseMatrix& B);
DenseMatrix transpose(const DenseMatrix& A);
DenseMatrix negated(const DenseMatrix& A);
// A += alpha * u v^T
void add_outer(DenseMatrix& A, double alpha, const DenseVector& u, const DenseVector& v);
void add_scaled(DenseMatrix& A, double alpha, const DenseMatrix& B);

double max_abs_diff(const DenseVector& a, const DenseVector& b);
double max_abs_diff(const DenseMatrix& A, const DenseMatrix& B);

} // namespace fw

#endif
