#pragma once

#include <span>
#include <vector>

namespace elastowave {

// Compressed sparse row matrix. Column indices are strictly increasing
// within each row; row_offsets has nrows+1 entries with
// row_offsets[nrows] == nnz.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int nrows, int ncols, std::vector<int> row_offsets,
                 std::vector<int> col_indices, std::vector<double> values);

    int nrows() const { return nrows_; }
    int ncols() const { return ncols_; }
    int nnz() const { return static_cast<int>(values_.size()); }

    std::span<const int> row_offsets() const { return row_offsets_; }
    std::span<const int> col_indices() const { return col_indices_; }
    std::span<const double> values() const { return values_; }

    // Stored value at (i, j), or 0 if the entry is not present.
    double at(int i, int j) const;

    static SparseMatrix identity(int n);

private:
    int nrows_ = 0;
    int ncols_ = 0;
    std::vector<int> row_offsets_ = {0};
    std::vector<int> col_indices_;
    std::vector<double> values_;
};

// Accumulates (row, col, value) entries; duplicates are summed on finalize.
class TripletBuilder {
public:
    TripletBuilder(int nrows, int ncols);

    void add(int row, int col, double value);
    SparseMatrix finalize();

private:
    struct Entry {
        int row;
        int col;
        double value;
    };
    int nrows_;
    int ncols_;
    std::vector<Entry> entries_;
};

// y = A * x. Throws std::invalid_argument on dimension mismatch.
std::vector<double> spmv(const SparseMatrix& a, std::span<const double> x);
void spmv(const SparseMatrix& a, std::span<const double> x, std::span<double> y);

struct CgOptions {
    double rel_tol = 1e-10;
    int max_iter = 0;  // 0 means 10 * nrows
    bool jacobi = false;
};

struct CgResult {
    std::vector<double> x;
    int iterations = 0;
    double residual = 0.0;  // |b - A x|_2 at exit
    bool converged = false;
};

// Conjugate gradients for symmetric positive-definite A. Converged means
// |b - A x|_2 <= rel_tol * |b|_2 (verified with an explicit residual, not
// just the recurrence). Non-convergence is reported through the result,
// never thrown. x0, when given, is the warm-start initial guess.
CgResult cg_solve(const SparseMatrix& a, std::span<const double> b,
                  const CgOptions& opt = {}, std::span<const double> x0 = {});

}  // namespace elastowave
