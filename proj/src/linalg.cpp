#include "elastowave/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace elastowave {

SparseMatrix::SparseMatrix(int nrows, int ncols, std::vector<int> row_offsets,
                           std::vector<int> col_indices, std::vector<double> values)
    : nrows_(nrows),
      ncols_(ncols),
      row_offsets_(std::move(row_offsets)),
      col_indices_(std::move(col_indices)),
      values_(std::move(values)) {
    if (nrows_ < 0 || ncols_ < 0) throw std::invalid_argument("SparseMatrix: negative dimension");
    if (row_offsets_.size() != static_cast<size_t>(nrows_) + 1)
        throw std::invalid_argument("SparseMatrix: row_offsets must have nrows+1 entries");
    if (row_offsets_.front() != 0 || row_offsets_.back() != static_cast<int>(values_.size()))
        throw std::invalid_argument("SparseMatrix: row_offsets inconsistent with values");
    if (col_indices_.size() != values_.size())
        throw std::invalid_argument("SparseMatrix: col_indices/values size mismatch");
    for (int i = 0; i < nrows_; ++i) {
        if (row_offsets_[i] > row_offsets_[i + 1])
            throw std::invalid_argument("SparseMatrix: row_offsets not nondecreasing");
        for (int p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p) {
            if (col_indices_[p] < 0 || col_indices_[p] >= ncols_)
                throw std::invalid_argument("SparseMatrix: column index out of range");
            if (p > row_offsets_[i] && col_indices_[p] <= col_indices_[p - 1])
                throw std::invalid_argument("SparseMatrix: column indices not strictly increasing");
        }
    }
}

double SparseMatrix::at(int i, int j) const {
    if (i < 0 || i >= nrows_ || j < 0 || j >= ncols_)
        throw std::invalid_argument("SparseMatrix::at: index out of range");
    auto begin = col_indices_.begin() + row_offsets_[i];
    auto end = col_indices_.begin() + row_offsets_[i + 1];
    auto it = std::lower_bound(begin, end, j);
    if (it == end || *it != j) return 0.0;
    return values_[static_cast<size_t>(it - col_indices_.begin())];
}

SparseMatrix SparseMatrix::identity(int n) {
    std::vector<int> offsets(n + 1);
    std::vector<int> cols(n);
    std::vector<double> vals(n, 1.0);
    for (int i = 0; i <= n; ++i) offsets[i] = i;
    for (int i = 0; i < n; ++i) cols[i] = i;
    return SparseMatrix(n, n, std::move(offsets), std::move(cols), std::move(vals));
}

TripletBuilder::TripletBuilder(int nrows, int ncols) : nrows_(nrows), ncols_(ncols) {
    if (nrows < 0 || ncols < 0) throw std::invalid_argument("TripletBuilder: negative dimension");
}

void TripletBuilder::add(int row, int col, double value) {
    if (row < 0 || row >= nrows_ || col < 0 || col >= ncols_)
        throw std::invalid_argument("TripletBuilder::add: index out of range");
    entries_.push_back({row, col, value});
}

SparseMatrix TripletBuilder::finalize() {
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<int> offsets(nrows_ + 1, 0);
    std::vector<int> cols;
    std::vector<double> vals;
    cols.reserve(entries_.size());
    vals.reserve(entries_.size());
    size_t i = 0;
    for (int row = 0; row < nrows_; ++row) {
        while (i < entries_.size() && entries_[i].row == row) {
            const int col = entries_[i].col;
            double sum = 0.0;
            while (i < entries_.size() && entries_[i].row == row && entries_[i].col == col) {
                sum += entries_[i].value;
                ++i;
            }
            cols.push_back(col);
            vals.push_back(sum);
        }
        offsets[row + 1] = static_cast<int>(cols.size());
    }
    return SparseMatrix(nrows_, ncols_, std::move(offsets), std::move(cols), std::move(vals));
}

void spmv(const SparseMatrix& a, std::span<const double> x, std::span<double> y) {
    if (static_cast<int>(x.size()) != a.ncols())
        throw std::invalid_argument("spmv: x length does not match ncols");
    if (static_cast<int>(y.size()) != a.nrows())
        throw std::invalid_argument("spmv: y length does not match nrows");
    const auto offsets = a.row_offsets();
    const auto cols = a.col_indices();
    const auto vals = a.values();
    for (int i = 0; i < a.nrows(); ++i) {
        double sum = 0.0;
        for (int p = offsets[i]; p < offsets[i + 1]; ++p) sum += vals[p] * x[cols[p]];
        y[i] = sum;
    }
}

std::vector<double> spmv(const SparseMatrix& a, std::span<const double> x) {
    std::vector<double> y(a.nrows());
    spmv(a, x, y);
    return y;
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace

CgResult cg_solve(const SparseMatrix& a, std::span<const double> b, const CgOptions& opt,
                  std::span<const double> x0) {
    const int n = a.nrows();
    if (a.ncols() != n) throw std::invalid_argument("cg_solve: matrix must be square");
    if (static_cast<int>(b.size()) != n)
        throw std::invalid_argument("cg_solve: b length does not match matrix size");
    if (!x0.empty() && static_cast<int>(x0.size()) != n)
        throw std::invalid_argument("cg_solve: x0 length does not match matrix size");
    if (opt.rel_tol <= 0.0) throw std::invalid_argument("cg_solve: rel_tol must be positive");
    const int max_iter = opt.max_iter > 0 ? opt.max_iter : 10 * n;

    CgResult res;
    res.x.assign(n, 0.0);

    const double bnorm = norm(b);
    if (bnorm == 0.0) {
        res.converged = true;
        return res;
    }
    if (!x0.empty()) std::copy(x0.begin(), x0.end(), res.x.begin());

    std::vector<double> inv_diag;
    if (opt.jacobi) {
        inv_diag.resize(n);
        for (int i = 0; i < n; ++i) {
            const double d = a.at(i, i);
            inv_diag[i] = d != 0.0 ? 1.0 / d : 1.0;
        }
    }

    const double target = opt.rel_tol * bnorm;
    std::vector<double> r(n), z(n), p(n), q(n);
    spmv(a, res.x, r);
    for (int i = 0; i < n; ++i) r[i] = b[i] - r[i];

    auto apply_precond = [&](std::span<const double> in, std::span<double> out) {
        if (opt.jacobi)
            for (int i = 0; i < n; ++i) out[i] = inv_diag[i] * in[i];
        else
            std::copy(in.begin(), in.end(), out.begin());
    };

    apply_precond(r, z);
    std::copy(z.begin(), z.end(), p.begin());
    double rz = dot(r, z);

    double rnorm = norm(r);
    while (res.iterations < max_iter) {
        if (rnorm <= target) {
            // Recurrence residual can drift; accept only on the true residual.
            spmv(a, res.x, r);
            for (int i = 0; i < n; ++i) r[i] = b[i] - r[i];
            rnorm = norm(r);
            if (rnorm <= target) break;
            apply_precond(r, z);
            std::copy(z.begin(), z.end(), p.begin());
            rz = dot(r, z);
        }
        spmv(a, p, q);
        const double pq = dot(p, q);
        if (pq <= 0.0) break;  // A not SPD along p, or exact breakdown
        const double alpha = rz / pq;
        for (int i = 0; i < n; ++i) {
            res.x[i] += alpha * p[i];
            r[i] -= alpha * q[i];
        }
        apply_precond(r, z);
        const double rz_new = dot(r, z);
        const double beta = rz_new / rz;
        for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
        rz = rz_new;
        rnorm = norm(r);
        ++res.iterations;
    }

    // Report the true final residual regardless of how the loop exited.
    std::vector<double> ax(n);
    spmv(a, res.x, ax);
    for (int i = 0; i < n; ++i) ax[i] = b[i] - ax[i];
    res.residual = norm(ax);
    res.converged = res.residual <= target;
    return res;
}

}  // namespace elastowave
