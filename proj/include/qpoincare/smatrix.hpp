/// Dense matrices with exact Scalar entries (4x4 Lambda images, metric
/// checks, the 16x16 R-matrix and its Kronecker squares).
#pragma once

#include <vector>

#include "qpoincare/scalar.hpp"

namespace qpoin {

class SMat {
  public:
    SMat(int rows, int cols)
        : rows_(rows), cols_(cols), v_(static_cast<size_t>(rows) * cols) {}

    static SMat identity(int n) {
        SMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
        return m;
    }

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }

    Scalar& at(int i, int j) { return v_[static_cast<size_t>(i) * cols_ + j]; }
    [[nodiscard]] const Scalar& at(int i, int j) const {
        return v_[static_cast<size_t>(i) * cols_ + j];
    }

    bool operator==(const SMat&) const = default;

    friend SMat operator*(const SMat& x, const SMat& y) {
        SMat r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const Scalar& xik = x.at(i, k);
                if (xik.is_zero()) continue;
                for (int j = 0; j < y.cols_; ++j) {
                    const Scalar& ykj = y.at(k, j);
                    if (ykj.is_zero()) continue;
                    r.at(i, j) += xik * ykj;
                }
            }
        return r;
    }

    friend SMat operator+(const SMat& x, const SMat& y) {
        SMat r(x.rows_, x.cols_);
        for (size_t i = 0; i < x.v_.size(); ++i) r.v_[i] = x.v_[i] + y.v_[i];
        return r;
    }

    friend SMat operator-(const SMat& x, const SMat& y) {
        SMat r(x.rows_, x.cols_);
        for (size_t i = 0; i < x.v_.size(); ++i) r.v_[i] = x.v_[i] - y.v_[i];
        return r;
    }

    friend SMat operator*(const Scalar& s, const SMat& y) {
        SMat r(y.rows_, y.cols_);
        for (size_t i = 0; i < y.v_.size(); ++i) r.v_[i] = s * y.v_[i];
        return r;
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& s : v_)
            if (!s.is_zero()) return false;
        return true;
    }

    /// exact Gauss-Jordan inverse; throws DomainError if singular
    [[nodiscard]] SMat inverse() const;

  private:
    int rows_, cols_;
    std::vector<Scalar> v_;
};

}  // namespace qpoin
