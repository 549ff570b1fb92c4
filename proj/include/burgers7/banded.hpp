#pragma once

/// Band-storage square matrices and a banded LU factorization with partial
/// pivoting. The pentadiagonal spatial operator has bandwidth 2; its sixth
/// polynomial power (the implicit-side operator) has bandwidth 12, so band
/// algorithms beat dense factorization by orders of magnitude at N = 2400.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace burgers7 {

/// Square matrix with lower_bw subdiagonals and upper_bw superdiagonals,
/// stored row-major by diagonal offset: entry (i, i+o) lives at
/// bands(i, o + lower_bw) for -lower_bw <= o <= upper_bw.
template <typename Scalar>
class BandedMatrix {
  public:
    /// Empty placeholder; assign a sized matrix before use.
    BandedMatrix() : n_(0), kl_(0), ku_(0) {}

    BandedMatrix(int n, int lower_bw, int upper_bw)
        : n_(n),
          kl_(std::min(lower_bw, n - 1)),
          ku_(std::min(upper_bw, n - 1)),
          bands_(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(
              n, kl_ + ku_ + 1)) {
        if (n < 1 || lower_bw < 0 || upper_bw < 0)
            throw std::domain_error("BandedMatrix: invalid shape");
    }

    static BandedMatrix identity(int n) {
        BandedMatrix m(n, 0, 0);
        for (int i = 0; i < n; ++i) m.set(i, i, Scalar(1));
        return m;
    }

    int size() const { return n_; }
    int lower_bw() const { return kl_; }
    int upper_bw() const { return ku_; }

    bool in_band(int i, int j) const {
        const int o = j - i;
        return i >= 0 && i < n_ && j >= 0 && j < n_ && o >= -kl_ && o <= ku_;
    }

    Scalar at(int i, int j) const {
        return in_band(i, j) ? bands_(i, j - i + kl_) : Scalar(0);
    }

    void set(int i, int j, Scalar v) {
        if (!in_band(i, j))
            throw std::domain_error("BandedMatrix::set: outside band");
        bands_(i, j - i + kl_) = v;
    }

    void add(int i, int j, Scalar v) { set(i, j, at(i, j) + v); }

    /// y = A*x.
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> multiply(
        const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x) const {
        if (x.size() != n_)
            throw std::domain_error("BandedMatrix::multiply: size mismatch");
        Eigen::Matrix<Scalar, Eigen::Dynamic, 1> y(n_);
        for (int i = 0; i < n_; ++i) {
            Scalar acc{0};
            const int jlo = std::max(0, i - kl_), jhi = std::min(n_ - 1, i + ku_);
            for (int j = jlo; j <= jhi; ++j) acc += bands_(i, j - i + kl_) * x(j);
            y(i) = acc;
        }
        return y;
    }

    /// x^T * A (used by the conservation identities).
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> multiply_left(
        const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x) const {
        Eigen::Matrix<Scalar, Eigen::Dynamic, 1> y =
            Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(n_);
        for (int i = 0; i < n_; ++i) {
            const int jlo = std::max(0, i - kl_), jhi = std::min(n_ - 1, i + ku_);
            for (int j = jlo; j <= jhi; ++j) y(j) += x(i) * bands_(i, j - i + kl_);
        }
        return y;
    }

    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> to_dense() const {
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> d =
            Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = std::max(0, i - kl_); j <= std::min(n_ - 1, i + ku_); ++j)
                d(i, j) = at(i, j);
        return d;
    }

  private:
    int n_, kl_, ku_;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> bands_;
};

/// Exact banded product; output bandwidths are the sums of the inputs',
/// capped at the dimension.
template <typename Scalar>
BandedMatrix<Scalar> band_matmul(const BandedMatrix<Scalar>& a,
                                 const BandedMatrix<Scalar>& b) {
    if (a.size() != b.size())
        throw std::domain_error("band_matmul: dimension mismatch");
    const int n = a.size();
    BandedMatrix<Scalar> c(n, a.lower_bw() + b.lower_bw(),
                           a.upper_bw() + b.upper_bw());
    for (int i = 0; i < n; ++i) {
        const int jlo = std::max(0, i - c.lower_bw());
        const int jhi = std::min(n - 1, i + c.upper_bw());
        for (int j = jlo; j <= jhi; ++j) {
            const int klo = std::max({0, i - a.lower_bw(), j - b.upper_bw()});
            const int khi =
                std::min({n - 1, i + a.upper_bw(), j + b.lower_bw()});
            Scalar acc{0};
            for (int k = klo; k <= khi; ++k) acc += a.at(i, k) * b.at(k, j);
            if (klo <= khi) c.set(i, j, acc);
        }
    }
    return c;
}

/// Evaluates sum_j coeffs[j] * (scale*A)^j as a banded matrix.
template <typename Scalar>
BandedMatrix<Scalar> band_polynomial(const BandedMatrix<Scalar>& a, Scalar scale,
                                     const std::vector<Scalar>& coeffs) {
    const int n = a.size();
    const int deg = static_cast<int>(coeffs.size()) - 1;
    BandedMatrix<Scalar> result(n, std::min((n - 1), a.lower_bw() * std::max(deg, 0)),
                                std::min((n - 1), a.upper_bw() * std::max(deg, 0)));
    BandedMatrix<Scalar> power = BandedMatrix<Scalar>::identity(n);
    for (int j = 0; j <= deg; ++j) {
        if (j > 0) power = band_matmul(power, a);
        Scalar cj = coeffs[j];
        for (int p = 0; p < j; ++p) cj *= scale;  // coeff of (scale*A)^j
        if (cj == Scalar(0)) continue;
        for (int i = 0; i < n; ++i) {
            const int jlo = std::max(0, i - power.lower_bw());
            const int jhi = std::min(n - 1, i + power.upper_bw());
            for (int col = jlo; col <= jhi; ++col)
                if (power.at(i, col) != Scalar(0))
                    result.add(i, col, cj * power.at(i, col));
        }
    }
    return result;
}

/// LU factorization of a banded matrix with partial pivoting (row
/// interchanges). The working array carries lower_bw extra superdiagonals of
/// fill, the standard band-factorization bound.
template <typename Scalar>
class BandedLU {
  public:
    explicit BandedLU(const BandedMatrix<Scalar>& a)
        : n_(a.size()),
          kl_(a.lower_bw()),
          ku_(std::min(a.upper_bw() + a.lower_bw(), n_ - 1)),
          work_(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(
              n_, kl_ + ku_ + 1)),
          mult_(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(
              std::max(kl_, 1), n_)),
          ipiv_(n_) {
        // Row i's window covers columns [i-kl, i+ku] (ku already includes the
        // fill allowance); offset c = j - i + kl.
        for (int i = 0; i < n_; ++i)
            for (int j = std::max(0, i - a.lower_bw());
                 j <= std::min(n_ - 1, i + a.upper_bw()); ++j)
                work_(i, j - i + kl_) = a.at(i, j);
        factor();
    }

    /// Solves A x = b using the stored factors.
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> solve(
        Eigen::Matrix<Scalar, Eigen::Dynamic, 1> b) const {
        if (b.size() != n_) throw std::domain_error("BandedLU::solve: size");
        for (int k = 0; k < n_; ++k) {
            if (ipiv_[k] != k) std::swap(b(k), b(ipiv_[k]));
            const int ilim = std::min(n_ - 1, k + kl_);
            for (int i = k + 1; i <= ilim; ++i) b(i) -= mult_(i - k - 1, k) * b(k);
        }
        for (int i = n_ - 1; i >= 0; --i) {
            Scalar acc = b(i);
            const int jhi = std::min(n_ - 1, i + ku_);
            for (int j = i + 1; j <= jhi; ++j) acc -= work_(i, j - i + kl_) * b(j);
            b(i) = acc / work_(i, kl_);
        }
        return b;
    }

  private:
    void factor() {
        for (int k = 0; k < n_; ++k) {
            const int plim = std::min(n_ - 1, k + kl_);
            int piv = k;
            for (int i = k + 1; i <= plim; ++i)
                if (std::abs(work_(i, k - i + kl_)) >
                    std::abs(work_(piv, k - piv + kl_)))
                    piv = i;
            ipiv_[k] = piv;
            if (std::abs(work_(piv, k - piv + kl_)) == 0)
                throw std::runtime_error("BandedLU: singular matrix");
            if (piv != k) {
                // Active columns at step k lie in [k, k+ku]; swap that segment.
                for (int j = k; j <= std::min(n_ - 1, k + ku_); ++j)
                    std::swap(work_(k, j - k + kl_), work_(piv, j - piv + kl_));
            }
            const Scalar pivot = work_(k, kl_);
            for (int i = k + 1; i <= plim; ++i) {
                const Scalar m = work_(i, k - i + kl_) / pivot;
                mult_(i - k - 1, k) = m;
                work_(i, k - i + kl_) = Scalar(0);
                for (int j = k + 1; j <= std::min(n_ - 1, k + ku_); ++j)
                    work_(i, j - i + kl_) -= m * work_(k, j - k + kl_);
            }
        }
    }

    int n_, kl_, ku_;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> work_;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> mult_;
    std::vector<int> ipiv_;
};

}  // namespace burgers7
