#include "catcenter/fpmat.hpp"

#include <sstream>
#include <stdexcept>

namespace catcenter {

FpMat::FpMat(int rows, int cols, int p) : rows_(rows), cols_(cols), p_(p) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("FpMat: negative shape");
    if (!is_prime(p)) throw std::invalid_argument("FpMat: p must be prime");
    data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

FpMat::FpMat(int p, std::initializer_list<std::initializer_list<int>> rows)
    : FpMat(static_cast<int>(rows.size()),
            rows.size() ? static_cast<int>(rows.begin()->size()) : 0, p) {
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_)
            throw std::invalid_argument("FpMat: ragged rows");
        int c = 0;
        for (int v : row) set(r, c++, v);
        ++r;
    }
}

FpMat FpMat::identity(int n, int p) {
    FpMat m(n, n, p);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMat FpMat::zero(int rows, int cols, int p) { return FpMat(rows, cols, p); }

FpMat FpMat::kron_swap(int m, int n, int p) {
    FpMat s(m * n, m * n, p);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) s.set(j * m + i, i * n + j, 1);
    return s;
}

void FpMat::set(int r, int c, int v) {
    int w = v % p_;
    if (w < 0) w += p_;
    data_[static_cast<std::size_t>(r) * cols_ + c] = static_cast<std::uint8_t>(w);
}

FpMat FpMat::operator*(const FpMat& o) const {
    if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("FpMat: bad product shape");
    FpMat r(rows_, o.cols_, p_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            int a = at(i, k);
            if (a == 0) continue;  // structure matrices are sparse
            for (int j = 0; j < o.cols_; ++j) {
                int b = o.at(k, j);
                if (b == 0) continue;
                std::size_t idx = static_cast<std::size_t>(i) * r.cols_ + j;
                r.data_[idx] = static_cast<std::uint8_t>((r.data_[idx] + a * b) % p_);
            }
        }
    }
    return r;
}

FpMat FpMat::operator+(const FpMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
        throw std::invalid_argument("FpMat: bad sum shape");
    FpMat r(rows_, cols_, p_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = static_cast<std::uint8_t>((data_[i] + o.data_[i]) % p_);
    return r;
}

std::string FpMat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << int(at(i, j));
        }
    }
    os << "]";
    return os.str();
}

FpMat kron(const FpMat& a, const FpMat& b) {
    if (a.prime() != b.prime()) throw std::invalid_argument("kron: mixed primes");
    FpMat r(a.rows() * b.rows(), a.cols() * b.cols(), a.prime());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            int av = a.at(i, k);
            if (av == 0) continue;
            for (int j = 0; j < b.rows(); ++j)
                for (int l = 0; l < b.cols(); ++l) {
                    int bv = b.at(j, l);
                    if (bv == 0) continue;
                    r.set(i * b.rows() + j, k * b.cols() + l, av * bv);
                }
        }
    return r;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool next_matrix(FpMat& m) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            int v = m.at(r, c) + 1;
            if (v < m.prime()) {
                m.set(r, c, v);
                return true;
            }
            m.set(r, c, 0);
        }
    return false;
}

}  // namespace catcenter
