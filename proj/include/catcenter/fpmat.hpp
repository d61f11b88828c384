#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace catcenter {

/// Dense matrix over the prime field F_p, exact arithmetic.
/// Row-major; the Kronecker index convention is (i,j) -> i*cols(b)+j.
class FpMat {
public:
    FpMat() = default;
    FpMat(int rows, int cols, int p);
    FpMat(int p, std::initializer_list<std::initializer_list<int>> rows);

    static FpMat identity(int n, int p);
    static FpMat zero(int rows, int cols, int p);
    /// Permutation matrix for V_m (x) V_n -> V_n (x) V_m.
    static FpMat kron_swap(int m, int n, int p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int prime() const { return p_; }

    std::uint8_t at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, int v);

    bool operator==(const FpMat& o) const = default;

    FpMat operator*(const FpMat& o) const;  // composition: this after o
    FpMat operator+(const FpMat& o) const;

    std::string to_string() const;

private:
    int rows_ = 0, cols_ = 0, p_ = 2;
    std::vector<std::uint8_t> data_;
};

/// Kronecker product, exact mod p. kron(a,b) acts on V_a (x) V_b.
FpMat kron(const FpMat& a, const FpMat& b);

bool is_prime(int p);

/// Odometer over all rows x cols matrices mod p, starting from the zero
/// matrix. Returns false after the last matrix.
bool next_matrix(FpMat& m);

}  // namespace catcenter
