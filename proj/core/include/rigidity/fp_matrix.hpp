#ifndef RIGIDITY_FP_MATRIX_HPP
#define RIGIDITY_FP_MATRIX_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rigidity {

// Arithmetic in Z/p for a word-sized odd prime p; products go through
// 128-bit intermediates.
inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Inverse by Fermat; requires p prime and a != 0 mod p.
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("inverse of zero mod p");
    return pow_mod(a, p - 2, p);
}

class SolveError : public std::runtime_error {
public:
    enum class Kind { not_full_column_rank, inconsistent };
    SolveError(Kind kind, const char* what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Dense row-major matrix over Z/p. All entries stay reduced.
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(int rows, int cols, std::uint64_t p)
        : rows_(rows), cols_(cols), p_(p), a_(static_cast<std::size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
        if (p < 3) throw std::invalid_argument("modulus must be an odd prime >= 3");
    }

    static FpMatrix identity(int n, std::uint64_t p) {
        FpMatrix m(n, n, p);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint64_t modulus() const { return p_; }

    std::uint64_t at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, std::uint64_t value) {
        a_[static_cast<std::size_t>(r) * cols_ + c] = value % p_;
    }
    // Signed convenience for small differences.
    void set_signed(int r, int c, long long value) {
        long long m = value % static_cast<long long>(p_);
        if (m < 0) m += static_cast<long long>(p_);
        a_[static_cast<std::size_t>(r) * cols_ + c] = static_cast<std::uint64_t>(m);
    }

    bool operator==(const FpMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::uint64_t p_ = 3;
    std::vector<std::uint64_t> a_;
};

FpMatrix transpose(const FpMatrix& m);

// Matrix-vector product over Z/p.
std::vector<std::uint64_t> mat_vec(const FpMatrix& m, const std::vector<std::uint64_t>& x);

// Rank by Gaussian elimination with first-nonzero pivoting; input unchanged.
int rank_mod_p(const FpMatrix& m);

// Columns form a basis of ker(m), built from the reduced row echelon form's
// free columns, so the result is deterministic. cols() == nullity.
FpMatrix kernel_basis_mod_p(const FpMatrix& m);

// Unique solution of A x = b for A with full column rank; throws SolveError
// otherwise ("not full column rank" / "inconsistent").
std::vector<std::uint64_t> solve_mod_p(const FpMatrix& a, const std::vector<std::uint64_t>& b);

}  // namespace rigidity

#endif
