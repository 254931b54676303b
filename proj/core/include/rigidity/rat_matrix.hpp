#ifndef RIGIDITY_RAT_MATRIX_HPP
#define RIGIDITY_RAT_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace rigidity {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Dense matrix over exact arbitrary-precision rationals. This is the
// cross-validation side of the toolkit: small, slow, and never rounds.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
    }

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool operator==(const RatMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

RatMatrix transpose(const RatMatrix& m);

std::vector<Rational> mat_vec(const RatMatrix& m, const std::vector<Rational>& x);

// Exact rank over Q.
int rank_rational(const RatMatrix& m);

// Columns form a basis of ker(m) over Q (free columns of the RREF).
RatMatrix kernel_basis_rational(const RatMatrix& m);

// Unique solution of A x = b for A with full column rank; throws SolveError.
std::vector<Rational> solve_rational(const RatMatrix& a, const std::vector<Rational>& b);

}  // namespace rigidity

#endif
