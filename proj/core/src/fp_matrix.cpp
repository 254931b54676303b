#include "rigidity/fp_matrix.hpp"

#include <utility>

namespace rigidity {

FpMatrix transpose(const FpMatrix& m) {
    FpMatrix t(m.cols(), m.rows(), m.modulus());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) t.set(c, r, m.at(r, c));
    return t;
}

std::vector<std::uint64_t> mat_vec(const FpMatrix& m, const std::vector<std::uint64_t>& x) {
    if (static_cast<int>(x.size()) != m.cols()) throw std::invalid_argument("dimension mismatch");
    const std::uint64_t p = m.modulus();
    std::vector<std::uint64_t> y(m.rows(), 0);
    for (int r = 0; r < m.rows(); ++r) {
        std::uint64_t acc = 0;
        for (int c = 0; c < m.cols(); ++c) acc = add_mod(acc, mul_mod(m.at(r, c), x[c] % p, p), p);
        y[r] = acc;
    }
    return y;
}

namespace {

struct Echelon {
    FpMatrix m;              // reduced row echelon form
    std::vector<int> pivot;  // pivot column per pivot row
};

// Full RREF with first-nonzero pivoting (magnitude is meaningless in Z/p).
Echelon rref(FpMatrix m) {
    const std::uint64_t p = m.modulus();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pr = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m.at(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int c = 0; c < m.cols(); ++c) {
                std::uint64_t tmp = m.at(row, c);
                m.set(row, c, m.at(pr, c));
                m.set(pr, c, tmp);
            }
        std::uint64_t inv = inv_mod(m.at(row, col), p);
        for (int c = col; c < m.cols(); ++c) m.set(row, c, mul_mod(m.at(row, c), inv, p));
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            std::uint64_t f = m.at(r, col);
            if (f == 0) continue;
            for (int c = col; c < m.cols(); ++c)
                m.set(r, c, sub_mod(m.at(r, c), mul_mod(f, m.at(row, c), p), p));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

int rank_mod_p(const FpMatrix& m) { return static_cast<int>(rref(m).pivot.size()); }

FpMatrix kernel_basis_mod_p(const FpMatrix& m) {
    const std::uint64_t p = m.modulus();
    Echelon ech = rref(m);
    const int rank = static_cast<int>(ech.pivot.size());
    const int nullity = m.cols() - rank;
    FpMatrix basis(m.cols(), nullity, p);

    std::vector<int> pivot_row_of_col(m.cols(), -1);
    for (int r = 0; r < rank; ++r) pivot_row_of_col[ech.pivot[r]] = r;

    int out = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (pivot_row_of_col[c] >= 0) continue;  // pivot column
        basis.set(c, out, 1);
        for (int pc = 0; pc < m.cols(); ++pc) {
            int r = pivot_row_of_col[pc];
            if (r >= 0) basis.set(pc, out, sub_mod(0, ech.m.at(r, c), p));
        }
        ++out;
    }
    return basis;
}

std::vector<std::uint64_t> solve_mod_p(const FpMatrix& a, const std::vector<std::uint64_t>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("dimension mismatch");
    const std::uint64_t p = a.modulus();
    FpMatrix aug(a.rows(), a.cols() + 1, p);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.set(r, c, a.at(r, c));
        aug.set(r, a.cols(), b[r]);
    }
    // Eliminate on the coefficient columns only.
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < aug.rows(); ++col) {
        int pr = -1;
        for (int r = row; r < aug.rows(); ++r)
            if (aug.at(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int c = 0; c <= a.cols(); ++c) {
                std::uint64_t tmp = aug.at(row, c);
                aug.set(row, c, aug.at(pr, c));
                aug.set(pr, c, tmp);
            }
        std::uint64_t inv = inv_mod(aug.at(row, col), p);
        for (int c = col; c <= a.cols(); ++c) aug.set(row, c, mul_mod(aug.at(row, c), inv, p));
        for (int r = 0; r < aug.rows(); ++r) {
            if (r == row) continue;
            std::uint64_t f = aug.at(r, col);
            if (f == 0) continue;
            for (int c = col; c <= a.cols(); ++c)
                aug.set(r, c, sub_mod(aug.at(r, c), mul_mod(f, aug.at(row, c), p), p));
        }
        pivots.push_back(col);
        ++row;
    }
    if (static_cast<int>(pivots.size()) < a.cols())
        throw SolveError(SolveError::Kind::not_full_column_rank, "not full column rank");
    for (int r = static_cast<int>(pivots.size()); r < aug.rows(); ++r)
        if (aug.at(r, a.cols()) != 0)
            throw SolveError(SolveError::Kind::inconsistent, "inconsistent system");
    std::vector<std::uint64_t> x(a.cols());
    for (int r = 0; r < a.cols(); ++r) x[pivots[r]] = aug.at(r, a.cols());
    return x;
}

}  // namespace rigidity
