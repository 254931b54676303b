#include "rigidity/rat_matrix.hpp"

#include "rigidity/fp_matrix.hpp"  // SolveError

#include <utility>

namespace rigidity {

RatMatrix transpose(const RatMatrix& m) {
    RatMatrix t(m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
    return t;
}

std::vector<Rational> mat_vec(const RatMatrix& m, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != m.cols()) throw std::invalid_argument("dimension mismatch");
    std::vector<Rational> y(m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        Rational acc = 0;
        for (int c = 0; c < m.cols(); ++c) acc += m.at(r, c) * x[c];
        y[r] = acc;
    }
    return y;
}

namespace {

struct RatEchelon {
    RatMatrix m;
    std::vector<int> pivot;
};

// RREF over Q; cpp_rational keeps entries normalized after every step.
RatEchelon rref(RatMatrix m) {
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
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(pr, c));
        Rational inv = Rational(1) / m.at(row, col);
        for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            Rational f = m.at(r, col);
            if (f == 0) continue;
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

int rank_rational(const RatMatrix& m) { return static_cast<int>(rref(m).pivot.size()); }

RatMatrix kernel_basis_rational(const RatMatrix& m) {
    RatEchelon ech = rref(m);
    const int rank = static_cast<int>(ech.pivot.size());
    const int nullity = m.cols() - rank;
    RatMatrix basis(m.cols(), nullity);

    std::vector<int> pivot_row_of_col(m.cols(), -1);
    for (int r = 0; r < rank; ++r) pivot_row_of_col[ech.pivot[r]] = r;

    int out = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (pivot_row_of_col[c] >= 0) continue;
        basis.at(c, out) = 1;
        for (int pc = 0; pc < m.cols(); ++pc) {
            int r = pivot_row_of_col[pc];
            if (r >= 0) basis.at(pc, out) = -ech.m.at(r, c);
        }
        ++out;
    }
    return basis;
}

std::vector<Rational> solve_rational(const RatMatrix& a, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("dimension mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    RatEchelon ech = rref(std::move(aug));
    // A pivot in the last (augmented) column marks an inconsistent row.
    bool aug_pivot = !ech.pivot.empty() && ech.pivot.back() == a.cols();
    int coef_rank = static_cast<int>(ech.pivot.size()) - (aug_pivot ? 1 : 0);
    if (coef_rank < a.cols())
        throw SolveError(SolveError::Kind::not_full_column_rank, "not full column rank");
    if (aug_pivot) throw SolveError(SolveError::Kind::inconsistent, "inconsistent system");
    std::vector<Rational> x(a.cols());
    for (int r = 0; r < a.cols(); ++r) x[r] = ech.m.at(r, a.cols());
    return x;
}

}  // namespace rigidity
