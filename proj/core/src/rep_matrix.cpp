#include "foxmag/rep_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace foxmag {

RepMatrix::RepMatrix(RepSpec spec, int dim, VarSpec vars)
    : spec_(spec), dim_(dim), vars_(vars),
      entries_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
               LaurentPoly(vars)) {
    if (dim < 1)
        throw std::invalid_argument("matrix dimension must be positive");
}

RepMatrix RepMatrix::identity(RepSpec spec, int dim, VarSpec vars) {
    RepMatrix m(spec, dim, vars);
    for (int i = 1; i <= dim; ++i)
        m.at(i, i) = LaurentPoly::one(vars);
    return m;
}

const LaurentPoly& RepMatrix::at(int i, int j) const {
    if (i < 1 || i > dim_ || j < 1 || j > dim_)
        throw std::out_of_range("matrix index out of range");
    return entries_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(dim_) +
                    static_cast<std::size_t>(j - 1)];
}

LaurentPoly& RepMatrix::at(int i, int j) {
    return const_cast<LaurentPoly&>(std::as_const(*this).at(i, j));
}

RepMatrix RepMatrix::operator*(const RepMatrix& rhs) const {
    if (dim_ != rhs.dim_ || !(vars_ == rhs.vars_) || spec_ != rhs.spec_)
        throw std::invalid_argument("matrix shape or signature mismatch");
    RepMatrix out(spec_, dim_, vars_);
    for (int i = 1; i <= dim_; ++i)
        for (int k = 1; k <= dim_; ++k) {
            const LaurentPoly& a = at(i, k);
            if (a.is_zero())
                continue;
            for (int j = 1; j <= dim_; ++j) {
                const LaurentPoly& b = rhs.at(k, j);
                if (!b.is_zero())
                    out.at(i, j) += a * b;
            }
        }
    return out;
}

RepMatrix RepMatrix::operator-(const RepMatrix& rhs) const {
    if (dim_ != rhs.dim_ || !(vars_ == rhs.vars_) || spec_ != rhs.spec_)
        throw std::invalid_argument("matrix shape or signature mismatch");
    RepMatrix out(spec_, dim_, vars_);
    for (int i = 1; i <= dim_; ++i)
        for (int j = 1; j <= dim_; ++j)
            out.at(i, j) = at(i, j) - rhs.at(i, j);
    return out;
}

bool RepMatrix::is_identity() const {
    for (int i = 1; i <= dim_; ++i)
        for (int j = 1; j <= dim_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero())
                return false;
        }
    return true;
}

namespace {

LaurentPoly det_rec(const RepMatrix& m, std::vector<int>& cols, int row) {
    const VarSpec vars = m.vars();
    if (cols.size() == 1)
        return m.at(row, cols[0]);
    LaurentPoly acc(vars);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const LaurentPoly& pivot = m.at(row, cols[k]);
        if (pivot.is_zero())
            continue;
        const int col = cols[k];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
        LaurentPoly minor = det_rec(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
        LaurentPoly contrib = pivot * minor;
        acc += (k % 2 == 0) ? contrib : -contrib;
    }
    return acc;
}

} // namespace

LaurentPoly RepMatrix::det() const {
    std::vector<int> cols;
    cols.reserve(static_cast<std::size_t>(dim_));
    for (int j = 1; j <= dim_; ++j)
        cols.push_back(j);
    return det_rec(*this, cols, 1);
}

std::string RepMatrix::grid() const {
    std::vector<std::string> cells;
    cells.reserve(entries_.size());
    std::vector<std::size_t> width(static_cast<std::size_t>(dim_), 0);
    for (int i = 1; i <= dim_; ++i)
        for (int j = 1; j <= dim_; ++j) {
            cells.push_back(at(i, j).str());
            width[static_cast<std::size_t>(j - 1)] =
                std::max(width[static_cast<std::size_t>(j - 1)], cells.back().size());
        }
    std::string out;
    for (int i = 0; i < dim_; ++i) {
        out += "[ ";
        for (int j = 0; j < dim_; ++j) {
            const std::string& cell =
                cells[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                      static_cast<std::size_t>(j)];
            out += cell;
            out.append(width[static_cast<std::size_t>(j)] - cell.size(), ' ');
            out += j + 1 < dim_ ? "  " : " ";
        }
        out += "]\n";
    }
    return out;
}

} // namespace foxmag
