#pragma once

#include "foxmag/laurent.hpp"

#include <string>
#include <vector>

namespace foxmag {

/// A square matrix over a Laurent polynomial ring, tagged with the
/// specialization it was produced under.
///
/// Matrices act on row vectors from the right, so row i is the image of the
/// i-th basis vector and products read left to right in composition order.
class RepMatrix {
public:
    RepMatrix(RepSpec spec, int dim, VarSpec vars); // zero matrix
    static RepMatrix identity(RepSpec spec, int dim, VarSpec vars);

    RepSpec spec() const { return spec_; }
    int dim() const { return dim_; }
    const VarSpec& vars() const { return vars_; }

    const LaurentPoly& at(int i, int j) const; // 1-based
    LaurentPoly& at(int i, int j);

    RepMatrix operator*(const RepMatrix& rhs) const;
    RepMatrix operator-(const RepMatrix& rhs) const;
    bool operator==(const RepMatrix& rhs) const = default;

    bool is_identity() const;

    /// Exact determinant by cofactor expansion; fine at the dimensions the
    /// representations live in.
    LaurentPoly det() const;

    /// Pretty text grid with aligned columns.
    std::string grid() const;

private:
    RepSpec spec_;
    int dim_;
    VarSpec vars_;
    std::vector<LaurentPoly> entries_; // row-major
};

} // namespace foxmag
