#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "twinfoam/cube.hpp"
#include "twinfoam/diagram.hpp"
#include "twinfoam/exact.hpp"
#include "twinfoam/twinfrob.hpp"
#include "twinfoam/webs.hpp"

namespace twinfoam {

// Sparse matrix over Q(i), row-indexed.
class SparseMat {
public:
    SparseMat() = default;
    SparseMat(int rows, int cols) : rows_(rows), cols_(cols), row_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::map<int, GaussianRational>& row(int r) const { return row_[r]; }

    void add(int r, int c, const GaussianRational& v);
    bool is_zero() const;
    int nonzeros() const;

    SparseMat multiply(const SparseMat& other) const; // this o other

    // Exact Gaussian elimination; pivots favour the sparsest remaining row.
    int rank() const;

    // Restriction to given column/row index sets. Entries leaving the row set
    // are an error (used for q-degree blocks, which the differential must
    // respect).
    SparseMat restricted(const std::vector<int>& rows, const std::vector<int>& cols) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::map<int, GaussianRational>> row_;
};

struct BasisElement {
    std::uint32_t J = 0;
    std::uint32_t mask = 0; // bit (k-1-l) set: factor l carries X
    int factors = 0;
    int shift = 0; // 2 n+ - n- - |J|
    int qdeg = 0;  // internal degree + shift
};

struct HomologyOptions {
    ResolveOptions resolve{};
    unsigned component_shuffle_seed = 0; // nonzero: permute component numbering per vertex
    int threads = 1;
};

struct CochainComplex {
    int n_plus = 0;
    int n_minus = 0;
    Params params;
    std::vector<Resolution> resolutions;           // indexed by J
    std::vector<std::vector<BasisElement>> objects; // objects[w]: degree w - n_plus
    std::vector<SparseMat> differentials;           // d[w]: objects[w] -> objects[w+1]

    bool graded() const { return params.a.is_zero() && params.h.is_zero(); }
    int degree(int w) const { return w - n_plus; }
    int min_degree() const { return -n_plus; }
    int max_degree() const { return n_minus; }
};

// Assembles the signed total complex of the resolution cube. Every square
// face is checked to anti-commute and the assembled differential is checked
// to square to zero; failures throw D2ViolationError naming the face.
CochainComplex build_complex(const LinkDiagram& d, const Params& p, const HomologyOptions& opts = {});

struct BigradedDims {
    bool graded = false;
    std::map<std::pair<int, int>, int> by_ij; // populated when graded
    std::map<int, int> by_i;                  // always populated
    int total = 0;

    friend bool operator==(const BigradedDims&, const BigradedDims&) = default;
    std::string to_string() const; // aligned text table
};

// Cohomology dimensions over Q(i) by exact elimination; per-(i, q) blocks in
// the graded case, per-degree otherwise.
BigradedDims homology_dims(const CochainComplex& c, int threads = 1);

// Alternating sum of q-degrees over the cochain objects; equal to the
// alternating sum over cohomology by exactness.
LaurentPolynomial euler_characteristic(const CochainComplex& c);

// Two-variable Poincare polynomial in t (homological) and q; single-variable
// in t when the dimensions are not q-graded.
std::string poincare_string(const BigradedDims& dims);

} // namespace twinfoam
