#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twinfoam/exact.hpp"

namespace twinfoam {

/// Deformation parameters of the rank-2 algebra A = R[X]/(X^2 - h X - a).
/// (0,0) is the Khovanov specialization, (1,0) the Lee specialization.
struct Params {
    GaussianRational a;
    GaussianRational h;
};

/// c1 * 1 + cX * X in the storage basis {1, X}.
struct AlgElement {
    GaussianRational c1;
    GaussianRational cX;

    friend bool operator==(const AlgElement&, const AlgElement&) = default;
};

/// Dense matrix over Q(i). Row-major; tensor factors are indexed with the
/// first factor most significant, matching the Kronecker product.
class LinMap {
public:
    LinMap() : rows_(0), cols_(0) {}
    LinMap(int rows, int cols) : rows_(rows), cols_(cols), m_(size_t(rows) * cols) {}

    static LinMap identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GaussianRational& at(int r, int c) { return m_[size_t(r) * cols_ + c]; }
    const GaussianRational& at(int r, int c) const { return m_[size_t(r) * cols_ + c]; }

    LinMap scaled(const GaussianRational& s) const;
    LinMap operator-() const { return scaled(GaussianRational(-1)); }

    friend LinMap operator+(const LinMap& a, const LinMap& b);
    friend LinMap operator-(const LinMap& a, const LinMap& b);
    friend LinMap operator*(const LinMap& a, const LinMap& b); // composition a after b
    friend bool operator==(const LinMap& a, const LinMap& b);
    friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }

    std::vector<GaussianRational> apply(const std::vector<GaussianRational>& v) const;

    bool is_zero() const;
    std::string to_string() const;

private:
    int rows_;
    int cols_;
    std::vector<GaussianRational> m_;
};

/// kron(a, b): acts on the tensor product with a on the first factor.
LinMap tensor(const LinMap& a, const LinMap& b);

/// The flip v (x) w -> w (x) v on A (x) A.
LinMap flip2();

// --- structure maps of the twin pair (A_C, A_W), storage basis {1, X} ---
//
// Both multiplications agree; the W-side counit and comultiplication are the
// (-i)-twist of the C side. All maps are exact matrices over Q(i).

LinMap m_C(const Params& p);     // A(x)A -> A
LinMap delta_C(const Params& p); // A -> A(x)A
LinMap iota_C(const Params& p);  // R -> A
LinMap eps_C(const Params& p);   // A -> R

LinMap m_W(const Params& p);
LinMap delta_W(const Params& p);
LinMap iota_W(const Params& p);
LinMap eps_W(const Params& p);

// zippers/cozippers and their composites f = z2* o z1, g = z1* o z2
LinMap z1(const Params& p);
LinMap z1s(const Params& p);
LinMap z2(const Params& p);
LinMap z2s(const Params& p);
LinMap f_map(const Params& p);
LinMap g_map(const Params& p);

// Change of basis between the 0- basis {1, X} and the 0+ basis {1, h - X}.
// The change is an involution, so both directions share one matrix.
LinMap basis_to_plus(const Params& p);
LinMap basis_from_plus(const Params& p);

// Splitting isomorphisms A ~ R{1} + R{-1} and their inverses.
LinMap alpha_C(const Params& p); // A -> R^2
LinMap beta_C(const Params& p);  // R^2 -> A
LinMap alpha_W(const Params& p);
LinMap beta_W(const Params& p);

struct CheckReport {
    // (identity name, held exactly)
    std::vector<std::pair<std::string, bool>> results;

    bool all_passed() const;
    std::vector<std::string> failures() const;
};

// Verifies the full identical-twin axiom set as exact matrix identities:
// Frobenius axioms for both structures, algebra/coalgebra homomorphism laws,
// duality, the +-i zipper inverses, twisting, and the signed genus-one
// identity.
CheckReport check_axioms(const Params& p);

// Verifies the local relations the TQFT must satisfy: sphere, torus, the four
// UFO evaluations, genus-two handle (G2), surgery formula (SF) and
// cutting-neck (CN).
CheckReport check_local_relations(const Params& p);

} // namespace twinfoam
