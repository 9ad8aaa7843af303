#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "detscheme/free_complex.hpp"
#include "detscheme/graded.hpp"
#include "detscheme/groebner.hpp"
#include "detscheme/linalg.hpp"

namespace detscheme {

/// k-basis of F_d: (generator, monomial of degree d - twist), ordered by
/// generator, then monomials lex-descending.
class DegreeBasis {
public:
    DegreeBasis(const GradedFreeModule& f, int d, std::size_t nvars);

    int degree() const { return degree_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const std::pair<int, Monomial>& operator[](int k) const { return elements_[static_cast<std::size_t>(k)]; }
    const std::vector<std::pair<int, Monomial>>& elements() const { return elements_; }
    /// Position of (generator, monomial) or -1.
    int index_of(int generator, const Monomial& m) const;

private:
    int degree_;
    std::vector<std::pair<int, Monomial>> elements_;
    std::vector<std::unordered_map<Monomial, int, MonomialHash>> lookup_;
};

DegreeBasis degree_basis(const GradedFreeModule& f, int d, std::size_t nvars);

/// dim_k F_d
long free_dimension(const GradedFreeModule& f, int d, std::size_t nvars);

/// Φ restricted to source_d -> target_d in DegreeBasis coordinates.
ScalarMatrix matrix_piece(const HomogeneousMatrix& phi, int d);

/// Coordinates of a homogeneous vector of total degree d (component i of
/// degree d - twist_i); throws InputError otherwise.
SparseVector coordinates(const std::vector<Polynomial>& v, const GradedFreeModule& f, const DegreeBasis& basis);
/// Inverse of coordinates.
std::vector<Polynomial> from_coordinates(const SparseVector& x, const RingPtr& ring, const GradedFreeModule& f,
                                         const DegreeBasis& basis);

/// Total degree of a homogeneous vector in F; nullopt for the zero vector.
/// Throws InputError when the components disagree with the twists.
std::optional<int> vector_degree(const std::vector<Polynomial>& v, const GradedFreeModule& f);

/// HF of coker Φ in every degree, read off a Gröbner basis of the image
/// submodule (encoded with one extra variable per target generator, all
/// products of two of them added). Falls back to elimination on degree
/// pieces when the encoding needs more than kMaxVariables variables.
class CokernelHilbert {
public:
    explicit CokernelHilbert(const HomogeneousMatrix& phi);
    long operator()(int d) const;
    /// rank of matrix_piece(phi, d)
    long piece_rank(int d) const;

private:
    HomogeneousMatrix phi_;
    bool by_elimination_ = false;
    /// Per target generator: x-parts of leading terms that sit on it.
    std::vector<std::vector<Monomial>> leading_;
};

long hilbert_quotient(const IdealBasis& ideal, int d);
long hilbert_cokernel(const HomogeneousMatrix& phi, int d);
long hilbert_kernel(const HomogeneousMatrix& phi, int d);
/// Same quantity by exact elimination on matrix_piece (slow at high degree
/// over QQ; used as a cross-check).
long hilbert_cokernel_by_elimination(const HomogeneousMatrix& phi, int d);

struct Membership {
    bool member = false;
    /// Source vector w with Φ w = v, when member.
    std::optional<std::vector<Polynomial>> preimage;
};

/// Is v in the image of Φ (degreewise linear solve)?
Membership image_membership(const std::vector<Polynomial>& v, const HomogeneousMatrix& phi);

/// Matrix of the ideal generators as a 1 x k map onto R.
HomogeneousMatrix ideal_matrix(const IdealBasis& ideal);

struct ExactnessEntry {
    int position;  // 1..length-1 interior, plus length (kernel of the last map)
    int degree;
    long kernel_dim;
    long image_dim;
    bool exact() const { return kernel_dim == image_dim; }
};

struct ExactnessReport {
    std::vector<ExactnessEntry> entries;
    /// HF of H_0 = coker d_1 in degrees lo..hi.
    std::vector<long> h0;
    int lo = 0, hi = 0;
    bool exact = true;
    /// First failing (position, degree), if any.
    std::optional<std::pair<int, int>> first_failure;
};

/// Checks H_i(C)_d = 0 for 1 <= i <= length and lo <= d <= hi.
ExactnessReport graded_exactness_check(const FreeComplex& c, int lo, int hi);

/// Default truncation: max generator degree + number of variables + 2.
int default_d_max(const HomogeneousMatrix& phi);

}  // namespace detscheme
