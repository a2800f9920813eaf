#pragma once

#include <map>
#include <vector>

#include "repzeta/schemes.hpp"

namespace repzeta {

// Matrix space over F_q whose rank strata are counted in closed form.
struct MatrixSpaceKind {
    enum class Tag { Alt, Mat, Sym } tag;
    int size; // matrix size: 2n+delta for Alt, n for Mat/Sym

    static MatrixSpaceKind alt(int size) { return {Tag::Alt, size}; }
    static MatrixSpaceKind mat(int n) { return {Tag::Mat, n}; }
    static MatrixSpaceKind sym(int n) { return {Tag::Sym, n}; }

    int free_coordinates() const; // dimension of the space
    int n() const { return tag == Tag::Alt ? size / 2 : size; }
    int delta() const { return tag == Tag::Alt ? size % 2 : 0; }
    std::string label() const;
};

// Closed rank-stratum count at corank index i (rank 2(n-i) for Alt, n-i
// otherwise); rational arithmetic must clear to an integer.
Int rank_count_closed(const MatrixSpaceKind& space, int corank_index, long q);

// Exhaustive enumeration with Gaussian elimination over F_q (q prime or 4):
// map from rank to count.
std::map<int, long> rank_count_enumerate(const MatrixSpaceKind& space, int q, int jobs = 1);

template <class T>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, T(0)) {}
    T& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const T& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

using IntMat = Matrix<Int>;
using SmallMat = Matrix<long long>;

// Specialization of the generic commutator matrix of the scheme's Lie
// lattice at the coordinate vector w (length d_rank):
//   F: antisymmetric (2n+delta) x (2n+delta) in the coordinates w_{ij}, i<j
//   G: [[0, M], [-M^t, 0]] with M the generic n x n matrix
//   H: [[0, S], [-S, 0]] with S the generic symmetric n x n matrix
template <class T>
Matrix<T> commutator_matrix(const GroupScheme& g, const std::vector<T>& w);

// Diagonal of the Smith normal form (entries made nonnegative, unsorted).
template <class T>
std::vector<T> smith_diagonal(Matrix<T> m);

// p-adic valuations of the elementary divisors of [mat; p^N I], i.e. of mat
// over Z/p^N with valuations capped at N; sorted nondecreasing, one entry per
// column.
template <class T>
std::vector<int> capped_divisor_valuations(const Matrix<T>& mat, long p, int N);

// The paired type of an antisymmetric matrix over Z/p^N: entries pair up
// (odd size contributes a final capped-infinity slot), and the type keeps one
// representative per pair.
template <class T>
std::vector<int> nu_type(const Matrix<T>& mat, long p, int N);

// Target type profile for (I, r_I): mu_l zeros, then partial sums of the
// r_i's in blocks of size mu_{l-1}, ..., mu_0 (the last block holds N).
std::vector<int> type_profile(const SubsetIndex& I, const std::vector<int>& r_I);

// |N_{I,r_I}| in closed form: f_{G,I}(p^{-1}) * p^{sum r_i a(G,i)}.
Int count_type_closed(const GroupScheme& g, const SubsetIndex& I,
                      const std::vector<int>& r_I, long p);

// Exhaustive count over primitive vectors w in (Z/p^N)^d of commutator
// matrices with the target type profile.
long count_type_enumerate(const GroupScheme& g, const SubsetIndex& I,
                          const std::vector<int>& r_I, long p, int jobs = 1);

// t-coefficients of the local zeta function assembled from type counts,
// independent of both closed formulas.
std::vector<long> local_zeta_truncation_oracle(const GroupScheme& g, long p, int t_order,
                                               int jobs = 1);

} // namespace repzeta
