#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsc/scalar.hpp"

namespace hsc {

using Vec = std::vector<Scalar>;

struct Entry {
    int row;
    int col;
    Scalar value;
};

// Dense or sparse exact matrix with explicit domain/codomain dimensions.
// Immutable after construction; canonical form keeps entries sorted by
// (row, col) with no duplicates and no zeros.
//
// Tensor legs use the global ROW-MAJOR flat index convention: the basis
// vector e_i (x) e_j of an (m, n) tensor space sits at flat index i*n + j,
// 0-based. See README; this is the single most bug-prone convention in the
// whole artifact and is fixed once here.
class LinearMap {
  public:
    LinearMap(Field field, int rows, int cols, std::vector<Entry> entries);

    static LinearMap identity(const Field& field, int n);
    static LinearMap zero(const Field& field, int rows, int cols);
    static LinearMap from_dense(const Field& field, const std::vector<std::vector<Scalar>>& rows);
    static LinearMap from_ints(const Field& field, const std::vector<std::vector<long>>& rows);
    // Column vector as an n x 1 map.
    static LinearMap from_vec(const Field& field, const Vec& v);
    // The flip e_i (x) e_j -> e_j (x) e_i on an (m, n) tensor space.
    static LinearMap swap_legs(const Field& field, int m, int n);
    // Permutation matrix reordering tensor legs with the given dimensions:
    // output leg j is input leg perm[j].
    static LinearMap leg_permutation(const Field& field, const std::vector<int>& dims,
                                     const std::vector<int>& perm);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Entry>& entries() const { return entries_; }

    Scalar at(int row, int col) const;
    Vec column(int col) const;
    std::vector<std::vector<Scalar>> to_dense() const;

    bool is_zero() const { return entries_.empty(); }
    bool operator==(const LinearMap& rhs) const;
    bool operator!=(const LinearMap& rhs) const { return !(*this == rhs); }

    LinearMap operator+(const LinearMap& rhs) const;
    LinearMap operator-(const LinearMap& rhs) const;
    LinearMap scale(const Scalar& c) const;
    // Composition f.compose(g) = f o g (apply g first).
    LinearMap compose(const LinearMap& g) const;
    // Kronecker product under the row-major convention.
    LinearMap tensor(const LinearMap& g) const;
    LinearMap transpose() const;
    Vec apply(const Vec& x) const;

    int rank() const;
    // Injection k : K -> domain whose image is ker(f); columns form the
    // reduced-echelon basis (pivots 1, zeros above and below), so the output
    // is deterministic.
    LinearMap kernel() const;
    // Injection codomain <- im(f) with echelonized basis columns.
    LinearMap image() const;
    // Some x with f(x) = b (free variables zero under the echelon pivoting
    // order), or nullopt if inconsistent.
    std::optional<Vec> solve(const Vec& b) const;
    // Columnwise solve: X with (*this) o X == b, or nullopt.
    std::optional<LinearMap> solve_matrix(const LinearMap& b) const;
    std::optional<LinearMap> invert() const;

    std::string str() const;

  private:
    Field field_;
    int rows_;
    int cols_;
    std::vector<Entry> entries_;
};

// X with inclusion o X == f; throws NotWellDefined (with `what` as context)
// when im(f) is not contained in im(inclusion).
LinearMap factor_through(const LinearMap& inclusion, const LinearMap& f, const std::string& what);

// True iff every column of `sub` lies in the image of `sup`.
bool image_contained(const LinearMap& sub, const LinearMap& sup);

}  // namespace hsc
