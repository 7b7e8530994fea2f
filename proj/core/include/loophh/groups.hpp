#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "loophh/forms.hpp"
#include "loophh/matrix.hpp"
#include "loophh/sparse_matrix.hpp"

namespace loophh {

inline constexpr std::size_t kDefaultGroupBound = 1024;

/// g * conj(g)^T == I.
bool is_formally_unitary(const Matrix& g);

/// Finite matrix group acting linearly on a coordinate space.
class FiniteGroup {
 public:
  const CoordinateSpace& space() const { return space_; }
  std::size_t order() const { return elements_.size(); }
  /// Element as given (m x m on complex pairs, d x d on real spaces).
  const Matrix& element(std::size_t i) const { return elements_[i]; }
  /// Element acting on all num_vars() variables.
  const Matrix& variable_action(std::size_t i) const { return full_[i]; }
  std::size_t identity() const { return identity_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return mul_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inv_[a]; }
  std::size_t conjugate(std::size_t by, std::size_t g) const { return mul_[mul_[by][g]][inv_[by]]; }

  const std::vector<std::vector<std::size_t>>& conjugacy_classes() const { return classes_; }
  std::size_t class_of(std::size_t g) const { return class_of_[g]; }
  std::vector<std::size_t> centralizer(std::size_t g) const;

  friend FiniteGroup close_generators(const CoordinateSpace& space, const std::vector<Matrix>& gens,
                                      std::size_t bound);

 private:
  CoordinateSpace space_;
  std::vector<Matrix> elements_;
  std::vector<Matrix> full_;
  std::vector<std::vector<std::size_t>> mul_;
  std::vector<std::size_t> inv_;
  std::size_t identity_ = 0;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
};

/// Breadth-first closure; element 0 is the identity, the rest in discovery order.
/// Throws NonInvertibleGenerator, NonUnitary, DimensionMismatch or NotClosedWithinBound.
FiniteGroup close_generators(const CoordinateSpace& space, const std::vector<Matrix>& gens,
                             std::size_t bound = kDefaultGroupBound);

/// Basis of ker(g - I).
std::vector<Vector> fixed_subspace(const Matrix& g);

struct FiniteStratum {
  std::size_t element = 0;
  std::size_t conjugacy_class = 0;
  /// Fixed vectors in the variable coordinates of the group's space.
  std::vector<Vector> fixed_basis;
  std::vector<std::size_t> centralizer;
  std::string label;
};

std::vector<FiniteStratum> loop_space_finite(const FiniteGroup& g);

/// S^1 acting on C^m by t.z_k = exp(2 pi i w_k t) z_k.
struct CircleAction {
  std::vector<int> weights;
  int w = 1;  // lcm of |w_k|

  /// Throws InvalidInput on an empty or zero weight.
  static CircleAction make(std::vector<int> weights);
  CoordinateSpace space() const { return CoordinateSpace::complex_pairs(weights.size()); }
};

struct CircleStratum {
  int j = 0;               // point t = j / w; ignored when generic
  bool generic = false;    // witness for points with trivial isotropy
  std::vector<std::size_t> fixed;  // K_j, zero-based pair indices
  std::string label;
};

/// Points t = j/w for 0 <= j < w, then one generic stratum with empty fixed set.
std::vector<CircleStratum> circle_singular_points(const CircleAction& a);

/// Averaging operator (1/|G|) sum_g g^* on the (k, n) piece, in the GradedPiece basis.
SparseMatrix reynolds_projector(const FiniteGroup& g, int k, int n);

}  // namespace loophh
