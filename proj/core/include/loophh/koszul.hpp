#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loophh/forms.hpp"
#include "loophh/groups.hpp"
#include "loophh/sparse_matrix.hpp"

namespace loophh {

struct HomologyEntry {
  int k = 0;
  int n = 0;
  std::size_t dim = 0;
  std::vector<PolyForm> representatives;  // filled only on request
};

struct HomologyReport {
  std::string stratum;
  std::vector<HomologyEntry> table;  // sorted by (k, n)

  std::size_t dim(int k, int n) const;  // 0 for absent entries
  void set(int k, int n, std::size_t dim);
};

/// Contraction complex (Ω^•, i_Y) truncated at internal degree nmax.
/// Masks restrict coefficient variables and differentials as in GradedPiece.
class GradedComplex {
 public:
  GradedComplex(PolyVectorField field, int nmax, std::string label, std::vector<bool> poly_mask = {},
                std::vector<bool> form_mask = {}, unsigned jobs = 1);

  const CoordinateSpace& space() const { return field_.space; }
  const PolyVectorField& field() const { return field_; }
  const std::string& label() const { return label_; }
  int nmax() const { return nmax_; }
  int top_degree() const { return top_; }

  GradedPiece piece(int k, int n) const;
  /// i_Y : Ω^k_n -> Ω^{k-1}_n in the graded bases; an empty 0 x dim matrix for k = 0.
  const SparseMatrix& differential(int k, int n) const;
  /// Checks that i_Y ∘ i_Y = 0 on every stored piece.
  bool composes_to_zero() const;

 private:
  PolyVectorField field_;
  int nmax_;
  int top_;
  std::string label_;
  std::vector<bool> poly_mask_, form_mask_;
  std::map<std::pair<int, int>, SparseMatrix> diffs_;
};

/// Complex for Y_h(v) = v - h v; h is given as for FiniteGroup elements.
GradedComplex build_twisted_koszul(const CoordinateSpace& space, const Matrix& h, int nmax, unsigned jobs = 1);

/// Homology dimensions for k <= kmax, n <= nmax (k <= n). Pieces are evaluated on `jobs` threads.
HomologyReport homology(const GradedComplex& c, int kmax, int nmax, unsigned jobs = 1,
                        bool representatives = false);

/// C(f, k) * #monomials of degree n - k in f variables.
std::size_t fixed_form_dimension(std::size_t f, int k, int n);

/// Projection onto terms involving only h-fixed coordinates (h diagonal in the variables).
PolyForm fixed_projection(const Matrix& h, const PolyForm& a);
/// Homotopy S with i_Y S + S i_Y = id - fixed_projection, for diagonal h.
/// Throws NotDiagonal or ResonantWeight.
PolyForm koszul_homotopy(const Matrix& h, const PolyForm& a);

/// Contraction homology of the Euler field sum_{j not in fixed} x_j d/dx_j on all forms.
HomologyReport euler_koszul_check(const CoordinateSpace& space, const std::vector<std::size_t>& fixed, int kmax,
                                  int nmax, unsigned jobs = 1);
/// Same field, with differentials restricted to the normal (non-fixed) directions.
HomologyReport parametrized_euler_koszul(const CoordinateSpace& space, const std::vector<std::size_t>& fixed,
                                         int kmax, int nmax, unsigned jobs = 1);

/// Coordinate space of the fixed pairs K of a circle stratum, labelled by their original pair numbers.
CoordinateSpace stratum_space(const CircleStratum& s);
/// Isotropy field E = sum_{k in K} w_k (z_k d/dz_k - z̄_k d/dz̄_k) on stratum_space(s).
PolyVectorField isotropy_field(const CircleAction& a, const CircleStratum& s);

/// Stalk homology of the circle Koszul complex at a stratum (see README for the reduction used).
/// Throws NotASingularPoint for j outside [0, w).
HomologyReport circle_stalk_homology(const CircleAction& a, const CircleStratum& s, int kmax, int nmax,
                                     unsigned jobs = 1);
HomologyReport circle_stalk_homology(const CircleAction& a, int j, int kmax, int nmax, unsigned jobs = 1);

}  // namespace loophh
