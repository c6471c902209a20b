#ifndef RMGEO_FIELDS_HPP
#define RMGEO_FIELDS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rmgeo/exact.hpp"
#include "rmgeo/interval.hpp"
#include "rmgeo/poly.hpp"

namespace rmgeo {

/// A real root of a squarefree integer polynomial, isolated in [lo, hi].
/// Either lo == hi (an exact rational root) or the root is the only one in
/// (lo, hi) and the polynomial is nonzero at both ends.
struct RealRoot {
  IntPoly poly;
  BigRational lo, hi;

  void refine(const BigRational& width);
  /// Enclosure at 2^-K resolution (refines as needed).
  Fix enclose(const FixArith& A);
};

struct EmbeddingSet {
  IntPoly poly;
  std::vector<RealRoot> real_roots;  // increasing, pairwise disjoint
  int complex_pairs = 0;

  std::pair<int, int> signature() const { return {static_cast<int>(real_roots.size()), complex_pairs}; }
};

/// Sturm isolation; non-squarefree input -> squarefree-required.
EmbeddingSet isolate_real_roots(const IntPoly& p);

/// Q[x]/(p) for a primitive irreducible p of degree 1, 2 or 4.
class NumberField {
 public:
  explicit NumberField(const IntPoly& p);
  static NumberField parse(std::string_view text);

  const IntPoly& minpoly() const { return poly_; }
  int degree() const { return poly_.degree(); }
  const EmbeddingSet& embeddings() const { return emb_; }
  std::pair<int, int> signature() const { return emb_.signature(); }
  bool totally_real() const { return emb_.complex_pairs == 0; }

 private:
  IntPoly poly_;
  EmbeddingSet emb_;
};

/// Coordinates in the power basis 1, a, a^2, ... of a field element.
using FieldVec = std::vector<BigRational>;

/// Squarefree d with E = Q(sqrt(d)); E must be quadratic.
BigInt quadratic_radicand(const NumberField& E);

/// Coordinates of a square root of d_E inside F (top nonzero coordinate
/// positive), or nullopt when F does not contain E. Needs deg E = 2, deg F = 4.
std::optional<FieldVec> subfield_embed(const NumberField& E, const NumberField& F);

/// Multiplication matrix of a field element in the power basis (row-major).
std::vector<std::vector<BigRational>> multiplication_matrix(const NumberField& F, const FieldVec& x);

/// One real embedding of F over each real embedding of E:
/// choice[j] indexes F's real roots and lies over E's j-th real root.
struct RMType {
  std::vector<std::size_t> choice;

  friend bool operator==(const RMType&, const RMType&) = default;
};

struct RMTypeSet {
  std::vector<std::vector<std::size_t>> fibers;  // fibers[j] = F roots over E root j
  std::vector<RMType> types;                     // binary counting order over the fibers
  FieldVec e_generator;                          // image of E's root in F (power basis)
};

RMTypeSet rm_types(const NumberField& E, const NumberField& F);
std::vector<RMType> enumerate_rm_types(const NumberField& E, const NumberField& F);

struct HilbertLilac {
  RMType type;
  std::vector<std::size_t> fx_roots, fy_roots;  // F_x, F_y are spanned by these eigenlines
  std::vector<std::vector<BigRational>> e_action;  // multiplication by sqrt(d_E) (or 1 when E = Q)
  bool direct_sum_certified = false;
  bool e_stable_exact = false;
  bool commutator_certified = false;
  std::string direct_sum_det_numeric;
  long commutator_log2_bound = 0;  // every entry of [M, P_x] lies within 2^this of 0
  unsigned long precision_bits = 0;

  bool valid() const { return direct_sum_certified && e_stable_exact && commutator_certified; }
};

HilbertLilac hilbert_special_point(const NumberField& E, const NumberField& F, const RMType& t);

/// Upper-triangle entries (01, 02, 03, 12, 13, 23) of an alternating 4x4 matrix.
using Psi = std::array<BigInt, 6>;

BigInt pfaffian(const Psi& psi);

/// V = Z^4 with the power basis of K, signature (2, 1). F_x and F_y are the
/// eigenlines for the real roots r1 < r2, Pi the real plane under the complex
/// pair and F the line of the root with positive imaginary part.
struct SiegelPoint {
  IntPoly poly;
  RealRoot r1, r2;
  std::array<int, 3> dims{};  // (dim F_x, dim F_y, dim Pi)
  bool dims_certified = false;
  std::optional<Psi> psi;
};

SiegelPoint siegel_special_point(const NumberField& K);

/// Degree over K of gcd(G(s, t), p(t) / (t - s)) with G(s, t) = psi(w(s), w(t));
/// both isotropy conditions hold exactly when this is at least 2.
int isotropy_gcd_degree(const IntPoly& p, const Psi& psi);

struct PsiVerdict {
  bool accepted = false;
  std::string reason;       // "accepted", "degenerate", "fx_f_not_isotropic", "fy_fbar_not_isotropic"
  std::string witness;      // the offending pair and an enclosure of psi on it
  bool conjugation_symmetric = false;  // the F and Fbar computations agree
};

PsiVerdict verify_symplectic(SiegelPoint& point, const Psi& psi);

struct PsiSearch {
  std::optional<Psi> psi;
  std::size_t examined = 0;
  std::size_t nondegenerate = 0;
  std::size_t exact_checks = 0;
};

/// First compatible psi by height 1..H, then lexicographically from -h to h.
PsiSearch find_compatible_symplectic(SiegelPoint& point, unsigned H);

std::string to_string(const Psi& psi);
std::string to_string(const FieldVec& x, char var = 'a');

}  // namespace rmgeo

#endif  // RMGEO_FIELDS_HPP
