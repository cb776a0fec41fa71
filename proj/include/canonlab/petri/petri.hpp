#pragma once

#include <array>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "canonlab/groebner/groebner.hpp"

namespace canonlab {

using IndexPair = std::pair<int, int>;
using IndexTriple = std::array<int, 3>;

/// Sorted pair of distinct indices.
IndexPair pair_key(int i, int j);
/// Sorted triple of distinct indices.
IndexTriple triple_key(int i, int j, int k);

/// Quadrics f_ij indexed by unordered pairs of distinct indices.
template <class K>
class QuadricTable {
 public:
  void set(int i, int j, Polynomial<K> f) { table_.insert_or_assign(pair_key(i, j), std::move(f)); }
  /// f_ij = f_ji; throws std::out_of_range when absent.
  const Polynomial<K>& operator()(int i, int j) const { return table_.at(pair_key(i, j)); }
  const std::map<IndexPair, Polynomial<K>>& entries() const { return table_; }
  /// Values in increasing pair order (f12, f13, ...).
  std::vector<Polynomial<K>> list() const;

 private:
  std::map<IndexPair, Polynomial<K>> table_;
};

/// Petri data of a genus-5 curve: quadrics
///   f_ij = x_i x_j - sum_s a_sij x_s - q_ij,  1 <= i < j <= 3,
/// with a_sij for s in {i,j} free linear forms and a_kij = rho123 alpha_k
/// otherwise. Coefficient forms live in the two tail variables.
template <class K>
struct PetriSystemG5 {
  Ring<K> ring;
  std::array<std::string, 2> tail{"x4", "x0"};
  std::map<IndexTriple, Polynomial<K>> a_diag;  // key (s, i, j) with i < j and s in {i, j}
  K rho123{};
  std::array<Polynomial<K>, 3> alpha;
  std::map<IndexPair, Polynomial<K>> q;

  /// All coefficients zero, alpha_k = last tail variable.
  static PetriSystemG5 zero(const Ring<K>& ring, std::array<std::string, 2> tail = {"x4", "x0"});

  Polynomial<K> a(int s, int i, int j) const;
  Polynomial<K> quadratic(int i, int j) const;
};

/// Petri data of a genus-6 curve: f_ij = x_i x_j - sum_s a_sij x_s - q_ij(x0, x5)
/// for 1 <= i < j <= 4, with a_kij = rho_kij alpha_k whenever k is not in {i,j}.
template <class K>
struct PetriSystemG6 {
  Ring<K> ring;
  std::map<IndexTriple, K> rho;  // sorted 3-subsets; absent means 0
  std::array<Polynomial<K>, 4> alpha;
  std::map<IndexTriple, Polynomial<K>> a_diag;  // key (s, i, j) with i < j and s in {i, j}
  std::map<IndexPair, Polynomial<K>> q;
  /// When present, q_ij = b_ij x0 x5 for every listed pair, overriding q.
  std::optional<std::map<IndexPair, K>> b;

  /// All coefficients zero, alpha_k = x0 + x5.
  static PetriSystemG6 zero(const Ring<K>& ring);

  K rho_of(int i, int j, int k) const;
  void set_rho(int i, int j, int k, const K& value) { rho.insert_or_assign(triple_key(i, j, k), value); }
  /// a_sij; throws std::invalid_argument when it needs a vanishing alpha_s.
  Polynomial<K> a(int s, int i, int j) const;
  Polynomial<K> quadratic(int i, int j) const;
};

/// Throws std::invalid_argument unless every coefficient form is homogeneous of
/// the right degree in the tail variables and every key is admissible.
template <class K>
void validate(const PetriSystemG5<K>& sys);
template <class K>
void validate(const PetriSystemG6<K>& sys);

/// f12, f13, f23.
template <class K>
QuadricTable<K> build_g5_quadrics(const PetriSystemG5<K>& sys);
/// The six f_ij.
template <class K>
QuadricTable<K> build_g6_quadrics(const PetriSystemG6<K>& sys);

/// F1..F6 spanning the degree-2 part of the surface ideal, the dimension of
/// their span, and the combination rho234(F1-F3) - rho124(F2-F6) + rho134(F4-F5).
template <class K>
struct SurfaceQuadrics {
  std::array<Polynomial<K>, 6> F;
  std::size_t span_dim = 0;
  Polynomial<K> dependence;
};

/// Requires rho123 and rho124 nonzero (std::invalid_argument otherwise).
template <class K>
SurfaceQuadrics<K> surface_quadrics(const PetriSystemG6<K>& sys);

/// The dependence combination of F1..F6, with no precondition on rho.
template <class K>
Polynomial<K> dependence_relation(const PetriSystemG6<K>& sys);

/// Five quadrics spanning the same space as F1..F6, with distinct leading
/// monomials in the generic case. Requires rho123, rho124 nonzero.
template <class K>
std::vector<Polynomial<K>> fprime_basis(const PetriSystemG6<K>& sys);

/// rho_ijk f_lj - rho_ljk f_ij and rho_ikl rho_jkl f_ij - rho_ijk rho_ijl f_kl over
/// all orderings {i,j,k,l} = {1,2,3,4}; all of them lie in the surface ideal.
template <class K>
std::vector<Polynomial<K>> observation_quadrics(const PetriSystemG6<K>& sys);

/// Graph on {1,2,3,4} with an edge (i,j) when some rho_ijk is nonzero.
struct RhoGraph {
  std::set<IndexPair> edges;
  std::vector<std::vector<int>> components;  // each sorted, ordered by smallest vertex

  int predicted_beta13() const { return static_cast<int>(components.size()) - 1; }
};

template <class K>
RhoGraph rho_graph(const PetriSystemG6<K>& sys);

/// Quadrics of a genus-6 basis with leading monomial x_i x_j, 1 <= i < j <= 4.
/// Throws std::invalid_argument when one of the six is missing.
template <class K>
QuadricTable<K> petri_quadrics(const GroebnerBasis<K>& G);

/// The rho graph read off Petri-form quadrics: rho_kij != 0 exactly when f_ij
/// has a term x_k x0 or x_k x5 with k outside {i,j}.
template <class K>
RhoGraph rho_support_graph(const QuadricTable<K>& f);

/// Petri data of quadrics f_ij = x_i x_j - a_iij x_i - a_jij x_j - q_ij(x0, x5), that is
/// with every rho_kij = 0. Throws std::invalid_argument for quadrics of any other shape.
template <class K>
PetriSystemG6<K> rho_zero_system(const QuadricTable<K>& f);

class NumberingError : public std::runtime_error {
 public:
  NumberingError(const std::string& what, RhoGraph graph) : std::runtime_error(what), graph_(std::move(graph)) {}
  const RhoGraph& graph() const { return graph_; }

 private:
  RhoGraph graph_;
};

/// sigma[k-1] is the new label of index k.
using Permutation = std::array<int, 4>;

/// Lexicographically first sigma after which rho123 and rho124 are nonzero.
/// Throws NumberingError when none exists.
template <class K>
Permutation normalize_numbering(const PetriSystemG6<K>& sys);

/// Renames index k to sigma(k) throughout the data; the quadric f_ij of `sys`
/// becomes f_{sigma(i) sigma(j)} under x_k -> x_{sigma(k)}.
template <class K>
PetriSystemG6<K> relabel(const PetriSystemG6<K>& sys, const Permutation& sigma);

/// x_k f_il - x_l f_ik + sum_{s != k} a_sil f_sk - sum_{s != l} a_sik f_sl,
/// the quadric part of the Petri syzygy S_ikl.
template <class K>
Polynomial<K> syzygy_quadric_part(const PetriSystemG6<K>& sys, const QuadricTable<K>& f, int i, int k, int l);
template <class K>
Polynomial<K> syzygy_quadric_part(const PetriSystemG5<K>& sys, const QuadricTable<K>& f, int i, int k, int l);

template <class K>
struct Residual {
  std::string label;
  Polynomial<K> value;
};

/// Petri cubics G_kl (k < l) read off S_ikl with the smallest i having rho_ikl != 0.
template <class K>
std::map<IndexPair, Polynomial<K>> recovered_cubics(const PetriSystemG6<K>& sys);

/// Residuals of the Petri syzygies: S_ikl for every i other than the recovery
/// index (or every i when all rho_ikl vanish), plus G_kl + G_ln + G_nk. The
/// system lies on the Petri scheme iff all of them are zero.
template <class K>
std::vector<Residual<K>> petri_syzygy_residuals(const PetriSystemG6<K>& sys);
/// Same, with the cubics supplied by the caller instead of recovered.
template <class K>
std::vector<Residual<K>> petri_syzygy_residuals(const PetriSystemG6<K>& sys,
                                                const std::map<IndexPair, Polynomial<K>>& cubics);
/// Genus 5: when rho123 = 0 the three syzygies S_ikl must vanish outright.
template <class K>
std::vector<Residual<K>> petri_syzygy_residuals(const PetriSystemG5<K>& sys);

template <class K>
bool all_zero(const std::vector<Residual<K>>& residuals);

/// Checks, as formal identities in the symbols f_ij with the system's actual
/// coefficients, that the G terms of
///   rho_ikn rho_iln S_ikl + rho_ikn rho_ikl S_iln + rho_iln rho_ikl S_ink
/// cancel and that the rearranged quadric relation on the rho f - rho f
/// quadrics equals that combination. Throws std::invalid_argument on repeated
/// or out-of-range indices.
template <class K>
bool verify_lemma_34(const PetriSystemG6<K>& sys, int i, int k, int l, int n);

/// Random genus-6 data: nonzero rho and alpha, arbitrary a_diag and q.
template <class K>
PetriSystemG6<K> random_system_g6(const Ring<K>& ring, std::mt19937_64& rng);

}  // namespace canonlab
