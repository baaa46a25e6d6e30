#pragma once
// Exact geometry of the exponent polytopes: P (with zeta), P0 (zeta forgotten), and the tiling of P0
// by P_I, P_II,t and P_III,(r,s,t).
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ehb/exponents.hpp"

namespace ehb {

using Alpha = std::array<Q, 6>;

bool in_P(const ExponentVector& v);
bool in_B(const ExponentVector& v);  // the slab reached by translations alone
bool in_P0(const Alpha& a);

// --- symmetry group: E6 root lattice translations and the flip -----------------------------

using LatticeVector = std::array<Q, 7>;  // 6 alpha shifts, then the zeta shift

bool in_lattice(const LatticeVector& x);

struct SymmetryElement {
  enum class Kind { TRANSLATION, FLIP, PERMUTATION };
  Kind kind = Kind::TRANSLATION;
  LatticeVector shift{};              // TRANSLATION
  std::array<int, 6> perm{0, 1, 2, 3, 4, 5};  // PERMUTATION: new a[i] = old a[perm[i]]

  static SymmetryElement translation(const LatticeVector& s);
  static SymmetryElement flip();
  static SymmetryElement permutation(const std::array<int, 6>& p);
  std::string str() const;
};

using Word = std::vector<SymmetryElement>;

ExponentVector apply(const SymmetryElement& g, const ExponentVector& v);
ExponentVector apply(const Word& w, const ExponentVector& v);  // leftmost element acts first
ExponentVector flip(const ExponentVector& v);

struct Reduction {
  Word word;
  ExponentVector result;
};

// Maps a balanced vector into P using translations and the flip. Throws NonTermination if the
// iteration guard trips (an implementation bug, never a valid outcome).
Reduction reduce_to_P(const ExponentVector& v);

// The 48 coordinate permutations of S4 x S2 (alphas among themselves, gammas among themselves).
const std::vector<std::array<int, 6>>& s4xs2();

// --- zeta and z-dependence ------------------------------------------------------------

Q zeta_for(const Alpha& a);  // throws DomainError outside P0
bool is_z_dependent(const ExponentVector& v);  // throws DomainError outside P

// --- tiling ----------------------------------------------------------------------------

struct TileId {
  enum class Kind { P_I, P_II, P_III };
  Kind kind = Kind::P_I;
  std::array<int, 3> idx{-1, -1, -1};  // P_II: idx[0] = t; P_III: r < s < t

  std::string str() const;  // "I", "II3", "III014"
  bool operator==(const TileId&) const = default;
  auto operator<=>(const TileId&) const = default;
};

struct Inequality {
  std::array<int, 6> c{};
  Q b;  // c . a <= b
  Q eval(const Alpha& a) const;
};

const std::vector<TileId>& all_tiles();  // canonical order: I, II0..II5, III in lexicographic order
const std::vector<Inequality>& tile_inequalities(const TileId& t);
bool in_tile(const TileId& t, const Alpha& a);
bool in_tile_interior(const TileId& t, const Alpha& a);  // every inequality strict

struct FaceSignature {
  TileId tile;
  std::vector<int> tight;  // indices into tile_inequalities(tile)
  int dim = 0;
};

std::vector<FaceSignature> face_of(const Alpha& a);  // all containing tiles, canonical order
bool is_system(const Alpha& a);
std::string face_name(const Alpha& a);  // throws DomainError unless is_system

// Exact rank of a set of integer rows, used for face dimensions.
int rational_rank(std::vector<std::vector<Q>> rows);

}  // namespace ehb
