#ifndef SAL_STS_HPP
#define SAL_STS_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sal/error.hpp"

namespace sal {

// Points are 1..n. Blocks are stored as sorted triples in lexicographic order.
using Block = std::array<int, 3>;

struct BlockSet {
  int n = 0;
  std::vector<Block> blocks;

  // Sorts each triple and the block list; rejects malformed or duplicate
  // blocks and any pair of points covered twice.
  static BlockSet make(int n, std::vector<Block> blocks);
};

struct ReplicationProfile {
  std::vector<int> per_point;  // r_i, indexed by point-1
  bool regular = false;
  int r = 0;  // common replication number when regular
};

// Checks the partial-linear-space law (every pair in at most one block) and
// block well-formedness; returns per-point replication counts.
ReplicationProfile validate_psts(const BlockSet& raw);

class SteinerTripleSystem {
public:
  int n() const { return base_.n; }
  int block_count() const { return static_cast<int>(base_.blocks.size()); }
  int replication() const { return r_; }
  const std::vector<Block>& blocks() const { return base_.blocks; }
  const BlockSet& base() const { return base_; }

  // The quasigroup i∘j: third point of the block through i and j; i∘i = i.
  int join(int i, int j) const { return join_[idx(i)][idx(j)]; }

  const std::vector<Block>& blocks_through(int i) const { return through_[idx(i)]; }
  bool has_block(const Block& b) const;

private:
  friend SteinerTripleSystem as_sts(const BlockSet&);
  BlockSet base_;
  int r_ = 0;
  std::vector<std::vector<int>> join_;
  std::vector<std::vector<Block>> through_;

  std::size_t idx(int p) const {
    if (p < 1 || p > base_.n) throw Error(ErrorCode::InvalidArgument, "point out of range");
    return static_cast<std::size_t>(p - 1);
  }
};

// Verifies every pair is covered exactly once, builds the join table and
// checks the quasigroup identities join(i, join(i,j)) = j.
SteinerTripleSystem as_sts(const BlockSet& raw);

// Affine space AG(m,3): points are vectors of (Z/3)^m labeled
// 1 + sum a_k 3^(k-1); blocks are the lines {x, y, -x-y}.
SteinerTripleSystem construct_ag(int m);

// Fano plane, STS(7).
SteinerTripleSystem construct_fano();
// Bose construction, n ≡ 3 (mod 6) (idempotent quasigroup on Z_t, t = n/3).
SteinerTripleSystem construct_bose(int n);
// Skolem construction, n ≡ 1 (mod 6) (half-idempotent quasigroup of order
// (n-1)/3 plus an infinity point labeled n).
SteinerTripleSystem construct_skolem(int n);

struct HallCheck {
  bool hall = true;
  std::array<int, 3> witness{0, 0, 0};  // violating (i, j, k) when !hall
};

// Distributivity of the join quasigroup: (i∘j)∘(i∘k) = i∘(j∘k) for pairwise
// distinct i, j, k, cross-checked against the equivalent k∘((k∘j)∘i) = (k∘i)∘j.
HallCheck is_hall(const SteinerTripleSystem& s);

// sigma maps point p to sigma[p-1]; must be a bijection of 1..n.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& sigma, int n);
bool is_automorphism(const SteinerTripleSystem& s, const Permutation& sigma);

// The involution j ↦ i∘j. An automorphism of s exactly when the Hall
// identities hold through i.
Permutation sigma_involution(const SteinerTripleSystem& s, int i);

Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation inverse(const Permutation& a);

// STS file format: first non-comment line is n, then one block per line as
// three space-separated labels; '#' starts a comment.
BlockSet read_sts(std::istream& in);
BlockSet read_sts_file(const std::string& path);
BlockSet read_sts_string(const std::string& text);
std::string write_sts(const BlockSet& s);
void write_sts_file(const BlockSet& s, const std::string& path);

}  // namespace sal

#endif
