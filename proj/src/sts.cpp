#include "sal/sts.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sal {

namespace {

std::string block_str(const Block& b) {
  return "{" + std::to_string(b[0]) + "," + std::to_string(b[1]) + "," + std::to_string(b[2]) + "}";
}

}  // namespace

BlockSet BlockSet::make(int n, std::vector<Block> blocks) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative point count");
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
    if (blocks[i] == blocks[i + 1])
      throw Error(ErrorCode::MalformedBlock, "duplicate block " + block_str(blocks[i]));
  BlockSet s;
  s.n = n;
  s.blocks = std::move(blocks);
  validate_psts(s);
  return s;
}

ReplicationProfile validate_psts(const BlockSet& raw) {
  const int n = raw.n;
  ReplicationProfile prof;
  prof.per_point.assign(static_cast<std::size_t>(n), 0);

  // pair -> index of covering block, -1 if none
  std::vector<int> cover(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  auto pair_at = [&](int i, int j) -> int& {
    return cover[static_cast<std::size_t>(i - 1) * n + (j - 1)];
  };

  for (std::size_t bi = 0; bi < raw.blocks.size(); ++bi) {
    const Block& b = raw.blocks[bi];
    if (b[0] < 1 || b[2] > n || b[0] == b[1] || b[1] == b[2])
      throw Error(ErrorCode::MalformedBlock, block_str(b) + " on n=" + std::to_string(n));
    for (int p : b) prof.per_point[static_cast<std::size_t>(p - 1)]++;
    for (int x : b)
      for (int y : b) {
        if (x >= y) continue;
        int& c = pair_at(x, y);
        if (c >= 0)
          throw Error(ErrorCode::DuplicatePairInTwoBlocks,
                      "pair (" + std::to_string(x) + "," + std::to_string(y) + ") in " +
                          block_str(raw.blocks[static_cast<std::size_t>(c)]) + " and " + block_str(b));
        c = static_cast<int>(bi);
      }
  }

  prof.regular = true;
  prof.r = n > 0 ? prof.per_point[0] : 0;
  for (int ri : prof.per_point)
    if (ri != prof.r) prof.regular = false;
  if (!prof.regular) prof.r = 0;
  return prof;
}

SteinerTripleSystem as_sts(const BlockSet& raw) {
  ReplicationProfile prof = validate_psts(raw);
  const int n = raw.n;

  SteinerTripleSystem s;
  s.base_ = raw;
  s.join_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  s.through_.assign(static_cast<std::size_t>(n), {});
  for (int i = 1; i <= n; ++i) s.join_[i - 1][i - 1] = i;

  for (const Block& b : raw.blocks) {
    for (int x : b) s.through_[x - 1].push_back(b);
    for (int x : b)
      for (int y : b) {
        if (x == y) continue;
        int z = b[0] + b[1] + b[2] - x - y;
        s.join_[x - 1][y - 1] = z;
      }
  }

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (s.join_[i - 1][j - 1] == 0)
        throw Error(ErrorCode::UncoveredPair, "(" + std::to_string(i) + "," + std::to_string(j) + ")");

  // quasigroup identities are structural here, but check them anyway
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (s.join(i, s.join(i, j)) != j)
        throw Error(ErrorCode::MalformedBlock, "join cancellation failed");

  s.r_ = prof.regular ? prof.r : 0;
  return s;
}

bool SteinerTripleSystem::has_block(const Block& b) const {
  Block sorted = b;
  std::sort(sorted.begin(), sorted.end());
  return std::binary_search(base_.blocks.begin(), base_.blocks.end(), sorted);
}

SteinerTripleSystem construct_ag(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidDimension, "AG(m,3) needs m >= 1");
  int n = 1;
  for (int k = 0; k < m; ++k) n *= 3;

  auto digits = [m](int label) {
    std::vector<int> d(static_cast<std::size_t>(m));
    int p = label - 1;
    for (int k = 0; k < m; ++k) {
      d[static_cast<std::size_t>(k)] = p % 3;
      p /= 3;
    }
    return d;
  };
  auto label = [m](const std::vector<int>& d) {
    int p = 0;
    for (int k = m - 1; k >= 0; --k) p = p * 3 + d[static_cast<std::size_t>(k)];
    return p + 1;
  };

  std::vector<Block> blocks;
  for (int x = 1; x <= n; ++x) {
    auto dx = digits(x);
    for (int y = x + 1; y <= n; ++y) {
      auto dy = digits(y);
      std::vector<int> dz(static_cast<std::size_t>(m));
      for (int k = 0; k < m; ++k)
        dz[static_cast<std::size_t>(k)] = ((6 - dx[static_cast<std::size_t>(k)] - dy[static_cast<std::size_t>(k)]) % 3);
      int z = label(dz);
      if (z > y) blocks.push_back({x, y, z});
    }
  }
  return as_sts(BlockSet::make(n, std::move(blocks)));
}

SteinerTripleSystem construct_fano() {
  std::vector<Block> blocks;
  for (int i = 0; i < 7; ++i)
    blocks.push_back({i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
  return as_sts(BlockSet::make(7, std::move(blocks)));
}

SteinerTripleSystem construct_bose(int n) {
  if (n < 3 || n % 6 != 3) throw Error(ErrorCode::InvalidOrder, "Bose needs n = 3 (mod 6)");
  const int t = n / 3;
  const int s = (t - 1) / 2;
  // idempotent commutative quasigroup on Z_t: x∘y = (x+y)/2 = (x+y)(s+1) mod t
  auto q = [t, s](int x, int y) { return ((x + y) * (s + 1)) % t; };
  auto lab = [t](int x, int i) { return i * t + x + 1; };

  std::vector<Block> blocks;
  for (int x = 0; x < t; ++x) blocks.push_back({lab(x, 0), lab(x, 1), lab(x, 2)});
  for (int i = 0; i < 3; ++i)
    for (int x = 0; x < t; ++x)
      for (int y = x + 1; y < t; ++y) blocks.push_back({lab(x, i), lab(y, i), lab(q(x, y), (i + 1) % 3)});
  return as_sts(BlockSet::make(n, std::move(blocks)));
}

SteinerTripleSystem construct_skolem(int n) {
  if (n < 7 || n % 6 != 1) throw Error(ErrorCode::InvalidOrder, "Skolem needs n = 1 (mod 6), n >= 7");
  const int s = (n - 1) / 6;
  const int q2 = 2 * s;
  // half-idempotent commutative quasigroup on {1..2s}: relabel the addition
  // table of Z_2s so that x∘x = x for x <= s and (s+x)∘(s+x) = x.
  auto rho = [s](int e) { return e % 2 == 0 ? e / 2 + 1 : s + (e + 1) / 2; };
  auto q = [q2, rho](int x, int y) { return rho((x + y - 2) % q2); };
  // groups 1..3 occupy labels (i-1)*2s + x; the infinity point is label n
  auto lab = [q2](int x, int i) { return (i - 1) * q2 + x; };
  const int inf = n;

  std::vector<Block> blocks;
  for (int x = 1; x <= s; ++x) {
    blocks.push_back({lab(x, 1), lab(x, 2), lab(x, 3)});
    blocks.push_back({inf, lab(s + x, 1), lab(x, 2)});
    blocks.push_back({inf, lab(s + x, 2), lab(x, 3)});
    blocks.push_back({inf, lab(s + x, 3), lab(x, 1)});
  }
  for (int i = 1; i <= 3; ++i)
    for (int x = 1; x <= q2; ++x)
      for (int y = x + 1; y <= q2; ++y) blocks.push_back({lab(x, i), lab(y, i), lab(q(x, y), i % 3 + 1)});
  return as_sts(BlockSet::make(n, std::move(blocks)));
}

HallCheck is_hall(const SteinerTripleSystem& s) {
  const int n = s.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        bool ok1 = s.join(s.join(i, j), s.join(i, k)) == s.join(i, s.join(j, k));
        bool ok2 = s.join(k, s.join(s.join(k, j), i)) == s.join(s.join(k, i), j);
        if (!ok1 || !ok2) return {false, {i, j, k}};
      }
    }
  return {true, {0, 0, 0}};
}

bool is_permutation(const Permutation& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : sigma) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) return false;
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return true;
}

bool is_automorphism(const SteinerTripleSystem& s, const Permutation& sigma) {
  if (!is_permutation(sigma, s.n())) throw Error(ErrorCode::NotAPermutation, "is_automorphism");
  for (const Block& b : s.blocks()) {
    Block image{sigma[static_cast<std::size_t>(b[0] - 1)], sigma[static_cast<std::size_t>(b[1] - 1)],
                sigma[static_cast<std::size_t>(b[2] - 1)]};
    if (!s.has_block(image)) return false;
  }
  return true;
}

Permutation sigma_involution(const SteinerTripleSystem& s, int i) {
  Permutation p(static_cast<std::size_t>(s.n()));
  for (int j = 1; j <= s.n(); ++j) p[static_cast<std::size_t>(j - 1)] = s.join(i, j);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i] - 1)];
  return r;
}

Permutation inverse(const Permutation& a) {
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[static_cast<std::size_t>(a[i] - 1)] = static_cast<int>(i) + 1;
  return r;
}

BlockSet read_sts(std::istream& in) {
  std::string line;
  bool have_n = false;
  int n = 0;
  std::vector<Block> blocks;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!have_n) {
      if (ls >> n) {
        int extra;
        if (ls >> extra) throw Error(ErrorCode::ParseError, "line 1 must contain only n");
        have_n = true;
      }
      continue;
    }
    int a, b, c;
    if (!(ls >> a)) continue;  // blank/comment line
    if (!(ls >> b >> c)) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected three labels");
    int extra;
    if (ls >> extra) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected three labels");
    blocks.push_back({a, b, c});
  }
  if (!have_n) throw Error(ErrorCode::ParseError, "missing point count");
  return BlockSet::make(n, std::move(blocks));
}

BlockSet read_sts_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::IoError, "cannot open " + path);
  return read_sts(f);
}

BlockSet read_sts_string(const std::string& text) {
  std::istringstream in(text);
  return read_sts(in);
}

std::string write_sts(const BlockSet& s) {
  std::ostringstream out;
  out << s.n << "\n";
  for (const Block& b : s.blocks) out << b[0] << " " << b[1] << " " << b[2] << "\n";
  return out.str();
}

void write_sts_file(const BlockSet& s, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  f << write_sts(s);
  if (!f) throw Error(ErrorCode::IoError, "write failed: " + path);
}

}  // namespace sal
