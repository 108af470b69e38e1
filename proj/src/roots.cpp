#include "chev/roots.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chev {

bool DiagramSymmetry::is_identity() const {
  for (std::size_t i = 0; i < permutation.size(); ++i)
    if (permutation[i] != static_cast<int>(i)) return false;
  return true;
}

namespace {

bool valid_pair(char kind, int rank) {
  switch (kind) {
    case 'A':
    case 'B': return rank >= 2;
    case 'C': return rank >= 3;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

}  // namespace

RootSystem::RootSystem(char kind, int rank) : kind_(kind), rank_(rank) {
  if (!valid_pair(kind, rank))
    throw std::invalid_argument("unsupported root system " + std::string(1, kind) +
                                std::to_string(rank) +
                                ": need an irreducible type of rank > 1");
  build_cartan();
  enumerate();
  find_symmetries();
}

std::string RootSystem::name() const { return std::string(1, kind_) + std::to_string(rank_); }

void RootSystem::build_cartan() {
  const int l = rank_;
  std::vector<std::pair<int, int>> edges;
  simple_length2_.assign(l, 2);
  switch (kind_) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) edges.emplace_back(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < l; ++i) edges.emplace_back(i, i + 1);
      std::fill(simple_length2_.begin(), simple_length2_.end(), 4);
      simple_length2_[l - 1] = 2;
      break;
    case 'C':
      for (int i = 0; i + 1 < l; ++i) edges.emplace_back(i, i + 1);
      simple_length2_[l - 1] = 4;
      break;
    case 'D':
      for (int i = 0; i + 2 < l; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(l - 3, l - 1);
      break;
    case 'E':
      edges = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}};
      if (l >= 7) edges.emplace_back(5, 6);
      if (l >= 8) edges.emplace_back(6, 7);
      break;
    case 'F':
      edges = {{0, 1}, {1, 2}, {2, 3}};
      simple_length2_ = {4, 4, 2, 2};
      break;
    case 'G':
      edges = {{0, 1}};
      simple_length2_ = {2, 6};
      break;
  }
  // Symmetric form (alpha_i, alpha_j) first, Cartan matrix derived from it.
  std::vector<std::vector<int>> form(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) form[i][i] = simple_length2_[i];
  for (auto [i, j] : edges) {
    int v = -std::max(simple_length2_[i], simple_length2_[j]) / 2;
    form[i][j] = form[j][i] = v;
  }
  cartan_.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) cartan_[i][j] = 2 * form[i][j] / simple_length2_[i];
}

int RootSystem::inner(const Root& a, const Root& b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      s += a[i] * b[j] * cartan_[i][j] * simple_length2_[i] / 2;
  }
  return s;
}

void RootSystem::enumerate() {
  const int l = rank_;
  std::vector<Root> positive;
  std::map<Root, int> seen;
  std::vector<Root> layer;
  for (int i = 0; i < l; ++i) {
    Root r(l, 0);
    r[i] = 1;
    layer.push_back(r);
    seen[r] = 1;
  }
  while (!layer.empty()) {
    std::vector<Root> next;
    for (const Root& beta : layer) {
      positive.push_back(beta);
      for (int i = 0; i < l; ++i) {
        Root down = beta;
        int p = 0;
        while (true) {
          down[i] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        int pair = 0;
        for (int j = 0; j < l; ++j) pair += beta[j] * cartan_[i][j];
        if (p - pair > 0) {
          Root up = beta;
          up[i] += 1;
          if (!seen.count(up)) {
            seen[up] = 1;
            next.push_back(up);
          }
        }
      }
    }
    layer = std::move(next);
  }
  auto height_of = [](const Root& r) { return std::accumulate(r.begin(), r.end(), 0); };
  std::sort(positive.begin(), positive.end(), [&](const Root& a, const Root& b) {
    int ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  for (const Root& r : positive) {
    roots_.push_back(r);
    Root neg = r;
    for (int& c : neg) c = -c;
    roots_.push_back(neg);
  }
  for (std::size_t k = 0; k < roots_.size(); ++k) index_[roots_[k]] = static_cast<int>(k);
  simple_.resize(l);
  for (int i = 0; i < l; ++i) {
    Root r(l, 0);
    r[i] = 1;
    simple_[i] = index_.at(r);
  }
  length2_.resize(roots_.size());
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    length2_[k] = inner(roots_[k], roots_[k]);
    max_length2_ = std::max(max_length2_, length2_[k]);
  }
  const int n = static_cast<int>(roots_.size());
  sums_.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Root s(l);
      for (int i = 0; i < l; ++i) s[i] = roots_[a][i] + roots_[b][i];
      sums_[a][b] = index_of(s);
    }
}

void RootSystem::find_symmetries() {
  std::vector<int> perm(rank_);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < rank_ && ok; ++i)
      for (int j = 0; j < rank_ && ok; ++j)
        if (cartan_[perm[i]][perm[j]] != cartan_[i][j]) ok = false;
    if (ok) symmetries_.push_back(DiagramSymmetry{perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
}

int RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::height(int index) const {
  const Root& r = roots_[index];
  return std::accumulate(r.begin(), r.end(), 0);
}

bool RootSystem::simply_laced() const {
  return kind_ == 'A' || kind_ == 'D' || kind_ == 'E';
}

int RootSystem::pairing(const Root& beta, const Root& alpha) const {
  return 2 * inner(beta, alpha) / inner(alpha, alpha);
}

int RootSystem::pairing(int beta, int alpha) const {
  return 2 * inner(roots_[beta], roots_[alpha]) / length2_[alpha];
}

std::pair<int, int> RootSystem::root_chain(int beta, int alpha) const {
  if (beta == alpha || beta == negative(alpha))
    throw std::invalid_argument("root_chain: beta must differ from +-alpha");
  int p = 0, q = 0;
  for (int cur = beta; (cur = sums_[cur][negative(alpha)]) >= 0;) ++p;
  for (int cur = beta; (cur = sums_[cur][alpha]) >= 0;) ++q;
  return {p, q};
}

int RootSystem::reflect(int alpha, int beta) const {
  int c = pairing(beta, alpha);
  Root r = roots_[beta];
  for (int i = 0; i < rank_; ++i) r[i] -= c * roots_[alpha][i];
  return index_.at(r);
}

int RootSystem::sum_index(int alpha, int beta) const { return sums_[alpha][beta]; }

std::vector<int> RootSystem::coroot(int index) const {
  std::vector<int> c(rank_);
  for (int i = 0; i < rank_; ++i)
    c[i] = roots_[index][i] * simple_length2_[i] / length2_[index];
  return c;
}

int RootSystem::highest_root() const { return static_cast<int>(roots_.size()) - 2; }

int RootSystem::apply_symmetry(const DiagramSymmetry& s, int index) const {
  Root r(rank_);
  for (int i = 0; i < rank_; ++i) r[s.permutation[i]] = roots_[index][i];
  return index_.at(r);
}

RootSystem build_root_system(char kind, int rank) { return RootSystem(kind, rank); }

RootSystem parse_system(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("malformed system name '" + name + "'");
  int rank = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9')
      throw std::invalid_argument("malformed system name '" + name + "'");
    rank = rank * 10 + (name[i] - '0');
  }
  return RootSystem(name[0], rank);
}

}  // namespace chev
