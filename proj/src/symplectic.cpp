#include "mlv/symplectic.hpp"

#include <bit>
#include <deque>
#include <unordered_set>

namespace mlv {

SymplecticMatrix SymplecticMatrix::identity(int k) {
  SymplecticMatrix m{k, std::vector<uint64_t>(2 * k, 0)};
  for (int i = 0; i < 2 * k; ++i) m.rows[i] = uint64_t{1} << i;
  return m;
}

SymplecticMatrix SymplecticMatrix::hadamard(int k, int q) {
  SymplecticMatrix m = identity(k);
  std::swap(m.rows[q], m.rows[k + q]);
  return m;
}

SymplecticMatrix SymplecticMatrix::phase(int k, int q) {
  SymplecticMatrix m = identity(k);
  m.rows[q] |= uint64_t{1} << (k + q);  // x_q row gains z_q
  return m;
}

SymplecticMatrix SymplecticMatrix::cnot(int k, int c, int t) {
  SymplecticMatrix m = identity(k);
  m.rows[c] |= uint64_t{1} << t;      // X_c -> X_c X_t
  m.rows[k + t] |= uint64_t{1} << (k + c);  // Z_t -> Z_c Z_t
  return m;
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& other) const {
  SymplecticMatrix out{k, std::vector<uint64_t>(2 * k, 0)};
  for (int r = 0; r < 2 * k; ++r) {
    uint64_t acc = 0;
    uint64_t row = rows[r];
    for (int c = 0; c < 2 * k; ++c) {
      if ((row >> c) & 1u) acc ^= other.rows[c];
    }
    out.rows[r] = acc;
  }
  return out;
}

bool SymplecticMatrix::is_symplectic() const {
  // M Omega M^T = Omega with Omega = [[0,I],[I,0]]:
  // <row_i, row_j>_symp = sum_q (a_q b_{k+q} + a_{k+q} b_q).
  auto form = [this](uint64_t a, uint64_t b) -> int {
    uint64_t lo_mask = (uint64_t{1} << k) - 1;
    uint64_t v = ((a & lo_mask) & (b >> k)) ^ ((a >> k) & (b & lo_mask));
    return std::popcount(v & lo_mask) & 1;
  };
  for (int i = 0; i < 2 * k; ++i) {
    for (int j = i; j < 2 * k; ++j) {
      int expected = (j == i + k && i < k) ? 1 : 0;
      if (form(rows[i], rows[j]) != expected) return false;
    }
  }
  return true;
}

uint64_t SymplecticMatrix::key() const {
  uint64_t out = 0;
  for (int r = 0; r < 2 * k; ++r) {
    out |= rows[r] << (8 * r);
  }
  return out;
}

SymplecticMatrix symplectic_product(const std::vector<SymplecticMatrix>& factors) {
  SymplecticMatrix m = SymplecticMatrix::identity(factors.at(0).k);
  for (const auto& f : factors) m = m * f;
  return m;
}

std::size_t symplectic_closure(const std::vector<SymplecticMatrix>& generators) {
  if (generators.empty()) return 1;
  int k = generators[0].k;
  if (k > 3) throw ValidationError("symplectic_closure: k > 3 not supported");
  for (const auto& g : generators) {
    if (g.k != k) throw DimensionError("symplectic_closure: mixed dimensions");
    if (!g.is_symplectic()) {
      throw ValidationError("symplectic_closure: non-symplectic generator");
    }
  }

  std::unordered_set<uint64_t> seen;
  std::deque<SymplecticMatrix> frontier;
  SymplecticMatrix id = SymplecticMatrix::identity(k);
  seen.insert(id.key());
  frontier.push_back(id);
  while (!frontier.empty()) {
    SymplecticMatrix cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      SymplecticMatrix next = cur * g;
      if (seen.insert(next.key()).second) frontier.push_back(next);
    }
  }
  return seen.size();
}

}  // namespace mlv
