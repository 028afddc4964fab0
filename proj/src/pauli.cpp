#include "mlv/pauli.hpp"

#include <complex>
#include <cmath>

namespace mlv {

char gate_char(Gate g) {
  switch (g) {
    case Gate::I: return 'I';
    case Gate::X: return 'X';
    case Gate::Y: return 'Y';
    case Gate::Z: return 'Z';
    case Gate::H: return 'H';
    case Gate::S: return 'S';
    case Gate::Sdg: return 's';
  }
  return '?';
}

std::string gate_name(Gate g) {
  return g == Gate::Sdg ? "S†" : std::string(1, gate_char(g));
}

Gate gate_from_name(const std::string& s) {
  if (s == "I") return Gate::I;
  if (s == "X") return Gate::X;
  if (s == "Y") return Gate::Y;
  if (s == "Z") return Gate::Z;
  if (s == "H") return Gate::H;
  if (s == "S") return Gate::S;
  if (s == "Sdg" || s == "S†" || s == "s") return Gate::Sdg;
  throw ValidationError("unknown gate name: " + s);
}

Gate gate_inverse(Gate g) {
  if (g == Gate::S) return Gate::Sdg;
  if (g == Gate::Sdg) return Gate::S;
  return g;  // I, X, Y, Z, H are involutions
}

PauliOperator::PauliOperator(BitVector x_part, BitVector z_part, int p)
    : x(std::move(x_part)), z(std::move(z_part)), phase(((p % 4) + 4) % 4) {
  if (x.size() != z.size()) throw DimensionError("PauliOperator: x/z length mismatch");
}

PauliOperator PauliOperator::identity(std::size_t n) {
  return PauliOperator(BitVector(n), BitVector(n));
}

PauliOperator PauliOperator::x_type(const BitVector& support) {
  return PauliOperator(support, BitVector(support.size()));
}

PauliOperator PauliOperator::z_type(const BitVector& support) {
  return PauliOperator(BitVector(support.size()), support);
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t q, Gate which) {
  BitVector x(n), z(n);
  int phase = 0;
  switch (which) {
    case Gate::X: x.set(q, true); break;
    case Gate::Z: z.set(q, true); break;
    case Gate::Y:
      x.set(q, true);
      z.set(q, true);
      phase = 1;  // Y = i XZ
      break;
    default:
      throw ValidationError("PauliOperator::single expects X, Y, or Z");
  }
  return PauliOperator(std::move(x), std::move(z), phase);
}

bool PauliOperator::is_hermitian() const {
  // (i^p X^x Z^z)^dagger = i^(-p) (-1)^(x.z) X^x Z^z
  return phase % 2 == dot_mod2(x, z);
}

std::string PauliOperator::to_string() const {
  int y_count = static_cast<int>((x & z).weight());
  int display_phase = ((phase - y_count) % 4 + 4) % 4;  // fold XZ = -iY
  static const char* tokens[] = {"+1", "+i", "-1", "-i"};
  std::string s(tokens[display_phase]);
  s += ' ';
  for (std::size_t i = 0; i < size(); ++i) {
    bool xb = x.get(i), zb = z.get(i);
    s += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  return s;
}

PauliOperator pauli_multiply(const PauliOperator& a, const PauliOperator& b) {
  if (a.size() != b.size()) throw DimensionError("pauli_multiply: size mismatch");
  int phase = a.phase + b.phase + 2 * dot_mod2(a.z, b.x);
  return PauliOperator(a.x ^ b.x, a.z ^ b.z, phase);
}

bool pauli_commute(const PauliOperator& a, const PauliOperator& b) {
  return (dot_mod2(a.x, b.z) ^ dot_mod2(a.z, b.x)) == 0;
}

TransversalLayer TransversalLayer::uniform(std::size_t n, Gate g) {
  return TransversalLayer{std::vector<Gate>(n, g)};
}

TransversalLayer TransversalLayer::inverse() const {
  TransversalLayer inv;
  inv.gates.reserve(gates.size());
  for (Gate g : gates) inv.gates.push_back(gate_inverse(g));
  return inv;
}

std::string TransversalLayer::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (i) s += ' ';
    s += gate_name(gates[i]);
  }
  return s;
}

namespace {

// Image of the single-qubit generator X_q or Z_q under gate G, as
// (x bit, z bit, phase exponent of i).
struct GenImage {
  bool x, z;
  int phase;
};

GenImage image_of_x(Gate g) {
  switch (g) {
    case Gate::I: return {true, false, 0};
    case Gate::X: return {true, false, 0};
    case Gate::Y: return {true, false, 2};   // Y X Y = -X
    case Gate::Z: return {true, false, 2};   // Z X Z = -X
    case Gate::H: return {false, true, 0};   // H X H = Z
    case Gate::S: return {true, true, 1};    // S X S† = i XZ
    case Gate::Sdg: return {true, true, 3};  // S† X S = -i XZ
  }
  return {true, false, 0};
}

GenImage image_of_z(Gate g) {
  switch (g) {
    case Gate::I: return {false, true, 0};
    case Gate::X: return {false, true, 2};   // X Z X = -Z
    case Gate::Y: return {false, true, 2};
    case Gate::Z: return {false, true, 0};
    case Gate::H: return {true, false, 0};   // H Z H = X
    case Gate::S: return {false, true, 0};
    case Gate::Sdg: return {false, true, 0};
  }
  return {false, true, 0};
}

}  // namespace

PauliOperator conjugate_by_layer(const PauliOperator& p, const TransversalLayer& layer) {
  if (p.size() != layer.size()) throw DimensionError("conjugate_by_layer: size mismatch");
  std::size_t n = p.size();
  // Conjugation is a homomorphism; transform the X-part and Z-part
  // generators independently and accumulate the canonical product.
  // X generators first (they mutually commute, as do Z generators).
  BitVector rx(n), rz(n);
  int phase = p.phase;
  PauliOperator acc(std::move(rx), std::move(rz), phase);
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.x.get(i)) continue;
    GenImage im = image_of_x(layer.gates[i]);
    BitVector gx(n), gz(n);
    gx.set(i, im.x);
    gz.set(i, im.z);
    acc = pauli_multiply(acc, PauliOperator(std::move(gx), std::move(gz), im.phase));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.z.get(i)) continue;
    GenImage im = image_of_z(layer.gates[i]);
    BitVector gx(n), gz(n);
    gx.set(i, im.x);
    gz.set(i, im.z);
    acc = pauli_multiply(acc, PauliOperator(std::move(gx), std::move(gz), im.phase));
  }
  return acc;
}

PauliOperator conjugate_by_transversal_cnot(const PauliOperator& p) {
  if (p.size() % 2 != 0) {
    throw DimensionError("conjugate_by_transversal_cnot: odd total length");
  }
  std::size_t n = p.size() / 2;
  PauliOperator acc = PauliOperator::identity(2 * n);
  acc.phase = p.phase;
  // CNOT c->t maps X_c -> X_c X_t, X_t -> X_t, Z_c -> Z_c, Z_t -> Z_c Z_t,
  // each image phase-free; multiply images in X-then-Z order.
  for (std::size_t i = 0; i < 2 * n; ++i) {
    if (!p.x.get(i)) continue;
    BitVector gx(2 * n), gz(2 * n);
    gx.set(i, true);
    if (i < n) gx.set(i + n, true);
    acc = pauli_multiply(acc, PauliOperator(std::move(gx), std::move(gz)));
  }
  for (std::size_t i = 0; i < 2 * n; ++i) {
    if (!p.z.get(i)) continue;
    BitVector gx(2 * n), gz(2 * n);
    gz.set(i, true);
    if (i >= n) gz.set(i - n, true);
    acc = pauli_multiply(acc, PauliOperator(std::move(gx), std::move(gz)));
  }
  return acc;
}

namespace {

using Cplx = std::complex<double>;
using Mat = std::vector<std::vector<Cplx>>;

Mat single_gate_matrix(Gate g) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (g) {
    case Gate::I: return {{1, 0}, {0, 1}};
    case Gate::X: return {{0, 1}, {1, 0}};
    case Gate::Y: return {{0, Cplx(0, -1)}, {Cplx(0, 1), 0}};
    case Gate::Z: return {{1, 0}, {0, -1}};
    case Gate::H: return {{s, s}, {s, -s}};
    case Gate::S: return {{1, 0}, {0, Cplx(0, 1)}};
    case Gate::Sdg: return {{1, 0}, {0, Cplx(0, -1)}};
  }
  return {{1, 0}, {0, 1}};
}

Mat kron(const Mat& a, const Mat& b) {
  std::size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
  Mat out(ar * br, std::vector<Cplx>(ac * bc));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l)
          out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
  return out;
}

Mat matmul(const Mat& a, const Mat& b) {
  std::size_t n = a.size();
  Mat out(n, std::vector<Cplx>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Cplx aik = a[i][k];
      if (aik == Cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += aik * b[k][j];
    }
  return out;
}

Mat dagger(const Mat& a) {
  std::size_t n = a.size();
  Mat out(n, std::vector<Cplx>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = std::conj(a[j][i]);
  return out;
}

// Tensor with qubit 0 as the most significant bit of the index: basis state
// |b_0 b_1 ... b_{n-1}>.
Mat layer_matrix(const TransversalLayer& layer) {
  Mat m = single_gate_matrix(layer.gates[0]);
  for (std::size_t i = 1; i < layer.size(); ++i) {
    m = kron(m, single_gate_matrix(layer.gates[i]));
  }
  return m;
}

Mat pauli_matrix(const PauliOperator& p) {
  Mat m{{Cplx(1, 0)}};
  for (std::size_t i = 0; i < p.size(); ++i) {
    // Per-qubit factor X^x Z^z.
    Mat f = {{1, 0}, {0, 1}};
    if (p.x.get(i) && p.z.get(i)) {
      f = {{0, -1}, {1, 0}};  // XZ
    } else if (p.x.get(i)) {
      f = {{0, 1}, {1, 0}};
    } else if (p.z.get(i)) {
      f = {{1, 0}, {0, -1}};
    }
    m = kron(m, f);
  }
  Cplx ip = std::pow(Cplx(0, 1), p.phase);
  for (auto& row : m)
    for (auto& e : row) e *= ip;
  return m;
}

int round_phase_exponent(Cplx c) {
  // c must be a power of i
  static const Cplx units[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int k = 0; k < 4; ++k) {
    if (std::abs(c - units[k]) < 1e-6) return k;
  }
  throw ValidationError("dense oracle: result is not a Pauli (non-unit phase)");
}

}  // namespace

PauliOperator dense_oracle_conjugate(const PauliOperator& p, const TransversalLayer& layer) {
  std::size_t n = p.size();
  if (n != layer.size()) throw DimensionError("dense_oracle_conjugate: size mismatch");
  if (n > 7) throw ValidationError("dense_oracle_conjugate: refused for n > 7");

  Mat u = layer_matrix(layer);
  Mat m = matmul(matmul(u, pauli_matrix(p)), dagger(u));

  std::size_t dim = std::size_t{1} << n;
  // X^x Z^z |s> = (-1)^(z.s) |s ^ x| so column 0 pins down x and the phase,
  // and columns at unit vectors pin down z.
  std::size_t xmask = dim;
  for (std::size_t r = 0; r < dim; ++r) {
    if (std::abs(m[r][0]) > 1e-6) {
      xmask = r;
      break;
    }
  }
  if (xmask == dim) throw ValidationError("dense oracle: zero column");
  int phase = round_phase_exponent(m[xmask][0]);

  BitVector x(n), z(n);
  for (std::size_t q = 0; q < n; ++q) {
    std::size_t bit = std::size_t{1} << (n - 1 - q);  // qubit 0 is the MSB
    x.set(q, (xmask & bit) != 0);
    std::size_t col = bit;
    Cplx entry = m[col ^ xmask][col];
    int e = round_phase_exponent(entry / m[xmask][0]);
    if (e == 2) {
      z.set(q, true);
    } else if (e != 0) {
      throw ValidationError("dense oracle: inconsistent sign structure");
    }
  }
  return PauliOperator(std::move(x), std::move(z), phase);
}

}  // namespace mlv
