#include "mlv/basis.hpp"

#include <algorithm>

#include "mlv/pauli.hpp"

namespace mlv {

bool SymplecticBasis::all_matched() const {
  return std::all_of(structure.begin(), structure.end(),
                     [](const PairClass& c) { return c.matched; });
}

ExistenceVerdict existence_check(const SelfDualCssCode& code) {
  // v.v over D reduces to sum_j b_j (h_j.h_j), so scanning the
  // representatives is complete.
  for (const auto& rep : code.coset_reps().rows()) {
    if (dot_mod2(rep, rep) == 1) {
      return ExistenceVerdict{true, rep};
    }
  }
  return ExistenceVerdict{false, std::nullopt};
}

SymplecticBasis symplectic_gram_schmidt(const std::vector<BitVector>& reps) {
  std::vector<BitVector> w = reps;
  SymplecticBasis out;
  while (!w.empty()) {
    std::size_t s = w.size();
    std::size_t p = s;
    for (std::size_t i = 0; i < s; ++i) {
      if (dot_mod2(w[i], w[i]) == 1) {
        p = i;
        break;
      }
    }
    if (p < s) {
      // Matched pair from w_p; re-orthogonalize the rest against it.
      out.pairs.push_back({w[p], w[p]});
      out.structure.push_back(PairClass{true, 0});
      std::vector<BitVector> next;
      next.reserve(s - 1);
      for (std::size_t q = 0; q < s; ++q) {
        if (q == p) continue;
        BitVector wq = w[q];
        if (dot_mod2(wq, w[p]) == 1) wq ^= w[p];
        next.push_back(std::move(wq));
      }
      w = std::move(next);
    } else {
      // All self-inner-products vanish; pair w_1 with the smallest partner
      // it anticommutes with.
      p = s;
      for (std::size_t i = 1; i < s; ++i) {
        if (dot_mod2(w[0], w[i]) == 1) {
          p = i;
          break;
        }
      }
      if (p == s) {
        throw ValidationError("symplectic_gram_schmidt: leading vector lies in D^perp "
                              "(input not independent modulo the stabilizer span)");
      }
      std::size_t m = out.pairs.size();
      out.pairs.push_back({w[0], w[p]});
      out.pairs.push_back({w[p], w[0]});
      out.structure.push_back(PairClass{false, m + 1});
      out.structure.push_back(PairClass{false, m});
      std::vector<BitVector> next;
      next.reserve(s - 2);
      for (std::size_t q = 1; q < s; ++q) {
        if (q == p) continue;
        BitVector wq = w[q];
        if (q < p) {
          if (dot_mod2(w[q], w[p]) == 1) wq ^= w[0];
        } else {
          if (dot_mod2(w[q], w[0]) == 1) wq ^= w[p];
          if (dot_mod2(w[q], w[p]) == 1) wq ^= w[0];
        }
        next.push_back(std::move(wq));
      }
      w = std::move(next);
    }
  }
  return out;
}

SymplecticBasis merge_triple(const SymplecticBasis& basis, std::size_t a,
                             std::size_t b, std::size_t c) {
  if (a == b || a == c || b == c) {
    throw ValidationError("merge_triple: indices must be distinct");
  }
  if (!basis.structure.at(a).matched) {
    throw ValidationError("merge_triple: index a is not a Matched pair");
  }
  if (basis.structure.at(b).matched || basis.structure.at(c).matched ||
      basis.structure[b].partner != c || basis.structure[c].partner != b) {
    throw ValidationError("merge_triple: (b, c) is not a Crossed pair");
  }
  SymplecticBasis out = basis;
  const BasisPair& pa = basis.pairs[a];
  const BasisPair& pb = basis.pairs[b];
  const BasisPair& pc = basis.pairs[c];
  out.pairs[a] = {pa.x ^ pb.x ^ pc.x, pa.z ^ pb.z ^ pc.z};
  out.pairs[b] = {pa.x ^ pb.x, pa.z ^ pc.z};
  out.pairs[c] = {pa.x ^ pc.x, pa.z ^ pb.z};
  out.structure[a] = out.structure[b] = out.structure[c] = PairClass{true, 0};
  return out;
}

SymplecticBasis build_compatible_basis(const SelfDualCssCode& code) {
  ExistenceVerdict verdict = existence_check(code);
  if (!verdict.exists) {
    throw UnsupportedError("no compatible symplectic basis exists for this code "
                           "(no coset representative has odd self-inner-product)");
  }
  std::vector<BitVector> reps = code.coset_reps().rows();
  auto witness = std::find_if(reps.begin(), reps.end(), [](const BitVector& v) {
    return dot_mod2(v, v) == 1;
  });
  std::rotate(reps.begin(), witness, witness + 1);

  SymplecticBasis basis = symplectic_gram_schmidt(reps);
  while (!basis.all_matched()) {
    std::size_t a = basis.size(), b = basis.size();
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (basis.structure[j].matched && a == basis.size()) a = j;
      if (!basis.structure[j].matched && b == basis.size()) b = j;
    }
    basis = merge_triple(basis, a, b, basis.structure[b].partner);
  }
  return basis;
}

SymplecticBasis classify_pairs(const std::vector<BasisPair>& pairs) {
  SymplecticBasis out;
  out.pairs = pairs;
  out.structure.assign(pairs.size(), PairClass{true, 0});
  std::vector<bool> done(pairs.size(), false);
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    if (done[j]) continue;
    if (pairs[j].x == pairs[j].z) {
      done[j] = true;
      continue;
    }
    std::size_t partner = pairs.size();
    for (std::size_t j2 = j + 1; j2 < pairs.size(); ++j2) {
      if (!done[j2] && pairs[j].x == pairs[j2].z && pairs[j2].x == pairs[j].z) {
        partner = j2;
        break;
      }
    }
    if (partner == pairs.size()) {
      throw ValidationError("classify_pairs: pair " + std::to_string(j + 1) +
                            " is neither matched nor crossed with a partner");
    }
    out.structure[j] = PairClass{false, partner};
    out.structure[partner] = PairClass{false, j};
    done[j] = done[partner] = true;
  }
  return out;
}

BasisReport verify_basis(const SelfDualCssCode& code, const SymplecticBasis& basis,
                         bool require_matched) {
  BasisReport report;
  std::size_t k = code.k();
  std::size_t n = code.n();
  if (basis.size() != k) {
    report.fail("pair count " + std::to_string(basis.size()) + " != k = " + std::to_string(k));
    return report;
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (basis.pairs[j].x.size() != n || basis.pairs[j].z.size() != n) {
      report.fail("pair " + std::to_string(j + 1) + ": support length != n");
      return report;
    }
  }

  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t j2 = 0; j2 < k; ++j2) {
      int expect = (j == j2) ? 1 : 0;
      if (dot_mod2(basis.pairs[j].x, basis.pairs[j2].z) != expect) {
        report.fail("symplectic relation violated: l" + std::to_string(j + 1) +
                    "^x . l" + std::to_string(j2 + 1) + "^z != " + std::to_string(expect));
      }
    }
  }
  for (std::size_t i = 0; i < code.r(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (dot_mod2(code.check_matrix().row(i), basis.pairs[j].x) != 0 ||
          dot_mod2(code.check_matrix().row(i), basis.pairs[j].z) != 0) {
        report.fail("pair " + std::to_string(j + 1) + " does not commute with stabilizer row " +
                    std::to_string(i + 1));
      }
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    const PairClass& cls = basis.structure[j];
    if (cls.matched) {
      if (!(basis.pairs[j].x == basis.pairs[j].z)) {
        report.fail("pair " + std::to_string(j + 1) + " marked Matched but supports differ");
      }
    } else {
      std::size_t j2 = cls.partner;
      if (j2 >= k || basis.structure[j2].matched || basis.structure[j2].partner != j ||
          !(basis.pairs[j].x == basis.pairs[j2].z) || !(basis.pairs[j2].x == basis.pairs[j].z)) {
        report.fail("pair " + std::to_string(j + 1) + " has inconsistent Crossed structure");
      }
    }
  }
  // Span: stabilizers plus the X supports must generate D (and likewise Z).
  for (const char* side : {"x", "z"}) {
    BitMatrix joint = code.check_matrix();
    for (std::size_t j = 0; j < k; ++j) {
      const BitVector& v = side[0] == 'x' ? basis.pairs[j].x : basis.pairs[j].z;
      if (!code.in_codeword_space(v)) {
        report.fail("pair " + std::to_string(j + 1) + " " + side + "-support is not a codeword");
      }
      joint.append_row(v);
    }
    if (rank(joint) != code.r() + k) {
      report.fail(std::string("stabilizers plus ") + side + "-supports do not span D");
    }
  }

  if (require_matched && report.pass) {
    TransversalLayer all_h = TransversalLayer::all_h(n);
    for (std::size_t j = 0; j < k; ++j) {
      PauliOperator image = conjugate_by_layer(PauliOperator::x_type(basis.pairs[j].x), all_h);
      PauliOperator expected = PauliOperator::z_type(basis.pairs[j].z);
      if (image == expected) continue;
      bool located = false;
      for (std::size_t j2 = 0; j2 < k; ++j2) {
        if (j2 != j && image == PauliOperator::z_type(basis.pairs[j2].z)) {
          report.fail("all-H maps X_" + std::to_string(j + 1) + " to Z_" + std::to_string(j2 + 1));
          if (j < j2) report.crossed_swaps.emplace_back(static_cast<int>(j + 1),
                                                        static_cast<int>(j2 + 1));
          located = true;
          break;
        }
      }
      if (!located) {
        report.fail("all-H image of X_" + std::to_string(j + 1) +
                    " is not the paired Z operator: " + image.to_string());
      }
    }
    for (std::size_t i = 0; i < code.r(); ++i) {
      const BitVector& g = code.check_matrix().row(i);
      PauliOperator image = conjugate_by_layer(PauliOperator::x_type(g), all_h);
      if (!(image == PauliOperator::z_type(g)) || !code.in_stabilizer_span(image.z)) {
        report.fail("all-H does not preserve stabilizer row " + std::to_string(i + 1));
      }
    }
  }
  return report;
}

}  // namespace mlv
