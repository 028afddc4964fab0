#include "mlv/concat.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace mlv {

std::size_t ConcatenatedCode::width(std::size_t l) const {
  if (l >= level_widths.size()) {
    throw DimensionError("width: level out of range");
  }
  return level_widths[l];
}

std::vector<std::size_t> level_dims(const ConcatenatedCode& cc, std::size_t l) {
  if (l > cc.depth()) throw DimensionError("level_dims: level out of range");
  std::vector<std::size_t> dims(cc.depth());
  for (std::size_t i = 0; i < cc.depth(); ++i) {
    dims[i] = (i < l) ? cc.levels[i].k() : cc.levels[i].n();
  }
  return dims;
}

std::vector<std::size_t> index_to_coords(const ConcatenatedCode& cc, std::size_t l,
                                         std::size_t idx) {
  std::vector<std::size_t> dims = level_dims(cc, l);
  std::vector<std::size_t> coords(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    coords[i] = idx % dims[i];
    idx /= dims[i];
  }
  return coords;
}

std::size_t coords_to_index(const ConcatenatedCode& cc, std::size_t l,
                            const std::vector<std::size_t>& coords) {
  std::vector<std::size_t> dims = level_dims(cc, l);
  std::size_t idx = 0;
  for (std::size_t i = dims.size(); i-- > 0;) {
    idx = idx * dims[i] + coords[i];
  }
  return idx;
}

BitVector expand_one_level(const ConcatenatedCode& cc, std::size_t l, const BitVector& support,
                           bool z_side) {
  if (l < 1 || l > cc.depth()) throw DimensionError("expand_one_level: level out of range");
  if (support.size() != cc.width(l)) {
    throw DimensionError("expand_one_level: support length != level width");
  }
  BitVector out(cc.width(l - 1));
  for (std::size_t idx = 0; idx < support.size(); ++idx) {
    if (!support.get(idx)) continue;
    std::vector<std::size_t> coords = index_to_coords(cc, l, idx);
    std::size_t j = coords[l - 1];
    const BitVector& pattern =
        z_side ? cc.bases[l - 1].pairs[j].z : cc.bases[l - 1].pairs[j].x;
    for (std::size_t b = 0; b < pattern.size(); ++b) {
      if (!pattern.get(b)) continue;
      coords[l - 1] = b;
      std::size_t low = coords_to_index(cc, l - 1, coords);
      out.set(low, !out.get(low));
    }
  }
  return out;
}

BitVector expand_to_physical(const ConcatenatedCode& cc, std::size_t l, const BitVector& support,
                             bool z_side) {
  BitVector cur = support;
  for (std::size_t lev = l; lev >= 1; --lev) {
    cur = expand_one_level(cc, lev, cur, z_side);
  }
  return cur;
}

namespace {

void materialize(ConcatenatedCode& cc) {
  std::size_t L = cc.depth();
  // Stabilizers of Q_l act on coordinate c_l of one block at level l-1.
  for (std::size_t l = 1; l <= L; ++l) {
    const SelfDualCssCode& code = cc.levels[l - 1];
    std::size_t w = cc.width(l - 1);
    for (std::size_t idx = 0; idx < w; ++idx) {
      std::vector<std::size_t> coords = index_to_coords(cc, l - 1, idx);
      if (coords[l - 1] != 0) continue;  // one anchor per block
      for (const BitVector& row : code.check_matrix().rows()) {
        BitVector sup(w);
        for (std::size_t b = 0; b < row.size(); ++b) {
          if (!row.get(b)) continue;
          coords[l - 1] = b;
          sup.set(coords_to_index(cc, l - 1, coords), true);
        }
        coords[l - 1] = 0;
        cc.stabilizers.push_back(expand_to_physical(cc, l - 1, sup, false));
      }
    }
  }
  for (std::size_t j = 0; j < cc.K; ++j) {
    BitVector top(cc.K);
    top.set(j, true);
    cc.logical_pairs.push_back({expand_to_physical(cc, L, top, false),
                                expand_to_physical(cc, L, top, true)});
  }
}

}  // namespace

ConcatenatedCode concatenate_with_bases(const std::vector<SelfDualCssCode>& codes,
                                        std::vector<SymplecticBasis> bases) {
  if (codes.empty()) throw ValidationError("concatenate: empty level list");
  if (bases.size() != codes.size()) {
    throw DimensionError("concatenate: one basis per level required");
  }
  ConcatenatedCode cc;
  cc.levels = codes;
  cc.bases = std::move(bases);
  cc.N = 1;
  cc.K = 1;
  cc.distance_lb = 1;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (cc.bases[i].size() != codes[i].k()) {
      throw DimensionError("concatenate: basis size mismatch at level " + std::to_string(i + 1));
    }
    cc.N *= codes[i].n();
    cc.K *= codes[i].k();
    if (codes[i].r() + codes[i].k() <= 24) {
      cc.distance_lb *= min_distance_bruteforce(codes[i]);
    }
  }
  cc.level_widths.resize(codes.size() + 1);
  for (std::size_t l = 0; l <= codes.size(); ++l) {
    std::size_t w = 1;
    for (std::size_t i = 0; i < codes.size(); ++i) {
      w *= (i < l) ? codes[i].k() : codes[i].n();
    }
    cc.level_widths[l] = w;
  }
  materialize(cc);
  return cc;
}

ConcatenatedCode concatenate(const std::vector<SelfDualCssCode>& codes) {
  std::vector<SymplecticBasis> bases;
  bases.reserve(codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (!existence_check(codes[i]).exists) {
      throw UnsupportedError("concatenate: level " + std::to_string(i + 1) +
                             " has no compatible symplectic basis");
    }
    bases.push_back(build_compatible_basis(codes[i]));
  }
  return concatenate_with_bases(codes, std::move(bases));
}

PhasePattern lift_sign_pattern(const ConcatenatedCode& cc, const PhasePattern& top) {
  if (top.size() != cc.K) throw DimensionError("lift_sign_pattern: pattern length != K");
  PhasePattern cur = top;
  for (std::size_t l = cc.depth(); l >= 1; --l) {
    const SelfDualCssCode& code = cc.levels[l - 1];
    PhasePattern next;
    next.signs.assign(cc.width(l - 1), +1);
    for (std::size_t idx = 0; idx < cc.width(l); ++idx) {
      std::vector<std::size_t> coords = index_to_coords(cc, l, idx);
      if (coords[l - 1] != 0) continue;
      PhasePattern target;
      target.signs.resize(code.k());
      for (std::size_t j = 0; j < code.k(); ++j) {
        coords[l - 1] = j;
        target.signs[j] = cur.signs[coords_to_index(cc, l, coords)];
      }
      PhasePattern block = synthesize_phase_layer(code, cc.bases[l - 1], target);
      for (std::size_t b = 0; b < code.n(); ++b) {
        coords[l - 1] = b;
        next.signs[coords_to_index(cc, l - 1, coords)] = block.signs[b];
      }
      coords[l - 1] = 0;
    }
    cur = std::move(next);
  }
  return cur;
}

MultilevelReport verify_multilevel(const ConcatenatedCode& cc, std::size_t samples,
                                   uint64_t seed) {
  MultilevelReport report;
  for (std::size_t i = 0; i < cc.depth(); ++i) {
    BasisReport b = verify_basis(cc.levels[i], cc.bases[i], true);
    for (const auto& f : b.failures) {
      report.fail("level " + std::to_string(i + 1) + ": " + f);
    }
  }

  BitMatrix stab(0, cc.N);
  for (const auto& s : cc.stabilizers) stab.append_row(s);
  RrefResult stab_red = rref(stab);

  for (std::size_t a = 0; a < cc.stabilizers.size(); ++a) {
    for (std::size_t b = a; b < cc.stabilizers.size(); ++b) {
      if (dot_mod2(cc.stabilizers[a], cc.stabilizers[b]) != 0) {
        report.fail("stabilizers " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                    " do not commute");
      }
    }
  }
  for (std::size_t j = 0; j < cc.K; ++j) {
    for (std::size_t j2 = 0; j2 < cc.K; ++j2) {
      int expect = (j == j2) ? 1 : 0;
      if (dot_mod2(cc.logical_pairs[j].x, cc.logical_pairs[j2].z) != expect) {
        report.fail("lifted pairs " + std::to_string(j + 1) + "/" + std::to_string(j2 + 1) +
                    " violate the symplectic relation");
      }
    }
    for (const auto& s : cc.stabilizers) {
      if (dot_mod2(s, cc.logical_pairs[j].x) != 0 || dot_mod2(s, cc.logical_pairs[j].z) != 0) {
        report.fail("lifted pair " + std::to_string(j + 1) + " does not commute with a stabilizer");
      }
    }
  }

  TransversalLayer all_h = TransversalLayer::all_h(cc.N);
  for (std::size_t j = 0; j < cc.K; ++j) {
    PauliOperator xj = PauliOperator::x_type(cc.logical_pairs[j].x);
    PauliOperator zj = PauliOperator::z_type(cc.logical_pairs[j].z);
    if (!(conjugate_by_layer(xj, all_h) == zj)) {
      report.fail("all-H does not map lifted X_" + std::to_string(j + 1) + " to Z_" +
                  std::to_string(j + 1) + " with phase 0");
    }
    if (!(conjugate_by_layer(zj, all_h) == xj)) {
      report.fail("all-H does not map lifted Z_" + std::to_string(j + 1) + " back to X_" +
                  std::to_string(j + 1));
    }
  }
  for (std::size_t s = 0; s < cc.stabilizers.size(); ++s) {
    PauliOperator image = conjugate_by_layer(PauliOperator::x_type(cc.stabilizers[s]), all_h);
    if (!(image == PauliOperator::z_type(cc.stabilizers[s])) ||
        !in_rowspace(stab_red, image.z)) {
      report.fail("all-H does not preserve concatenated stabilizer " + std::to_string(s + 1));
    }
  }

  // Sign patterns: exhaustive when feasible, seeded sampling otherwise.
  std::vector<uint64_t> patterns;
  if (cc.K < 20 && (uint64_t{1} << cc.K) <= samples) {
    for (uint64_t p = 0; p < (uint64_t{1} << cc.K); ++p) patterns.push_back(p);
  } else {
    std::mt19937_64 rng(seed);
    std::set<uint64_t> chosen;
    uint64_t mask = (cc.K >= 64) ? ~uint64_t{0} : (uint64_t{1} << cc.K) - 1;
    while (chosen.size() < samples) chosen.insert(rng() & mask);
    patterns.assign(chosen.begin(), chosen.end());
  }
  for (uint64_t p : patterns) {
    PhasePattern top;
    top.signs.resize(cc.K);
    for (std::size_t j = 0; j < cc.K; ++j) top.signs[j] = ((p >> j) & 1) ? -1 : +1;
    TransversalLayer layer;
    try {
      layer = lift_sign_pattern(cc, top).to_layer();
    } catch (const std::exception& e) {
      report.fail("sign pattern " + top.to_pm_string() + ": lifting failed (" + e.what() + ")");
      ++report.sign_patterns_checked;
      continue;
    }
    bool ok = true;
    for (std::size_t j = 0; j < cc.K && ok; ++j) {
      PauliOperator xj = PauliOperator::x_type(cc.logical_pairs[j].x);
      PauliOperator zj = PauliOperator::z_type(cc.logical_pairs[j].z);
      PauliOperator expected = pauli_multiply(xj, zj);
      expected.phase = (expected.phase + (top.signs[j] == +1 ? 1 : 3)) % 4;
      if (!(conjugate_by_layer(xj, layer) == expected)) ok = false;
      if (!(conjugate_by_layer(zj, layer) == zj)) ok = false;
    }
    for (std::size_t s = 0; s < cc.stabilizers.size() && ok; ++s) {
      PauliOperator gx = PauliOperator::x_type(cc.stabilizers[s]);
      PauliOperator expected =
          pauli_multiply(gx, PauliOperator::z_type(cc.stabilizers[s]));
      if (!(conjugate_by_layer(gx, layer) == expected)) ok = false;
    }
    if (!ok) {
      report.fail("sign pattern " + top.to_pm_string() + " is not realized by its lifted layer");
    }
    ++report.sign_patterns_checked;
  }
  return report;
}

LiftedLayer push_down(const ConcatenatedCode& cc, const LiftedLayer& layer) {
  std::size_t l = layer.level;
  if (l < 1 || l > cc.depth()) throw DimensionError("push_down: level out of range");
  if (layer.gates.size() != cc.width(l)) {
    throw DimensionError("push_down: gate count != level width");
  }
  const SelfDualCssCode& code = cc.levels[l - 1];
  LiftedLayer out;
  out.level = l - 1;
  out.gates.assign(cc.width(l - 1), Gate::I);
  for (std::size_t idx = 0; idx < cc.width(l); ++idx) {
    std::vector<std::size_t> coords = index_to_coords(cc, l, idx);
    if (coords[l - 1] != 0) continue;
    std::vector<Gate> block(code.k());
    for (std::size_t j = 0; j < code.k(); ++j) {
      coords[l - 1] = j;
      block[j] = layer.gates[coords_to_index(cc, l, coords)];
    }
    bool all_i = std::all_of(block.begin(), block.end(), [](Gate g) { return g == Gate::I; });
    bool all_h = std::all_of(block.begin(), block.end(), [](Gate g) { return g == Gate::H; });
    bool all_s = std::all_of(block.begin(), block.end(),
                             [](Gate g) { return g == Gate::S || g == Gate::Sdg; });
    if (all_i) continue;
    if (all_h) {
      for (std::size_t b = 0; b < code.n(); ++b) {
        coords[l - 1] = b;
        out.gates[coords_to_index(cc, l - 1, coords)] = Gate::H;
      }
    } else if (all_s) {
      PhasePattern target;
      target.signs.resize(code.k());
      for (std::size_t j = 0; j < code.k(); ++j) {
        target.signs[j] = (block[j] == Gate::S) ? +1 : -1;
      }
      PhasePattern phys = synthesize_phase_layer(code, cc.bases[l - 1], target);
      for (std::size_t b = 0; b < code.n(); ++b) {
        coords[l - 1] = b;
        out.gates[coords_to_index(cc, l - 1, coords)] =
            (phys.signs[b] == +1) ? Gate::S : Gate::Sdg;
      }
    } else {
      throw UnsupportedError("push_down: a level-" + std::to_string(l) +
                             " block mixes gate kinds (only full-block all-H or all-S/S† "
                             "shapes re-express one level down)");
    }
  }
  return out;
}

std::optional<Gate> reduce_single_qubit_word(const std::vector<Gate>& word) {
  PauliOperator px = PauliOperator::single(1, 0, Gate::X);
  PauliOperator pz = PauliOperator::single(1, 0, Gate::Z);
  PauliOperator ix = px, iz = pz;
  for (Gate g : word) {
    TransversalLayer step{{g}};
    ix = conjugate_by_layer(ix, step);
    iz = conjugate_by_layer(iz, step);
  }
  for (Gate g : {Gate::I, Gate::X, Gate::Y, Gate::Z, Gate::H, Gate::S, Gate::Sdg}) {
    TransversalLayer step{{g}};
    if (conjugate_by_layer(px, step) == ix && conjugate_by_layer(pz, step) == iz) {
      return g;
    }
  }
  return std::nullopt;
}

LiftedLayer merge_product(const ConcatenatedCode& cc, const std::vector<LiftedLayer>& gates,
                          MergeReport* report) {
  if (gates.empty()) throw ValidationError("merge_product: no factors");
  std::size_t m = gates[0].level;
  for (const auto& g : gates) m = std::min(m, g.level);

  std::vector<LiftedLayer> factors;
  factors.reserve(gates.size());
  for (const auto& g : gates) {
    LiftedLayer f = g;
    while (f.level > m) f = push_down(cc, f);
    factors.push_back(std::move(f));
  }

  LiftedLayer out;
  out.level = m;
  out.gates.resize(cc.width(m));
  for (std::size_t q = 0; q < cc.width(m); ++q) {
    std::vector<Gate> word;
    for (const auto& f : factors) {
      if (f.gates[q] != Gate::I) word.push_back(f.gates[q]);
    }
    std::optional<Gate> reduced = reduce_single_qubit_word(word);
    if (!reduced) {
      throw UnsupportedError("merge_product: the gate word on level-" + std::to_string(m) +
                             " qubit " + std::to_string(q + 1) +
                             " does not reduce to a single gate");
    }
    out.gates[q] = *reduced;
  }

  while (out.level > 0) {
    try {
      LiftedLayer lower = push_down(cc, out);
      if (report) {
        report->notes.push_back("re-expressed at level " + std::to_string(lower.level));
      }
      out = std::move(lower);
    } catch (const UnsupportedError&) {
      break;
    }
  }
  if (report) report->achieved_level = out.level;
  return out;
}

}  // namespace mlv
